#include "hadlab/dilation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hadlab/catalog.hpp"
#include "hadlab/invariants.hpp"

namespace hadlab {

namespace {

bool unimodular(cplx z, double tol) { return std::abs(std::abs(z) - 1.0) <= tol; }

Poly resized(Poly p, std::size_t n) {
    p.resize(n, 0.0);
    return p;
}

double row_inner_defect(const QuadPoint& q, const RowSextuple& s) {
    using std::conj;
    cplx r = 1.0 + q.a * conj(q.c) + q.b * conj(q.d) + s.e * conj(s.f) + s.s1 * conj(s.s3) + s.s2 * conj(s.s4);
    double z1 = std::abs(1.0 + q.a + q.b + s.e + s.s1 + s.s2);
    double z2 = std::abs(1.0 + q.c + q.d + s.f + s.s3 + s.s4);
    return std::max({std::abs(r), z1, z2});
}

bool sextuple_ok(const QuadPoint& q, const RowSextuple& s, double tol) {
    for (cplx z : {s.e, s.s1, s.s2, s.f, s.s3, s.s4})
        if (!unimodular(z, tol)) return false;
    if (std::abs(s.s1 + s.s2) < tol || std::abs(s.s3 + s.s4) < tol) return false;
    return row_inner_defect(q, s) < 10 * tol;
}

// Given (e, f), fill s1..s4 through the decomposition formula, trying both sign assignments for s3, s4.
void complete_by_decomposition(const QuadPoint& q, cplx e, cplx f, double tol, std::vector<RowSextuple>& out) {
    cplx S = 1.0 + q.a + q.b + e, D = 1.0 + q.c + q.d + f;
    if (std::abs(S) > 2 + tol || std::abs(D) > 2 + tol) return;
    auto [s1, s2] = decompose_pair(S, tol);
    auto [t1, t2] = decompose_pair(D, tol);
    for (const RowSextuple& s : {RowSextuple{e, s1, s2, f, t1, t2}, RowSextuple{e, s1, s2, f, t2, t1}})
        if (sextuple_ok(q, s, tol)) out.push_back(s);
}

void add_unique(std::vector<RowSextuple>& v, const RowSextuple& s, double tol) {
    auto near = [&](const RowSextuple& t) {
        return std::abs(t.e - s.e) + std::abs(t.s1 - s.s1) + std::abs(t.s2 - s.s2) + std::abs(t.f - s.f) +
                   std::abs(t.s3 - s.s3) + std::abs(t.s4 - s.s4) <
               tol;
    };
    if (std::none_of(v.begin(), v.end(), near)) v.push_back(s);
}

}  // namespace

CMat quad_matrix(const QuadPoint& q) {
    CMat E(3, 3);
    E << 1, 1, 1, 1, q.a, q.b, 1, q.c, q.d;
    return E;
}

cplx haagerup_poly(cplx a, cplx b, cplx c, cplx d, cplx e, cplx f) {
    using std::conj;
    return (1.0 + a + b + e) * (1.0 + conj(c) + conj(d) + conj(f)) * (1.0 + c * conj(a) + d * conj(b) + f * conj(e));
}

std::pair<cplx, cplx> decompose_pair(cplx sigma, double tol) {
    const double m = std::abs(sigma);
    if (m > 2 + tol) throw DomainError("decompose_pair: |sigma| > 2");
    if (m < 1e-14) return {1.0, -1.0};
    cplx t = I1 * (sigma / m) * std::sqrt(std::max(0.0, 1.0 - m * m / 4));
    cplx s1 = -sigma / 2.0 + t, s2 = -sigma / 2.0 - t;
    return {s1 / std::abs(s1), s2 / std::abs(s2)};
}

double c11_residual(cplx a, cplx b, cplx c, cplx d, cplx e, cplx f) {
    using std::conj;
    cplx S = 1.0 + a + b + e, D = 1.0 + c + d + f, P = 1.0 + c * conj(a) + d * conj(b) + f * conj(e);
    return std::abs(haagerup_poly(a, b, c, d, e, f) - (4 - std::norm(S) - std::norm(D) - std::norm(P)));
}

bool triple_ortho_feasible(cplx a, cplx b, cplx c, cplx d, cplx e, cplx f, double tol) {
    return c11_residual(a, b, c, d, e, f) <= tol && std::abs(1.0 + a + b + e) <= 2 + tol;
}

Poly LinCoeffs::num() const { return resized(psub(pmul(F3, G1), pmul(F1, G3)), 4); }
Poly LinCoeffs::den() const { return resized(psub(pmul(F3, G2), pmul(F2, G3)), 4); }

LinCoeffs lin_coeffs(const QuadPoint& q) {
    const cplx a = q.a, b = q.b, c = q.c, d = q.d;
    const cplx a2 = a * a, b2 = b * b, c2 = c * c, d2 = d * d;
    LinCoeffs L;
    L.F1 = {0.0, c * d * (a2 * b + a * b2 + b * c + b2 * c + a * d + a2 * d),
            -c * d * (a + b + a * c + a * b * c + b * d + a * b * d)};
    L.F2 = {-a * b * (b * c + b * c2 + a * d + c2 * d + a * d2 + c * d2),
            a2 * b * c - b2 * c + b * c2 - a * b2 * c2 - a2 * d + a * b2 * d - a * c2 * d + b2 * c2 * d + a * d2 -
                a2 * b * d2 + a2 * c * d2 - b * c * d2,
            a * b * c + b * c2 + a * b * d + b * c2 * d + a * d2 + a * c * d2};
    const cplx abcd = a * b * c * d;
    L.F3 = pscale(recip_conj(L.F1, 2), -abcd * abcd);
    L.G1 = {0.0, c * d * (2.0 * a * b + a2 * b + a * b2 + b * c + 2.0 * a * b * c + b2 * c + a * d + a2 * d + 2.0 * a * b * d),
            2.0 * c * d * (a * b + b * c + a * d)};
    L.G2 = {2.0 * abcd * (1.0 + a + b),
            2.0 * a * b * c + a2 * b * c + 2.0 * a * b2 * c + b * c2 + 2.0 * a * b * c2 + 2.0 * b2 * c2 + 2.0 * a * b * d +
                2.0 * a2 * b * d + a * b2 * d + 2.0 * a * c * d + 2.0 * a2 * c * d + 2.0 * b * c * d + 12.0 * abcd +
                2.0 * a2 * b * c * d + 2.0 * b2 * c * d + 2.0 * a * b2 * c * d + 2.0 * b * c2 * d + 2.0 * a * b * c2 * d +
                b2 * c2 * d + a * d2 + 2.0 * a2 * d2 + 2.0 * a * b * d2 + 2.0 * a * c * d2 + a2 * c * d2 + 2.0 * abcd * d,
            a * b * c + b * c2 + a * b * d + 2.0 * a * c * d + 2.0 * b * c * d + 2.0 * abcd + b * c2 * d + a * d2 + a * c * d2};
    L.G3 = {a * b * (c + a * c + 2.0 * b * c + d + 2.0 * a * d + b * d + 2.0 * c * d + a * c * d + b * c * d),
            2.0 * a * b * (c + d + c * d), 0.0};
    double scale = 0;
    for (cplx z : L.F3) scale = std::max(scale, std::abs(z));
    if (scale < 1e-12) throw DomainError("lin_coeffs: F3 vanishes identically (K6^(3) case)");
    return L;
}

cplx e0_value(const QuadPoint& q) {
    const cplx a = q.a, b = q.b, c = q.c, d = q.d;
    return (a * a * b + a * a * d + a * b * b + a * d + b * b * c + b * c) / (a * b * c + a * b * d + a * c + a + b * d + b);
}

std::optional<cplx> companion_value(const QuadPoint& q, cplx e, double tol) {
    auto L = lin_coeffs(q);
    cplx n = peval(L.num(), e), dn = peval(L.den(), e);
    if (std::abs(dn) < tol) {
        if (std::abs(n) < tol) return std::nullopt;
        throw DomainError("companion_value: denominator vanishes");
    }
    return -n / dn;
}

std::vector<cplx> companion_candidates(const QuadPoint& q, cplx e) {
    auto L = lin_coeffs(q);
    Poly quad = {peval(L.F1, e), peval(L.F2, e), peval(L.F3, e)};
    return proots(quad);
}

Poly fundamental_poly(const QuadPoint& q) {
    auto L = lin_coeffs(q);
    Poly N = L.num(), D = L.den();
    // e^3 (|N|^2 - |D|^2) on the unit circle
    Poly P = psub(pmul(N, recip_conj(N, 3)), pmul(D, recip_conj(D, 3)));
    P.resize(7, 0.0);
    cplx pref = std::pow(q.a * q.b, 4) * std::pow(q.c * q.d, 3);
    return pscale(P, pref);
}

bool poly_vanishes(const Poly& p, double rel) {
    double m = 0;
    for (cplx z : p) m = std::max(m, std::abs(z));
    // coefficients are sums of products of up to ~16 unimodular terms with integer weights
    return m < rel * 1e4;
}

CMat complete_block_D(const CMat& E, const CMat& B, const CMat& C, double tol) {
    Eigen::PartialPivLU<CMat> lu(B);
    if (std::abs(B.determinant()) < tol) throw DomainError("complete_block_D: B is singular");
    CMat Binv = lu.inverse();
    return -C * E.adjoint() * Binv.adjoint();
}

EmbedReport embed_precheck(const CMat& E, double tol) {
    EmbedReport r;
    Eigen::SelfAdjointEigenSolver<CMat> es(E.adjoint() * E, Eigen::EigenvaluesOnly);
    r.lambda_max = es.eigenvalues().maxCoeff();
    r.block_sum = std::abs(E.sum());
    const double n = 6;
    r.eig_ok = r.lambda_max <= n + tol;
    r.lindsey_ok = r.block_sum <= std::sqrt(double(E.rows()) * double(E.cols()) * n) + tol;
    r.pass = r.eig_ok && r.lindsey_ok;
    return r;
}

double canonical_product(const QuadPoint& q) {
    auto ell = [](cplx x, cplx y) { return x + y + x * x + y * y + x * y * y + x * x * y; };
    const cplx b = q.b, c = q.c, d = q.d;
    return std::abs((b - 1.0) * (c - 1.0) * (b - d * d) * (c - d * d) * (b - c) * (b * c - d) * ell(b, d) * ell(c, d));
}

bool canonical_precheck(const QuadPoint& q, double tol) { return canonical_product(q) >= tol; }

DilationSide dilation_side(const QuadPoint& q, const DilationOptions& opt) {
    DilationSide side;
    auto L = lin_coeffs(q);
    side.P = fundamental_poly(q);
    if (poly_vanishes(side.P)) return side;
    const Poly N = L.num(), Dn = L.den();
    const cplx e0 = e0_value(q);
    side.e0_unimodular = std::isfinite(std::abs(e0)) && unimodular(e0, opt.root_tol);

    std::vector<cplx> roots, generic;
    for (cplx e : unit_roots(side.P, opt.root_tol)) {
        if (std::any_of(roots.begin(), roots.end(), [&](cplx r) { return std::abs(r - e) < 1e-9; })) continue;
        roots.push_back(e);
    }
    side.unit_roots = static_cast<int>(roots.size());
    double nscale = 0, dscale = 0;
    for (cplx z : N) nscale = std::max(nscale, std::abs(z));
    for (cplx z : Dn) dscale = std::max(dscale, std::abs(z));

    for (cplx e : roots) {
        if (side.e0_unimodular && std::abs(e - e0) < opt.root_tol) continue;
        bool e1 = std::abs(peval(N, e)) < 1e-8 * nscale && std::abs(peval(Dn, e)) < 1e-8 * dscale;
        if (e1) {
            ++side.e1_roots;
            for (cplx f : companion_candidates(q, e))
                if (unimodular(f, opt.tol)) {
                    std::vector<RowSextuple> tmp;
                    complete_by_decomposition(q, e, f / std::abs(f), opt.tol, tmp);
                    for (auto& s : tmp) add_unique(side.sols, s, 1e-8);
                }
            continue;
        }
        generic.push_back(e);
    }

    auto F = [&](cplx e) { return -peval(N, e) / peval(Dn, e); };
    if (!side.e0_unimodular) {
        // roles of (e,f), (s1,s3), (s2,s4) are symmetric: pick root triples with e + s1 + s2 = -1-a-b
        const cplx target = -1.0 - q.a - q.b;
        const std::size_t m = generic.size();
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                for (std::size_t k = j + 1; k < m; ++k) {
                    if (std::abs(generic[i] + generic[j] + generic[k] - target) > 1e-6) continue;
                    RowSextuple s{generic[i], generic[j], generic[k], F(generic[i]), F(generic[j]), F(generic[k])};
                    if (sextuple_ok(q, s, opt.tol)) add_unique(side.sols, s, 1e-8);
                }
    } else {
        for (cplx e : generic) {
            if (std::abs(1.0 + q.a + q.b + e) > 2 + opt.tol) continue;
            cplx f = F(e);
            if (!unimodular(f, opt.tol)) continue;
            std::vector<RowSextuple> tmp;
            complete_by_decomposition(q, e, f / std::abs(f), opt.tol, tmp);
            for (auto& s : tmp) add_unique(side.sols, s, 1e-8);
        }
    }
    return side;
}

bool k6_membership(const CMat& H, double tol) {
    const auto n = H.rows();
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c) {
            CMat M = dephase_at(H, static_cast<int>(r), static_cast<int>(c)).H;
            for (Eigen::Index i = 0; i < n; ++i)
                for (Eigen::Index j = 0; j < n; ++j)
                    if (i != r && j != c && std::abs(M(i, j) + 1.0) < tol) return true;
        }
    return false;
}

DilationResult dilate(const QuadPoint& q, const DilationOptions& opt) {
    DilationResult res;
    const CMat E = quad_matrix(q);
    if (!canonical_precheck(q)) {
        res.status = DilationResult::Status::Rejected;
        res.reason = "canonical precheck failed";
        return res;
    }
    auto emb = embed_precheck(E);
    if (!emb.pass) {
        res.status = DilationResult::Status::Rejected;
        res.reason = emb.eig_ok ? "block sum exceeds sqrt(54)" : "eigenvalue of E*E exceeds 6";
        return res;
    }
    try {
        res.rows = dilation_side(q, opt);
        res.cols = dilation_side({q.a, q.c, q.b, q.d}, opt);
    } catch (const DomainError& e) {
        res.status = DilationResult::Status::Degenerate;
        res.reason = e.what();
        return res;
    }
    if (poly_vanishes(res.rows.P) || poly_vanishes(res.cols.P)) {
        res.status = DilationResult::Status::Degenerate;
        res.reason = "degenerate quadruple: fundamental polynomial vanishes";
        return res;
    }
    auto side_log = [&](const char* tag, const DilationSide& s) {
        res.log.push_back(std::string(tag) + ": unit roots " + std::to_string(s.unit_roots) + ", e1 roots " +
                          std::to_string(s.e1_roots) + ", e0 " + (s.e0_unimodular ? "unimodular" : "off circle") +
                          ", sextuples " + std::to_string(s.sols.size()));
    };
    side_log("rows", res.rows);
    side_log("cols", res.cols);

    static const CMat S6 = construct({"S6", {}});
    for (const auto& sb : res.rows.sols)
        for (const auto& sc : res.cols.sols) {
            CMat B(3, 3), C(3, 3);
            B << 1, 1, 1, sb.e, sb.s1, sb.s2, sb.f, sb.s3, sb.s4;
            C << 1, sc.e, sc.f, 1, sc.s1, sc.s3, 1, sc.s2, sc.s4;
            CMat D;
            try {
                D = complete_block_D(E, B, C);
            } catch (const DomainError&) {
                continue;
            }
            if (unimod_defect(D) > opt.tol) continue;
            CMat H(6, 6);
            H << E, B, C, D;
            if (!hadamard_ok(H, 1e-8)) continue;
            if (std::any_of(res.matrices.begin(), res.matrices.end(), [&](const CMat& K) { return approx_equal(K, H, 1e-8); }))
                continue;
            if (opt.filter_scope && (k6_membership(H) || are_equivalent(H, S6).verdict == Verdict::Equivalent)) {
                ++res.dropped_scope;
                continue;
            }
            res.matrices.push_back(H);
        }
    res.log.push_back("matrices " + std::to_string(res.matrices.size()) + ", dropped as K6/S6 " +
                      std::to_string(res.dropped_scope));
    return res;
}

std::optional<QuadPoint> find_canonical_quad(const CMat& H, CMat* placed, double tol) {
    const int n = static_cast<int>(H.rows());
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            CMat M = dephase_at(H, r, c).H;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    for (int k = 0; k < n; ++k)
                        for (int l = 0; l < n; ++l) {
                            if (i == r || j == r || i == j || k == c || l == c || k == l) continue;
                            QuadPoint q{M(i, k), M(i, l), M(j, k), M(j, l)};
                            if (!canonical_precheck(q, tol) || !embed_precheck(quad_matrix(q)).pass) continue;
                            if (placed) {
                                std::vector<int> rows{r, i, j}, cols{c, k, l};
                                for (int t = 0; t < n; ++t) {
                                    if (std::find(rows.begin(), rows.end(), t) == rows.end()) rows.push_back(t);
                                    if (std::find(cols.begin(), cols.end(), t) == cols.end()) cols.push_back(t);
                                }
                                CMat P(n, n);
                                for (int x = 0; x < n; ++x)
                                    for (int y = 0; y < n; ++y) P(x, y) = M(rows[x], cols[y]);
                                *placed = P;
                            }
                            return q;
                        }
        }
    return std::nullopt;
}

}  // namespace hadlab
