#include "hadlab/core.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include <Eigen/Eigenvalues>

#include "hadlab/numtheory.hpp"

namespace hadlab {

Tolerances& default_tol() {
    static Tolerances t;
    return t;
}

double unimod_defect(const CMat& M) {
    double u = 0;
    for (Eigen::Index i = 0; i < M.rows(); ++i)
        for (Eigen::Index j = 0; j < M.cols(); ++j) u = std::max(u, std::abs(std::abs(M(i, j)) - 1.0));
    return u;
}

VerifyReport is_hadamard(const CMat& M, double tol) {
    if (M.rows() != M.cols()) throw DomainError("is_hadamard: matrix is not square");
    const auto n = M.rows();
    const double to = tol < 0 ? default_tol().ortho : tol;
    const double tu = tol < 0 ? default_tol().unimod : tol;
    VerifyReport r;
    CMat G = M * M.adjoint();
    G.diagonal().array() -= static_cast<double>(n);
    r.max_row_defect = n ? G.cwiseAbs().maxCoeff() : 0.0;
    r.max_unimod_defect = unimod_defect(M);
    r.pass = r.max_row_defect <= to * n && r.max_unimod_defect <= tu;
    return r;
}

CMat fourier(int n) {
    if (n < 1) throw DomainError("fourier: order must be positive");
    CMat F(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) F(i, j) = root_of_unity((i * j) % n, n);
    return F;
}

Dephased dephase_at(const CMat& M, int r, int c) {
    const auto n = M.rows();
    Dephased d;
    d.col = CVec(n);
    d.row = CVec(n);
    for (Eigen::Index j = 0; j < n; ++j) {
        if (std::abs(M(r, j)) == 0.0) throw DomainError("dephase: zero entry in pivot row");
        d.col(j) = 1.0 / M(r, j);
    }
    for (Eigen::Index i = 0; i < n; ++i) {
        cplx v = M(i, c) * d.col(c);
        if (std::abs(v) == 0.0) throw DomainError("dephase: zero entry in pivot column");
        d.row(i) = 1.0 / v;
    }
    d.H = d.row.asDiagonal() * M * d.col.asDiagonal();
    for (Eigen::Index j = 0; j < n; ++j) d.H(r, j) = 1.0;
    for (Eigen::Index i = 0; i < n; ++i) d.H(i, c) = 1.0;
    return d;
}

Dephased dephase(const CMat& M) { return dephase_at(M, 0, 0); }

CMat kronecker(const CMat& H, const CMat& K) {
    const auto n = H.rows(), m = K.rows();
    CMat R(n * m, n * m);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) R.block(i * m, j * m, m, m) = H(i, j) * K;
    return R;
}

CMat generalized_tensor(const std::vector<CMat>& Ms, const std::vector<CMat>& Ns) {
    if (Ms.empty() || Ns.empty()) throw DomainError("generalized_tensor: empty input");
    const auto k = Ms[0].rows();
    const auto v = static_cast<Eigen::Index>(Ms.size());
    if (static_cast<Eigen::Index>(Ns.size()) != k) throw DomainError("generalized_tensor: need k matrices N_j");
    for (const auto& M : Ms)
        if (M.rows() != k || M.cols() != k) throw DomainError("generalized_tensor: M order mismatch");
    for (const auto& N : Ns)
        if (N.rows() != v || N.cols() != v) throw DomainError("generalized_tensor: N order mismatch");
    CMat R(v * k, v * k);
    for (Eigen::Index i = 0; i < k; ++i)
        for (Eigen::Index j = 0; j < k; ++j) {
            CVec d(v);
            for (Eigen::Index l = 0; l < v; ++l) d(l) = Ms[l](i, j);
            R.block(i * v, j * v, v, v) = d.asDiagonal() * Ns[j];
        }
    return R;
}

CMat dita(const CMat& M, const std::vector<CMat>& Ns) {
    if (Ns.empty()) throw DomainError("dita: empty input");
    std::vector<CMat> Ms(Ns[0].rows(), M);
    return generalized_tensor(Ms, Ns);
}

namespace {
std::map<std::uint64_t, std::vector<std::uint64_t>> prime_power_parts(const std::vector<int>& s) {
    std::map<std::uint64_t, std::vector<std::uint64_t>> m;
    for (int v : s) {
        if (v < 2) throw DomainError("fourier_product_equivalent: entries must be >= 2");
        for (auto [p, e] : factorize(static_cast<std::uint64_t>(v))) {
            std::uint64_t pe = 1;
            for (int k = 0; k < e; ++k) pe *= p;
            m[p].push_back(pe);
        }
    }
    for (auto& [p, v] : m) std::sort(v.begin(), v.end());
    return m;
}
}  // namespace

bool fourier_product_equivalent(const std::vector<int>& a, const std::vector<int>& b) {
    long long pa = 1, pb = 1;
    for (int v : a) pa *= v;
    for (int v : b) pb *= v;
    if (pa != pb) throw DomainError("fourier_product_equivalent: products differ");
    return prime_power_parts(a) == prime_power_parts(b);
}

std::vector<PairOrbit> parametrize_pair_rows(const CMat& H) {
    std::vector<PairOrbit> out;
    const auto n = H.rows();
    if (n < 4 || n % 2) return out;
    const double tol = 1e-9;
    for (Eigen::Index r1 = 0; r1 < n; ++r1)
        for (Eigen::Index r2 = r1 + 1; r2 < n; ++r2) {
            PairOrbit o{static_cast<int>(r1), static_cast<int>(r2), {}};
            bool ok = true;
            for (Eigen::Index i = 0; i < n && ok; ++i) {
                cplx u = H(r1, i), v = H(r2, i);
                if (std::abs(u * u - v * v) > tol) ok = false;
                else if (std::abs(u + v) < tol) o.cols.push_back(static_cast<int>(i));
            }
            if (ok && !o.cols.empty() && static_cast<Eigen::Index>(o.cols.size()) < n) out.push_back(o);
        }
    return out;
}

CMat eval_pair_orbit(const CMat& H, const PairOrbit& o, cplx alpha) {
    CMat R = H;
    for (int c : o.cols) {
        R(o.r1, c) *= alpha;
        R(o.r2, c) *= alpha;
    }
    return R;
}

std::vector<BlockOrbit> find_block_patterns(const CMat& H, double tol) {
    std::vector<BlockOrbit> out;
    const auto n = H.rows();
    auto eq = [&](cplx x, cplx y) { return std::abs(x - y) < tol; };
    for (Eigen::Index r2 = 1; r2 < n; ++r2)
        for (Eigen::Index r3 = r2 + 1; r3 < n; ++r3)
            for (Eigen::Index c1 = 1; c1 < n; ++c1)
                for (Eigen::Index c2 = c1 + 1; c2 < n; ++c2) {
                    cplx a = H(r2, c1), b = H(r2, c2);
                    if (!eq(H(r3, c2), a) || !eq(H(r3, c1), b)) continue;
                    BlockOrbit o{static_cast<int>(r2), static_cast<int>(r3), static_cast<int>(c1),
                                 static_cast<int>(c2), {}, {}, eq(a, b)};
                    bool ok = true;
                    for (Eigen::Index j = 1; j < n && ok; ++j) {
                        if (j == c1 || j == c2) continue;
                        if (eq(H(r2, j), H(r3, j))) continue;
                        if (eq(H(r2, j), -H(r3, j))) o.ycols.push_back(static_cast<int>(j));
                        else ok = false;
                    }
                    for (Eigen::Index i = 1; i < n && ok; ++i) {
                        if (i == r2 || i == r3) continue;
                        if (eq(H(i, c1), H(i, c2))) continue;
                        if (eq(H(i, c1), -H(i, c2))) o.wrows.push_back(static_cast<int>(i));
                        else ok = false;
                    }
                    if (ok && !o.ycols.empty() && !o.wrows.empty()) out.push_back(o);
                }
    return out;
}

BlockOrbit parametrize_block(const CMat& H, double tol) {
    auto all = find_block_patterns(H, tol);
    if (all.empty()) throw DomainError("parametrize_block: pattern not found");
    return all.front();
}

CMat eval_block_orbit(const CMat& H, const BlockOrbit& o, cplx alpha, cplx beta) {
    CMat R = H;
    for (int j : o.ycols) {
        R(o.r2, j) *= alpha;
        R(o.r3, j) *= alpha;
    }
    cplx wmul = std::conj(alpha) * (o.two_param ? alpha * beta : cplx(1.0));
    for (int i : o.wrows) {
        R(i, o.c1) *= wmul;
        R(i, o.c2) *= wmul;
    }
    return R;
}

namespace {
void check_nicoara_diag(const Eigen::VectorXd& A, Eigen::Index n) {
    if (A.size() != n) throw DomainError("nicoara: diagonal size mismatch");
    if ((A.array() - A(0)).abs().maxCoeff() == 0.0) throw DomainError("nicoara: A is scalar");
}
bool is_projection(const CMat& P, double tol) {
    return (P * P - P).cwiseAbs().maxCoeff() < tol && (P - P.adjoint()).cwiseAbs().maxCoeff() < tol;
}
}  // namespace

CMat nicoara1(const CMat& H, const Eigen::VectorXd& Adiag, double t, double tol) {
    const auto n = H.rows();
    check_nicoara_diag(Adiag, n);
    CMat A = Adiag.cast<cplx>().asDiagonal();
    CMat B = H.adjoint() * A * H / static_cast<double>(n);
    if ((A * B - B * A).cwiseAbs().maxCoeff() > tol) throw DomainError("nicoara: A and B do not commute");
    if ((B - B.adjoint()).cwiseAbs().maxCoeff() > tol) throw DomainError("nicoara: B not self-adjoint");
    // AB is self-adjoint when A, B commute; exp(i t AB) through its eigen-decomposition
    CMat AB = A * B;
    AB = (AB + AB.adjoint()) / 2.0;
    Eigen::SelfAdjointEigenSolver<CMat> es(AB);
    CVec ph(n);
    for (Eigen::Index k = 0; k < n; ++k) ph(k) = std::polar(1.0, t * es.eigenvalues()(k));
    CMat U = es.eigenvectors() * ph.asDiagonal() * es.eigenvectors().adjoint();
    return H * U;
}

CMat nicoara2(const CMat& H, const Eigen::VectorXd& A1d, const Eigen::VectorXd& A2d, cplx a, double tol) {
    const auto n = H.rows();
    check_nicoara_diag(A1d, n);
    check_nicoara_diag(A2d, n);
    CMat A1 = A1d.cast<cplx>().asDiagonal(), A2 = A2d.cast<cplx>().asDiagonal();
    CMat B1 = H.adjoint() * A1 * H / static_cast<double>(n);
    CMat B2 = H.adjoint() * A2 * H / static_cast<double>(n);
    for (const CMat* P : {&A1, &A2, &B1, &B2})
        if (!is_projection(*P, tol)) throw DomainError("nicoara: not an orthogonal projection");
    if (((A1 * B1 - B1 * A1) - (A2 * B2 - B2 * A2)).cwiseAbs().maxCoeff() > tol)
        throw DomainError("nicoara: commutators differ");
    CMat U = CMat::Identity(n, n) + (a - 1.0) * A1 * B1 + (std::conj(a) - 1.0) * A2 * B2;
    return H * U.adjoint();
}

CMat blog_to_cmat(const BLog& L) {
    CMat M(L.n, L.n);
    for (int i = 0; i < L.n; ++i)
        for (int j = 0; j < L.n; ++j) M(i, j) = root_of_unity(static_cast<int>(mod(L.L(i, j), L.q)), L.q);
    return M;
}

BLog cmat_to_blog(const CMat& M, int q, double tol, bool dephase_first) {
    if (q < 1) throw DomainError("cmat_to_blog: q must be positive");
    CMat X = dephase_first ? dephase(M).H : M;
    BLog L{static_cast<int>(X.rows()), q, IMat(X.rows(), X.cols())};
    for (Eigen::Index i = 0; i < X.rows(); ++i)
        for (Eigen::Index j = 0; j < X.cols(); ++j) {
            double ang = std::arg(X(i, j)) * q / (2 * kPi);
            int k = static_cast<int>(std::lround(ang));
            if (std::abs(X(i, j) - root_of_unity(k, q)) > tol)
                throw DomainError("cmat_to_blog: entry is not a q-th root of unity");
            L.L(i, j) = static_cast<int>(mod(k, q));
        }
    return L;
}

CMat circulant(const CVec& x) {
    const auto n = x.size();
    CMat C(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) C(i, j) = x((j - i + n) % n);
    return C;
}

CMat border_with_ones(const CMat& core) {
    const auto n = core.rows();
    CMat H = CMat::Ones(n + 1, n + 1);
    H.bottomRightCorner(n, n) = core;
    return H;
}

double max_abs(const CMat& M) { return M.size() ? M.cwiseAbs().maxCoeff() : 0.0; }

bool approx_equal(const CMat& A, const CMat& B, double tol) {
    return A.rows() == B.rows() && A.cols() == B.cols() && max_abs(A - B) <= tol;
}

bool rows_permuted_equal(const CMat& A, const CMat& B, double tol) {
    if (A.rows() != B.rows() || A.cols() != B.cols()) return false;
    std::vector<bool> used(B.rows(), false);
    for (Eigen::Index i = 0; i < A.rows(); ++i) {
        bool found = false;
        for (Eigen::Index k = 0; k < B.rows() && !found; ++k)
            if (!used[k] && (A.row(i) - B.row(k)).cwiseAbs().maxCoeff() <= tol) used[k] = found = true;
        if (!found) return false;
    }
    return true;
}

}  // namespace hadlab
