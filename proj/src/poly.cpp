#include "hadlab/poly.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

namespace hadlab {

using lcplx = std::complex<long double>;

Poly to_complex(const RPoly& p) { return Poly(p.begin(), p.end()); }

Poly trim(Poly p, double tol) {
    while (p.size() > 1 && std::abs(p.back()) <= tol) p.pop_back();
    return p;
}

int degree(const Poly& p) {
    int d = static_cast<int>(p.size()) - 1;
    while (d > 0 && p[d] == 0.0) --d;
    return d;
}

cplx peval(const Poly& p, cplx x) {
    cplx r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

Poly pderiv(const Poly& p) {
    if (p.size() <= 1) return {0.0};
    Poly d(p.size() - 1);
    for (std::size_t k = 1; k < p.size(); ++k) d[k - 1] = static_cast<double>(k) * p[k];
    return d;
}

Poly padd(const Poly& a, const Poly& b) {
    Poly r(std::max(a.size(), b.size()), 0.0);
    for (std::size_t k = 0; k < a.size(); ++k) r[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) r[k] += b[k];
    return r;
}

Poly psub(const Poly& a, const Poly& b) { return padd(a, pscale(b, -1.0)); }

Poly pmul(const Poly& a, const Poly& b) {
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return r;
}

Poly pscale(const Poly& a, cplx s) {
    Poly r(a);
    for (auto& c : r) c *= s;
    return r;
}

Poly pshift(const Poly& a, int k) {
    Poly r(k, 0.0);
    r.insert(r.end(), a.begin(), a.end());
    return r;
}

Poly recip_conj(const Poly& p, int d) {
    if (d < 0) d = static_cast<int>(p.size()) - 1;
    Poly r(d + 1, 0.0);
    for (int k = 0; k <= d && k < static_cast<int>(p.size()); ++k) r[d - k] = std::conj(p[k]);
    return r;
}

namespace {
lcplx leval(const Poly& p, lcplx x, lcplx* dp) {
    lcplx v = 0, d = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) {
        d = d * x + v;
        v = v * x + lcplx(it->real(), it->imag());
    }
    if (dp) *dp = d;
    return v;
}

cplx polish(const Poly& p, cplx z0) {
    lcplx z(z0.real(), z0.imag());
    lcplx d;
    long double best = std::abs(leval(p, z, &d));
    for (int it = 0; it < 12 && best > 0; ++it) {
        lcplx v = leval(p, z, &d);
        if (std::abs(d) == 0) break;
        lcplx zn = z - v / d;
        long double r = std::abs(leval(p, zn, nullptr));
        if (!(r < best)) break;
        z = zn;
        best = r;
    }
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}
}  // namespace

std::vector<cplx> proots(const Poly& p0) {
    Poly p = trim(p0);
    std::vector<cplx> roots;
    // zero roots
    std::size_t lo = 0;
    while (lo + 1 < p.size() && p[lo] == 0.0) {
        roots.push_back(0.0);
        ++lo;
    }
    Poly q(p.begin() + static_cast<long>(lo), p.end());
    const int d = static_cast<int>(q.size()) - 1;
    if (d <= 0) return roots;
    CMat C = CMat::Zero(d, d);
    for (int i = 1; i < d; ++i) C(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) C(i, d - 1) = -q[i] / q[d];
    Eigen::ComplexEigenSolver<CMat> es(C, false);
    for (int i = 0; i < d; ++i) roots.push_back(polish(q, es.eigenvalues()(i)));
    return roots;
}

std::vector<double> real_roots(const RPoly& p, double imag_tol) {
    std::vector<double> r;
    for (cplx z : proots(to_complex(p)))
        if (std::abs(z.imag()) < imag_tol * (1 + std::abs(z.real()))) {
            // real Newton polish
            long double x = z.real();
            for (int it = 0; it < 8; ++it) {
                long double v = 0, d = 0;
                for (auto c = p.rbegin(); c != p.rend(); ++c) {
                    d = d * x + v;
                    v = v * x + *c;
                }
                if (d == 0) break;
                long double xn = x - v / d;
                if (!std::isfinite(static_cast<double>(xn))) break;
                x = xn;
            }
            r.push_back(static_cast<double>(x));
        }
    std::sort(r.begin(), r.end());
    return r;
}

std::vector<cplx> unit_roots(const Poly& p, double root_tol) {
    if (root_tol < 0) root_tol = default_tol().root;
    std::vector<cplx> out;
    for (cplx z : proots(p)) {
        if (std::abs(std::abs(z) - 1.0) > root_tol) continue;
        // Newton in theta: g(t) = P(e^{it}), g' = i e^{it} P'(e^{it}); take the step's real part.
        long double t = std::arg(z);
        for (int it = 0; it < 8; ++it) {
            lcplx e = std::polar(1.0L, t), d;
            lcplx v = leval(p, e, &d);
            lcplx g = lcplx(0, 1) * e * d;
            if (std::abs(g) == 0) break;
            long double step = (v / g).real();
            if (!std::isfinite(static_cast<double>(step)) || std::abs(step) > 1e-3L) break;
            t -= step;
        }
        out.push_back(std::polar(1.0, static_cast<double>(t)));
    }
    return out;
}

double self_inversive_defect(const Poly& p, cplx* eps) {
    const int d = static_cast<int>(p.size()) - 1;
    cplx s = 0;
    double scale = 0;
    for (int k = 0; k <= d; ++k) {
        s += p[d - k] * p[k];
        scale = std::max(scale, std::abs(p[k]));
    }
    cplx e = std::abs(s) > 0 ? s / std::abs(s) : cplx(1.0);
    if (eps) *eps = e;
    if (scale == 0) return 0;
    double m = 0;
    for (int k = 0; k <= d; ++k) m = std::max(m, std::abs(p[d - k] - e * std::conj(p[k])));
    return m / scale;
}

bool is_self_inversive(const Poly& p, double tol) { return self_inversive_defect(p, nullptr) <= tol; }

bool cohn_test(const Poly& p0, double tol) {
    Poly p = trim(p0);
    if (!is_self_inversive(p, std::max(tol, 1e-9))) throw DomainError("cohn_test: polynomial is not self-inversive");
    if (p.size() <= 2) return true;
    for (cplx r : proots(pderiv(p)))
        if (std::abs(r) > 1.0 + tol) return false;
    return true;
}

RPoly palindromic_transform(const RPoly& f, double tol) {
    const int d = static_cast<int>(f.size()) - 1;
    if (d % 2) throw DomainError("palindromic_transform: odd degree");
    double scale = 0;
    for (double c : f) scale = std::max(scale, std::abs(c));
    for (int k = 0; k <= d; ++k)
        if (std::abs(f[k] - f[d - k]) > tol * std::max(1.0, scale))
            throw DomainError("palindromic_transform: not palindromic");
    const int m = d / 2;
    // x^j + x^{-j} = D_j(u), D_0 = 2, D_1 = u, D_j = u D_{j-1} - D_{j-2}
    std::vector<RPoly> D(m + 1);
    D[0] = {2.0};
    if (m >= 1) D[1] = {0.0, 1.0};
    for (int j = 2; j <= m; ++j) {
        RPoly t(j + 1, 0.0);
        for (std::size_t k = 0; k < D[j - 1].size(); ++k) t[k + 1] += D[j - 1][k];
        for (std::size_t k = 0; k < D[j - 2].size(); ++k) t[k] -= D[j - 2][k];
        D[j] = t;
    }
    RPoly T(m + 1, 0.0);
    T[0] = f[m];
    for (int j = 1; j <= m; ++j)
        for (std::size_t k = 0; k < D[j].size(); ++k) T[k] += f[m + j] * D[j][k];
    return T;
}

}  // namespace hadlab
