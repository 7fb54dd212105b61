#include "hadlab/mubframes.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "hadlab/numtheory.hpp"
#include "hadlab/poly.hpp"

namespace hadlab {

namespace {

CMat fourier_unitary(int m) { return fourier(m) / std::sqrt(static_cast<double>(m)); }

cplx unit(cplx z) {
    double r = std::abs(z);
    return r > 0 ? z / r : cplx(1.0);
}

// Roots of x^3 - alpha x^2 + conj(alpha) x - 1, projected onto the unit circle.
std::vector<cplx> cubic_roots(cplx alpha) {
    auto r = proots({-1.0, std::conj(alpha), -alpha, 1.0});
    for (auto& z : r) z = unit(z);
    return r;
}

double circulant_defect(const CMat& C) {
    const int m = static_cast<int>(C.rows());
    double d = 0;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) d = std::max(d, std::abs(C(i, j) - C(0, ((j - i) % m + m) % m)));
    return d;
}

CMat bicirc(cplx a, cplx b, cplx c, cplx d) {
    CVec ra(3), rb(3);
    ra << 1.0, a, b;
    rb << 1.0, c, d;
    CMat A = circulant(ra), B = circulant(rb), H(6, 6);
    H << A, B, B.adjoint(), -A.adjoint();
    return H;
}

}  // namespace

// ---- MUBs ----

CMat MubSet::basis(int i) const {
    if (i == 0) return CMat::Identity(n, n);
    return hads.at(i - 1) / std::sqrt(static_cast<double>(n));
}

bool is_unbiased(const CMat& B1, const CMat& B2, double tol) {
    if (B1.rows() != B2.rows() || B1.cols() != B2.cols() || B1.rows() != B1.cols())
        throw DomainError("is_unbiased: size mismatch");
    const double n = static_cast<double>(B1.rows());
    CMat G = B1 * B2.adjoint();
    for (Eigen::Index i = 0; i < G.size(); ++i)
        if (std::abs(std::norm(G(i)) - 1.0 / n) > tol) return false;
    return true;
}

double mub_defect(const MubSet& s) {
    const double n = s.n;
    double d = 0;
    std::vector<CMat> B;
    for (int i = 0; i < s.size(); ++i) {
        B.push_back(s.basis(i));
        if (B.back().rows() != s.n || B.back().cols() != s.n) throw DomainError("mub: basis order mismatch");
        d = std::max(d, max_abs(B.back() * B.back().adjoint() - CMat::Identity(s.n, s.n)));
    }
    for (std::size_t i = 0; i < B.size(); ++i)
        for (std::size_t j = i + 1; j < B.size(); ++j) {
            CMat G = B[i] * B[j].adjoint();
            for (Eigen::Index k = 0; k < G.size(); ++k) d = std::max(d, std::abs(std::norm(G(k)) - 1.0 / n));
        }
    return d;
}

bool is_mub(const MubSet& s, double tol) { return s.size() <= s.n + 1 && mub_defect(s) <= tol; }

MubSet mub_tensor(const MubSet& a, const MubSet& b) {
    for (const MubSet* s : {&a, &b})
        for (const auto& H : s->hads)
            if (H.rows() != s->n || H.cols() != s->n) throw DomainError("mub_tensor: basis order mismatch");
    MubSet r;
    r.n = a.n * b.n;
    const int m = std::min(a.size(), b.size());
    for (int i = 0; i + 1 < m; ++i) r.hads.push_back(kronecker(a.hads[i], b.hads[i]));
    return r;
}

MubSet mub_order2() {
    MubSet s;
    s.n = 2;
    CMat V(2, 2);
    V << 1.0, I1, 1.0, -I1;
    s.hads = {fourier(2), V};
    return s;
}

// ---- Zauner factorization ----

std::vector<cplx> zauner_uvxy(const CMat& M) {
    const double eps = 1e-12;
    cplx a = M(0, 0), b = M(0, 1);
    double ra = std::abs(a);
    cplx w = ra > eps ? I1 * (a / ra) * std::sqrt(std::max(0.0, 1.0 - ra * ra)) : cplx(1.0);
    cplx u = unit(a + w), v = unit(a - w);
    cplx y = std::abs(w) > eps ? unit(b / w) : cplx(1.0);
    cplx x = std::abs(w) > eps ? unit(w / M(1, 0)) : unit(y * a / M(1, 1));
    return {u, v, x, y};
}

MubSet ZaunerResult::triplet() const {
    MubSet s;
    s.n = static_cast<int>(Z1.rows());
    s.hads = {Z1, Z2};
    return s;
}

ZaunerResult zauner_factor(const CMat& T, double tol) {
    if (T.rows() != T.cols() || T.rows() % 2 != 0 || T.rows() < 2)
        throw DomainError("zauner_factor: order must be even");
    const int m = static_cast<int>(T.rows()) / 2;
    const double s = std::sqrt(2.0 * m);
    for (int bi = 0; bi < 2; ++bi)
        for (int bj = 0; bj < 2; ++bj)
            if (circulant_defect(T.block(bi * m, bj * m, m, m)) > tol)
                throw DomainError("zauner_factor: blocks are not circulant");
    if (!is_hadamard(T, tol).pass) throw DomainError("zauner_factor: not a Hadamard matrix");

    CMat F = fourier_unitary(m);
    CMat W = CMat::Zero(2 * m, 2 * m);
    W.block(0, 0, m, m) = F;
    W.block(m, m, m, m) = F;
    CMat D = W.adjoint() * T * W / s;

    CMat P = CMat::Zero(2 * m, 2 * m), Qs = CMat::Zero(2 * m, 2 * m);
    CMat F2 = fourier(2) / std::sqrt(2.0);
    for (int k = 0; k < m; ++k) {
        CMat Mk(2, 2);
        Mk << D(k, k), D(k, m + k), D(m + k, k), D(m + k, m + k);
        auto p = zauner_uvxy(Mk);
        // M = diag(1, 1/x) F2 diag(u, v) F2 diag(1, y), split after the first F2.
        CMat Pk = Eigen::Vector2cd(1.0, 1.0 / p[2]).asDiagonal() * F2;
        CMat Qk = Eigen::Vector2cd(p[0], p[1]).asDiagonal() * F2 * Eigen::Vector2cd(1.0, p[3]).asDiagonal();
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                P(i * m + k, j * m + k) = Pk(i, j);
                Qs(i * m + k, j * m + k) = Qk(i, j);
            }
    }
    ZaunerResult r;
    r.Z1 = s * W * P;
    r.Z2 = s * W * Qs.adjoint();
    r.deviation = std::max(unimod_defect(r.Z1), unimod_defect(r.Z2));
    r.residual = max_abs(r.Z1 * r.Z2.adjoint() - s * T);
    r.flat = r.deviation < 1e-6;
    return r;
}

CMat d6_bicirculant(cplx c) {
    if (std::abs(std::abs(c) - 1.0) > 1e-12) throw DomainError("d6_bicirculant: c must be unimodular");
    cplx cb = std::conj(c);
    CVec a(3), b(3), e(3), f(3);
    a << 1.0, I1 * cb, I1 * c;
    b << 1.0, cb, -c;
    e << 1.0, -cb, c;
    f << -1.0, I1 * cb, I1 * c;
    CMat H(6, 6);
    H << circulant(a), circulant(b), circulant(e), circulant(f);
    return H;
}

CMat x6_bicirculant(cplx alpha) {
    auto r = cubic_roots(alpha), q = cubic_roots(-alpha);
    // a = 1/r_i, b = r_k with conj(a) + a conj(b) + b = alpha; likewise (c, d) for -alpha.
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < 3; ++k) {
            if (k == i) continue;
            for (int i2 = 0; i2 < 3; ++i2)
                for (int k2 = 0; k2 < 3; ++k2) {
                    if (k2 == i2) continue;
                    CMat H = bicirc(std::conj(r[i]), r[k], std::conj(q[i2]), q[k2]);
                    if (is_hadamard(H, 1e-8).pass) return H;
                }
        }
    throw DomainError("x6_bicirculant: no bicirculant form for this alpha");
}

// ---- real equiangular lines ----

double line_defect(const LineSet& L) {
    Eigen::MatrixXd G = L.V * L.V.transpose();
    double d = 0;
    for (Eigen::Index i = 0; i < G.rows(); ++i) {
        d = std::max(d, std::abs(std::sqrt(G(i, i)) - 1.0));
        for (Eigen::Index j = i + 1; j < G.cols(); ++j) d = std::max(d, std::abs(std::abs(G(i, j)) - L.c));
    }
    return d;
}

std::vector<Eigen::MatrixXd> real_mubs_r4() {
    Eigen::MatrixXd B2(4, 4), B3(4, 4);
    B2 << 1, 1, 1, 1, 1, 1, -1, -1, 1, -1, 1, -1, 1, -1, -1, 1;
    B3 << 1, -1, -1, -1, 1, -1, 1, 1, 1, 1, -1, 1, 1, 1, 1, -1;
    return {Eigen::MatrixXd::Identity(4, 4), B2 / 2.0, B3 / 2.0};
}

LineSet equiangular_from_mubs(const std::vector<Eigen::MatrixXd>& bases, int t, double tol) {
    if (t < 1) throw DomainError("equiangular_from_mubs: t must be positive");
    const int N = 1 << (2 * t), k = static_cast<int>(bases.size());
    if (k < 2) throw DomainError("equiangular_from_mubs: at least two bases are needed for a common angle");
    const double r = std::ldexp(1.0, t);
    for (int i = 0; i < k; ++i) {
        if (bases[i].rows() != N || bases[i].cols() != N)
            throw DomainError("equiangular_from_mubs: bases must have order 4^t");
        if ((bases[i] * bases[i].transpose() - Eigen::MatrixXd::Identity(N, N)).cwiseAbs().maxCoeff() > tol)
            throw DomainError("equiangular_from_mubs: basis is not orthonormal");
        for (int j = 0; j < i; ++j)
            if (((bases[i] * bases[j].transpose()).cwiseAbs().array() - 1.0 / r).abs().maxCoeff() > tol)
                throw DomainError("equiangular_from_mubs: bases are not unbiased");
    }
    const double A = std::sqrt(r / (r + 1)), B = 1.0 / std::sqrt(r + 1);
    LineSet L;
    L.dim = N + k;
    L.c = 1.0 / (r + 1);
    L.V = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k) * N, L.dim);
    for (int i = 0; i < k; ++i) {
        L.V.block(i * N, 0, N, N) = A * bases[i];
        L.V.block(i * N, N + i, N, 1).setConstant(B);
    }
    return L;
}

LineSet truncate_lines(const LineSet& L, int dims, int count) {
    if (dims < 1 || dims > L.dim || count < 1 || count > L.count())
        throw DomainError("truncate_lines: bounds out of range");
    if (dims < L.dim && L.V.block(0, dims, count, L.dim - dims).cwiseAbs().maxCoeff() > 1e-12)
        throw DomainError("truncate_lines: dropped coordinates do not vanish");
    LineSet r;
    r.dim = dims;
    r.c = L.c;
    r.V = L.V.block(0, 0, count, dims);
    return r;
}

long long line_lower_bound(int n) {
    if (n < 1) throw DomainError("line_lower_bound: n must be positive");
    long long best = n;
    for (long long N = 4; N + 2 <= n; N *= 4) best = std::max(best, N * std::min<long long>(n - N, N / 2 + 1));
    return best;
}

// ---- frames ----

SignatureInfo signature_check(const CMat& Q, double tol) {
    SignatureInfo s;
    if (Q.rows() != Q.cols() || Q.rows() < 2) return s;
    const int n = static_cast<int>(Q.rows());
    bool shape = max_abs(Q - Q.adjoint()) <= tol;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            shape = shape && std::abs(std::abs(Q(i, j)) - (i == j ? 0.0 : 1.0)) <= tol;
    CMat Q2 = Q * Q;
    double num = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j) num += std::real(std::conj(Q(i, j)) * Q2(i, j));
    s.mu = num / (static_cast<double>(n) * (n - 1));
    s.residual = max_abs(Q2 - (n - 1.0) * CMat::Identity(n, n) - s.mu * Q);
    Eigen::SelfAdjointEigenSolver<CMat> es((Q + Q.adjoint()) / 2.0, Eigen::EigenvaluesOnly);
    auto ev = es.eigenvalues();
    s.eigen_count = 1;
    for (Eigen::Index i = 1; i < ev.size(); ++i)
        if (ev(i) - ev(i - 1) > 1e-6 * n) ++s.eigen_count;
    s.ok = shape && s.residual <= tol * n;
    return s;
}

double frame_dimension(int n, double mu) { return n / 2.0 - mu * n / (2.0 * std::sqrt(4.0 * (n - 1) + mu * mu)); }

SigHad signature_to_hadamard(const CMat& Q, int sign, double tol) {
    auto s = signature_check(Q, tol);
    if (!s.ok) throw DomainError("signature_to_hadamard: not a signature matrix");
    if (std::abs(s.mu) > 2.0 + tol) throw DomainError("signature_to_hadamard: |mu| > 2");
    double mu = std::clamp(s.mu, -2.0, 2.0);
    SigHad r;
    r.lambda = cplx(-mu / 2, (sign >= 0 ? 1.0 : -1.0) * std::sqrt(std::max(0.0, 1.0 - mu * mu / 4)));
    r.H = Q + r.lambda * CMat::Identity(Q.rows(), Q.cols());
    return r;
}

HadSig hadamard_to_signature(const CMat& H, double tol) {
    if (H.rows() != H.cols()) throw DomainError("hadamard_to_signature: not square");
    const cplx lam = H(0, 0);
    for (Eigen::Index i = 1; i < H.rows(); ++i)
        if (std::abs(H(i, i) - lam) > tol) throw DomainError("hadamard_to_signature: diagonal is not constant");
    if (!is_hadamard(H, tol).pass) throw DomainError("hadamard_to_signature: not a Hadamard matrix");
    HadSig r;
    r.Q = H - lam * CMat::Identity(H.rows(), H.cols());
    if (max_abs(r.Q - r.Q.adjoint()) > tol) throw DomainError("hadamard_to_signature: H - lambda I is not self-adjoint");
    r.mu = -2.0 * std::real(lam);
    return r;
}

CMat frame_gram(const CMat& Q, double mu) {
    const int n = static_cast<int>(Q.rows());
    double k = frame_dimension(n, mu);
    return (k / n) * CMat::Identity(n, n) + std::sqrt(k * (n - k) / (double(n) * n * (n - 1))) * Q;
}

CMat frame_from_gram(const CMat& G, double tol) {
    if (G.rows() != G.cols() || max_abs(G * G - G) > tol || max_abs(G - G.adjoint()) > tol)
        throw DomainError("frame_from_gram: not an orthogonal projection");
    Eigen::SelfAdjointEigenSolver<CMat> es((G + G.adjoint()) / 2.0);
    std::vector<Eigen::Index> keep;
    for (Eigen::Index i = 0; i < G.rows(); ++i)
        if (es.eigenvalues()(i) > 0.5) keep.push_back(i);
    CMat V(G.rows(), static_cast<Eigen::Index>(keep.size()));
    for (std::size_t j = 0; j < keep.size(); ++j) V.col(j) = es.eigenvectors().col(keep[j]);
    return V.adjoint();
}

CMat q9_signature() {
    static const int L[9][9] = {{0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 1, 1, 1, 2, 2, 2},
                                {0, 0, 0, 2, 2, 2, 1, 1, 1}, {0, 2, 1, 0, 1, 2, 0, 1, 2},
                                {0, 2, 1, 2, 0, 1, 1, 2, 0}, {0, 2, 1, 1, 2, 0, 2, 0, 1},
                                {0, 1, 2, 0, 2, 1, 0, 2, 1}, {0, 1, 2, 2, 1, 0, 1, 0, 2},
                                {0, 1, 2, 1, 0, 2, 2, 1, 0}};
    CMat Q(9, 9);
    for (int i = 0; i < 9; ++i)
        for (int j = 0; j < 9; ++j) Q(i, j) = i == j ? cplx(0.0) : root_of_unity(L[i][j], 3);
    return Q;
}

Eigen::MatrixXi paley_design(int p) {
    if (p < 3 || !is_prime(static_cast<std::uint64_t>(p))) throw DomainError("paley_design: p must be an odd prime");
    Eigen::MatrixXi U = Eigen::MatrixXi::Zero(p, p);
    for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j)
            if (i != j && legendre(((j - i) % p + p) % p, p) == 1) U(i, j) = 1;
    return U;
}

SkewFrame skew_to_signature(const Eigen::MatrixXi& U, int sign) {
    const int n = static_cast<int>(U.rows());
    if (U.cols() != n || n < 3 || n % 4 != 3) throw DomainError("skew_to_signature: order must be 4m - 1");
    const int m = (n + 1) / 4;
    if ((U.array() * (U.array() - 1)).abs().maxCoeff() != 0) throw DomainError("skew_to_signature: not a 0/1 matrix");
    Eigen::MatrixXi J = Eigen::MatrixXi::Ones(n, n), In = Eigen::MatrixXi::Identity(n, n);
    if (U + U.transpose() + In != J) throw DomainError("skew_to_signature: U + U^T + I != J");
    if (U * U.transpose() != m * In + (m - 1) * J)
        throw DomainError("skew_to_signature: not a 2-(4m-1, 2m-1, m-1) design");
    cplx a(-1.0 + 1.0 / (2.0 * m), (sign >= 0 ? 1.0 : -1.0) * std::sqrt(4.0 * m - 1) / (2.0 * m));
    cplx sa = std::sqrt(a);
    CMat Uc = U.cast<double>().cast<cplx>();
    SkewFrame r;
    r.lambda = sa;
    r.Q = std::conj(sa) * Uc + sa * Uc.transpose();
    r.H = r.Q + sa * CMat::Identity(n, n);
    r.mu = -2.0 * std::real(sa);
    r.k = frame_dimension(n, r.mu);
    return r;
}

HoggarFrame hoggar64() {
    CMat P[4];
    for (auto& M : P) M = CMat::Zero(2, 2);
    P[0] << 1.0, 0.0, 0.0, 1.0;
    P[1] << 0.0, 1.0, 1.0, 0.0;
    P[2] << 0.0, -I1, I1, 0.0;
    P[3] << 1.0, 0.0, 0.0, -1.0;
    const cplx tau = std::polar(1.0, kPi / 4);
    HoggarFrame h;
    h.phi = CVec(8);
    h.phi << 0.0, 0.0, tau, std::conj(tau), tau, -tau, 0.0, std::sqrt(2.0);
    h.phi *= std::sqrt(3.0) / 12.0;
    h.vectors = CMat(8, 64);
    int col = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) h.vectors.col(col++) = kronecker(kronecker(P[a], P[b]), P[c]) * h.phi;
    h.gram = h.vectors.adjoint() * h.vectors;
    h.Q = 24.0 * (h.gram - CMat::Identity(64, 64) / 8.0);
    return h;
}

}  // namespace hadlab
