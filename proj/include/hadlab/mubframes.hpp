#pragma once

#include <vector>

#include "hadlab/core.hpp"

namespace hadlab {

// ---- mutually unbiased bases ----

// Identity first (implicit), then unscaled Hadamard matrices H_i; basis i is H_i / sqrt(n).
struct MubSet {
    int n = 0;
    std::vector<CMat> hads;
    int size() const { return 1 + static_cast<int>(hads.size()); }
    CMat basis(int i) const;   // unitary, rows are the basis vectors
};

// B1, B2 unitary with rows as basis vectors; all |<e,f>|^2 = 1/n.
bool is_unbiased(const CMat& B1, const CMat& B2, double tol = 1e-9);
// Max deviation of |<e,f>|^2 from 1/n over all pairs of bases, and of each basis from unitarity.
double mub_defect(const MubSet& s);
bool is_mub(const MubSet& s, double tol = 1e-9);
MubSet mub_tensor(const MubSet& a, const MubSet& b);
// {I, F2/sqrt2, [[1, i], [1, -i]]/sqrt2}.
MubSet mub_order2();

struct ZaunerResult {
    CMat Z1, Z2;            // unscaled: Z1 Z2* = sqrt(2m) T
    double deviation = 0;   // max | |entry| - 1 | over Z1, Z2
    double residual = 0;    // max |Z1 Z2* - sqrt(2m) T|
    bool flat = false;      // deviation < 1e-6
    MubSet triplet() const;
};
// T Hadamard of order 2m with m x m circulant blocks; throws DomainError otherwise.
ZaunerResult zauner_factor(const CMat& T, double tol = 1e-8);
// (u, v, x, y) with M = 1/2 [[u+v, y(u-v)], [(u-v)/x, y(u+v)/x]] for a 2 x 2 unitary M.
std::vector<cplx> zauner_uvxy(const CMat& M);

// The D6-equivalent bicirculant one-parameter family, c unimodular.
CMat d6_bicirculant(cplx c);
// [[A, B], [B*, -A*]] with A = Circ(1, a, b), B = Circ(1, c, d), equivalent to X6_2(alpha) or its transpose.
CMat x6_bicirculant(cplx alpha);

// ---- real equiangular lines ----

struct LineSet {
    int dim = 0;
    Eigen::MatrixXd V;   // one unit vector per row
    double c = 0;
    int count() const { return static_cast<int>(V.rows()); }
};
// max over i<j of | |<v_i, v_j>| - c | and over i of | |v_i| - 1 |.
double line_defect(const LineSet& L);
// The three real MUBs of R^4 as orthogonal matrices (rows are vectors).
std::vector<Eigen::MatrixXd> real_mubs_r4();
// k pairwise unbiased orthogonal bases of R^(4^t) -> k 4^t lines in R^(4^t + k), c = 1/(2^t + 1).
LineSet equiangular_from_mubs(const std::vector<Eigen::MatrixXd>& bases, int t, double tol = 1e-9);
// First `dims` coordinates of the first `count` vectors; dropped coordinates must vanish on kept vectors.
LineSet truncate_lines(const LineSet& L, int dims, int count);
// Largest count from an orthonormal basis or from m real MUBs of order 4^s embedded with 4^s + m <= n.
long long line_lower_bound(int n);

// ---- equiangular tight frames ----

struct SignatureInfo {
    bool ok = false;          // self-adjoint, zero diagonal, unimodular off-diagonal, Q^2 = (n-1)I + mu Q
    double mu = 0;
    double residual = 0;      // max |Q^2 - (n-1)I - mu Q|
    int eigen_count = 0;      // distinct eigenvalues
};
SignatureInfo signature_check(const CMat& Q, double tol = 1e-9);
// k = n/2 - mu n / (2 sqrt(4(n-1) + mu^2)).
double frame_dimension(int n, double mu);

struct SigHad {
    CMat H;
    cplx lambda;
};
// lambda = -mu/2 + sign i sqrt(1 - mu^2/4); throws DomainError for |mu| > 2 or a non-signature Q.
SigHad signature_to_hadamard(const CMat& Q, int sign = 1, double tol = 1e-9);
struct HadSig {
    CMat Q;
    double mu = 0;
};
// Throws DomainError for a non-constant diagonal, a non-Hadamard H or a non-self-adjoint H - lambda I.
HadSig hadamard_to_signature(const CMat& H, double tol = 1e-9);
// Gram matrix k/n I + sqrt(k(n-k)/(n^2(n-1))) Q of the (n, k) frame.
CMat frame_gram(const CMat& Q, double mu);
// k x n matrix whose columns are frame vectors with Gram matrix G (a rank-k projection).
CMat frame_from_gram(const CMat& G, double tol = 1e-8);

// The printed cube-root signature matrix of order 9.
CMat q9_signature();

// U_ij = 1 when j - i is a nonzero square mod p; skew for p = 3 mod 4.
Eigen::MatrixXi paley_design(int p);
struct SkewFrame {
    CMat H, Q;
    cplx lambda;
    double mu = 0;
    double k = 0;
};
// H = conj(sqrt a) U + sqrt a U^T + sqrt a I with a = -1 + 1/(2m) + sign i sqrt(4m-1)/(2m).
SkewFrame skew_to_signature(const Eigen::MatrixXi& U, int sign = 1);

struct HoggarFrame {
    CMat vectors;   // 8 x 64, columns A phi
    CMat gram;      // 64 x 64
    CMat Q;         // 24 (gram - I/8)
    CVec phi;
};
HoggarFrame hoggar64();

}  // namespace hadlab
