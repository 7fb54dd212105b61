#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hadlab/core.hpp"
#include "hadlab/poly.hpp"

namespace hadlab {

// ---- cyclic n-roots ----

// Max residual of the cyclic n-root system: the n-1 cyclic sums of consecutive products vanish, the full product is 1.
double cyclic_residual(const CVec& z);
// x = (1, z0, z0 z1, ..., z0 ... z_{n-2}).
CVec x_from_z(const CVec& z);
// z_i = x_{i+1} / x_i, indices mod n.
CVec z_from_x(const CVec& x);
// max_k |sum_i x_{i+k} / x_i| over k = 1..n-1; zero iff Circ(x) has orthogonal rows (unimodular x).
double circulant_residual(const CVec& x);
// Classical x-level solution; alpha must be a unit mod n.
CVec classical(int n, int alpha, int beta);
// z = (zp, alpha zp, ..., alpha^{n/m-1} zp) with m^2 | n, prod zp = 1, alpha a primitive (n/m)-th root of unity.
CVec backelin(int n, int m, const CVec& zprefix, cplx alpha, double tol = 1e-9);

// ---- simple index k ----

struct Cosets {
    int p = 0, k = 0, g = 0;
    int m = 0;              // p - 1 lies in G_m
    std::vector<int> cls;   // cls[i] = j with i in G_j, i = 1..p-1; cls[0] = -1
    IMat n;                 // transition numbers n_ij
};
Cosets make_cosets(int p, int k, int g);
IMat transition_numbers(int p, int g, int k);

// p = s^2 + t^2 with s = 1 mod 4 and t > 0, for p = 1 mod 4.
std::pair<int, int> two_squares(int p);
// Closed-form order-4 transition numbers for p = 1 mod 8; t carries the sign fixed by g.
struct KatreRajwade {
    int s = 0, t = 0;
    IMat n;
};
KatreRajwade katre_rajwade(int p, int g);

// Smallest primitive root with n_01 < n_02 (k = 3) or n_01 > n_03 (k = 4).
int index3_generator(int p);
int index4_generator(int p);

struct IndexKSolution {
    int p = 0, k = 0, g = 0;
    CVec c;
    std::string tag;   // real | unimodular | complex
    double residual = 0;
};
// c_a + 1/c_{a+m} + sum_ij n_ij c_{a+j} / c_{a+i}, maximum modulus over a.
double index_residual(const Cosets& cs, const CVec& c);
// x_0 = 1, x_i = c_{cls(i)}.
CVec x_from_c(const Cosets& cs, const CVec& c);
std::string classify_tag(const CVec& c, double tol = 1e-9);
IndexKSolution make_solution(const Cosets& cs, const CVec& c);

// Closure under conjugation, reciprocal and cyclic shift.
CVec cyclic_shift(const CVec& c, int r);
CVec conj_vec(const CVec& c);
CVec recip_vec(const CVec& c);

std::vector<CMat> index2(int p);

// 12 solutions: j = 1 base and its shifts, then their conjugates; then the same for j = 2.
std::vector<IndexKSolution> index3_solutions(int p);
std::vector<CMat> index3(int p);

struct Index4Params {
    int s = 0, t = 0;
    double zeta = 0, A = 0, B = 0, C = 0, D = 0;
};
// sign = +1 or -1 selects zeta_+ or zeta_-.
Index4Params index4_params(int p, int sign);
// (a, b, conj a, conj b) for zeta_+ then zeta_-.
std::vector<IndexKSolution> index4_symmetric_solutions(int p);
std::vector<CMat> index4_symmetric(int p);

struct SolutionSet {
    std::vector<IndexKSolution> sols;
    std::vector<std::string> source;   // V1 .. V6
    int count(const std::string& tag) const;
    double max_residual() const;
};
SolutionSet index4_p17_all();

// The two roots of x + 1/x = h, first one by the printed case split.
std::pair<cplx, cplx> lift(cplx h);

// ---- circulant core ----

struct CoreSolution {
    int n = 0;        // core order
    CVec x;           // core first row
    CMat bordered;    // order n + 1
    double residual = 0;
};
// max of |1 + sum x| and |1 + sum_i x_{i+k} / x_i|, k = 1..n-1.
double core_residual(const CVec& x);
// Residual of the quotient system: cyclic sums equal -1, product equals 1.
double core_z_residual(const CVec& z);
CoreSolution make_core(const CVec& x);
// x = -conj(S) (1, z0, z0 z1, ...); throws DomainError when z is not a unimodular solution.
CoreSolution core_x_from_z(const CVec& z, double tol = 1e-9);
// x_0 = -(p-1)/k sum c - 1, x_i = c_{cls(i)}.
CVec core_x_from_c(const Cosets& cs, const CVec& c);

std::vector<CoreSolution> core_index2(int p);
// Base solution and its cyclic shifts.
std::vector<CoreSolution> core_index4_a(int p);
std::vector<CoreSolution> core_index4_b(int p);
std::pair<double, double> core_index4_b_AB(int p);

struct Q7Data {
    double alpha = 0;
    RPoly h;                      // increasing degree
    std::vector<double> roots;    // r1 < ... < r6
    CVec x;
    CMat H;
};
Q7Data q7_data();
CMat q7();
// |cubic(alpha)| divided by the sum of the moduli of its terms.
double q7_alpha_cubic_residual(double alpha);

struct Q11Data {
    double gamma = 0;
    cplx a, sigma, b, c;   // sigma = b + c
    CVec x;
    CMat H;
};
// One entry per unimodular root a (upper half plane); both (b, c) orders when requested.
std::vector<Q11Data> q11_data(bool both_orders = false);
std::vector<CMat> q11();

}  // namespace hadlab
