#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hadlab/core.hpp"
#include "hadlab/poly.hpp"

namespace hadlab {

// Upper left 3x3 block [[1,1,1],[1,a,b],[1,c,d]] of an order-6 matrix.
struct QuadPoint {
    cplx a, b, c, d;
};
CMat quad_matrix(const QuadPoint& q);

// Remaining entries (e,s1,s2) of row 2 and (f,s3,s4) of row 3.
struct RowSextuple {
    cplx e, s1, s2, f, s3, s4;
};

// (1+a+b+e)(1+conj(c+d+f))(1+c conj a+d conj b+f conj e)
cplx haagerup_poly(cplx a, cplx b, cplx c, cplx d, cplx e, cplx f);

// Unimodular s1, s2 with s1 + s2 = -sigma. sigma = 0 gives (1, -1).
std::pair<cplx, cplx> decompose_pair(cplx sigma, double tol = 1e-9);

// The partial rows (1,a,b,e,*,*), (1,c,d,f,*,*) complete to an orthogonal triple with the ones row.
bool triple_ortho_feasible(cplx a, cplx b, cplx c, cplx d, cplx e, cplx f, double tol = 1e-9);
// Residual of the triple identity H = 4 - |S|^2 - |D|^2 - |Psi|^2.
double c11_residual(cplx a, cplx b, cplx c, cplx d, cplx e, cplx f);

// Coefficients in e (degree <= 2 each) of F1 + F2 f + F3 f^2 = 0 and G1 + G2 f + G3 f^2 = 0.
struct LinCoeffs {
    Poly F1, F2, F3, G1, G2, G3;
    Poly num() const;   // F3 G1 - F1 G3, degree 3
    Poly den() const;   // F3 G2 - F2 G3, degree 3
};
// Throws DomainError when F3 vanishes identically.
LinCoeffs lin_coeffs(const QuadPoint& q);
// The unimodular candidate zeroing F3 (may be off the circle).
cplx e0_value(const QuadPoint& q);

// f = F(e); nullopt when numerator and denominator both vanish at e (both f from the quadratic must be tried).
std::optional<cplx> companion_value(const QuadPoint& q, cplx e, double tol = 1e-9);
std::vector<cplx> companion_candidates(const QuadPoint& q, cplx e);

// Degree-6 polynomial in e. Divided by a^4 b^4 c^3 d^3 it is self-inversive.
Poly fundamental_poly(const QuadPoint& q);
bool poly_vanishes(const Poly& p, double rel = 1e-9);

// [[E,B],[C,D]] / sqrt 6 unitary. Throws DomainError when B is singular.
CMat complete_block_D(const CMat& E, const CMat& B, const CMat& C, double tol = 1e-9);

struct EmbedReport {
    double lambda_max = 0;   // of E*E
    double block_sum = 0;    // |sum E|
    bool eig_ok = false, lindsey_ok = false, pass = false;
};
EmbedReport embed_precheck(const CMat& E, double tol = 1e-9);

// (b-1)(c-1)(b-d^2)(c-d^2)(b-c)(bc-d) E(b,d) E(c,d) != 0 with E(x,y) = x+y+x^2+y^2+xy^2+x^2y.
double canonical_product(const QuadPoint& q);
bool canonical_precheck(const QuadPoint& q, double tol = 1e-6);

struct DilationOptions {
    double root_tol = 1e-7;
    double tol = 1e-7;        // sextuple and D unimodularity acceptance
    bool filter_scope = true; // drop K6^(3) members and S6-equivalents
};

struct DilationSide {
    Poly P;
    int unit_roots = 0;
    int e1_roots = 0;
    bool e0_unimodular = false;
    std::vector<RowSextuple> sols;
};

struct DilationResult {
    enum class Status { Ok, Rejected, Degenerate } status = Status::Ok;
    std::string reason;
    DilationSide rows, cols;
    std::vector<CMat> matrices;
    int dropped_scope = 0;
    std::vector<std::string> log;
};

DilationSide dilation_side(const QuadPoint& q, const DilationOptions& opt = {});
DilationResult dilate(const QuadPoint& q, const DilationOptions& opt = {});

// Some dephasing has a -1 in its core.
bool k6_membership(const CMat& H, double tol = 1e-8);

// A dephased upper-left 3x3 block passing both prechecks, found by scanning pivots and row/column pairs.
// `placed` receives the equivalent matrix carrying that block in the upper left corner.
std::optional<QuadPoint> find_canonical_quad(const CMat& H, CMat* placed = nullptr, double tol = 1e-6);

}  // namespace hadlab
