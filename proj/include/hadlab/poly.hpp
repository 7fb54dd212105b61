#pragma once

#include <vector>

#include "hadlab/core.hpp"

namespace hadlab {

// Coefficients in increasing degree: c[k] multiplies x^k.
using Poly = std::vector<cplx>;
using RPoly = std::vector<double>;

Poly to_complex(const RPoly& p);
Poly trim(Poly p, double tol = 0.0);
int degree(const Poly& p);
cplx peval(const Poly& p, cplx x);
Poly pderiv(const Poly& p);
Poly padd(const Poly& a, const Poly& b);
Poly psub(const Poly& a, const Poly& b);
Poly pmul(const Poly& a, const Poly& b);
Poly pscale(const Poly& a, cplx s);
// Multiplication by x^k.
Poly pshift(const Poly& a, int k);

// Reciprocal-conjugate at formal degree d: x^d * conj(P(1/conj x)), i.e. the reversed conjugated coefficients.
Poly recip_conj(const Poly& p, int d = -1);

// Roots from the companion matrix, then Newton-polished in extended precision.
std::vector<cplx> proots(const Poly& p);
// Real roots in increasing order; a root counts as real when |Im| < 1e-9 (1 + |Re|).
std::vector<double> real_roots(const RPoly& p, double imag_tol = 1e-9);
// Roots within root_tol of the unit circle, polished along e^{i theta}.
std::vector<cplx> unit_roots(const Poly& p, double root_tol = -1);

// Largest |c_{d-k} - eps * conj(c_k)| relative to max |c|, with |eps| = 1 fitted.
double self_inversive_defect(const Poly& p, cplx* eps = nullptr);
bool is_self_inversive(const Poly& p, double tol = 1e-9);
// All roots of a self-inversive polynomial are unimodular iff the derivative's roots lie in the closed disk.
bool cohn_test(const Poly& p, double tol = 1e-9);

// f real palindromic of even degree 2m, f(x) = x^m T(x + 1/x); returns T.
RPoly palindromic_transform(const RPoly& f, double tol = 1e-12);

}  // namespace hadlab
