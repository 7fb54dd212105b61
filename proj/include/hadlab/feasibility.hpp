#pragma once

#include <string>
#include <vector>

namespace hadlab {

struct FeasibilityVerdict {
    bool infeasible = false;            // false means no obstruction found, not existence
    std::vector<std::string> reasons;   // triggered rule ids
    std::string verdict() const { return infeasible ? "infeasible" : "no-obstruction"; }
};

// A vanishing sum of n q-th roots of unity exists iff n is a nonnegative combination of the primes of q.
bool lam_leung(int n, int q);

// BH(n, 6): Winterhof (odd n, prime = 5 mod 6 in the squarefree part) and |det|^2 = n^n = 2 mod 3.
FeasibilityVerdict bh6_tests(int n);
// Part 1 (q = p^a needs p | n) and part 3 (Legendre condition for q = p^a or 2p^a, p = 3 mod 4, n odd).
FeasibilityVerdict bn_tests(int n, int q);
// All of the above that apply to (n, q), plus Lam-Leung.
FeasibilityVerdict bh_feasible(int n, int q);
// Petrescu-type BH(3s+1, q): needs BH(s+1, q); for q = 6 also the squarefree part of (3s+1)(s-1)^s.
FeasibilityVerdict petrescu_feasible(int n, int q = 6);

}  // namespace hadlab
