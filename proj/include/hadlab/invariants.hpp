#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hadlab/core.hpp"

namespace hadlab {

struct DefectReport {
    int m = 0;   // solution-space dimension
    int d = 0;   // m - 2n + 1
    int rank = 0;
    bool ambiguous = false;   // a singular value within 10x of the threshold
    std::vector<double> singular_values;
};
DefectReport defect(const CMat& M, double rank_tol = 1e-8);
int fourier_defect(int n);

// Unimodular values deduplicated by angle.
std::vector<cplx> haagerup_set(const CMat& M, double tol = 1e-8);
bool same_value_set(const std::vector<cplx>& a, const std::vector<cplx>& b, double tol = 1e-8);

struct FingerprintLevel {
    int d = 0;
    std::vector<std::pair<double, long long>> values;   // (modulus, multiplicity), increasing
};
struct Fingerprint {
    std::vector<FingerprintLevel> levels;   // d = 2 .. dmax
    bool same_as(const Fingerprint& o, double tol = 1e-7) const;
};
Fingerprint fingerprint(const CMat& M, int dmax, double tol_fp = 1e-7);
long long vanishing_minors(const CMat& M, int d, double tol = 1e-7);

using RankCounts = std::vector<std::pair<int, long long>>;
RankCounts rank_profile_slot(const CMat& M, int j, int k, double rank_tol = 1e-8);
std::map<std::pair<int, int>, RankCounts> rank_profile(const CMat& M, double rank_tol = 1e-8);

struct ZqRankResult {
    int r = 0;
    bool exact = true;   // false: the budget ran out and the rank is at least r
};
ZqRankResult zq_rank(const BLog& L, long long budget = 200'000'000);
// Upper bound from elimination over each prime-power component of Z_q.
int zq_rank_upper_bound(const BLog& L);

enum class Verdict { Equivalent, Inequivalent, Undecided };

// K(i,j) = row_phase(i) * H(row_perm[i], col_perm[j]) * col_phase(j)
struct Witness {
    std::vector<int> row_perm, col_perm;
    CVec row_phase, col_phase;
};
CMat apply_witness(const CMat& H, const Witness& w);

struct EquivOptions {
    long long budget = 10'000'000;
    double tol = 1e-8;
    bool invariant_precheck = true;
};
struct EquivResult {
    Verdict verdict = Verdict::Undecided;
    std::optional<Witness> witness;
    long long nodes = 0;
    std::string reason;
};
EquivResult are_equivalent(const CMat& H, const CMat& K, const EquivOptions& opt = {});

// Number of pairs of monomial matrices (P, Q) with q-th root phases and P H Q = H.
// Returns -1 if the budget is exhausted.
long long automorphism_count(const CMat& H, int q, long long budget = 100'000'000, double tol = 1e-8);

struct ActFlags {
    Verdict adjoint = Verdict::Undecided, conjugate = Verdict::Undecided, transpose = Verdict::Undecided;
    std::string str() const;
};
ActFlags act_classify(const CMat& H, const EquivOptions& opt = {});

// Column-permutation searches; rows can be fixed without loss since P K P^T keeps the property.
bool equivalent_to_symmetric(const CMat& H, double tol = 1e-8);
bool equivalent_to_hermitian(const CMat& H, double tol = 1e-8);
bool has_sub_hadamard(const CMat& H, int d = 4, double tol = 1e-8);

}  // namespace hadlab
