#pragma once

#include <string>
#include <vector>

#include "hadlab/catalog.hpp"
#include "hadlab/core.hpp"
#include "hadlab/invariants.hpp"

namespace hadlab {

struct CensusOptions {
    long long budget = 1'000'000'000;   // search nodes
    int workers = 1;
    std::string checkpoint_dir;         // per-unit result files; empty disables checkpointing
    bool classify = true;               // reduce to equivalence classes
};

struct CensusResult {
    int n = 0, q = 0;
    bool complete = true;                 // false when the node budget ran out
    long long nodes = 0;
    long long matrices = 0;               // dephased matrices with sorted rows and columns
    std::vector<BLog> reps;               // one per equivalence class
    std::vector<int> act_class;           // ACT class index per rep
    int act_classes = 0;
    long long equivalence_calls = 0;
    int undecided = 0;                    // equivalence checks that hit their budget (kept as separate classes)
};

// Depth-first orderly search over dephased BH(n, q): rows strictly increasing, columns non-decreasing
// (lexicographically), orthogonality checked on each new row; survivors bucketed by invariants and
// reduced with are_equivalent.
CensusResult enumerate_bh(int n, int q, const CensusOptions& opt = {});

// Rows of the dephased matrices found by the search, before classification.
std::vector<BLog> enumerate_dephased(int n, int q, const CensusOptions& opt = {}, CensusResult* info = nullptr);

// Equivalence classes of a list of Butson matrices, in order of first appearance.
struct Classification {
    std::vector<int> cls;         // class index per matrix
    std::vector<int> rep_index;   // matrix index of each class representative
    long long equivalence_calls = 0;
    int undecided = 0;
};
Classification classify_butson(const std::vector<BLog>& mats, int workers = 1);
// ACT class index per matrix; classes numbered in order of first appearance.
std::vector<int> act_partition(const std::vector<CMat>& reps, int* count = nullptr);

struct ClassStats {
    int defect = 0;
    long long auto_order = 0;
    long long minors4 = 0;
    int zq = 0;
    bool zq_exact = true;
    ActFlags act;
    bool hermitian = false, subhad = false, symmetric = false;
    std::string hbs() const;
};
ClassStats class_stats(const BLog& L);
// Fixed-order text table: No, Family, ACT, HBS, Auto, Defect, Z_q, Invariant.
std::string stats_table(const std::vector<std::string>& labels, const std::vector<ClassStats>& stats);

// The ten ACT representatives of BH(8, 4), as family points.
std::vector<FamilyPoint> table1_points();

// ---- spectral lifts ----

struct SpectralPair {
    IMat Q;   // n x r
    IMat S;   // r x n
    int q = 0;
};
BLog spectral_matrix(const SpectralPair& p);

enum class LiftMode {
    Dita,       // BH(mn, mq), rank at most r
    Doubling,   // m = 2, q even, first row of S even: BH(2n, q), rank exactly preserved from below
};
struct LiftResult {
    SpectralPair factors;   // lifted Q', S' with L = Q' S' mod q'
    BLog L;
};
LiftResult spectral_lift(const SpectralPair& p, int m, LiftMode mode = LiftMode::Dita);

// Printed spectral data.
SpectralPair spectral_f2();
SpectralPair spectral_km();         // the 6 x 3 / 3 x 6 pair over Z_8
SpectralPair spectral_km_prime();   // the variant with the even row of QS as the first row of S
SpectralPair spectral_ex12();       // the BH(12, 8) pair with even first row of S
SpectralPair spectral_tao();        // Q of order 6 with S = I over Z_3

}  // namespace hadlab
