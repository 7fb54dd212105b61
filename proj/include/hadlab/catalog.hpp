#pragma once

#include <random>
#include <string>
#include <vector>

#include "hadlab/core.hpp"

namespace hadlab {

// Parameters are passed as complex numbers. Angles, integers (primes, orders) and discrete
// branch signs travel in the real part.
struct FamilyPoint {
    std::string family;
    std::vector<cplx> params;
};

struct FamilyInfo {
    std::string id;
    std::string params;   // human-readable parameter list
    int nparams = 0;      // -1: variable length
    int butson_q = 0;     // root order of the entries when the family is Butson at every point, else 0
};

const std::vector<FamilyInfo>& family_list();
const FamilyInfo& family_info(const std::string& id);

// Throws DomainError for unknown ids or parameters outside the family's domain.
CMat construct(const FamilyPoint& p);
FamilyPoint random_point(const std::string& id, std::mt19937_64& rng);

// Embedded data tables, validated on load.
BLog catalog_blog(const std::string& id);

// Residue-class indicator matrices and the Paley matrix Circ(x) with x_0 = 0, x_i = (i/p).
Eigen::MatrixXd paley_matrix(int p);
// class_of[x] = k if x = g^(k mod idx) for the smallest primitive root g; class_of[0] = -1.
std::vector<int> residue_classes(int p, int idx);

// X6 helpers.
double x6_D(cplx alpha);
bool x6_in_domain(cplx alpha, double tol = 0.0);

// B6 theta domain |theta| >= arccos((sqrt 3 - 1)/2).
double b6_theta_min();

struct PetrescuBlocks {
    CMat X, Y, T, D;   // s x s, s x s, s x (s+1), (s+1) x (s+1)
};
CMat petrescu_assemble(const PetrescuBlocks& b);
PetrescuBlocks petrescu_split(const CMat& H);

struct PetrescuCheck {
    std::string name;
    double residual = 0;
    bool pass = false;
};
struct PetrescuReport {
    int s = 0;
    std::vector<PetrescuCheck> checks;
    bool pass = false;
};
PetrescuReport petrescu_validate(const CMat& H, double tol = 1e-9);

struct WeighingPair {
    CMat W;   // zero diagonal, W W* = 9 I
    CMat H;   // W + i I
};
WeighingPair weighing_family_W10(cplx a, cplx b, cplx c);

}  // namespace hadlab
