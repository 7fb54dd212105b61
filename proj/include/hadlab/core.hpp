#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace hadlab {

using cplx = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using IMat = Eigen::MatrixXi;

inline constexpr double kPi = 3.14159265358979323846;
inline const cplx I1{0.0, 1.0};

// Bad input or parameters outside a family's domain (CLI exit code 1).
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Numerical result too close to a threshold to call (CLI exit code 2).
struct AmbiguityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Tolerances {
    double ortho = 1e-10;   // scaled by n
    double unimod = 1e-10;
    double root = 1e-7;
};
// Process-wide defaults; the CLI overrides them from flags before dispatch.
Tolerances& default_tol();

inline cplx root_of_unity(int k, int q) {
    return std::polar(1.0, 2.0 * kPi * k / q);
}

struct BLog {
    int n = 0;
    int q = 1;
    IMat L;
};

struct VerifyReport {
    double max_row_defect = 0;
    double max_unimod_defect = 0;
    bool pass = false;
};

VerifyReport is_hadamard(const CMat& M, double tol = -1);
inline bool hadamard_ok(const CMat& M, double tol = -1) { return is_hadamard(M, tol).pass; }
double unimod_defect(const CMat& M);

CMat fourier(int n);

struct Dephased {
    CMat H;
    CVec row;   // H = diag(row) * M * diag(col)
    CVec col;
};
Dephased dephase(const CMat& M);
// Dephase with row r and column c as the pivots (they become all ones).
Dephased dephase_at(const CMat& M, int r, int c);

CMat kronecker(const CMat& H, const CMat& K);

// Block (i,j) = Diag([M_1]_ij, ..., [M_v]_ij) * N_j, with M_l of order k and N_j of order v.
CMat generalized_tensor(const std::vector<CMat>& Ms, const std::vector<CMat>& Ns);
// Single-M case: block (i,j) = m_ij * N_j.
CMat dita(const CMat& M, const std::vector<CMat>& Ns);

bool fourier_product_equivalent(const std::vector<int>& a, const std::vector<int>& b);

struct PairOrbit {
    int r1 = 0, r2 = 0;
    std::vector<int> cols;   // entries where u_i + v_i = 0
};
std::vector<PairOrbit> parametrize_pair_rows(const CMat& H);
CMat eval_pair_orbit(const CMat& H, const PairOrbit& o, cplx alpha);

struct BlockOrbit {
    int r2 = 0, r3 = 0, c1 = 0, c2 = 0;
    std::vector<int> ycols, wrows;
    bool two_param = false;   // a == b
};
// Finds the first (rows, columns) quadruple carrying the block pattern; throws DomainError if none.
BlockOrbit parametrize_block(const CMat& H, double tol = 1e-9);
std::vector<BlockOrbit> find_block_patterns(const CMat& H, double tol = 1e-9);
CMat eval_block_orbit(const CMat& H, const BlockOrbit& o, cplx alpha, cplx beta = 1.0);

// variant 1: H * exp(i t A B), B = H* A H / n.
CMat nicoara1(const CMat& H, const Eigen::VectorXd& Adiag, double t, double tol = 1e-9);
// variant 2: H * U(a)^*, U = I + (a-1) A1 B1 + (conj a - 1) A2 B2.
CMat nicoara2(const CMat& H, const Eigen::VectorXd& A1, const Eigen::VectorXd& A2, cplx a,
              double tol = 1e-9);

CMat blog_to_cmat(const BLog& L);
// Entries are matched against q-th roots after dephasing; the returned log is of the dephased matrix
// when `dephase_first` is set, otherwise of M itself.
BLog cmat_to_blog(const CMat& M, int q, double tol = 1e-8, bool dephase_first = false);

CMat circulant(const CVec& first_row);
CMat border_with_ones(const CMat& core);

double max_abs(const CMat& M);
bool approx_equal(const CMat& A, const CMat& B, double tol);
// True if the rows of A are a permutation of the rows of B.
bool rows_permuted_equal(const CMat& A, const CMat& B, double tol);

}  // namespace hadlab
