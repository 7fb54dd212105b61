#include "doctest.h"

#include "hadlab/core.hpp"
#include "hadlab/invariants.hpp"

using namespace hadlab;

TEST_CASE("fourier matrices are hadamard") {
    for (int n = 1; n <= 12; ++n) CHECK(hadamard_ok(fourier(n)));
    CMat F = fourier(4);
    F(1, 1) *= 1.001;
    CHECK_FALSE(hadamard_ok(F));
}

TEST_CASE("dephase puts ones on the pivot row and column") {
    CMat F = fourier(5);
    CMat D = CMat::Identity(5, 5);
    for (int i = 0; i < 5; ++i) D(i, i) = std::polar(1.0, 0.3 * i + 0.1);
    CMat M = D * F * D.adjoint();
    auto d = dephase_at(M, 2, 3);
    for (int k = 0; k < 5; ++k) {
        CHECK(std::abs(d.H(2, k) - 1.0) < 1e-12);
        CHECK(std::abs(d.H(k, 3) - 1.0) < 1e-12);
    }
    CMat back = d.row.asDiagonal() * M * d.col.asDiagonal();
    CHECK(approx_equal(back, d.H, 1e-12));
}
