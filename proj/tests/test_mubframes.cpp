#include <doctest.h>

#include <cmath>
#include <random>

#include "hadlab/catalog.hpp"
#include "hadlab/invariants.hpp"
#include "hadlab/mubframes.hpp"

using namespace hadlab;

namespace {

// Independent unbiasedness check straight from inner products of rows.
double pair_bias(const CMat& A, const CMat& B) {
    const double n = static_cast<double>(A.rows());
    double d = 0;
    for (Eigen::Index i = 0; i < A.rows(); ++i)
        for (Eigen::Index j = 0; j < B.rows(); ++j)
            d = std::max(d, std::abs(std::norm(A.row(i).dot(B.row(j))) - 1.0 / n));
    return d;
}

double triplet_bias(const MubSet& s) {
    double d = 0;
    for (int i = 0; i < s.size(); ++i)
        for (int j = i + 1; j < s.size(); ++j) d = std::max(d, pair_bias(s.basis(i), s.basis(j)));
    return d;
}

// The proof's case split for n >= 26, evaluated literally.
long long proof_count(int n) {
    int t = 2;
    while (3LL * (1LL << (2 * t + 1)) + 1 < n) ++t;
    long long d4 = 1LL << (2 * t + 2);
    if (n <= d4 + (1LL << (2 * t - 3))) return (1LL << (2 * t)) * ((1LL << (2 * t - 1)) + 1);
    return d4 * (n - d4);
}

// [[A, B], [B*, -A*]] with A = Circ(1, i), B = Circ(1, -i).
CMat bicirculant4() {
    CMat T(4, 4);
    T << 1.0, I1, 1.0, -I1, I1, 1.0, -I1, 1.0, 1.0, I1, -1.0, I1, I1, 1.0, I1, -1.0;
    return T;
}

}  // namespace

TEST_CASE("mub: order-2 triplet, tensor product and a biased basis") {
    auto s = mub_order2();
    CHECK(s.size() == 3);
    CHECK(is_mub(s, 1e-12));
    CHECK(triplet_bias(s) < 1e-12);

    auto t = mub_tensor(s, s);
    CHECK(t.n == 4);
    CHECK(t.size() == 3);
    CHECK(is_mub(t, 1e-12));
    CHECK(triplet_bias(t) < 1e-12);

    MubSet one{2, {}};
    CHECK(mub_tensor(s, one).size() == 1);

    MubSet f6{6, {fourier(6)}};
    CHECK(is_mub(f6));
    CMat biased = fourier(6);
    biased.row(1).swap(biased.row(2));
    f6.hads.push_back(biased);
    CHECK_FALSE(is_mub(f6));
    CHECK_FALSE(is_unbiased(f6.basis(1), f6.basis(2)));
    CHECK(is_unbiased(CMat::Identity(6, 6), f6.basis(1)));
    CHECK_THROWS_AS(is_unbiased(CMat::Identity(2, 2), CMat::Identity(3, 3)), DomainError);
}

TEST_CASE("mub: Zauner 2x2 representation") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> U(-kPi, kPi);
    for (int trial = 0; trial < 50; ++trial) {
        // Random unitary, plus diagonal and antidiagonal edge cases.
        double th = trial == 0 ? 0.0 : trial == 1 ? kPi / 2 : U(rng);
        cplx a = std::polar(std::cos(th), U(rng)), b = std::polar(std::sin(th), U(rng)), ph = std::polar(1.0, U(rng));
        CMat M(2, 2);
        M << a, b, -ph * std::conj(b), ph * std::conj(a);
        auto p = zauner_uvxy(M);
        for (auto z : p) CHECK(std::abs(std::abs(z) - 1.0) < 1e-12);
        cplx u = p[0], v = p[1], x = p[2], y = p[3];
        CMat R(2, 2);
        R << (u + v) / 2.0, y * (u - v) / 2.0, (u - v) / (2.0 * x), y * (u + v) / (2.0 * x);
        CHECK(max_abs(R - M) < 1e-10);
    }
}

TEST_CASE("mub: Zauner factorization of the D6 bicirculant family") {
    for (double th : {0.3, 1.1, 2.5, -0.7}) {
        cplx c = std::polar(1.0, th);
        CMat T = d6_bicirculant(c);
        REQUIRE(hadamard_ok(T, 1e-12));
        // The bicirculant parameter c corresponds to the D6_1 parameter c^3.
        CHECK(are_equivalent(T, construct({"D6_1", {c * c * c}})).verdict == Verdict::Equivalent);
        auto z = zauner_factor(T);
        CHECK(z.flat);
        CHECK(z.deviation < 1e-6);
        CHECK(z.residual < 1e-10);
        CHECK(hadamard_ok(z.Z1, 1e-9));
        CHECK(hadamard_ok(z.Z2, 1e-9));
        auto tr = z.triplet();
        CHECK(tr.size() == 3);
        CHECK(triplet_bias(tr) < 1e-6);
        CHECK(is_mub(tr, 1e-6));
    }
}

TEST_CASE("mub: Zauner factorization on X6 points") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 3; ++i) {
        auto fp = random_point("X6_2", rng);
        CMat T = x6_bicirculant(fp.params[0]);
        REQUIRE(hadamard_ok(T, 1e-9));
        CMat X = construct(fp);
        bool eq = are_equivalent(T, X).verdict == Verdict::Equivalent ||
                  are_equivalent(CMat(T.transpose()), X).verdict == Verdict::Equivalent;
        CHECK(eq);
        auto z = zauner_factor(T);
        CHECK(z.deviation < 1e-6);
        CHECK(z.residual < 1e-8);
        CHECK(triplet_bias(z.triplet()) < 1e-6);
    }
}

TEST_CASE("mub: Zauner preconditions") {
    CHECK_THROWS_AS(zauner_factor(fourier(5)), DomainError);
    CHECK_THROWS_AS(zauner_factor(construct({"S6", {}})), DomainError);
    CMat T = d6_bicirculant(std::polar(1.0, 0.4));
    T(0, 1) *= std::polar(1.0, 0.2);
    CHECK_THROWS_AS(zauner_factor(T), DomainError);
    for (const CMat& B : {CMat(fourier(2)), bicirculant4()}) {
        auto z = zauner_factor(B);
        CHECK(z.flat);
        CHECK(z.residual < 1e-12);
        CHECK(triplet_bias(z.triplet()) < 1e-9);
    }
}

TEST_CASE("lines: 12 lines in R^7 and the R^6 truncation") {
    auto L = equiangular_from_mubs(real_mubs_r4(), 1);
    CHECK(L.dim == 7);
    CHECK(L.count() == 12);
    CHECK(L.c == doctest::Approx(1.0 / 3));
    Eigen::MatrixXd G = L.V * L.V.transpose();
    for (int i = 0; i < 12; ++i) {
        CHECK(std::abs(G(i, i) - 1.0) < 1e-12);
        for (int j = i + 1; j < 12; ++j) CHECK(std::abs(std::abs(G(i, j)) - 1.0 / 3) < 1e-12);
    }
    CHECK(line_defect(L) < 1e-12);
    CHECK(L.count() <= L.dim * (L.dim + 1) / 2);

    // Printed transposed layout, scaled by sqrt 6.
    Eigen::MatrixXd S = L.V.transpose() * std::sqrt(6.0);
    CHECK(S(0, 0) == doctest::Approx(2.0));
    CHECK(S(4, 0) == doctest::Approx(std::sqrt(2.0)));
    CHECK(S(6, 11) == doctest::Approx(std::sqrt(2.0)));
    CHECK(S(1, 8) == doctest::Approx(-1.0));
    CHECK(S(3, 11) == doctest::Approx(-1.0));

    auto T = truncate_lines(L, 6, 8);
    CHECK(T.count() == 8);
    CHECK(line_defect(T) < 1e-12);
    CHECK_THROWS_AS(truncate_lines(L, 6, 12), DomainError);

    CHECK_THROWS_AS(equiangular_from_mubs({Eigen::MatrixXd::Identity(4, 4)}, 1), DomainError);
    auto bad = real_mubs_r4();
    bad[2] = Eigen::MatrixXd::Identity(4, 4);
    CHECK_THROWS_AS(equiangular_from_mubs(bad, 1), DomainError);
    CHECK_THROWS_AS(equiangular_from_mubs(real_mubs_r4(), 2), DomainError);
}

TEST_CASE("lines: lower bound") {
    CHECK(line_lower_bound(1) == 1);
    CHECK(line_lower_bound(5) == 5);
    CHECK(line_lower_bound(6) == 8);
    CHECK(line_lower_bound(7) == 12);
    CHECK(line_lower_bound(25) == 144);
    CHECK(line_lower_bound(49) == 16 * 9);
    CHECK(line_lower_bound(97) == 64 * 33);
    long long prev = 0;
    for (int n = 1; n <= 2000; ++n) {
        long long b = line_lower_bound(n);
        CHECK(b >= prev);
        prev = b;
        CHECK(static_cast<double>(b) >= 8.0 * n * (4.0 * n + 33) / 1089 - 1e-9);
        CHECK(b <= static_cast<long long>(n) * (n + 1) / 2);
        if (n >= 26) CHECK(b >= proof_count(n));
    }
}

TEST_CASE("frames: Q9 signature matrix") {
    CMat Q = q9_signature();
    auto s = signature_check(Q);
    CHECK(s.ok);
    CHECK(s.mu == doctest::Approx(-2.0).epsilon(1e-12));
    CHECK(s.eigen_count == 2);
    CHECK(std::lround(frame_dimension(9, s.mu)) == 6);
    CHECK(frame_dimension(9, s.mu) == doctest::Approx(6.0));
    CHECK(frame_dimension(9, -s.mu) == doctest::Approx(3.0));

    auto h = signature_to_hadamard(Q);
    CHECK(std::abs(h.lambda - 1.0) < 1e-12);
    CHECK(hadamard_ok(h.H, 1e-10));
    CHECK(max_abs(h.H - construct({"Q9H", {}})) < 1e-12);

    auto back = hadamard_to_signature(h.H);
    CHECK(max_abs(back.Q - Q) < 1e-12);
    CHECK(back.mu == doctest::Approx(-2.0));

    CMat G = frame_gram(Q, s.mu);
    CMat V = frame_from_gram(G);
    CHECK(V.rows() == 6);
    CHECK(max_abs(V * V.adjoint() - CMat::Identity(6, 6)) < 1e-10);
    CHECK(max_abs(V.adjoint() * V - G) < 1e-10);

    auto neg = signature_check(-Q);
    CHECK(neg.ok);
    CHECK(neg.mu == doctest::Approx(2.0));
    CHECK(frame_dimension(9, neg.mu) == doctest::Approx(3.0));
}

TEST_CASE("frames: signature errors") {
    CMat H = fourier(3);
    CHECK_THROWS_AS(hadamard_to_signature(H), DomainError);
    CHECK_THROWS_AS(signature_to_hadamard(CMat::Ones(3, 3)), DomainError);
    CMat Q = q9_signature();
    Q(0, 1) = Q(1, 0) = -1.0;
    CHECK_FALSE(signature_check(Q).ok);
    CHECK_THROWS_AS(signature_to_hadamard(Q), DomainError);
    // |mu| > 2: J - I of order 5 has Q^2 = 4I + 3Q.
    CMat K = CMat::Ones(5, 5) - CMat::Identity(5, 5);
    auto s = signature_check(K);
    CHECK(s.ok);
    CHECK(s.mu == doctest::Approx(3.0));
    CHECK_THROWS_AS(signature_to_hadamard(K), DomainError);
}

TEST_CASE("frames: skew Paley designs") {
    for (int p : {7, 11, 19, 23}) {
        auto U = paley_design(p);
        for (int sign : {1, -1}) {
            auto f = skew_to_signature(U, sign);
            CHECK(hadamard_ok(f.H, 1e-10));
            CHECK(std::abs(std::abs(f.lambda) - 1.0) < 1e-12);
            auto s = signature_check(f.Q);
            CHECK(s.ok);
            CHECK(s.eigen_count == 2);
            CHECK(s.mu == doctest::Approx(f.mu));
            CHECK(std::abs(s.mu) < 2.0);
            double k1 = frame_dimension(p, s.mu), k2 = frame_dimension(p, -s.mu);
            CHECK(std::abs(k1 - std::round(k1)) < 1e-9);
            CHECK(std::lround(std::min(k1, k2)) == (p - 1) / 2);
            CHECK(std::lround(std::max(k1, k2)) == (p + 1) / 2);
            auto hs = hadamard_to_signature(f.H);
            CHECK(max_abs(hs.Q - f.Q) < 1e-12);
            CMat V = frame_from_gram(frame_gram(f.Q, s.mu));
            CHECK(V.rows() == std::lround(k1));
        }
    }
    CHECK_THROWS_AS(skew_to_signature(paley_design(13)), DomainError);
    Eigen::MatrixXi U = paley_design(7);
    U(0, 1) = 0;
    CHECK_THROWS_AS(skew_to_signature(U), DomainError);
}

TEST_CASE("frames: Hoggar 64 lines") {
    auto h = hoggar64();
    CHECK(h.phi.norm() == doctest::Approx(1.0 / (2.0 * std::sqrt(2.0))).epsilon(1e-14));
    CHECK(h.vectors.cols() == 64);
    CHECK(max_abs(h.vectors * h.vectors.adjoint() - CMat::Identity(8, 8)) < 1e-12);
    int fourth = 0;
    for (int i = 0; i < 64; ++i) {
        CHECK(std::abs(std::real(h.gram(i, i)) - 1.0 / 8) < 1e-12);
        for (int j = 0; j < 64; ++j) {
            if (i == j) continue;
            CHECK(std::abs(std::abs(h.gram(i, j)) - 1.0 / 24) < 1e-12);
            cplx q = h.Q(i, j);
            bool hit = false;
            for (int k = 0; k < 4; ++k) hit = hit || std::abs(q - root_of_unity(k, 4)) < 1e-10;
            if (hit) ++fourth;
        }
    }
    CHECK(fourth == 64 * 63);
    auto s = signature_check(h.Q, 1e-9);
    CHECK(s.ok);
    CHECK(s.eigen_count == 2);
    CHECK(frame_dimension(64, s.mu) == doctest::Approx(8.0));
}
