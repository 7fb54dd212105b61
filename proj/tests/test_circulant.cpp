#include <doctest.h>

#include <cmath>

#include "hadlab/catalog.hpp"
#include "hadlab/circulant.hpp"
#include "hadlab/invariants.hpp"
#include "hadlab/numtheory.hpp"

using namespace hadlab;

namespace {

CVec cv(std::initializer_list<cplx> l) {
    CVec v(static_cast<Eigen::Index>(l.size()));
    Eigen::Index i = 0;
    for (cplx c : l) v(i++) = c;
    return v;
}

// Direct row-orthogonality check, independent of is_hadamard.
double gram_defect(const CMat& H) {
    const auto n = H.rows();
    return (H * H.adjoint() - double(n) * CMat::Identity(n, n)).cwiseAbs().maxCoeff();
}

bool all_roots_of_unity(const CMat& H, int qmax, double tol = 1e-8) {
    const CMat D = dephase(H).H;
    for (Eigen::Index i = 0; i < D.size(); ++i) {
        bool hit = false;
        for (int q = 1; q <= qmax && !hit; ++q) {
            const double k = std::arg(D(i)) * q / (2 * kPi);
            hit = std::abs(k - std::round(k)) < tol;
        }
        if (!hit) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("cyclic roots: residuals and classical solutions") {
    CHECK(cyclic_residual(cv({1.0})) == doctest::Approx(0.0));
    CHECK_THROWS_AS(cyclic_residual(cv({1.0, 0.0})), DomainError);

    const CVec x5 = classical(5, 1, 0);
    CHECK(cyclic_residual(z_from_x(x5)) < 1e-12);
    const CMat C5 = circulant(x5);
    CHECK(hadamard_ok(C5, 1e-10));
    CHECK(are_equivalent(C5, fourier(5)).verdict == Verdict::Equivalent);

    const CVec x7 = classical(7, 2, 1);
    CHECK(circulant_residual(x7) < 1e-12);
    // Fourier transform of a unimodular solution is flat.
    const CVec xh = fourier(7).adjoint() * x7 / std::sqrt(7.0);
    for (Eigen::Index i = 0; i < 7; ++i) CHECK(std::abs(std::abs(xh(i)) - 1) < 1e-12);

    for (int n : {4, 6, 8, 9, 12}) CHECK(circulant_residual(classical(n, 1, 0)) < 1e-10);
    CHECK_THROWS_AS(classical(6, 2, 0), DomainError);
}

TEST_CASE("backelin families") {
    const cplx w = root_of_unity(1, 3), a = std::polar(1.0, 1.0);
    const CVec z = backelin(12, 2, cv({a, std::conj(a)}), -w * w);
    CHECK(cyclic_residual(z) < 1e-12);
    const CVec x = x_from_z(z);
    const CVec printed = cv({1.0, a, 1.0, -w * w * a, w, w * w * a, 1.0, -a, 1.0, w * w * a, w, -w * w * a});
    CHECK((x - printed).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(hadamard_ok(circulant(x), 1e-10));

    const cplx z0 = std::polar(1.0, 0.4);
    CHECK(cyclic_residual(backelin(4, 2, cv({z0, 1.0 / z0}), -1.0)) < 1e-12);
    const cplx u = std::polar(1.0, 0.3), v = std::polar(1.0, -1.1);
    CHECK(cyclic_residual(backelin(9, 3, cv({u, v, 1.0 / (u * v)}), root_of_unity(1, 3))) < 1e-12);

    CHECK_THROWS_AS(backelin(10, 2, cv({1.0, 1.0}), -1.0), DomainError);
    CHECK_THROWS_AS(backelin(12, 2, cv({1.0, 1.0}), cplx(1.0)), DomainError);
}

TEST_CASE("index 2") {
    for (int p : {3, 5, 7, 11, 13, 17, 19, 23, 29}) {
        const auto Ms = index2(p);
        CHECK(Ms.size() == (p % 4 == 3 ? 2u : 4u));
        for (const auto& M : Ms) CHECK(gram_defect(M) < 1e-9 * p);
        for (const auto& M : Ms) CHECK(hadamard_ok(M, 1e-8));
    }
    const auto M7 = index2(7);
    CHECK(std::abs(M7[0](0, 3) - cplx(-0.75, std::sqrt(7.0) / 4)) < 1e-14);   // 3 is a nonresidue mod 7
    CHECK_THROWS_AS(index2(9), DomainError);
}

TEST_CASE("transition numbers") {
    for (int p : {7, 13, 17, 41, 73}) {
        for (int k : {2, 3, 4}) {
            if ((p - 1) % k) continue;
            const int g = static_cast<int>(smallest_primitive_root(p));
            const IMat n = transition_numbers(p, g, k);
            CHECK(n.sum() == p - 2);
            const Cosets cs = make_cosets(p, k, g);
            for (int i = 0; i < k; ++i)
                CHECK(n.row(i).sum() == (p - 1) / k - (i == cs.m ? 1 : 0));
            if (k == 4 && p % 8 == 1) CHECK(n == n.transpose());
        }
    }
    // p = 17, g = 3: printed cosets and (s, t) = (1, 4)
    const Cosets cs = make_cosets(17, 4, 3);
    for (int i : {1, 4, 13, 16}) CHECK(cs.cls[i] == 0);
    for (int i : {3, 5, 12, 14}) CHECK(cs.cls[i] == 1);
    for (int i : {2, 8, 9, 15}) CHECK(cs.cls[i] == 2);
    for (int i : {6, 7, 10, 11}) CHECK(cs.cls[i] == 3);
    for (int p : {17, 41, 73, 89, 97, 113}) {
        for (auto g : primitive_roots(p)) {
            const auto kr = katre_rajwade(p, static_cast<int>(g));
            CHECK(kr.n == transition_numbers(p, static_cast<int>(g), 4));
            CHECK((kr.t > 0) == (kr.n(0, 1) > kr.n(0, 3)));
        }
    }
    const auto kr = katre_rajwade(17, 3);
    CHECK(kr.s == 1);
    CHECK(kr.t == 4);
    CHECK(index4_generator(17) == 3);

    // p = 7 with G1 = {2, 5} (generator 5) gives n01 = 1, n02 = 0; the selected generator swaps the order.
    CHECK(make_cosets(7, 3, 5).cls[2] == 1);
    CHECK_THROWS_AS(make_cosets(7, 3, 2), DomainError);
    const IMat n2 = transition_numbers(7, 5, 3);
    CHECK(n2(0, 1) == 1);
    CHECK(n2(0, 2) == 0);
    const IMat n3 = transition_numbers(7, index3_generator(7), 3);
    CHECK(n3(0, 1) < n3(0, 2));
    CHECK(index3_generator(7) == 3);
    CHECK_THROWS_AS(transition_numbers(7, 2 * 2, 3), DomainError);
}

TEST_CASE("index 3") {
    const auto s7 = index3_solutions(7);
    REQUIRE(s7.size() == 12);
    for (const auto& s : s7) {
        CHECK(s.residual < 1e-10);
        CHECK(s.tag == "unimodular");
    }
    // j = 1 reproduces the Fourier row (1, w^4, w^2, w, w, w^2, w^4).
    const Cosets cs = make_cosets(7, 3, 3);
    const cplx w = root_of_unity(1, 7);
    const CVec f7 = cv({1.0, std::pow(w, 4), std::pow(w, 2), w, w, std::pow(w, 2), std::pow(w, 4)});
    CHECK((x_from_c(cs, s7[0].c) - f7).cwiseAbs().maxCoeff() < 1e-12);
    // j = 2 values satisfy the printed degree-12 minimal polynomial.
    const RPoly mp{1, -12, 24, 4, -9, 27, -21, 27, -9, 4, 24, -12, 1};
    for (int i = 6; i < 12; ++i)
        for (int j = 0; j < 3; ++j) CHECK(std::abs(peval(to_complex(mp), s7[i].c(j))) < 1e-6);
    // The j = 2 matrices are not Fourier-equivalent.
    CHECK_FALSE(all_roots_of_unity(index3(7)[6], 7));

    for (int p : {7, 13, 19, 31, 37, 43}) {
        const auto Ms = index3(p);
        CHECK(Ms.size() == 12);
        for (const auto& M : Ms) CHECK(hadamard_ok(M, 1e-8));
        for (const auto& s : index3_solutions(p)) CHECK(s.residual < 1e-9);
    }
    CHECK_THROWS_AS(index3(11), DomainError);
}

TEST_CASE("index 4 symmetric") {
    const auto q = index4_params(17, 1);
    CHECK(q.A * 128 == doctest::Approx(17));
    CHECK(q.B * 128 == doctest::Approx(-1));
    CHECK(q.D == doctest::Approx(0));
    // The printed worked example lists C = 17/128; the general formula (and the Hadamard property) gives 17/16.
    CHECK(q.C * 16 == doctest::Approx(17));
    CHECK(index4_params(17, -1).B * 128 == doctest::Approx(1));

    for (int p : {17, 41, 73, 89, 97, 113}) {
        const auto sols = index4_symmetric_solutions(p);
        REQUIRE(sols.size() == 2);
        for (int i = 0; i < 2; ++i) {
            const auto& s = sols[i];
            CHECK(s.residual < 1e-9);
            CHECK(s.c(0).real() + s.c(1).real() == doctest::Approx(index4_params(p, i ? -1 : 1).zeta).epsilon(1e-12));
            // closure under conjugation, reciprocal and shifts
            const Cosets cs = make_cosets(p, 4, s.g);
            for (int r = 0; r < 4; ++r) {
                CHECK(index_residual(cs, cyclic_shift(conj_vec(s.c), r)) < 1e-9);
                CHECK(index_residual(cs, cyclic_shift(recip_vec(s.c), r)) < 1e-9);
            }
        }
        for (const auto& M : index4_symmetric(p)) {
            CHECK(hadamard_ok(M, 1e-8));
            CHECK((M - M.transpose()).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
    // p = 17: the printed circulant row and distinct fingerprints.
    const auto s17 = index4_symmetric_solutions(17);
    const cplx c0 = s17[0].c(0), c1 = s17[0].c(1), c2 = s17[0].c(2), c3 = s17[0].c(3);
    const CVec row = cv({1.0, c0, c2, c1, c0, c1, c3, c3, c2, c2, c3, c3, c1, c0, c1, c2, c0});
    CHECK((x_from_c(make_cosets(17, 4, 3), s17[0].c) - row).cwiseAbs().maxCoeff() < 1e-14);
    const double re0 = (-1 + std::sqrt(17.0)) / 16 + std::sqrt(17.0 / 128 - std::sqrt(17.0) / 128) - std::sqrt(17.0 / 16);
    CHECK(c0.real() == doctest::Approx(re0).epsilon(1e-13));
    const auto M17 = index4_symmetric(17);
    CHECK_FALSE(fingerprint(M17[0], 3).same_as(fingerprint(M17[1], 3)));
    CHECK_THROWS_AS(index4_symmetric(13), DomainError);
}

TEST_CASE("lifting formula") {
    auto chk = [](cplx h) {
        auto [x1, x2] = lift(h);
        CHECK(std::abs(x1 * x2 - 1.0) < 1e-12);
        CHECK(std::abs(x1 + 1.0 / x1 - h) < 1e-12 * (1 + std::abs(h)));
        CHECK(std::abs(x2 + 1.0 / x2 - h) < 1e-12 * (1 + std::abs(h)));
    };
    auto [a1, a2] = lift(2.0);
    CHECK(std::abs(a1 - 1.0) < 1e-12);
    CHECK(std::abs(a2 - 1.0) < 1e-12);
    auto [b1, b2] = lift(0.0);
    CHECK(std::abs(b1 - I1) < 1e-12);
    CHECK(std::abs(b2 + I1) < 1e-12);
    auto [c1, c2] = lift(3.0);
    CHECK(std::abs(c1 - (3 + std::sqrt(5.0)) / 2) < 1e-12);
    CHECK(std::abs(c2 - (3 - std::sqrt(5.0)) / 2) < 1e-12);
    for (cplx h : {cplx(1.3, 0), cplx(-5, 0), cplx(0, 2.5), cplx(0, -0.7), cplx(1, 1), cplx(-2, 3), cplx(4, -0.1),
                   cplx(-0.3, -6), cplx(7.8, 2.2)})
        chk(h);
}

TEST_CASE("index 4, p = 17: all 70 solutions") {
    const SolutionSet set = index4_p17_all();
    CHECK(set.sols.size() == 70);
    CHECK(set.count("real") == 26);
    CHECK(set.count("unimodular") == 28);
    CHECK(set.count("complex") == 16);
    CHECK(set.max_residual() < 1e-8);
    // pairwise distinct
    int dup = 0;
    for (size_t i = 0; i < set.sols.size(); ++i)
        for (size_t j = i + 1; j < set.sols.size(); ++j)
            if ((set.sols[i].c - set.sols[j].c).cwiseAbs().maxCoeff() < 1e-6) ++dup;
    CHECK(dup == 0);
    // closed under conjugation and reciprocal
    for (const auto& s : set.sols)
        for (const CVec& t : {conj_vec(s.c), recip_vec(s.c)}) {
            bool found = false;
            for (const auto& u : set.sols) found = found || (u.c - t).cwiseAbs().maxCoeff() < 1e-7;
            CHECK(found);
        }
    const Cosets cs = make_cosets(17, 4, 3);
    for (const auto& s : set.sols)
        if (s.tag == "unimodular") CHECK(hadamard_ok(circulant(x_from_c(cs, s.c)), 1e-8));
    // the symmetric formula's outputs are among the V3V4 unimodular solutions
    for (const auto& s : index4_symmetric_solutions(17)) {
        bool found = false;
        for (size_t i = 0; i < set.sols.size(); ++i)
            found = found || (set.source[i] == "V3V4" && (set.sols[i].c - s.c).cwiseAbs().maxCoeff() < 1e-10);
        CHECK(found);
    }
    // source counts
    int v6u = 0;
    for (size_t i = 0; i < set.sols.size(); ++i) v6u += set.source[i] == "V6" && set.sols[i].tag == "unimodular";
    CHECK(v6u == 16);
}

TEST_CASE("circulant core: lifting from quotients") {
    const CMat F7 = fourier(7);
    CVec x(6);
    for (int i = 0; i < 6; ++i) x(i) = root_of_unity(static_cast<int>(powmod(3, i, 7)), 7);
    const CoreSolution s = core_x_from_z(z_from_x(x));
    CHECK(s.residual < 1e-12);
    CHECK(hadamard_ok(s.bordered, 1e-10));
    CHECK(are_equivalent(s.bordered, F7).verdict == Verdict::Equivalent);

    for (const auto& c : core_index2(5)) {
        const CVec zz = z_from_x(c.x);
        const CoreSolution t = core_x_from_z(zz);
        CHECK((t.x - c.x).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(hadamard_ok(t.bordered, 1e-10));
    }
    CVec zr(5);
    for (int i = 0; i < 5; ++i) zr(i) = std::polar(1.0, 0.37 * i * i + 0.2);
    CHECK_THROWS_AS(core_x_from_z(zr), DomainError);
}

TEST_CASE("circulant core: index 2 and 4") {
    const auto c5 = core_index2(5);
    REQUIRE(c5.size() == 4);
    for (const auto& c : c5) CHECK(hadamard_ok(c.bordered, 1e-10));
    const CMat S6 = construct({"S6", {}});
    const CMat D6 = construct({"D6_1", {1.0}});
    CHECK(are_equivalent(c5[0].bordered, D6).verdict == Verdict::Equivalent);
    CHECK(are_equivalent(c5[2].bordered, S6).verdict == Verdict::Equivalent);
    for (int p : {13, 17, 29, 37}) {
        for (const auto& c : core_index2(p)) {
            CHECK(c.residual < 1e-9);
            CHECK(hadamard_ok(c.bordered, 1e-8));
        }
    }
    CHECK_THROWS_AS(core_index2(7), DomainError);

    for (int p : {17, 41, 73, 89, 97}) {
        for (const auto& c : core_index4_a(p)) {
            CHECK(hadamard_ok(c.bordered, 1e-8));
            CHECK(c.x(0).imag() == doctest::Approx(0).epsilon(1e-12));
        }
        for (const auto& c : core_index4_b(p)) CHECK(hadamard_ok(c.bordered, 1e-8));
        auto [A, B] = core_index4_b_AB(p);
        const double P = p;
        CHECK(std::pow(P - 1, 4) * (A * A - B) == doctest::Approx((P + 1) * (P + 1) * (P - 3) * (P - 3)).epsilon(1e-9));
    }
    CHECK_THROWS_AS(core_index4_a(13), DomainError);
}

TEST_CASE("Q7") {
    const Q7Data d = q7_data();
    CHECK(q7_alpha_cubic_residual(d.alpha) < 1e-4);
    CHECK(d.roots.size() == 6);
    CHECK(std::is_sorted(d.roots.begin(), d.roots.end()));
    CHECK(hadamard_ok(d.H, 1e-8));
    CHECK(gram_defect(d.H) < 1e-8);
    CHECK(d.x(0).real() == doctest::Approx(-0.843295).epsilon(1e-5));
    CHECK_FALSE(all_roots_of_unity(d.H, 60));
    CHECK(approx_equal(q7(), d.H, 0.0));
    CHECK(are_equivalent(d.H, fourier(7)).verdict != Verdict::Equivalent);
}

TEST_CASE("Q11") {
    const auto ds = q11_data();
    REQUIRE(ds.size() == 2);
    for (const auto& d : ds) {
        CHECK(hadamard_ok(d.H, 1e-8));
        const CMat core = d.H.block(1, 1, 10, 10);
        CHECK((core - core.transpose()).cwiseAbs().maxCoeff() < 1e-12);
        CHECK(std::abs(d.b + d.c - d.sigma) < 1e-12);
    }
    CHECK_FALSE(fingerprint(ds[0].H, 3).same_as(fingerprint(ds[1].H, 3)));
    for (const auto& d : q11_data(true)) CHECK(hadamard_ok(d.H, 1e-8));
    const auto again = q11();
    CHECK(approx_equal(again[0], ds[0].H, 0.0));
}

TEST_CASE("palindromic transform on order-7 factors") {
    const RPoly g7a{2, 2, 2, -5, 2, 2, 2};
    const RPoly T = palindromic_transform(g7a);
    CHECK(T.size() == 4);
    int in = 0;
    for (double r : real_roots(T)) in += std::abs(r) <= 2;
    CHECK(in >= 1);
    const RPoly t1 = palindromic_transform({1, 1, 1});
    CHECK(t1 == RPoly{1, 1});
    const RPoly t2 = palindromic_transform({1, -3, 1});
    CHECK(real_roots(t2).size() == 1);
    CHECK(real_roots(t2)[0] == doctest::Approx(3));
}
