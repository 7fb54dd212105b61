#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

#include "hadlab/catalog.hpp"
#include "hadlab/feasibility.hpp"
#include "hadlab/numtheory.hpp"

using namespace hadlab;

namespace {

// Exhaustive: some multiset of n q-th roots of unity sums to zero.
bool vanishing_sum_exists(int n, int q) {
    std::vector<int> cnt(q, 0);
    std::function<bool(int, int)> rec = [&](int k, int left) -> bool {
        if (k == q - 1) {
            cnt[k] = left;
            cplx s = 0;
            for (int j = 0; j < q; ++j) s += double(cnt[j]) * root_of_unity(j, q);
            return std::abs(s) < 1e-9;
        }
        for (int c = 0; c <= left; ++c) {
            cnt[k] = c;
            if (rec(k + 1, left - c)) return true;
        }
        return false;
    };
    return rec(0, n);
}

bool has(const FeasibilityVerdict& v, const std::string& r) {
    return std::find(v.reasons.begin(), v.reasons.end(), r) != v.reasons.end();
}

}  // namespace

TEST_CASE("Lam-Leung") {
    CHECK_FALSE(lam_leung(5, 4));
    CHECK(lam_leung(5, 6));
    CHECK(lam_leung(7, 7));
    CHECK_FALSE(lam_leung(1, 6));
    for (int q = 2; q <= 6; ++q)
        for (int n = 1; n <= 8; ++n) CHECK_MESSAGE(lam_leung(n, q) == vanishing_sum_exists(n, q), "n=" << n << " q=" << q);
}

TEST_CASE("BH(n,6) odd-order table") {
    for (int n : {5, 11, 15, 17, 23, 29, 33, 35}) {
        const auto v = bh6_tests(n);
        CHECK_MESSAGE(v.infeasible, "n=" << n);
        CHECK(!v.reasons.empty());
    }
    for (int n : {1, 3, 7, 9, 13, 19, 21, 25, 27, 37, 39}) CHECK_MESSAGE(!bh6_tests(n).infeasible, "n=" << n);
    CHECK(has(bh6_tests(5), "winterhof"));
    CHECK(has(bh6_tests(5), "det-mod3"));
    CHECK(bh6_tests(5).verdict() == "infeasible");
    CHECK(bh6_tests(9).verdict() == "no-obstruction");
}

TEST_CASE("BN tests") {
    CHECK(has(bn_tests(5, 3), "bn-part1"));
    CHECK(has(bn_tests(5, 6), "bn-part3"));
    CHECK_FALSE(bn_tests(12, 3).infeasible);
    CHECK_FALSE(bn_tests(28, 7).infeasible);
    CHECK_FALSE(bn_tests(7, 7).infeasible);
    CHECK(bh_feasible(5, 4).infeasible);
    CHECK(has(bh_feasible(5, 4), "lam-leung"));
}

TEST_CASE("Petrescu column") {
    for (int n : {1, 7, 19, 25, 37}) CHECK_MESSAGE(!petrescu_feasible(n).infeasible, "n=" << n);
    const auto v13 = petrescu_feasible(13), v31 = petrescu_feasible(31);
    CHECK(v13.infeasible);
    CHECK(has(v13, "petrescu-no-T"));
    CHECK(v31.infeasible);
    CHECK(has(v31, "petrescu-no-T"));
    CHECK(has(petrescu_feasible(10), "petrescu-det-D"));
    CHECK_THROWS_AS(petrescu_feasible(12), DomainError);
}

TEST_CASE("squarefree part matches a sieve oracle") {
    const int N = 1000000;
    std::vector<int> spf(N + 1, 0);
    for (int i = 2; i <= N; ++i)
        if (!spf[i])
            for (int j = i; j <= N; j += i)
                if (!spf[j]) spf[j] = i;
    for (int n = 1; n <= N; ++n) {
        long long r = 1;
        int m = n;
        while (m > 1) {
            const int p = spf[m];
            int e = 0;
            while (m % p == 0) m /= p, ++e;
            if (e % 2) r *= p;
        }
        if (static_cast<long long>(squarefree_part(n)) != r) {
            FAIL("mismatch at n=" << n);
            break;
        }
    }
}

TEST_CASE("catalog Butson families are not obstructed") {
    std::mt19937_64 rng(7);
    for (const auto& f : family_list()) {
        if (f.butson_q == 0) continue;
        const CMat H = construct(random_point(f.id, rng));
        const auto v = bh_feasible(static_cast<int>(H.rows()), f.butson_q);
        CHECK_MESSAGE(!v.infeasible, f.id);
    }
    CHECK_FALSE(petrescu_feasible(7).infeasible);    // P7
    CHECK_FALSE(petrescu_feasible(19).infeasible);   // W19
}
