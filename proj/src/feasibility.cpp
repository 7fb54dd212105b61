#include "hadlab/feasibility.hpp"

#include <cstdint>

#include "hadlab/core.hpp"
#include "hadlab/numtheory.hpp"

namespace hadlab {

namespace {

void merge(FeasibilityVerdict& into, const FeasibilityVerdict& v) {
    for (const auto& r : v.reasons) into.reasons.push_back(r);
    into.infeasible = into.infeasible || v.infeasible;
}

void trigger(FeasibilityVerdict& v, const char* id) {
    v.infeasible = true;
    v.reasons.emplace_back(id);
}

// Squarefree part of prod b_i^e_i, from the factorizations of the bases.
std::uint64_t squarefree_of_power_product(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& terms) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> exps;   // prime, total exponent
    for (auto [b, e] : terms)
        for (auto [p, k] : factorize(b)) {
            bool found = false;
            for (auto& pe : exps)
                if (pe.first == p) pe.second += k * e, found = true;
            if (!found) exps.emplace_back(p, k * e);
        }
    std::uint64_t r = 1;
    for (auto [p, e] : exps)
        if (e % 2) r *= p;
    return r;
}

bool has_prime_5mod6(std::uint64_t m) {
    for (auto [p, e] : factorize(m))
        if (p % 6 == 5) return true;
    return false;
}

}  // namespace

bool lam_leung(int n, int q) {
    if (q < 2) throw DomainError("lam_leung: q must be at least 2");
    if (n < 0) return false;
    std::vector<char> ok(n + 1, 0);
    ok[0] = 1;
    for (auto [p, e] : factorize(q))
        for (int m = static_cast<int>(p); m <= n; ++m) ok[m] = ok[m] || ok[m - p];
    return ok[n];
}

FeasibilityVerdict bh6_tests(int n) {
    if (n < 1) throw DomainError("bh6_tests: n must be positive");
    FeasibilityVerdict v;
    if (n % 2 == 1 && has_prime_5mod6(squarefree_part(n))) trigger(v, "winterhof");
    // A^2 - AB + B^2 is never 2 mod 3; n^n = 2 mod 3 iff n = 2 mod 3 and n odd.
    if (n % 3 == 2 && n % 2 == 1) trigger(v, "det-mod3");
    return v;
}

FeasibilityVerdict bn_tests(int n, int q) {
    if (n < 1 || q < 2) throw DomainError("bn_tests: need n >= 1, q >= 2");
    FeasibilityVerdict v;
    const auto fq = factorize(q);
    if (fq.size() == 1 && n % static_cast<int>(fq[0].first) != 0) trigger(v, "bn-part1");
    // odd prime p = 3 mod 4 with q = p^a or 2 p^a
    std::uint64_t p = 0;
    if (fq.size() == 1 && fq[0].first % 4 == 3) p = fq[0].first;
    if (fq.size() == 2 && fq[0].first == 2 && fq[0].second == 1 && fq[1].first % 4 == 3) p = fq[1].first;
    if (p && n % 2 == 1) {
        std::uint64_t m = n;
        while (m % p == 0) m /= p;
        for (auto [l, e] : factorize(squarefree_part(m)))
            if (legendre(static_cast<long long>(l), static_cast<long long>(p)) == -1) {
                trigger(v, "bn-part3");
                break;
            }
    }
    return v;
}

FeasibilityVerdict bh_feasible(int n, int q) {
    FeasibilityVerdict v;
    if (n > 1 && !lam_leung(n, q)) trigger(v, "lam-leung");
    merge(v, bn_tests(n, q));
    if (q == 6) merge(v, bh6_tests(n));
    return v;
}

FeasibilityVerdict petrescu_feasible(int n, int q) {
    if (n < 1 || n % 3 != 1) throw DomainError("petrescu_feasible: n must be 3s+1");
    const int s = (n - 1) / 3;
    FeasibilityVerdict v;
    merge(v, bh_feasible(n, q));
    if (bh_feasible(s + 1, q).infeasible) trigger(v, "petrescu-no-T");
    if (q == 6 && s != 1) {
        const std::uint64_t sm1 = s == 0 ? 1 : static_cast<std::uint64_t>(s - 1);
        const std::uint64_t r = squarefree_of_power_product({{static_cast<std::uint64_t>(n), 1}, {sm1, static_cast<std::uint64_t>(s)}});
        if (r % 2 == 0 || has_prime_5mod6(r)) trigger(v, "petrescu-det-D");
    }
    return v;
}

}  // namespace hadlab
