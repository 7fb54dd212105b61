#include "hadlab/numtheory.hpp"

#include <stdexcept>

namespace hadlab {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

long long mod(long long a, long long m) {
    long long r = a % m;
    return r < 0 ? r + m : r;
}

// deterministic Miller-Rabin for 64-bit inputs
bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, int>> f;
    for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        f.emplace_back(p, e);
    }
    if (n > 1) f.emplace_back(n, 1);
    return f;
}

std::uint64_t squarefree_part(std::uint64_t n) {
    std::uint64_t s = 1;
    for (auto [p, e] : factorize(n))
        if (e % 2) s *= p;
    return s;
}

bool is_primitive_root(std::uint64_t g, std::uint64_t p) {
    if (g % p == 0) return false;
    for (auto [q, e] : factorize(p - 1)) {
        (void)e;
        if (powmod(g, (p - 1) / q, p) == 1) return false;
    }
    return true;
}

std::vector<std::uint64_t> primitive_roots(std::uint64_t p) {
    std::vector<std::uint64_t> r;
    for (std::uint64_t g = 1; g < p; ++g)
        if (is_primitive_root(g, p)) r.push_back(g);
    return r;
}

std::uint64_t smallest_primitive_root(std::uint64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("not a prime");
    for (std::uint64_t g = 1; g < p; ++g)
        if (is_primitive_root(g, p)) return g;
    return 0;
}

int legendre(long long a, long long p) {
    long long r = static_cast<long long>(powmod(static_cast<std::uint64_t>(mod(a, p)), (p - 1) / 2, p));
    if (r == 0) return 0;
    return r == 1 ? 1 : -1;
}

std::vector<int> dlog_table(std::uint64_t g, std::uint64_t p) {
    std::vector<int> lg(p, -1);
    std::uint64_t x = 1;
    for (std::uint64_t k = 0; k + 1 < p; ++k) {
        lg[x] = static_cast<int>(k);
        x = mulmod(x, g, p);
    }
    return lg;
}

}  // namespace hadlab
