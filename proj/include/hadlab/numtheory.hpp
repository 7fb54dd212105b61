#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace hadlab {

bool is_prime(std::uint64_t n);
// (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n);
std::uint64_t squarefree_part(std::uint64_t n);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
long long mod(long long a, long long m);

bool is_primitive_root(std::uint64_t g, std::uint64_t p);
std::vector<std::uint64_t> primitive_roots(std::uint64_t p);
std::uint64_t smallest_primitive_root(std::uint64_t p);

// Legendre symbol (a/p) for odd prime p: 1, -1 or 0.
int legendre(long long a, long long p);

// discrete log table: log[x] = k with g^k = x mod p, x in 1..p-1.
std::vector<int> dlog_table(std::uint64_t g, std::uint64_t p);

}  // namespace hadlab
