#pragma once

// Integer and modular arithmetic on 64-bit values. Products are formed in
// 128-bit intermediates, so every modulus below 2^63 is safe.

#include <cstdint>
#include <utility>
#include <vector>

namespace neumaier::arith {

using u64 = std::uint64_t;
using i64 = std::int64_t;

struct PrimePower {
  u64 prime;
  unsigned exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

inline constexpr u64 kMaxFactorizable = (u64{1} << 63) - 1;

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);
/// Residue of a signed value in [0, m).
u64 mod(i64 a, u64 m);
/// Inverse of a modulo m. Throws InputError when gcd(a, m) != 1.
u64 inv_mod(u64 a, u64 m);

/// Combines x = r1 (mod m1), x = r2 (mod m2) for coprime m1, m2 into the
/// unique residue modulo m1*m2.
u64 crt(u64 r1, u64 m1, u64 r2, u64 m2);

/// Deterministic Miller-Rabin over the whole 64-bit range.
bool is_prime(u64 n);

/// Sorted prime factors with multiplicity. Requires 2 <= n <= 2^63 - 1.
std::vector<u64> factorize(u64 n);
/// Same factorization grouped into prime powers.
std::vector<PrimePower> factor_powers(u64 n);

u64 euler_phi(u64 n);
/// Order of a in (Z/mZ)*. Throws InputError when a is not a unit.
u64 multiplicative_order(u64 a, u64 m);

/// True iff g generates (Z/pZ)* for the prime p.
bool is_generator(u64 g, u64 p);
u64 smallest_generator(u64 p);

unsigned two_adic_valuation(u64 n);
u64 isqrt(u64 n);
bool is_square(u64 n);

/// Legendre symbol (a/p) for an odd prime p, in {-1, 0, 1}.
int legendre(i64 a, u64 p);

/// Primes in [2, limit] in increasing order.
std::vector<u64> primes_up_to(u64 limit);

}  // namespace neumaier::arith
