#include "neumaier/arith.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>
#include <tuple>

#include "neumaier/error.hpp"

namespace neumaier::arith {

namespace {

__extension__ typedef unsigned __int128 u128;

bool miller_rabin_witness(u64 n, u64 a, u64 d, unsigned s) {
  a %= n;
  if (a == 0) return false;
  u64 x = pow_mod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1;; ++c) {
    u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
    const u64 m = 128;
    u64 r = 1;
    auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(u64 n, std::vector<u64>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  const u64 d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 mod(i64 a, u64 m) {
  const i64 mm = static_cast<i64>(m);
  i64 r = a % mm;
  if (r < 0) r += mm;
  return static_cast<u64>(r);
}

u64 inv_mod(u64 a, u64 m) {
  i64 old_r = static_cast<i64>(a % m), r = static_cast<i64>(m);
  i64 old_s = 1, s = 0;
  while (r != 0) {
    const i64 quot = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - quot * r};
    std::tie(old_s, s) = std::pair{s, old_s - quot * s};
  }
  if (old_r != 1) {
    throw InputError(std::to_string(a) + " is not invertible modulo " + std::to_string(m));
  }
  return mod(old_s, m);
}

u64 crt(u64 r1, u64 m1, u64 r2, u64 m2) {
  if (std::gcd(m1, m2) != 1) throw InputError("crt: moduli must be coprime");
  // x = r1 + m1 * ((r2 - r1) * m1^{-1} mod m2)
  const u64 diff = (r2 % m2 + m2 - r1 % m2) % m2;
  const u64 k = mul_mod(diff, inv_mod(m1 % m2, m2), m2);
  return static_cast<u64>((static_cast<u128>(k) * m1 + r1 % m1) % (static_cast<u128>(m1) * m2));
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

std::vector<u64> factorize(u64 n) {
  if (n < 2) throw InputError("factorize: n must be at least 2");
  if (n > kMaxFactorizable) throw InputError("factorize: n exceeds 2^63 - 1");
  std::vector<u64> out;
  for (u64 p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      out.push_back(p);
      n /= p;
    }
  }
  factor_into(n, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PrimePower> factor_powers(u64 n) {
  std::vector<PrimePower> out;
  for (u64 p : factorize(n)) {
    if (!out.empty() && out.back().prime == p) {
      ++out.back().exponent;
    } else {
      out.push_back({p, 1});
    }
  }
  return out;
}

u64 euler_phi(u64 n) {
  if (n == 1) return 1;
  u64 phi = n;
  for (const auto& [p, e] : factor_powers(n)) phi = phi / p * (p - 1);
  return phi;
}

u64 multiplicative_order(u64 a, u64 m) {
  if (m == 1) return 1;
  if (std::gcd(a % m, m) != 1) {
    throw InputError(std::to_string(a) + " is not a unit modulo " + std::to_string(m));
  }
  u64 order = euler_phi(m);
  if (order == 1) return 1;
  for (const auto& [p, e] : factor_powers(order)) {
    for (unsigned i = 0; i < e && order % p == 0 && pow_mod(a, order / p, m) == 1; ++i) {
      order /= p;
    }
  }
  return order;
}

bool is_generator(u64 g, u64 p) {
  g %= p;
  if (g == 0) return false;
  if (p == 2) return g == 1;
  for (const auto& [f, e] : factor_powers(p - 1)) {
    if (pow_mod(g, (p - 1) / f, p) == 1) return false;
  }
  return true;
}

u64 smallest_generator(u64 p) {
  if (!is_prime(p)) throw InputError(std::to_string(p) + " is not prime");
  if (p == 2) return 1;
  const auto factors = factor_powers(p - 1);
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (const auto& [f, e] : factors) {
      if (pow_mod(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    }
    if (ok) return g;
  }
}

unsigned two_adic_valuation(u64 n) {
  if (n == 0) throw InputError("two_adic_valuation: n must be nonzero");
  return static_cast<unsigned>(__builtin_ctzll(n));
}

u64 isqrt(u64 n) {
  u64 r = static_cast<u64>(__builtin_sqrtl(static_cast<long double>(n)));
  while (r > 0 && static_cast<u128>(r) * r > n) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(u64 n) {
  const u64 r = isqrt(n);
  return r * r == n;
}

int legendre(i64 a, u64 p) {
  const u64 r = pow_mod(mod(a, p), (p - 1) / 2, p);
  if (r == 0) return 0;
  return r == 1 ? 1 : -1;
}

std::vector<u64> primes_up_to(u64 limit) {
  std::vector<u64> out;
  if (limit < 2) return out;
  std::vector<bool> composite(limit + 1, false);
  for (u64 i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return out;
}

}  // namespace neumaier::arith
