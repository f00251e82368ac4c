#include "neumaier/quadratic.hpp"

#include <algorithm>
#include <numeric>
#include <regex>
#include <tuple>

#include "neumaier/arith.hpp"
#include "neumaier/cayley.hpp"
#include "neumaier/charsums.hpp"
#include "neumaier/error.hpp"
#include "neumaier/search.hpp"

namespace neumaier::quadratic {

namespace {

__extension__ typedef __int128 i128;
using arith::mod;
using arith::mul_mod;
using arith::pow_mod;

i64 floor_mod(i128 a, i64 m) {
  const i128 r = a % m;
  return static_cast<i64>(r < 0 ? r + m : r);
}

i64 narrow(i128 v) {
  if (v > INT64_MAX || v < INT64_MIN) throw InputError("quadratic ring arithmetic overflow");
  return static_cast<i64>(v);
}

// First integer t >= 0 congruent to r mod m, shifted down to the smallest
// value >= lo.
i64 first_in_class(i64 r, i64 m, i64 lo) {
  const i64 base = floor_mod(static_cast<i128>(r) - lo, m);
  return lo + base;
}

i128 conic_value(i128 z1, i128 z2) { return z1 * z1 + z1 * z2 + z2 * z2 + 2 * z1 + z2 + 37; }

// Smallest generator g of (Z/pZ)* accepted by pred.
template <typename Pred>
u64 find_generator(u64 p, Pred pred) {
  const auto factors = arith::factor_powers(p - 1);
  for (u64 g = 2; g < p; ++g) {
    bool gen = true;
    for (const auto& [f, e] : factors) {
      if (pow_mod(g, (p - 1) / f, p) == 1) {
        gen = false;
        break;
      }
    }
    if (gen && pred(g)) return g;
  }
  throw InvariantError("no generator of (Z/" + std::to_string(p) + "Z)* satisfies the normalization");
}

// Solution of the conic modulo l^e lifted from the first good point mod l.
std::pair<u64, u64> conic_point(u64 l, unsigned e) {
  const i64 L = static_cast<i64>(l);
  for (i64 a = 0; a < L; ++a) {
    for (i64 b = 0; b < L; ++b) {
      if (floor_mod(conic_value(a, b), L) != 0) continue;
      if (floor_mod(2 * a + b + 37, L) == 0) continue;
      if (floor_mod(static_cast<i128>(a) * a + static_cast<i128>(a) * b + static_cast<i128>(b) * b, L) == 0) continue;
      const bool d1 = floor_mod(2 * a + b + 2, L) != 0;
      const bool d2 = floor_mod(a + 2 * b + 1, L) != 0;
      if (!d1 && !d2) continue;
      u64 m = 1;
      for (unsigned i = 0; i < e; ++i) m *= l;
      const i64 M = static_cast<i64>(m);
      i64 z1 = a, z2 = b;
      // Newton iteration in the variable with a unit partial derivative.
      for (int iter = 0; iter < 128 && floor_mod(conic_value(z1, z2), M) != 0; ++iter) {
        const i64 f = floor_mod(conic_value(z1, z2), M);
        if (d1) {
          const u64 inv = arith::inv_mod(static_cast<u64>(floor_mod(2 * static_cast<i128>(z1) + z2 + 2, M)), m);
          z1 = floor_mod(z1 - static_cast<i128>(mul_mod(static_cast<u64>(f), inv, m)), M);
        } else {
          const u64 inv = arith::inv_mod(static_cast<u64>(floor_mod(static_cast<i128>(z1) + 2 * z2 + 1, M)), m);
          z2 = floor_mod(z2 - static_cast<i128>(mul_mod(static_cast<u64>(f), inv, m)), M);
        }
      }
      if (floor_mod(conic_value(z1, z2), M) != 0) throw InvariantError("conic_solve: Hensel lifting failed");
      return {static_cast<u64>(z1), static_cast<u64>(z2)};
    }
  }
  throw InvariantError("conic_solve: no point over F_" + std::to_string(l));
}

}  // namespace

u64 QuadraticRingElt::norm() const {
  const i128 c2 = static_cast<i128>(c) * c, d2 = static_cast<i128>(d) * d;
  const i128 n = ring == Ring::Gaussian ? c2 + d2 : c2 + static_cast<i128>(c) * d + d2;
  if (n < 0 || n > static_cast<i128>(INT64_MAX)) throw InputError("norm overflow");
  return static_cast<u64>(n);
}

std::string QuadraticRingElt::to_string() const {
  const char* unit = ring == Ring::Gaussian ? "i" : "z";
  return std::to_string(c) + (d < 0 ? "-" : "+") + std::to_string(d < 0 ? -d : d) + unit;
}

QuadraticRingElt operator*(const QuadraticRingElt& a, const QuadraticRingElt& b) {
  if (a.ring != b.ring) throw InputError("cannot multiply elements of different rings");
  const i128 ac = static_cast<i128>(a.c) * b.c, bd = static_cast<i128>(a.d) * b.d;
  const i128 cross = static_cast<i128>(a.c) * b.d + static_cast<i128>(a.d) * b.c;
  if (a.ring == Ring::Gaussian) return {a.ring, narrow(ac - bd), narrow(cross)};
  // zeta^2 = zeta - 1.
  return {a.ring, narrow(ac - bd), narrow(cross + bd)};
}

QuadraticRingElt parse_element(Ring ring, const std::string& text) {
  static const std::regex pattern(R"(^\s*([+-]?\d+)\s*(?:([+-])\s*(\d+)\s*([a-zA-Z]?)|,\s*([+-]?\d+))\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) {
    throw InputError("cannot parse ring element '" + text + "' (expected e.g. 5+6i or 3+10z)");
  }
  try {
    const i64 c = std::stoll(m[1].str());
    i64 d = 0;
    const std::string unit = m[4].str();
    const bool unit_ok = unit.empty() || (ring == Ring::Gaussian ? unit == "i" : unit == "z" || unit == "w");
    if (!unit_ok) throw InputError("ring element '" + text + "' uses unit '" + unit + "' from the wrong ring");
    if (m[5].matched) {
      d = std::stoll(m[5].str());
    } else {
      d = std::stoll(m[3].str());
      if (m[2].str() == "-") d = -d;
    }
    return {ring, c, d};
  } catch (const std::out_of_range&) {
    throw InputError("ring element '" + text + "' out of range");
  }
}

std::vector<ScanHit> scan_quadratic_primes(Ring ring, const QuadraticRingElt& z, u64 modulus, u64 norm_max) {
  if (modulus == 0) throw InputError("scan: modulus must be positive");
  if (modulus > (u64{1} << 31)) throw InputError("scan: modulus too large");
  if (std::gcd(z.norm(), modulus) != 1) {
    throw InputError("scan: class " + z.to_string() + " is not coprime to " + std::to_string(modulus));
  }
  if (norm_max > (u64{1} << 62)) throw InputError("scan: norm bound too large");
  const i64 m = static_cast<i64>(modulus);
  // |c|, |d| <= sqrt(N) for x^2 + y^2; <= 2 sqrt(N/3) for x^2 + xy + y^2.
  const i64 bound = ring == Ring::Gaussian ? static_cast<i64>(arith::isqrt(norm_max))
                                           : static_cast<i64>(arith::isqrt(4 * norm_max / 3)) + 1;
  std::vector<ScanHit> hits;
  for (i64 d = first_in_class(z.d, m, -bound); d <= bound; d += m) {
    for (i64 c = first_in_class(z.c, m, -bound); c <= bound; c += m) {
      const QuadraticRingElt pi{ring, c, d};
      const u64 n = pi.norm();
      if (n <= norm_max && arith::is_prime(n)) hits.push_back({pi, n});
    }
  }
  std::sort(hits.begin(), hits.end(), [](const ScanHit& a, const ScanHit& b) {
    return std::tie(a.p, a.pi.c, a.pi.d) < std::tie(b.p, b.pi.c, b.pi.d);
  });
  return hits;
}

Assembly assemble_from_gaussian(const QuadraticRingElt& pi) {
  if (pi.ring != Ring::Gaussian) throw InputError("assemble_from_gaussian: element is not Gaussian");
  const u64 p = pi.norm();
  if (!arith::is_prime(p)) throw InputError("assemble_from_gaussian: norm " + std::to_string(p) + " is not prime");
  if (p % 8 != 5) throw InputError("assemble_from_gaussian: need p = 5 (mod 8)");
  if (floor_mod(pi.c, 4) != 1 || floor_mod(pi.d, 2) != 0) {
    throw InputError("assemble_from_gaussian: need c = 1 (mod 4) and d even");
  }
  Assembly out;
  out.p = p;
  out.q = 5;
  out.x = pi.c;
  out.y = pi.d;
  out.beta = 2;
  const u64 xm = mod(out.x, p), ym = mod(out.y, p);
  out.alpha = find_generator(p, [&](u64 g) { return ym == mul_mod(xm, pow_mod(g, (p - 1) / 4, p), p); });
  out.a = arith::crt(out.alpha, p, out.beta, out.q);
  cayley::validate({p, out.q, out.a});
  out.a_canonical = search::canonical_a(out.a, p * out.q);
  out.predicted = charsums::closed_form_q5(p, out.x, out.y, true);
  out.branch = "q5-beta2";
  if ((out.predicted + 2) % out.q != 0) {
    throw InvariantError("assemble_from_gaussian: predicted count " + std::to_string(out.predicted) +
                         " is not -2 (mod 5)");
  }
  return out;
}

u64 sixth_root_beta(u64 q) {
  for (u64 b = 1; b < q; ++b) {
    if ((mul_mod(b, b, q) + 1) % q == b % q) return b;
  }
  throw InputError("no root of X^2 - X + 1 modulo " + std::to_string(q));
}

Assembly assemble_from_eisenstein(const QuadraticRingElt& pi, u64 q) {
  if (pi.ring != Ring::Eisenstein) throw InputError("assemble_from_eisenstein: element is not Eisenstein");
  if (q < 7) throw InputError("assemble_from_eisenstein: q must be at least 7");
  for (const auto& [l, e] : arith::factor_powers(q)) {
    if (l % 6 != 1) throw InputError("assemble_from_eisenstein: prime factor " + std::to_string(l) + " of q is not 1 (mod 6)");
  }
  const u64 p = pi.norm();
  if (!arith::is_prime(p)) throw InputError("assemble_from_eisenstein: norm " + std::to_string(p) + " is not prime");
  if (floor_mod(pi.d, 2) != 0) throw InputError("assemble_from_eisenstein: d must be even");
  Assembly out;
  out.p = p;
  out.q = q;
  out.y = pi.d / 2;
  out.x = narrow(static_cast<i128>(pi.c) + out.y);
  if (floor_mod(out.x, 3) != 2) throw InputError("assemble_from_eisenstein: need x = c + d/2 = -1 (mod 3)");
  out.beta = q == 7 ? 3 : sixth_root_beta(q);
  const u64 xm = mod(out.x, p);
  const u64 three_y = mod(narrow(3 * static_cast<i128>(out.y)), p);
  out.alpha = find_generator(p, [&](u64 g) {
    const u64 w = pow_mod(g, (p - 1) / 3, p);
    return three_y == mul_mod((2 * w + 1) % p, xm, p);
  });
  out.a = arith::crt(out.alpha, p, out.beta, q);
  cayley::validate({p, q, out.a});
  out.a_canonical = search::canonical_a(out.a, p * q);
  if (q == 7) {
    out.predicted = charsums::closed_form_q7(p, out.x, out.y, true);
    out.branch = "q7-beta3";
  } else {
    out.predicted = charsums::closed_form_n6(p, out.x, out.y);
    out.branch = "n6";
  }
  if ((out.predicted + 2) % q != 0) {
    throw InvariantError("assemble_from_eisenstein: predicted count " + std::to_string(out.predicted) +
                         " is not -2 (mod " + std::to_string(q) + ")");
  }
  return out;
}

ConicCheck check_conic_solution(u64 q, i64 z1, i64 z2) {
  ConicCheck c;
  const i64 Q = static_cast<i64>(q);
  c.parity = floor_mod(z1, 2) == 1 && floor_mod(z2, 4) == 2;
  if (c.parity) {
    const i64 half = z2 / 2;
    c.mod_three = floor_mod(static_cast<i128>(z1) + half, 3) == 2 && floor_mod(half, 3) == 0;
  }
  const i128 n = static_cast<i128>(z1) * z1 + static_cast<i128>(z1) * z2 + static_cast<i128>(z2) * z2;
  c.coprime = std::gcd(static_cast<u64>(floor_mod(n, 12 * Q)), 12 * q) == 1;
  const i128 num = 2 * n + 2 + 4 * static_cast<i128>(z1) + 2 * static_cast<i128>(z2);
  c.target = num % 36 == 0 && floor_mod(num / 36, Q) == floor_mod(-2, Q);
  return c;
}

ConicSolution conic_solve(u64 q) {
  if (q < 7) throw InputError("conic_solve: q must be a product of primes = 1 (mod 6)");
  if (q > (u64{1} << 40)) throw InputError("conic_solve: q too large");
  u64 z1 = 0, z2 = 0, m = 1;
  for (const auto& [l, e] : arith::factor_powers(q)) {
    if (l % 6 != 1) throw InputError("conic_solve: prime factor " + std::to_string(l) + " is not 1 (mod 6)");
    const auto [a, b] = conic_point(l, e);
    u64 le = 1;
    for (unsigned i = 0; i < e; ++i) le *= l;
    z1 = arith::crt(z1, m, a, le);
    z2 = arith::crt(z2, m, b, le);
    m *= le;
  }
  ConicSolution out{q, arith::crt(z1, q, 5, 12), arith::crt(z2, q, 6, 12)};
  if (!check_conic_solution(q, static_cast<i64>(out.z1), static_cast<i64>(out.z2)).all()) {
    throw InvariantError("conic_solve: solution fails the required conditions");
  }
  return out;
}

}  // namespace neumaier::quadratic
