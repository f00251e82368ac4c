#pragma once

// Gaussian and Eisenstein integers, prime scans inside a congruence class,
// and the assembly of (p, a) from a prime element: a generator alpha of
// (Z/pZ)* matching the normalization of the prime, glued by CRT to a fixed
// beta mod q. Also the conic solver that produces suitable classes for
// general q.

#include <cstdint>
#include <string>
#include <vector>

namespace neumaier::quadratic {

using u64 = std::uint64_t;
using i64 = std::int64_t;

enum class Ring { Gaussian, Eisenstein };

/// c + d*i (Gaussian) or c + d*zeta with zeta^2 = zeta - 1 (Eisenstein).
struct QuadraticRingElt {
  Ring ring = Ring::Gaussian;
  i64 c = 0;
  i64 d = 0;

  /// c^2 + d^2 or c^2 + cd + d^2 (InputError on overflow).
  u64 norm() const;
  std::string to_string() const;
  friend bool operator==(const QuadraticRingElt&, const QuadraticRingElt&) = default;
};

QuadraticRingElt operator*(const QuadraticRingElt& a, const QuadraticRingElt& b);

/// Parses "c+d", "c-d", "c+di", "c+dz" forms such as "5+6i" or "3+10z".
QuadraticRingElt parse_element(Ring ring, const std::string& text);

struct ScanHit {
  QuadraticRingElt pi;
  u64 p;
};

/// Every pi = c + d w with c = z.c, d = z.d (mod modulus) and prime norm
/// <= norm_max, ordered by (norm, c, d). Throws InputError when
/// gcd(norm(z), modulus) != 1.
std::vector<ScanHit> scan_quadratic_primes(Ring ring, const QuadraticRingElt& z, u64 modulus, u64 norm_max);

struct Assembly {
  u64 p = 0;
  u64 q = 0;
  u64 alpha = 0;
  u64 beta = 0;
  u64 a = 0;
  /// Smallest generator of <a> in (Z/pqZ)*.
  u64 a_canonical = 0;
  i64 x = 0;
  i64 y = 0;
  std::size_t predicted = 0;
  std::string branch;
};

/// q = 5, beta = 2: p = norm(pi), x = c, y = d, alpha the smallest generator
/// with y = x alpha^((p-1)/4) (mod p). InputError if pi is not a Gaussian
/// element with prime norm p = 5 (mod 8), x = 1 (mod 4), y even; InvariantError
/// if the predicted count is not -2 (mod 5).
Assembly assemble_from_gaussian(const QuadraticRingElt& pi);

/// beta = 3 for q = 7, otherwise the smallest root of X^2 - X + 1 mod q.
/// x = c + d/2, y = d/2, alpha the smallest generator with
/// 3y = (2 alpha^((p-1)/3) + 1) x (mod p).
Assembly assemble_from_eisenstein(const QuadraticRingElt& pi, u64 q);

/// Smallest root of X^2 - X + 1 modulo q; InputError if there is none.
u64 sixth_root_beta(u64 q);

struct ConicSolution {
  u64 q = 0;
  /// Residues modulo 12q.
  u64 z1 = 0;
  u64 z2 = 0;
};

struct ConicCheck {
  bool parity = false;      // z1 odd, z2 = 2 (mod 4)
  bool mod_three = false;   // z1 + z2/2 = -1, z2/2 = 0 (mod 3)
  bool coprime = false;     // gcd(z1^2 + z1 z2 + z2^2, 12q) = 1
  bool target = false;      // (2N + 2 + 4 z1 + 2 z2)/36 = -2 (mod q)
  bool all() const { return parity && mod_three && coprime && target; }
};

ConicCheck check_conic_solution(u64 q, i64 z1, i64 z2);

/// Lexicographically first point of Z1^2 + Z1 Z2 + Z2^2 + 2 Z1 + Z2 + 37 = 0
/// over F_l off the line 2 Z1 + Z2 + 37 = 0, Hensel-lifted to each l^e || q,
/// CRT-combined, then fixed to z1 = 5, z2 = 6 (mod 12). Throws InputError
/// when q has a prime factor not = 1 (mod 6); InvariantError if the result
/// fails check_conic_solution.
ConicSolution conic_solve(u64 q);

}  // namespace neumaier::quadratic
