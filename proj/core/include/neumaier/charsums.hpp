#pragma once

// Multiplicative characters mod p, Jacobi sums in Z[zeta_n], and the several
// ways of computing |S ∩ (S+1)| for S = S_pq(a): direct counting, the
// Jacobi-sum formula, and closed forms in terms of p = x^2 + y^2 or
// p = x^2 + 3y^2.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "neumaier/cayley.hpp"
#include "neumaier/cyclotomic.hpp"

namespace neumaier::charsums {

using u64 = std::uint64_t;
using i64 = std::int64_t;
using cyclo::CyclotomicInt;

/// Characters of order n mod p built from the generator g:
/// chi(g^m) = zeta_n^m, chi(0) = 0 for nontrivial powers, chi^0(0) = 1.
class CharContext {
 public:
  /// Requires p prime, n | p-1 and g a generator mod p (InputError otherwise).
  CharContext(u64 p, unsigned n, u64 g);

  u64 p() const { return p_; }
  unsigned n() const { return n_; }
  u64 g() const { return g_; }
  /// Discrete log of c != 0 (mod p) to base g, in [0, p-1).
  u64 dlog(u64 c) const;

 private:
  u64 p_;
  unsigned n_;
  u64 g_;
  std::vector<std::uint32_t> dlog_;
};

/// J(chi^i, chi^j) = sum_{c+d=1} chi^i(c) chi^j(d) by direct O(p) summation.
CyclotomicInt jacobi_sum(const CharContext& ctx, unsigned i, unsigned j);

/// All J(chi^i, chi^j) for 0 <= i, j < n from one O(p) pass: the counts
/// H[u][w] = #{c != 0, 1 : dlog(c) = u, dlog(1-c) = w (mod n)}.
class JacobiTable {
 public:
  explicit JacobiTable(const CharContext& ctx);
  CyclotomicInt operator()(unsigned i, unsigned j) const;
  unsigned n() const { return n_; }

 private:
  unsigned n_;
  std::vector<u64> hist_;
};

std::size_t count_direct(u64 p, u64 q, u64 a);

/// The subgroup <beta> of (Z/qZ)*, beta = a mod q, and the set
/// B = {b in <beta> : b - 1 in <beta>}, with psi(beta^m) = zeta_n^m.
struct BetaData {
  u64 q = 0;
  u64 beta = 0;
  unsigned n = 0;
  std::vector<u64> B;
  /// psi exponent of every element of <beta>, indexed by residue (-1 if absent).
  std::vector<i64> psi_exp;
};

BetaData beta_data(u64 q, u64 beta);

/// Evaluates the Jacobi-sum formula exactly with generator g = a mod p.
/// Non-integral results raise InvariantError.
std::size_t count_jacobi(u64 p, u64 q, u64 a);

enum class Form { SumOfSquares, SumOfSquaresThree };

struct QuadDecomp {
  Form form;
  u64 p;
  i64 x;
  i64 y;
};

/// X^2+Y^2: p = x^2+y^2, x = -(2/p) (mod 4), y = x g^((p-1)/4) (mod p).
/// X^2+3Y^2: p = x^2+3y^2, x = -1 (mod 3), 3y = (2 g^((p-1)/3) + 1) x (mod p).
QuadDecomp quad_decomp(u64 p, Form form, u64 g);

struct Rsuv {
  i64 r, s, u, v;
  friend bool operator==(const Rsuv&, const Rsuv&) = default;
};

/// 4p = r^2 + 3s^2 = u^2 + 3v^2, split on y mod 3.
Rsuv rsuv_split(i64 x, i64 y);

/// 3(p + 1 + 2x + 4y)/16 for beta = 2, 3(p + 1 + 2x - 4y)/16 for beta = -2.
std::size_t closed_form_q5(u64 p, i64 x, i64 y, bool beta_is_two = true);
/// beta = 3 formula; beta = -2 uses the same with y -> -y.
std::size_t closed_form_q7(u64 p, i64 x, i64 y, bool beta_is_three = true);
/// beta^2 = beta - 1 with q > 7.
std::size_t closed_form_n6(u64 p, i64 x, i64 y);

struct ClosedCount {
  std::size_t value;
  /// empty-B, q3, q5-beta2, q5-beta-2, q7-beta3, q7-beta-2, n6.
  std::string branch;
};

/// The applicable closed form for the spec, or nullopt when none applies.
std::optional<ClosedCount> count_closed(u64 p, u64 q, u64 a);

struct Mod6 {
  int delta;
  int epsilon;
  int residue;
};

/// delta = [2 in S], epsilon = [some element of order 6 in S lies in S+1].
Mod6 mod6_predict(u64 p, u64 q, u64 a);

/// q has a Fermat prime factor >= 5 and a prime factor = 3 (mod 4).
bool fermat_vanishing(u64 q);

}  // namespace neumaier::charsums
