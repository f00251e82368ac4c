#include "neumaier/charsums.hpp"

#include <algorithm>
#include <numeric>

#include "neumaier/arith.hpp"
#include "neumaier/error.hpp"

namespace neumaier::charsums {

namespace {

using arith::mul_mod;
using arith::pow_mod;

i64 floor_mod(i64 a, i64 m) {
  const i64 r = a % m;
  return r < 0 ? r + m : r;
}

i64 checked_mul(i64 a, i64 b) {
  i64 r;
  if (__builtin_mul_overflow(a, b, &r)) throw InvariantError("closed form overflow");
  return r;
}

i64 checked_add(i64 a, i64 b) {
  i64 r;
  if (__builtin_add_overflow(a, b, &r)) throw InvariantError("closed form overflow");
  return r;
}

std::size_t exact_quotient(i64 num, i64 den, const char* what) {
  if (num < 0 || num % den != 0) {
    throw InputError(std::string(what) + ": numerator " + std::to_string(num) + " is not a non-negative multiple of " +
                     std::to_string(den) + " (check the normalization of x, y)");
  }
  return static_cast<std::size_t>(num / den);
}

i64 signed_p(u64 p) {
  if (p > static_cast<u64>(INT64_MAX / 64)) throw InputError("p too large for closed forms");
  return static_cast<i64>(p);
}

}  // namespace

CharContext::CharContext(u64 p, unsigned n, u64 g) : p_(p), n_(n), g_(g % p) {
  if (!arith::is_prime(p)) throw InputError("CharContext: " + std::to_string(p) + " is not prime");
  if (p > UINT32_MAX) throw InputError("CharContext: p must be below 2^32");
  if (n == 0 || (p - 1) % n != 0) throw InputError("CharContext: character order must divide p - 1");
  if (!arith::is_generator(g_, p)) throw InputError("CharContext: " + std::to_string(g) + " is not a generator");
  dlog_.assign(p, 0);
  u64 x = 1;
  for (u64 m = 0; m + 1 < p; ++m) {
    dlog_[x] = static_cast<std::uint32_t>(m);
    x = mul_mod(x, g_, p);
  }
}

u64 CharContext::dlog(u64 c) const {
  c %= p_;
  if (c == 0) throw InputError("dlog: zero has no discrete logarithm");
  return dlog_[c];
}

CyclotomicInt jacobi_sum(const CharContext& ctx, unsigned i, unsigned j) {
  const unsigned n = ctx.n();
  const u64 p = ctx.p();
  i %= n;
  j %= n;
  std::vector<i64> coeffs(n, 0);
  // c = 0 and c = 1: a nontrivial character vanishes at 0, the trivial one is 1.
  if (i == 0) ++coeffs[0];
  if (j == 0) ++coeffs[0];
  for (u64 c = 2; c < p; ++c) {
    const u64 e = (i * (ctx.dlog(c) % n) + j * (ctx.dlog(p + 1 - c) % n)) % n;
    ++coeffs[e];
  }
  return CyclotomicInt::from_coeffs(n, coeffs);
}

JacobiTable::JacobiTable(const CharContext& ctx) : n_(ctx.n()), hist_(static_cast<std::size_t>(n_) * n_, 0) {
  const u64 p = ctx.p();
  for (u64 c = 2; c < p; ++c) {
    ++hist_[(ctx.dlog(c) % n_) * n_ + ctx.dlog(p + 1 - c) % n_];
  }
}

CyclotomicInt JacobiTable::operator()(unsigned i, unsigned j) const {
  i %= n_;
  j %= n_;
  std::vector<i64> coeffs(n_, 0);
  if (i == 0) ++coeffs[0];
  if (j == 0) ++coeffs[0];
  for (unsigned u = 0; u < n_; ++u) {
    for (unsigned w = 0; w < n_; ++w) {
      coeffs[(static_cast<u64>(i) * u + static_cast<u64>(j) * w) % n_] += static_cast<i64>(hist_[u * n_ + w]);
    }
  }
  return CyclotomicInt::from_coeffs(n_, coeffs);
}

std::size_t count_direct(u64 p, u64 q, u64 a) {
  cayley::validate({p, q, a});
  return cayley::shift_intersection(cayley::gen_set(p * q, a));
}

BetaData beta_data(u64 q, u64 beta) {
  if (q < 3) throw InputError("beta_data: q must be at least 3");
  beta %= q;
  BetaData d;
  d.q = q;
  d.beta = beta;
  const u64 order = arith::multiplicative_order(beta, q);
  if (order % 2 != 0 || pow_mod(beta, order / 2, q) != q - 1) {
    throw InputError("beta_data: no power of beta = " + std::to_string(beta) + " equals -1 mod q");
  }
  d.n = static_cast<unsigned>(order);
  d.psi_exp.assign(q, -1);
  u64 x = 1;
  for (unsigned m = 0; m < d.n; ++m) {
    d.psi_exp[x] = m;
    x = mul_mod(x, beta, q);
  }
  for (u64 b = 0; b < q; ++b) {
    if (d.psi_exp[b] >= 0 && d.psi_exp[(b + q - 1) % q] >= 0) d.B.push_back(b);
  }
  return d;
}

std::size_t count_jacobi(u64 p, u64 q, u64 a) {
  cayley::validate({p, q, a});
  const BetaData bd = beta_data(q, a % q);
  if (bd.B.empty()) return 0;
  const unsigned n = bd.n;
  const CharContext ctx(p, n, a % p);
  const JacobiTable J(ctx);

  const i64 nb = static_cast<i64>(bd.B.size());
  // Twice the bracket of the formula: Re(z) is replaced by z + conj(z).
  CyclotomicInt total = CyclotomicInt::from_int(n, checked_mul(2 * nb, static_cast<i64>(p) + 1));
  for (unsigned i = 1; i < n; ++i) {
    for (unsigned j = i; i + j < n; ++j) {
      CyclotomicInt c(n);
      for (u64 b : bd.B) {
        const i64 e = -static_cast<i64>(i) * bd.psi_exp[b] - static_cast<i64>(j) * bd.psi_exp[(1 + q - b) % q];
        c += CyclotomicInt::root(n, e);
      }
      const CyclotomicInt z = c * J(i, j);
      total += (z + z.conj()) * (i == j ? 2 : 4);
    }
  }
  const auto value = total.as_integer();
  const i64 den = 2 * static_cast<i64>(n) * n;
  if (!value || *value < 0 || *value % den != 0) {
    throw InvariantError("count_jacobi: formula value " + total.to_string() + " is not a non-negative multiple of " +
                         std::to_string(den));
  }
  return static_cast<std::size_t>(*value / den);
}

QuadDecomp quad_decomp(u64 p, Form form, u64 g) {
  if (p < 5 || !arith::is_prime(p)) throw InputError("quad_decomp: p must be a prime >= 5");
  if (p > static_cast<u64>(INT64_MAX / 4)) throw InputError("quad_decomp: p too large");
  if (!arith::is_generator(g, p)) throw InputError("quad_decomp: g is not a generator mod p");
  if (form == Form::SumOfSquares) {
    if (p % 4 != 1) throw InputError("quad_decomp: x^2 + y^2 = p needs p = 1 (mod 4)");
    const u64 i_root = pow_mod(g, (p - 1) / 4, p);
    const i64 x_target = arith::legendre(2, static_cast<i64>(p)) == 1 ? 3 : 1;
    // y is the even part of the representation, x the odd part.
    for (u64 b = 2; b * b < p; b += 2) {
      if (!arith::is_square(p - b * b)) continue;
      i64 x = static_cast<i64>(arith::isqrt(p - b * b));
      if (floor_mod(x, 4) != x_target) x = -x;
      i64 y = static_cast<i64>(b);
      if (arith::mod(y, p) != mul_mod(arith::mod(x, p), i_root, p)) y = -y;
      if (arith::mod(y, p) != mul_mod(arith::mod(x, p), i_root, p)) {
        throw InvariantError("quad_decomp: no sign of y satisfies the congruence");
      }
      return {form, p, x, y};
    }
    throw InvariantError("quad_decomp: no representation found");
  }
  if (p % 3 != 1) throw InputError("quad_decomp: x^2 + 3y^2 = p needs p = 1 (mod 3)");
  const u64 w = pow_mod(g, (p - 1) / 3, p);
  for (u64 b = 1; 3 * b * b < p; ++b) {
    if (!arith::is_square(p - 3 * b * b)) continue;
    i64 x = static_cast<i64>(arith::isqrt(p - 3 * b * b));
    if (floor_mod(x, 3) != 2) x = -x;
    const u64 rhs = mul_mod((2 * w + 1) % p, arith::mod(x, p), p);
    i64 y = static_cast<i64>(b);
    if (arith::mod(3 * y, p) != rhs) y = -y;
    if (arith::mod(3 * y, p) != rhs) throw InvariantError("quad_decomp: no sign of y satisfies the congruence");
    return {form, p, x, y};
  }
  throw InvariantError("quad_decomp: no representation found");
}

Rsuv rsuv_split(i64 x, i64 y) {
  Rsuv out{};
  switch (floor_mod(y, 3)) {
    case 0:
      out = {2 * x, 2 * y, 2 * x, 2 * y};
      break;
    case 1:
      out = {-x + 3 * y, -x - y, -x - 3 * y, x - y};
      break;
    default:
      out = {-x - 3 * y, x - y, -x + 3 * y, -x - y};
      break;
  }
  const i64 four_p = 4 * (x * x + 3 * y * y);
  if (out.r * out.r + 3 * out.s * out.s != four_p || out.u * out.u + 3 * out.v * out.v != four_p) {
    throw InvariantError("rsuv_split: 4p = r^2 + 3s^2 = u^2 + 3v^2 fails");
  }
  return out;
}

std::size_t closed_form_q5(u64 p, i64 x, i64 y, bool beta_is_two) {
  const i64 sp = signed_p(p);
  const i64 num = checked_mul(3, checked_add(sp + 1 + 2 * x, (beta_is_two ? 4 : -4) * y));
  return exact_quotient(num, 16, "closed_form_q5");
}

std::size_t closed_form_q7(u64 p, i64 x, i64 y, bool beta_is_three) {
  const i64 sp = signed_p(p);
  if (!beta_is_three) y = -y;
  i64 num = 0;
  switch (floor_mod(y, 3)) {
    case 0:
      num = 5 * sp + 5 + 10 * x + 36 * y;
      break;
    case 1:
      num = 5 * sp + 5 + 40 * x + 60 * y;
      break;
    default:
      num = 5 * sp + 5 + 22 * x + 12 * y;
      break;
  }
  return exact_quotient(num, 36, "closed_form_q7");
}

std::size_t closed_form_n6(u64 p, i64 x, i64 y) {
  const i64 sp = signed_p(p);
  i64 num = 0;
  switch (floor_mod(y, 3)) {
    case 0:
      num = 2 * sp + 2 + 4 * x;
      break;
    case 1:
      num = 2 * sp + 2 + 16 * x + 24 * y;
      break;
    default:
      num = 2 * sp + 2 + 16 * x - 24 * y;
      break;
  }
  return exact_quotient(num, 36, "closed_form_n6");
}

std::optional<ClosedCount> count_closed(u64 p, u64 q, u64 a) {
  cayley::validate({p, q, a});
  const BetaData bd = beta_data(q, a % q);
  if (bd.B.empty()) return ClosedCount{0, "empty-B"};
  const u64 alpha = a % p;
  const u64 beta = bd.beta;
  if (q == 3) return ClosedCount{(p + 1) / 4, "q3"};
  if (q == 5 && (beta == 2 || beta == 3)) {
    const auto d = quad_decomp(p, Form::SumOfSquares, alpha);
    return beta == 2 ? ClosedCount{closed_form_q5(p, d.x, d.y, true), "q5-beta2"}
                     : ClosedCount{closed_form_q5(p, d.x, d.y, false), "q5-beta-2"};
  }
  if (q == 7 && (beta == 3 || beta == 5)) {
    const auto d = quad_decomp(p, Form::SumOfSquaresThree, alpha);
    return beta == 3 ? ClosedCount{closed_form_q7(p, d.x, d.y, true), "q7-beta3"}
                     : ClosedCount{closed_form_q7(p, d.x, d.y, false), "q7-beta-2"};
  }
  if (q > 7 && mul_mod(beta, beta, q) == (beta + q - 1) % q) {
    std::vector<u64> expected{beta, (1 + q - beta) % q};
    std::sort(expected.begin(), expected.end());
    if (bd.B == expected) {
      const auto d = quad_decomp(p, Form::SumOfSquaresThree, alpha);
      return ClosedCount{closed_form_n6(p, d.x, d.y), "n6"};
    }
  }
  return std::nullopt;
}

Mod6 mod6_predict(u64 p, u64 q, u64 a) {
  cayley::validate({p, q, a});
  const u64 n = p * q;
  const auto s = cayley::gen_set(n, a);
  std::vector<bool> member(n, false);
  for (u64 x : s.elements) member[x] = true;
  Mod6 out{member[2 % n] ? 1 : 0, 0, 0};
  for (u64 x : s.elements) {
    const bool order6 = pow_mod(x, 6, n) == 1 && pow_mod(x, 2, n) != 1 && pow_mod(x, 3, n) != 1;
    if (order6 && member[(x + n - 1) % n]) {
      out.epsilon = 1;
      break;
    }
  }
  out.residue = (3 * out.delta + 2 * out.epsilon) % 6;
  return out;
}

bool fermat_vanishing(u64 q) {
  if (q < 3 || q % 2 == 0) throw InputError("fermat_vanishing: q must be odd and at least 3");
  bool fermat = false, three_mod_four = false;
  for (const auto& [l, e] : arith::factor_powers(q)) {
    if (l >= 5 && ((l - 1) & (l - 2)) == 0) fermat = true;
    if (l % 4 == 3) three_mod_four = true;
  }
  return fermat && three_mod_four;
}

}  // namespace neumaier::charsums
