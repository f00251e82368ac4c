#include <gtest/gtest.h>

#include <random>

#include "neumaier/arith.hpp"
#include "neumaier/charsums.hpp"
#include "neumaier/error.hpp"
#include "neumaier/search.hpp"
#include "oracles.hpp"

using namespace neumaier;
using namespace neumaier::charsums;
using cyclo::i64;

namespace {

CyclotomicInt I(unsigned n, i64 v) { return CyclotomicInt::from_int(n, v); }

// a + b*sqrt(-1) with zeta_4 = i.
CyclotomicInt gauss(i64 a, i64 b) {
  const std::vector<i64> c{a, b};
  return CyclotomicInt::from_coeffs(4, c);
}

// a + b*sqrt(-3) with sqrt(-3) = 2 zeta_6 - 1.
CyclotomicInt eis(i64 a, i64 b) {
  const std::vector<i64> c{a - b, 2 * b};
  return CyclotomicInt::from_coeffs(6, c);
}

// (a + b*sqrt(-3)) / 2 for a = b (mod 2).
CyclotomicInt eis_half(i64 a, i64 b) {
  const std::vector<i64> c{(a - b) / 2, b};
  return CyclotomicInt::from_coeffs(6, c);
}

oracle::u64 powmod(oracle::u64 b, oracle::u64 e, oracle::u64 m) {
  oracle::u64 r = 1;
  for (b %= m; e; e >>= 1, b = b * b % m) {
    if (e & 1) r = r * b % m;
  }
  return r;
}

i64 residue(i64 v, i64 p) { return ((v % p) + p) % p; }

// p = x^2 + y^2 with x = -(2/p) (mod 4) and y = x g^((p-1)/4) (mod p), by search.
std::pair<i64, i64> two_squares(i64 p, oracle::u64 g) {
  const i64 two_char = (p % 8 == 1 || p % 8 == 7) ? 1 : -1;
  const i64 w = static_cast<i64>(powmod(g, (p - 1) / 4, p));
  for (i64 x = -p; x <= p; ++x) {
    for (i64 y = -p; y <= p; ++y) {
      if (x * x + y * y != p || residue(x, 4) != residue(-two_char, 4)) continue;
      if (residue(y - x * w, p) == 0) return {x, y};
    }
  }
  return {0, 0};
}

// p = x^2 + 3y^2 with x = -1 (mod 3) and 3y = (2 g^((p-1)/3) + 1) x (mod p).
std::pair<i64, i64> three_squares(i64 p, oracle::u64 g) {
  const i64 w = static_cast<i64>(powmod(g, (p - 1) / 3, p));
  for (i64 x = -p; x <= p; ++x) {
    for (i64 y = -p; y <= p; ++y) {
      if (x * x + 3 * y * y != p || residue(x, 3) != 2) continue;
      if (residue(3 * y - (2 * w + 1) * x, p) == 0) return {x, y};
    }
  }
  return {0, 0};
}

std::vector<oracle::u64> generators(oracle::u64 p) {
  std::vector<oracle::u64> out;
  for (oracle::u64 g = 2; g < p; ++g) {
    if (oracle::naive_order(g, p) == p - 1) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST(CharSums, ContextValidation) {
  EXPECT_THROW(CharContext(15, 2, 2), InputError);
  EXPECT_THROW(CharContext(13, 5, 2), InputError);
  EXPECT_THROW(CharContext(13, 4, 3), InputError);  // 3 has order 3
  const CharContext ctx(13, 4, 2);
  for (oracle::u64 m = 0; m < 12; ++m) EXPECT_EQ(ctx.dlog(powmod(2, m, 13)), m);
}

TEST(CharSums, JacobiBasicIdentities) {
  for (oracle::u64 p : {13u, 31u, 37u, 61u, 73u, 97u}) {
    const auto g = arith::smallest_generator(p);
    for (unsigned n : {2u, 3u, 4u, 6u, 12u}) {
      if ((p - 1) % n) continue;
      const CharContext ctx(p, n, g);
      const JacobiTable table(ctx);
      const i64 chi_minus_one_exp = static_cast<i64>(ctx.dlog(p - 1) % n);
      for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = 0; j < n; ++j) {
          const auto J = jacobi_sum(ctx, i, j);
          ASSERT_EQ(J, table(i, j)) << "p=" << p << " n=" << n << " i=" << i << " j=" << j;
          EXPECT_EQ(J.conj(), jacobi_sum(ctx, (n - i) % n, (n - j) % n));
          if (i == 0 && j == 0) {
            EXPECT_EQ(J.as_integer(), static_cast<i64>(p));
          } else if (i == 0 || j == 0) {
            EXPECT_TRUE(J.is_zero());
          } else if ((i + j) % n == 0) {
            EXPECT_EQ(J, -CyclotomicInt::root(n, chi_minus_one_exp * i));
          } else {
            EXPECT_EQ((J * J.conj()).as_integer(), static_cast<i64>(p));
          }
        }
      }
    }
  }
}

TEST(CharSums, OrderTwoTable) {
  for (oracle::u64 p : {13u, 29u, 31u, 37u, 139u}) {
    const CharContext ctx(p, 2, arith::smallest_generator(p));
    EXPECT_EQ(jacobi_sum(ctx, 1, 1).as_integer(), ((p + 1) / 2) % 2 ? -1 : 1);
  }
}

TEST(CharSums, OrderFourTableEveryGenerator) {
  for (oracle::u64 p : {13u, 29u, 37u, 41u, 53u}) {
    const i64 f = (p - 1) / 4;
    const i64 e = f % 2 ? -1 : 1;
    for (auto g : generators(p)) {
      const auto [x, y] = two_squares(static_cast<i64>(p), g);
      const auto lib = quad_decomp(p, Form::SumOfSquares, g);
      ASSERT_EQ(lib.x, x);
      ASSERT_EQ(lib.y, y);
      const CyclotomicInt A = gauss(x, y), B = gauss(x, -y);
      const CyclotomicInt want[3][3] = {
          {A * e, A, I(4, -e)},
          {A, I(4, -1), B},
          {I(4, -e), B, B * e},
      };
      const JacobiTable table(CharContext(p, 4, g));
      for (unsigned i = 1; i <= 3; ++i) {
        for (unsigned j = 1; j <= 3; ++j) EXPECT_EQ(table(i, j), want[i - 1][j - 1]) << p << " g=" << g;
      }
    }
  }
}

TEST(CharSums, OrderSixTableEveryGenerator) {
  for (oracle::u64 p : {13u, 31u, 139u, 43u}) {
    const i64 f = (p - 1) / 6;
    const i64 e = f % 2 ? -1 : 1;
    for (auto g : generators(p)) {
      const auto [x, y] = three_squares(static_cast<i64>(p), g);
      const auto lib = quad_decomp(p, Form::SumOfSquaresThree, g);
      ASSERT_EQ(lib.x, x);
      ASSERT_EQ(lib.y, y);
      i64 r, s, u, v;
      switch (residue(y, 3)) {
        case 0: r = 2 * x, s = 2 * y, u = 2 * x, v = 2 * y; break;
        case 1: r = -x + 3 * y, s = -x - y, u = -x - 3 * y, v = x - y; break;
        default: r = -x - 3 * y, s = x - y, u = -x + 3 * y, v = -x - y; break;
      }
      EXPECT_EQ(rsuv_split(x, y), (Rsuv{r, s, u, v}));
      const auto A = eis(x, y), Ab = eis(x, -y);
      const auto U = eis_half(u, v), Ub = eis_half(u, -v), R = eis_half(r, s), Rb = eis_half(r, -s);
      const CyclotomicInt want[5][5] = {
          {U * e, A, A * e, U, I(6, -e)},
          {A, R, A, I(6, -1), Ub},
          {A * e, A, I(6, -e), Ab, Ab * e},
          {U, I(6, -1), Ab, Rb, Ab},
          {I(6, -e), Ub, Ab * e, Ab, Ub * e},
      };
      const JacobiTable table(CharContext(p, 6, g));
      for (unsigned i = 1; i <= 5; ++i) {
        for (unsigned j = 1; j <= 5; ++j) EXPECT_EQ(table(i, j), want[i - 1][j - 1]) << p << " g=" << g;
      }
    }
  }
}

TEST(CharSums, RsuvExamples) {
  EXPECT_EQ(rsuv_split(8, 5), (Rsuv{-23, 3, 7, -13}));
  EXPECT_EQ(rsuv_split(2, 3), (Rsuv{4, 6, 4, 6}));
  EXPECT_EQ(rsuv_split(-1, 1), (Rsuv{4, 0, -2, -2}));
}

TEST(CharSums, QuadDecompExamples) {
  const auto d = quad_decomp(13, Form::SumOfSquares, 2);
  EXPECT_EQ(d.x * d.x + d.y * d.y, 13);
  EXPECT_EQ(d.x, -3);
  EXPECT_EQ(d.y, 2);
  const auto e = quad_decomp(421, Form::SumOfSquares, 2);
  EXPECT_EQ(e.x, -15);
  EXPECT_EQ(e.y, -14);
  const auto h = quad_decomp(139, Form::SumOfSquaresThree, 2);
  EXPECT_EQ(h.x, 8);
  EXPECT_EQ(h.y, 5);
  EXPECT_THROW(quad_decomp(19, Form::SumOfSquares, 2), InputError);
}

TEST(CharSums, WorkedExamples) {
  EXPECT_EQ(count_direct(13, 5, 2), 3u);
  EXPECT_EQ(count_direct(421, 5, 2), 63u);
  EXPECT_EQ(count_direct(7, 3, 17), 2u);
  EXPECT_EQ(count_jacobi(13, 5, 2), 3u);
  EXPECT_EQ(count_jacobi(139, 7, 26), 26u);
  EXPECT_EQ(closed_form_q5(421, -15, -14), 63u);
  EXPECT_EQ(closed_form_q7(139, 8, 5), 26u);
  EXPECT_EQ(count_closed(37, 5, 2)->value, 3u);
  EXPECT_EQ(count_closed(79, 7, 54)->value, 5u);
  const auto big = count_closed(817519, 247, 22890547);
  ASSERT_TRUE(big.has_value());
  EXPECT_EQ(big->value, 45446u);
  EXPECT_EQ(big->branch, "n6");
  EXPECT_THROW(closed_form_q5(13, 3, 2), InputError);
}

TEST(CharSums, ClosedFormSymmetry) {
  // y -> -y swaps the y = 1 and y = 2 (mod 3) branches of the beta = 3 form.
  EXPECT_EQ(closed_form_q7(139, 8, 5, true), closed_form_q7(139, 8, -5, false));
}

TEST(CharSums, BetaData) {
  const auto d = beta_data(5, 2);
  EXPECT_EQ(d.n, 4u);
  EXPECT_EQ(d.B, (std::vector<charsums::u64>{2, 3, 4}));
  const auto e = beta_data(5, 4);
  EXPECT_EQ(e.n, 2u);
  EXPECT_TRUE(e.B.empty());
  EXPECT_THROW(beta_data(5, 5), InputError);
}

TEST(CharSums, EmptyBGivesZero) {
  for (auto a : search::find_a(7, 5)) {
    if (a % 5 != 4) continue;
    EXPECT_EQ(count_direct(7, 5, a), 0u);
    EXPECT_EQ(count_jacobi(7, 5, a), 0u);
    EXPECT_EQ(count_closed(7, 5, a)->branch, "empty-B");
  }
}

TEST(CharSums, MethodsAgreeOnCanonicalSpecs) {
  for (oracle::u64 q : {3u, 5u, 7u, 9u, 11u, 13u, 15u, 19u, 21u}) {
    for (oracle::u64 p : arith::primes_up_to(400)) {
      if (p < 3 || q % p == 0 || !search::admissible(p, q)) continue;
      for (auto a : search::find_a(p, q)) {
        const auto direct = count_direct(p, q, a);
        ASSERT_EQ(direct, oracle::shift_count(a, p * q)) << p << " " << q << " " << a;
        ASSERT_EQ(count_jacobi(p, q, a), direct) << p << " " << q << " " << a;
        if (auto c = count_closed(p, q, a)) ASSERT_EQ(c->value, direct) << c->branch;
      }
    }
  }
}

TEST(CharSums, QThreeClosedForm) {
  for (oracle::u64 p : arith::primes_up_to(300)) {
    if (p < 5 || !search::admissible(p, 3)) continue;
    for (auto a : search::find_a(p, 3)) {
      EXPECT_EQ(count_direct(p, 3, a), (p + 1) / 4);
      EXPECT_EQ(count_closed(p, 3, a)->branch, "q3");
    }
  }
}

TEST(CharSums, ModSixProperty) {
  std::mt19937_64 rng(6);
  const auto primes = arith::primes_up_to(2000);
  std::uniform_int_distribution<std::size_t> pick_p(2, primes.size() - 1);
  std::uniform_int_distribution<oracle::u64> pick_q(1, 40);
  int checked = 0;
  while (checked < 100) {
    const oracle::u64 p = primes[pick_p(rng)], q = 2 * pick_q(rng) + 1;
    if (q % p == 0 || !search::admissible(p, q)) continue;
    const auto as = search::find_a(p, q);
    if (as.empty()) continue;
    const auto a = as[rng() % as.size()];
    const auto count = count_direct(p, q, a);
    const auto m = mod6_predict(p, q, a);
    EXPECT_EQ(static_cast<int>(count % 6), m.residue) << p << " " << q << " " << a;
    EXPECT_EQ(m.residue, (3 * m.delta + 2 * m.epsilon) % 6);
    EXPECT_NE(count % 3, 1u);
    ++checked;
  }
}

TEST(CharSums, FermatVanishing) {
  for (oracle::u64 q : {35u, 55u, 95u, 115u, 119u}) EXPECT_TRUE(fermat_vanishing(q)) << q;
  EXPECT_FALSE(fermat_vanishing(5));
  EXPECT_FALSE(fermat_vanishing(7));
  EXPECT_FALSE(fermat_vanishing(247));
  for (oracle::u64 p : arith::primes_up_to(600)) {
    if (p < 3 || 35 % p == 0 || !search::admissible(p, 35)) continue;
    for (auto a : search::find_a(p, 35)) EXPECT_EQ(count_direct(p, 35, a), 0u);
  }
}
