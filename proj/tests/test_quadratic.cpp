#include <gtest/gtest.h>

#include "neumaier/arith.hpp"
#include "neumaier/charsums.hpp"
#include "neumaier/error.hpp"
#include "neumaier/quadratic.hpp"
#include "neumaier/search.hpp"
#include "oracles.hpp"

using namespace neumaier;
using namespace neumaier::quadratic;

TEST(Quadratic, ParseAndNorm) {
  const auto g = parse_element(Ring::Gaussian, "5+6i");
  EXPECT_EQ(g.c, 5);
  EXPECT_EQ(g.d, 6);
  EXPECT_EQ(g.norm(), 61u);
  const auto e = parse_element(Ring::Eisenstein, "3+10z");
  EXPECT_EQ(e.norm(), 139u);
  EXPECT_EQ(parse_element(Ring::Gaussian, "-15-14i").norm(), 421u);
  EXPECT_EQ(parse_element(Ring::Gaussian, "5,6"), g);
  EXPECT_THROW(parse_element(Ring::Gaussian, "5+6q"), InputError);
  EXPECT_THROW(parse_element(Ring::Gaussian, ""), InputError);
  EXPECT_THROW(parse_element(Ring::Gaussian, "3+10z"), InputError);
  EXPECT_EQ(parse_element(Ring::Eisenstein, "3+10w"), e);
}

TEST(Quadratic, Multiplication) {
  const QuadraticRingElt i{Ring::Gaussian, 0, 1};
  EXPECT_EQ(i * i, (QuadraticRingElt{Ring::Gaussian, -1, 0}));
  const QuadraticRingElt z{Ring::Eisenstein, 0, 1};
  EXPECT_EQ(z * z, (QuadraticRingElt{Ring::Eisenstein, -1, 1}));
  const auto a = parse_element(Ring::Eisenstein, "3+10z"), b = parse_element(Ring::Eisenstein, "-2+7z");
  EXPECT_EQ((a * b).norm(), a.norm() * b.norm());
}

TEST(Quadratic, GaussianScan) {
  const auto hits = scan_quadratic_primes(Ring::Gaussian, parse_element(Ring::Gaussian, "5+6i"), 20, 500);
  bool found = false;
  for (const auto& h : hits) {
    EXPECT_TRUE(oracle::trial_prime(h.p));
    EXPECT_EQ(h.pi.norm(), h.p);
    EXPECT_EQ(((h.pi.c - 5) % 20 + 20) % 20, 0);
    EXPECT_EQ(((h.pi.d - 6) % 20 + 20) % 20, 0);
    found = found || (h.pi.c == -15 && h.pi.d == -14 && h.p == 421);
  }
  EXPECT_TRUE(found);
  EXPECT_THROW(scan_quadratic_primes(Ring::Gaussian, {Ring::Gaussian, 2, 0}, 4, 100), InputError);
  EXPECT_THROW(scan_quadratic_primes(Ring::Gaussian, {Ring::Gaussian, 1, 0}, 0, 100), InputError);
  // Degenerate class: everything with c odd and d even.
  for (const auto& h : scan_quadratic_primes(Ring::Gaussian, {Ring::Gaussian, 1, 0}, 2, 100)) {
    EXPECT_EQ(h.p % 4, 1u);
    EXPECT_EQ(h.pi.d % 2, 0);
  }
}

TEST(Quadratic, GaussianScanIsComplete) {
  // Brute-force box enumeration.
  std::size_t want = 0;
  for (long c = -40; c <= 40; ++c) {
    for (long d = -40; d <= 40; ++d) {
      const long n = c * c + d * d;
      if (n <= 1500 && ((c - 5) % 20 + 20) % 20 == 0 && ((d - 6) % 20 + 20) % 20 == 0 && oracle::trial_prime(n)) ++want;
    }
  }
  EXPECT_EQ(scan_quadratic_primes(Ring::Gaussian, {Ring::Gaussian, 5, 6}, 20, 1500).size(), want);
}

TEST(Quadratic, GaussianAssembly) {
  const auto a = assemble_from_gaussian(parse_element(Ring::Gaussian, "-15-14i"));
  EXPECT_EQ(a.p, 421u);
  EXPECT_EQ(a.alpha, 2u);
  EXPECT_EQ(a.a, 2u);
  EXPECT_EQ(a.predicted, 63u);
  for (const auto& h : scan_quadratic_primes(Ring::Gaussian, {Ring::Gaussian, 5, 6}, 20, 20000)) {
    const auto as = assemble_from_gaussian(h.pi);
    EXPECT_EQ((as.predicted + 2) % 5, 0u);
    EXPECT_EQ(charsums::count_direct(as.p, 5, as.a), as.predicted);
    EXPECT_EQ(search::canonical_a(as.a, as.p * 5), as.a_canonical);
  }
}

TEST(Quadratic, EisensteinAssembly) {
  const auto hits = scan_quadratic_primes(Ring::Eisenstein, parse_element(Ring::Eisenstein, "3+10z"), 84, 200);
  ASSERT_FALSE(hits.empty());
  EXPECT_EQ(hits.front().p, 139u);
  const auto a = assemble_from_eisenstein(hits.front().pi, 7);
  EXPECT_EQ(a.alpha, 2u);
  EXPECT_EQ(a.beta, 3u);
  EXPECT_EQ(a.a, 836u);
  EXPECT_EQ(a.a_canonical, 26u);
  EXPECT_EQ(a.predicted, 26u);
  for (const auto& h : scan_quadratic_primes(Ring::Eisenstein, {Ring::Eisenstein, 3, 10}, 84, 20000)) {
    const auto as = assemble_from_eisenstein(h.pi, 7);
    EXPECT_EQ((as.predicted + 2) % 7, 0u);
    EXPECT_EQ(charsums::count_direct(as.p, 7, as.a), as.predicted);
  }
}

TEST(Quadratic, SixthRoots) {
  EXPECT_EQ(sixth_root_beta(7), 3u);
  for (auto q : {7u, 13u, 19u, 91u, 247u}) {
    const auto b = sixth_root_beta(q);
    EXPECT_EQ((b * b + 1 + q - b) % q, 0u);
  }
  EXPECT_THROW(sixth_root_beta(5), InputError);
}

TEST(Quadratic, ConicSolver) {
  for (std::uint64_t q : {7u, 13u, 19u, 31u, 49u, 91u, 247u, 343u, 1729u}) {
    const auto s = conic_solve(q);
    EXPECT_LT(s.z1, 12 * q);
    EXPECT_LT(s.z2, 12 * q);
    EXPECT_TRUE(check_conic_solution(q, static_cast<i64>(s.z1), static_cast<i64>(s.z2)).all()) << q;
  }
  EXPECT_TRUE(check_conic_solution(247, 2717, 1002).all());
  const auto bad = check_conic_solution(247, 2718, 1002);
  EXPECT_FALSE(bad.parity);
  EXPECT_THROW(conic_solve(35), InputError);
}

TEST(Quadratic, ConicToCount) {
  // The solution class for q = 247 leads to the large worked example.
  const auto a = assemble_from_eisenstein({Ring::Eisenstein, -247, 1002}, 247);
  EXPECT_EQ(a.p, 817519u);
  EXPECT_EQ(a.a, 22890547u);
  EXPECT_EQ(a.predicted, 45446u);
  EXPECT_EQ(charsums::count_direct(817519, 247, 22890547), 45446u);
}
