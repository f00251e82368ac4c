#include <gtest/gtest.h>

#include <algorithm>

#include "neumaier/error.hpp"
#include "neumaier/feasibility.hpp"
#include "oracles.hpp"

using namespace neumaier::feasibility;
using neumaier::InputError;

namespace {

bool has(const Verdict& v, const std::string& id) {
  return std::any_of(v.reasons.begin(), v.reasons.end(), [&](const Reason& r) { return r.id == id; });
}

const FeasibleRow* find_row(const std::vector<FeasibleRow>& rows, NeumaierParams p) {
  auto it = std::find_if(rows.begin(), rows.end(), [&](const FeasibleRow& r) { return r.params == p; });
  return it == rows.end() ? nullptr : &*it;
}

}  // namespace

TEST(Feasibility, ErgExamples) {
  EXPECT_EQ(erg_conditions(16, 9, 4).status, Status::Open);
  const auto parity = erg_conditions(5, 3, 1);
  EXPECT_EQ(parity.status, Status::Infeasible);
  EXPECT_TRUE(has(parity, "ERG.ii"));
  EXPECT_FALSE(has(parity, "ERG.i"));
  EXPECT_TRUE(has(erg_conditions(10, 7, 3), "ERG.i"));
  EXPECT_THROW(erg_conditions(5, 5, 1), InputError);
  EXPECT_THROW(erg_conditions(5, 3, 3), InputError);
}

TEST(Feasibility, NeumaierExamples) {
  EXPECT_EQ(neumaier_conditions({16, 9, 4, 2, 4}).status, Status::Open);
  EXPECT_EQ(neumaier_conditions({24, 8, 2, 1, 4}).status, Status::Open);
  const auto bad = neumaier_conditions({16, 9, 4, 2, 5});
  EXPECT_TRUE(has(bad, "NEU.ii"));
  EXPECT_THROW(neumaier_conditions({16, 9, 4, 0, 4}), InputError);
}

TEST(Feasibility, StrictExamples) {
  EXPECT_EQ(strict_conditions({16, 9, 4, 2, 4}).status, Status::Open);
  EXPECT_TRUE(has(strict_conditions({9, 4, 1, 1, 3}), "STR.i"));
  EXPECT_TRUE(has(strict_conditions({15, 8, 4, 1, 4}), "STR.iv"));
}

TEST(Feasibility, CoEdgeDefect) {
  EXPECT_EQ(co_edge_defect(16, 5, 2), 0);
  EXPECT_EQ(co_edge_defect(21, 6, 2), 2);
  EXPECT_EQ(co_edge_defect(10, 3, 4), -18);
  EXPECT_EQ(complement_defect(21, 14, 9), 2);
  EXPECT_THROW(co_edge_defect(5, 5, 1), InputError);
}

TEST(Feasibility, ComplementTest) {
  EXPECT_EQ(corollary_complement_test(39, 30, 23).status, Status::Infeasible);
  EXPECT_EQ(corollary_complement_test(56, 45, 36).status, Status::OnlyStronglyRegular);
  EXPECT_EQ(corollary_complement_test(16, 9, 4).status, Status::Open);
  EXPECT_EQ(complement_defect(16, 9, 4), 12);
}

TEST(Feasibility, Family6l3) {
  EXPECT_TRUE(theorem_family_6l3({21, 14, 9, 4, 7}));
  EXPECT_TRUE(theorem_family_6l3({63, 42, 30, 11, 21}));
  EXPECT_FALSE(theorem_family_6l3({16, 9, 4, 2, 4}));
  EXPECT_FALSE(theorem_family_6l3({15, 10, 6, 3, 5}));  // l = 2
}

TEST(Feasibility, EnumerationMatchesBruteForce) {
  const auto rows = enumerate_feasible(64);
  const auto brute = oracle::brute_feasible(64);
  ASSERT_EQ(rows.size(), brute.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& p = rows[i].params;
    EXPECT_EQ((oracle::Tuple{p.v, p.k, p.lambda, p.e, p.s}), brute[i]);
  }
}

TEST(Feasibility, EnumerationSmallBounds) {
  const auto rows16 = enumerate_feasible(16);
  ASSERT_EQ(rows16.size(), 1u);
  EXPECT_EQ(rows16[0].params, (NeumaierParams{16, 9, 4, 2, 4}));
  EXPECT_EQ(rows16[0].verdict.status, Status::Open);

  const auto rows27 = enumerate_feasible(27);
  for (NeumaierParams p : {NeumaierParams{21, 14, 9, 4, 7}, NeumaierParams{27, 18, 12, 5, 9}}) {
    const auto* r = find_row(rows27, p);
    ASSERT_NE(r, nullptr);
    EXPECT_EQ(r->verdict.status, Status::Infeasible);
    EXPECT_TRUE(has(r->verdict, "THM33"));
  }
  EXPECT_THROW(enumerate_feasible(4), InputError);
}

TEST(Feasibility, FlaggedRowsUpTo64) {
  const auto rows = enumerate_feasible(64);
  const std::vector<NeumaierParams> cor{
      {39, 30, 23, 9, 13}, {48, 35, 26, 10, 16}, {56, 45, 36, 12, 16}, {63, 50, 40, 15, 21}, {63, 52, 43, 16, 21}};
  std::size_t cor_count = 0, thm_count = 0;
  for (const auto& r : rows) {
    const bool is_cor = std::find(cor.begin(), cor.end(), r.params) != cor.end();
    EXPECT_EQ(r.verdict.has_reason_prefix("COR32"), is_cor) << r.params.v << "," << r.params.k;
    const bool in_family = theorem_family_6l3(r.params);
    EXPECT_EQ(has(r.verdict, "THM33"), in_family);
    cor_count += is_cor;
    thm_count += in_family;
  }
  EXPECT_EQ(cor_count, 5u);
  EXPECT_EQ(thm_count, 8u);
}

TEST(Feasibility, FamilyRowsAreFeasibleOtherwise) {
  // The family passes every classical condition for every l, which is why it
  // needs a separate argument.
  for (Int l = 3; l <= 40; ++l) {
    const NeumaierParams p{6 * l + 3, 4 * l + 2, 3 * l, l + 1, 2 * l + 1};
    EXPECT_EQ(erg_conditions(p.v, p.k, p.lambda).status, Status::Open) << l;
    EXPECT_EQ(neumaier_conditions(p).status, Status::Open) << l;
    EXPECT_EQ(strict_conditions(p).status, Status::Open) << l;
  }
}

TEST(Feasibility, ExistenceAnnotation) {
  EXPECT_EQ(existence_annotation({16, 9, 4, 2, 4}), "yes");
  EXPECT_EQ(existence_annotation({24, 8, 2, 1, 4}), "yes");
  EXPECT_EQ(existence_annotation({64, 49, 36, 6, 8}), "unknown");
}
