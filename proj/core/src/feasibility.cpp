#include "neumaier/feasibility.hpp"

#include <algorithm>
#include <array>

#include "neumaier/error.hpp"

namespace neumaier::feasibility {

namespace {

void fail(Verdict& v, std::string id, std::string citation) {
  v.status = Status::Infeasible;
  v.reasons.push_back({std::move(id), std::move(citation)});
}

Int floor_mod(Int a, Int m) {
  const Int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

bool NeumaierParams::satisfies_basic_bounds() const {
  return 1 <= e && e <= s - 1 && k < v - 1 && s - 2 <= lambda && lambda < k;
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Infeasible:
      return "infeasible";
    case Status::OnlyStronglyRegular:
      return "only-strongly-regular";
    case Status::Open:
      return "open";
  }
  return "?";
}

bool Verdict::has_reason_prefix(std::string_view prefix) const {
  return std::any_of(reasons.begin(), reasons.end(),
                     [&](const Reason& r) { return r.id.starts_with(prefix); });
}

Verdict erg_conditions(Int v, Int k, Int lambda) {
  if (!(0 <= lambda && lambda < k && k < v)) {
    throw InputError("erg_conditions: require 0 <= lambda < k < v");
  }
  Verdict out;
  if (v - 2 * k + lambda < 0) fail(out, "ERG.i", "edge-regular: v - 2k + lambda >= 0");
  if (floor_mod(lambda * k, 2) != 0) fail(out, "ERG.ii", "edge-regular: lambda*k even");
  if (floor_mod(v * k * lambda, 6) != 0) fail(out, "ERG.iii", "edge-regular: v*k*lambda = 0 mod 6");
  if (floor_mod(v * k, 2) != 0) fail(out, "ERG.vk", "regular: v*k even");
  return out;
}

Verdict neumaier_conditions(const NeumaierParams& p) {
  if (!p.satisfies_basic_bounds()) {
    throw InputError("neumaier_conditions: parameters violate 1<=e<=s-1, k<v-1, s-2<=lambda<k");
  }
  Verdict out;
  const auto [v, k, lambda, e, s] = p;
  if (k - s + e - lambda - 1 < 0) fail(out, "NEU.i", "Neumaier: k - s + e - lambda - 1 >= 0");
  if (s * (k - s + 1) != (v - s) * e) fail(out, "NEU.ii", "Neumaier: s(k-s+1) = (v-s)e");
  if (s * (s - 1) * (lambda - s + 2) != (v - s) * e * (e - 1)) {
    fail(out, "NEU.iii", "Neumaier: s(s-1)(lambda-s+2) = (v-s)e(e-1)");
  }
  return out;
}

Verdict strict_conditions(const NeumaierParams& p) {
  if (!p.satisfies_basic_bounds()) {
    throw InputError("strict_conditions: parameters violate 1<=e<=s-1, k<v-1, s-2<=lambda<k");
  }
  Verdict out;
  const auto [v, k, lambda, e, s] = p;
  if (s < 4) fail(out, "STR.i", "strictly Neumaier: s >= 4");
  if (e > k - 2) fail(out, "STR.ii", "strictly Neumaier: e <= k - 2");
  if (v == 2 * k - lambda || v == 2 * k - lambda + 1) {
    fail(out, "STR.iii", "strictly Neumaier: v not in {2k-lambda, 2k-lambda+1}");
  }
  if (k - s + e - lambda - 1 < 1) fail(out, "STR.iv", "strictly Neumaier: k - s + e - lambda - 1 >= 1");
  return out;
}

Int co_edge_defect(Int v, Int k, Int mu) {
  if (mu < 0 || k >= v) throw InputError("co_edge_defect: require mu >= 0 and k < v");
  return k * (k - 1) - mu * (v - k - 1);
}

Int complement_defect(Int v, Int k, Int lambda) {
  // Complement of an edge-regular (v,k,lambda) graph is co-edge-regular
  // with parameters (v, v-k-1, v-2k+lambda).
  return co_edge_defect(v, v - k - 1, v - 2 * k + lambda);
}

Verdict corollary_complement_test(Int v, Int k, Int lambda) {
  if (!(0 <= lambda && lambda < k && k < v)) {
    throw InputError("corollary_complement_test: require 0 <= lambda < k < v");
  }
  Verdict out;
  const Int d = (v - k - 1) * (v - k - 2) - k * (v - 2 * k + lambda);
  if (d < 0) {
    fail(out, "COR32.D<0", "complement co-edge count (v-k-1)(v-k-2) - k(v-2k+lambda) < 0");
  } else if (d == 0) {
    out.status = Status::OnlyStronglyRegular;
    out.reasons.push_back(
        {"COR32.D=0", "complement co-edge count (v-k-1)(v-k-2) - k(v-2k+lambda) = 0 forces strong regularity"});
  }
  return out;
}

bool theorem_family_6l3(const NeumaierParams& p) {
  if (p.v < 21 || (p.v - 3) % 6 != 0) return false;
  const Int l = (p.v - 3) / 6;
  return l >= 3 && p.k == 4 * l + 2 && p.lambda == 3 * l && p.e == l + 1 && p.s == 2 * l + 1;
}

std::string_view existence_annotation(const NeumaierParams& p) {
  // Parameter sets with a known strictly Neumaier graph in the literature.
  static constexpr std::array<std::array<Int, 5>, 5> kKnown{{
      {16, 9, 4, 2, 4},
      {24, 8, 2, 1, 4},
      {28, 9, 2, 1, 4},
      {40, 12, 2, 1, 4},
      {52, 15, 2, 1, 4},
  }};
  const std::array<Int, 5> key{p.v, p.k, p.lambda, p.e, p.s};
  return std::find(kKnown.begin(), kKnown.end(), key) != kKnown.end() ? "yes" : "unknown";
}

std::vector<FeasibleRow> enumerate_feasible(Int v_max) {
  if (v_max < 5) throw InputError("enumerate_feasible: v_max must be at least 5");
  std::vector<FeasibleRow> rows;
  for (Int v = 5; v <= v_max; ++v) {
    for (Int k = 3; k <= v - 2; ++k) {
      for (Int s = 4; s <= k + 1; ++s) {
        // s(k-s+1) = (v-s)e pins e; s(s-1)(lambda-s+2) = (v-s)e(e-1) pins lambda.
        const Int e_num = s * (k - s + 1);
        if (e_num % (v - s) != 0) continue;
        const Int e = e_num / (v - s);
        if (e < 1 || e > s - 1) continue;
        const Int l_num = (v - s) * e * (e - 1);
        if (l_num % (s * (s - 1)) != 0) continue;
        const Int lambda = s - 2 + l_num / (s * (s - 1));
        const NeumaierParams p{v, k, lambda, e, s};
        if (!p.satisfies_basic_bounds()) continue;
        if (erg_conditions(v, k, lambda).status != Status::Open) continue;
        if (neumaier_conditions(p).status != Status::Open) continue;
        if (strict_conditions(p).status != Status::Open) continue;

        FeasibleRow row{p, corollary_complement_test(v, k, lambda)};
        if (theorem_family_6l3(p)) {
          row.verdict.status = Status::Infeasible;
          row.verdict.reasons.push_back(
              {"THM33", "no Neumaier graph with parameters (6l+3, 4l+2, 3l; l+1, 2l+1), l >= 3"});
        }
        rows.push_back(std::move(row));
      }
    }
  }
  std::sort(rows.begin(), rows.end(),
            [](const FeasibleRow& a, const FeasibleRow& b) { return a.params < b.params; });
  return rows;
}

}  // namespace neumaier::feasibility
