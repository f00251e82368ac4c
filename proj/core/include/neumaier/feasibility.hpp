#pragma once

// Arithmetic feasibility conditions for (strictly) Neumaier parameter sets
// and the enumeration of all feasible parameter sets up to a vertex bound.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace neumaier::feasibility {

using Int = std::int64_t;

/// Parameter tuple (v, k, lambda; e, s) of an edge-regular graph with an
/// e-regular clique of size s.
struct NeumaierParams {
  Int v = 0;
  Int k = 0;
  Int lambda = 0;
  Int e = 0;
  Int s = 0;

  /// 1 <= e <= s-1, k < v-1 and s-2 <= lambda < k.
  bool satisfies_basic_bounds() const;

  friend bool operator==(const NeumaierParams&, const NeumaierParams&) = default;
  friend auto operator<=>(const NeumaierParams&, const NeumaierParams&) = default;
};

enum class Status { Infeasible, OnlyStronglyRegular, Open };

std::string_view to_string(Status s);

/// A failed (or decisive) condition. Identifiers are stable:
/// ERG.i ERG.ii ERG.iii ERG.vk, NEU.i NEU.ii NEU.iii, STR.i STR.ii STR.iii
/// STR.iv, COR32.D<0 COR32.D=0, THM33.
struct Reason {
  std::string id;
  std::string citation;
  friend bool operator==(const Reason&, const Reason&) = default;
};

struct Verdict {
  Status status = Status::Open;
  std::vector<Reason> reasons;

  bool has_reason_prefix(std::string_view prefix) const;
};

/// Necessary conditions on an edge-regular (v, k, lambda) graph:
/// v-2k+lambda >= 0, lambda*k even, v*k*lambda = 0 (mod 6), v*k even.
Verdict erg_conditions(Int v, Int k, Int lambda);

/// k-s+e-lambda-1 >= 0, s(k-s+1) = (v-s)e, s(s-1)(lambda-s+2) = (v-s)e(e-1).
Verdict neumaier_conditions(const NeumaierParams& p);

/// Additional conditions for strictly Neumaier graphs: s >= 4, e <= k-2,
/// v not in {2k-lambda, 2k-lambda+1}, k-s+e-lambda-1 >= 1.
Verdict strict_conditions(const NeumaierParams& p);

/// k(k-1) - mu(v-k-1) for a co-edge-regular (v, k, mu) graph. Negative means
/// impossible, zero forces strong regularity, two forces every vertex into a
/// unique triangle.
Int co_edge_defect(Int v, Int k, Int mu);

/// Applies co_edge_defect to the complement of an edge-regular (v, k, lambda)
/// graph: D = (v-k-1)(v-k-2) - k(v-2k+lambda).
Int complement_defect(Int v, Int k, Int lambda);

/// D < 0: Infeasible; D = 0: OnlyStronglyRegular; otherwise Open.
Verdict corollary_complement_test(Int v, Int k, Int lambda);

/// True iff p = (6l+3, 4l+2, 3l; l+1, 2l+1) for some integer l >= 3, a family
/// with no Neumaier graphs.
bool theorem_family_6l3(const NeumaierParams& p);

/// Known-construction annotation for a feasible row: "yes" where a graph is
/// known, "unknown" otherwise. Static data, not computed.
std::string_view existence_annotation(const NeumaierParams& p);

struct FeasibleRow {
  NeumaierParams params;
  Verdict verdict;
};

/// Every tuple with v <= v_max passing erg, neumaier and strict conditions,
/// annotated by corollary_complement_test and theorem_family_6l3, ordered by
/// (v, k, lambda, e, s). Requires v_max >= 5.
std::vector<FeasibleRow> enumerate_feasible(Int v_max);

}  // namespace neumaier::feasibility
