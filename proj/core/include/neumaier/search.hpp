#pragma once

// Admissible pairs (p, q), assembly of the multiplier a by the Chinese
// remainder theorem, and the search over primes p for which Gamma_pq(a)
// fuses into a Neumaier graph.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "neumaier/arith.hpp"
#include "neumaier/feasibility.hpp"
#include "neumaier/parallel.hpp"

namespace neumaier::search {

using u64 = std::uint64_t;

struct AdmissiblePQ {
  u64 p = 0;
  u64 q = 0;
  /// 2-adic valuation of p - 1.
  unsigned r = 0;
  std::vector<arith::PrimePower> factors;
};

/// Present iff 2^r divides l - 1 for every prime l | q. Throws InputError
/// unless p is an odd prime, q is odd >= 3 and gcd(p, q) = 1.
std::optional<AdmissiblePQ> admissible(u64 p, u64 q);

/// Smallest integer among the generators a^i (gcd(i, ord a) = 1) of <a> in
/// (Z/nZ)*, so that each cyclic subgroup has a single name.
u64 canonical_a(u64 a, u64 n);

/// Canonical a for every beta in (Z/qZ)* with beta^((p-1)/2) = -1, paired
/// with the smallest generator of (Z/pZ)*. Ascending, without duplicates.
std::vector<u64> find_a(u64 p, u64 q);

struct SearchRow {
  u64 q = 0;
  u64 p = 0;
  u64 a = 0;
  std::size_t lambda = 0;
  std::size_t t = 0;
  feasibility::NeumaierParams params;
  /// "closed:<branch>" or "direct".
  std::string method;
};

struct SearchResult {
  std::vector<SearchRow> rows;
  /// Set when the search is empty for a structural reason.
  std::string note;
};

/// Every prime p <= p_max and canonical a with |S ∩ (S+1)| = -2 (mod q),
/// ordered by (p, a).
SearchResult search_triples(u64 q, u64 p_max, const Workers& workers = Workers{});

/// p >= 18(q-2) + 8 sqrt(18(q-2) + 16) + 31, evaluated exactly.
bool above_general_strictness_bound(u64 p, u64 q);

}  // namespace neumaier::search
