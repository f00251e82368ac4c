#pragma once

// Cayley graphs Gamma_pq(a) on Z/pqZ with connection set S_pq(a) = <a>, their
// spread of 1-regular cocliques, and the fusion construction that glues t
// spread-carrying copies into a Neumaier graph with e = 1.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "neumaier/feasibility.hpp"
#include "neumaier/graph.hpp"
#include "neumaier/parallel.hpp"

namespace neumaier::cayley {

using u64 = std::uint64_t;
using graph::Graph;
using graph::Vertex;

struct CayleySpec {
  u64 p = 0;
  u64 q = 0;
  u64 a = 0;
  u64 modulus() const { return p * q; }
};

/// Throws InputError naming the first violated requirement: p an odd prime,
/// q odd >= 3 and coprime to p, a a unit mod pq, a mod p a generator, and
/// a^((p-1)/2) = -1 (mod pq).
void validate(const CayleySpec& spec);

/// S_n(a) = {a^0, ..., a^(2i-1)} in power order, where 2i is the order of a.
struct GenSet {
  u64 modulus = 0;
  std::vector<u64> elements;

  std::vector<u64> sorted() const;
  bool contains(u64 x) const;
};

/// Throws InputError if a is not a unit mod n, or a^i != -1 for 2i = ord(a).
GenSet gen_set(u64 n, u64 a);

/// |S ∩ (S+1)| for a connection set S.
std::size_t shift_intersection(const GenSet& s);

/// Disjoint vertex blocks covering the vertex set, members ascending.
struct Spread {
  std::vector<std::vector<Vertex>> blocks;
};

/// Index of the block containing each vertex; throws InputError unless the
/// blocks partition 0..n-1.
std::vector<std::size_t> block_index(const Spread& spread, std::size_t n);

struct CayleyGraph {
  CayleySpec spec;
  GenSet connection;
  Graph graph;
  /// The p cosets of H = <p> in Z/pqZ. Block j is the coset containing the
  /// j-th smallest element of S ∪ {0}.
  Spread spread;
  std::size_t lambda = 0;
};

CayleyGraph gamma_pq(const CayleySpec& spec);

struct FusionCopy {
  Graph graph;
  Spread spread;
};

/// perms[i-1] is the block permutation of copy i (0-based images); copy 0
/// uses the identity.
struct FusionSpec {
  std::vector<FusionCopy> copies;
  std::vector<std::vector<std::size_t>> perms;
};

struct FusedGraph {
  Graph graph;
  /// Fused clique c is the union over copies i of block perms_i(c), with
  /// vertex x of copy i labelled i * v + x.
  Spread cliques;
};

/// Throws InputError on mismatched orders or block counts, a wrong number
/// of permutations, or a permutation that is not a bijection.
FusedGraph fuse(const FusionSpec& fs);

enum class StrictnessBasis { SufficientCondition, VerifiedByExhaustion };

std::string_view to_string(StrictnessBasis b);

struct Strictness {
  bool strict = false;
  StrictnessBasis basis = StrictnessBasis::SufficientCondition;
};

/// t >= 2 with non-complete copies, or t = 1 with two vertices in different
/// blocks at finite distance >= 3 in the unfused copy, is sufficient.
/// Otherwise the fused graph is checked for strong regularity exhaustively.
Strictness strictness_check(const FusionSpec& fs, const Graph& fused, const Workers& workers = Workers{});

struct Construction {
  CayleySpec spec;
  std::size_t lambda = 0;
  std::size_t t = 0;
  feasibility::NeumaierParams params;
  FusionSpec fusion;
  FusedGraph fused;
  graph::VertexSubset witness;
};

/// t copies of Gamma_pq(a) fused along their spreads, t = (lambda+2)/q.
/// Throws InputError when lambda != -2 (mod q) (reporting lambda mod q) or
/// when perms.size() != t-1.
Construction construct_neumaier(u64 q, u64 p, u64 a, const std::vector<std::vector<std::size_t>>& perms);

/// Same with identity permutations.
Construction construct_neumaier(u64 q, u64 p, u64 a);

/// Parses a permutation of {0..m-1} in image notation ("2 0 1", commas
/// allowed) or cycle notation ("(0 2)(1 3)", fixed points implicit).
std::vector<std::size_t> parse_permutation(const std::string& text, std::size_t m);

}  // namespace neumaier::cayley
