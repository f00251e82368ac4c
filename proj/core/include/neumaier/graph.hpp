#pragma once

// Finite simple graphs stored as a bit-packed symmetric adjacency matrix,
// together with the exact regularity checks used to certify Neumaier
// parameters: regularity, edge-regularity, co-edge-regularity, regular
// cliques and cocliques.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "neumaier/feasibility.hpp"
#include "neumaier/parallel.hpp"

namespace neumaier::graph {

using Vertex = std::size_t;

class Graph {
 public:
  Graph() = default;
  /// Edgeless graph on n vertices.
  explicit Graph(std::size_t n);

  static Graph from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges);

  std::size_t order() const { return n_; }
  bool adjacent(Vertex u, Vertex v) const {
    return (row(u)[v >> 6] >> (v & 63)) & 1u;
  }
  std::size_t degree(Vertex u) const;
  std::size_t edge_count() const;
  std::size_t common_neighbours(Vertex u, Vertex v) const;
  std::vector<Vertex> neighbours(Vertex u) const;

  /// Adds the edge {u, v}. Self-loops are rejected with InputError.
  void add_edge(Vertex u, Vertex v);

  /// Packed adjacency row of u; bit v of the row is set iff u ~ v.
  std::span<const std::uint64_t> row(Vertex u) const {
    return {bits_.data() + u * words_, words_};
  }
  std::size_t words_per_row() const { return words_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::uint64_t* mutable_row(Vertex u) { return bits_.data() + u * words_; }
  void check_vertex(Vertex u) const;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Edges {u, v} with u < v in lexicographic order.
std::vector<std::pair<Vertex, Vertex>> edge_list(const Graph& g);

Graph complement(const Graph& g);

struct VertexPair {
  Vertex u;
  Vertex v;
  friend bool operator==(const VertexPair&, const VertexPair&) = default;
};

struct RegularityReport {
  bool is_regular = false;
  std::optional<std::size_t> k;
  bool is_complete = false;
  bool is_edge_regular = false;
  std::optional<std::size_t> lambda;
  bool is_co_edge_regular = false;
  std::optional<std::size_t> mu;
  bool is_strongly_regular = false;
  /// First pair (lexicographic) whose common-neighbour count disagrees with
  /// the first adjacent (resp. non-adjacent) pair.
  std::optional<VertexPair> edge_violation;
  std::optional<VertexPair> co_edge_violation;
};

/// Exhaustive pair enumeration. Requires at least 2 vertices.
RegularityReport regularity_report(const Graph& g, const Workers& workers = Workers{});

/// The edge-regular half of regularity_report only (cheaper when the
/// co-edge part is not needed).
RegularityReport edge_regularity(const Graph& g, const Workers& workers = Workers{});

enum class SubsetKind { Clique, Coclique };

struct VertexSubset {
  std::vector<Vertex> members;
  SubsetKind kind = SubsetKind::Clique;
};

bool is_clique(const Graph& g, std::span<const Vertex> members);
bool is_coclique(const Graph& g, std::span<const Vertex> members);

/// Returns e > 0 iff every vertex outside the subset has exactly e neighbours
/// in it. Throws InputError for out-of-range or duplicate members, or when the
/// subset is empty or the whole vertex set.
std::optional<std::size_t> is_regular_subset(const Graph& g, const VertexSubset& s);

/// Edge-regular with the claimed (v, k, lambda), non-complete, and the witness
/// is a clique of size s that is e-regular.
bool verify_neumaier(const Graph& g, const feasibility::NeumaierParams& claimed,
                     const VertexSubset& witness, const Workers& workers = Workers{});

/// verify_neumaier and not strongly regular.
bool is_strictly_neumaier(const Graph& g, const feasibility::NeumaierParams& claimed,
                          const VertexSubset& witness, const Workers& workers = Workers{});

/// Breadth-first distances from source; unreachable vertices get SIZE_MAX.
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);

}  // namespace neumaier::graph
