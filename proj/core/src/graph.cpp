#include "neumaier/graph.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <queue>
#include <string>

#include "neumaier/error.hpp"

namespace neumaier::graph {

namespace {

constexpr Vertex kNone = std::numeric_limits<Vertex>::max();

std::size_t and_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  std::size_t total = 0;
  for (std::size_t w = 0; w < a.size(); ++w) total += std::popcount(a[w] & b[w]);
  return total;
}

void atomic_min(std::atomic<Vertex>& target, Vertex value) {
  Vertex cur = target.load();
  while (value < cur && !target.compare_exchange_weak(cur, value)) {
  }
}

struct PairScan {
  bool any_pair = false;
  std::size_t value = 0;
  std::optional<VertexPair> violation;
};

// Compares the common-neighbour count of every pair u < v with
// adjacent(u, v) == want_adjacent against the first such pair. Rows are
// claimed in parallel; a row is skipped once a violation in an earlier row is
// known, so the reported violation is always the lexicographically first.
PairScan scan_pairs(const Graph& g, bool want_adjacent, const Workers& workers) {
  const std::size_t n = g.order();
  const std::size_t words = g.words_per_row();
  PairScan out;

  auto candidates = [&](Vertex u, std::size_t w) {
    std::uint64_t bits = g.row(u)[w];
    if (!want_adjacent) bits = ~bits;
    // Restrict to v > u and v < n.
    const std::size_t lo = w * 64;
    if (lo + 64 > n) bits &= (n - lo >= 64) ? ~0ULL : ((1ULL << (n - lo)) - 1);
    if (lo <= u) {
      const std::size_t shift = u - lo + 1;
      bits &= shift >= 64 ? 0 : (~0ULL << shift);
    }
    return bits;
  };

  Vertex ref_u = kNone, ref_v = kNone;
  for (Vertex u = 0; u < n && ref_u == kNone; ++u) {
    for (std::size_t w = u / 64; w < words; ++w) {
      const std::uint64_t bits = candidates(u, w);
      if (bits) {
        ref_u = u;
        ref_v = w * 64 + std::countr_zero(bits);
        break;
      }
    }
  }
  if (ref_u == kNone) return out;
  out.any_pair = true;
  out.value = g.common_neighbours(ref_u, ref_v);

  std::atomic<Vertex> first_bad_row{kNone};
  std::vector<Vertex> bad_col(n, kNone);
  workers.for_each_index(n, [&](std::size_t u) {
    if (u > first_bad_row.load(std::memory_order_relaxed)) return;
    const auto ru = g.row(u);
    for (std::size_t w = u / 64; w < words; ++w) {
      std::uint64_t bits = candidates(u, w);
      while (bits) {
        const Vertex v = w * 64 + std::countr_zero(bits);
        bits &= bits - 1;
        if (and_popcount(ru, g.row(v)) != out.value) {
          bad_col[u] = v;
          atomic_min(first_bad_row, u);
          return;
        }
      }
    }
  });
  const Vertex bad_u = first_bad_row.load();
  if (bad_u != kNone) out.violation = VertexPair{bad_u, bad_col[bad_u]};
  return out;
}

void fill_degree_part(const Graph& g, RegularityReport& r) {
  const std::size_t n = g.order();
  if (n < 2) throw InputError("regularity_report: graph needs at least 2 vertices");
  const std::size_t k0 = g.degree(0);
  r.is_regular = true;
  for (Vertex u = 1; u < n; ++u) {
    if (g.degree(u) != k0) {
      r.is_regular = false;
      break;
    }
  }
  if (r.is_regular) r.k = k0;
  r.is_complete = r.is_regular && k0 == n - 1;
}

}  // namespace

Graph::Graph(std::size_t n) : n_(n), words_((n + 63) / 64), bits_(n * ((n + 63) / 64), 0) {}

Graph Graph::from_edges(std::size_t n, std::span<const std::pair<Vertex, Vertex>> edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(Vertex u) const {
  if (u >= n_) {
    throw InputError("vertex " + std::to_string(u) + " out of range for graph of order " +
                     std::to_string(n_));
  }
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
  mutable_row(u)[v >> 6] |= 1ULL << (v & 63);
  mutable_row(v)[u >> 6] |= 1ULL << (u & 63);
}

std::size_t Graph::degree(Vertex u) const {
  std::size_t d = 0;
  for (std::uint64_t w : row(u)) d += std::popcount(w);
  return d;
}

std::size_t Graph::edge_count() const {
  std::size_t total = 0;
  for (std::uint64_t w : bits_) total += std::popcount(w);
  return total / 2;
}

std::size_t Graph::common_neighbours(Vertex u, Vertex v) const {
  return and_popcount(row(u), row(v));
}

std::vector<Vertex> Graph::neighbours(Vertex u) const {
  std::vector<Vertex> out;
  const auto r = row(u);
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t bits = r[w];
    while (bits) {
      out.push_back(w * 64 + std::countr_zero(bits));
      bits &= bits - 1;
    }
  }
  return out;
}

std::vector<std::pair<Vertex, Vertex>> edge_list(const Graph& g) {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(g.edge_count());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v : g.neighbours(u)) {
      if (v > u) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph complement(const Graph& g) {
  Graph out(g.order());
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) out.add_edge(u, v);
    }
  }
  return out;
}

RegularityReport edge_regularity(const Graph& g, const Workers& workers) {
  RegularityReport r;
  fill_degree_part(g, r);
  if (!r.is_regular || r.k == 0) return r;
  const PairScan scan = scan_pairs(g, true, workers);
  r.edge_violation = scan.violation;
  r.is_edge_regular = !scan.violation.has_value();
  if (r.is_edge_regular) r.lambda = scan.value;
  return r;
}

namespace {

void add_co_edge_part(const Graph& g, RegularityReport& r, const Workers& workers) {
  if (!r.is_regular || r.is_complete) return;
  const PairScan scan = scan_pairs(g, false, workers);
  r.co_edge_violation = scan.violation;
  r.is_co_edge_regular = !scan.violation.has_value();
  if (r.is_co_edge_regular) r.mu = scan.value;
  r.is_strongly_regular = r.is_edge_regular && r.is_co_edge_regular;
}

}  // namespace

RegularityReport regularity_report(const Graph& g, const Workers& workers) {
  RegularityReport r = edge_regularity(g, workers);
  add_co_edge_part(g, r, workers);
  return r;
}

bool is_clique(const Graph& g, std::span<const Vertex> members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (!g.adjacent(members[i], members[j])) return false;
    }
  }
  return true;
}

bool is_coclique(const Graph& g, std::span<const Vertex> members) {
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      if (g.adjacent(members[i], members[j])) return false;
    }
  }
  return true;
}

std::optional<std::size_t> is_regular_subset(const Graph& g, const VertexSubset& s) {
  const std::size_t n = g.order();
  if (s.members.empty()) throw InputError("is_regular_subset: subset is empty");
  std::vector<std::uint64_t> mask(g.words_per_row(), 0);
  std::size_t count = 0;
  for (Vertex u : s.members) {
    if (u >= n) throw InputError("is_regular_subset: vertex " + std::to_string(u) + " out of range");
    std::uint64_t& word = mask[u >> 6];
    const std::uint64_t bit = 1ULL << (u & 63);
    if (word & bit) throw InputError("is_regular_subset: duplicate vertex " + std::to_string(u));
    word |= bit;
    ++count;
  }
  if (count == n) throw InputError("is_regular_subset: subset must be proper");

  std::optional<std::size_t> e;
  for (Vertex u = 0; u < n; ++u) {
    if ((mask[u >> 6] >> (u & 63)) & 1) continue;
    const std::size_t hits = and_popcount(g.row(u), mask);
    if (!e) {
      e = hits;
    } else if (*e != hits) {
      return std::nullopt;
    }
  }
  if (!e || *e == 0) return std::nullopt;
  return e;
}

namespace {

std::optional<RegularityReport> check_neumaier(const Graph& g, const feasibility::NeumaierParams& claimed,
                                               const VertexSubset& witness, const Workers& workers) {
  if (witness.kind != SubsetKind::Clique) throw InputError("verify_neumaier: witness must be a clique");
  if (claimed.v < 2 || static_cast<std::size_t>(claimed.v) != g.order()) return std::nullopt;
  if (witness.members.empty() || witness.members.size() >= g.order()) return std::nullopt;
  if (static_cast<feasibility::Int>(witness.members.size()) != claimed.s) return std::nullopt;
  if (!is_clique(g, witness.members)) return std::nullopt;
  const auto e = is_regular_subset(g, witness);
  if (!e || static_cast<feasibility::Int>(*e) != claimed.e) return std::nullopt;
  RegularityReport r = edge_regularity(g, workers);
  const bool ok = r.is_edge_regular && !r.is_complete && static_cast<feasibility::Int>(*r.k) == claimed.k &&
                  static_cast<feasibility::Int>(*r.lambda) == claimed.lambda;
  if (!ok) return std::nullopt;
  return r;
}

}  // namespace

bool verify_neumaier(const Graph& g, const feasibility::NeumaierParams& claimed,
                     const VertexSubset& witness, const Workers& workers) {
  return check_neumaier(g, claimed, witness, workers).has_value();
}

bool is_strictly_neumaier(const Graph& g, const feasibility::NeumaierParams& claimed,
                          const VertexSubset& witness, const Workers& workers) {
  auto r = check_neumaier(g, claimed, witness, workers);
  if (!r) return false;
  add_co_edge_part(g, *r, workers);
  return !r->is_strongly_regular;
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  std::vector<std::size_t> dist(g.order(), std::numeric_limits<std::size_t>::max());
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Vertex v : g.neighbours(u)) {
      if (dist[v] == std::numeric_limits<std::size_t>::max()) {
        dist[v] = dist[u] + 1;
        frontier.push(v);
      }
    }
  }
  return dist;
}

}  // namespace neumaier::graph
