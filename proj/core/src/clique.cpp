#include "neumaier/clique.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

#include "neumaier/error.hpp"

namespace neumaier::graph {

namespace {

using Bits = std::vector<std::uint64_t>;

std::size_t count(const Bits& b) {
  std::size_t c = 0;
  for (auto w : b) c += std::popcount(w);
  return c;
}

void check_order(const Graph& g, std::size_t max_order) {
  if (g.order() > max_order) {
    throw InputError("clique search limited to " + std::to_string(max_order) + " vertices, graph has " +
                     std::to_string(g.order()));
  }
}

// Branch and bound over candidate sets in degree order, with a greedy
// colouring bound on the remaining candidates.
class MaxClique {
 public:
  explicit MaxClique(const Graph& g) : g_(g), words_(g.words_per_row()) {
    order_.resize(g.order());
    std::iota(order_.begin(), order_.end(), Vertex{0});
    std::stable_sort(order_.begin(), order_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  }

  std::vector<Vertex> run() {
    Bits all(words_, 0);
    for (Vertex v = 0; v < g_.order(); ++v) all[v >> 6] |= 1ULL << (v & 63);
    std::vector<Vertex> current;
    expand(current, all);
    std::sort(best_.begin(), best_.end());
    return best_;
  }

 private:
  std::size_t colour_bound(const Bits& cand) const {
    Bits uncoloured = cand;
    std::size_t colours = 0;
    while (count(uncoloured) > 0) {
      ++colours;
      Bits q = uncoloured;
      for (Vertex v : order_) {
        if (!((q[v >> 6] >> (v & 63)) & 1)) continue;
        uncoloured[v >> 6] &= ~(1ULL << (v & 63));
        q[v >> 6] &= ~(1ULL << (v & 63));
        const auto r = g_.row(v);
        for (std::size_t w = 0; w < words_; ++w) q[w] &= ~r[w];
      }
    }
    return colours;
  }

  void expand(std::vector<Vertex>& current, Bits cand) {
    if (count(cand) == 0) {
      if (current.size() > best_.size()) best_ = current;
      return;
    }
    if (current.size() + colour_bound(cand) <= best_.size()) return;
    for (Vertex v : order_) {
      if (!((cand[v >> 6] >> (v & 63)) & 1)) continue;
      if (current.size() + count(cand) <= best_.size()) return;
      Bits next(words_);
      const auto r = g_.row(v);
      for (std::size_t w = 0; w < words_; ++w) next[w] = cand[w] & r[w];
      current.push_back(v);
      expand(current, std::move(next));
      current.pop_back();
      cand[v >> 6] &= ~(1ULL << (v & 63));
    }
  }

  const Graph& g_;
  std::size_t words_;
  std::vector<Vertex> order_;
  std::vector<Vertex> best_;
};

bool enumerate(const Graph& g, std::size_t size, std::vector<Vertex>& current, Vertex start,
               const std::function<bool(const std::vector<Vertex>&)>& visit) {
  if (current.size() == size) return visit(current);
  for (Vertex v = start; v + (size - current.size()) <= g.order(); ++v) {
    bool ok = true;
    for (Vertex u : current) {
      if (!g.adjacent(u, v)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    current.push_back(v);
    const bool go_on = enumerate(g, size, current, v + 1, visit);
    current.pop_back();
    if (!go_on) return false;
  }
  return true;
}

}  // namespace

std::vector<Vertex> maximum_clique(const Graph& g, std::size_t max_order) {
  check_order(g, max_order);
  if (g.order() == 0) return {};
  return MaxClique(g).run();
}

void for_each_clique(const Graph& g, std::size_t size,
                     const std::function<bool(const std::vector<Vertex>&)>& visit, std::size_t max_order) {
  check_order(g, max_order);
  if (size == 0) return;
  std::vector<Vertex> current;
  enumerate(g, size, current, 0, visit);
}

}  // namespace neumaier::graph
