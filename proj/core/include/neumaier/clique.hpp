#pragma once

// Exact clique search for small graphs. Exponential in the worst case; used
// to check the largest-clique and regular-clique properties of verified
// Neumaier graphs.

#include <cstddef>
#include <functional>
#include <vector>

#include "neumaier/graph.hpp"

namespace neumaier::graph {

inline constexpr std::size_t kDefaultCliqueThreshold = 200;

/// A maximum clique, vertices ascending. Throws InputError when the graph has
/// more than max_order vertices.
std::vector<Vertex> maximum_clique(const Graph& g, std::size_t max_order = kDefaultCliqueThreshold);

/// Calls visit for every clique of exactly `size` vertices (ascending
/// members, lexicographic order). Stops early when visit returns false.
void for_each_clique(const Graph& g, std::size_t size,
                     const std::function<bool(const std::vector<Vertex>&)>& visit,
                     std::size_t max_order = kDefaultCliqueThreshold);

}  // namespace neumaier::graph
