#include "neumaier/cayley.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "neumaier/arith.hpp"
#include "neumaier/error.hpp"

namespace neumaier::cayley {

namespace {

using arith::pow_mod;

std::string str(u64 x) { return std::to_string(x); }

void check_bijection(const std::vector<std::size_t>& perm, std::size_t m, const std::string& what) {
  if (perm.size() != m) {
    throw InputError(what + " has length " + std::to_string(perm.size()) + ", expected " + std::to_string(m));
  }
  std::vector<bool> seen(m, false);
  for (std::size_t x : perm) {
    if (x >= m) throw InputError(what + " has image " + std::to_string(x) + " out of range");
    if (seen[x]) throw InputError(what + " is not a bijection (image " + std::to_string(x) + " repeated)");
    seen[x] = true;
  }
}

bool is_complete(const Graph& g) {
  const std::size_t n = g.order();
  return g.edge_count() == n * (n - 1) / 2;
}

// Connected-component label of every vertex.
std::vector<std::size_t> components(const Graph& g) {
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> comp(g.order(), none);
  std::size_t next = 0;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (comp[s] != none) continue;
    const auto dist = graph::bfs_distances(g, s);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (dist[v] != none) comp[v] = next;
    }
    ++next;
  }
  return comp;
}

// Two vertices in different blocks at finite distance >= 3.
bool has_far_cross_pair(const Graph& g, const Spread& spread) {
  const std::size_t n = g.order();
  const auto block = block_index(spread, n);
  const auto comp = components(g);
  const std::size_t words = g.words_per_row();
  std::vector<std::uint64_t> ball(words);
  for (Vertex u = 0; u < n; ++u) {
    std::fill(ball.begin(), ball.end(), 0);
    ball[u >> 6] |= 1ULL << (u & 63);
    const auto ru = g.row(u);
    for (std::size_t w = 0; w < words; ++w) ball[w] |= ru[w];
    for (Vertex x : g.neighbours(u)) {
      const auto rx = g.row(x);
      for (std::size_t w = 0; w < words; ++w) ball[w] |= rx[w];
    }
    for (Vertex v = u + 1; v < n; ++v) {
      if ((ball[v >> 6] >> (v & 63)) & 1) continue;
      if (comp[v] == comp[u] && block[v] != block[u]) return true;
    }
  }
  return false;
}

}  // namespace

void validate(const CayleySpec& spec) {
  const auto [p, q, a] = spec;
  if (p < 3 || !arith::is_prime(p)) throw InputError("p = " + str(p) + " is not an odd prime");
  if (q < 3 || q % 2 == 0) throw InputError("q = " + str(q) + " must be odd and at least 3");
  if (std::gcd(p, q) != 1) throw InputError("q = " + str(q) + " is not coprime to p = " + str(p));
  if (q > arith::kMaxFactorizable / p) throw InputError("pq exceeds 2^63 - 1");
  const u64 n = p * q;
  if (std::gcd(a % n, n) != 1) throw InputError("a = " + str(a) + " is not a unit modulo pq = " + str(n));
  if (!arith::is_generator(a % p, p)) {
    throw InputError("a mod p = " + str(a % p) + " does not generate the multiplicative group mod p = " + str(p));
  }
  if (pow_mod(a, (p - 1) / 2, n) != n - 1) {
    throw InputError("a^((p-1)/2) is not -1 modulo pq = " + str(n));
  }
}

std::vector<u64> GenSet::sorted() const {
  auto out = elements;
  std::sort(out.begin(), out.end());
  return out;
}

bool GenSet::contains(u64 x) const {
  return std::find(elements.begin(), elements.end(), x % modulus) != elements.end();
}

GenSet gen_set(u64 n, u64 a) {
  if (n < 2) throw InputError("gen_set: modulus must be at least 2");
  a %= n;
  if (std::gcd(a, n) != 1) throw InputError("gen_set: " + str(a) + " is not a unit modulo " + str(n));
  const u64 order = arith::multiplicative_order(a, n);
  if (order % 2 != 0 || pow_mod(a, order / 2, n) != n - 1) {
    throw InputError("gen_set: " + str(a) + " has no power equal to -1 modulo " + str(n));
  }
  GenSet s{n, {}};
  s.elements.reserve(order);
  u64 x = 1;
  for (u64 j = 0; j < order; ++j) {
    s.elements.push_back(x);
    x = arith::mul_mod(x, a, n);
  }
  return s;
}

std::size_t shift_intersection(const GenSet& s) {
  std::vector<bool> member(s.modulus, false);
  for (u64 x : s.elements) member[x] = true;
  std::size_t count = 0;
  for (u64 x : s.elements) {
    if (member[(x + s.modulus - 1) % s.modulus]) ++count;
  }
  return count;
}

std::vector<std::size_t> block_index(const Spread& spread, std::size_t n) {
  const std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> idx(n, none);
  std::size_t covered = 0;
  for (std::size_t b = 0; b < spread.blocks.size(); ++b) {
    for (Vertex v : spread.blocks[b]) {
      if (v >= n) throw InputError("spread block " + std::to_string(b) + " has vertex out of range");
      if (idx[v] != none) throw InputError("spread blocks overlap at vertex " + std::to_string(v));
      idx[v] = b;
      ++covered;
    }
  }
  if (covered != n) throw InputError("spread does not cover every vertex");
  return idx;
}

CayleyGraph gamma_pq(const CayleySpec& spec) {
  validate(spec);
  const u64 p = spec.p, q = spec.q, n = spec.modulus();
  CayleyGraph out;
  out.spec = spec;
  out.connection = gen_set(n, spec.a);
  out.graph = Graph(n);
  for (u64 x = 0; x < n; ++x) {
    for (u64 s : out.connection.elements) {
      const u64 y = (x + s) % n;
      if (x < y) out.graph.add_edge(x, y);
    }
  }
  std::vector<u64> reps = out.connection.sorted();
  reps.insert(reps.begin(), 0);
  out.spread.blocks.reserve(p);
  for (u64 r : reps) {
    std::vector<Vertex> block;
    block.reserve(q);
    for (u64 m = r % p; m < n; m += p) block.push_back(m);
    out.spread.blocks.push_back(std::move(block));
  }
  out.lambda = shift_intersection(out.connection);
  return out;
}

FusedGraph fuse(const FusionSpec& fs) {
  if (fs.copies.empty()) throw InputError("fuse: need at least one copy");
  const std::size_t t = fs.copies.size();
  const std::size_t v = fs.copies[0].graph.order();
  const std::size_t m = fs.copies[0].spread.blocks.size();
  if (fs.perms.size() != t - 1) {
    throw InputError("fuse: expected " + std::to_string(t - 1) + " permutations, got " +
                     std::to_string(fs.perms.size()));
  }
  for (std::size_t i = 0; i < t; ++i) {
    const auto& c = fs.copies[i];
    if (c.graph.order() != v) throw InputError("fuse: copy " + std::to_string(i) + " has a different order");
    if (c.spread.blocks.size() != m) {
      throw InputError("fuse: copy " + std::to_string(i) + " has " + std::to_string(c.spread.blocks.size()) +
                       " blocks, expected " + std::to_string(m));
    }
    block_index(c.spread, v);
    if (i > 0) check_bijection(fs.perms[i - 1], m, "permutation " + std::to_string(i));
  }

  FusedGraph out;
  out.graph = Graph(t * v);
  for (std::size_t i = 0; i < t; ++i) {
    for (const auto& [x, y] : graph::edge_list(fs.copies[i].graph)) out.graph.add_edge(i * v + x, i * v + y);
  }
  out.cliques.blocks.resize(m);
  for (std::size_t c = 0; c < m; ++c) {
    auto& members = out.cliques.blocks[c];
    for (std::size_t i = 0; i < t; ++i) {
      const std::size_t b = i == 0 ? c : fs.perms[i - 1][c];
      for (Vertex x : fs.copies[i].spread.blocks[b]) members.push_back(i * v + x);
    }
    std::sort(members.begin(), members.end());
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (!out.graph.adjacent(members[a], members[b])) out.graph.add_edge(members[a], members[b]);
      }
    }
  }
  return out;
}

std::string_view to_string(StrictnessBasis b) {
  return b == StrictnessBasis::SufficientCondition ? "sufficient-condition-met" : "verified-by-exhaustion";
}

Strictness strictness_check(const FusionSpec& fs, const Graph& fused, const Workers& workers) {
  const std::size_t t = fs.copies.size();
  if (t >= 2 && std::none_of(fs.copies.begin(), fs.copies.end(),
                             [](const FusionCopy& c) { return is_complete(c.graph); })) {
    return {true, StrictnessBasis::SufficientCondition};
  }
  if (t == 1 && has_far_cross_pair(fs.copies[0].graph, fs.copies[0].spread)) {
    return {true, StrictnessBasis::SufficientCondition};
  }
  const auto report = graph::regularity_report(fused, workers);
  return {report.is_edge_regular && !report.is_complete && !report.is_strongly_regular,
          StrictnessBasis::VerifiedByExhaustion};
}

Construction construct_neumaier(u64 q, u64 p, u64 a, const std::vector<std::vector<std::size_t>>& perms) {
  CayleyGraph base = gamma_pq({p, q, a});
  const std::size_t lambda = base.lambda;
  if ((lambda + 2) % q != 0) {
    throw InputError("lambda = " + std::to_string(lambda) + " is " + std::to_string(lambda % q) +
                     " mod q = " + str(q) + "; the construction needs lambda = -2 (mod q)");
  }
  const std::size_t t = (lambda + 2) / q;
  // v t = (lambda + 2)(k + 1) with v = pq, k + 1 = p.
  if ((lambda + 2) * p != t * p * q) throw InvariantError("construct_neumaier: t is not integral");
  if (perms.size() != t - 1) {
    throw InputError("t = " + std::to_string(t) + " needs " + std::to_string(t - 1) + " permutations, got " +
                     std::to_string(perms.size()));
  }

  Construction out;
  out.spec = base.spec;
  out.lambda = lambda;
  out.t = t;
  const auto L = static_cast<feasibility::Int>(lambda);
  out.params = {static_cast<feasibility::Int>(t * p * q), static_cast<feasibility::Int>(p) + L, L, 1, L + 2};
  out.fusion.perms = perms;
  out.fusion.copies.reserve(t);
  for (std::size_t i = 0; i + 1 < t; ++i) out.fusion.copies.push_back({base.graph, base.spread});
  out.fusion.copies.push_back({std::move(base.graph), std::move(base.spread)});
  out.fused = fuse(out.fusion);
  out.witness = {out.fused.cliques.blocks.at(0), graph::SubsetKind::Clique};
  return out;
}

Construction construct_neumaier(u64 q, u64 p, u64 a) {
  CayleyGraph base = gamma_pq({p, q, a});
  const std::size_t t = (base.lambda + 2) % q == 0 ? (base.lambda + 2) / q : 1;
  std::vector<std::vector<std::size_t>> identity(t - 1, std::vector<std::size_t>(p));
  for (auto& perm : identity) std::iota(perm.begin(), perm.end(), std::size_t{0});
  return construct_neumaier(q, p, a, identity);
}

std::vector<std::size_t> parse_permutation(const std::string& text, std::size_t m) {
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::vector<std::size_t> perm;
  if (cleaned.find('(') == std::string::npos) {
    std::istringstream is(cleaned);
    std::string tok;
    while (is >> tok) {
      std::size_t pos = 0;
      std::size_t value = 0;
      try {
        value = std::stoull(tok, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != tok.size() || tok[0] == '-') throw InputError("permutation: bad entry '" + tok + "'");
      perm.push_back(value);
    }
    check_bijection(perm, m, "permutation");
    return perm;
  }

  perm.resize(m);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::vector<bool> used(m, false);
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < cleaned.size() && std::isspace(static_cast<unsigned char>(cleaned[i]))) ++i;
  };
  skip_space();
  while (i < cleaned.size()) {
    if (cleaned[i] != '(') throw InputError("permutation: expected '(' in cycle notation");
    ++i;
    std::vector<std::size_t> cycle;
    for (;;) {
      skip_space();
      if (i >= cleaned.size()) throw InputError("permutation: unterminated cycle");
      if (cleaned[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(cleaned[i]))) {
        throw InputError("permutation: bad character in cycle");
      }
      std::size_t value = 0;
      while (i < cleaned.size() && std::isdigit(static_cast<unsigned char>(cleaned[i]))) {
        value = value * 10 + static_cast<std::size_t>(cleaned[i] - '0');
        if (value >= m) throw InputError("permutation: point out of range");
        ++i;
      }
      if (used[value]) throw InputError("permutation: point " + std::to_string(value) + " appears twice");
      used[value] = true;
      cycle.push_back(value);
    }
    for (std::size_t c = 0; c < cycle.size(); ++c) perm[cycle[c]] = cycle[(c + 1) % cycle.size()];
    skip_space();
  }
  return perm;
}

}  // namespace neumaier::cayley
