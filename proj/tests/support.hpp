#pragma once

// Random instance generators and graph enumerators shared by the unit and acceptance tests.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gainline/algebra.hpp"
#include "gainline/gain.hpp"
#include "gainline/graph.hpp"
#include "gainline/group.hpp"
#include "gainline/phase.hpp"

namespace testsupport {

using namespace gainline;
using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// The small groups the randomized suites draw from.
inline std::vector<GroupPtr> test_groups() {
  return {FiniteGroup::sign(),
          FiniteGroup::cyclic(4),
          FiniteGroup::t4(),
          FiniteGroup::direct_product(FiniteGroup::sign(), FiniteGroup::sign()),
          FiniteGroup::dihedral(4),
          FiniteGroup::quaternion8()};
}

inline Element random_element(Rng& rng, const FiniteGroup& g) {
  return Element(static_cast<std::uint32_t>(uniform(rng, 0, g.order() - 1)));
}

inline CentralWeakInvolution random_involution(Rng& rng, const FiniteGroup& g) {
  const auto all = g.central_weak_involutions();
  return all[uniform(rng, 0, all.size() - 1)];
}

inline PhaseContext random_context(Rng& rng, const FiniteGroup& g) {
  return PhaseContext(random_involution(rng, g), random_involution(rng, g));
}

/// Connected graph on n vertices: random spanning tree plus extra edges, with shuffled
/// vertex labels and edge order.
inline SimpleGraph random_graph(Rng& rng, std::size_t n, double extra_density = 0.3) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::set<std::pair<Vertex, Vertex>> edges;
  auto add = [&](Vertex a, Vertex b) { edges.insert({std::min(a, b), std::max(a, b)}); };
  for (std::size_t i = 1; i < n; ++i) add(perm[i], perm[uniform(rng, 0, i - 1)]);
  std::bernoulli_distribution extra(extra_density);
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (extra(rng)) add(a, b);
  std::vector<std::pair<Vertex, Vertex>> list(edges.begin(), edges.end());
  std::shuffle(list.begin(), list.end(), rng);
  for (auto& e : list)
    if (std::bernoulli_distribution(0.5)(rng)) std::swap(e.first, e.second);
  return SimpleGraph(n, list);
}

inline SimpleGraph random_graph(Rng& rng, std::size_t n_min, std::size_t n_max, double density) {
  return random_graph(rng, uniform(rng, n_min, n_max), density);
}

inline GainFunction random_gain(Rng& rng, const SimpleGraph& graph, const GroupPtr& group) {
  std::vector<Element> f(graph.edge_count());
  for (auto& x : f) x = random_element(rng, *group);
  return GainFunction(graph, group, f);
}

inline GPhase random_phase(Rng& rng, const SimpleGraph& graph, const GroupPtr& group) {
  std::vector<Element> lo(graph.edge_count()), hi(graph.edge_count());
  for (auto& x : lo) x = random_element(rng, *group);
  for (auto& x : hi) x = random_element(rng, *group);
  return GPhase(graph, group, lo, hi);
}

inline DiagonalGroupMatrix random_diagonal(Rng& rng, std::size_t n, const FiniteGroup& g) {
  DiagonalGroupMatrix d;
  for (std::size_t i = 0; i < n; ++i) d.diag.push_back(random_element(rng, g));
  return d;
}

inline SwitchingFunction random_switching(Rng& rng, std::size_t n, const FiniteGroup& g) {
  return SwitchingFunction{random_diagonal(rng, n, g).diag};
}

inline Orientation random_orientation(Rng& rng, const SimpleGraph& graph) {
  std::vector<Orientation::Arc> arcs;
  for (const auto& e : graph.edges())
    arcs.push_back(std::bernoulli_distribution(0.5)(rng) ? Orientation::Arc{e.u, e.v}
                                                         : Orientation::Arc{e.v, e.u});
  return Orientation(graph, arcs);
}

/// Every phase of a graph over a group, in lexicographic order of the entries.
inline std::vector<GPhase> all_phases(const SimpleGraph& graph, const GroupPtr& group) {
  const std::size_t m = graph.edge_count(), q = group->order();
  std::vector<GPhase> out;
  std::vector<std::uint32_t> digits(2 * m, 0);
  while (true) {
    std::vector<Element> lo(m), hi(m);
    for (std::size_t k = 0; k < m; ++k) {
      lo[k] = Element(digits[k]);
      hi[k] = Element(digits[m + k]);
    }
    out.emplace_back(graph, group, lo, hi);
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == q) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return out;
}

/// Every vector in G^n.
inline std::vector<DiagonalGroupMatrix> all_diagonals(std::size_t n, const FiniteGroup& g) {
  std::vector<DiagonalGroupMatrix> out;
  std::vector<std::uint32_t> digits(n, 0);
  while (true) {
    DiagonalGroupMatrix d;
    for (auto x : digits) d.diag.push_back(Element(x));
    out.push_back(d);
    std::size_t i = 0;
    while (i < n && ++digits[i] == g.order()) digits[i++] = 0;
    if (i == n) break;
  }
  return out;
}

/// Every gain function on a graph over a group.
inline std::vector<GainFunction> all_gains(const SimpleGraph& graph, const GroupPtr& group) {
  std::vector<GainFunction> out;
  for (const auto& d : all_diagonals(graph.edge_count(), *group)) out.emplace_back(graph, group, d.diag);
  return out;
}

// ---------------------------------------------------------------------------------------------
// Graph enumeration

using AdjacencyBits = std::vector<std::vector<bool>>;

inline bool connected(const AdjacencyBits& adj) {
  const std::size_t n = adj.size();
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    auto v = stack.back();
    stack.pop_back();
    for (std::size_t w = 0; w < n; ++w)
      if (adj[v][w] && !seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

/// Canonical form: lexicographically largest upper-triangle bit string over all vertex
/// orders that list vertices by increasing (degree, sorted neighbour degrees) class.
inline std::uint64_t canonical_form(const AdjacencyBits& adj) {
  const std::size_t n = adj.size();
  std::vector<std::pair<std::vector<std::size_t>, std::size_t>> key(n);
  std::vector<std::size_t> deg(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w) deg[v] += adj[v][w];
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::size_t> k{deg[v]};
    std::vector<std::size_t> nd;
    for (std::size_t w = 0; w < n; ++w)
      if (adj[v][w]) nd.push_back(deg[w]);
    std::sort(nd.begin(), nd.end());
    k.insert(k.end(), nd.begin(), nd.end());
    key[v] = {k, v};
  }
  std::sort(key.begin(), key.end());
  std::vector<std::size_t> order(n), cls(n);
  for (std::size_t i = 0; i < n; ++i) {
    order[i] = key[i].second;
    cls[i] = (i > 0 && key[i].first == key[i - 1].first) ? cls[i - 1] : i;
  }
  // Permute within each class block [start, end).
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && cls[j] == cls[i]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = 0;
  auto encode = [&] {
    std::uint64_t code = 0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) code = (code << 1) | (adj[order[a]][order[b]] ? 1u : 0u);
    return code;
  };
  auto recurse = [&](auto& self, std::size_t block) -> void {
    if (block == blocks.size()) {
      best = std::max(best, encode());
      return;
    }
    auto [s, e] = blocks[block];
    std::sort(order.begin() + static_cast<long>(s), order.begin() + static_cast<long>(e));
    do {
      self(self, block + 1);
    } while (std::next_permutation(order.begin() + static_cast<long>(s), order.begin() + static_cast<long>(e)));
  };
  recurse(recurse, 0);
  return best;
}

inline SimpleGraph to_graph(const AdjacencyBits& adj) {
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (std::size_t a = 0; a < adj.size(); ++a)
    for (std::size_t b = a + 1; b < adj.size(); ++b)
      if (adj[a][b]) edges.emplace_back(a, b);
  return SimpleGraph(adj.size(), edges);
}

/// All connected graphs on 2..max_n vertices, one per isomorphism class. Built by adding
/// a vertex joined to a non-empty vertex subset (every connected graph has a vertex
/// whose removal keeps it connected, so all classes are reached).
inline std::vector<SimpleGraph> connected_graphs_up_to_iso(std::size_t max_n,
                                                           std::vector<std::size_t>* counts = nullptr) {
  std::vector<AdjacencyBits> level{AdjacencyBits{{false}}};
  std::vector<SimpleGraph> out;
  if (counts) counts->assign(max_n + 1, 0);
  if (counts) (*counts)[1] = 1;
  for (std::size_t n = 2; n <= max_n; ++n) {
    std::map<std::uint64_t, AdjacencyBits> next;
    for (const auto& g : level) {
      for (std::uint32_t mask = 1; mask < (1u << (n - 1)); ++mask) {
        AdjacencyBits h(n, std::vector<bool>(n, false));
        for (std::size_t a = 0; a + 1 < n; ++a)
          for (std::size_t b = 0; b + 1 < n; ++b) h[a][b] = g[a][b];
        for (std::size_t a = 0; a + 1 < n; ++a)
          if (mask & (1u << a)) h[a][n - 1] = h[n - 1][a] = true;
        next.emplace(canonical_form(h), h);
      }
    }
    level.clear();
    for (auto& [code, h] : next) {
      level.push_back(h);
      out.push_back(to_graph(h));
    }
    if (counts) (*counts)[n] = level.size();
  }
  return out;
}

/// All labelled connected graphs with min_n..max_n vertices and at most max_edges edges.
inline std::vector<SimpleGraph> labelled_connected_graphs(std::size_t min_n, std::size_t max_n,
                                                          std::size_t max_edges) {
  std::vector<SimpleGraph> out;
  for (std::size_t n = min_n; n <= max_n; ++n) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
    for (std::uint32_t mask = 1; mask < (1u << pairs.size()); ++mask) {
      if (static_cast<std::size_t>(std::popcount(mask)) > max_edges) continue;
      AdjacencyBits adj(n, std::vector<bool>(n, false));
      std::vector<std::pair<Vertex, Vertex>> edges;
      for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask & (1u << i)) {
          edges.push_back(pairs[i]);
          adj[pairs[i].first][pairs[i].second] = adj[pairs[i].second][pairs[i].first] = true;
        }
      if (connected(adj)) out.emplace_back(n, edges);
    }
  }
  return out;
}

}  // namespace testsupport
