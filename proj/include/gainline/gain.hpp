#pragma once

#include <optional>
#include <vector>

#include "gainline/algebra.hpp"
#include "gainline/graph.hpp"
#include "gainline/group.hpp"

namespace gainline {

/// A vertex function f: V -> G.
struct SwitchingFunction {
  std::vector<Element> values;

  friend bool operator==(const SwitchingFunction&, const SwitchingFunction&) = default;
};

/// A gain function psi on the oriented edges of a graph.
///
/// Only the gain along each edge's default direction (lower -> higher vertex) is
/// stored; the reverse gain is always the inverse, so psi(u,v) psi(v,u) = 1 holds
/// by construction.
class GainFunction {
 public:
  /// forward[k] is psi(u_k, v_k) for edge k = {u_k, v_k}, u_k < v_k.
  GainFunction(SimpleGraph graph, GroupPtr group, std::vector<Element> forward);

  /// The constant gain function with value s (s must be a weak involution).
  static GainFunction constant(SimpleGraph graph, GroupPtr group, Element s);

  const SimpleGraph& graph() const { return graph_; }
  const GroupPtr& group() const { return group_; }
  const std::vector<Element>& forward() const { return forward_; }
  Element edge_gain(std::size_t k) const { return forward_.at(k); }

  /// psi(a, b); InputError if a and b are not adjacent.
  Element operator()(Vertex a, Vertex b) const;
  /// The gain of edge k traversed starting from endpoint `from`.
  Element along(std::size_t k, Vertex from) const;

  /// Pointwise left multiplication by a central element c: (c psi)(u,v) = c psi(u,v).
  GainFunction scaled(Element c) const;

  friend bool operator==(const GainFunction& a, const GainFunction& b);

 private:
  SimpleGraph graph_;
  GroupPtr group_;
  std::vector<Element> forward_;
};

/// A_{Gamma,psi}: psi(v_i, v_j) on edges, zero elsewhere.
CGMatrix gain_adjacency(const GainFunction& psi);
/// deg(Gamma, G) + s A_{Gamma,psi}.
CGMatrix s_laplacian(const GainFunction& psi, CentralWeakInvolution s);

/// psi^f(u, v) = f(u)^{-1} psi(u, v) f(v).
GainFunction switch_gain(const GainFunction& psi, const SwitchingFunction& f);

/// Ordered product of the gains along consecutive vertices of the walk.
Element walk_gain(const GainFunction& psi, const std::vector<Vertex>& walk);

struct BalanceResult {
  bool balanced = false;
  /// When balanced: f with psi^f = 1_G.
  std::optional<SwitchingFunction> witness;
};

/// Balance via a BFS spanning tree: f(root) = 1, f(v) = psi(u,v)^{-1} f(u) along tree
/// edges, accepted iff every edge then switches to 1_G.
BalanceResult is_balanced(const GainFunction& psi);

/// Some f with psi2 = psi1^f, or nullopt. Tries every value of f at the BFS root.
std::optional<SwitchingFunction> switching_equivalent(const GainFunction& psi1,
                                                      const GainFunction& psi2);

/// Switching-equivalent to the constant -1 gain; nullopt when the group has no
/// element labelled "-1" that is a central weak involution.
std::optional<bool> is_antibalanced(const GainFunction& psi);

}  // namespace gainline
