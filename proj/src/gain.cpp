#include "gainline/gain.hpp"

#include <string>

#include "gainline/error.hpp"

namespace gainline {

GainFunction::GainFunction(SimpleGraph graph, GroupPtr group, std::vector<Element> forward)
    : graph_(std::move(graph)), group_(std::move(group)), forward_(std::move(forward)) {
  if (!group_) throw StructuralError("gain function needs a group");
  if (forward_.size() != graph_.edge_count())
    throw StructuralError("gain function needs one gain per edge (" +
                          std::to_string(graph_.edge_count()) + "), got " +
                          std::to_string(forward_.size()));
  for (auto g : forward_)
    if (!group_->contains(g)) throw StructuralError("gain outside the group");
}

GainFunction GainFunction::constant(SimpleGraph graph, GroupPtr group, Element s) {
  if (group->multiply(s, s) != kIdentity)
    throw ValidationError("constant gain function needs a weak involution");
  const auto m = graph.edge_count();
  return GainFunction(std::move(graph), std::move(group), std::vector<Element>(m, s));
}

Element GainFunction::operator()(Vertex a, Vertex b) const {
  auto k = graph_.edge_index(a, b);
  if (!k)
    throw InputError("vertices " + std::to_string(a) + " and " + std::to_string(b) +
                     " are not adjacent");
  return along(*k, a);
}

Element GainFunction::along(std::size_t k, Vertex from) const {
  const auto& e = graph_.edge(k);
  if (from == e.u) return forward_[k];
  if (from == e.v) return group_->inverse(forward_[k]);
  throw StructuralError("vertex is not an endpoint of edge " + std::to_string(k));
}

GainFunction GainFunction::scaled(Element c) const {
  std::vector<Element> out;
  out.reserve(forward_.size());
  for (auto g : forward_) out.push_back(group_->multiply(c, g));
  return GainFunction(graph_, group_, std::move(out));
}

bool operator==(const GainFunction& a, const GainFunction& b) {
  return a.graph_ == b.graph_ && same_group(a.group_, b.group_) && a.forward_ == b.forward_;
}

CGMatrix gain_adjacency(const GainFunction& psi) {
  const auto& g = psi.graph();
  CGMatrix a(psi.group(), g.vertex_count(), g.vertex_count());
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const auto& e = g.edge(k);
    a.set(e.u, e.v, psi.edge_gain(k));
    a.set(e.v, e.u, psi.group()->inverse(psi.edge_gain(k)));
  }
  return a;
}

CGMatrix s_laplacian(const GainFunction& psi, CentralWeakInvolution s) {
  const auto& group = psi.group();
  // Re-validate: s may have been minted by a structurally different group.
  group->central_weak_involution(s.element());
  const auto& g = psi.graph();
  CGMatrix lap = scalar_mul(AlgebraElement(group, s.element()), gain_adjacency(psi), Side::Left);
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    lap.set(v, v, AlgebraElement(group, kIdentity, static_cast<double>(g.degree(v))));
  return lap;
}

GainFunction switch_gain(const GainFunction& psi, const SwitchingFunction& f) {
  const auto& g = psi.graph();
  const auto& group = *psi.group();
  if (f.values.size() != g.vertex_count())
    throw StructuralError("switching function needs one value per vertex");
  std::vector<Element> out;
  out.reserve(g.edge_count());
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const auto& e = g.edge(k);
    out.push_back(group.multiply(group.multiply(group.inverse(f.values.at(e.u)), psi.edge_gain(k)),
                                 f.values.at(e.v)));
  }
  return GainFunction(g, psi.group(), std::move(out));
}

Element walk_gain(const GainFunction& psi, const std::vector<Vertex>& walk) {
  Element acc = kIdentity;
  for (std::size_t i = 0; i + 1 < walk.size(); ++i)
    acc = psi.group()->multiply(acc, psi(walk[i], walk[i + 1]));
  return acc;
}

namespace {

// Propagates f along the BFS tree from f(root) = seed using
// f(v) = psi1(u,v)^{-1} f(u) psi2(u,v), then checks psi1^f == psi2 on every edge.
std::optional<SwitchingFunction> propagate(const GainFunction& psi1, const GainFunction& psi2,
                                           const SpanningTree& tree, Element seed) {
  const auto& g = psi1.graph();
  const auto& group = *psi1.group();
  SwitchingFunction f{std::vector<Element>(g.vertex_count(), kIdentity)};
  f.values[0] = seed;
  for (auto v : tree.order) {
    if (!tree.parent[v]) continue;
    Vertex u = *tree.parent[v];
    f.values[v] = group.multiply(group.multiply(group.inverse(psi1(u, v)), f.values[u]), psi2(u, v));
  }
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    if (tree.tree_edge[k]) continue;
    const auto& e = g.edge(k);
    Element lhs = group.multiply(group.multiply(group.inverse(f.values[e.u]), psi1.edge_gain(k)),
                                 f.values[e.v]);
    if (lhs != psi2.edge_gain(k)) return std::nullopt;
  }
  return f;
}

}  // namespace

BalanceResult is_balanced(const GainFunction& psi) {
  auto one = GainFunction::constant(psi.graph(), psi.group(), kIdentity);
  auto f = propagate(psi, one, bfs_tree(psi.graph()), kIdentity);
  return {f.has_value(), f};
}

std::optional<SwitchingFunction> switching_equivalent(const GainFunction& psi1,
                                                      const GainFunction& psi2) {
  if (!(psi1.graph() == psi2.graph()))
    throw StructuralError("switching_equivalent: gain functions live on different graphs");
  if (!same_group(psi1.group(), psi2.group()))
    throw StructuralError("switching_equivalent: gain functions use different groups");
  const auto tree = bfs_tree(psi1.graph());
  for (auto seed : psi1.group()->elements())
    if (auto f = propagate(psi1, psi2, tree, seed)) return f;
  return std::nullopt;
}

std::optional<bool> is_antibalanced(const GainFunction& psi) {
  auto minus = psi.group()->find("-1");
  if (!minus) return std::nullopt;
  try {
    psi.group()->central_weak_involution(*minus);
  } catch (const ValidationError&) {
    return std::nullopt;
  }
  auto target = GainFunction::constant(psi.graph(), psi.group(), *minus);
  return switching_equivalent(psi, target).has_value();
}

}  // namespace gainline
