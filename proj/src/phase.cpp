#include "gainline/phase.hpp"

#include <string>

#include "gainline/error.hpp"

namespace gainline {

GPhase::GPhase(SimpleGraph graph, GroupPtr group, std::vector<Element> low_entry,
               std::vector<Element> high_entry)
    : graph_(std::move(graph)), group_(std::move(group)), low_(std::move(low_entry)),
      high_(std::move(high_entry)) {
  if (!group_) throw StructuralError("G-phase needs a group");
  if (low_.size() != graph_.edge_count() || high_.size() != graph_.edge_count())
    throw StructuralError("G-phase needs two entries per edge");
  for (std::size_t k = 0; k < low_.size(); ++k)
    if (!group_->contains(low_[k]) || !group_->contains(high_[k]))
      throw StructuralError("G-phase entry outside the group");
}

GPhase GPhase::incidence(SimpleGraph graph, GroupPtr group) {
  const auto m = graph.edge_count();
  return GPhase(std::move(graph), std::move(group), std::vector<Element>(m, kIdentity),
                std::vector<Element>(m, kIdentity));
}

GPhase GPhase::from_matrix(SimpleGraph graph, const CGMatrix& matrix) {
  if (matrix.rows() != graph.vertex_count() || matrix.cols() != graph.edge_count())
    throw ValidationError("G-phase matrix must be " + std::to_string(graph.vertex_count()) + "x" +
                          std::to_string(graph.edge_count()));
  std::vector<Element> low, high;
  for (std::size_t k = 0; k < graph.edge_count(); ++k) {
    const auto& e = graph.edge(k);
    for (Vertex v = 0; v < graph.vertex_count(); ++v) {
      const auto& entry = matrix(v, k);
      if (e.contains(v)) {
        auto g = entry.as_group_element();
        if (!g)
          throw ValidationError("G-phase entry (" + std::to_string(v) + "," + std::to_string(k) +
                                ") must be a group element");
        (v == e.u ? low : high).push_back(*g);
      } else if (!entry.is_zero()) {
        throw ValidationError("G-phase entry (" + std::to_string(v) + "," + std::to_string(k) +
                              ") must be zero");
      }
    }
  }
  return GPhase(std::move(graph), matrix.group(), std::move(low), std::move(high));
}

Element GPhase::at(Vertex v, std::size_t k) const {
  const auto& e = graph_.edge(k);
  if (v == e.u) return low_[k];
  if (v == e.v) return high_[k];
  throw StructuralError("G-phase entry (" + std::to_string(v) + "," + std::to_string(k) +
                        ") is a structural zero");
}

void GPhase::set(Vertex v, std::size_t k, Element g) {
  if (!group_->contains(g)) throw StructuralError("G-phase entry outside the group");
  const auto& e = graph_.edge(k);
  if (v == e.u)
    low_[k] = g;
  else if (v == e.v)
    high_[k] = g;
  else
    throw StructuralError("cannot set a structural zero of a G-phase");
}

CGMatrix GPhase::to_matrix() const {
  CGMatrix out(group_, graph_.vertex_count(), graph_.edge_count());
  for (std::size_t k = 0; k < graph_.edge_count(); ++k) {
    out.set(graph_.edge(k).u, k, low_[k]);
    out.set(graph_.edge(k).v, k, high_[k]);
  }
  return out;
}

bool operator==(const GPhase& a, const GPhase& b) {
  return a.graph_ == b.graph_ && same_group(a.group_, b.group_) && a.low_ == b.low_ &&
         a.high_ == b.high_;
}

PhaseContext::PhaseContext(const FiniteGroup& group, Element s1, Element s2)
    : s1_(group.central_weak_involution(s1)), s2_(group.central_weak_involution(s2)) {}

// ---------------------------------------------------------------------------

GainFunction psi(const GPhase& h, const PhaseContext& ctx) {
  const auto& g = h.graph();
  const auto& group = *h.group();
  std::vector<Element> forward;
  forward.reserve(g.edge_count());
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const auto& e = g.edge(k);
    forward.push_back(group.multiply(group.multiply(ctx.s1(), h.at(e.u, k)),
                                     group.inverse(h.at(e.v, k))));
  }
  return GainFunction(g, h.group(), std::move(forward));
}

GainFunction psi_line(const GPhase& h, const PhaseContext& ctx) {
  return psi_line(h, ctx, line_graph(h.graph()));
}

GainFunction psi_line(const GPhase& h, const PhaseContext& ctx, const LineGraphData& line) {
  const auto& group = *h.group();
  std::vector<Element> forward;
  forward.reserve(line.line.edge_count());
  for (std::size_t k = 0; k < line.line.edge_count(); ++k) {
    const auto& le = line.line.edge(k);  // le.u = e_i, le.v = e_j, i < j
    const Vertex v = line.shared_vertex[k];
    forward.push_back(group.multiply(group.multiply(ctx.s2(), group.inverse(h.at(v, le.u))),
                                     h.at(v, le.v)));
  }
  return GainFunction(line.line, h.group(), std::move(forward));
}

GPhase phase_from_orientation(const GainFunction& psi_, const Orientation& orientation,
                              const PhaseContext& ctx) {
  const auto& g = psi_.graph();
  GPhase h = GPhase::incidence(g, psi_.group());
  for (std::size_t k = 0; k < g.edge_count(); ++k) {
    const auto& arc = orientation.arc(k);
    if (!g.edge(k).contains(arc.tail) || !g.edge(k).contains(arc.head))
      throw StructuralError("orientation does not match the gain function's graph");
    h.set(arc.tail, k, psi_(arc.tail, arc.head));
    h.set(arc.head, k, ctx.s1());
  }
  return h;
}

GPhase act(const GPhase& h, const std::optional<DiagonalGroupMatrix>& f,
           const std::optional<DiagonalGroupMatrix>& g) {
  const auto& graph = h.graph();
  const auto& group = *h.group();
  if (f && f->size() != graph.vertex_count())
    throw StructuralError("left action needs an element of G^n with n = " +
                          std::to_string(graph.vertex_count()));
  if (g && g->size() != graph.edge_count())
    throw StructuralError("right action needs an element of G^m with m = " +
                          std::to_string(graph.edge_count()));
  GPhase out = h;
  for (std::size_t k = 0; k < graph.edge_count(); ++k) {
    for (Vertex v : {graph.edge(k).u, graph.edge(k).v}) {
      Element x = h.at(v, k);
      if (f) x = group.multiply(group.inverse(f->diag[v]), x);
      if (g) x = group.multiply(x, g->diag[k]);
      out.set(v, k, x);
    }
  }
  return out;
}

bool same_orbit(const GPhase& h1, const GPhase& h2, OrbitKind which, const PhaseContext& ctx) {
  if (!(h1.graph() == h2.graph())) throw StructuralError("same_orbit: G-phases of different graphs");
  if (!same_group(h1.group(), h2.group())) throw StructuralError("same_orbit: different groups");
  switch (which) {
    case OrbitKind::R:
      return psi(h1, ctx) == psi(h2, ctx);
    case OrbitKind::L:
      return psi_line(h1, ctx) == psi_line(h2, ctx);
    case OrbitKind::LR:
      return switching_equivalent(psi(h1, ctx), psi(h2, ctx)).has_value();
    case OrbitKind::LCapR:
      return psi(h1, ctx) == psi(h2, ctx) && psi_line(h1, ctx) == psi_line(h2, ctx);
  }
  return false;
}

GainFunction gain_line(const GainFunction& psi_, const Orientation& orientation,
                       const PhaseContext& ctx) {
  const auto& group = *psi_.group();
  const auto line = line_graph(psi_.graph());
  const Element s1 = ctx.s1(), s2 = ctx.s2(), s1s2 = group.multiply(s1, s2);
  std::vector<Element> forward;
  forward.reserve(line.line.edge_count());
  for (std::size_t k = 0; k < line.line.edge_count(); ++k) {
    const std::size_t a = line.line.edge(k).u, b = line.line.edge(k).v;
    const Vertex v = line.shared_vertex[k];
    const Vertex x = psi_.graph().edge(a).other(v);
    const Vertex y = psi_.graph().edge(b).other(v);
    const bool a_into = !orientation.is_tail(a, v);
    const bool b_into = !orientation.is_tail(b, v);
    Element z;
    if (a_into && !b_into)  // x -> v -> y
      z = group.multiply(s1s2, psi_(v, y));
    else if (a_into && b_into)  // x -> v <- y
      z = s2;
    else if (!a_into && !b_into)  // x <- v -> y
      z = group.multiply(s2, group.multiply(psi_(x, v), psi_(v, y)));
    else  // x <- v <- y
      z = group.multiply(s1s2, psi_(x, v));
    forward.push_back(z);
  }
  return GainFunction(line.line, psi_.group(), std::move(forward));
}

GPhase reff_line_phase(const GPhase& h) {
  const auto& group = *h.group();
  const auto line = line_graph(h.graph());
  const auto& lg = line.line;
  std::vector<Element> low, high;
  low.reserve(lg.edge_count());
  high.reserve(lg.edge_count());
  for (std::size_t k = 0; k < lg.edge_count(); ++k) {
    const Vertex v = line.shared_vertex[k];
    low.push_back(group.inverse(h.at(v, lg.edge(k).u)));
    high.push_back(group.inverse(h.at(v, lg.edge(k).v)));
  }
  return GPhase(lg, h.group(), std::move(low), std::move(high));
}

std::optional<GPhase> recognize_gain_line(const GainFunction& zeta, const SimpleGraph& root,
                                          const PhaseContext& ctx) {
  const auto line = line_graph(root);
  if (!(zeta.graph() == line.line))
    throw StructuralError("recognize_gain_line: gain function does not live on the line graph");
  const auto& group = *zeta.group();
  const Element s2 = ctx.s2();
  GPhase h = GPhase::incidence(root, zeta.group());

  // Rows are independent: every line edge has a unique shared vertex.
  for (Vertex v = 0; v < root.vertex_count(); ++v) {
    const auto& inc = root.incident_edges(v);
    if (inc.empty()) continue;
    const std::size_t base = inc.front();
    for (std::size_t t = 1; t < inc.size(); ++t)
      h.set(v, inc[t], group.multiply(s2, zeta(base, inc[t])));
    for (std::size_t p = 0; p < inc.size(); ++p) {
      for (std::size_t q = p + 1; q < inc.size(); ++q) {
        const Element lhs = group.multiply(group.inverse(h.at(v, inc[p])), h.at(v, inc[q]));
        if (lhs != group.multiply(s2, zeta(inc[p], inc[q]))) return std::nullopt;
      }
    }
  }
  return h;
}

}  // namespace gainline
