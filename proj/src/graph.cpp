#include "gainline/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "gainline/error.hpp"

namespace gainline {

SimpleGraph::SimpleGraph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges)
    : n_(n), incident_(n) {
  if (n == 0) throw ValidationError("graph must have at least one vertex");
  if (edges.empty() && n != 1) throw ValidationError("graph must have at least one edge");
  for (const auto& [a, b] : edges) {
    if (a >= n || b >= n)
      throw ValidationError("edge {" + std::to_string(a) + "," + std::to_string(b) +
                            "} has an endpoint out of range");
    if (a == b) throw ValidationError("loops are not allowed (vertex " + std::to_string(a) + ")");
    Edge e{std::min(a, b), std::max(a, b)};
    if (std::find(edges_.begin(), edges_.end(), e) != edges_.end())
      throw ValidationError("duplicate edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}");
    incident_[e.u].push_back(edges_.size());
    incident_[e.v].push_back(edges_.size());
    edges_.push_back(e);
  }

  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (auto k : incident_[v]) {
      Vertex w = edges_[k].other(v);
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) throw ValidationError("graph is not connected");
}

std::optional<std::size_t> SimpleGraph::edge_index(Vertex a, Vertex b) const {
  if (a >= n_ || b >= n_) return std::nullopt;
  for (auto k : incident_[a])
    if (edges_[k].other(a) == b) return k;
  return std::nullopt;
}

std::vector<Vertex> SimpleGraph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  for (auto k : incident_.at(v)) out.push_back(edges_[k].other(v));
  return out;
}

Orientation::Orientation(const SimpleGraph& graph, std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
  if (arcs_.size() != graph.edge_count())
    throw ValidationError("orientation must orient every edge exactly once");
  for (std::size_t k = 0; k < arcs_.size(); ++k) {
    const auto& e = graph.edge(k);
    const auto& a = arcs_[k];
    if (!(e.contains(a.tail) && e.contains(a.head) && a.tail != a.head))
      throw ValidationError("arc " + std::to_string(k) + " does not orient edge {" +
                            std::to_string(e.u) + "," + std::to_string(e.v) + "}");
  }
}

Orientation Orientation::reversed() const {
  Orientation o;
  for (const auto& a : arcs_) o.arcs_.push_back({a.head, a.tail});
  return o;
}

Orientation Orientation::flipped(const std::vector<std::size_t>& edges) const {
  Orientation o = *this;
  for (auto k : edges) {
    auto& a = o.arcs_.at(k);
    std::swap(a.tail, a.head);
  }
  return o;
}

Orientation default_orientation(const SimpleGraph& graph) {
  std::vector<Orientation::Arc> arcs;
  for (const auto& e : graph.edges()) arcs.push_back({e.u, e.v});
  return Orientation(graph, std::move(arcs));
}

LineGraphData line_graph(const SimpleGraph& graph) {
  const std::size_t m = graph.edge_count();
  std::vector<std::pair<Vertex, Vertex>> line_edges;
  std::vector<Vertex> shared;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      const auto& ea = graph.edge(a);
      const auto& eb = graph.edge(b);
      // Simple graph: two distinct edges share at most one endpoint.
      if (eb.contains(ea.u)) {
        line_edges.emplace_back(a, b);
        shared.push_back(ea.u);
      } else if (eb.contains(ea.v)) {
        line_edges.emplace_back(a, b);
        shared.push_back(ea.v);
      }
    }
  }
  return {SimpleGraph(m, line_edges), std::move(shared)};
}

Eigen::MatrixXi incidence_matrix(const SimpleGraph& graph) {
  Eigen::MatrixXi n = Eigen::MatrixXi::Zero(graph.vertex_count(), graph.edge_count());
  for (std::size_t k = 0; k < graph.edge_count(); ++k) {
    const auto& e = graph.edge(k);
    n(e.u, k) = 1;
    n(e.v, k) = 1;
  }
  return n;
}

ClassicalMatrices classical_matrices(const SimpleGraph& graph) {
  const auto n = static_cast<Eigen::Index>(graph.vertex_count());
  ClassicalMatrices out;
  out.adjacency = Eigen::MatrixXi::Zero(n, n);
  out.degree = Eigen::MatrixXi::Zero(n, n);
  for (const auto& e : graph.edges()) {
    out.adjacency(e.u, e.v) = 1;
    out.adjacency(e.v, e.u) = 1;
  }
  for (Eigen::Index v = 0; v < n; ++v) out.degree(v, v) = static_cast<int>(graph.degree(v));
  out.laplacian = out.degree - out.adjacency;
  out.signless_laplacian = out.degree + out.adjacency;
  return out;
}

SpanningTree bfs_tree(const SimpleGraph& graph) {
  SpanningTree t;
  t.parent.assign(graph.vertex_count(), std::nullopt);
  t.tree_edge.assign(graph.edge_count(), false);
  std::vector<bool> seen(graph.vertex_count(), false);
  std::queue<Vertex> q;
  q.push(0);
  seen[0] = true;
  while (!q.empty()) {
    Vertex v = q.front();
    q.pop();
    t.order.push_back(v);
    for (auto k : graph.incident_edges(v)) {
      Vertex w = graph.edge(k).other(v);
      if (!seen[w]) {
        seen[w] = true;
        t.parent[w] = v;
        t.tree_edge[k] = true;
        q.push(w);
      }
    }
  }
  return t;
}

}  // namespace gainline
