#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace gainline {

using Vertex = std::size_t;

/// Undirected edge, stored with u < v.
struct Edge {
  Vertex u = 0, v = 0;

  bool contains(Vertex w) const { return w == u || w == v; }
  Vertex other(Vertex w) const { return w == u ? v : u; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite, connected, simple, undirected graph with a fixed vertex and edge order.
///
/// Vertices are 0..n-1. Edges keep the order they were given in; each is normalized so
/// that u < v, which makes the lower-to-higher orientation the default one. The only
/// edgeless graph accepted is the single vertex, which arises as the line graph of K2.
class SimpleGraph {
 public:
  SimpleGraph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t k) const { return edges_.at(k); }

  std::size_t degree(Vertex v) const { return incident_.at(v).size(); }
  /// Indices of the edges incident to v, ascending.
  const std::vector<std::size_t>& incident_edges(Vertex v) const { return incident_.at(v); }
  std::optional<std::size_t> edge_index(Vertex a, Vertex b) const;
  bool adjacent(Vertex a, Vertex b) const { return edge_index(a, b).has_value(); }
  std::vector<Vertex> neighbors(Vertex v) const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> incident_;
};

/// A choice of direction (tail, head) for every edge.
class Orientation {
 public:
  struct Arc {
    Vertex tail, head;
    friend bool operator==(const Arc&, const Arc&) = default;
  };

  /// Validates that arc k orients edge k of the graph.
  Orientation(const SimpleGraph& graph, std::vector<Arc> arcs);

  const std::vector<Arc>& arcs() const { return arcs_; }
  const Arc& arc(std::size_t k) const { return arcs_.at(k); }
  bool is_tail(std::size_t k, Vertex v) const { return arcs_.at(k).tail == v; }
  /// Same graph with every arc flipped.
  Orientation reversed() const;
  /// Flip the arcs whose indices are listed.
  Orientation flipped(const std::vector<std::size_t>& edges) const;

  friend bool operator==(const Orientation&, const Orientation&) = default;

 private:
  Orientation() = default;
  std::vector<Arc> arcs_;
};

/// Each edge from its lower to its higher vertex index.
Orientation default_orientation(const SimpleGraph& graph);

struct LineGraphData {
  SimpleGraph line;
  /// shared_vertex[k] is the vertex of the root graph common to both ends of line edge k.
  std::vector<Vertex> shared_vertex;
};

/// Line graph with vertices in edge order and edges sorted lexicographically by
/// (min, max) edge index.
LineGraphData line_graph(const SimpleGraph& graph);

/// n x m 0/1 matrix with N(i, j) = 1 iff vertex i lies on edge j.
Eigen::MatrixXi incidence_matrix(const SimpleGraph& graph);

struct ClassicalMatrices {
  Eigen::MatrixXi adjacency;
  Eigen::MatrixXi degree;
  Eigen::MatrixXi laplacian;
  Eigen::MatrixXi signless_laplacian;
};

ClassicalMatrices classical_matrices(const SimpleGraph& graph);

/// Parent pointers of the BFS tree rooted at vertex 0, in BFS visiting order.
struct SpanningTree {
  std::vector<Vertex> order;
  std::vector<std::optional<Vertex>> parent;
  std::vector<bool> tree_edge;  // indexed by edge
};

SpanningTree bfs_tree(const SimpleGraph& graph);

}  // namespace gainline
