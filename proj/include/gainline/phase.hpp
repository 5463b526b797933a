#pragma once

#include <optional>
#include <vector>

#include "gainline/algebra.hpp"
#include "gainline/gain.hpp"
#include "gainline/graph.hpp"
#include "gainline/group.hpp"

namespace gainline {

/// A G-phase of a graph: an n x m matrix over CG holding a group element wherever
/// vertex i lies on edge j and zero elsewhere.
///
/// Only the two incident entries of each column are stored, so the support pattern
/// holds by construction.
class GPhase {
 public:
  /// low_entry[k] / high_entry[k] are the entries at rows u_k / v_k of column k,
  /// where edge k = {u_k, v_k} with u_k < v_k.
  GPhase(SimpleGraph graph, GroupPtr group, std::vector<Element> low_entry,
         std::vector<Element> high_entry);

  /// N_Gamma(G): 1_G on every incidence.
  static GPhase incidence(SimpleGraph graph, GroupPtr group);
  /// Validates the support pattern of a CG-matrix and extracts its entries.
  static GPhase from_matrix(SimpleGraph graph, const CGMatrix& matrix);

  const SimpleGraph& graph() const { return graph_; }
  const GroupPtr& group() const { return group_; }

  /// H(v, k); StructuralError if v is not an endpoint of edge k.
  Element at(Vertex v, std::size_t k) const;
  void set(Vertex v, std::size_t k, Element g);

  CGMatrix to_matrix() const;

  friend bool operator==(const GPhase& a, const GPhase& b);

 private:
  SimpleGraph graph_;
  GroupPtr group_;
  std::vector<Element> low_, high_;
};

/// The central weak involutions s1 (used by psi) and s2 (used by psi_line).
class PhaseContext {
 public:
  PhaseContext(const FiniteGroup& group, Element s1, Element s2);
  PhaseContext(CentralWeakInvolution s1, CentralWeakInvolution s2) : s1_(s1), s2_(s2) {}
  /// s1 = s2 = 1_G.
  static PhaseContext trivial(const FiniteGroup& group) { return PhaseContext(group, kIdentity, kIdentity); }

  CentralWeakInvolution s1() const { return s1_; }
  CentralWeakInvolution s2() const { return s2_; }

 private:
  CentralWeakInvolution s1_, s2_;
};

/// Psi(H)(v_i, v_j) = s1 H_{i,k} H_{j,k}^{-1} for e_k = {v_i, v_j}.
GainFunction psi(const GPhase& h, const PhaseContext& ctx);

/// Psi_L(H)(e_i, e_j) = s2 H_{k,i}^{-1} H_{k,j} for v_k = e_i ∩ e_j, on line_graph(Γ).
GainFunction psi_line(const GPhase& h, const PhaseContext& ctx);
GainFunction psi_line(const GPhase& h, const PhaseContext& ctx, const LineGraphData& line);

/// H_o(psi): psi(tail, head) at the tail of each arc and s1 at its head.
GPhase phase_from_orientation(const GainFunction& psi, const Orientation& orientation,
                              const PhaseContext& ctx);

/// f* H g, i.e. entry (i, j) becomes f_i^{-1} H_{i,j} g_j. Absent factors act trivially.
GPhase act(const GPhase& h, const std::optional<DiagonalGroupMatrix>& f,
           const std::optional<DiagonalGroupMatrix>& g);

enum class OrbitKind { R, L, LR, LCapR };

/// Orbit membership decided by comparing gain functions instead of searching the group:
/// r <=> equal Psi, l <=> equal Psi_L, l x r <=> switching-equivalent Psi,
/// l ∩ r <=> both equalities.
bool same_orbit(const GPhase& h1, const GPhase& h2, OrbitKind which, const PhaseContext& ctx);

/// The gain-line lift L_o(psi) = Psi_L(H_o(psi)) evaluated by its closed-form
/// orientation cases.
GainFunction gain_line(const GainFunction& psi, const Orientation& orientation,
                       const PhaseContext& ctx);

/// Line G-phase: L(H)_{i,k} = H_{l,i}^{-1} when e_i lies on line edge E_k with
/// shared vertex v_l. The result is a G-phase of line_graph(Γ).
GPhase reff_line_phase(const GPhase& h);

/// Some H with Psi_L(H) = zeta, or nullopt when zeta is not a gain-line function.
/// StructuralError when zeta's graph is not the line graph of `root`.
std::optional<GPhase> recognize_gain_line(const GainFunction& zeta, const SimpleGraph& root,
                                          const PhaseContext& ctx);

}  // namespace gainline
