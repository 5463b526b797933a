#include "gainline/spectral.hpp"

#include <algorithm>

#include "gainline/error.hpp"

namespace gainline {

double verify_line_identity(const GPhase& h, const UnitaryRepresentation& pi, const PhaseContext& ctx) {
  const std::size_t m = h.graph().edge_count();
  const auto k = static_cast<Eigen::Index>(pi.degree());
  const Eigen::MatrixXcd lhs = fourier(gain_adjacency(psi_line(h, ctx)), pi).data;
  const Eigen::MatrixXcd hat = fourier(h.to_matrix(), pi).data;
  const Eigen::MatrixXcd rhs =
      block_scalar(m, pi, ctx.s2()) *
      (hat.adjoint() * hat - 2.0 * Eigen::MatrixXcd::Identity(static_cast<Eigen::Index>(m) * k,
                                                              static_cast<Eigen::Index>(m) * k));
  if (lhs.size() == 0) return 0.0;
  return (lhs - rhs).cwiseAbs().maxCoeff();
}

std::string to_string(S2Class c) {
  switch (c) {
    case S2Class::PlusIdentity: return "plus_identity";
    case S2Class::MinusIdentity: return "minus_identity";
    case S2Class::Other: return "other";
  }
  return "other";
}

std::string to_string(Rule r) {
  switch (r) {
    case Rule::Cor1: return "cor1";
    case Rule::Cor2: return "cor2";
    case Rule::GainLine: return "gainline";
  }
  return "";
}

ObstructionVerdict gainline_obstruction(const GainFunction& zeta, const UnitaryRepresentation& pi,
                                        CentralWeakInvolution s2, double tol) {
  if (!same_group(zeta.group(), pi.group()))
    throw StructuralError("gainline_obstruction: representation is defined on a different group");
  zeta.group()->central_weak_involution(s2.element());

  ObstructionVerdict v;
  const auto k = static_cast<Eigen::Index>(pi.degree());
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(k, k);
  const Eigen::MatrixXcd& image = pi(s2.element());
  if ((image - id).cwiseAbs().maxCoeff() <= tol)
    v.s2_class = S2Class::PlusIdentity;
  else if ((image + id).cwiseAbs().maxCoeff() <= tol)
    v.s2_class = S2Class::MinusIdentity;

  v.spectrum = pi_spectrum(zeta, pi).eigenvalues;
  v.min_eig = v.spectrum.front();
  v.max_eig = v.spectrum.back();

  const double below = -2.0 - v.min_eig;  // > 0 means an eigenvalue under -2
  const double above = v.max_eig - 2.0;   // > 0 means an eigenvalue over 2

  struct Applicable {
    Rule rule;
    double excess;
  };
  std::vector<Applicable> rules;
  if (pi.irreducible()) rules.push_back({Rule::GainLine, std::min(below, above)});
  if (v.s2_class == S2Class::PlusIdentity) rules.push_back({Rule::Cor1, below});
  if (v.s2_class == S2Class::MinusIdentity) rules.push_back({Rule::Cor2, above});

  for (const auto& r : rules) {
    if (r.excess > tol) {
      v.violated = r.rule;
      v.margin = r.excess;
      return v;
    }
  }
  if (!rules.empty())
    v.margin = std::max_element(rules.begin(), rules.end(), [](auto& a, auto& b) {
                 return a.excess < b.excess;
               })->excess;
  return v;
}

}  // namespace gainline
