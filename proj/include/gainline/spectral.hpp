#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gainline/gain.hpp"
#include "gainline/phase.hpp"
#include "gainline/repr.hpp"

namespace gainline {

/// Largest entrywise deviation between the represented adjacency of Psi_L(H) and
/// (I_m ⊗ pi(s2)) (Ĥ(pi)* Ĥ(pi) - 2 I), each side assembled independently.
double verify_line_identity(const GPhase& h, const UnitaryRepresentation& pi, const PhaseContext& ctx);

enum class S2Class { PlusIdentity, MinusIdentity, Other };
/// cor1: spectrum must lie in [-2, inf) when pi(s2) = I.
/// cor2: spectrum must lie in (-inf, 2] when pi(s2) = -I.
/// gainline: for irreducible pi, eigenvalues on both sides of [-2, 2] are impossible.
enum class Rule { Cor1, Cor2, GainLine };

std::string to_string(S2Class c);
std::string to_string(Rule r);

struct ObstructionVerdict {
  S2Class s2_class = S2Class::Other;
  double min_eig = 0.0;
  double max_eig = 0.0;
  std::optional<Rule> violated;
  /// Excess past the bound of the violated rule; otherwise the largest excess over the
  /// applicable rules (at most tol), or 0 when no rule applies.
  double margin = 0.0;
  std::vector<double> spectrum;
};

/// Spectral necessary conditions for zeta to be a gain-line function. A verdict
/// without a violation is inconclusive; recognize_gain_line gives the exact answer.
/// The two-sided rule is applied only when pi is flagged irreducible.
ObstructionVerdict gainline_obstruction(const GainFunction& zeta, const UnitaryRepresentation& pi,
                                        CentralWeakInvolution s2, double tol = Tolerances{}.bound);

}  // namespace gainline
