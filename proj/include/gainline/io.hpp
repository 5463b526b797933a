#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "gainline/gain.hpp"
#include "gainline/graph.hpp"
#include "gainline/group.hpp"
#include "gainline/phase.hpp"
#include "gainline/repr.hpp"
#include "gainline/spectral.hpp"

// JSON file formats. Vertex and edge indices are 1-based on disk and 0-based in memory.
namespace gainline::io {

using Json = nlohmann::ordered_json;

Json read_json(const std::filesystem::path& path);
Json parse_json(const std::string& text);

/// {"family":"quaternion8"}, {"family":"cyclic","n":4}, {"family":"direct_product",
/// "factors":[...]} or {"family":"custom","labels":[...],"table":[[...]]}.
Json group_to_json(const FiniteGroup& group);
GroupPtr group_from_json(const Json& j);

/// {"n":4,"edges":[[1,2],[2,3],...]}.
Json graph_to_json(const SimpleGraph& graph);
SimpleGraph graph_from_json(const Json& j);

/// Graph fields plus "shared_vertex": one root vertex per line edge.
Json line_graph_to_json(const LineGraphData& line);

/// {"orientation":[[tail,head],...]}, one arc per edge in edge order.
Json orientation_to_json(const Orientation& orientation);
Orientation orientation_from_json(const Json& j, const SimpleGraph& graph);

/// {"graph":..., "group":..., "gains":[label per edge]} with gains read along the
/// lower-to-higher direction of each edge.
Json gain_to_json(const GainFunction& psi);
GainFunction gain_from_json(const Json& j);

/// {"graph":..., "group":..., "phase":[[label or "0"]]}: an n x m array whose
/// non-incident positions must hold "0".
Json phase_to_json(const GPhase& h);
GPhase phase_from_json(const Json& j);

/// {"degree":k,"irreducible":bool,"images":{label:[[[re,im],...],...]}}.
Json representation_to_json(const UnitaryRepresentation& pi);
UnitaryRepresentation representation_from_json(const Json& j, const GroupPtr& group,
                                               double tol = Tolerances{}.validation);

Json verdict_to_json(const ObstructionVerdict& v);

Json switching_to_json(const SwitchingFunction& f, const FiniteGroup& group);

/// CSV with header "index,eigenvalue,multiplicity_group"; consecutive eigenvalues within
/// `tol` share a multiplicity group.
std::string spectrum_csv(const Spectrum& spectrum, double tol = 1e-8);

}  // namespace gainline::io
