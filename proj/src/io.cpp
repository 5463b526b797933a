#include "gainline/io.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "gainline/error.hpp"

namespace gainline::io {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

std::size_t positive_index(const Json& j, std::size_t n, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  const auto v = j.get<long long>();
  if (v < 1 || static_cast<std::size_t>(v) > n)
    throw InputError(std::string(what) + " out of range: " + std::to_string(v));
  return static_cast<std::size_t>(v - 1);
}

std::string label_of(const Json& j) {
  if (!j.is_string()) throw InputError("group elements must be given as label strings");
  return j.get<std::string>();
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

Json group_to_json(const FiniteGroup& group) {
  Json j;
  switch (group.family()) {
    case GroupFamily::Cyclic:
      j["family"] = "cyclic";
      j["n"] = group.family_parameter();
      break;
    case GroupFamily::Sign: j["family"] = "sign"; break;
    case GroupFamily::T4: j["family"] = "t4"; break;
    case GroupFamily::Dihedral:
      j["family"] = "dihedral";
      j["n"] = group.family_parameter();
      break;
    case GroupFamily::Quaternion8: j["family"] = "quaternion8"; break;
    case GroupFamily::DirectProduct:
      j["family"] = "direct_product";
      j["factors"] = Json::array();
      for (const auto& f : group.factors()) j["factors"].push_back(group_to_json(*f));
      break;
    case GroupFamily::Custom: {
      j["family"] = "custom";
      j["labels"] = group.labels();
      Json rows = Json::array();
      const std::size_t n = group.order();
      for (std::size_t a = 0; a < n; ++a) {
        Json row = Json::array();
        for (std::size_t b = 0; b < n; ++b) row.push_back(group.table()[a * n + b]);
        rows.push_back(row);
      }
      j["table"] = rows;
      break;
    }
  }
  return j;
}

GroupPtr group_from_json(const Json& j) {
  const Json& fam = field(j, "family");
  if (!fam.is_string()) throw InputError("\"family\" must be a string");
  const auto family = fam.get<std::string>();
  auto size_param = [&] {
    const Json& n = field(j, "n");
    if (!n.is_number_integer() || n.get<long long>() < 1)
      throw InputError("\"n\" must be a positive integer");
    return static_cast<std::size_t>(n.get<long long>());
  };
  if (family == "cyclic") return FiniteGroup::cyclic(size_param());
  if (family == "sign") return FiniteGroup::sign();
  if (family == "t4") return FiniteGroup::t4();
  if (family == "dihedral") return FiniteGroup::dihedral(size_param());
  if (family == "quaternion8") return FiniteGroup::quaternion8();
  if (family == "trivial") return FiniteGroup::trivial();
  if (family == "direct_product") {
    const Json& f = field(j, "factors");
    if (!f.is_array() || f.size() != 2) throw InputError("direct_product needs exactly two factors");
    return FiniteGroup::direct_product(group_from_json(f[0]), group_from_json(f[1]));
  }
  if (family == "custom") {
    try {
      auto labels = field(j, "labels").get<std::vector<std::string>>();
      auto table = field(j, "table").get<std::vector<std::vector<std::uint32_t>>>();
      return FiniteGroup::custom(std::move(labels), std::move(table));
    } catch (const nlohmann::json::exception& e) {
      throw InputError(std::string("custom group: ") + e.what());
    }
  }
  throw InputError("unknown group family \"" + family + "\"");
}

Json graph_to_json(const SimpleGraph& graph) {
  Json j;
  j["n"] = graph.vertex_count();
  j["edges"] = Json::array();
  for (const auto& e : graph.edges()) j["edges"].push_back({e.u + 1, e.v + 1});
  return j;
}

SimpleGraph graph_from_json(const Json& j) {
  const Json& nj = field(j, "n");
  if (!nj.is_number_integer() || nj.get<long long>() < 1) throw InputError("\"n\" must be a positive integer");
  const auto n = static_cast<std::size_t>(nj.get<long long>());
  const Json& ej = field(j, "edges");
  if (!ej.is_array()) throw InputError("\"edges\" must be an array");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const auto& e : ej) {
    if (!e.is_array() || e.size() != 2) throw InputError("each edge must be a pair of vertices");
    edges.emplace_back(positive_index(e[0], n, "vertex"), positive_index(e[1], n, "vertex"));
  }
  return SimpleGraph(n, edges);
}

Json line_graph_to_json(const LineGraphData& line) {
  Json j = graph_to_json(line.line);
  j["shared_vertex"] = Json::array();
  for (auto v : line.shared_vertex) j["shared_vertex"].push_back(v + 1);
  return j;
}

Json orientation_to_json(const Orientation& orientation) {
  Json j;
  j["orientation"] = Json::array();
  for (const auto& a : orientation.arcs()) j["orientation"].push_back({a.tail + 1, a.head + 1});
  return j;
}

Orientation orientation_from_json(const Json& j, const SimpleGraph& graph) {
  const Json& aj = field(j, "orientation");
  if (!aj.is_array()) throw InputError("\"orientation\" must be an array");
  std::vector<Orientation::Arc> arcs;
  const std::size_t n = graph.vertex_count();
  for (const auto& a : aj) {
    if (!a.is_array() || a.size() != 2) throw InputError("each arc must be a [tail, head] pair");
    arcs.push_back({positive_index(a[0], n, "tail"), positive_index(a[1], n, "head")});
  }
  try {
    return Orientation(graph, std::move(arcs));
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

Json gain_to_json(const GainFunction& psi) {
  Json j;
  j["graph"] = graph_to_json(psi.graph());
  j["group"] = group_to_json(*psi.group());
  j["gains"] = Json::array();
  for (auto g : psi.forward()) j["gains"].push_back(psi.group()->label(g));
  return j;
}

GainFunction gain_from_json(const Json& j) {
  SimpleGraph graph = graph_from_json(field(j, "graph"));
  GroupPtr group = group_from_json(field(j, "group"));
  const Json& gj = field(j, "gains");
  if (!gj.is_array() || gj.size() != graph.edge_count())
    throw InputError("\"gains\" must list one label per edge");
  std::vector<Element> forward;
  for (const auto& g : gj) forward.push_back(group->parse(label_of(g)));
  return GainFunction(std::move(graph), std::move(group), std::move(forward));
}

Json phase_to_json(const GPhase& h) {
  Json j;
  j["graph"] = graph_to_json(h.graph());
  j["group"] = group_to_json(*h.group());
  const auto& g = h.graph();
  Json rows = Json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    Json row = Json::array();
    for (std::size_t k = 0; k < g.edge_count(); ++k)
      row.push_back(g.edge(k).contains(v) ? h.group()->label(h.at(v, k)) : std::string("0"));
    rows.push_back(row);
  }
  j["phase"] = rows;
  return j;
}

GPhase phase_from_json(const Json& j) {
  SimpleGraph graph = graph_from_json(field(j, "graph"));
  GroupPtr group = group_from_json(field(j, "group"));
  const Json& pj = field(j, "phase");
  const std::size_t n = graph.vertex_count(), m = graph.edge_count();
  if (!pj.is_array() || pj.size() != n) throw InputError("\"phase\" must have one row per vertex");
  std::vector<Element> low(m), high(m);
  for (Vertex v = 0; v < n; ++v) {
    if (!pj[v].is_array() || pj[v].size() != m)
      throw InputError("\"phase\" rows must have one entry per edge");
    for (std::size_t k = 0; k < m; ++k) {
      const std::string s = label_of(pj[v][k]);
      const Edge& e = graph.edge(k);
      if (!e.contains(v)) {
        if (s != "0")
          throw InputError("phase entry (" + std::to_string(v + 1) + "," + std::to_string(k + 1) +
                           ") must be \"0\": vertex is not on the edge");
        continue;
      }
      (v == e.u ? low : high)[k] = group->parse(s);
    }
  }
  return GPhase(std::move(graph), std::move(group), std::move(low), std::move(high));
}

Json representation_to_json(const UnitaryRepresentation& pi) {
  Json j;
  j["degree"] = pi.degree();
  j["irreducible"] = pi.irreducible();
  Json images = Json::object();
  for (auto g : pi.group()->elements()) {
    const auto& m = pi(g);
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      Json row = Json::array();
      for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
      rows.push_back(row);
    }
    images[pi.group()->label(g)] = rows;
  }
  j["images"] = images;
  return j;
}

UnitaryRepresentation representation_from_json(const Json& j, const GroupPtr& group, double tol) {
  const Json& dj = field(j, "degree");
  if (!dj.is_number_integer() || dj.get<long long>() < 1) throw InputError("\"degree\" must be a positive integer");
  const auto k = static_cast<Eigen::Index>(dj.get<long long>());
  const bool irreducible = j.value("irreducible", false);
  const Json& ij = field(j, "images");
  if (!ij.is_object()) throw InputError("\"images\" must map labels to matrices");
  std::vector<Eigen::MatrixXcd> images(group->order());
  std::vector<bool> seen(group->order(), false);
  for (const auto& [label, mj] : ij.items()) {
    const Element g = group->parse(label);
    if (seen[g.id]) throw InputError("duplicate image for " + label);
    seen[g.id] = true;
    if (!mj.is_array() || static_cast<Eigen::Index>(mj.size()) != k)
      throw InputError("image of " + label + " must have " + std::to_string(k) + " rows");
    Eigen::MatrixXcd m(k, k);
    for (Eigen::Index r = 0; r < k; ++r) {
      const Json& row = mj[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != k)
        throw InputError("image of " + label + " must be square");
      for (Eigen::Index c = 0; c < k; ++c) {
        const Json& z = row[static_cast<std::size_t>(c)];
        if (z.is_number()) {
          m(r, c) = Complex(z.get<double>(), 0.0);
        } else if (z.is_array() && z.size() == 2 && z[0].is_number() && z[1].is_number()) {
          m(r, c) = Complex(z[0].get<double>(), z[1].get<double>());
        } else {
          throw InputError("matrix entries must be numbers or [re, im] pairs");
        }
      }
    }
    images[g.id] = std::move(m);
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw InputError("missing image for " + group->labels()[i]);
  return UnitaryRepresentation(group, std::move(images), irreducible, j.value("name", std::string("custom")),
                               tol);
}

Json verdict_to_json(const ObstructionVerdict& v) {
  Json j;
  j["s2_class"] = to_string(v.s2_class);
  j["min_eig"] = v.min_eig;
  j["max_eig"] = v.max_eig;
  j["violated"] = v.violated ? Json(to_string(*v.violated)) : Json(nullptr);
  j["margin"] = v.margin;
  j["spectrum"] = v.spectrum;
  return j;
}

Json switching_to_json(const SwitchingFunction& f, const FiniteGroup& group) {
  Json j = Json::array();
  for (auto g : f.values) j.push_back(group.label(g));
  return j;
}

std::string spectrum_csv(const Spectrum& spectrum, double tol) {
  std::ostringstream out;
  out << "index,eigenvalue,multiplicity_group\n";
  out << std::setprecision(15);
  std::size_t group_id = 0;
  for (std::size_t i = 0; i < spectrum.eigenvalues.size(); ++i) {
    const double x = spectrum.eigenvalues[i];
    if (i > 0 && std::abs(x - spectrum.eigenvalues[i - 1]) > tol) ++group_id;
    // Print -0 as 0 so identical spectra render identically.
    out << i + 1 << ',' << (x == 0.0 ? 0.0 : x) << ',' << group_id + 1 << '\n';
  }
  return out.str();
}

}  // namespace gainline::io
