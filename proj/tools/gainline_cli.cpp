// Command-line front end. Every artifact is a JSON file; spectra are printed as CSV.
// Exit status 0 means the requested result was computed (whatever the verdict);
// 1 means bad input or a failed validation.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gainline/error.hpp"
#include "gainline/gain.hpp"
#include "gainline/graph.hpp"
#include "gainline/group.hpp"
#include "gainline/io.hpp"
#include "gainline/phase.hpp"
#include "gainline/repr.hpp"
#include "gainline/spectral.hpp"

namespace {

using namespace gainline;
using io::Json;

std::string output_path;

void emit(const std::string& text) {
  if (output_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw InputError("cannot write " + output_path);
  out << text;
}

void emit(const Json& j) { emit(j.dump(2) + "\n"); }

Element element_flag(const FiniteGroup& g, const std::string& label) {
  return label.empty() ? kIdentity : g.parse(label);
}

/// "builtin:<name>[:<parameter>]" or a path to a representation file.
UnitaryRepresentation load_representation(const std::string& source, const GroupPtr& group) {
  const std::string prefix = "builtin:";
  if (source.rfind(prefix, 0) == 0) {
    std::string name = source.substr(prefix.size());
    long long parameter = 1;
    if (auto colon = name.find(':'); colon != std::string::npos) {
      try {
        parameter = std::stoll(name.substr(colon + 1));
      } catch (const std::exception&) {
        throw InputError("bad representation parameter in \"" + source + "\"");
      }
      name = name.substr(0, colon);
    }
    return builtin_representation(group, name, parameter);
  }
  return io::representation_from_json(io::read_json(source), group);
}

struct Options {
  std::string file, file2, root, orientation_mode = "default", orientation_file;
  std::string s1, s2, s, matrix = "adjacency";
  std::vector<std::string> reps;
  double tol = Tolerances{}.bound;
};

void cmd_group(const Options& o) {
  const GroupPtr g = io::group_from_json(io::read_json(o.file));
  Json j;
  j["group"] = io::group_to_json(*g);
  j["name"] = g->name();
  j["order"] = g->order();
  j["labels"] = g->labels();
  j["abelian"] = g->is_abelian();
  j["center"] = Json::array();
  for (auto z : g->center()) j["center"].push_back(g->label(z));
  j["central_weak_involutions"] = Json::array();
  for (auto s : g->central_weak_involutions()) j["central_weak_involutions"].push_back(g->label(s));
  j["inverses"] = Json::object();
  for (auto x : g->elements()) j["inverses"][g->label(x)] = g->label(g->inverse(x));
  emit(j);
}

void cmd_line(const Options& o) {
  emit(io::line_graph_to_json(line_graph(io::graph_from_json(io::read_json(o.file)))));
}

void cmd_gainline(const Options& o) {
  const GainFunction psi = io::gain_from_json(io::read_json(o.file));
  const auto& g = *psi.group();
  const PhaseContext ctx(g, element_flag(g, o.s1), element_flag(g, o.s2));
  std::optional<Orientation> orientation;
  if (o.orientation_mode == "default") {
    orientation = default_orientation(psi.graph());
  } else {
    if (o.orientation_file.empty())
      throw InputError("--orientation explicit needs --orientation-file");
    orientation = io::orientation_from_json(io::read_json(o.orientation_file), psi.graph());
  }
  emit(io::gain_to_json(gain_line(psi, *orientation, ctx)));
}

void cmd_check_balance(const Options& o) {
  const GainFunction psi = io::gain_from_json(io::read_json(o.file));
  const BalanceResult r = is_balanced(psi);
  Json j;
  j["check"] = "balance";
  j["balanced"] = r.balanced;
  j["witness"] = r.witness ? io::switching_to_json(*r.witness, *psi.group()) : Json(nullptr);
  emit(j);
}

void cmd_check_switch(const Options& o) {
  const GainFunction a = io::gain_from_json(io::read_json(o.file));
  const GainFunction b = io::gain_from_json(io::read_json(o.file2));
  if (!(a.graph() == b.graph())) throw InputError("gain files are on different graphs");
  if (!same_group(a.group(), b.group())) throw InputError("gain files use different groups");
  const auto f = switching_equivalent(a, b);
  Json j;
  j["check"] = "switch-equiv";
  j["equivalent"] = f.has_value();
  j["witness"] = f ? io::switching_to_json(*f, *a.group()) : Json(nullptr);
  emit(j);
}

void cmd_check_gainline(const Options& o) {
  const GainFunction zeta = io::gain_from_json(io::read_json(o.file));
  const SimpleGraph root = io::graph_from_json(io::read_json(o.root));
  if (!(line_graph(root).line == zeta.graph()))
    throw InputError("gain graph is not on the line graph of the given root graph");
  const auto& g = *zeta.group();
  const PhaseContext ctx(g, kIdentity, element_flag(g, o.s2));
  const auto h = recognize_gain_line(zeta, root, ctx);
  Json j;
  j["check"] = "gainline";
  j["gain_line"] = h.has_value();
  j["phase"] = h ? io::phase_to_json(*h) : Json(nullptr);
  emit(j);
}

void cmd_check_obstruction(const Options& o) {
  const GainFunction zeta = io::gain_from_json(io::read_json(o.file));
  const auto& g = *zeta.group();
  const CentralWeakInvolution s2 = g.central_weak_involution(element_flag(g, o.s2));
  std::vector<std::string> reps = o.reps;
  if (reps.empty()) reps.push_back("builtin:regular");
  Json j;
  j["check"] = "obstruction";
  j["s2"] = g.label(s2);
  j["verdicts"] = Json::array();
  bool any = false;
  for (const auto& source : reps) {
    const UnitaryRepresentation pi = load_representation(source, zeta.group());
    const ObstructionVerdict v = gainline_obstruction(zeta, pi, s2, o.tol);
    Json vj;
    vj["representation"] = source;
    vj["degree"] = pi.degree();
    vj["irreducible"] = pi.irreducible();
    const Json verdict = io::verdict_to_json(v);
    for (const auto& [key, value] : verdict.items()) vj[key] = value;
    any = any || v.violated.has_value();
    j["verdicts"].push_back(vj);
  }
  j["cannot_be_gain_line"] = any;
  emit(j);
}

void cmd_spectrum(const Options& o) {
  const GainFunction psi = io::gain_from_json(io::read_json(o.file));
  const auto& g = *psi.group();
  const UnitaryRepresentation pi =
      load_representation(o.reps.empty() ? std::string("builtin:regular") : o.reps.front(), psi.group());
  Spectrum spectrum;
  if (o.matrix == "adjacency") {
    spectrum = pi_spectrum(psi, pi);
  } else {
    const auto s = g.central_weak_involution(element_flag(g, o.s));
    spectrum = hermitian_spectrum(represented_gain_matrices(psi, s, pi).laplacian);
  }
  emit(io::spectrum_csv(spectrum));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Gain graphs over finite groups: line constructions, switching checks and spectra"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("-o,--output", output_path, "Write the result to this file instead of stdout");
  Options o;

  auto* group = app.add_subcommand("group", "Validate a group file and describe the group");
  group->add_option("group-file", o.file)->required()->check(CLI::ExistingFile);

  auto* line = app.add_subcommand("line", "Line graph of a graph, with the shared-vertex map");
  line->add_option("graph-file", o.file)->required()->check(CLI::ExistingFile);

  auto* gl = app.add_subcommand("gainline", "Gain-line lift of a gain graph");
  gl->add_option("gain-file", o.file)->required()->check(CLI::ExistingFile);
  gl->add_option("--s1", o.s1, "Label of s1 (default: identity)");
  gl->add_option("--s2", o.s2, "Label of s2 (default: identity)");
  gl->add_option("--orientation", o.orientation_mode)->check(CLI::IsMember({"default", "explicit"}));
  gl->add_option("--orientation-file", o.orientation_file)->check(CLI::ExistingFile);

  auto* check = app.add_subcommand("check", "Balance, switching, recognition and spectral checks");
  check->require_subcommand(1);
  check->fallthrough();
  auto* balance = check->add_subcommand("balance", "Is the gain graph balanced?");
  balance->add_option("gain-file", o.file)->required()->check(CLI::ExistingFile);
  auto* sw = check->add_subcommand("switch-equiv", "Are two gain functions switching equivalent?");
  sw->add_option("gain-file", o.file)->required()->check(CLI::ExistingFile);
  sw->add_option("other-gain-file", o.file2)->required()->check(CLI::ExistingFile);
  auto* rec = check->add_subcommand("gainline", "Is the gain graph Psi_L(H) for some G-phase H?");
  rec->add_option("gain-file", o.file)->required()->check(CLI::ExistingFile);
  rec->add_option("--root", o.root, "Graph file of the root graph")->required()->check(CLI::ExistingFile);
  rec->add_option("--s2", o.s2, "Label of s2 (default: identity)");
  auto* obs = check->add_subcommand("obstruction", "Spectral necessary conditions for gain-line graphs");
  obs->add_option("gain-file", o.file)->required()->check(CLI::ExistingFile);
  obs->add_option("--rep", o.reps, "Representation file or builtin:<name>[:<parameter>]; repeatable");
  obs->add_option("--s2", o.s2, "Label of s2 (default: identity)");
  obs->add_option("--tol", o.tol, "Slack around the bounds -2 and 2");

  auto* spectrum = app.add_subcommand("spectrum", "pi-spectrum of a gain graph as CSV");
  spectrum->add_option("gain-file", o.file)->required()->check(CLI::ExistingFile);
  spectrum->add_option("--rep", o.reps, "Representation file or builtin:<name>[:<parameter>]")->expected(0, 1);
  spectrum->add_option("--matrix", o.matrix)->check(CLI::IsMember({"adjacency", "laplacian"}));
  spectrum->add_option("--s", o.s, "Label of s for the Laplacian (default: identity)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*group) cmd_group(o);
    else if (*line) cmd_line(o);
    else if (*gl) cmd_gainline(o);
    else if (*balance) cmd_check_balance(o);
    else if (*sw) cmd_check_switch(o);
    else if (*rec) cmd_check_gainline(o);
    else if (*obs) cmd_check_obstruction(o);
    else if (*spectrum) cmd_spectrum(o);
  } catch (const gainline::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
