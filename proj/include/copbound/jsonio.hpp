// JSON serialization for the library types and parsing of graph spec
// strings. Graphs travel as graph6; everything else is plain JSON objects
// with alphabetically ordered keys, so serialized reports are byte-identical
// across runs. Spec strings name graphs by family ("K5", "K3,4", "W6", "C7",
// "P7", "P_fam:3", "Ht:4", "theta:3,4", "bundle:5", "petersen",
// "dodecahedron", "U(<spec>)") or fall back to a raw graph6 literal ("g6:"
// forces that).
#pragma once

#include <cctype>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "copbound/decomp.hpp"
#include "copbound/families.hpp"
#include "copbound/graph.hpp"
#include "copbound/modelstate.hpp"

namespace copbound {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// Graph spec strings
// ---------------------------------------------------------------------------

namespace detail {

inline bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

inline std::optional<int> int_arg(const std::string& s) {
  if (!all_digits(s)) return std::nullopt;
  return std::stoi(s);
}

// Two comma-separated integers, as in "3,4".
inline std::optional<std::pair<int, int>> int_pair_arg(const std::string& s) {
  size_t comma = s.find(',');
  if (comma == std::string::npos) return std::nullopt;
  auto a = int_arg(s.substr(0, comma));
  auto b = int_arg(s.substr(comma + 1));
  if (!a || !b) return std::nullopt;
  return std::make_pair(*a, *b);
}

inline std::optional<Graph> parse_family_spec(const std::string& spec) {
  if (spec == "petersen") return petersen_family(1);
  if (spec == "dodecahedron") return dodecahedron();
  if (spec.size() >= 4 && spec.substr(0, 2) == "U(" && spec.back() == ')') {
    auto inner = parse_family_spec(spec.substr(2, spec.size() - 3));
    if (inner) return add_universal(*inner);
    return std::nullopt;
  }
  if (spec.rfind("P_fam:", 0) == 0) {
    auto i = int_arg(spec.substr(6));
    if (i) return petersen_family(*i);
    return std::nullopt;
  }
  if (spec.rfind("Ht:", 0) == 0) {
    auto t = int_arg(spec.substr(3));
    if (t) return theta_graph(*t, 4);
    return std::nullopt;
  }
  if (spec.rfind("theta:", 0) == 0) {
    auto args = int_pair_arg(spec.substr(6));
    if (args) return theta_graph(args->first, args->second);
    return std::nullopt;
  }
  if (spec.rfind("bundle:", 0) == 0) {
    auto t = int_arg(spec.substr(7));
    if (t) return triangle_bundle(*t);
    return std::nullopt;
  }
  if (spec.empty()) return std::nullopt;
  const std::string rest = spec.substr(1);
  switch (spec[0]) {
    case 'K':
      if (auto pq = int_pair_arg(rest)) return complete_bipartite(pq->first, pq->second);
      if (auto n = int_arg(rest)) return complete_graph(*n);
      return std::nullopt;
    case 'W':
      if (auto t = int_arg(rest)) return wheel(*t);
      return std::nullopt;
    case 'C':
      if (auto n = int_arg(rest)) return cycle_graph(*n);
      return std::nullopt;
    case 'P':
      if (auto n = int_arg(rest)) return path_graph(*n);
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

}  // namespace detail

// Family spec if it matches the grammar, otherwise a graph6 literal.
inline Graph parse_graph_spec(const std::string& spec) {
  if (spec.rfind("g6:", 0) == 0) return parse_graph6(spec.substr(3));
  if (auto g = detail::parse_family_spec(spec)) return *g;
  try {
    return parse_graph6(spec);
  } catch (const Graph6ParseError&) {
    throw std::invalid_argument(
        "unrecognized graph spec \"" + spec +
        "\": expected a family name (K5, K3,4, W6, C7, P7, P_fam:3, Ht:4, "
        "theta:3,4, bundle:5, petersen, dodecahedron, U(...)) or a graph6 string");
  }
}

// ---------------------------------------------------------------------------
// Serializers
// ---------------------------------------------------------------------------

inline json path_to_json(const PathOrCycle& p) {
  json out;
  out["vertices"] = p.vertices;
  out["kind"] = p.is_cycle() ? "rooted_cycle" : "path";
  if (p.is_cycle()) out["root"] = p.root();
  return out;
}

inline PathOrCycle path_from_json(const json& j) {
  PathOrCycle p;
  p.vertices = j.at("vertices").get<std::vector<int>>();
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "rooted_cycle") {
    p.kind = PathOrCycle::Kind::rooted_cycle;
  } else if (kind == "path") {
    p.kind = PathOrCycle::Kind::path;
  } else {
    throw std::invalid_argument("path kind must be \"path\" or \"rooted_cycle\", got \"" +
                                kind + "\"");
  }
  return p;
}

inline json decomposition_to_json(const Decomposition& d) {
  json out;
  out["h"] = d.h;
  out["W"] = set_to_vector(d.w);
  out["paths"] = json::array();
  for (const PathOrCycle& p : d.paths) out["paths"].push_back(path_to_json(p));
  out["M"] = d.matching;
  out["f"] = json::object();
  for (const auto& [v, idx] : d.assignment) out["f"][std::to_string(v)] = idx;
  return out;
}

inline Decomposition decomposition_from_json(const json& j) {
  Decomposition d;
  d.h = j.at("h").get<int>();
  d.w = 0;
  for (int v : j.at("W").get<std::vector<int>>()) d.w |= bit(v);
  for (const json& p : j.at("paths")) d.paths.push_back(path_from_json(p));
  if (j.contains("M")) d.matching = j.at("M").get<std::vector<int>>();
  if (j.contains("f"))
    for (const auto& [key, idx] : j.at("f").items())
      d.assignment[std::stoi(key)] = idx.get<int>();
  return d;
}

inline json corollaries_to_json(const CorollaryBounds& c) {
  json out;
  out["andreae"] = c.andreae ? json(*c.andreae) : json(nullptr);
  out["simplematching"] = c.simplematching ? json(*c.simplematching) : json(nullptr);
  out["simplepaths"] = c.simplepaths ? json(*c.simplepaths) : json(nullptr);
  out["partial"] = c.partial;
  return out;
}

inline json bound_report_to_json(const BoundReport& r) {
  json out = decomposition_to_json(r.decomposition);
  out["ell"] = json::object();
  for (size_t i = 0; i < r.ell.size(); ++i) out["ell"][std::to_string(i)] = r.ell[i];
  out["indicator"] = r.indicator;
  out["bound"] = r.bound;
  out["feasible"] = r.feasible;
  out["partial"] = r.partial;
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

inline json minor_model_to_json(const MinorModel& m) {
  json out = json::object();
  for (size_t u = 0; u < m.branch_sets.size(); ++u)
    out[std::to_string(u)] = set_to_vector(m.branch_sets[u]);
  return out;
}

inline json game_state_to_json(const GameState& st) {
  json out;
  out["host"] = write_graph6(st.host);
  out["forbidden"] = write_graph6(st.forbidden);
  out["decomposition"] = decomposition_to_json(st.decomposition);
  out["bags"] = json::object();
  for (const auto& [w, bag] : st.bags) out["bags"][std::to_string(w)] = set_to_vector(bag);
  out["model_paths"] = json::object();
  for (const auto& [idx, q] : st.model_paths)
    out["model_paths"][std::to_string(idx)] = path_to_json(q);
  out["territory"] = set_to_vector(st.territory);
  out["guards"] = json::object();
  for (const auto& [cop, s] : st.guards)
    out["guards"][std::to_string(cop)] = set_to_vector(s);
  out["cop_groups"] = json::object();
  for (const auto& [cop, group] : st.cop_groups)
    out["cop_groups"][std::to_string(cop)] = group;
  return out;
}

inline GameState game_state_from_json(const json& j) {
  GameState st;
  st.host = parse_graph6(j.at("host").get<std::string>());
  st.forbidden = parse_graph6(j.at("forbidden").get<std::string>());
  st.decomposition = decomposition_from_json(j.at("decomposition"));
  if (j.contains("bags"))
    for (const auto& [key, verts] : j.at("bags").items()) {
      VertexSet bag = 0;
      for (int v : verts.get<std::vector<int>>()) bag |= bit(v);
      st.bags[std::stoi(key)] = bag;
    }
  if (j.contains("model_paths"))
    for (const auto& [key, p] : j.at("model_paths").items())
      st.model_paths[std::stoi(key)] = path_from_json(p);
  st.territory = 0;
  for (int v : j.at("territory").get<std::vector<int>>()) st.territory |= bit(v);
  if (j.contains("guards"))
    for (const auto& [key, verts] : j.at("guards").items()) {
      VertexSet s = 0;
      for (int v : verts.get<std::vector<int>>()) s |= bit(v);
      st.guards[std::stoi(key)] = s;
    }
  if (j.contains("cop_groups"))
    for (const auto& [key, group] : j.at("cop_groups").items())
      st.cop_groups[std::stoi(key)] = group.get<int>();
  return st;
}

inline json violations_to_json(const std::vector<StateViolation>& vs) {
  json out = json::array();
  for (const StateViolation& v : vs) {
    json row;
    row["condition"] = v.condition;
    row["detail"] = v.detail;
    out.push_back(row);
  }
  return out;
}

}  // namespace copbound
