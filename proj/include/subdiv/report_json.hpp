#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "subdiv/bounds.hpp"
#include "subdiv/constructions.hpp"
#include "subdiv/density.hpp"
#include "subdiv/errors.hpp"
#include "subdiv/subdivision.hpp"

namespace subdiv {

using Json = nlohmann::json;

inline const char *anchor_kind_name(AnchorKind k) { return k == AnchorKind::edge ? "edge" : "vertex"; }

inline Json anchor_to_json(const Anchor &a) {
  if (a.kind == AnchorKind::edge) return Json::array({a.u, a.v});
  return Json(a.u);
}

/// {anchor_kind, k?, min_count, argmin, per_anchor: [[anchor, count]...],
///  per_class?: [[class_name, count]...]}
inline Json to_json(const DensityReport &r) {
  Json j;
  j["anchor_kind"] = anchor_kind_name(r.anchor_kind);
  if (r.k) j["k"] = *r.k;
  j["min_count"] = r.min_count;
  j["argmin"] = anchor_to_json(r.argmin);
  Json per = Json::array();
  for (const auto &[a, c] : r.per_anchor) per.push_back(Json::array({anchor_to_json(a), c}));
  j["per_anchor"] = std::move(per);
  if (r.per_class) {
    Json pc = Json::array();
    for (const auto &c : *r.per_class) pc.push_back(Json::array({c.name, c.count}));
    j["per_class"] = std::move(pc);
  }
  return j;
}

inline Json pattern_to_json(const Pattern &p) {
  if (!p.label().empty()) return p.label();
  Json edges = Json::array();
  for (const Edge &e : p.edges()) edges.push_back(Json::array({e.u, e.v}));
  return edges;
}

/// {pattern, branch: [[f_vertex, g_vertex]...], paths: [{edge: [i,j], route: [...]}...]}
inline Json to_json(const SubdivisionWitness &w) {
  Json j;
  j["pattern"] = pattern_to_json(w.pattern);
  Json branch = Json::array();
  for (std::size_t f = 0; f < w.branch.size(); ++f) branch.push_back(Json::array({f, w.branch[f]}));
  j["branch"] = std::move(branch);
  Json paths = Json::array();
  const auto &edges = w.pattern.edges();
  for (std::size_t i = 0; i < edges.size() && i < w.routes.size(); ++i)
    paths.push_back({{"edge", Json::array({edges[i].u, edges[i].v})}, {"route", w.routes[i]}});
  j["paths"] = std::move(paths);
  return j;
}

/// Reads the witness shape. Structural problems that validate_witness can
/// describe (missing paths, bad routes) are left for it to report; shape
/// errors that leave no witness to validate throw DomainError.
inline SubdivisionWitness witness_from_json(const Json &j) {
  try {
    SubdivisionWitness w;
    const Json &branch = j.at("branch");
    if (!branch.is_array()) throw DomainError("witness JSON: branch must be an array");
    std::map<int, int> map;
    for (const auto &pair : branch) {
      const int f = pair.at(0).get<int>();
      const int g = pair.at(1).get<int>();
      if (!map.emplace(f, g).second) throw DomainError("witness JSON: pattern vertex " + std::to_string(f) + " mapped twice");
    }
    const int l = static_cast<int>(map.size());
    for (int f = 0; f < l; ++f) {
      if (!map.contains(f)) throw DomainError("witness JSON: branch map must cover pattern vertices 0..l-1");
      w.branch.push_back(map[f]);
    }
    const Json &pattern = j.at("pattern");
    if (pattern.is_string()) {
      w.pattern = Pattern::named(pattern.get<std::string>());
    } else {
      std::vector<Edge> edges;
      for (const auto &e : pattern) edges.emplace_back(e.at(0).get<int>(), e.at(1).get<int>());
      std::sort(edges.begin(), edges.end());
      w.pattern = Pattern::from_graph(Graph::from_edges(l, edges));
    }
    if (w.pattern.order() != l)
      throw DomainError("witness JSON: branch map covers " + std::to_string(l) + " vertices but pattern has " +
                        std::to_string(w.pattern.order()));
    w.routes.assign(w.pattern.edges().size(), {});
    for (const auto &p : j.at("paths")) {
      int a = p.at("edge").at(0).get<int>();
      int b = p.at("edge").at(1).get<int>();
      auto route = p.at("route").get<std::vector<int>>();
      if (a > b) {
        std::swap(a, b);
        std::reverse(route.begin(), route.end());
      }
      const int idx = w.pattern.edge_index(a, b);
      if (idx < 0) throw DomainError("witness JSON: path for non-edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
      if (!w.routes[static_cast<std::size_t>(idx)].empty())
        throw DomainError("witness JSON: two paths for edge {" + std::to_string(a) + "," + std::to_string(b) + "}");
      w.routes[static_cast<std::size_t>(idx)] = std::move(route);
    }
    return w;
  } catch (const Json::exception &e) {
    throw DomainError(std::string("witness JSON: ") + e.what());
  }
}

/// {engine, count (decimal string), truncated, vertex_sets?}
inline Json to_json(const EnumerationResult &r, bool with_sets) {
  Json j;
  j["engine"] = engine_name(r.engine);
  j["count"] = to_decimal(r.count);
  j["truncated"] = r.truncated;
  if (with_sets) {
    Json sets = Json::array();
    for (const auto &s : r.vertex_sets) sets.push_back(s.items());
    j["vertex_sets"] = std::move(sets);
  }
  return j;
}

/// {name, inputs, value | log2_value, side, asymptotic?: true, compared_against?}
/// Exact integers are written as decimal strings.
inline Json to_json(const BoundReport &b) {
  Json j;
  j["name"] = b.name;
  j["inputs"] = b.inputs;
  if (const auto *v = std::get_if<BigInt>(&b.value))
    j["value"] = to_decimal(*v);
  else if (b.value_is_log2)
    j["log2_value"] = std::get<double>(b.value);
  else
    j["value"] = std::get<double>(b.value);
  j["side"] = b.side == BoundSide::lower ? "lower" : "upper";
  if (b.asymptotic) j["asymptotic"] = true;
  if (b.compared_against) j["compared_against"] = to_decimal(*b.compared_against);
  return j;
}

inline Json to_json(const BookStructure &h) {
  return {{"A", h.a}, {"z", h.z()}, {"B", h.b.items()}};
}

inline const char *construction_kind_name(ConstructionKind k) {
  switch (k) {
  case ConstructionKind::split:
    return "split";
  case ConstructionKind::complete:
    return "complete";
  case ConstructionKind::complete_bipartite:
    return "complete-bipartite";
  case ConstructionKind::random:
    return "random";
  }
  return "";
}

inline Json to_json(const ConstructionSpec &s) {
  Json j;
  j["kind"] = construction_kind_name(s.kind);
  switch (s.kind) {
  case ConstructionKind::split:
    j["ell"] = s.l;
    j["t"] = s.t;
    break;
  case ConstructionKind::complete:
    j["r"] = s.r;
    break;
  case ConstructionKind::complete_bipartite:
    j["r"] = s.r;
    j["s"] = s.s;
    break;
  case ConstructionKind::random:
    j["n"] = s.n;
    j["p"] = s.p;
    j["seed"] = s.seed;
    j["generator"] = kRandomGraphGenerator;
    break;
  }
  return j;
}

inline ConstructionSpec construction_spec_from_json(const Json &j) {
  try {
    ConstructionSpec s;
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "split") {
      s.kind = ConstructionKind::split;
      s.l = j.at("ell").get<int>();
      s.t = j.at("t").get<int>();
    } else if (kind == "complete") {
      s.kind = ConstructionKind::complete;
      s.r = j.at("r").get<int>();
    } else if (kind == "complete-bipartite") {
      s.kind = ConstructionKind::complete_bipartite;
      s.r = j.at("r").get<int>();
      s.s = j.at("s").get<int>();
    } else if (kind == "random") {
      s.kind = ConstructionKind::random;
      s.n = j.at("n").get<int>();
      s.p = j.at("p").get<double>();
      s.seed = j.at("seed").get<std::uint64_t>();
      if (j.contains("generator") && j["generator"].get<std::string>() != kRandomGraphGenerator)
        throw DomainError("construction spec: unsupported generator " + j["generator"].get<std::string>());
    } else {
      throw DomainError("construction spec: unknown kind '" + kind + "'");
    }
    s.validate();
    return s;
  } catch (const Json::exception &e) {
    throw DomainError(std::string("construction spec: ") + e.what());
  }
}

} // namespace subdiv
