#pragma once

#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "sepmatch/core.hpp"
#include "sepmatch/geometry.hpp"
#include "sepmatch/reductions.hpp"
#include "sepmatch/scheduling.hpp"

namespace sepmatch {

using ordered_json = nlohmann::ordered_json;

namespace detail {

inline ordered_json rat_to_json(const rat& r) {
  if (is_integral(r)) return r.numerator();
  return to_string(r);
}

inline rat rat_from_json(const ordered_json& j, const std::string& field) {
  try {
    if (j.is_number_integer()) return rat(j.get<long long>());
    if (j.is_number_unsigned()) return rat(static_cast<long long>(j.get<unsigned long long>()));
    if (j.is_number_float()) return rat_from_double(j.get<double>());
    if (j.is_string()) return parse_rat(j.get<std::string>());
  } catch (const parse_error& e) {
    throw parse_error("field '" + field + "': " + e.what());
  }
  throw parse_error("field '" + field + "' must be a number or a rational string");
}

inline int int_from_json(const ordered_json& j, const std::string& field) {
  if (!j.is_number_integer() && !j.is_number_unsigned())
    throw parse_error("field '" + field + "' must be an integer");
  return j.get<int>();
}

inline void reject_unknown(const ordered_json& j, const std::set<std::string>& allowed,
                           const std::string& what) {
  for (auto it = j.begin(); it != j.end(); ++it)
    if (!allowed.count(it.key()))
      throw parse_error("unknown field '" + it.key() + "' in " + what);
}

inline ordered_json parse_json(const std::string& text, const std::string& what) {
  try {
    return ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw parse_error("malformed " + what + ": " + e.what());
  }
}

inline ordered_json position_to_json(const instance& g, const position& p) {
  if (g.dim == dim_kind::path) return p.x;
  return ordered_json::array({p.x, p.y});
}

inline position position_from_json(dim_kind dim, const ordered_json& j, std::size_t idx) {
  std::string at = "edges[" + std::to_string(idx) + "]";
  if (dim == dim_kind::path) {
    if (!j.is_number_integer() && !j.is_number_unsigned())
      throw parse_error(at + ": path position must be an integer");
    return {j.get<int>(), 0};
  }
  if (!j.is_array() || j.size() != 2)
    throw parse_error(at + ": grid position must be a pair [x, y]");
  return {int_from_json(j[0], at + ".x"), int_from_json(j[1], at + ".y")};
}

}  // namespace detail

inline std::string serialize_instance(const instance& g) {
  ordered_json j;
  j["dim"] = g.dim == dim_kind::path ? "path" : "grid";
  j["a"] = g.a_count;
  if (g.dim == dim_kind::path)
    j["b"] = g.b_count;
  else
    j["b"] = ordered_json::array({g.beta1, g.beta2});
  j["s"] = detail::rat_to_json(g.s);
  if (g.dim == dim_kind::grid) {
    j["metric"] = metric_name(g.met.kind);
    if (g.met.kind == metric_kind::wlinf) {
      j["wx"] = detail::rat_to_json(g.met.wx);
      j["wy"] = detail::rat_to_json(g.met.wy);
    }
  }
  if (g.group_size != 1) j["g"] = g.group_size;
  if (g.bilateral) j["bilateral"] = true;
  auto edges = ordered_json::array();
  for (const auto& e : g.edges)
    edges.push_back(ordered_json::array({e.a, detail::position_to_json(g, e.b)}));
  j["edges"] = std::move(edges);
  if (g.weighted()) {
    auto ws = ordered_json::array();
    for (const auto& w : *g.weights) ws.push_back(detail::rat_to_json(w));
    j["weights"] = std::move(ws);
  }
  return j.dump(2) + "\n";
}

inline instance parse_instance(const std::string& text) {
  auto j = detail::parse_json(text, "instance");
  if (!j.is_object()) throw parse_error("instance file must hold a JSON object");
  if (!j.contains("dim")) throw parse_error("missing field 'dim'");
  std::string dim = j["dim"].is_string() ? j["dim"].get<std::string>() : "";
  instance g;
  if (dim == "path")
    g.dim = dim_kind::path;
  else if (dim == "grid")
    g.dim = dim_kind::grid;
  else
    throw parse_error("field 'dim' must be \"path\" or \"grid\"");

  std::set<std::string> allowed{"dim", "a", "b", "s", "edges", "weights"};
  if (g.dim == dim_kind::path) {
    allowed.insert("g");
    allowed.insert("bilateral");
  } else {
    allowed.insert("metric");
    allowed.insert("wx");
    allowed.insert("wy");
  }
  detail::reject_unknown(j, allowed, "instance");
  for (const char* req : {"a", "b", "s", "edges"})
    if (!j.contains(req)) throw parse_error(std::string("missing field '") + req + "'");

  g.a_count = detail::int_from_json(j["a"], "a");
  if (g.a_count < 0) throw parse_error("field 'a' must be nonnegative");
  if (g.dim == dim_kind::path) {
    g.b_count = detail::int_from_json(j["b"], "b");
    if (g.b_count < 0) throw parse_error("field 'b' must be nonnegative");
  } else {
    if (!j["b"].is_array() || j["b"].size() != 2)
      throw parse_error("field 'b' must be [beta1, beta2] for grid instances");
    g.beta1 = detail::int_from_json(j["b"][0], "b[0]");
    g.beta2 = detail::int_from_json(j["b"][1], "b[1]");
  }
  g.s = detail::rat_from_json(j["s"], "s");
  if (g.s < rat(0)) throw parse_error("field 's' must be nonnegative");

  if (g.dim == dim_kind::grid) {
    if (!j.contains("metric")) throw parse_error("missing field 'metric'");
    std::string m = j["metric"].is_string() ? j["metric"].get<std::string>() : "";
    if (m == "l1")
      g.met.kind = metric_kind::l1;
    else if (m == "linf")
      g.met.kind = metric_kind::linf;
    else if (m == "wlinf")
      g.met.kind = metric_kind::wlinf;
    else if (m == "l2")
      g.met.kind = metric_kind::l2;
    else
      throw parse_error("field 'metric' must be one of l1, linf, wlinf, l2");
    if (g.met.kind == metric_kind::wlinf) {
      if (!j.contains("wx") || !j.contains("wy"))
        throw parse_error("wlinf metric needs fields 'wx' and 'wy'");
      g.met.wx = detail::rat_from_json(j["wx"], "wx");
      g.met.wy = detail::rat_from_json(j["wy"], "wy");
    } else if (j.contains("wx") || j.contains("wy")) {
      throw parse_error("fields 'wx'/'wy' are only valid with the wlinf metric");
    }
  }
  if (j.contains("g")) g.group_size = detail::int_from_json(j["g"], "g");
  if (j.contains("bilateral")) {
    if (!j["bilateral"].is_boolean()) throw parse_error("field 'bilateral' must be a bool");
    g.bilateral = j["bilateral"].get<bool>();
  }

  if (!j["edges"].is_array()) throw parse_error("field 'edges' must be an array");
  std::size_t idx = 0;
  for (const auto& je : j["edges"]) {
    if (!je.is_array() || je.size() != 2)
      throw parse_error("edges[" + std::to_string(idx) + "] must be a pair");
    edge e;
    e.a = detail::int_from_json(je[0], "edges[" + std::to_string(idx) + "].a");
    e.b = detail::position_from_json(g.dim, je[1], idx);
    g.edges.push_back(e);
    ++idx;
  }

  if (j.contains("weights")) {
    if (!j["weights"].is_array()) throw parse_error("field 'weights' must be an array");
    std::vector<rat> ws;
    std::size_t wi = 0;
    for (const auto& jw : j["weights"])
      ws.push_back(detail::rat_from_json(jw, "weights[" + std::to_string(wi++) + "]"));
    if (ws.size() != g.edges.size())
      throw parse_error("field 'weights' must parallel 'edges'");
    g.weights = std::move(ws);
  }
  return g;
}

inline std::string serialize_matching(const instance& g, const matching& m) {
  ordered_json pairs = ordered_json::array();
  for (const auto& e : m.pairs)
    pairs.push_back(ordered_json::array({e.a, detail::position_to_json(g, e.b)}));
  ordered_json j;
  j["pairs"] = std::move(pairs);
  return j.dump(2) + "\n";
}

inline matching parse_matching(const std::string& text, const instance& g) {
  auto j = detail::parse_json(text, "matching");
  if (!j.is_object()) throw parse_error("matching file must hold a JSON object");
  detail::reject_unknown(j, {"pairs"}, "matching");
  if (!j.contains("pairs") || !j["pairs"].is_array())
    throw parse_error("missing array field 'pairs'");
  matching m;
  std::size_t idx = 0;
  for (const auto& jp : j["pairs"]) {
    if (!jp.is_array() || jp.size() != 2)
      throw parse_error("pairs[" + std::to_string(idx) + "] must be a pair");
    edge e;
    e.a = detail::int_from_json(jp[0], "pairs[" + std::to_string(idx) + "].a");
    e.b = detail::position_from_json(g.dim, jp[1], idx);
    m.pairs.push_back(e);
    ++idx;
  }
  return m;
}

inline std::string serialize_setpacking(const set_packing_instance& sp) {
  ordered_json j;
  j["u"] = sp.universe_size;
  auto sets = ordered_json::array();
  for (const auto& s : sp.subsets) sets.push_back(s);
  j["sets"] = std::move(sets);
  return j.dump(2) + "\n";
}

inline set_packing_instance parse_setpacking(const std::string& text) {
  auto j = detail::parse_json(text, "set packing instance");
  if (!j.is_object()) throw parse_error("set packing file must hold a JSON object");
  detail::reject_unknown(j, {"u", "sets"}, "set packing instance");
  if (!j.contains("u") || !j.contains("sets"))
    throw parse_error("set packing instance needs fields 'u' and 'sets'");
  set_packing_instance sp;
  sp.universe_size = detail::int_from_json(j["u"], "u");
  if (!j["sets"].is_array()) throw parse_error("field 'sets' must be an array");
  std::size_t idx = 0;
  for (const auto& js : j["sets"]) {
    if (!js.is_array())
      throw parse_error("sets[" + std::to_string(idx) + "] must be an array");
    std::vector<int> s;
    for (const auto& je : js)
      s.push_back(detail::int_from_json(je, "sets[" + std::to_string(idx) + "]"));
    std::sort(s.begin(), s.end());
    sp.subsets.push_back(std::move(s));
    ++idx;
  }
  return sp;
}

inline std::string serialize_normspec(const norm_spec& n) {
  ordered_json j;
  auto poly = ordered_json::array();
  for (const auto& v : n.polygon)
    poly.push_back(ordered_json::array(
        {detail::rat_to_json(v.x), detail::rat_to_json(v.y)}));
  j["polygon"] = std::move(poly);
  return j.dump(2) + "\n";
}

inline norm_spec parse_normspec(const std::string& text) {
  auto j = detail::parse_json(text, "norm spec");
  if (!j.is_object()) throw parse_error("norm spec file must hold a JSON object");
  detail::reject_unknown(j, {"polygon"}, "norm spec");
  if (!j.contains("polygon") || !j["polygon"].is_array())
    throw parse_error("missing array field 'polygon'");
  std::vector<rpoint> vs;
  std::size_t idx = 0;
  for (const auto& jv : j["polygon"]) {
    if (!jv.is_array() || jv.size() != 2)
      throw parse_error("polygon[" + std::to_string(idx) + "] must be a pair");
    vs.push_back({detail::rat_from_json(jv[0], "polygon.x"),
                  detail::rat_from_json(jv[1], "polygon.y")});
    ++idx;
  }
  return make_polygon_norm(std::move(vs));
}

inline std::string serialize_jobset(const job_set& js) {
  ordered_json j;
  j["p"] = js.p;
  auto jobs = ordered_json::array();
  for (const auto& jb : js.jobs)
    jobs.push_back(ordered_json::array({jb.id, jb.release, jb.deadline}));
  j["jobs"] = std::move(jobs);
  return j.dump(2) + "\n";
}

inline std::string serialize_report(const instance& g, const solve_report& rep) {
  ordered_json j;
  j["algorithm"] = rep.algorithm;
  j["value"] = detail::rat_to_json(rep.value);
  if (rep.claw_bound)
    j["claw_bound"] = *rep.claw_bound;
  else
    j["claw_bound"] = nullptr;
  if (rep.guarantee)
    j["guarantee"] = *rep.guarantee;
  else
    j["guarantee"] = nullptr;
  j["elapsed_ms"] = rep.elapsed_ms;
  auto pairs = ordered_json::array();
  for (const auto& e : rep.result.pairs)
    pairs.push_back(ordered_json::array({e.a, detail::position_to_json(g, e.b)}));
  j["matching"] = ordered_json{{"pairs", std::move(pairs)}};
  return j.dump(2) + "\n";
}

}  // namespace sepmatch
