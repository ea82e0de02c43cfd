#pragma once

#include <cstdio>
#include <json.hpp>
#include <string>
#include <variant>

#include "fangood/bounds.hpp"
#include "fangood/certificate.hpp"
#include "fangood/coloring_io.hpp"
#include "fangood/graph6.hpp"
#include "fangood/oracle.hpp"
#include "fangood/solvers.hpp"
#include "fangood/sparse.hpp"

namespace fangood {

using Json = nlohmann::json;

// Hash of the (G, coloring, k, t) instance a certificate refers to, in hex.
inline std::string instance_hash(const Graph& g, const TwoColoring& c, std::size_t k,
                                 std::size_t t) {
  std::uint64_t h = fnv1a64(write_graph6(g));
  h = fnv1a64(write_coloring(c), h);
  h = fnv1a64(std::to_string(k) + "/" + std::to_string(t), h);
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

inline Json to_json(const Certificate& cert) {
  Json j;
  if (auto* e = std::get_if<RedEmbedding>(&cert)) {
    j["type"] = "red";
    j["map"] = e->image;
    return j;
  }
  j["type"] = "blue";
  Json fans = Json::array();
  for (const auto& f : std::get<BlueFans>(cert).fans) {
    Json pairs = Json::array();
    for (auto [a, b] : f.pairs) pairs.push_back({a, b});
    fans.push_back({{"center", f.center}, {"pairs", pairs}});
  }
  j["fans"] = fans;
  return j;
}

inline Json certificate_json(const Certificate& cert, const Graph& g, const TwoColoring& c,
                             std::size_t k, std::size_t t) {
  Json j = to_json(cert);
  j["instance_hash"] = instance_hash(g, c, k, t);
  return j;
}

inline Certificate certificate_from_json(const Json& j) {
  try {
    const std::string type = j.at("type").get<std::string>();
    if (type == "red") return RedEmbedding{j.at("map").get<std::vector<VertexId>>()};
    if (type != "blue") throw FormatError("certificate type must be red or blue");
    BlueFans out;
    for (const auto& f : j.at("fans")) {
      BlueFan fan{f.at("center").get<VertexId>(), {}};
      for (const auto& p : f.at("pairs"))
        fan.pairs.emplace_back(p.at(0).get<VertexId>(), p.at(1).get<VertexId>());
      out.fans.push_back(std::move(fan));
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed certificate: ") + e.what());
  }
}

inline Json to_json(const TrichotomyOutcome& o) {
  return std::visit(
      [](const auto& c) -> Json {
        using C = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<C, SuspendedPathCase>) {
          return {{"case", "suspended_path"}, {"path", c.path}};
        } else if constexpr (std::is_same_v<C, EndEdgeMatchingCase>) {
          Json es = Json::array();
          for (auto [s, l] : c.edges) es.push_back({s, l});
          return {{"case", "end_edge_matching"}, {"edges", es}};
        } else {
          return {{"case", "star_vertex"},
                  {"center", c.center},
                  {"leaves", c.leaves},
                  {"gamma", c.gamma},
                  {"required", c.required}};
        }
      },
      o);
}

inline Json to_json(const SparseProfile& p) {
  return {{"n", p.n}, {"m", p.m}, {"ell", p.ell}};
}

inline Json to_json(const Section6Constants& s) {
  return {{"c", to_string(s.c)}, {"g", to_string(s.g)}, {"f", to_string(s.f)},
          {"G", to_string(s.G)}, {"F", to_string(s.F)}};
}

inline Json to_json(const BoundsReport& r) {
  Json j;
  j["n"] = r.n;
  j["m"] = r.m;
  j["k"] = r.k;
  j["t"] = r.t;
  j["burr_lower"] = std::to_string(r.burr_lower);
  j["lemma26_upper"] = r.lemma26_upper ? Json(to_string(*r.lemma26_upper)) : Json(nullptr);
  j["cor53_upper"] = r.cor53_upper ? Json(to_string(*r.cor53_upper)) : Json(nullptr);
  j["cor52_upper"] = std::to_string(r.cor52_upper);
  j["theorem_value"] = r.theorem_value ? Json(std::to_string(*r.theorem_value)) : Json(nullptr);
  j["theorem"] = r.chosen ? Json(*r.chosen) : Json(nullptr);
  Json app = Json::array();
  for (const auto& a : r.applicable)
    app.push_back({{"theorem", a.theorem}, {"applies", a.applies}, {"reason", a.reason}});
  j["applicability"] = app;
  j["section6"] = to_json(r.section6);
  j["section6_fan_applies"] = r.section6_fan_applies;
  j["section6_tfan_applies"] = r.section6_tfan_applies;
  return j;
}

inline Json to_json(const SearchStats& s) {
  return {{"colorings_examined", s.colorings_examined},
          {"prune_hits", s.prune_hits},
          {"classes_per_order", s.classes_per_order}};
}

}  // namespace fangood
