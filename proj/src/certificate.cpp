// Copyright 2026 The nonsep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "nonsep/certificate.hpp"

#include <stdexcept>

namespace nonsep {

using nlohmann::json;

std::string_view to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::paths:
      return "paths";
    case CertificateKind::cycle:
      return "cycle";
    case CertificateKind::witness:
      return "witness";
    case CertificateKind::common_neighbor:
      return "common-neighbor";
    case CertificateKind::feasible_path:
      return "feasible-path";
    case CertificateKind::block_pair:
      return "block-pair";
  }
  return "?";
}

std::string_view to_string(ResidualRule r) {
  switch (r) {
    case ResidualRule::none:
      return "none";
    case ResidualRule::level:
      return "level";
    case ResidualRule::avoided_in_component:
      return "avoided-in-component";
    case ResidualRule::avoided_in_block:
      return "avoided-in-block";
  }
  return "?";
}

std::string_view to_string(BlockConvention c) { return c == BlockConvention::standard ? "standard" : "strict"; }

CertificateKind parse_certificate_kind(std::string_view s) {
  for (auto k : {CertificateKind::paths, CertificateKind::cycle, CertificateKind::witness,
                 CertificateKind::common_neighbor, CertificateKind::feasible_path, CertificateKind::block_pair})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown certificate kind '" + std::string(s) + "'");
}

ResidualRule parse_residual_rule(std::string_view s) {
  for (auto r : {ResidualRule::none, ResidualRule::level, ResidualRule::avoided_in_component,
                 ResidualRule::avoided_in_block})
    if (to_string(r) == s) return r;
  throw std::invalid_argument("unknown residual rule '" + std::string(s) + "'");
}

BlockConvention parse_block_convention(std::string_view s) {
  if (s == "standard") return BlockConvention::standard;
  if (s == "strict") return BlockConvention::strict;
  throw std::invalid_argument("unknown block convention '" + std::string(s) + "'");
}

namespace {

json edges_to_json(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

template <class T>
T field(const json& j, const char* key, T fallback) {
  if (!j.contains(key)) return fallback;
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("certificate field '") + key + "': " + e.what());
  }
}

}  // namespace

json to_json(const Certificate& c) {
  json roots = {{"avoided", c.avoided}};
  if (!c.terminals.empty()) roots["terminals"] = c.terminals;
  if (!c.edges.empty()) roots["edges"] = edges_to_json(c.edges);

  json payload = json::object();
  switch (c.kind) {
    case CertificateKind::paths:
    case CertificateKind::feasible_path:
      payload["paths"] = c.paths;
      break;
    case CertificateKind::cycle:
      payload["cycle"] = c.cycle;
      break;
    case CertificateKind::witness:
      payload["parts"] = c.parts;
      payload["caps"] = c.caps;
      payload["cap_limit"] = c.cap_limit;
      payload["edges_measured"] = c.edges_measured;
      payload["threshold_doubled"] = c.threshold_doubled;
      payload["spec"] = c.bound;
      payload["pass"] = c.pass;
      if (!c.boundary.empty()) payload["boundary"] = c.boundary;
      break;
    case CertificateKind::common_neighbor:
      payload["vertex"] = c.vertex;
      payload["targets"] = c.targets;
      payload["forbidden"] = c.forbidden;
      break;
    case CertificateKind::block_pair:
      payload["parts"] = c.parts;
      break;
  }
  return {{"kind", to_string(c.kind)},
          {"graph_hash", c.graph_hash},
          {"roots", roots},
          {"payload", payload},
          {"residual",
           {{"rule", to_string(c.rule)},
            {"level", c.level},
            {"convention", to_string(c.convention)},
            {"components", c.residual_components},
            {"blocks", c.residual_blocks}}},
          {"engine", c.engine},
          {"seed", c.seed}};
}

Certificate certificate_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("certificate must be a JSON object");
  Certificate c;
  c.kind = parse_certificate_kind(field<std::string>(j, "kind", ""));
  c.graph_hash = field<std::string>(j, "graph_hash", "");
  c.engine = field<std::string>(j, "engine", "oracle");
  c.seed = field<std::uint64_t>(j, "seed", 0);
  json roots = field<json>(j, "roots", json::object());
  c.avoided = field<std::vector<int>>(roots, "avoided", {});
  c.terminals = field<std::vector<int>>(roots, "terminals", {});
  for (const auto& e : field<std::vector<std::vector<int>>>(roots, "edges", {})) {
    if (e.size() != 2) throw std::invalid_argument("certificate field 'edges': each edge needs two ends");
    c.edges.push_back({e[0], e[1]});
  }
  json payload = field<json>(j, "payload", json::object());
  c.paths = field<std::vector<std::vector<int>>>(payload, "paths", {});
  c.cycle = field<std::vector<int>>(payload, "cycle", {});
  c.parts = field<std::vector<std::vector<int>>>(payload, "parts", {});
  c.caps = field<std::vector<int>>(payload, "caps", {});
  c.cap_limit = field<int>(payload, "cap_limit", 0);
  c.edges_measured = field<int>(payload, "edges_measured", 0);
  c.threshold_doubled = field<long long>(payload, "threshold_doubled", 0);
  c.bound = field<std::string>(payload, "spec", "");
  c.pass = field<bool>(payload, "pass", false);
  c.boundary = field<std::vector<int>>(payload, "boundary", {});
  c.vertex = field<int>(payload, "vertex", -1);
  c.targets = field<std::vector<int>>(payload, "targets", {});
  c.forbidden = field<std::vector<int>>(payload, "forbidden", {});
  json residual = field<json>(j, "residual", json::object());
  c.rule = parse_residual_rule(field<std::string>(residual, "rule", "none"));
  c.level = field<int>(residual, "level", 0);
  c.convention = parse_block_convention(field<std::string>(residual, "convention", "standard"));
  c.residual_components = field<int>(residual, "components", 0);
  c.residual_blocks = field<int>(residual, "blocks", 0);
  return c;
}

void annotate_residual(const Graph& g, Certificate& c) {
  VertexSet residual = g.vertices();
  for (const auto& p : c.paths)
    for (int v : p)
      if (g.is_vertex(v)) residual.erase(v);
  for (int v : c.cycle)
    if (g.is_vertex(v)) residual.erase(v);
  c.residual_components = static_cast<int>(components(g, residual).size());
  c.residual_blocks = static_cast<int>(block_decomposition(g, residual).blocks.size());
}

}  // namespace nonsep
