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

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "nonsep/graph.hpp"

namespace nonsep {

enum class CertificateKind { paths, cycle, witness, common_neighbor, feasible_path, block_pair };

/// What the residual graph G - V(paths or cycle) must satisfy.
enum class ResidualRule {
  none,
  level,                 // level 1: connected and nonempty; level 2: 2-connected
  avoided_in_component,  // all avoided vertices in one component
  avoided_in_block,      // all avoided vertices in one block
};

/// Which subgraphs count as blocks. `strict` only admits maximal 2-connected
/// subgraphs and isolated vertices (bridges are not blocks).
enum class BlockConvention { standard, strict };

/// Self-contained evidence, in original vertex ids, that an independent
/// checker can validate against the graph alone.
struct Certificate {
  CertificateKind kind = CertificateKind::paths;

  std::vector<int> avoided;
  std::vector<int> terminals;
  std::vector<Edge> edges;

  std::vector<std::vector<int>> paths;
  std::vector<int> cycle;
  std::vector<std::vector<int>> parts;
  int vertex = -1;
  std::vector<int> targets;
  std::vector<int> forbidden;

  ResidualRule rule = ResidualRule::none;
  int level = 0;
  BlockConvention convention = BlockConvention::standard;

  // Witness fragment. `bound` is thm23, lemma31, thm22 or seymour.
  std::string bound;
  int cap_limit = 0;
  std::vector<int> caps;
  int edges_measured = 0;
  long long threshold_doubled = 0;
  bool pass = false;
  std::vector<int> boundary;

  std::string engine = "oracle";
  std::uint64_t seed = 0;
  std::string graph_hash;
  int residual_components = 0;
  int residual_blocks = 0;
};

std::string_view to_string(CertificateKind k);
std::string_view to_string(ResidualRule r);
std::string_view to_string(BlockConvention c);
CertificateKind parse_certificate_kind(std::string_view s);
ResidualRule parse_residual_rule(std::string_view s);
BlockConvention parse_block_convention(std::string_view s);

nlohmann::json to_json(const Certificate& c);
/// Throws std::invalid_argument naming the offending field.
Certificate certificate_from_json(const nlohmann::json& j);

/// Fills the residual summary counts (components and standard blocks).
void annotate_residual(const Graph& g, Certificate& c);

}  // namespace nonsep
