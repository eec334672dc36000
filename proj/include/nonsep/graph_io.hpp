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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nonsep/graph.hpp"

namespace nonsep {

/// Malformed input; `offset` is the byte position of the problem.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

enum class GraphFormat { graph6, edge_list };

/// graph6 without the optional >>graph6<< header and without a newline.
std::string emit_graph6(const Graph& g);
/// Accepts one graph6 record, optionally with header and trailing newline.
Graph parse_graph6(std::string_view text);

/// "n m" header followed by one "u v" line per edge, 0-indexed, u < v,
/// edges in lexicographic order.
std::string emit_edge_list(const Graph& g);
Graph parse_edge_list(std::string_view text);

std::string emit_graph(const Graph& g, GraphFormat format);
/// Edge lists start with a digit; anything else is read as graph6.
Graph parse_graph(std::string_view text);

/// Every nonblank line parsed as one graph6 record.
std::vector<Graph> parse_graph6_stream(std::string_view text);

/// FNV-1a (64 bit) of the graph6 encoding, as 16 hex digits.
std::string graph_hash(const Graph& g);

}  // namespace nonsep
