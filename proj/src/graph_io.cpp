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

#include "nonsep/graph_io.hpp"

#include <cctype>
#include <cstdint>
#include <cstdio>

namespace nonsep {
namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";

void append_size(std::string& out, std::uint64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(126);
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
  } else {
    out.push_back(126);
    out.push_back(126);
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
  }
}

int sextet(std::string_view text, std::size_t at, std::size_t base) {
  if (at >= text.size()) throw ParseError("graph6: unexpected end of input", base + at);
  auto c = static_cast<unsigned char>(text[at]);
  if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126", base + at);
  return c - 63;
}

struct Tokenizer {
  std::string_view text;
  std::size_t pos = 0;

  bool next(long long& value, std::size_t& at) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= text.size()) return false;
    at = pos;
    bool negative = false;
    if (text[pos] == '-') {
      negative = true;
      ++pos;
    }
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw ParseError("edge list: expected an integer", at);
    long long v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > (1LL << 40)) throw ParseError("edge list: integer too large", at);
      ++pos;
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      throw ParseError("edge list: unexpected character", pos);
    value = negative ? -v : v;
    return true;
  }
};

}  // namespace

std::string emit_graph6(const Graph& g) {
  std::string out;
  const int n = g.order();
  append_size(out, static_cast<std::uint64_t>(n));
  int bits = 0;
  int acc = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        bits = 0;
        acc = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.substr(0, kGraph6Header.size()) == kGraph6Header) {
    text.remove_prefix(kGraph6Header.size());
    base = kGraph6Header.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError("graph6: empty record", base);

  std::size_t pos = 0;
  std::uint64_t n = 0;
  int first = sextet(text, 0, base);
  if (first < 63) {
    n = static_cast<std::uint64_t>(first);
    pos = 1;
  } else if (text.size() > 1 && static_cast<unsigned char>(text[1]) == 126) {
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, i, base));
    pos = 8;
  } else {
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | static_cast<std::uint64_t>(sextet(text, i, base));
    pos = 4;
  }
  if (n > 100000) throw ParseError("graph6: vertex count too large for this tool", base);
  const auto order = static_cast<int>(n);
  const std::uint64_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((pairs + 5) / 6);
  if (text.size() != expected)
    throw ParseError("graph6: expected " + std::to_string(expected) + " bytes, found " + std::to_string(text.size()),
                     base + std::min(text.size(), expected));

  Graph g(order);
  std::uint64_t k = 0;
  for (int j = 1; j < order; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      std::size_t at = pos + static_cast<std::size_t>(k / 6);
      int bit = 5 - static_cast<int>(k % 6);
      if ((sextet(text, at, base) >> bit) & 1) g.add_edge(i, j);
    }
  }
  if (pairs % 6 != 0) {
    std::size_t at = expected - 1;
    int used = static_cast<int>(pairs % 6);
    if (sextet(text, at, base) & ((1 << (6 - used)) - 1)) throw ParseError("graph6: nonzero padding bits", base + at);
  }
  return g;
}

std::string emit_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

Graph parse_edge_list(std::string_view text) {
  Tokenizer tok{text};
  long long n = 0;
  long long m = 0;
  std::size_t at = 0;
  if (!tok.next(n, at)) throw ParseError("edge list: missing header", 0);
  if (n < 0 || n > 100000) throw ParseError("edge list: bad vertex count", at);
  if (!tok.next(m, at)) throw ParseError("edge list: missing edge count", text.size());
  if (m < 0 || m > n * (n - 1) / 2) throw ParseError("edge list: bad edge count", at);
  Graph g(static_cast<int>(n));
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    std::size_t at_u = 0;
    std::size_t at_v = 0;
    if (!tok.next(u, at_u) || !tok.next(v, at_v))
      throw ParseError("edge list: expected " + std::to_string(m) + " edges", text.size());
    if (u < 0 || u >= n) throw ParseError("edge list: vertex out of range", at_u);
    if (v < 0 || v >= n) throw ParseError("edge list: vertex out of range", at_v);
    if (u == v) throw ParseError("edge list: self-loop", at_u);
    if (!g.add_edge(static_cast<int>(u), static_cast<int>(v))) throw ParseError("edge list: parallel edge", at_u);
  }
  long long extra = 0;
  if (tok.next(extra, at)) throw ParseError("edge list: trailing data", at);
  return g;
}

std::string emit_graph(const Graph& g, GraphFormat format) {
  return format == GraphFormat::graph6 ? emit_graph6(g) + "\n" : emit_edge_list(g);
}

Graph parse_graph(std::string_view text) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) return parse_edge_list(text);
  std::string_view rest = text.substr(i);
  auto nl = rest.find('\n');
  if (nl != std::string_view::npos && rest.find_first_not_of("\r\n \t", nl) != std::string_view::npos)
    throw ParseError("graph6: more than one record; use a stream reader", i + nl);
  try {
    return parse_graph6(rest.substr(0, nl));
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" at byte")), e.offset() + i);
  }
}

std::vector<Graph> parse_graph6_stream(std::string_view text) {
  std::vector<Graph> out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      try {
        out.push_back(parse_graph6(line));
      } catch (const ParseError& e) {
        throw ParseError(std::string(e.what()).substr(0, std::string(e.what()).rfind(" at byte")), e.offset() + start);
      }
    }
    start = end + 1;
  }
  return out;
}

std::string graph_hash(const Graph& g) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : emit_graph6(g)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace nonsep
