// Copyright 2026 The owc Authors.
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

#include "owc/graph_io.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "owc/error.hpp"

namespace owc {
namespace {

constexpr int kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

std::size_t decode_order(std::string_view s, std::size_t& pos) {
  auto sixbits = [&](std::size_t at) -> std::size_t {
    if (at >= s.size()) throw ParseError("graph6: truncated order prefix", at);
    const int c = static_cast<unsigned char>(s[at]);
    if (c < kBias || c > 126) throw ParseError("graph6: byte outside 63..126", at);
    return static_cast<std::size_t>(c - kBias);
  };
  if (s[pos] != '~') return sixbits(pos++);
  std::size_t width = 3;
  ++pos;
  if (pos < s.size() && s[pos] == '~') {
    width = 6;
    ++pos;
  }
  std::size_t n = 0;
  for (std::size_t i = 0; i < width; ++i) n = (n << 6) | sixbits(pos++);
  return n;
}

void encode_order(std::string& out, std::size_t n) {
  if (n <= 62) {
    out += static_cast<char>(n + kBias);
    return;
  }
  const std::size_t width = n <= 258047 ? 3 : 6;
  out += '~';
  if (width == 6) out += '~';
  for (std::size_t i = width; i-- > 0;) out += static_cast<char>(((n >> (6 * i)) & 63) + kBias);
}

std::string strip_comment(const std::string& line) {
  const auto hash = line.find('#');
  return hash == std::string::npos ? line : line.substr(0, hash);
}

}  // namespace

Graph graph_from_graph6(std::string_view text) {
  std::size_t pos = 0;
  if (text.substr(0, kHeader.size()) == kHeader) pos = kHeader.size();
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (pos >= text.size()) throw ParseError("graph6: empty input", pos);

  const std::size_t n = decode_order(text, pos);
  if (n == 0) throw ParseError("graph6: order 0 is not supported", 0);
  if (n > kMaxOrder) throw ParseError("graph6: order exceeds " + std::to_string(kMaxOrder), 0);

  const std::size_t bits = n * (n - 1) / 2;
  const std::size_t body_bytes = (bits + 5) / 6;
  if (text.size() - pos < body_bytes) {
    throw ParseError("graph6: body too short for order " + std::to_string(n), text.size());
  }
  if (text.size() - pos > body_bytes) {
    throw ParseError("graph6: trailing bytes after body", pos + body_bytes);
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t b = 0; b < body_bytes; ++b) {
    const std::size_t at = pos + b;
    const int c = static_cast<unsigned char>(text[at]);
    if (c < kBias || c > 126) throw ParseError("graph6: byte outside 63..126", at);
    const int value = c - kBias;
    for (int bit = 5; bit >= 0; --bit, ++k) {
      const bool set = (value >> bit) & 1;
      if (k >= bits) {
        if (set) throw ParseError("graph6: nonzero padding bits", at);
        continue;
      }
      if (set) {
        // Column-major upper triangle: k enumerates (i, j) with i < j, j ascending.
        std::size_t j = 1, base = 0;
        while (base + j <= k) base += j++;
        edges.emplace_back(static_cast<Vertex>(k - base), static_cast<Vertex>(j));
      }
    }
  }
  return Graph(n, edges);
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  encode_order(out, n);
  int acc = 0, filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out += static_cast<char>(acc + kBias);
        acc = filled = 0;
      }
    }
  }
  if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + kBias);
  return out;
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  auto next_content_line = [&](std::istringstream& fields) -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      const std::string body = strip_comment(line);
      if (body.find_first_not_of(" \t\r") == std::string::npos) continue;
      fields = std::istringstream(body);
      return true;
    }
    return false;
  };

  std::istringstream fields;
  if (!next_content_line(fields)) throw ParseError("edge list: missing header \"n m\"", std::max<std::size_t>(line_no, 1));
  long long n = -1, m = -1;
  std::string extra;
  if (!(fields >> n >> m) || (fields >> extra) || n < 1 || m < 0) {
    throw ParseError("edge list: header must be two integers \"n m\" with n >= 1", line_no);
  }
  std::vector<Edge> edges;
  for (long long e = 0; e < m; ++e) {
    if (!next_content_line(fields)) {
      throw ParseError("edge list: expected " + std::to_string(m) + " edges, found " +
                           std::to_string(e),
                       line_no);
    }
    long long u = -1, v = -1;
    if (!(fields >> u >> v) || (fields >> extra) || u < 0 || v < 0 || u >= n || v >= n) {
      throw ParseError("edge list: bad edge line", line_no);
    }
    if (u == v) throw ParseError("edge list: self-loop " + std::to_string(u), line_no);
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_content_line(fields)) throw ParseError("edge list: content after last edge", line_no);
  try {
    return Graph(static_cast<std::size_t>(n), edges);
  } catch (const GraphError& e) {
    throw ParseError(std::string("edge list: ") + e.what(), 1);
  }
}

void write_edge_list(std::ostream& out, const Graph& g) {
  const auto edges = g.edges();
  out << g.order() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
}

Graph load_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open graph file " + path.string());
  Graph g = [&] {
    if (path.extension() == ".g6") {
      std::string line;
      std::getline(in, line);
      return graph_from_graph6(line);
    }
    return read_edge_list(in);
  }();
  g.set_name(path.stem().string());
  return g;
}

}  // namespace owc
