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

#ifndef OWC_GRAPH_IO_HPP_
#define OWC_GRAPH_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "owc/graph.hpp"

namespace owc {

// graph6: N(n) followed by the upper triangle of the adjacency matrix in
// column order (0,1),(0,2),(1,2),(0,3),... packed six bits per byte, each
// byte offset by 63. An optional ">>graph6<<" header and a trailing
// newline are accepted. Errors throw ParseError carrying a byte offset.
Graph graph_from_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

// Edge-list text: "n m" on the first line, then m lines "u v" (0-based).
// '#' starts a comment. Errors throw ParseError carrying a line number.
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// Loads by extension: .g6 (first line, graph6) or anything else as an edge
// list. The graph is named after the file stem.
Graph load_graph_file(const std::filesystem::path& path);

}  // namespace owc

#endif  // OWC_GRAPH_IO_HPP_
