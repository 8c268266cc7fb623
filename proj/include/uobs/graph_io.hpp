#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "uobs/graph.hpp"

namespace uobs {

// Plain text format:
//   # comment
//   n <N>
//   e <u> <v> <mult>      (one line per adjacent pair, sorted by (min, max))
std::string to_text(const MultiGraph& g);
MultiGraph parse_text(const std::string& text);
// Graphs separated by blank lines.
std::vector<MultiGraph> parse_text_list(const std::string& text);

// graph6 (simple graphs only). An optional ">>graph6<<" header is accepted.
std::string to_graph6(const MultiGraph& g);
MultiGraph parse_graph6(const std::string& s);

std::string read_file(const std::string& path);
// Chooses graph6 for .g6 files and the text format otherwise.
MultiGraph load_graph(const std::string& path);

}  // namespace uobs
