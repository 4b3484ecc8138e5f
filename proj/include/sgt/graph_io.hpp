#pragma once

#include <string>

#include "sgt/signed_graph.hpp"

namespace sgt {

// Text form of a signed graph.  Statements are separated by newlines or ';',
// and '#' starts a comment running to the end of the line:
//
//   v 3          # number of vertices, required before any edge
//   e 0 1 +      # positive edge
//   e 2 2 -      # negative loop
//
// Signs may be written +, -, +1, -1 or 1.  Errors carry 1-based line numbers.
SignedGraph parse_signed_graph_text(const std::string& text);
std::string signed_graph_to_text(const SignedGraph& g);

// JSON form: {"vertices": 3, "edges": [{"u": 0, "v": 1, "sign": 1}, ...]}
// with signs +1 / -1.
SignedGraph parse_signed_graph_json(const std::string& text);
std::string signed_graph_to_json(const SignedGraph& g);

// Reads a graph from a file, or from standard input when path is "-".  The
// format is sniffed: content whose first non-space character is '{' is parsed
// as JSON, anything else as text.
SignedGraph load_signed_graph(const std::string& path);

// Writes text, or JSON when the path ends in ".json".
void save_signed_graph(const std::string& path, const SignedGraph& g);

}  // namespace sgt
