#pragma once

#include <string>

#include "z2lab/drawing.hpp"
#include "z2lab/graph.hpp"
#include "z2lab/scheme.hpp"

namespace z2lab {

// Graph text format:
//   g <V> <E>
//   e <id> <u> <v>     (E lines)
//   l <vertex> <label> (optional)
// '#' starts a comment.
std::string graph_to_text(const Graph& g);
Graph graph_from_text(const std::string& text);

// Scheme format: graph header, then per vertex "r <v>: <e1> <e2> ..."
// (clockwise) and per edge "s <e>: +1|-1" (default +1).
std::string scheme_to_text(const EmbeddingScheme& s);
EmbeddingScheme scheme_from_text(const std::string& text);

// Drawing format: graph header, then "h <n>", per edge "y <e>: <bitstring>",
// optional "x <e1> <e2>: 1".
std::string drawing_to_text(const CrosscapDrawing& d);
CrosscapDrawing drawing_from_text(const std::string& text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace z2lab
