#pragma once

#include <istream>
#include <string>
#include <vector>

#include "gel/graph.hpp"

namespace gel {

// graph6 text encoding, one graph per line: N(n) header then the upper
// triangle in column-major order, six bits per byte, each byte offset by 63.
std::string to_graph6(const Graph& g);

// Strict decoder: validates the character range, the exact line length, and
// zero padding bits; throws parse_error with the byte offset otherwise.
Graph from_graph6(const std::string& line);

// Reads one graph per line, skipping blank lines and an optional
// ">>graph6<<" header.
std::vector<Graph> read_graph6_stream(std::istream& in);

}  // namespace gel
