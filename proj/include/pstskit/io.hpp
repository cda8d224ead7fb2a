#pragma once

#include "pstskit/coloring.hpp"
#include "pstskit/graph.hpp"
#include "pstskit/triple_system.hpp"

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pstskit {

/// Malformed input; what() starts with "line N:" when a line is to blame.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Non-numeric labels seen while parsing, with the integers they became.
/// They get the smallest labels the file leaves unused, in order of first
/// appearance.
using SymbolMap = std::vector<std::pair<std::string, Point>>;

// Graph format:    graph <n> <m> / v <label> (n lines) / e <a> <b> (m lines)
// Triple format:   psts <u> <k> / p <label> (u lines) / t <a> <b> <c> (k lines)
// Colouring format: ecol <m> <c> / c <a> <b> <colour> (m lines), colours 1..c
// Blank lines and lines starting with '#' are ignored by the parsers.

Graph parse_graph(std::istream& in, SymbolMap* symbols = nullptr);
std::string format_graph(const Graph& g);

/// With check_packing, a pair covered twice is a parse error.
TripleSystem parse_triples(std::istream& in, SymbolMap* symbols = nullptr, bool check_packing = true);
std::string format_triples(const TripleSystem& ts);

/// Edges must be exactly those of g. The palette is 1..c.
EdgeColoring parse_coloring(std::istream& in, const Graph& g);
/// Palette entries are written as their rank 1..c.
std::string format_coloring(const EdgeColoring& c);

/// Plain key=value lines, order kept.
using Metadata = std::vector<std::pair<std::string, std::string>>;
Metadata parse_metadata(std::istream& in);
std::string format_metadata(const Metadata& m);
/// Throws ParseError when the key is absent.
const std::string& metadata_value(const Metadata& m, const std::string& key);

Graph read_graph_file(const std::string& path, SymbolMap* symbols = nullptr);
TripleSystem read_triples_file(const std::string& path, SymbolMap* symbols = nullptr, bool check_packing = true);
EdgeColoring read_coloring_file(const std::string& path, const Graph& g);
Metadata read_metadata_file(const std::string& path);
/// Throws std::runtime_error when the file cannot be written.
void write_text_file(const std::string& path, const std::string& text);

std::string format_symbols(const SymbolMap& symbols);

}  // namespace pstskit
