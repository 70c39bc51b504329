#pragma once

#include <iosfwd>
#include <string>

#include "trifree/graph.hpp"

namespace trifree {

// DIMACS-like text format: a header line "p edge <n> <m>" followed by m
// lines "e <u> <v>" with 1-based vertex ids. Comment lines start with 'c'.
// The writer emits the canonical form (edges u < v, sorted), so
// write(read(f)) == f for canonical files and read(write(g)) == g always.

Graph read_dimacs(std::istream& in);
Graph read_dimacs_file(const std::string& path);

void write_dimacs(const Graph& g, std::ostream& out);
void write_dimacs_file(const Graph& g, const std::string& path);

}  // namespace trifree
