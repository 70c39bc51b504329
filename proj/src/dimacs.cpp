#include "trifree/dimacs.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "trifree/error.hpp"

namespace trifree {

Graph read_dimacs(std::istream& in) {
  std::string line;
  std::uint64_t n = 0, m = 0;
  bool have_header = false;
  std::vector<Edge> edges;

  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == 'c') continue;
    std::istringstream ls(line);
    std::string kind;
    ls >> kind;
    if (kind == "p") {
      std::string format;
      if (have_header) throw Error(ErrorCode::parse_error, "duplicate header line");
      if (!(ls >> format >> n >> m) || format != "edge")
        throw Error(ErrorCode::parse_error, "malformed header at line " + std::to_string(lineno));
      have_header = true;
      edges.reserve(m);
    } else if (kind == "e") {
      if (!have_header)
        throw Error(ErrorCode::parse_error, "edge before header at line " + std::to_string(lineno));
      std::uint64_t u = 0, v = 0;
      if (!(ls >> u >> v) || u == 0 || v == 0 || u > n || v > n)
        throw Error(ErrorCode::parse_error, "malformed edge at line " + std::to_string(lineno));
      edges.push_back({Vertex(u - 1), Vertex(v - 1)});
    } else {
      throw Error(ErrorCode::parse_error, "unknown record at line " + std::to_string(lineno));
    }
  }
  if (!have_header) throw Error(ErrorCode::parse_error, "missing header line");
  if (edges.size() != m)
    throw Error(ErrorCode::parse_error, "edge count does not match header");
  return Graph::from_edges(Vertex(n), std::move(edges));
}

Graph read_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io_error, "cannot open " + path);
  return read_dimacs(in);
}

void write_dimacs(const Graph& g, std::ostream& out) {
  out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u + 1 << ' ' << e.v + 1 << '\n';
}

void write_dimacs_file(const Graph& g, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::io_error, "cannot open " + path);
  write_dimacs(g, out);
  if (!out) throw Error(ErrorCode::io_error, "write failed: " + path);
}

}  // namespace trifree
