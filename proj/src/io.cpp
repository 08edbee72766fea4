#include "cdo/io.hpp"

#include <fstream>
#include <sstream>

namespace cdo {

namespace {

[[noreturn]] void fail(const std::string& name, int line, const std::string& what) {
  throw ParseError(name + ":" + std::to_string(line) + ": " + what);
}

[[noreturn]] void fail_range(const std::string& name, int line, const std::string& what) {
  throw RangeError(name + ":" + std::to_string(line) + ": " + what);
}

// Strips comments; returns false for blank lines.
bool significant(std::string& line) {
  std::size_t hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  return line.find_first_not_of(" \t\r\n") != std::string::npos;
}

}  // namespace

LoadedInstance parse_graph(std::istream& in, const std::string& name) {
  std::string line;
  int lineno = 0;
  long long n = -1, m = -1, sigma = -1;
  std::vector<Edge> edges;
  std::vector<ColorId> colors;
  std::vector<char> colored;
  long long edges_seen = 0, colors_seen = 0;

  while (std::getline(in, line)) {
    ++lineno;
    if (!significant(line)) continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "g") {
      if (n >= 0) fail(name, lineno, "duplicate header");
      if (!(ls >> n >> m >> sigma)) fail(name, lineno, "malformed header, want: g <n> <m> <sigma>");
      if (n < 1) fail_range(name, lineno, "vertex count must be >= 1");
      if (m < 0) fail_range(name, lineno, "edge count must be >= 0");
      if (sigma < 1) fail_range(name, lineno, "palette size must be >= 1");
      colors.assign(static_cast<std::size_t>(n), -1);
      colored.assign(static_cast<std::size_t>(n), 0);
    } else if (tag == "e") {
      if (n < 0) fail(name, lineno, "edge before header");
      long long u, v, w;
      if (!(ls >> u >> v >> w)) fail(name, lineno, "malformed edge, want: e <u> <v> <w>");
      if (u < 0 || u >= n || v < 0 || v >= n) fail_range(name, lineno, "edge endpoint out of range");
      if (w < 1) fail_range(name, lineno, "edge weight must be >= 1");
      edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v), w});
      ++edges_seen;
    } else if (tag == "c") {
      if (n < 0) fail(name, lineno, "color line before header");
      long long v, c;
      if (!(ls >> v >> c)) fail(name, lineno, "malformed color line, want: c <v> <color>");
      if (v < 0 || v >= n) fail_range(name, lineno, "vertex id out of range");
      if (c < 0 || c >= sigma) fail_range(name, lineno, "color id out of range");
      if (colored[static_cast<std::size_t>(v)]) fail(name, lineno, "duplicate color assignment");
      colored[static_cast<std::size_t>(v)] = 1;
      colors[static_cast<std::size_t>(v)] = static_cast<ColorId>(c);
      ++colors_seen;
    } else {
      fail(name, lineno, "unknown record '" + tag + "'");
    }
    std::string junk;
    if (ls >> junk) fail(name, lineno, "trailing tokens");
  }
  if (n < 0) fail(name, lineno, "missing header");
  if (edges_seen != m) fail(name, lineno, "header promised " + std::to_string(m) + " edges, got " +
                                              std::to_string(edges_seen));
  if (colors_seen != n) {
    fail(name, lineno, "every vertex needs a color line; got " + std::to_string(colors_seen) +
                           " of " + std::to_string(n));
  }
  Graph g(static_cast<VertexId>(n), std::move(edges));
  Coloring col(static_cast<ColorId>(sigma), std::move(colors));
  return {std::move(g), std::move(col)};
}

LoadedInstance load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  return parse_graph(in, path);
}

void write_graph(std::ostream& out, const Graph& g, const Coloring& col) {
  out << "g " << g.n() << " " << g.m() << " " << col.sigma() << "\n";
  for (const Edge& e : g.edges()) out << "e " << e.u << " " << e.v << " " << e.w << "\n";
  for (VertexId v = 0; v < g.n(); ++v) out << "c " << v << " " << col.color_of(v) << "\n";
}

void save_graph(const std::string& path, const Graph& g, const Coloring& col) {
  std::ofstream out(path);
  if (!out) throw ParseError(path + ": cannot open for writing");
  write_graph(out, g, col);
}

std::vector<WorkloadOp> parse_workload(std::istream& in, const std::string& name) {
  std::vector<WorkloadOp> ops;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!significant(line)) continue;
    std::istringstream ls(line);
    std::string tag;
    long long v, c;
    ls >> tag;
    if (tag != "q" && tag != "r") fail(name, lineno, "unknown record '" + tag + "'");
    if (!(ls >> v >> c)) fail(name, lineno, "malformed op, want: " + tag + " <v> <color>");
    if (v < 0 || c < 0) fail_range(name, lineno, "negative id");
    ops.push_back({tag[0], static_cast<VertexId>(v), static_cast<ColorId>(c)});
    std::string junk;
    if (ls >> junk) fail(name, lineno, "trailing tokens");
  }
  return ops;
}

std::vector<WorkloadOp> load_workload(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open");
  return parse_workload(in, path);
}

}  // namespace cdo
