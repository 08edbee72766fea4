#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cdo/graph.hpp"

namespace cdo {

// Text formats, line oriented, whitespace separated, '#' starts a comment.
//
// Graph file:
//   g <n> <m> <sigma>
//   m lines:  e <u> <v> <w>      (0-based ids, positive integer weight)
//   n lines:  c <v> <color>      (each vertex exactly once)
//
// Workload file:
//   q <v> <color>    query
//   r <v> <color>    recolor (dynamic variants only)

struct LoadedInstance {
  Graph graph;
  Coloring coloring;
};

LoadedInstance load_graph(const std::string& path);
LoadedInstance parse_graph(std::istream& in, const std::string& name);
void save_graph(const std::string& path, const Graph& g, const Coloring& col);
void write_graph(std::ostream& out, const Graph& g, const Coloring& col);

struct WorkloadOp {
  char kind;  // 'q' or 'r'
  VertexId v;
  ColorId c;
};

std::vector<WorkloadOp> load_workload(const std::string& path);
std::vector<WorkloadOp> parse_workload(std::istream& in, const std::string& name);

}  // namespace cdo
