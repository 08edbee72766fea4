#pragma once

#include <vector>

#include "cdo/graph.hpp"

namespace cdo {

// Exact distance tables. Each kernel comes in two forms: a serial reference
// and an OpenMP-parallel version that must produce identical output. Tests
// assert the equality; the benchmark tool compares their wall times.

// table[v][u] = dist(v, u), kUnreachable across components.
std::vector<std::vector<Dist>> all_pairs_distances_serial(const Graph& g);
std::vector<std::vector<Dist>> all_pairs_distances(const Graph& g);

// table[v][c] = dist(v, c); one multi-source pass per color. Empty colors
// yield an all-unreachable column.
std::vector<std::vector<Dist>> all_color_distances_serial(const Graph& g, const Coloring& col);
std::vector<std::vector<Dist>> all_color_distances(const Graph& g, const Coloring& col);

// As above but also carrying the nearest member id (smallest on ties).
struct ColorTable {
  std::vector<std::vector<Dist>> dist;        // [v][c]
  std::vector<std::vector<VertexId>> witness; // [v][c], -1 where unreachable
};
ColorTable all_color_distances_with_witness(const Graph& g, const Coloring& col);

}  // namespace cdo
