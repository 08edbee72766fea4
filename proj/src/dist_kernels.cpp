#include "cdo/dist_kernels.hpp"

namespace cdo {

std::vector<std::vector<Dist>> all_pairs_distances_serial(const Graph& g) {
  std::size_t n = static_cast<std::size_t>(g.n());
  std::vector<std::vector<Dist>> table(n);
  for (std::size_t v = 0; v < n; ++v) {
    table[v] = g.shortest_paths(static_cast<VertexId>(v));
  }
  return table;
}

std::vector<std::vector<Dist>> all_pairs_distances(const Graph& g) {
  std::size_t n = static_cast<std::size_t>(g.n());
  std::vector<std::vector<Dist>> table(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v) {
    table[static_cast<std::size_t>(v)] = g.shortest_paths(static_cast<VertexId>(v));
  }
  return table;
}

std::vector<std::vector<Dist>> all_color_distances_serial(const Graph& g, const Coloring& col) {
  std::size_t n = static_cast<std::size_t>(g.n());
  std::size_t sigma = static_cast<std::size_t>(col.sigma());
  std::vector<std::vector<Dist>> table(n, std::vector<Dist>(sigma, kUnreachable));
  for (std::size_t c = 0; c < sigma; ++c) {
    const auto& vc = col.members(static_cast<ColorId>(c));
    if (vc.empty()) continue;
    MultiSourceResult ms = multi_source_shortest_paths(g, vc);
    for (std::size_t v = 0; v < n; ++v) table[v][c] = ms.dist[v];
  }
  return table;
}

std::vector<std::vector<Dist>> all_color_distances(const Graph& g, const Coloring& col) {
  std::size_t n = static_cast<std::size_t>(g.n());
  std::size_t sigma = static_cast<std::size_t>(col.sigma());
  std::vector<std::vector<Dist>> table(n, std::vector<Dist>(sigma, kUnreachable));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(sigma); ++c) {
    const auto& vc = col.members(static_cast<ColorId>(c));
    if (vc.empty()) continue;
    MultiSourceResult ms = multi_source_shortest_paths(g, vc);
    for (std::size_t v = 0; v < n; ++v) table[v][static_cast<std::size_t>(c)] = ms.dist[v];
  }
  return table;
}

ColorTable all_color_distances_with_witness(const Graph& g, const Coloring& col) {
  std::size_t n = static_cast<std::size_t>(g.n());
  std::size_t sigma = static_cast<std::size_t>(col.sigma());
  ColorTable t;
  t.dist.assign(n, std::vector<Dist>(sigma, kUnreachable));
  t.witness.assign(n, std::vector<VertexId>(sigma, -1));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(sigma); ++c) {
    const auto& vc = col.members(static_cast<ColorId>(c));
    if (vc.empty()) continue;
    MultiSourceResult ms = multi_source_shortest_paths(g, vc);
    for (std::size_t v = 0; v < n; ++v) {
      t.dist[v][static_cast<std::size_t>(c)] = ms.dist[v];
      t.witness[v][static_cast<std::size_t>(c)] = ms.witness[v];
    }
  }
  return t;
}

}  // namespace cdo
