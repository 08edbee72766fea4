#include "cdo/oumv.hpp"

#include <string>
#include <utility>

namespace cdo {

Gadget::Gadget(int n1, int n2, GadgetVariant variant, std::vector<std::vector<int>> row_cols,
               Graph graph, Coloring coloring, std::vector<std::vector<VertexId>> row_vertices)
    : n1_(n1),
      n2_(n2),
      variant_(variant),
      row_cols_(std::move(row_cols)),
      attached_(static_cast<std::size_t>(n1), 1),
      graph_(std::move(graph)),
      coloring_(std::move(coloring)),
      row_vertices_(std::move(row_vertices)) {
  rows_with_color_.assign(static_cast<std::size_t>(n2), {});
  for (int i = 0; i < n1_; ++i) {
    for (int j : row_cols_[static_cast<std::size_t>(i)]) {
      rows_with_color_[static_cast<std::size_t>(j)].push_back(i);
    }
  }
}

Gadget Gadget::build(const std::vector<std::vector<std::uint8_t>>& matrix, GadgetVariant variant) {
  int n1 = static_cast<int>(matrix.size());
  if (n1 < 1) throw DimensionError("matrix needs at least one row");
  int n2 = static_cast<int>(matrix[0].size());
  if (n2 < 1) throw DimensionError("matrix needs at least one column");
  std::vector<std::vector<int>> row_cols(static_cast<std::size_t>(n1));
  for (int i = 0; i < n1; ++i) {
    if (static_cast<int>(matrix[static_cast<std::size_t>(i)].size()) != n2) {
      throw DimensionError("ragged matrix");
    }
    for (int j = 0; j < n2; ++j) {
      if (matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
        row_cols[static_cast<std::size_t>(i)].push_back(j);
      }
    }
  }

  if (variant == GadgetVariant::Tree) {
    // Source s = 0; row i becomes a path of one c_j-colored vertex per
    // matrix one, in column order, its first vertex tied to s.
    std::vector<Edge> edges;
    std::vector<ColorId> colors{static_cast<ColorId>(n2)};  // s carries the reserved color
    std::vector<std::vector<VertexId>> row_vertices(static_cast<std::size_t>(n1));
    VertexId next = 1;
    for (int i = 0; i < n1; ++i) {
      VertexId prev = -1;
      for (int j : row_cols[static_cast<std::size_t>(i)]) {
        colors.push_back(static_cast<ColorId>(j));
        row_vertices[static_cast<std::size_t>(i)].push_back(next);
        if (prev < 0) {
          edges.push_back({0, next, 1});
        } else {
          edges.push_back({prev, next, 1});
        }
        prev = next;
        ++next;
      }
    }
    Graph g(next, std::move(edges));
    Coloring col(static_cast<ColorId>(n2 + 1), std::move(colors));
    return Gadget(n1, n2, variant, std::move(row_cols), std::move(g), std::move(col),
                  std::move(row_vertices));
  }

  // Compact: s = 0, one vertex per row (weight-2 source edges), one vertex
  // per color (unit row-color edges). A hit gives dist(s, c_j) = 2 + 1 = 3;
  // any detour through another color costs at least 2 + 1 + 1 + 1 = 5, and
  // parity rules out 4.
  std::vector<Edge> edges;
  std::vector<ColorId> colors(static_cast<std::size_t>(1 + n1 + n2),
                              static_cast<ColorId>(n2));
  std::vector<std::vector<VertexId>> row_vertices(static_cast<std::size_t>(n1));
  for (int i = 0; i < n1; ++i) {
    VertexId vi = static_cast<VertexId>(1 + i);
    row_vertices[static_cast<std::size_t>(i)] = {vi};
    edges.push_back({0, vi, 2});
    for (int j : row_cols[static_cast<std::size_t>(i)]) {
      edges.push_back({vi, static_cast<VertexId>(1 + n1 + j), 1});
    }
  }
  for (int j = 0; j < n2; ++j) {
    colors[static_cast<std::size_t>(1 + n1 + j)] = static_cast<ColorId>(j);
  }
  Graph g(static_cast<VertexId>(1 + n1 + n2), std::move(edges));
  Coloring col(static_cast<ColorId>(n2 + 1), std::move(colors));
  return Gadget(n1, n2, variant, std::move(row_cols), std::move(g), std::move(col),
                std::move(row_vertices));
}

void Gadget::check_dims(const std::vector<std::uint8_t>& u,
                        const std::vector<std::uint8_t>& v) const {
  if (static_cast<int>(u.size()) != n1_ || static_cast<int>(v.size()) != n2_) {
    throw DimensionError("vector pair is " + std::to_string(u.size()) + "/" +
                         std::to_string(v.size()) + ", expected " + std::to_string(n1_) + "/" +
                         std::to_string(n2_));
  }
}

bool Gadget::process_pair(const std::vector<std::uint8_t>& u, const std::vector<std::uint8_t>& v) {
  check_dims(u, v);
  // Decremental phase: drop the source edge of every deselected row.
  for (int i = 0; i < n1_; ++i) {
    if (!u[static_cast<std::size_t>(i)]) attached_[static_cast<std::size_t>(i)] = 0;
  }
  // The structure is a star of paths, so "a c_j-colored vertex is connected
  // to s" holds exactly when some row containing j is still attached.
  bool hit = false;
  for (int j = 0; j < n2_ && !hit; ++j) {
    if (!v[static_cast<std::size_t>(j)]) continue;
    for (int i : rows_with_color_[static_cast<std::size_t>(j)]) {
      if (attached_[static_cast<std::size_t>(i)]) {
        hit = true;
        break;
      }
    }
  }
  // Rollback, restoring the pre-call state.
  for (int i = 0; i < n1_; ++i) attached_[static_cast<std::size_t>(i)] = 1;
  return hit;
}

std::vector<Dist> Gadget::compact_color_distances(const std::vector<std::uint8_t>& u) const {
  if (variant_ != GadgetVariant::Compact) {
    throw VariantError("compact distances are only defined for the compact variant");
  }
  if (static_cast<int>(u.size()) != n1_) throw DimensionError("row selector size mismatch");
  // Rebuild the graph with only the selected source edges.
  std::vector<Edge> edges;
  for (const Edge& e : graph_.edges()) {
    if (e.u == 0 || e.v == 0) {
      VertexId row_vertex = e.u == 0 ? e.v : e.u;
      int i = static_cast<int>(row_vertex) - 1;
      if (!u[static_cast<std::size_t>(i)]) continue;
    }
    edges.push_back(e);
  }
  Graph g(graph_.n(), std::move(edges));
  std::vector<Dist> out(static_cast<std::size_t>(n2_), kUnreachable);
  for (int j = 0; j < n2_; ++j) {
    out[static_cast<std::size_t>(j)] =
        brute_nearest(g, coloring_, 0, static_cast<ColorId>(j)).distance;
  }
  return out;
}

bool Gadget::compact_distance_check(const std::vector<std::uint8_t>& u,
                                    const std::vector<std::uint8_t>& v) const {
  check_dims(u, v);
  std::vector<Dist> d = compact_color_distances(u);
  for (int j = 0; j < n2_; ++j) {
    if (v[static_cast<std::size_t>(j)] && d[static_cast<std::size_t>(j)] == 3) return true;
  }
  return false;
}

}  // namespace cdo
