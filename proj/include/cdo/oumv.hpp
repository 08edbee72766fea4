#pragma once

#include <cstdint>
#include <vector>

#include "cdo/graph.hpp"

namespace cdo {

// Executable form of the boolean matrix-vector reduction: a star of row
// paths hanging off a source vertex s, one colored vertex per matrix one
// (Tree), or one vertex per row plus one per color (Compact). Processing a
// vector pair detaches the source edges of deselected rows, asks whether
// any selected color is still connected to s, and rolls the detachments
// back, so repeated pairs run against identical state.
enum class GadgetVariant { Tree, Compact };

class Gadget {
 public:
  static Gadget build(const std::vector<std::vector<std::uint8_t>>& matrix,
                      GadgetVariant variant);

  // u^T M v as a boolean, via detach / color-connectivity / rollback.
  bool process_pair(const std::vector<std::uint8_t>& u, const std::vector<std::uint8_t>& v);

  // Compact undirected form only: decide the product through the distance
  // gap from s (exactly 3 on a hit, at least 5 otherwise), evaluated with
  // brute_nearest on the materialized weighted graph.
  bool compact_distance_check(const std::vector<std::uint8_t>& u,
                              const std::vector<std::uint8_t>& v) const;

  // Distances dist(s, c_j) in the compact graph with rows attached per u;
  // exposed so the 3-vs-5 gap can be audited directly.
  std::vector<Dist> compact_color_distances(const std::vector<std::uint8_t>& u) const;

  int rows() const { return n1_; }
  int cols() const { return n2_; }
  GadgetVariant variant() const { return variant_; }
  VertexId source() const { return 0; }
  bool attached(int row) const { return attached_[static_cast<std::size_t>(row)] != 0; }
  const std::vector<int>& row_columns(int row) const {
    return row_cols_[static_cast<std::size_t>(row)];
  }

  // Materialized graph + coloring (tree: the star of paths; compact: the
  // weighted 3-vs-5 graph with all source edges present). Row/source
  // vertices in the compact form carry a reserved color id n2.
  const Graph& graph() const { return graph_; }
  const Coloring& coloring() const { return coloring_; }
  // Tree variant: vertex ids of row i's path in column order.
  const std::vector<VertexId>& row_path(int row) const {
    return row_vertices_[static_cast<std::size_t>(row)];
  }

  // Full mutable state, for before/after rollback comparisons.
  std::vector<std::uint8_t> state_snapshot() const {
    return {attached_.begin(), attached_.end()};
  }

 private:
  Gadget(int n1, int n2, GadgetVariant variant, std::vector<std::vector<int>> row_cols,
         Graph graph, Coloring coloring, std::vector<std::vector<VertexId>> row_vertices);

  void check_dims(const std::vector<std::uint8_t>& u, const std::vector<std::uint8_t>& v) const;

  int n1_;
  int n2_;
  GadgetVariant variant_;
  std::vector<std::vector<int>> row_cols_;        // M[i] as sorted column ids
  std::vector<std::vector<int>> rows_with_color_; // color -> rows containing it
  std::vector<std::uint8_t> attached_;            // source edge present per row
  Graph graph_;
  Coloring coloring_;
  std::vector<std::vector<VertexId>> row_vertices_;
};

}  // namespace cdo
