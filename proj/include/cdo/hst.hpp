#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "cdo/graph.hpp"
#include "cdo/seq.hpp"

namespace cdo {

// Hierarchically well-separated tree: a rooted tree whose leaves are graph
// vertices, with a positive label on every internal node that strictly
// decreases leaf-ward (leaves carry 0). The induced ultrametric is
// rho(x, y) = delta(lca(leaf x, leaf y)).
class Hst {
 public:
  struct Node {
    int parent;     // self for the root
    Dist delta;     // 0 on leaves
    VertexId vertex;  // leaf payload, -1 on internal nodes
    std::vector<int> children;
  };

  // graph_n sizes the vertex -> leaf map; validate() checks the label and
  // leaf invariants and throws on violation.
  Hst(std::vector<Node> nodes, int root, VertexId graph_n);

  int root() const { return root_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  int parent(int x) const { return nodes_[static_cast<std::size_t>(x)].parent; }
  Dist delta(int x) const { return nodes_[static_cast<std::size_t>(x)].delta; }
  bool is_leaf(int x) const { return nodes_[static_cast<std::size_t>(x)].vertex >= 0; }
  VertexId vertex_at(int x) const { return nodes_[static_cast<std::size_t>(x)].vertex; }
  const std::vector<int>& children(int x) const { return nodes_[static_cast<std::size_t>(x)].children; }
  int depth(int x) const { return lca_.depth(x); }

  // -1 when the vertex is not a leaf of this tree.
  int leaf_of(VertexId v) const;
  const std::vector<VertexId>& leaf_vertices() const { return leaf_vertices_; }

  int lca(int x, int y) const { return lca_.query(x, y); }
  Dist ultra_dist(VertexId x, VertexId y) const;

  void validate() const;

 private:
  std::vector<Node> nodes_;
  int root_;
  std::vector<int> leaf_map_;            // by graph vertex id
  std::vector<VertexId> leaf_vertices_;  // vertices present, ascending
  EulerLca lca_;
};

// A family of HSTs plus a home assignment: for every vertex v, the tree
// home[v] over-estimates every distance from v by at most the distortion
// factor. Verified exhaustively during construction.
struct UltrametricCover {
  std::vector<Hst> trees;
  std::vector<int> home;     // vertex -> tree index
  double distortion;         // the verified factor D
  int k;                     // stretch parameter the acceptance threshold uses
  std::vector<int> comp_id;  // vertex -> component
  std::vector<std::vector<int>> component_trees;  // component -> tree indices
};

struct CoverBuildOptions {
  int attempt_budget = 200;  // candidate redraws per round before falling back
};

// Las-Vegas construction: repeatedly draw a randomly-shifted hierarchical
// clustering of each component, keep it if enough still-homeless vertices
// see at most D-fold distortion against all others, and assign those their
// home. Within a round, the best nonempty candidate is accepted once the
// attempt budget runs out; a round with no usable candidate at all throws
// RetryBudgetExceeded.
UltrametricCover build_cover(const Graph& g, int k, double distortion, std::uint64_t seed,
                             const CoverBuildOptions& opts = {});

// Single-tree builder used by the cover loop; exposed for tests.
Hst build_hst_candidate(const std::vector<VertexId>& comp_vertices,
                        const std::vector<std::vector<Dist>>& dist_in_comp, VertexId graph_n,
                        std::uint64_t seed);

// Per-tree nearest-colored-ancestor structure: leaves are numbered in DFS
// preorder, each color keeps an ordered set of its leaf numbers, and a query
// resolves through the predecessor/successor of the query leaf's number.
class ColoredAncestorIndex {
 public:
  ColoredAncestorIndex(const Hst* tree, ColorId sigma);

  void add(VertexId v, ColorId c);
  void remove(VertexId v, ColorId c);
  bool has_color(ColorId c) const { return !sets_[static_cast<std::size_t>(c)].empty(); }

  struct Hit {
    int node;          // nearest ancestor of v with a c-colored leaf below it
    VertexId witness;  // one such leaf
  };
  Hit nearest_colored_ancestor(VertexId v, ColorId c) const;

  int lambda(VertexId v) const;
  const OrderedKeySet& color_set(ColorId c) const { return sets_[static_cast<std::size_t>(c)]; }
  const Hst& tree() const { return *tree_; }

 private:
  const Hst* tree_;
  std::vector<int> lambda_by_vertex_;      // graph vertex -> leaf number, -1 if absent
  std::vector<VertexId> vertex_by_lambda_;
  std::vector<OrderedKeySet> sets_;        // per color
};

// The recolorable oracle over an ultrametric cover, in its two trade-off
// flavors: FastQuery keeps every vertex colored in every tree of its
// component (query reads one tree, recolor touches all of them); FastUpdate
// colors each vertex only in its home tree (recolor touches one tree, query
// scans them all).
enum class RecolorVariant { FastQuery, FastUpdate };

class RecolorableOracle {
 public:
  RecolorableOracle(const Graph& g, const Coloring& col, int k, double distortion,
                    RecolorVariant variant, std::uint64_t seed,
                    const CoverBuildOptions& opts = {});

  void recolor(VertexId v, ColorId c);

  struct Estimate {
    Dist estimate;
    VertexId witness;  // c-colored vertex with ultra-distance == estimate
  };
  Estimate query(VertexId v, ColorId c) const;

  // The scan-all query path regardless of variant (FastUpdate's procedure).
  Estimate query_all_trees(VertexId v, ColorId c) const;

  RecolorVariant variant() const { return variant_; }
  const UltrametricCover& cover() const { return cover_; }
  const Coloring& coloring() const { return coloring_; }
  const ColoredAncestorIndex& index(int tree) const { return idx_[static_cast<std::size_t>(tree)]; }

 private:
  Estimate query_home_tree(VertexId v, ColorId c) const;

  const Graph* g_;
  Coloring coloring_;
  RecolorVariant variant_;
  UltrametricCover cover_;
  std::vector<ColoredAncestorIndex> idx_;
};

}  // namespace cdo
