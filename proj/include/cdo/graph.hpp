#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cdo/error.hpp"

namespace cdo {

using VertexId = std::int32_t;
using ColorId = std::int32_t;
using Dist = std::int64_t;

// Unreachable is a dedicated sentinel, never a saturating "large" value,
// so arithmetic overflow can not masquerade as a distance.
inline constexpr Dist kUnreachable = -1;

inline bool reachable(Dist d) { return d >= 0; }

struct Edge {
  VertexId u;
  VertexId v;
  Dist w;  // positive integer weight
};

// Weighted undirected multigraph. Immutable after construction; all queries
// are pure reads and safe under concurrent callers.
class Graph {
 public:
  struct Arc {
    VertexId to;
    Dist w;
  };

  Graph(VertexId n, std::vector<Edge> edges);

  VertexId n() const { return n_; }
  std::size_t m() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Arc>& adj(VertexId v) const { return adj_[static_cast<std::size_t>(v)]; }

  // Exact single-source distances; kUnreachable for other components.
  std::vector<Dist> shortest_paths(VertexId source) const;

 private:
  VertexId n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Arc>> adj_;
};

// Total color assignment from a palette of size sigma. Immutable in the
// static modules; the recolorable oracle works on its own copy.
class Coloring {
 public:
  Coloring(ColorId sigma, std::vector<ColorId> color_of);

  ColorId sigma() const { return sigma_; }
  VertexId n() const { return static_cast<VertexId>(color_of_.size()); }
  ColorId color_of(VertexId v) const { return color_of_[static_cast<std::size_t>(v)]; }
  const std::vector<ColorId>& colors() const { return color_of_; }
  // Vertices of color c, sorted ascending.
  const std::vector<VertexId>& members(ColorId c) const { return members_[static_cast<std::size_t>(c)]; }

  void recolor(VertexId v, ColorId c);

 private:
  ColorId sigma_;
  std::vector<ColorId> color_of_;
  std::vector<std::vector<VertexId>> members_;
};

struct DistResult {
  Dist distance = kUnreachable;
  std::optional<VertexId> witness;  // present iff reachable
};

// Exact nearest c-colored vertex from v; ties broken by smallest vertex id.
DistResult brute_nearest(const Graph& g, const Coloring& col, VertexId v, ColorId c);

// Connected components as disjoint sorted vertex sets.
std::vector<std::vector<VertexId>> components(const Graph& g);
std::vector<int> component_ids(const Graph& g);

// Single Dijkstra pass from a source set; per vertex the distance to the
// nearest source and that source's id (smallest id among equidistant ones).
struct MultiSourceResult {
  std::vector<Dist> dist;
  std::vector<VertexId> witness;  // -1 where unreachable
};
MultiSourceResult multi_source_shortest_paths(const Graph& g, const std::vector<VertexId>& sources);

}  // namespace cdo
