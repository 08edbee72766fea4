#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "cdo/graph.hpp"
#include "cdo/seq.hpp"

namespace cdo {

// Static color distance oracle.
//
// Construction samples a nested hierarchy A_0 = V, A_1, ..., A_{k-1} (each
// level keeps a vertex of the previous one with probability sigma^{-1/k}),
// stores for every vertex its nearest member p_i(v) of each level, the gap
// array P_v[i] = dist(v, p_{i+1}(v)) - dist(v, p_i(v)) with a range-max
// index over it, and per color c a hash map over the bunch union
// B(c) = U_{v in V_c} B(v) carrying exact dist(u, c) values.
//
// query() runs a binary-search-style loop over the gap array: O(log k)
// membership tests for a 4k-5 distance estimate. query_naive() is the
// classic O(k) bunch walk with the same guarantee, kept as baseline.
//
// Sampling is per connected component; a component whose top level came out
// empty is redrawn from a derived sub-seed, so builds are deterministic in
// (graph, coloring, k, seed). Immutable after build; queries are pure.
class StaticOracle {
 public:
  static StaticOracle build(const Graph& g, const Coloring& col, int k, std::uint64_t seed);

  struct QueryResult {
    Dist estimate;
    VertexId witness_pivot;  // the pivot whose bunch entry realizes the estimate
    int iterations;          // loop iterations executed
  };

  // Listing-style loop. Requires c to have a member in v's component.
  QueryResult query(VertexId v, ColorId c) const;

  // Linear bunch walk over levels 0, 1, ...; same stretch contract.
  Dist query_naive(VertexId v, ColorId c) const;

  // Number of membership probes the naive walk performed for (v, c).
  int naive_probes(VertexId v, ColorId c) const;

  // (lower, upper) interval before the loop and after every iteration.
  struct TraceEntry {
    int lower;
    int upper;
  };
  std::vector<TraceEntry> feasibility_trace(VertexId v, ColorId c) const;

  struct SpaceReport {
    std::size_t bunch_entries;    // sum over colors of |B(c)|
    std::size_t gap_array_words;  // n * (k - 1)
  };
  SpaceReport space_report() const;

  int k() const { return k_; }
  std::uint64_t seed() const { return seed_; }
  ColorId sigma() const { return sigma_; }

  // Introspection used by tests and reports.
  int level_of(VertexId u) const { return level_of_[static_cast<std::size_t>(u)]; }
  VertexId pivot(VertexId v, int i) const;
  Dist pivot_distance(VertexId v, int i) const;
  const std::vector<Dist>& gaps(VertexId v) const { return gaps_[static_cast<std::size_t>(v)]; }
  const std::unordered_map<VertexId, Dist>& color_bunch(ColorId c) const;
  bool in_bunch(ColorId c, VertexId u) const;
  bool color_in_component(VertexId v, ColorId c) const;
  int component_of(VertexId v) const { return comp_id_[static_cast<std::size_t>(v)]; }

 private:
  StaticOracle() = default;

  QueryResult run_loop(VertexId v, ColorId c, std::vector<TraceEntry>* trace) const;
  void require_color_in_component(VertexId v, ColorId c) const;

  int k_ = 0;
  std::uint64_t seed_ = 0;
  ColorId sigma_ = 0;
  std::vector<int> comp_id_;
  std::vector<std::vector<char>> comp_has_color_;  // [component][color]
  std::vector<int> level_of_;                      // top sampled level per vertex
  std::vector<std::vector<VertexId>> pivot_id_;    // [v][0..k-1]
  std::vector<std::vector<Dist>> pivot_dist_;      // [v][0..k-1]
  std::vector<std::vector<Dist>> gaps_;            // [v][0..k-2]
  std::vector<RangeMaxIndex> gap_rmq_;             // per vertex, only built for k >= 2
  std::vector<std::unordered_map<VertexId, Dist>> color_bunch_;  // [c] -> (u -> dist(u, c))
};

}  // namespace cdo
