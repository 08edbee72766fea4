#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <unordered_map>
#include <vector>

#include "cdo/graph.hpp"

namespace cdo {

using Position = std::int64_t;  // 1-based path positions

// Smallest multiple of base^level that is >= x. At exact multiples the
// value is x itself.
Position iota_ceil(Position x, int level, int base);

// One direction of the leveled weighted path: positions 1..n (n a power of
// the base), the edge (v_x, v_{x+1}) weighing base^l for the largest l with
// base^l | x, plus prefix sums for O(1) exact distances.
struct PathLine {
  int base = 2;
  Position n = 0;
  int levels = 0;             // log_base(n)
  ColorId sigma = 0;          // queryable colors are [0, sigma)
  ColorId pad_color = 0;      // reserved id used to round n up; never queryable
  std::vector<ColorId> colors;  // index 1..n
  std::vector<Dist> prefix;     // prefix[i] = weighted distance v_1 .. v_i

  ColorId color_at(Position i) const { return colors[static_cast<std::size_t>(i)]; }
  Dist dist(Position i, Position j) const;
  // Recomputed from the divisibility rule; used to cross-check construction.
  Dist edge_weight(Position x) const;
  Dist total_weight() const { return prefix[static_cast<std::size_t>(n)]; }
};

// Hash maps at special positions: for every position x divisible by base^l,
// map color -> smallest c-colored position in [x, end(x, l)], where
// end(x, l) is the smallest multiple of base^{l+1} strictly greater than x
// (clamped to n).
class CoverMaps {
 public:
  CoverMaps() = default;
  CoverMaps(const PathLine& line);

  // Null when color c has no occurrence in the covered interval.
  std::optional<Position> lookup(Position x, int level, ColorId c) const;
  Position cover_end(Position x, int level) const;  // inclusive, clamped
  std::size_t total_entries() const { return entries_; }
  int base() const { return base_; }

 private:
  int base_ = 2;
  Position n_ = 0;
  std::vector<std::vector<std::unordered_map<ColorId, Position>>> maps_;  // [level][x / base^level - 1]
  std::size_t entries_ = 0;
};

// The full instance: the forward line plus its mirrored twin (positions
// r(i) = n + 1 - i), each with its own cover maps. The weight rule is
// palindromic on a power-of-base length, so mirrored distances agree with
// forward ones.
struct PathInstance {
  PathLine forward;
  PathLine mirrored;
  CoverMaps forward_maps;
  CoverMaps mirrored_maps;

  Position n() const { return forward.n; }
  int base() const { return forward.base; }
  Position mirror(Position i) const { return forward.n + 1 - i; }
  std::size_t total_entries() const {
    return forward_maps.total_entries() + mirrored_maps.total_entries();
  }
};

// Builds the instance from a color sequence (1-based layout is internal;
// pass plain 0-based vectors). The sequence is padded up to a power of the
// base with a fresh reserved color. base < 2 -> InvalidBase.
PathInstance build_instance(const std::vector<ColorId>& colors, int base);

enum class PathQueryMode { Fast, Exact };

inline constexpr int kDefaultWindow = 3;

// Nearest c-colored position j >= i on one line, given an estimate with
// dist <= estimate <= base * dist for that direction. Fast mode probes the
// levels around floor(log_base estimate); exact mode probes every level
// below. Raises ContractViolation when no candidate exists (the estimate
// broke its contract).
Position nearest_at_or_after(const PathLine& line, const CoverMaps& maps, Position i, ColorId c,
                             Dist estimate, PathQueryMode mode, int window = kDefaultWindow);

// Both directions combined; per-direction estimates, absent meaning "no
// c-colored node that way". Returns the position with the smaller weighted
// distance (ties to the smaller position).
Position exact_query(const PathInstance& inst, Position i, ColorId c,
                     std::optional<Dist> forward_estimate, std::optional<Dist> backward_estimate,
                     PathQueryMode mode, int window = kDefaultWindow);

// Unit-weight expansion: each weight-x edge becomes x-1 dummy vertices.
struct ExpandedPath {
  Graph graph;
  std::vector<VertexId> vertex_of_position;  // index 1..n
};
ExpandedPath expand_unweighted(const PathLine& line);

// Estimate source for rank queries: per (position, color, direction), a
// value honoring the factor-base contract, or absent if no such node.
using DirectionalEstimator = std::function<std::optional<Dist>(Position, ColorId, bool)>;

// Occurrences of symbol c in sequence[0 .. i-2] (i is a 1-based position),
// answered through one nearest-colored-position query.
std::int64_t rank_query(const std::vector<ColorId>& sequence, int base, Position i, ColorId c,
                        const DirectionalEstimator& estimator,
                        PathQueryMode mode = PathQueryMode::Exact);

}  // namespace cdo
