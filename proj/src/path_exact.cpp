#include "cdo/path_exact.hpp"

#include <algorithm>
#include <string>

namespace cdo {

namespace {

Dist ipow(int base, int exp) {
  Dist r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// largest l >= 0 with base^l <= x (x >= 1)
int floor_log(Dist x, int base) {
  int l = 0;
  Dist p = base;
  while (p <= x) {
    ++l;
    p *= base;
  }
  return l;
}

}  // namespace

Position iota_ceil(Position x, int level, int base) {
  if (x < 0 || level < 0) throw InvalidRangeError("iota arguments must be nonnegative");
  Dist p = ipow(base, level);
  return ((x + p - 1) / p) * p;
}

Dist PathLine::dist(Position i, Position j) const {
  Dist a = prefix[static_cast<std::size_t>(i)];
  Dist b = prefix[static_cast<std::size_t>(j)];
  return a < b ? b - a : a - b;
}

Dist PathLine::edge_weight(Position x) const {
  int l = 0;
  Position y = x;
  while (y % base == 0) {
    y /= base;
    ++l;
  }
  return ipow(base, l);
}

namespace {

PathLine make_line(const std::vector<ColorId>& colors, int base, ColorId sigma,
                   ColorId pad_color, bool mirrored_of_input) {
  PathLine line;
  line.base = base;
  line.sigma = sigma;
  line.pad_color = pad_color;

  Position n0 = static_cast<Position>(colors.size());
  Position n = 1;
  int levels = 0;
  while (n < n0) {
    n *= base;
    ++levels;
  }
  line.n = n;
  line.levels = levels;
  line.colors.assign(static_cast<std::size_t>(n) + 1, pad_color);
  for (Position i = 1; i <= n0; ++i) {
    ColorId c = colors[static_cast<std::size_t>(mirrored_of_input ? n0 - i : i - 1)];
    // Mirroring maps forward position p to n + 1 - p; the padding tail of
    // the forward line becomes a padding head here.
    Position at = mirrored_of_input ? (n - n0 + i) : i;
    line.colors[static_cast<std::size_t>(at)] = c;
  }
  line.prefix.assign(static_cast<std::size_t>(n) + 1, 0);
  for (Position i = 2; i <= n; ++i) {
    line.prefix[static_cast<std::size_t>(i)] =
        line.prefix[static_cast<std::size_t>(i - 1)] + line.edge_weight(i - 1);
  }
  return line;
}

}  // namespace

CoverMaps::CoverMaps(const PathLine& line) : base_(line.base), n_(line.n) {
  maps_.resize(static_cast<std::size_t>(line.levels) + 1);
  for (int l = 0; l <= line.levels; ++l) {
    Position step = ipow(base_, l);
    std::size_t count = static_cast<std::size_t>(n_ / step);
    maps_[static_cast<std::size_t>(l)].resize(count);
    for (std::size_t m = 1; m <= count; ++m) {
      Position x = static_cast<Position>(m) * step;
      Position end = cover_end(x, l);
      auto& map = maps_[static_cast<std::size_t>(l)][m - 1];
      for (Position j = x; j <= end; ++j) {
        map.emplace(line.color_at(j), j);  // keeps the first (smallest) position
      }
      entries_ += map.size();
    }
  }
}

Position CoverMaps::cover_end(Position x, int level) const {
  Dist p = ipow(base_, level + 1);
  Position end = (x / p + 1) * p;
  return std::min(end, n_);
}

std::optional<Position> CoverMaps::lookup(Position x, int level, ColorId c) const {
  if (level < 0 || static_cast<std::size_t>(level) >= maps_.size()) {
    throw InvalidRangeError("level out of range");
  }
  Position step = ipow(base_, level);
  if (x < step || x > n_ || x % step != 0) {
    throw InvalidRangeError("position " + std::to_string(x) + " is not special at level " +
                            std::to_string(level));
  }
  const auto& map = maps_[static_cast<std::size_t>(level)][static_cast<std::size_t>(x / step) - 1];
  auto it = map.find(c);
  if (it == map.end()) return std::nullopt;
  return it->second;
}

PathInstance build_instance(const std::vector<ColorId>& colors, int base) {
  if (base < 2) throw InvalidBaseError("interval base must be >= 2");
  ColorId sigma = 0;
  for (ColorId c : colors) {
    if (c < 0) throw RangeError("negative color id");
    sigma = std::max(sigma, static_cast<ColorId>(c + 1));
  }
  if (sigma == 0) sigma = 1;
  ColorId pad = sigma;  // reserved, never queryable

  PathInstance inst;
  inst.forward = make_line(colors, base, sigma, pad, false);
  inst.mirrored = make_line(colors, base, sigma, pad, true);
  inst.forward_maps = CoverMaps(inst.forward);
  inst.mirrored_maps = CoverMaps(inst.mirrored);
  return inst;
}

Position nearest_at_or_after(const PathLine& line, const CoverMaps& maps, Position i, ColorId c,
                             Dist estimate, PathQueryMode mode, int window) {
  if (i < 1 || i > line.n) throw InvalidRangeError("position out of range");
  if (c < 0 || c >= line.sigma) throw NoSuchColorError("color id out of range");
  if (line.color_at(i) == c) return i;
  if (estimate <= 0) {
    throw ContractViolationError("estimate claims distance 0 but position is not c-colored");
  }
  int l = floor_log(estimate, line.base);
  int lo = mode == PathQueryMode::Exact ? 0 : std::max(0, l - window);
  int hi = std::min(line.levels, l + 1);
  std::optional<Position> best;
  for (int lev = lo; lev <= hi; ++lev) {
    Position x = iota_ceil(i, lev, line.base);
    if (x > line.n) continue;
    std::optional<Position> j = maps.lookup(x, lev, c);
    if (j && *j >= i && (!best || *j < *best)) best = *j;
  }
  if (!best) {
    throw ContractViolationError("no candidate in the probed windows; the estimate broke "
                                 "its factor-" +
                                 std::to_string(line.base) + " contract");
  }
  return *best;
}

Position exact_query(const PathInstance& inst, Position i, ColorId c,
                     std::optional<Dist> forward_estimate, std::optional<Dist> backward_estimate,
                     PathQueryMode mode, int window) {
  if (i < 1 || i > inst.n()) throw InvalidRangeError("position out of range");
  if (c < 0 || c >= inst.forward.sigma) throw NoSuchColorError("color id out of range");
  if (inst.forward.color_at(i) == c) return i;

  std::optional<Position> fwd;
  if (forward_estimate) {
    fwd = nearest_at_or_after(inst.forward, inst.forward_maps, i, c, *forward_estimate, mode,
                              window);
  }
  std::optional<Position> bwd;
  if (backward_estimate) {
    Position mj = nearest_at_or_after(inst.mirrored, inst.mirrored_maps, inst.mirror(i), c,
                                      *backward_estimate, mode, window);
    bwd = inst.mirror(mj);
  }
  if (!fwd && !bwd) {
    throw ContractViolationError("no direction offered an estimate");
  }
  if (!fwd) return *bwd;
  if (!bwd) return *fwd;
  Dist df = inst.forward.dist(i, *fwd);
  Dist db = inst.forward.dist(*bwd, i);
  return db <= df ? *bwd : *fwd;  // ties to the smaller position (*bwd < i < *fwd)
}

ExpandedPath expand_unweighted(const PathLine& line) {
  std::vector<Edge> edges;
  VertexId next = static_cast<VertexId>(line.n);
  std::vector<VertexId> pos(static_cast<std::size_t>(line.n) + 1, -1);
  for (Position i = 1; i <= line.n; ++i) pos[static_cast<std::size_t>(i)] = static_cast<VertexId>(i - 1);
  for (Position x = 1; x < line.n; ++x) {
    Dist w = line.edge_weight(x);
    VertexId from = pos[static_cast<std::size_t>(x)];
    for (Dist step = 1; step < w; ++step) {
      edges.push_back({from, next, 1});
      from = next;
      ++next;
    }
    edges.push_back({from, pos[static_cast<std::size_t>(x + 1)], 1});
  }
  Graph g(next, std::move(edges));
  return {std::move(g), std::move(pos)};
}

std::int64_t rank_query(const std::vector<ColorId>& sequence, int base, Position i, ColorId c,
                        const DirectionalEstimator& estimator, PathQueryMode mode) {
  Position n0 = static_cast<Position>(sequence.size());
  if (i < 1 || i > n0) throw InvalidRangeError("rank position out of range");
  PathInstance inst = build_instance(sequence, base);
  if (c < 0 || c >= inst.forward.sigma) throw NoSuchColorError("color id out of range");

  // occ[j] = occurrences of the symbol at j within the prefix ending at j
  std::vector<std::int64_t> seen(static_cast<std::size_t>(inst.forward.sigma), 0);
  std::vector<std::int64_t> occ(static_cast<std::size_t>(n0) + 1, 0);
  bool present = false;
  for (Position j = 1; j <= n0; ++j) {
    ColorId cj = sequence[static_cast<std::size_t>(j - 1)];
    occ[static_cast<std::size_t>(j)] = ++seen[static_cast<std::size_t>(cj)];
    if (cj == c) present = true;
  }
  if (!present) return 0;

  std::optional<Dist> ef = estimator(i, c, false);
  std::optional<Dist> eb = estimator(i, c, true);
  Position j = exact_query(inst, i, c, ef, eb, mode);
  if (j < i) return occ[static_cast<std::size_t>(j)];
  return occ[static_cast<std::size_t>(j)] - 1;
}

}  // namespace cdo
