#include "cdo/gen.hpp"

#include <algorithm>

#include "cdo/rng.hpp"

namespace cdo {

namespace {

void add_block(std::vector<Edge>& edges, VertexId lo, VertexId hi, std::size_t extra,
               Dist max_weight, Rng& rng) {
  // Random spanning tree over [lo, hi), then extra random edges.
  for (VertexId v = lo + 1; v < hi; ++v) {
    VertexId p = lo + static_cast<VertexId>(rng.next_below(static_cast<std::uint64_t>(v - lo)));
    edges.push_back({p, v, rng.next_in(1, max_weight)});
  }
  VertexId span = hi - lo;
  if (span < 2) return;
  for (std::size_t i = 0; i < extra; ++i) {
    VertexId a = lo + static_cast<VertexId>(rng.next_below(static_cast<std::uint64_t>(span)));
    VertexId b = lo + static_cast<VertexId>(rng.next_below(static_cast<std::uint64_t>(span)));
    if (a == b) continue;
    edges.push_back({a, b, rng.next_in(1, max_weight)});
  }
}

Coloring random_coloring(VertexId n, ColorId sigma, Rng& rng) {
  std::vector<ColorId> colors(static_cast<std::size_t>(n));
  for (VertexId v = 0; v < n; ++v) {
    colors[static_cast<std::size_t>(v)] =
        (v < sigma) ? v : static_cast<ColorId>(rng.next_below(static_cast<std::uint64_t>(sigma)));
  }
  // Shuffle so the forced palette representatives are not clustered at the front.
  rng.shuffle(colors);
  return Coloring(sigma, std::move(colors));
}

}  // namespace

Instance random_connected_instance(VertexId n, std::size_t extra_edges, Dist max_weight,
                                   ColorId sigma, std::uint64_t seed) {
  Rng rng(splitmix64(seed));
  std::vector<Edge> edges;
  add_block(edges, 0, n, extra_edges, max_weight, rng);
  Graph g(n, std::move(edges));
  Coloring col = random_coloring(n, sigma, rng);
  return {std::move(g), std::move(col)};
}

Instance random_instance_with_components(VertexId n, int parts, std::size_t extra_edges,
                                         Dist max_weight, ColorId sigma, std::uint64_t seed) {
  Rng rng(splitmix64(seed ^ 0x5bd1e995u));
  std::vector<Edge> edges;
  VertexId per = std::max<VertexId>(1, n / std::max(1, parts));
  VertexId lo = 0;
  while (lo < n) {
    VertexId hi = std::min<VertexId>(n, lo + per);
    if (n - hi < per / 2) hi = n;  // fold a tiny remainder into the last block
    add_block(edges, lo, hi, extra_edges / static_cast<std::size_t>(std::max(1, parts)),
              max_weight, rng);
    lo = hi;
  }
  Graph g(n, std::move(edges));
  Coloring col = random_coloring(n, sigma, rng);
  return {std::move(g), std::move(col)};
}

}  // namespace cdo
