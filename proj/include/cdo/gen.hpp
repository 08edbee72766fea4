#pragma once

#include <cstdint>
#include <vector>

#include "cdo/graph.hpp"

namespace cdo {

// Synthetic instances for benchmarks and self-checks: a connected random
// graph (random spanning tree plus extra edges) with every color populated
// when n >= sigma.
struct Instance {
  Graph graph;
  Coloring coloring;
};

Instance random_connected_instance(VertexId n, std::size_t extra_edges, Dist max_weight,
                                   ColorId sigma, std::uint64_t seed);

// Same, but possibly disconnected: `parts` independent blocks.
Instance random_instance_with_components(VertexId n, int parts, std::size_t extra_edges,
                                         Dist max_weight, ColorId sigma, std::uint64_t seed);

}  // namespace cdo
