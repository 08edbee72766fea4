#include "cdo/hst.hpp"

#include <cmath>

#include "cdo/dist_kernels.hpp"
#include "cdo/gen.hpp"
#include "cdo/rng.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cdo;

namespace {

// Ultrametric value recomputed without the Euler-tour machinery.
Dist walk_ultra(const Hst& t, VertexId x, VertexId y) {
  std::vector<int> parent(static_cast<std::size_t>(t.node_count()));
  for (int i = 0; i < t.node_count(); ++i) parent[static_cast<std::size_t>(i)] = t.parent(i);
  return t.delta(oracles::walk_lca(parent, t.leaf_of(x), t.leaf_of(y)));
}

Coloring random_coloring(VertexId n, ColorId sigma, Rng& rng) {
  std::vector<ColorId> colors(static_cast<std::size_t>(n));
  for (auto& c : colors) c = static_cast<ColorId>(rng.next_below(static_cast<std::uint64_t>(sigma)));
  return Coloring(sigma, std::move(colors));
}

}  // namespace

TEST_CASE("ultra distance on a hand-built tree") {
  // root Delta=2 over { leaf z, inner Delta=1 over {x, y} }
  std::vector<Hst::Node> nodes{
      {0, 2, -1, {1, 2}},  // root
      {0, 0, 2, {}},       // leaf z (vertex 2)
      {0, 1, -1, {3, 4}},  // inner
      {2, 0, 0, {}},       // leaf x (vertex 0)
      {2, 0, 1, {}},       // leaf y (vertex 1)
  };
  Hst t(std::move(nodes), 0, 3);
  t.validate();
  CHECK(t.ultra_dist(0, 1) == 1);
  CHECK(t.ultra_dist(0, 2) == 2);
  CHECK(t.ultra_dist(1, 2) == 2);
  CHECK(t.ultra_dist(0, 0) == 0);
}

TEST_CASE("random HSTs satisfy the strong triangle inequality") {
  Rng rng(5150);
  for (int trial = 0; trial < 25; ++trial) {
    VertexId n = 2 + static_cast<VertexId>(rng.next_below(39));
    Hst t = oracles::random_hst(n, rng);
    t.validate();
    for (VertexId x = 0; x < n; ++x) {
      for (VertexId y = 0; y < n; ++y) {
        CHECK(t.ultra_dist(x, y) == t.ultra_dist(y, x));
        for (VertexId z = 0; z < n; ++z) {
          CHECK(t.ultra_dist(x, z) <=
                std::max(t.ultra_dist(x, y), t.ultra_dist(y, z)));
        }
      }
    }
  }
}

TEST_CASE("candidate trees: singleton and two-point metrics") {
  Hst single = build_hst_candidate({4}, {{0}}, 6, 9);
  single.validate();
  CHECK(single.leaf_vertices() == std::vector<VertexId>{4});
  CHECK(single.ultra_dist(4, 4) == 0);

  // two vertices at distance 5: one root labeled with the diameter
  Hst pair = build_hst_candidate({0, 1}, {{0, 5}, {5, 0}}, 2, 13);
  pair.validate();
  CHECK(pair.delta(pair.root()) == 5);
  CHECK(pair.ultra_dist(0, 1) == 5);
}

TEST_CASE("candidate trees dominate the metric") {
  Rng rng(88);
  for (int trial = 0; trial < 6; ++trial) {
    Instance inst = random_connected_instance(40, 80, 25, 4, 300 + trial);
    auto table = all_pairs_distances(inst.graph);
    std::vector<VertexId> verts(40);
    for (VertexId v = 0; v < 40; ++v) verts[static_cast<std::size_t>(v)] = v;
    Hst t = build_hst_candidate(verts, table, 40, rng.next_u64());
    t.validate();
    for (VertexId x = 0; x < 40; ++x) {
      for (VertexId y = x + 1; y < 40; ++y) {
        CHECK(t.ultra_dist(x, y) >=
              table[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]);
      }
    }
  }
}

TEST_CASE("cover on trivial graphs") {
  SUBCASE("single vertex") {
    Graph g(1, {});
    UltrametricCover cover = build_cover(g, 2, 256, 1);
    CHECK(cover.trees.size() == 1);
    CHECK(cover.home[0] == 0);
  }
  SUBCASE("two vertices at distance 5") {
    Graph g(2, {{0, 1, 5}});
    UltrametricCover cover = build_cover(g, 2, 2, 1);
    CHECK(cover.trees.size() == 1);
    CHECK(cover.trees[0].delta(cover.trees[0].root()) == 5);
    CHECK(cover.trees[0].ultra_dist(0, 1) == 5);
  }
}

TEST_CASE("cover rejects a distortion below one") {
  Graph g(2, {{0, 1, 5}});
  CHECK_THROWS_AS(build_cover(g, 2, 0.5, 1), InvalidDistortionError);
}

TEST_CASE("cover home guarantee, verified independently of the builder") {
  const int k = 2;
  const double distortion = 128.0 * k;
  Instance inst = random_connected_instance(100, 250, 40, 8, 424);
  UltrametricCover cover = build_cover(inst.graph, k, distortion, 11);
  auto table = all_pairs_distances_serial(inst.graph);
  for (const Hst& t : cover.trees) t.validate();
  for (VertexId v = 0; v < 100; ++v) {
    const Hst& home = cover.trees[static_cast<std::size_t>(cover.home[static_cast<std::size_t>(v)])];
    for (VertexId u = 0; u < 100; ++u) {
      if (u == v) continue;
      Dist rho = walk_ultra(home, v, u);
      Dist d = table[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
      CHECK(rho >= d);
      CHECK(static_cast<double>(rho) <= distortion * static_cast<double>(d));
    }
  }
  // every tree spans its component, every vertex has a home
  CHECK(cover.component_trees.size() == 1);
  for (const Hst& t : cover.trees) CHECK(t.leaf_vertices().size() == 100);
}

TEST_CASE("cover of a disconnected graph builds per component") {
  Instance inst = random_instance_with_components(40, 2, 30, 10, 4, 77);
  UltrametricCover cover = build_cover(inst.graph, 2, 64, 5);
  auto comps = components(inst.graph);
  REQUIRE(cover.component_trees.size() == comps.size());
  for (std::size_t ci = 0; ci < comps.size(); ++ci) {
    for (int ti : cover.component_trees[ci]) {
      CHECK(cover.trees[static_cast<std::size_t>(ti)].leaf_vertices() == comps[ci]);
    }
  }
  for (VertexId v = 0; v < inst.graph.n(); ++v) {
    int home = cover.home[static_cast<std::size_t>(v)];
    CHECK(cover.trees[static_cast<std::size_t>(home)].leaf_of(v) >= 0);
  }
}

TEST_CASE("nearest colored ancestor: basics on a star") {
  // root over n leaves
  const VertexId n = 6;
  std::vector<Hst::Node> nodes;
  nodes.push_back({0, 3, -1, {}});
  for (VertexId v = 0; v < n; ++v) {
    nodes.push_back({0, 0, v, {}});
    nodes[0].children.push_back(static_cast<int>(v) + 1);
  }
  Hst t(std::move(nodes), 0, n);
  ColoredAncestorIndex idx(&t, 3);
  for (VertexId v = 0; v < n; ++v) idx.add(v, v == 4 ? 1 : 0);

  SUBCASE("self-colored leaf") {
    auto hit = idx.nearest_colored_ancestor(4, 1);
    CHECK(hit.node == t.leaf_of(4));
    CHECK(hit.witness == 4);
  }
  SUBCASE("color on exactly one other leaf resolves to the root") {
    auto hit = idx.nearest_colored_ancestor(0, 1);
    CHECK(hit.node == t.root());
    CHECK(hit.witness == 4);
  }
  SUBCASE("missing color") {
    CHECK_THROWS_AS(idx.nearest_colored_ancestor(0, 2), NoSuchColorInTreeError);
  }
}

TEST_CASE("nearest colored ancestor equals the ancestor walk on random trees") {
  Rng rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    VertexId n = 2 + static_cast<VertexId>(rng.next_below(63));
    ColorId sigma = 2 + static_cast<ColorId>(rng.next_below(5));
    Hst t = oracles::random_hst(n, rng);
    std::vector<ColorId> colors(static_cast<std::size_t>(n));
    for (auto& c : colors) c = static_cast<ColorId>(rng.next_below(static_cast<std::uint64_t>(sigma)));
    ColoredAncestorIndex idx(&t, sigma);
    for (VertexId v = 0; v < n; ++v) idx.add(v, colors[static_cast<std::size_t>(v)]);

    auto check_all = [&]() {
      for (VertexId v = 0; v < n; ++v) {
        for (ColorId c = 0; c < sigma; ++c) {
          int want = oracles::walk_colored_ancestor(t, colors, v, c);
          if (want < 0) {
            CHECK_THROWS_AS(idx.nearest_colored_ancestor(v, c), NoSuchColorInTreeError);
            continue;
          }
          auto hit = idx.nearest_colored_ancestor(v, c);
          CHECK(hit.node == want);
          CHECK(colors[static_cast<std::size_t>(hit.witness)] == c);
          // the witness hangs below the reported ancestor
          CHECK(t.lca(t.leaf_of(hit.witness), t.leaf_of(v)) == hit.node);
        }
      }
    };
    check_all();
    // interleave recolors and re-check
    for (int r = 0; r < 10; ++r) {
      VertexId v = static_cast<VertexId>(rng.next_below(static_cast<std::uint64_t>(n)));
      ColorId c = static_cast<ColorId>(rng.next_below(static_cast<std::uint64_t>(sigma)));
      idx.remove(v, colors[static_cast<std::size_t>(v)]);
      idx.add(v, c);
      colors[static_cast<std::size_t>(v)] = c;
    }
    check_all();
  }
}

TEST_CASE("recolorable oracle: recolor then query the new color is zero") {
  Instance inst = random_connected_instance(30, 60, 10, 4, 15);
  for (RecolorVariant variant : {RecolorVariant::FastQuery, RecolorVariant::FastUpdate}) {
    RecolorableOracle o(inst.graph, inst.coloring, 2, 256, variant, 3);
    o.recolor(7, 2);
    auto e = o.query(7, 2);
    CHECK(e.estimate == 0);
    CHECK(e.witness == 7);
  }
}

TEST_CASE("recolorable oracle: same-color recolor leaves the index unchanged") {
  Instance inst = random_connected_instance(24, 40, 8, 4, 19);
  RecolorableOracle o(inst.graph, inst.coloring, 2, 256, RecolorVariant::FastQuery, 9);
  ColorId c = inst.coloring.color_of(5);
  std::vector<std::vector<int>> before;
  for (std::size_t ti = 0; ti < o.cover().trees.size(); ++ti) {
    for (ColorId cc = 0; cc < 4; ++cc) before.push_back(o.index(static_cast<int>(ti)).color_set(cc).to_sorted_vector());
  }
  o.recolor(5, c);
  std::size_t at = 0;
  for (std::size_t ti = 0; ti < o.cover().trees.size(); ++ti) {
    for (ColorId cc = 0; cc < 4; ++cc) {
      CHECK(o.index(static_cast<int>(ti)).color_set(cc).to_sorted_vector() == before[at++]);
    }
  }
}

TEST_CASE("recolorable oracle: key sets equal a rebuild from scratch") {
  Instance inst = random_connected_instance(40, 90, 12, 5, 23);
  Rng rng(4242);
  for (RecolorVariant variant : {RecolorVariant::FastQuery, RecolorVariant::FastUpdate}) {
    RecolorableOracle live(inst.graph, inst.coloring, 2, 256, variant, 77);
    Coloring current = inst.coloring;
    for (int step = 0; step < 120; ++step) {
      VertexId v = static_cast<VertexId>(rng.next_below(40));
      ColorId c = static_cast<ColorId>(rng.next_below(5));
      live.recolor(v, c);
      current.recolor(v, c);
    }
    RecolorableOracle fresh(inst.graph, current, 2, 256, variant, 77);
    REQUIRE(live.cover().trees.size() == fresh.cover().trees.size());
    for (std::size_t ti = 0; ti < live.cover().trees.size(); ++ti) {
      for (ColorId c = 0; c < 5; ++c) {
        CHECK(live.index(static_cast<int>(ti)).color_set(c).to_sorted_vector() ==
              fresh.index(static_cast<int>(ti)).color_set(c).to_sorted_vector());
      }
    }
  }
}

TEST_CASE("fast-update recolors touch only the home tree") {
  Instance inst = random_connected_instance(36, 80, 9, 4, 29);
  RecolorableOracle o(inst.graph, inst.coloring, 2, 256, RecolorVariant::FastUpdate, 31);
  VertexId v = 11;
  int home = o.cover().home[static_cast<std::size_t>(v)];
  std::vector<std::vector<int>> others_before;
  for (std::size_t ti = 0; ti < o.cover().trees.size(); ++ti) {
    if (static_cast<int>(ti) == home) continue;
    for (ColorId c = 0; c < 4; ++c) {
      others_before.push_back(o.index(static_cast<int>(ti)).color_set(c).to_sorted_vector());
    }
  }
  o.recolor(v, (inst.coloring.color_of(v) + 1) % 4);
  std::size_t at = 0;
  for (std::size_t ti = 0; ti < o.cover().trees.size(); ++ti) {
    if (static_cast<int>(ti) == home) continue;
    for (ColorId c = 0; c < 4; ++c) {
      CHECK(o.index(static_cast<int>(ti)).color_set(c).to_sorted_vector() == others_before[at++]);
    }
  }
}

TEST_CASE("query sandwich under recolors, both variants") {
  const int k = 2;
  const double distortion = 128.0 * k;
  Instance inst = random_connected_instance(60, 140, 20, 6, 37);
  for (RecolorVariant variant : {RecolorVariant::FastQuery, RecolorVariant::FastUpdate}) {
    RecolorableOracle o(inst.graph, inst.coloring, k, distortion, variant, 5);
    Coloring current = inst.coloring;
    Rng rng(variant == RecolorVariant::FastQuery ? 1u : 2u);
    for (int step = 0; step < 200; ++step) {
      VertexId v = static_cast<VertexId>(rng.next_below(60));
      ColorId c = static_cast<ColorId>(rng.next_below(6));
      o.recolor(v, c);
      current.recolor(v, c);
    }
    auto truth = all_color_distances(inst.graph, current);
    for (VertexId v = 0; v < 60; ++v) {
      for (ColorId c = 0; c < 6; ++c) {
        Dist exact = truth[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)];
        if (!reachable(exact)) {
          CHECK_THROWS_AS(o.query(v, c), NoSuchColorError);
          continue;
        }
        auto e = o.query(v, c);
        CHECK(e.estimate >= exact);
        CHECK(static_cast<double>(e.estimate) <= distortion * static_cast<double>(exact));
        // the witness certifies the estimate inside some tree of the cover
        CHECK(current.color_of(e.witness) == c);
      }
    }
  }
}

TEST_CASE("single-tree cover makes the two variants coincide") {
  Graph g(2, {{0, 1, 5}});
  Coloring col(2, {0, 1});
  RecolorableOracle fq(g, col, 2, 4, RecolorVariant::FastQuery, 1);
  RecolorableOracle fu(g, col, 2, 4, RecolorVariant::FastUpdate, 1);
  REQUIRE(fq.cover().trees.size() == 1);
  REQUIRE(fu.cover().trees.size() == 1);
  for (VertexId v = 0; v < 2; ++v) {
    for (ColorId c = 0; c < 2; ++c) {
      CHECK(fq.query(v, c).estimate == fu.query(v, c).estimate);
    }
  }
  CHECK(fq.query(0, 1).estimate == 5);  // root delta bounds the pair
}

TEST_CASE("scan-all estimate never beats the home tree under full coloring") {
  Instance inst = random_connected_instance(50, 110, 15, 5, 41);
  RecolorableOracle o(inst.graph, inst.coloring, 2, 256, RecolorVariant::FastQuery, 13);
  for (VertexId v = 0; v < 50; ++v) {
    for (ColorId c = 0; c < 5; ++c) {
      CHECK(o.query_all_trees(v, c).estimate <= o.query(v, c).estimate);
    }
  }
}

TEST_CASE("recolorable oracle rejects bad arguments") {
  Graph g(2, {{0, 1, 3}});
  Coloring col(2, {0, 1});
  RecolorableOracle o(g, col, 2, 8, RecolorVariant::FastQuery, 1);
  CHECK_THROWS_AS(o.recolor(5, 0), InvalidVertexError);
  CHECK_THROWS_AS(o.recolor(0, 7), RangeError);
  CHECK_THROWS_AS(o.query(0, 7), NoSuchColorError);
}
