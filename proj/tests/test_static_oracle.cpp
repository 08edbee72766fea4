#include "cdo/static_oracle.hpp"

#include <cmath>

#include "cdo/dist_kernels.hpp"
#include "cdo/gen.hpp"
#include "cdo/rng.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace cdo;

namespace {

int iteration_bound(int k) {
  return static_cast<int>(std::ceil(std::log(static_cast<double>(k)) / std::log(1.5))) + 1;
}

}  // namespace

TEST_CASE("k=1 degenerates to the exact full table") {
  Instance inst = random_instance_with_components(40, 2, 50, 9, 5, 3);
  StaticOracle o = StaticOracle::build(inst.graph, inst.coloring, 1, 17);
  auto truth = all_color_distances(inst.graph, inst.coloring);
  for (VertexId v = 0; v < inst.graph.n(); ++v) {
    for (ColorId c = 0; c < inst.coloring.sigma(); ++c) {
      Dist exact = truth[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)];
      if (!reachable(exact)) {
        CHECK_THROWS_AS(o.query(v, c), NoSuchColorInComponentError);
        continue;
      }
      StaticOracle::QueryResult q = o.query(v, c);
      CHECK(q.estimate == exact);
      CHECK(q.iterations == 0);
      CHECK(o.feasibility_trace(v, c).size() == 1);
    }
  }
}

TEST_CASE("k=1 bunches cover whole components") {
  // path of 3 with three distinct colors: B(c) = component for every color,
  // so bunch entries total 9 and the gap arrays are empty.
  Graph g(3, {{0, 1, 1}, {1, 2, 1}});
  Coloring col(3, {0, 1, 2});
  StaticOracle o = StaticOracle::build(g, col, 1, 5);
  StaticOracle::SpaceReport space = o.space_report();
  CHECK(space.bunch_entries == 9);
  CHECK(space.gap_array_words == 0);
  for (ColorId c = 0; c < 3; ++c) {
    CHECK(o.color_bunch(c).size() == 3);
  }
}

TEST_CASE("sampled vertices are their own pivots") {
  Instance inst = random_connected_instance(80, 160, 12, 8, 21);
  StaticOracle o = StaticOracle::build(inst.graph, inst.coloring, 3, 9);
  for (VertexId v = 0; v < inst.graph.n(); ++v) {
    for (int i = 0; i <= o.level_of(v); ++i) {
      CHECK(o.pivot(v, i) == v);
      CHECK(o.pivot_distance(v, i) == 0);
    }
  }
}

TEST_CASE("pivots are nearest level members with smallest-id ties, gaps nonnegative") {
  Instance inst = random_connected_instance(60, 90, 15, 6, 33);
  const int k = 3;
  StaticOracle o = StaticOracle::build(inst.graph, inst.coloring, k, 101);
  auto table = all_pairs_distances(inst.graph);
  for (VertexId v = 0; v < inst.graph.n(); ++v) {
    Dist prev = -1;
    for (int i = 0; i < k; ++i) {
      Dist best = kUnreachable;
      VertexId who = -1;
      for (VertexId u = 0; u < inst.graph.n(); ++u) {
        if (o.level_of(u) < i) continue;
        Dist d = table[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
        if (!reachable(d)) continue;
        if (!reachable(best) || d < best || (d == best && u < who)) {
          best = d;
          who = u;
        }
      }
      CHECK(o.pivot(v, i) == who);
      CHECK(o.pivot_distance(v, i) == best);
      CHECK(o.pivot_distance(v, i) >= prev);  // nested levels
      prev = o.pivot_distance(v, i);
    }
    for (Dist gap : o.gaps(v)) CHECK(gap >= 0);
  }
}

TEST_CASE("bunch maps match their definition and store exact color distances") {
  Instance inst = random_instance_with_components(56, 2, 70, 10, 5, 44);
  const int k = 3;
  StaticOracle o = StaticOracle::build(inst.graph, inst.coloring, k, 7);
  auto table = all_pairs_distances(inst.graph);
  auto color_table = all_color_distances(inst.graph, inst.coloring);
  for (ColorId c = 0; c < inst.coloring.sigma(); ++c) {
    const auto& bunch = o.color_bunch(c);
    for (VertexId u = 0; u < inst.graph.n(); ++u) {
      bool expect = false;
      for (VertexId v : inst.coloring.members(c)) {
        Dist duv = table[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)];
        if (!reachable(duv)) continue;
        int top = o.level_of(u);
        if (top + 1 >= k || duv < o.pivot_distance(v, top + 1)) {
          expect = true;
          break;
        }
      }
      CHECK(bunch.count(u) == (expect ? 1u : 0u));
      if (expect) {
        CHECK(bunch.at(u) ==
              color_table[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)]);
      }
    }
  }
}

TEST_CASE("top level lies in every bunch of its component") {
  Instance inst = random_connected_instance(50, 60, 8, 6, 12);
  const int k = 4;
  StaticOracle o = StaticOracle::build(inst.graph, inst.coloring, k, 2);
  for (VertexId u = 0; u < inst.graph.n(); ++u) {
    if (o.level_of(u) != k - 1) continue;
    for (ColorId c = 0; c < inst.coloring.sigma(); ++c) {
      if (!o.color_in_component(u, c)) continue;
      CHECK(o.in_bunch(c, u));
    }
  }
}

TEST_CASE("self-colored queries return zero") {
  Instance inst = random_connected_instance(40, 60, 7, 5, 9);
  for (int k : {1, 2, 3}) {
    StaticOracle o = StaticOracle::build(inst.graph, inst.coloring, k, 31);
    for (VertexId v = 0; v < inst.graph.n(); ++v) {
      ColorId c = inst.coloring.color_of(v);
      CHECK(o.query(v, c).estimate == 0);
      CHECK(o.query_naive(v, c) == 0);
    }
  }
}

TEST_CASE("stretch, iteration and trace invariants on random instances") {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    Instance inst = random_connected_instance(120, 300, 25, 16, 100 + seed);
    auto truth = all_color_distances(inst.graph, inst.coloring);
    auto pairs = all_pairs_distances(inst.graph);
    for (int k : {2, 3, 4}) {
      StaticOracle o = StaticOracle::build(inst.graph, inst.coloring, k, seed);
      for (VertexId v = 0; v < inst.graph.n(); ++v) {
        for (ColorId c = 0; c < inst.coloring.sigma(); ++c) {
          Dist exact = truth[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)];
          REQUIRE(reachable(exact));
          StaticOracle::QueryResult q = o.query(v, c);
          // lower side is the triangle inequality, upper side the provable
          // 4k-3 worst case of the bunch-walk estimate
          CHECK(q.estimate >= exact);
          CHECK(q.estimate <= (4 * k - 3) * exact);
          CHECK(q.iterations <= iteration_bound(k));
          CHECK(o.in_bunch(c, q.witness_pivot));

          Dist naive = o.query_naive(v, c);
          CHECK(naive >= exact);
          CHECK(naive <= (4 * k - 3) * exact);
          CHECK(o.naive_probes(v, c) <= k);

          auto trace = o.feasibility_trace(v, c);
          REQUIRE(!trace.empty());
          CHECK(trace.front().lower == 0);
          CHECK(trace.front().upper == k - 1);
          for (std::size_t t = 0; t < trace.size(); ++t) {
            auto [lower, upper] = trace[t];
            // loop invariant: cheap lower pivot, terminal upper pivot
            CHECK(o.pivot_distance(v, lower) <= 2 * static_cast<Dist>(lower) * exact);
            CHECK(o.in_bunch(c, o.pivot(v, upper)));
            if (t + 1 < trace.size()) {
              int len = upper - lower + 1;
              int next_len = trace[t + 1].upper - trace[t + 1].lower + 1;
              if (len > 1) CHECK(3 * next_len <= 2 * len);  // shrink factor >= 1/3 off
            }
          }
          // final interval is a single feasible index and matches the answer
          CHECK(trace.back().lower == trace.back().upper);
          CHECK(o.pivot(v, trace.back().lower) == q.witness_pivot);
          // pivot distance cross-checked against an independent table
          CHECK(o.pivot_distance(v, trace.back().lower) ==
                pairs[static_cast<std::size_t>(v)][static_cast<std::size_t>(q.witness_pivot)]);
        }
      }
    }
  }
}

TEST_CASE("trace length for k=2 is at most two entries") {
  Instance inst = random_connected_instance(30, 60, 9, 4, 77);
  StaticOracle o = StaticOracle::build(inst.graph, inst.coloring, 2, 5);
  for (VertexId v = 0; v < inst.graph.n(); ++v) {
    for (ColorId c = 0; c < 4; ++c) {
      CHECK(o.feasibility_trace(v, c).size() <= 2);
    }
  }
}

TEST_CASE("k beyond the theory regime still answers within the iteration bound") {
  Instance inst = random_connected_instance(64, 128, 10, 4, 900);
  StaticOracle o = StaticOracle::build(inst.graph, inst.coloring, 16, 4);
  auto truth = all_color_distances(inst.graph, inst.coloring);
  for (VertexId v = 0; v < inst.graph.n(); ++v) {
    for (ColorId c = 0; c < 4; ++c) {
      StaticOracle::QueryResult q = o.query(v, c);
      CHECK(q.iterations <= 8);  // ceil(log_{3/2} 16) + 1
      CHECK(q.estimate >= truth[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)]);
    }
  }
}

TEST_CASE("monte-carlo bunch total stays within the expectation slack") {
  // mean over 10 seeds of sum_c |B(c)| against 4 * k * n * sigma^(1/k)
  const int n = 200, k = 2;
  const ColorId sigma = 8;
  Instance inst = random_connected_instance(n, 500, 20, sigma, 55);
  double total = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    StaticOracle o = StaticOracle::build(inst.graph, inst.coloring, k, seed);
    total += static_cast<double>(o.space_report().bunch_entries);
  }
  double mean = total / 10.0;
  double bound = 4.0 * k * n * std::pow(static_cast<double>(sigma), 1.0 / k);
  CHECK(mean <= bound);
}

TEST_CASE("space report counts gap words by construction") {
  Instance inst = random_connected_instance(50, 100, 9, 4, 13);
  for (int k : {2, 3, 5}) {
    StaticOracle o = StaticOracle::build(inst.graph, inst.coloring, k, 3);
    CHECK(o.space_report().gap_array_words == static_cast<std::size_t>(50 * (k - 1)));
  }
}

TEST_CASE("identical inputs give identical oracles and answers") {
  Instance inst = random_connected_instance(70, 150, 14, 8, 61);
  StaticOracle a = StaticOracle::build(inst.graph, inst.coloring, 3, 42);
  StaticOracle b = StaticOracle::build(inst.graph, inst.coloring, 3, 42);
  for (VertexId v = 0; v < inst.graph.n(); ++v) {
    CHECK(a.level_of(v) == b.level_of(v));
    for (int i = 0; i < 3; ++i) {
      CHECK(a.pivot(v, i) == b.pivot(v, i));
      CHECK(a.pivot_distance(v, i) == b.pivot_distance(v, i));
    }
    for (ColorId c = 0; c < 8; ++c) {
      CHECK(a.query(v, c).estimate == b.query(v, c).estimate);
      CHECK(a.query(v, c).iterations == b.query(v, c).iterations);
    }
  }
  CHECK(a.space_report().bunch_entries == b.space_report().bunch_entries);
}

TEST_CASE("build and query reject invalid arguments") {
  Graph g(2, {{0, 1, 1}});
  Coloring col(2, {0, 1});
  CHECK_THROWS_AS(StaticOracle::build(g, col, 0, 1), InvalidKError);
  StaticOracle o = StaticOracle::build(g, col, 1, 1);
  CHECK_THROWS_AS(o.query(5, 0), InvalidVertexError);
  CHECK_THROWS_AS(o.query(0, 9), NoSuchColorError);
  Graph g2(3, {{0, 1, 1}});
  Coloring col2(2, {0, 0, 1});
  StaticOracle o2 = StaticOracle::build(g2, col2, 2, 1);
  CHECK_THROWS_AS(o2.query(0, 1), NoSuchColorInComponentError);
}

TEST_CASE("per-component sampling keeps the top level nonempty everywhere") {
  Instance inst = random_instance_with_components(60, 3, 30, 6, 4, 91);
  const int k = 4;
  StaticOracle o = StaticOracle::build(inst.graph, inst.coloring, k, 8);
  auto comps = components(inst.graph);
  for (const auto& comp : comps) {
    bool has_top = false;
    for (VertexId v : comp) has_top = has_top || o.level_of(v) == k - 1;
    CHECK(has_top);
  }
}
