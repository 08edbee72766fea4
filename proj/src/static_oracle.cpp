#include "cdo/static_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "cdo/dist_kernels.hpp"
#include "cdo/rng.hpp"

namespace cdo {

StaticOracle StaticOracle::build(const Graph& g, const Coloring& col, int k, std::uint64_t seed) {
  if (k < 1) throw InvalidKError("level count k must be >= 1, got " + std::to_string(k));
  if (g.n() < 1) throw InvalidVertexError("graph must be nonempty");
  if (col.n() != g.n()) throw InvalidVertexError("coloring size mismatch");

  StaticOracle o;
  o.k_ = k;
  o.seed_ = seed;
  o.sigma_ = col.sigma();
  o.comp_id_ = component_ids(g);

  std::size_t n = static_cast<std::size_t>(g.n());
  std::vector<std::vector<VertexId>> comps = components(g);
  std::size_t comp_count = comps.size();

  o.comp_has_color_.assign(comp_count, std::vector<char>(static_cast<std::size_t>(o.sigma_), 0));
  for (VertexId v = 0; v < g.n(); ++v) {
    o.comp_has_color_[static_cast<std::size_t>(o.comp_id_[static_cast<std::size_t>(v)])]
                     [static_cast<std::size_t>(col.color_of(v))] = 1;
  }

  // Sample the hierarchy per component; redraw a component whose top level
  // A_{k-1} is empty, using a sub-seed derived from (seed, component, attempt)
  // so the build is deterministic.
  double p = std::pow(static_cast<double>(o.sigma_), -1.0 / static_cast<double>(k));
  o.level_of_.assign(n, 0);
  for (std::size_t ci = 0; ci < comp_count; ++ci) {
    const std::vector<VertexId>& members = comps[ci];
    for (std::uint64_t attempt = 0;; ++attempt) {
      Rng rng(mix_seed(seed, static_cast<std::uint64_t>(ci), attempt));
      std::vector<VertexId> cur = members;
      for (VertexId v : members) o.level_of_[static_cast<std::size_t>(v)] = 0;
      for (int i = 1; i <= k - 1; ++i) {
        std::vector<VertexId> next;
        for (VertexId v : cur) {
          if (rng.bernoulli(p)) {
            next.push_back(v);
            o.level_of_[static_cast<std::size_t>(v)] = i;
          }
        }
        cur = std::move(next);
      }
      if (!cur.empty()) break;  // A_{k-1} nonempty in this component
    }
  }

  // Pivots p_i(v): one multi-source pass per level; ties settle on the
  // smallest vertex id.
  o.pivot_id_.assign(n, std::vector<VertexId>(static_cast<std::size_t>(k), -1));
  o.pivot_dist_.assign(n, std::vector<Dist>(static_cast<std::size_t>(k), kUnreachable));
  for (int i = 0; i < k; ++i) {
    std::vector<VertexId> level_set;
    for (VertexId v = 0; v < g.n(); ++v) {
      if (o.level_of_[static_cast<std::size_t>(v)] >= i) level_set.push_back(v);
    }
    MultiSourceResult ms = multi_source_shortest_paths(g, level_set);
    for (std::size_t v = 0; v < n; ++v) {
      o.pivot_id_[v][static_cast<std::size_t>(i)] = ms.witness[v];
      o.pivot_dist_[v][static_cast<std::size_t>(i)] = ms.dist[v];
    }
  }

  // Gap arrays and their range-max indices.
  o.gaps_.assign(n, {});
  if (k >= 2) {
    o.gap_rmq_.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
      o.gaps_[v].resize(static_cast<std::size_t>(k - 1));
      for (int i = 0; i + 1 < k; ++i) {
        o.gaps_[v][static_cast<std::size_t>(i)] =
            o.pivot_dist_[v][static_cast<std::size_t>(i + 1)] -
            o.pivot_dist_[v][static_cast<std::size_t>(i)];
      }
      o.gap_rmq_.emplace_back(o.gaps_[v]);
    }
  }

  // Bunch maps per color: u joins B(c) when some v in V_c has
  // dist(v, u) < dist(v, p_{L+1}(v)) for u's own top level L (the last
  // level's threshold is +infinity). Distances come from exact per-source
  // passes; sources are processed in batches so the passes can run in
  // parallel while the marking stays deterministic.
  ColorTable color_table = all_color_distances_with_witness(g, col);
  o.color_bunch_.assign(static_cast<std::size_t>(o.sigma_), {});

  constexpr std::size_t kBatch = 64;
  std::vector<std::vector<Dist>> rows(kBatch);
  std::vector<char> hit(static_cast<std::size_t>(o.sigma_), 0);
  for (std::size_t base = 0; base < n; base += kBatch) {
    std::size_t batch = std::min(kBatch, n - base);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t bi = 0; bi < static_cast<std::int64_t>(batch); ++bi) {
      rows[static_cast<std::size_t>(bi)] =
          g.shortest_paths(static_cast<VertexId>(base + static_cast<std::size_t>(bi)));
    }
    for (std::size_t bi = 0; bi < batch; ++bi) {
      VertexId u = static_cast<VertexId>(base + bi);
      const std::vector<Dist>& du = rows[bi];
      int top = o.level_of_[static_cast<std::size_t>(u)];
      std::fill(hit.begin(), hit.end(), 0);
      for (std::size_t v = 0; v < n; ++v) {
        if (!reachable(du[v])) continue;
        bool in_bunch_of_v = (top + 1 >= k) ||
                             du[v] < o.pivot_dist_[v][static_cast<std::size_t>(top + 1)];
        if (in_bunch_of_v) hit[static_cast<std::size_t>(col.color_of(static_cast<VertexId>(v)))] = 1;
      }
      for (ColorId c = 0; c < o.sigma_; ++c) {
        if (hit[static_cast<std::size_t>(c)]) {
          o.color_bunch_[static_cast<std::size_t>(c)].emplace(
              u, color_table.dist[static_cast<std::size_t>(u)][static_cast<std::size_t>(c)]);
        }
      }
    }
  }
  return o;
}

VertexId StaticOracle::pivot(VertexId v, int i) const {
  return pivot_id_[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
}

Dist StaticOracle::pivot_distance(VertexId v, int i) const {
  return pivot_dist_[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)];
}

const std::unordered_map<VertexId, Dist>& StaticOracle::color_bunch(ColorId c) const {
  if (c < 0 || c >= sigma_) throw NoSuchColorError("color id out of range");
  return color_bunch_[static_cast<std::size_t>(c)];
}

bool StaticOracle::in_bunch(ColorId c, VertexId u) const {
  return color_bunch_[static_cast<std::size_t>(c)].count(u) > 0;
}

bool StaticOracle::color_in_component(VertexId v, ColorId c) const {
  if (v < 0 || static_cast<std::size_t>(v) >= comp_id_.size()) {
    throw InvalidVertexError("vertex out of range");
  }
  if (c < 0 || c >= sigma_) return false;
  return comp_has_color_[static_cast<std::size_t>(comp_id_[static_cast<std::size_t>(v)])]
                        [static_cast<std::size_t>(c)] != 0;
}

void StaticOracle::require_color_in_component(VertexId v, ColorId c) const {
  if (v < 0 || static_cast<std::size_t>(v) >= comp_id_.size()) {
    throw InvalidVertexError("vertex " + std::to_string(v) + " out of range");
  }
  if (c < 0 || c >= sigma_) throw NoSuchColorError("color id out of range");
  if (!color_in_component(v, c)) {
    throw NoSuchColorInComponentError("color " + std::to_string(c) +
                                      " absent from the component of vertex " + std::to_string(v));
  }
}

StaticOracle::QueryResult StaticOracle::run_loop(VertexId v, ColorId c,
                                                 std::vector<TraceEntry>* trace) const {
  std::size_t vi = static_cast<std::size_t>(v);
  int lower = 0;
  int upper = k_ - 1;
  int iterations = 0;
  if (trace) trace->push_back({lower, upper});
  while (upper != lower) {
    int i = (lower + upper + 1) / 2;  // ceil of the midpoint
    std::size_t j = gap_rmq_[vi].query(static_cast<std::size_t>(lower),
                                       static_cast<std::size_t>(i - 1));
    if (!in_bunch(c, pivot_id_[vi][j])) {
      lower = i;
    } else {
      upper = static_cast<int>(j);
    }
    ++iterations;
    if (trace) trace->push_back({lower, upper});
  }
  VertexId w = pivot_id_[vi][static_cast<std::size_t>(lower)];
  Dist est = pivot_dist_[vi][static_cast<std::size_t>(lower)] +
             color_bunch_[static_cast<std::size_t>(c)].at(w);
  return {est, w, iterations};
}

StaticOracle::QueryResult StaticOracle::query(VertexId v, ColorId c) const {
  require_color_in_component(v, c);
  return run_loop(v, c, nullptr);
}

Dist StaticOracle::query_naive(VertexId v, ColorId c) const {
  require_color_in_component(v, c);
  std::size_t vi = static_cast<std::size_t>(v);
  for (int i = 0; i < k_; ++i) {
    VertexId piv = pivot_id_[vi][static_cast<std::size_t>(i)];
    auto it = color_bunch_[static_cast<std::size_t>(c)].find(piv);
    if (it != color_bunch_[static_cast<std::size_t>(c)].end()) {
      return pivot_dist_[vi][static_cast<std::size_t>(i)] + it->second;
    }
  }
  // p_{k-1}(v) lies in A_{k-1}, which is a subset of every bunch in the
  // component, so the walk cannot fall through once the precheck passed.
  throw Error("bunch walk fell through; oracle state corrupt");
}

int StaticOracle::naive_probes(VertexId v, ColorId c) const {
  require_color_in_component(v, c);
  std::size_t vi = static_cast<std::size_t>(v);
  for (int i = 0; i < k_; ++i) {
    if (in_bunch(c, pivot_id_[vi][static_cast<std::size_t>(i)])) return i + 1;
  }
  throw Error("bunch walk fell through; oracle state corrupt");
}

std::vector<StaticOracle::TraceEntry> StaticOracle::feasibility_trace(VertexId v, ColorId c) const {
  require_color_in_component(v, c);
  std::vector<TraceEntry> trace;
  run_loop(v, c, &trace);
  return trace;
}

StaticOracle::SpaceReport StaticOracle::space_report() const {
  SpaceReport r{0, 0};
  for (const auto& bunch : color_bunch_) r.bunch_entries += bunch.size();
  r.gap_array_words = comp_id_.size() * static_cast<std::size_t>(k_ - 1);
  return r;
}

}  // namespace cdo
