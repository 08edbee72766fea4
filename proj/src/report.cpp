#include "cdo/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>
#include <vector>

#include "cdo/dist_kernels.hpp"
#include "cdo/gen.hpp"
#include "cdo/hst.hpp"
#include "cdo/io.hpp"
#include "cdo/oumv.hpp"
#include "cdo/rng.hpp"
#include "cdo/static_oracle.hpp"

namespace cdo {

std::string to_string(OracleVariant v) {
  switch (v) {
    case OracleVariant::Static: return "static";
    case OracleVariant::DynFastQuery: return "dyn-fastquery";
    case OracleVariant::DynFastUpdate: return "dyn-fastupdate";
  }
  return "?";
}

OracleVariant oracle_variant_from_string(const std::string& s) {
  if (s == "static") return OracleVariant::Static;
  if (s == "dyn-fastquery") return OracleVariant::DynFastQuery;
  if (s == "dyn-fastupdate") return OracleVariant::DynFastUpdate;
  throw VariantError("unknown variant '" + s + "'");
}

namespace {

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

Dist exact_or_unreachable(const Graph& g, const Coloring& col, VertexId v, ColorId c) {
  if (c < 0 || c >= col.sigma() || col.members(c).empty()) return kUnreachable;
  return brute_nearest(g, col, v, c).distance;
}

struct QueryRow {
  VertexId v = 0;
  ColorId c = 0;
  Dist exact = kUnreachable;
  Dist estimate = 0;
  VertexId witness = -1;
  int iterations = 0;
  bool absent = false;      // brute force says unreachable
  bool absent_ok = true;    // and the oracle raised the typed error
};

void emit_row(std::ostream& out, const QueryRow& r) {
  out << r.v << "," << r.c << ",";
  if (r.absent) {
    out << "unreachable,unreachable,,-,0\n";
    return;
  }
  double stretch = r.exact > 0 ? static_cast<double>(r.estimate) / static_cast<double>(r.exact)
                               : (r.estimate == 0 ? 1.0 : std::numeric_limits<double>::infinity());
  out << r.exact << "," << r.estimate << "," << fmt(stretch) << "," << r.witness << ","
      << r.iterations << "\n";
}

struct RowStats {
  double max_stretch = 1.0;
  bool ok = true;
  std::size_t queries = 0;

  void feed(const QueryRow& r) {
    ++queries;
    if (r.absent) {
      if (!r.absent_ok) ok = false;
      return;
    }
    if (r.estimate < r.exact) ok = false;
    double stretch = r.exact > 0
                         ? static_cast<double>(r.estimate) / static_cast<double>(r.exact)
                         : (r.estimate == 0 ? 1.0 : std::numeric_limits<double>::infinity());
    max_stretch = std::max(max_stretch, stretch);
  }
};

void emit_summary(std::ostream& out, const VerifySummary& s) {
  out << "summary," << fmt(s.max_stretch) << "," << fmt(s.bound) << ","
      << (s.pass ? "pass" : "fail") << "," << s.space1 << "," << s.space2 << "," << s.queries
      << "\n";
}

VerifySummary verify_static(const RunConfig& cfg, const LoadedInstance& inst, std::ostream& out) {
  const Graph& g = inst.graph;
  const Coloring& col = inst.coloring;
  StaticOracle oracle = StaticOracle::build(g, col, cfg.k, cfg.seed);
  std::vector<std::vector<Dist>> truth = all_color_distances(g, col);

  double bound = std::max(1.0, 4.0 * cfg.k - 5.0);
  int iter_bound =
      static_cast<int>(std::ceil(std::log(static_cast<double>(std::max(1, cfg.k))) /
                                 std::log(1.5))) + 1;

  auto answer = [&](QueryRow& r) {
    r.exact = truth[static_cast<std::size_t>(r.v)][static_cast<std::size_t>(r.c)];
    if (!reachable(r.exact)) {
      r.absent = true;
      try {
        oracle.query(r.v, r.c);
        r.absent_ok = false;
      } catch (const NoSuchColorInComponentError&) {
      }
      return;
    }
    StaticOracle::QueryResult q = oracle.query(r.v, r.c);
    r.estimate = q.estimate;
    r.witness = q.witness_pivot;
    r.iterations = q.iterations;
  };

  std::vector<QueryRow> rows;
  if (!cfg.workload_path.empty()) {
    for (const WorkloadOp& op : load_workload(cfg.workload_path)) {
      if (op.kind == 'r') throw VariantError("recolor op in a static-oracle workload");
      QueryRow r;
      r.v = op.v;
      r.c = op.c;
      answer(r);
      rows.push_back(r);
    }
  } else {
    std::size_t n = static_cast<std::size_t>(g.n());
    std::size_t sigma = static_cast<std::size_t>(col.sigma());
    rows.assign(n * sigma, {});
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t v = 0; v < static_cast<std::int64_t>(n); ++v) {
      for (std::size_t c = 0; c < sigma; ++c) {
        QueryRow& r = rows[static_cast<std::size_t>(v) * sigma + c];
        r.v = static_cast<VertexId>(v);
        r.c = static_cast<ColorId>(c);
        answer(r);
      }
    }
  }

  RowStats stats;
  bool iter_ok = true;
  for (const QueryRow& r : rows) {
    emit_row(out, r);
    stats.feed(r);
    if (!r.absent && r.iterations > iter_bound) iter_ok = false;
  }

  StaticOracle::SpaceReport space = oracle.space_report();
  VerifySummary s;
  s.max_stretch = stats.max_stretch;
  s.bound = bound;
  s.queries = stats.queries;
  s.space1 = space.bunch_entries;
  s.space2 = space.gap_array_words;
  s.pass = stats.ok && iter_ok && stats.max_stretch <= bound + 1e-9;
  emit_summary(out, s);
  return s;
}

VerifySummary verify_dynamic(const RunConfig& cfg, const LoadedInstance& inst, std::ostream& out) {
  const Graph& g = inst.graph;
  RecolorVariant variant = cfg.variant == OracleVariant::DynFastQuery
                               ? RecolorVariant::FastQuery
                               : RecolorVariant::FastUpdate;
  double distortion = cfg.effective_distortion();
  RecolorableOracle oracle(g, inst.coloring, cfg.k, distortion, variant, cfg.seed);
  Coloring current = inst.coloring;  // mirrors the oracle's view for ground truth

  std::vector<WorkloadOp> ops;
  if (!cfg.workload_path.empty()) {
    ops = load_workload(cfg.workload_path);
  } else {
    for (VertexId v = 0; v < g.n(); ++v) {
      for (ColorId c = 0; c < current.sigma(); ++c) ops.push_back({'q', v, c});
    }
  }

  RowStats stats;
  for (const WorkloadOp& op : ops) {
    if (op.kind == 'r') {
      oracle.recolor(op.v, op.c);
      current.recolor(op.v, op.c);
      continue;
    }
    QueryRow r;
    r.v = op.v;
    r.c = op.c;
    r.exact = exact_or_unreachable(g, current, op.v, op.c);
    if (!reachable(r.exact)) {
      r.absent = true;
      try {
        oracle.query(op.v, op.c);
        r.absent_ok = false;
      } catch (const NoSuchColorError&) {
      }
    } else {
      RecolorableOracle::Estimate e = oracle.query(op.v, op.c);
      r.estimate = e.estimate;
      r.witness = e.witness;
      // trees consulted by this query
      r.iterations =
          variant == RecolorVariant::FastQuery
              ? 1
              : static_cast<int>(
                    oracle.cover()
                        .component_trees[static_cast<std::size_t>(
                            oracle.cover().comp_id[static_cast<std::size_t>(op.v)])]
                        .size());
    }
    emit_row(out, r);
    stats.feed(r);
  }

  std::size_t index_keys = 0;
  for (std::size_t ti = 0; ti < oracle.cover().trees.size(); ++ti) {
    for (ColorId c = 0; c < current.sigma(); ++c) {
      index_keys += oracle.index(static_cast<int>(ti)).color_set(c).size();
    }
  }

  VerifySummary s;
  s.max_stretch = stats.max_stretch;
  s.bound = distortion;
  s.queries = stats.queries;
  s.space1 = oracle.cover().trees.size();
  s.space2 = index_keys;
  s.pass = stats.ok && stats.max_stretch <= distortion + 1e-9;
  emit_summary(out, s);
  return s;
}

}  // namespace

VerifySummary run_verify(const RunConfig& cfg, std::ostream& out) {
  LoadedInstance inst = load_graph(cfg.input_path);
  out << "v,c,exact,estimate,stretch,witness,iterations\n";
  if (cfg.variant == OracleVariant::Static) return verify_static(cfg, inst, out);
  return verify_dynamic(cfg, inst, out);
}

BenchSummary run_bench(const RunConfig& cfg, std::ostream& out) {
  LoadedInstance inst = load_graph(cfg.input_path);
  return run_bench_instance(inst.graph, inst.coloring, cfg, out);
}

BenchSummary run_bench_instance(const Graph& g, const Coloring& col, const RunConfig& cfg,
                                std::ostream& out) {
  using Clock = std::chrono::steady_clock;
  StaticOracle oracle = StaticOracle::build(g, col, cfg.k, cfg.seed);

  std::vector<std::pair<VertexId, ColorId>> queries;
  for (VertexId v = 0; v < g.n(); ++v) {
    for (ColorId c = 0; c < col.sigma(); ++c) {
      if (oracle.color_in_component(v, c)) queries.push_back({v, c});
    }
  }

  BenchSummary s;
  s.queries = queries.size();
  std::vector<long> times;
  times.reserve(queries.size());

  double iter_sum = 0;
  for (auto [v, c] : queries) {
    auto t0 = Clock::now();
    StaticOracle::QueryResult q = oracle.query(v, c);
    auto t1 = Clock::now();
    times.push_back(static_cast<long>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
    iter_sum += q.iterations;
    s.max_iterations_query = std::max(s.max_iterations_query, q.iterations);
  }
  s.mean_iterations_query = queries.empty() ? 0 : iter_sum / static_cast<double>(queries.size());
  std::sort(times.begin(), times.end());
  long p99_query = times.empty() ? 0 : times[times.size() * 99 / 100];

  times.clear();
  iter_sum = 0;
  for (auto [v, c] : queries) {
    auto t0 = Clock::now();
    oracle.query_naive(v, c);
    auto t1 = Clock::now();
    times.push_back(static_cast<long>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count()));
    int probes = oracle.naive_probes(v, c);
    iter_sum += probes;
    s.max_iterations_naive = std::max(s.max_iterations_naive, probes);
  }
  s.mean_iterations_naive = queries.empty() ? 0 : iter_sum / static_cast<double>(queries.size());
  std::sort(times.begin(), times.end());
  long p99_naive = times.empty() ? 0 : times[times.size() * 99 / 100];

  auto wall = [](auto&& fn) {
    auto t0 = Clock::now();
    fn();
    auto t1 = Clock::now();
    return static_cast<long>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
  };
  long t_ap_serial = wall([&] { all_pairs_distances_serial(g); });
  long t_ap_omp = wall([&] { all_pairs_distances(g); });
  long t_ct_serial = wall([&] { all_color_distances_serial(g, col); });
  long t_ct_omp = wall([&] { all_color_distances(g, col); });

  out << "procedure,k,mean_iterations,p99_time_ns\n";
  out << "query," << cfg.k << "," << fmt(s.mean_iterations_query) << "," << p99_query << "\n";
  out << "query_naive," << cfg.k << "," << fmt(s.mean_iterations_naive) << "," << p99_naive
      << "\n";
  out << "all_pairs_serial," << cfg.k << ",0," << t_ap_serial << "\n";
  out << "all_pairs_omp," << cfg.k << ",0," << t_ap_omp << "\n";
  out << "color_table_serial," << cfg.k << ",0," << t_ct_serial << "\n";
  out << "color_table_omp," << cfg.k << ",0," << t_ct_omp << "\n";
  return s;
}

void run_build(const RunConfig& cfg, std::ostream& out) {
  LoadedInstance inst = load_graph(cfg.input_path);
  out << "metric,value\n";
  out << "n," << inst.graph.n() << "\n";
  out << "m," << inst.graph.m() << "\n";
  out << "sigma," << inst.coloring.sigma() << "\n";
  out << "k," << cfg.k << "\n";
  out << "seed," << cfg.seed << "\n";
  out << "variant," << to_string(cfg.variant) << "\n";
  if (cfg.variant == OracleVariant::Static) {
    StaticOracle oracle = StaticOracle::build(inst.graph, inst.coloring, cfg.k, cfg.seed);
    StaticOracle::SpaceReport space = oracle.space_report();
    out << "bunch_entries," << space.bunch_entries << "\n";
    out << "gap_array_words," << space.gap_array_words << "\n";
    double reference = static_cast<double>(cfg.k) * inst.graph.n() *
                       std::pow(static_cast<double>(inst.coloring.sigma()), 1.0 / cfg.k);
    out << "bunch_entry_reference," << fmt(reference) << "\n";
  } else {
    RecolorVariant variant = cfg.variant == OracleVariant::DynFastQuery
                                 ? RecolorVariant::FastQuery
                                 : RecolorVariant::FastUpdate;
    RecolorableOracle oracle(inst.graph, inst.coloring, cfg.k, cfg.effective_distortion(),
                             variant, cfg.seed);
    out << "distortion," << fmt(cfg.effective_distortion()) << "\n";
    out << "trees," << oracle.cover().trees.size() << "\n";
    double reference = static_cast<double>(cfg.k) *
                       std::pow(static_cast<double>(inst.graph.n()), 1.0 / cfg.k);
    out << "tree_count_reference," << fmt(reference) << "\n";
    std::size_t nodes = 0;
    for (const Hst& t : oracle.cover().trees) nodes += static_cast<std::size_t>(t.node_count());
    out << "tree_nodes," << nodes << "\n";
  }
}

void run_query(const RunConfig& cfg, std::ostream& out) {
  LoadedInstance inst = load_graph(cfg.input_path);
  if (cfg.workload_path.empty()) throw ParseError("query command needs a workload file");
  std::vector<WorkloadOp> ops = load_workload(cfg.workload_path);
  out << "v,c,estimate,witness,iterations\n";
  if (cfg.variant == OracleVariant::Static) {
    StaticOracle oracle = StaticOracle::build(inst.graph, inst.coloring, cfg.k, cfg.seed);
    for (const WorkloadOp& op : ops) {
      if (op.kind == 'r') throw VariantError("recolor op in a static-oracle workload");
      StaticOracle::QueryResult q = oracle.query(op.v, op.c);
      out << op.v << "," << op.c << "," << q.estimate << "," << q.witness_pivot << ","
          << q.iterations << "\n";
    }
  } else {
    RecolorVariant variant = cfg.variant == OracleVariant::DynFastQuery
                                 ? RecolorVariant::FastQuery
                                 : RecolorVariant::FastUpdate;
    RecolorableOracle oracle(inst.graph, inst.coloring, cfg.k, cfg.effective_distortion(),
                             variant, cfg.seed);
    for (const WorkloadOp& op : ops) {
      if (op.kind == 'r') {
        oracle.recolor(op.v, op.c);
        continue;
      }
      RecolorableOracle::Estimate e = oracle.query(op.v, op.c);
      out << op.v << "," << op.c << "," << e.estimate << "," << e.witness << ",0\n";
    }
  }
}

SelfCheckSummary run_path_verify(const RunConfig& cfg, std::ostream& out) {
  Rng rng(mix_seed(cfg.seed, 0xb17e5ULL));
  int sigma = std::max(1, cfg.sigma);
  std::vector<ColorId> colors(static_cast<std::size_t>(std::max(1, cfg.n)));
  for (std::size_t i = 0; i < colors.size(); ++i) {
    colors[i] = static_cast<int>(i) < sigma
                    ? static_cast<ColorId>(i)
                    : static_cast<ColorId>(rng.next_below(static_cast<std::uint64_t>(sigma)));
  }
  rng.shuffle(colors);

  PathInstance inst = build_instance(colors, cfg.base);
  const PathLine& line = inst.forward;
  Position n = line.n;

  // Directional ground truth by linear sweep.
  std::size_t ns = static_cast<std::size_t>(n);
  std::size_t sg = static_cast<std::size_t>(line.sigma);
  std::vector<Position> fwd(ns * sg + sg, 0), bwd(ns * sg + sg, 0);
  {
    std::vector<Position> last(sg, 0);
    for (Position i = n; i >= 1; --i) {
      ColorId ci = line.color_at(i);
      if (ci < line.sigma) last[static_cast<std::size_t>(ci)] = i;
      for (std::size_t c = 0; c < sg; ++c) fwd[static_cast<std::size_t>(i - 1) * sg + c] = last[c];
    }
    std::fill(last.begin(), last.end(), 0);
    for (Position i = 1; i <= n; ++i) {
      ColorId ci = line.color_at(i);
      if (ci < line.sigma) last[static_cast<std::size_t>(ci)] = i;
      for (std::size_t c = 0; c < sg; ++c) bwd[static_cast<std::size_t>(i - 1) * sg + c] = last[c];
    }
  }

  SelfCheckSummary s;
  for (Position i = 1; i <= n; ++i) {
    for (ColorId c = 0; c < line.sigma; ++c) {
      Position jf = fwd[static_cast<std::size_t>(i - 1) * sg + static_cast<std::size_t>(c)];
      Position jb = bwd[static_cast<std::size_t>(i - 1) * sg + static_cast<std::size_t>(c)];
      if (jf == 0 && jb == 0) continue;
      Dist df = jf ? line.dist(i, jf) : 0;
      Dist db = jb ? line.dist(jb, i) : 0;
      Position truth;
      if (jf == 0) truth = jb;
      else if (jb == 0) truth = jf;
      else truth = db <= df ? jb : jf;
      for (int mult : {1, cfg.base}) {
        std::optional<Dist> ef = jf ? std::optional<Dist>(df * mult) : std::nullopt;
        std::optional<Dist> eb = jb ? std::optional<Dist>(db * mult) : std::nullopt;
        Position got = exact_query(inst, i, c, ef, eb, cfg.mode, cfg.window);
        ++s.checks;
        if (got != truth) ++s.mismatches;
      }
    }
  }

  std::size_t per_line_bound = static_cast<std::size_t>(cfg.base) * static_cast<std::size_t>(n) *
                               static_cast<std::size_t>(std::max(1, line.levels));
  bool entries_ok = inst.forward_maps.total_entries() <= per_line_bound &&
                    inst.mirrored_maps.total_entries() <= per_line_bound;
  s.pass = s.mismatches == 0 && entries_ok;

  out << "metric,value\n";
  out << "base," << cfg.base << "\n";
  out << "n," << n << "\n";
  out << "sigma," << line.sigma << "\n";
  out << "mode," << (cfg.mode == PathQueryMode::Exact ? "exact" : "fast") << "\n";
  out << "window," << cfg.window << "\n";
  out << "entries_forward," << inst.forward_maps.total_entries() << "\n";
  out << "entries_mirrored," << inst.mirrored_maps.total_entries() << "\n";
  out << "entry_bound_per_line," << per_line_bound << "\n";
  out << "checks," << s.checks << "\n";
  out << "mismatches," << s.mismatches << "\n";
  out << "status," << (s.pass ? "pass" : "fail") << "\n";
  return s;
}

SelfCheckSummary run_gadget_verify(const RunConfig& cfg, std::ostream& out) {
  Rng rng(mix_seed(cfg.seed, 0x9ad9e7ULL));
  int n1 = std::max(1, cfg.rows);
  int n2 = std::max(1, cfg.cols);

  SelfCheckSummary s;
  std::size_t gap_violations = 0;
  for (int instance = 0; instance < cfg.instances; ++instance) {
    std::vector<std::vector<std::uint8_t>> m(static_cast<std::size_t>(n1),
                                             std::vector<std::uint8_t>(static_cast<std::size_t>(n2)));
    for (auto& row : m) {
      for (auto& bit : row) bit = static_cast<std::uint8_t>(rng.next_below(2));
    }
    Gadget tree = Gadget::build(m, GadgetVariant::Tree);
    Gadget compact = Gadget::build(m, GadgetVariant::Compact);

    bool exhaustive = n1 + n2 <= 12;
    std::size_t pair_count =
        exhaustive ? (std::size_t{1} << n1) * (std::size_t{1} << n2) : 256;
    for (std::size_t t = 0; t < pair_count; ++t) {
      std::vector<std::uint8_t> u(static_cast<std::size_t>(n1));
      std::vector<std::uint8_t> v(static_cast<std::size_t>(n2));
      if (exhaustive) {
        for (int i = 0; i < n1; ++i) u[static_cast<std::size_t>(i)] = (t >> i) & 1;
        for (int j = 0; j < n2; ++j) v[static_cast<std::size_t>(j)] = (t >> (n1 + j)) & 1;
      } else {
        for (auto& b : u) b = static_cast<std::uint8_t>(rng.next_below(2));
        for (auto& b : v) b = static_cast<std::uint8_t>(rng.next_below(2));
      }
      bool direct = false;
      for (int i = 0; i < n1 && !direct; ++i) {
        if (!u[static_cast<std::size_t>(i)]) continue;
        for (int j = 0; j < n2; ++j) {
          if (v[static_cast<std::size_t>(j)] && m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) {
            direct = true;
            break;
          }
        }
      }
      ++s.checks;
      if (tree.process_pair(u, v) != direct) ++s.mismatches;
      ++s.checks;
      if (compact.compact_distance_check(u, v) != direct) ++s.mismatches;
      for (Dist d : compact.compact_color_distances(u)) {
        if (reachable(d) && d != 3 && d < 5) ++gap_violations;
      }
    }
  }
  s.pass = s.mismatches == 0 && gap_violations == 0;

  out << "metric,value\n";
  out << "rows," << n1 << "\n";
  out << "cols," << n2 << "\n";
  out << "instances," << cfg.instances << "\n";
  out << "checks," << s.checks << "\n";
  out << "mismatches," << s.mismatches << "\n";
  out << "gap_violations," << gap_violations << "\n";
  out << "status," << (s.pass ? "pass" : "fail") << "\n";
  return s;
}

}  // namespace cdo
