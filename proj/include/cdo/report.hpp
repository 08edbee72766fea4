#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "cdo/graph.hpp"
#include "cdo/path_exact.hpp"

namespace cdo {

enum class OracleVariant { Static, DynFastQuery, DynFastUpdate };

std::string to_string(OracleVariant v);
OracleVariant oracle_variant_from_string(const std::string& s);

struct RunConfig {
  std::string input_path;
  std::string workload_path;  // optional
  int k = 2;
  std::uint64_t seed = 1;
  OracleVariant variant = OracleVariant::Static;
  double distortion = 0;  // <= 0 picks the default 128 * k
  // path selfcheck knobs
  int base = 4;
  PathQueryMode mode = PathQueryMode::Exact;
  int window = kDefaultWindow;
  // synthetic sizes for the path / gadget selfchecks
  int n = 256;
  int sigma = 8;
  int rows = 6;
  int cols = 6;
  int instances = 10;

  double effective_distortion() const {
    return distortion > 0 ? distortion : 128.0 * static_cast<double>(k);
  }
};

// verify: CSV rows (v, c, exact, estimate, stretch, witness, iterations)
// against brute-force ground truth, final summary row
// (summary, max_stretch, bound, status, space1, space2, queries).
// space1/space2 are bunch entries / gap words for the static oracle and
// tree count / index keys for the dynamic ones.
struct VerifySummary {
  double max_stretch = 0;
  double bound = 0;
  bool pass = false;
  std::size_t space1 = 0;
  std::size_t space2 = 0;
  std::size_t queries = 0;
};
VerifySummary run_verify(const RunConfig& cfg, std::ostream& out);

// bench: CSV rows (procedure, k, mean_iterations, p99_time_ns); the
// procedures are the two oracle query paths plus the serial / OpenMP
// distance-table kernels. Timing columns are reported, never asserted.
struct BenchSummary {
  double mean_iterations_query = 0;
  double mean_iterations_naive = 0;
  int max_iterations_query = 0;
  int max_iterations_naive = 0;
  std::size_t queries = 0;
};
BenchSummary run_bench(const RunConfig& cfg, std::ostream& out);
BenchSummary run_bench_instance(const Graph& g, const Coloring& col, const RunConfig& cfg,
                                std::ostream& out);

// build: structure statistics as (metric, value) rows.
void run_build(const RunConfig& cfg, std::ostream& out);

// query: execute a workload without ground truth, rows
// (v, c, estimate, witness, iterations).
void run_query(const RunConfig& cfg, std::ostream& out);

// Self-checks wrapping the path exactification and the matrix gadget:
// synthetic instance, exhaustive comparison against brute force,
// (metric, value) rows with a final status row.
struct SelfCheckSummary {
  bool pass = false;
  std::size_t checks = 0;
  std::size_t mismatches = 0;
};
SelfCheckSummary run_path_verify(const RunConfig& cfg, std::ostream& out);
SelfCheckSummary run_gadget_verify(const RunConfig& cfg, std::ostream& out);

}  // namespace cdo
