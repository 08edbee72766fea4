#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "cdo/report.hpp"

namespace {

struct OutSink {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  void open(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw cdo::ParseError(path + ": cannot open for writing");
    stream = &file;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nearest-colored-node query engine"};
  app.require_subcommand(1);

  cdo::RunConfig cfg;
  std::string variant = "static";
  std::string mode = "exact";
  std::string out_path;

  auto add_oracle_opts = [&](CLI::App* sub, bool workload) {
    sub->add_option("input", cfg.input_path, "graph file")->required();
    if (workload) sub->add_option("--workload", cfg.workload_path, "q/r workload file");
    sub->add_option("--k", cfg.k, "oracle level / stretch parameter");
    sub->add_option("--seed", cfg.seed, "RNG seed");
    sub->add_option("--variant", variant, "static | dyn-fastquery | dyn-fastupdate");
    sub->add_option("--distortion", cfg.distortion,
                    "cover distortion factor D (default 128*k)");
    sub->add_option("--out", out_path, "report file (default stdout)");
  };

  CLI::App* verify = app.add_subcommand(
      "verify", "query the oracle against brute-force ground truth, report stretch");
  add_oracle_opts(verify, true);

  CLI::App* bench = app.add_subcommand(
      "bench", "compare the log-k query with the naive bunch walk and the serial kernels "
               "with the OpenMP ones");
  add_oracle_opts(bench, false);

  CLI::App* build = app.add_subcommand("build", "build an oracle and print structure stats");
  add_oracle_opts(build, false);

  CLI::App* query = app.add_subcommand("query", "run a workload file, estimates only");
  add_oracle_opts(query, true);

  CLI::App* pathv = app.add_subcommand(
      "path-verify", "exactify nearest-colored-position queries on a synthetic leveled path");
  pathv->add_option("--base", cfg.base, "interval base b");
  pathv->add_option("--mode", mode, "exact | fast");
  pathv->add_option("--window", cfg.window, "fast-mode level window");
  pathv->add_option("--n", cfg.n, "sequence length before padding");
  pathv->add_option("--sigma", cfg.sigma, "palette size");
  pathv->add_option("--seed", cfg.seed, "RNG seed");
  pathv->add_option("--out", out_path, "report file (default stdout)");

  CLI::App* gadv = app.add_subcommand(
      "gadget-verify", "matrix-vector gadget against the direct boolean product");
  gadv->add_option("--rows", cfg.rows, "matrix rows");
  gadv->add_option("--cols", cfg.cols, "matrix columns");
  gadv->add_option("--instances", cfg.instances, "random matrices to sweep");
  gadv->add_option("--seed", cfg.seed, "RNG seed");
  gadv->add_option("--out", out_path, "report file (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    cfg.variant = cdo::oracle_variant_from_string(variant);
    if (mode == "exact") {
      cfg.mode = cdo::PathQueryMode::Exact;
    } else if (mode == "fast") {
      cfg.mode = cdo::PathQueryMode::Fast;
    } else {
      throw cdo::VariantError("unknown mode '" + mode + "'");
    }

    OutSink sink;
    sink.open(out_path);
    bool pass = true;
    if (verify->parsed()) {
      pass = cdo::run_verify(cfg, *sink.stream).pass;
    } else if (bench->parsed()) {
      cdo::run_bench(cfg, *sink.stream);
    } else if (build->parsed()) {
      cdo::run_build(cfg, *sink.stream);
    } else if (query->parsed()) {
      cdo::run_query(cfg, *sink.stream);
    } else if (pathv->parsed()) {
      pass = cdo::run_path_verify(cfg, *sink.stream).pass;
    } else if (gadv->parsed()) {
      pass = cdo::run_gadget_verify(cfg, *sink.stream).pass;
    }
    return pass ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
