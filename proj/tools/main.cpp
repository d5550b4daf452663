#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "gael/rewrite_oracle.hpp"

namespace {

using gael::cli::RunReport;

void emit(const RunReport& report, const std::string& out_file) {
  const std::string text = report.render();
  if (out_file.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_file, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + out_file + "'");
  out << text;
}

std::optional<std::pair<int, std::uint64_t>> parse_corpus(const std::string& spec) {
  if (spec.empty()) return std::nullopt;
  const auto comma = spec.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("--corpus expects COUNT,SEED");
  return std::make_pair(std::stoi(spec.substr(0, comma)),
                        static_cast<std::uint64_t>(std::stoull(spec.substr(comma + 1))));
}

size_t oracle_cap_from_env() {
  if (const char* env = std::getenv("GAEL_MAX_ORACLE_WORDS")) {
    const long long v = std::atoll(env);
    if (v > 0) return static_cast<size_t>(v);
  }
  return gael::CohnOracle::kDefaultWordCap;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graded dimensions, entropy estimates and spectral checks for "
               "path, Cohn and Leavitt path algebras of finite graphs"};
  app.require_subcommand(1);

  std::string graph_file, in_format = "json", out_file;
  auto add_graph_options = [&](CLI::App* cmd, bool positional_required = true) {
    cmd->add_option("graph", graph_file, "graph document")->required(positional_required);
    cmd->add_option("--from", in_format, "input format: json or edges")
        ->check(CLI::IsMember({"json", "edges"}));
    cmd->add_option("--out", out_file, "write the report to a file instead of stdout");
  };

  auto* info = app.add_subcommand("info", "graph facts: classes, adjacency, nilpotency");
  add_graph_options(info);

  gael::cli::DimsOptions dims_opt;
  auto* dims = app.add_subcommand("dims", "graded dimension sequence of one filtration");
  add_graph_options(dims);
  dims->add_option("--kind", dims_opt.kind, "path|cohn|leavitt|relative")
      ->check(CLI::IsMember({"path", "cohn", "leavitt", "relative"}));
  dims->add_option("--kmax", dims_opt.kmax, "sequence depth (default 200)");
  dims->add_option("--format", dims_opt.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  gael::cli::EntropyOptions entropy_opt;
  auto* entropy = app.add_subcommand("entropy", "tail estimates, ln rho and the chain verdict");
  add_graph_options(entropy);
  entropy->add_option("--kmax", entropy_opt.kmax, "sequence depth (default 200)");
  entropy->add_option("--tol", entropy_opt.tol, "agreement tolerance in nats (default 0.05)");
  entropy->add_option("--base", entropy_opt.base, "display log base: e or 2")
      ->check(CLI::IsMember({"e", "2"}));
  entropy->add_option("--window", entropy_opt.window_fraction,
                      "tail window fraction (default 0.8)");
  entropy->add_option("--format", entropy_opt.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));

  gael::cli::VerifyOptions verify_opt;
  std::string corpus_spec;
  auto* verify = app.add_subcommand("verify", "run the property suite on a graph or corpus");
  verify->add_option("graph", graph_file, "graph document");
  verify->add_option("--from", in_format, "input format: json or edges")
      ->check(CLI::IsMember({"json", "edges"}));
  verify->add_option("--out", out_file, "write the report to a file instead of stdout");
  verify->add_option("--corpus", corpus_spec, "COUNT,SEED: seeded random corpus");
  verify->add_option("--kmax", verify_opt.properties.dims_kmax, "dimension depth (default 30)");
  verify->add_option("--oracle-k", verify_opt.properties.oracle_kmax,
                     "oracle comparison depth (default 6)");
  verify->add_flag("--inject-fault", verify_opt.properties.inject_fault)->group("");

  gael::cli::CauchyOptions cauchy_opt;
  double cauchy_radius = 0.0;
  auto* cauchy = app.add_subcommand("cauchy", "reconstruct A^k through the contour rule");
  add_graph_options(cauchy);
  cauchy->add_option("--k", cauchy_opt.k, "power to reconstruct (default 5)");
  auto* r_opt = cauchy->add_option("--r", cauchy_radius, "contour radius (default ||A||+1)");
  cauchy->add_option("--nodes", cauchy_opt.nodes, "quadrature nodes, power of two (default 512)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    RunReport report;
    if (*info) {
      report = gael::cli::cmd_info(gael::cli::load_graph(graph_file, in_format));
    } else if (*dims) {
      report = gael::cli::cmd_dims(gael::cli::load_graph(graph_file, in_format), dims_opt);
    } else if (*entropy) {
      report = gael::cli::cmd_entropy(gael::cli::load_graph(graph_file, in_format), entropy_opt);
    } else if (*verify) {
      if (!graph_file.empty()) verify_opt.graph_file = graph_file;
      verify_opt.graph_format = in_format;
      verify_opt.corpus = parse_corpus(corpus_spec);
      verify_opt.properties.oracle_cap = oracle_cap_from_env();
      report = gael::cli::cmd_verify(verify_opt);
    } else if (*cauchy) {
      if (r_opt->count() > 0) cauchy_opt.radius = cauchy_radius;
      report = gael::cli::cmd_cauchy(gael::cli::load_graph(graph_file, in_format), cauchy_opt);
    }
    emit(report, out_file);
    return report.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "gael: " << e.what() << "\n";
    return 2;
  }
}
