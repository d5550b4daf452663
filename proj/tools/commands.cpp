#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "gael/entropy.hpp"
#include "gael/filtration.hpp"
#include "gael/resolvent.hpp"

namespace gael::cli {

namespace {

using nlohmann::json;

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

json graph_summary(const Graph& g) {
  return json{{"id", g.id()}, {"vertices", g.vertex_count()}, {"edges", g.edge_count()}};
}

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

json estimate_to_json(const EntropyEstimate& e, double scale) {
  json per_k = json::array();
  for (const auto& [k, h] : e.per_k) per_k.push_back(json::array({k, h * scale}));
  return json{{"tail_estimate", e.tail_estimate * scale},
              {"growth_estimate", e.growth_estimate * scale},
              {"finite_dimensional", e.finite_dimensional},
              {"window", json::array({e.window_begin, e.window_end})},
              {"per_k", per_k}};
}

json check_to_json(const CheckResult& c) {
  json out{{"name", c.name}, {"ok", c.ok}};
  if (!c.details.empty()) out["details"] = c.details;
  return out;
}

}  // namespace

Graph load_graph(const std::string& file, const std::string& format) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + file + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (format == "json") return Graph::parse_json(buf.str());
  if (format == "edges") return Graph::parse_edge_list(buf.str());
  throw std::invalid_argument("unknown input format '" + format + "'");
}

RunReport cmd_info(const Graph& g) {
  Timer timer;
  RunReport report;
  report.command = "info";
  report.graph = graph_summary(g);
  report.parameters = json::object();

  const VertexClasses classes = g.classify();
  const ExactMatrix a = g.adjacency();
  json adjacency = json::array();
  for (int i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < a.cols(); ++j) row.push_back(a.at(i, j).get_si());
    adjacency.push_back(row);
  }
  report.results = json{{"vertices", g.vertices()},
                        {"edge_count", g.edge_count()},
                        {"sinks", classes.sinks},
                        {"sources", classes.sources},
                        {"regular", classes.regular},
                        {"X", g.x_names()},
                        {"x_explicit", g.x_explicit()},
                        {"adjacency", adjacency},
                        {"nilpotent", is_nilpotent(a)}};
  report.duration_ms = timer.ms();
  return report;
}

RunReport cmd_dims(const Graph& g, const DimsOptions& opt) {
  Timer timer;
  RunReport report;
  report.command = "dims";
  report.graph = graph_summary(g);
  report.parameters = json{{"kind", opt.kind}, {"kmax", opt.kmax}, {"format", opt.format}};

  const DimSequence seq = dim_sequence(g, algebra_kind_from_string(opt.kind), opt.kmax);
  json dims = json::array();
  for (const auto& d : seq.dims) dims.push_back(d.get_str());
  report.results =
      json{{"kind", opt.kind}, {"dims", dims}, {"finite_dimensional", seq.finite_dimensional}};

  if (opt.format == "csv") {
    report.use_csv = true;
    std::ostringstream csv;
    csv << "k,dim\n";
    for (size_t k = 0; k < seq.dims.size(); ++k) csv << k << ',' << seq.dims[k].get_str() << '\n';
    report.csv = csv.str();
  } else if (opt.format != "json") {
    throw std::invalid_argument("unknown output format '" + opt.format + "'");
  }
  report.duration_ms = timer.ms();
  return report;
}

RunReport cmd_entropy(const Graph& g, const EntropyOptions& opt) {
  Timer timer;
  if (opt.base != "e" && opt.base != "2")
    throw std::invalid_argument("unknown log base '" + opt.base + "'");
  RunReport report;
  report.command = "entropy";
  report.graph = graph_summary(g);
  report.parameters = json{{"kmax", opt.kmax},
                           {"tol", opt.tol},
                           {"base", opt.base},
                           {"window_fraction", opt.window_fraction},
                           {"format", opt.format}};

  const ChainReport chain = verify_chain(g, opt.kmax, opt.tol, opt.window_fraction);
  const double scale = opt.base == "2" ? 1.0 / std::numbers::ln2 : 1.0;
  report.results = json{{"base", opt.base},
                        {"closed_form", chain.closed_form * scale},
                        {"kinds",
                         json{{"path", estimate_to_json(chain.path, scale)},
                              {"cohn", estimate_to_json(chain.cohn, scale)},
                              {"leavitt", estimate_to_json(chain.leavitt, scale)}}},
                        {"chain",
                         json{{"sandwich_ok", chain.sandwich_ok},
                              {"tails_ok", chain.tails_ok},
                              {"chain_ok", chain.chain_ok},
                              {"tol", chain.tol},
                              {"kmax", chain.kmax},
                              {"window_fraction", chain.window_fraction}}}};

  if (opt.format == "csv") {
    report.use_csv = true;
    auto column = [](const EntropyEstimate& e) {
      std::map<unsigned, double> m;
      for (const auto& [k, h] : e.per_k) m[k] = h;
      return m;
    };
    const auto hp = column(chain.path);
    const auto hc = column(chain.cohn);
    const auto hl = column(chain.leavitt);
    std::ostringstream csv;
    csv << "k,h_path,h_cohn,h_leavitt\n";
    for (unsigned k = 1; k <= opt.kmax; ++k) {
      csv << k << ',';
      if (auto it = hp.find(k); it != hp.end()) csv << it->second * scale;
      csv << ',';
      if (auto it = hc.find(k); it != hc.end()) csv << it->second * scale;
      csv << ',';
      if (auto it = hl.find(k); it != hl.end()) csv << it->second * scale;
      csv << '\n';
    }
    report.csv = csv.str();
  } else if (opt.format != "json") {
    throw std::invalid_argument("unknown output format '" + opt.format + "'");
  }
  report.duration_ms = timer.ms();
  return report;
}

RunReport cmd_verify(const VerifyOptions& opt) {
  Timer timer;
  RunReport report;
  report.command = "verify";
  report.parameters = json{{"kmax", opt.properties.dims_kmax},
                           {"oracle_k", opt.properties.oracle_kmax},
                           {"cauchy_k", opt.properties.cauchy_kmax}};
  if (opt.properties.inject_fault) report.parameters["inject_fault"] = true;

  std::vector<Graph> graphs;
  if (opt.graph_file && opt.corpus)
    throw std::invalid_argument("verify: give either a graph file or --corpus, not both");
  if (opt.graph_file) {
    graphs.push_back(load_graph(*opt.graph_file, opt.graph_format));
    report.graph = graph_summary(graphs.front());
  } else if (opt.corpus) {
    const auto [count, seed] = *opt.corpus;
    std::uint64_t state = seed;
    for (int i = 0; i < count; ++i) {
      const int n = 1 + static_cast<int>(splitmix64(state) % 4);
      const int e = static_cast<int>(splitmix64(state) % 7);
      graphs.push_back(Graph::random(n, e, splitmix64(state)));
    }
    report.parameters["corpus"] = json{{"count", count}, {"seed", seed}};
    report.graph = json{{"corpus_size", count}};
  } else {
    throw std::invalid_argument("verify: need a graph file or --corpus");
  }

  bool all_pass = true;
  json per_graph = json::array();
  for (const Graph& g : graphs) {
    const auto checks = run_property_checks(g, opt.properties);
    json entry = graph_summary(g);
    json list = json::array();
    for (const auto& c : checks) list.push_back(check_to_json(c));
    entry["checks"] = list;
    per_graph.push_back(entry);
    all_pass = all_pass && all_ok(checks);
  }
  report.results = json{{"graphs", per_graph}, {"all_ok", all_pass}};
  report.exit_code = all_pass ? 0 : 1;
  report.duration_ms = timer.ms();
  return report;
}

RunReport cmd_cauchy(const Graph& g, const CauchyOptions& opt) {
  Timer timer;
  RunReport report;
  report.command = "cauchy";
  report.graph = graph_summary(g);

  const ExactMatrix a = g.adjacency();
  const double radius = opt.radius.value_or(entry_norm(a).get_d() + 1.0);
  report.parameters = json{{"k", opt.k}, {"r", radius}, {"nodes", opt.nodes}};

  const CauchyReport rec = cauchy_error_report(a, opt.k, radius, opt.nodes);
  const ComplexMatrix recon = power_via_cauchy(a, {radius, opt.k, opt.nodes});
  const ExactMatrix exact = mat_pow(a, opt.k);

  json matrix = json::array();
  json exact_rows = json::array();
  for (int i = 0; i < a.rows(); ++i) {
    json row = json::array();
    json exact_row = json::array();
    for (int j = 0; j < a.cols(); ++j) {
      row.push_back(recon.at(i, j).real());
      exact_row.push_back(exact.at(i, j).get_str());
    }
    matrix.push_back(row);
    exact_rows.push_back(exact_row);
  }
  report.results = json{{"reconstruction", matrix},
                        {"exact_power", exact_rows},
                        {"max_error", rec.max_error},
                        {"max_imag", rec.max_imag},
                        {"aliasing_bound", rec.has_bound ? json(rec.aliasing_bound) : json()},
                        {"within_bound", rec.within_bound},
                        {"rounds_exact", rec.rounds_exact}};
  report.duration_ms = timer.ms();
  return report;
}

}  // namespace gael::cli
