#pragma once

#include <optional>
#include <string>

#include "gael/graph.hpp"
#include "gael/verification.hpp"
#include "report.hpp"

namespace gael::cli {

/// Reads a graph document from disk; format "json" or "edges".
/// Throws std::invalid_argument / std::runtime_error on bad input.
Graph load_graph(const std::string& file, const std::string& format);

struct DimsOptions {
  std::string kind = "path";
  unsigned kmax = 200;
  std::string format = "json";  // or "csv"
};

struct EntropyOptions {
  unsigned kmax = 200;
  double tol = 0.05;
  double window_fraction = 0.8;
  std::string base = "e";       // or "2"
  std::string format = "json";
};

struct VerifyOptions {
  std::optional<std::string> graph_file;
  std::string graph_format = "json";
  std::optional<std::pair<int, std::uint64_t>> corpus;  // count, seed
  PropertyOptions properties;
};

struct CauchyOptions {
  unsigned k = 5;
  std::optional<double> radius;  // defaults to ||A|| + 1
  unsigned nodes = 512;
};

RunReport cmd_info(const Graph& g);
RunReport cmd_dims(const Graph& g, const DimsOptions& opt);
RunReport cmd_entropy(const Graph& g, const EntropyOptions& opt);
RunReport cmd_verify(const VerifyOptions& opt);
RunReport cmd_cauchy(const Graph& g, const CauchyOptions& opt);

}  // namespace gael::cli
