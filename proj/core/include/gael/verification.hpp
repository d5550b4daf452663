#pragma once

#include <string>
#include <vector>

#include "gael/graph.hpp"

namespace gael {

struct CheckResult {
  std::string name;
  bool ok = false;
  std::string details;
};

struct PropertyOptions {
  unsigned dims_kmax = 30;     // depth for sandwich / identity / monotonicity
  unsigned oracle_kmax = 6;    // depth for formula-vs-oracle comparison
  unsigned cauchy_kmax = 10;   // powers reconstructed through the contour rule
  unsigned cauchy_nodes = 512;
  unsigned norm_bound_kmax = 20;
  size_t oracle_cap = 20000;
  bool inject_fault = false;   // negative control: corrupt one value on purpose
};

/// Runs the per-graph property suite: graded sandwich, the norm-sum vs
/// pair-count identity, formula-vs-oracle agreement, monotonicity in X,
/// the exact norm bounds, and the Cauchy reconstruction. One result per check.
std::vector<CheckResult> run_property_checks(const Graph& g,
                                             const PropertyOptions& opt = {});

bool all_ok(const std::vector<CheckResult>& results);

}  // namespace gael
