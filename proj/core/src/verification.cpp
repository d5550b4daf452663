#include "gael/verification.hpp"

#include <algorithm>
#include <sstream>

#include "gael/entropy.hpp"
#include "gael/exact_matrix.hpp"
#include "gael/filtration.hpp"
#include "gael/resolvent.hpp"
#include "gael/rewrite_oracle.hpp"

namespace gael {

namespace {

CheckResult check_sandwich(const Graph& g, const ExactMatrix& a, unsigned kmax) {
  CheckResult r{"sandwich", true, ""};
  const auto reg = g.regular_indices();
  const auto& x = g.x_indices();
  const auto path = prefix_powers(a, kmax);
  const auto leavitt = relative_dim_prefix(a, reg, kmax);
  const auto relative = relative_dim_prefix(a, x, kmax);
  const auto cohn = cohn_dim_prefix(a, kmax);
  for (unsigned k = 0; k <= kmax; ++k) {
    const mpz_class p = entry_norm(path[k]);
    if (!(p <= leavitt[k] && leavitt[k] <= relative[k] && relative[k] <= cohn[k])) {
      r.ok = false;
      r.details = "violated at k=" + std::to_string(k);
      break;
    }
  }
  return r;
}

CheckResult check_cohn_identity(const ExactMatrix& a, unsigned kmax, bool inject_fault) {
  CheckResult r{"cohn_norm_identity", true, ""};
  auto norm_route = cohn_dim_prefix(a, kmax);
  if (inject_fault && kmax >= 3) norm_route[3] += 1;
  for (unsigned k = 0; k <= kmax; ++k) {
    if (norm_route[k] != path_pair_count(a, k)) {
      r.ok = false;
      r.details = "norm route != pair count at k=" + std::to_string(k);
      break;
    }
  }
  return r;
}

CheckResult check_oracle(const Graph& g, const ExactMatrix& a, unsigned oracle_kmax,
                         size_t cap) {
  CheckResult r{"oracle_equivalence", true, ""};
  const std::vector<std::vector<int>> x_sets = {
      {}, g.x_indices(), g.regular_indices()};
  for (const auto& x : x_sets) {
    CohnOracle oracle(g, x, cap);
    for (unsigned k = 0; k <= oracle_kmax; ++k) {
      mpz_class brute;
      try {
        brute = oracle.graded_dim_bruteforce(k);
      } catch (const std::runtime_error&) {
        r.details = "depth limited by word cap at k=" + std::to_string(k);
        break;  // instance guard: smaller depths were still compared
      }
      if (brute != graded_dim_relative(a, x, k)) {
        r.ok = false;
        r.details = "formula disagrees with oracle at k=" + std::to_string(k);
        return r;
      }
    }
  }
  return r;
}

CheckResult check_monotonicity(const Graph& g, const ExactMatrix& a, unsigned kmax) {
  CheckResult r{"x_monotonicity", true, ""};
  const auto reg = g.regular_indices();
  if (reg.size() <= 4) {
    // every inclusion pair X subset of X + {v}
    const size_t subsets = size_t(1) << reg.size();
    for (size_t bits = 0; bits < subsets && r.ok; ++bits) {
      std::vector<int> x;
      for (size_t i = 0; i < reg.size(); ++i)
        if (bits & (size_t(1) << i)) x.push_back(reg[i]);
      const auto dx = relative_dim_prefix(a, x, kmax);
      for (size_t i = 0; i < reg.size() && r.ok; ++i) {
        if (bits & (size_t(1) << i)) continue;
        std::vector<int> y = x;
        y.push_back(reg[i]);
        std::sort(y.begin(), y.end());
        const auto dy = relative_dim_prefix(a, y, kmax);
        for (unsigned k = 0; k <= kmax; ++k)
          if (dy[k] > dx[k]) {
            r.ok = false;
            r.details = "adding a vertex to X raised d_" + std::to_string(k);
            break;
          }
      }
    }
  } else {
    const auto empty = relative_dim_prefix(a, std::vector<int>{}, kmax);
    const auto mid = relative_dim_prefix(a, g.x_indices(), kmax);
    const auto full = relative_dim_prefix(a, reg, kmax);
    for (unsigned k = 0; k <= kmax; ++k)
      if (!(full[k] <= mid[k] && mid[k] <= empty[k])) {
        r.ok = false;
        r.details = "chain {} < X < Reg violated at k=" + std::to_string(k);
        break;
      }
  }
  return r;
}

CheckResult check_norm_bounds(const ExactMatrix& a, unsigned kmax) {
  CheckResult r{"norm_bounds", true, ""};
  const mpz_class norm_a = entry_norm(a);
  for (const mpq_class& radius : {mpq_class(norm_a + 1), mpq_class(2 * norm_a + 1)}) {
    const NormBoundReport report = norm_bound_check(a, radius, kmax);
    if (!report.ok) {
      r.ok = false;
      std::ostringstream msg;
      msg << "violated at r=" << radius.get_str();
      r.details = msg.str();
      break;
    }
  }
  return r;
}

CheckResult check_cauchy(const ExactMatrix& a, unsigned kmax, unsigned nodes) {
  CheckResult r{"cauchy_reconstruction", true, ""};
  const double radius = entry_norm(a).get_d() + 1.0;
  for (unsigned k = 0; k <= kmax; ++k) {
    const CauchyReport report = cauchy_error_report(a, k, radius, nodes);
    if (!(report.rounds_exact && report.within_bound && report.max_imag <= 1e-8)) {
      std::ostringstream msg;
      msg << "k=" << k << " error=" << report.max_error << " bound=" << report.aliasing_bound
          << " imag=" << report.max_imag;
      r.ok = false;
      r.details = msg.str();
      break;
    }
  }
  return r;
}

}  // namespace

std::vector<CheckResult> run_property_checks(const Graph& g, const PropertyOptions& opt) {
  const ExactMatrix a = g.adjacency();
  std::vector<CheckResult> results;
  results.push_back(check_sandwich(g, a, opt.dims_kmax));
  results.push_back(check_cohn_identity(a, opt.dims_kmax, opt.inject_fault));
  results.push_back(check_oracle(g, a, opt.oracle_kmax, opt.oracle_cap));
  results.push_back(check_monotonicity(g, a, opt.dims_kmax));
  results.push_back(check_norm_bounds(a, opt.norm_bound_kmax));
  results.push_back(check_cauchy(a, opt.cauchy_kmax, opt.cauchy_nodes));
  return results;
}

bool all_ok(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.ok; });
}

}  // namespace gael
