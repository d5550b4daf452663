#include "gael/entropy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace gael {

namespace {

// --- strongly connected components (Kosaraju) -------------------------------

struct SccDecomposition {
  std::vector<std::vector<int>> components;
};

SccDecomposition strongly_connected_components(const ExactMatrix& a) {
  const int n = a.rows();
  std::vector<std::vector<int>> fwd(n), rev(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a.at(i, j) != 0) {
        fwd[i].push_back(j);
        rev[j].push_back(i);
      }

  std::vector<int> order;
  std::vector<bool> seen(n, false);
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    // iterative post-order
    std::vector<std::pair<int, size_t>> stack{{start, 0}};
    seen[start] = true;
    while (!stack.empty()) {
      auto& [v, next] = stack.back();
      if (next < fwd[v].size()) {
        const int w = fwd[v][next++];
        if (!seen[w]) {
          seen[w] = true;
          stack.emplace_back(w, 0);
        }
      } else {
        order.push_back(v);
        stack.pop_back();
      }
    }
  }

  SccDecomposition out;
  std::vector<bool> assigned(n, false);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (assigned[*it]) continue;
    std::vector<int> comp{*it};
    assigned[*it] = true;
    std::vector<int> stack{*it};
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int w : rev[v])
        if (!assigned[w]) {
          assigned[w] = true;
          comp.push_back(w);
          stack.push_back(w);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.components.push_back(std::move(comp));
  }
  return out;
}

// --- Collatz-Wielandt bracket on one component ------------------------------

struct CwBracket {
  double lo = 0.0;  // bracket for rho(B), B = block + I
  double hi = std::numeric_limits<double>::infinity();
  unsigned iterations = 0;
  bool converged = false;
};

CwBracket collatz_wielandt(const std::vector<std::vector<double>>& b, double rel_tol,
                           unsigned max_iter) {
  const size_t m = b.size();
  std::vector<double> x(m, 1.0), y(m);
  CwBracket out;
  for (unsigned it = 1; it <= max_iter; ++it) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    double ymax = 0.0;
    for (size_t i = 0; i < m; ++i) {
      double acc = 0.0;
      for (size_t j = 0; j < m; ++j) acc += b[i][j] * x[j];
      y[i] = acc;
      const double ratio = acc / x[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
      ymax = std::max(ymax, acc);
    }
    out.lo = std::max(out.lo, lo);
    out.hi = std::min(out.hi, hi);
    out.iterations = it;
    // rel_tol is interpreted against the unshifted value rho(B) - 1
    if (out.hi - out.lo <= rel_tol * std::max(out.lo - 1.0, 1e-30)) {
      out.converged = true;
      break;
    }
    for (size_t i = 0; i < m; ++i) x[i] = y[i] / ymax;
  }
  return out;
}

double nth_root(const mpz_class& value, unsigned k) {
  return value == 0 ? 0.0 : std::exp(log_big(value) / static_cast<double>(k));
}

}  // namespace

double log_big(const mpz_class& value) {
  if (value <= 0) throw std::domain_error("log_big: argument must be positive");
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, value.get_mpz_t());
  return std::log(mant) + static_cast<double>(exp2) * std::numbers::ln2;
}

EntropyEstimate entropy_estimate(const DimSequence& d, double window_fraction) {
  if (d.dims.empty()) throw std::invalid_argument("entropy_estimate: empty sequence");
  if (window_fraction < 0.0 || window_fraction > 1.0)
    throw std::invalid_argument("entropy_estimate: window_fraction outside [0,1]");

  const unsigned kmax = static_cast<unsigned>(d.dims.size()) - 1;
  bool any_positive = false;
  for (const auto& v : d.dims)
    if (v > 0) {
      any_positive = true;
      break;
    }
  if (!any_positive && !d.finite_dimensional)
    throw std::invalid_argument("entropy_estimate: all-zero sequence not flagged finite dimensional");

  EntropyEstimate e;
  e.finite_dimensional = d.finite_dimensional;
  e.window_begin = static_cast<unsigned>(
      std::ceil(window_fraction * static_cast<double>(kmax)));
  e.window_end = kmax;

  for (unsigned k = 1; k <= kmax; ++k)
    if (d.dims[k] > 0) e.per_k.emplace_back(k, log_big(d.dims[k]) / k);

  if (e.finite_dimensional) return e;  // entropy 0 by definition

  for (const auto& [k, h] : e.per_k)
    if (k >= e.window_begin) e.tail_estimate = std::max(e.tail_estimate, h);

  for (unsigned k = std::max(e.window_begin, 1u); k <= kmax; ++k) {
    const unsigned j = k / 2;
    if (d.dims[k] <= 0 || d.dims[j] <= 0) continue;
    const double slope = (log_big(d.dims[k]) - log_big(d.dims[j])) / (k - j);
    e.growth_estimate = std::max(e.growth_estimate, slope);
  }
  return e;
}

SpectralEstimate spectral_radius(const ExactMatrix& a, double rel_tol,
                                 unsigned max_iterations) {
  if (!a.square()) throw std::invalid_argument("spectral_radius: matrix not square");
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      if (a.at(i, j) < 0)
        throw std::invalid_argument("spectral_radius: negative entry");

  SpectralEstimate est;
  const int n = a.rows();
  if (n == 0 || is_nilpotent(a)) {
    est.converged = true;
    return est;  // rho = 0 exactly
  }

  // Exact Gelfand data. Lower: closed-walk counts, rho^k >= (A^k)_{ii}.
  // Upper: ||.|| is submultiplicative, so rho <= ||A^{2^m}||^{1/2^m}.
  double lower = 0.0;
  double upper = std::numeric_limits<double>::infinity();
  const auto walk_powers = prefix_powers(a, static_cast<unsigned>(2 * n));
  for (unsigned k = 1; k < walk_powers.size(); ++k) {
    mpz_class diag_max = 0;
    for (int i = 0; i < n; ++i) diag_max = std::max(diag_max, walk_powers[k].at(i, i));
    lower = std::max(lower, nth_root(diag_max, k));
  }
  ExactMatrix doubled = a;
  for (unsigned m = 0, k = 1; m <= 6; ++m, k *= 2) {
    upper = std::min(upper, nth_root(entry_norm(doubled), k));
    if (m < 6) doubled = mat_mul(doubled, doubled);
  }

  // Refinement: rho(A) is the max over strongly connected components, and on
  // each component the shifted block is primitive, so the ratio brackets of
  // the power iteration converge geometrically.
  const auto scc = strongly_connected_components(a);
  double point = 0.0;
  double cw_lower = 0.0;
  double cw_upper = 0.0;
  bool all_converged = true;
  for (const auto& comp : scc.components) {
    const size_t m = comp.size();
    std::vector<std::vector<double>> block(m, std::vector<double>(m, 0.0));
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) block[i][j] = a.at(comp[i], comp[j]).get_d();
    if (m == 1) {
      if (block[0][0] == 0.0) continue;  // no cycle through this vertex
      const double loops = block[0][0];
      point = std::max(point, loops);
      cw_lower = std::max(cw_lower, loops);
      cw_upper = std::max(cw_upper, loops);
      continue;
    }
    for (size_t i = 0; i < m; ++i) block[i][i] += 1.0;
    const CwBracket cw = collatz_wielandt(block, rel_tol / 4.0, max_iterations);
    est.iterations += cw.iterations;
    all_converged = all_converged && cw.converged;
    cw_lower = std::max(cw_lower, cw.lo - 1.0);
    cw_upper = std::max(cw_upper, cw.hi - 1.0);
    point = std::max(point, (cw.lo + cw.hi) / 2.0 - 1.0);
  }

  lower = std::max(lower, cw_lower);
  upper = std::min(upper, cw_upper);
  // pad outward so floating rounding cannot push the true value off a
  // bracket; small enough relative to rel_tol that convergence still reports
  const double pad = std::min(1e-12, rel_tol / 8.0);
  lower *= 1.0 - pad;
  upper *= 1.0 + pad;
  if (upper < lower) upper = lower;

  est.lower = lower;
  est.upper = upper;
  est.rho = std::clamp(point, lower, upper);
  est.converged = all_converged && upper - lower <= rel_tol * std::max(lower, 1e-30);
  return est;
}

double closed_form_entropy(const ExactMatrix& a) {
  if (is_nilpotent(a)) return 0.0;  // finite-dimensional clause
  const SpectralEstimate est = spectral_radius(a);
  // a non-nilpotent integer matrix has a cycle, so rho >= 1
  return std::log(std::max(est.rho, 1.0));
}

ChainReport verify_chain(const Graph& g, unsigned kmax, double tol,
                         double window_fraction) {
  if (kmax < 10) throw std::invalid_argument("verify_chain: kmax must be at least 10");
  ChainReport report;
  report.kmax = kmax;
  report.tol = tol;
  report.window_fraction = window_fraction;

  const DimSequence dp = dim_sequence(g, AlgebraKind::Path, kmax);
  const DimSequence dl = dim_sequence(g, AlgebraKind::Leavitt, kmax);
  const DimSequence dc = dim_sequence(g, AlgebraKind::Cohn, kmax);

  report.sandwich_ok = true;
  for (unsigned k = 0; k <= kmax; ++k)
    if (!(dp.dims[k] <= dl.dims[k] && dl.dims[k] <= dc.dims[k])) {
      report.sandwich_ok = false;
      break;
    }

  report.path = entropy_estimate(dp, window_fraction);
  report.leavitt = entropy_estimate(dl, window_fraction);
  report.cohn = entropy_estimate(dc, window_fraction);
  report.closed_form = closed_form_entropy(g.adjacency());

  report.tails_ok = std::abs(report.path.growth_estimate - report.closed_form) <= tol &&
                    std::abs(report.leavitt.growth_estimate - report.closed_form) <= tol &&
                    std::abs(report.cohn.growth_estimate - report.closed_form) <= tol;
  report.chain_ok = report.sandwich_ok && report.tails_ok;
  return report;
}

NormBoundReport norm_bound_check(const ExactMatrix& a, const mpq_class& r, unsigned kmax) {
  if (!a.square()) throw std::invalid_argument("norm_bound_check: matrix not square");
  const mpz_class norm_a = entry_norm(a);
  const mpq_class norm_a_q(norm_a);
  if (r == norm_a_q)
    throw std::invalid_argument("norm_bound_check: r = ||A|| leaves the bound undefined");
  if (r < norm_a_q) {
    const SpectralEstimate rho = spectral_radius(a);
    if (mpq_class(r).get_d() <= rho.upper)
      throw std::invalid_argument("norm_bound_check: r must exceed the spectral radius");
  }

  NormBoundReport report;
  report.r = r;
  report.kmax = kmax;
  report.asserted = r > norm_a_q;

  // factor = n + ||A|| / (r - ||A||), exact rational
  mpq_class factor(a.rows());
  factor += norm_a_q / (r - norm_a_q);

  const auto pow_a = prefix_powers(a, kmax);
  const auto pow_at = prefix_powers(a.transpose(), kmax);
  mpq_class r_pow(1);
  for (unsigned k = 0; k <= kmax; ++k) {
    const mpq_class power_bound = r_pow * factor;
    if (mpq_class(entry_norm(pow_a[k])) > power_bound) report.power_violations.push_back(k);

    mpz_class norm_sum = 0;
    for (unsigned s = 0; s <= k; ++s) norm_sum += entry_norm(mat_mul(pow_a[s], pow_at[k - s]));
    const mpq_class sum_bound = r_pow * factor * factor * mpq_class(k + 1);
    if (mpq_class(norm_sum) > sum_bound) report.sum_violations.push_back(k);

    r_pow *= r;
  }
  report.ok = report.power_violations.empty() && report.sum_violations.empty();
  return report;
}

}  // namespace gael
