#pragma once

#include <utility>
#include <vector>

#include "gael/exact_matrix.hpp"
#include "gael/filtration.hpp"
#include "gael/graph.hpp"

namespace gael {

/// ln of a positive big integer, computed from the top machine word and the
/// bit length; |error| < 1e-12 with no lossy full conversion.
double log_big(const mpz_class& value);

/// Entropy data extracted from one dimension sequence.
///
/// per_k holds (k, ln(d_k)/k) for every k >= 1 with d_k > 0 -- the quantity
/// whose limsup defines the entropy. tail_estimate is the max of those values
/// over the tail window. growth_estimate is the max over the same window of
/// the long-baseline slope (ln d_k - ln d_{k/2}) / (k - k/2); the slope
/// cancels the subexponential factor of d_k, so it converges to the same
/// limit with O(1/k) bias instead of O(ln k / k) and is what chain
/// verification compares against ln rho.
struct EntropyEstimate {
  std::vector<std::pair<unsigned, double>> per_k;
  double tail_estimate = 0.0;
  double growth_estimate = 0.0;
  bool finite_dimensional = false;
  unsigned window_begin = 0;
  unsigned window_end = 0;
};

EntropyEstimate entropy_estimate(const DimSequence& d, double window_fraction = 0.5);

/// Spectral radius with certified brackets: lower from exact closed-walk
/// counts (diagonal entries of A^k), upper from exact norms of doubling
/// powers, both refined by power iteration on A + I (the shift makes the
/// Perron value strictly dominant), run per strongly connected component so
/// reducible matrices converge too.
struct SpectralEstimate {
  double rho = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  unsigned iterations = 0;
  bool converged = false;
};

SpectralEstimate spectral_radius(const ExactMatrix& a, double rel_tol = 1e-13,
                                 unsigned max_iterations = 200000);

/// ln rho(A); exactly 0 for nilpotent A (the finite-dimensional case).
double closed_form_entropy(const ExactMatrix& a);

/// Outcome of comparing the three standard-filtration entropies of a graph.
struct ChainReport {
  EntropyEstimate path;
  EntropyEstimate cohn;
  EntropyEstimate leavitt;
  double closed_form = 0.0;
  double tol = 0.0;
  double window_fraction = 0.0;
  unsigned kmax = 0;
  bool sandwich_ok = false;  // d^path_k <= d^leavitt_k <= d^cohn_k for all k
  bool tails_ok = false;     // every growth estimate within tol of ln rho
  bool chain_ok = false;
};

ChainReport verify_chain(const Graph& g, unsigned kmax, double tol,
                         double window_fraction = 0.8);

/// Exact rational verification of ||A^k|| <= r^k (n + ||A|| / (r - ||A||))
/// and of the summed variant with factor squared times (k+1). Requires
/// r > ||A||, the regime where the geometric series behind the bound
/// converges; rho(A) < r <= ||A|| is accepted in report-only mode.
struct NormBoundReport {
  mpq_class r;
  unsigned kmax = 0;
  bool asserted = false;  // false: observed only (rho < r <= ||A||)
  std::vector<unsigned> power_violations;
  std::vector<unsigned> sum_violations;
  bool ok = false;
};

NormBoundReport norm_bound_check(const ExactMatrix& a, const mpq_class& r, unsigned kmax);

}  // namespace gael
