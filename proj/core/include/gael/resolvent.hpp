#pragma once

#include <complex>
#include <vector>

#include "gael/exact_matrix.hpp"

namespace gael {

/// Square matrix of complex doubles (numerical side of the library).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(int n) : n_(n), data_(static_cast<size_t>(n) * n) {}

  int n() const noexcept { return n_; }
  const std::complex<double>& at(int i, int j) const { return data_[static_cast<size_t>(i) * n_ + j]; }
  std::complex<double>& at(int i, int j) { return data_[static_cast<size_t>(i) * n_ + j]; }

  /// Entrywise norm: sum of moduli.
  double entry_norm() const;
  double max_imag_abs() const;

 private:
  int n_ = 0;
  std::vector<std::complex<double>> data_;
};

/// (zI - A)^{-1} by pivoted elimination. Throws when the shifted system is
/// numerically singular (z too close to an eigenvalue).
ComplexMatrix resolvent(const ExactMatrix& a, std::complex<double> z);

/// Contour quadrature request: M equispaced nodes on the circle of radius r,
/// reconstructing A^k. r must exceed the certified spectral upper bracket and
/// M must be a power of two, at least 4.
struct QuadratureSpec {
  double radius = 0.0;
  unsigned k = 0;
  unsigned nodes = 0;
};

/// Trapezoidal discretization of the Cauchy integral
///   A^k = (r^{k+1} / 2 pi) * integral of e^{it(k+1)} (r e^{it} - A)^{-1} dt.
/// On equispaced nodes the rule is exact up to the aliasing tail
///   sum_{j>=1} A^{k+jM} / r^{jM},
/// which is what makes the error bound checkable rather than heuristic.
ComplexMatrix power_via_cauchy(const ExactMatrix& a, const QuadratureSpec& spec);

struct CauchyReport {
  unsigned k = 0;
  unsigned nodes = 0;
  double radius = 0.0;
  double max_error = 0.0;       // max entrywise |reconstruction - A^k|
  double max_imag = 0.0;
  double aliasing_bound = 0.0;  // ||A||^k q^M / (1 - q^M), q = ||A||/r; needs r > ||A||
  bool has_bound = false;
  bool within_bound = false;    // max_error <= aliasing_bound + 1e-9
  bool rounds_exact = false;    // entrywise rounding reproduces A^k and error < 0.5
};

CauchyReport cauchy_error_report(const ExactMatrix& a, unsigned k, double r, unsigned nodes);

struct ResolventBoundReport {
  double radius = 0.0;
  unsigned samples = 0;
  double bound = 0.0;        // (1/r)(n + ||A|| / (r - ||A||))
  double max_observed = 0.0;
  bool ok = false;
};

/// Checks ||(r e^{it} - A)^{-1}|| <= (1/r)(n + ||A||/(r - ||A||)) on a sweep
/// of equispaced angles. Requires r > ||A||.
ResolventBoundReport resolvent_norm_bound_check(const ExactMatrix& a, double r,
                                                unsigned samples);

}  // namespace gael
