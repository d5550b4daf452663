#include "gael/resolvent.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gael/entropy.hpp"

namespace gael {

namespace {

// Node solves and the accumulation run in extended precision; only the final
// matrix is narrowed to complex<double>. The quadrature prefactor reaches
// r^{k+1}, so double-precision intermediates would drown the aliasing error.
using cld = std::complex<long double>;

constexpr long double kPi = std::numbers::pi_v<long double>;

// Solve (zI - A) X = I with partial pivoting; row-major n*n result.
std::vector<cld> resolvent_ld(const ExactMatrix& a, cld z) {
  const int n = a.rows();
  std::vector<cld> m(static_cast<size_t>(n) * n);
  std::vector<cld> x(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j)
      m[static_cast<size_t>(i) * n + j] = -static_cast<long double>(a.at(i, j).get_d());
    m[static_cast<size_t>(i) * n + i] += z;
    x[static_cast<size_t>(i) * n + i] = 1.0L;
  }

  for (int col = 0; col < n; ++col) {
    int pivot = col;
    long double best = std::abs(m[static_cast<size_t>(col) * n + col]);
    for (int row = col + 1; row < n; ++row) {
      const long double mag = std::abs(m[static_cast<size_t>(row) * n + col]);
      if (mag > best) {
        best = mag;
        pivot = row;
      }
    }
    if (!(best > 0.0L))
      throw std::runtime_error("resolvent: singular system (z on the spectrum?)");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(m[static_cast<size_t>(pivot) * n + j], m[static_cast<size_t>(col) * n + j]);
        std::swap(x[static_cast<size_t>(pivot) * n + j], x[static_cast<size_t>(col) * n + j]);
      }
    const cld inv = 1.0L / m[static_cast<size_t>(col) * n + col];
    for (int row = 0; row < n; ++row) {
      if (row == col) continue;
      const cld f = m[static_cast<size_t>(row) * n + col] * inv;
      if (f == cld{}) continue;
      for (int j = col; j < n; ++j)
        m[static_cast<size_t>(row) * n + j] -= f * m[static_cast<size_t>(col) * n + j];
      for (int j = 0; j < n; ++j)
        x[static_cast<size_t>(row) * n + j] -= f * x[static_cast<size_t>(col) * n + j];
    }
  }
  for (int i = 0; i < n; ++i) {
    const cld inv = 1.0L / m[static_cast<size_t>(i) * n + i];
    for (int j = 0; j < n; ++j) x[static_cast<size_t>(i) * n + j] *= inv;
  }
  return x;
}

void require_square(const ExactMatrix& a, const char* who) {
  if (!a.square()) throw std::invalid_argument(std::string(who) + ": matrix not square");
}

}  // namespace

double ComplexMatrix::entry_norm() const {
  double sum = 0.0;
  for (const auto& z : data_) sum += std::abs(z);
  return sum;
}

double ComplexMatrix::max_imag_abs() const {
  double m = 0.0;
  for (const auto& z : data_) m = std::max(m, std::abs(z.imag()));
  return m;
}

ComplexMatrix resolvent(const ExactMatrix& a, std::complex<double> z) {
  require_square(a, "resolvent");
  const auto r = resolvent_ld(a, cld(z.real(), z.imag()));
  ComplexMatrix out(a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.rows(); ++j) {
      const cld v = r[static_cast<size_t>(i) * a.rows() + j];
      if (!std::isfinite(static_cast<double>(v.real())) ||
          !std::isfinite(static_cast<double>(v.imag())))
        throw std::runtime_error("resolvent: non-finite entry");
      out.at(i, j) = {static_cast<double>(v.real()), static_cast<double>(v.imag())};
    }
  return out;
}

ComplexMatrix power_via_cauchy(const ExactMatrix& a, const QuadratureSpec& spec) {
  require_square(a, "power_via_cauchy");
  if (spec.nodes < 4 || !std::has_single_bit(spec.nodes))
    throw std::invalid_argument("power_via_cauchy: node count must be a power of two, >= 4");
  const SpectralEstimate rho = spectral_radius(a);
  if (!(spec.radius > rho.upper))
    throw std::invalid_argument("power_via_cauchy: radius must exceed the spectral upper bracket");

  const int n = a.rows();
  const unsigned m_nodes = spec.nodes;
  const long double r = spec.radius;
  std::vector<cld> acc(static_cast<size_t>(n) * n);
  for (unsigned j = 0; j < m_nodes; ++j) {
    const long double t = 2.0L * kPi * static_cast<long double>(j) / m_nodes;
    const cld node = std::polar(r, t);
    const auto res = resolvent_ld(a, node);
    const cld weight = std::polar(1.0L, t * static_cast<long double>(spec.k + 1));
    for (size_t idx = 0; idx < acc.size(); ++idx) acc[idx] += weight * res[idx];
  }
  const long double prefactor = std::pow(r, static_cast<long double>(spec.k + 1)) / m_nodes;

  ComplexMatrix out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const cld v = prefactor * acc[static_cast<size_t>(i) * n + j];
      out.at(i, j) = {static_cast<double>(v.real()), static_cast<double>(v.imag())};
    }
  return out;
}

CauchyReport cauchy_error_report(const ExactMatrix& a, unsigned k, double r, unsigned nodes) {
  CauchyReport report;
  report.k = k;
  report.nodes = nodes;
  report.radius = r;

  const ComplexMatrix recon = power_via_cauchy(a, {r, k, nodes});
  const ExactMatrix exact = mat_pow(a, k);

  bool rounds_exact = true;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.rows(); ++j) {
      const std::complex<double> v = recon.at(i, j);
      const double target = exact.at(i, j).get_d();
      report.max_error = std::max(report.max_error, std::abs(v - target));
      report.max_imag = std::max(report.max_imag, std::abs(v.imag()));
      mpz_class rounded;
      mpz_set_d(rounded.get_mpz_t(), std::round(v.real()));
      if (rounded != exact.at(i, j)) rounds_exact = false;
    }
  report.rounds_exact = rounds_exact && report.max_error < 0.5;

  const double norm_a = entry_norm(a).get_d();
  if (r > norm_a) {
    const double q_pow = std::pow(norm_a / r, static_cast<double>(nodes));
    report.aliasing_bound = std::pow(norm_a, static_cast<double>(k)) * q_pow / (1.0 - q_pow);
    report.has_bound = true;
    report.within_bound = report.max_error <= report.aliasing_bound + 1e-9;
  }
  return report;
}

ResolventBoundReport resolvent_norm_bound_check(const ExactMatrix& a, double r,
                                                unsigned samples) {
  require_square(a, "resolvent_norm_bound_check");
  if (samples == 0) throw std::invalid_argument("resolvent_norm_bound_check: no samples");
  const double norm_a = entry_norm(a).get_d();
  if (!(r > norm_a))
    throw std::invalid_argument("resolvent_norm_bound_check: requires r > ||A||");

  ResolventBoundReport report;
  report.radius = r;
  report.samples = samples;
  report.bound = (a.rows() + norm_a / (r - norm_a)) / r;
  for (unsigned j = 0; j < samples; ++j) {
    const double t = 2.0 * std::numbers::pi * j / samples;
    const ComplexMatrix res = resolvent(a, std::polar(r, t));
    report.max_observed = std::max(report.max_observed, res.entry_norm());
  }
  report.ok = report.max_observed <= report.bound + 1e-9;
  return report;
}

}  // namespace gael
