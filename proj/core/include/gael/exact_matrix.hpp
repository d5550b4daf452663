#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <vector>

namespace gael {

/// Dense matrix of arbitrary-precision integers. Graded dimensions grow like
/// rho(A)^k, which overflows any fixed-width integer long before the default
/// sequence depth, so every entry is an mpz.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(int rows, int cols);

  static ExactMatrix identity(int n);
  static ExactMatrix from_rows(std::initializer_list<std::initializer_list<long>> rows);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  const mpz_class& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }
  mpz_class& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }

  ExactMatrix transpose() const;
  bool is_zero() const;

  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpz_class> data_;
};

/// Per-vertex counts of length-k paths by range vertex: counts[j] is the
/// number of paths of length k ending at vertex j (column sums of A^k).
struct PathCountVector {
  unsigned k = 0;
  std::vector<mpz_class> counts;
};

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

/// A^k by iterated multiplication; A^0 = I.
ExactMatrix mat_pow(const ExactMatrix& a, unsigned k);

/// [A^0, A^1, ..., A^kmax] in one pass. The dimension pipeline consumes every
/// intermediate power, so this is the workhorse rather than binary powering.
std::vector<ExactMatrix> prefix_powers(const ExactMatrix& a, unsigned kmax);

/// Entrywise norm: sum of |a_ij| over all entries.
mpz_class entry_norm(const ExactMatrix& a);

PathCountVector path_count_vector(const ExactMatrix& a, unsigned k);

/// table[s][j] = number of length-s paths ending at vertex j, s = 0..kmax.
std::vector<std::vector<mpz_class>> path_count_table(const ExactMatrix& a, unsigned kmax);

/// True iff A^n = 0 (n the dimension); equivalent to the graph being acyclic.
bool is_nilpotent(const ExactMatrix& a);

}  // namespace gael
