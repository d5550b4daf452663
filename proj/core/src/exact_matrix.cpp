#include "gael/exact_matrix.hpp"

#include <stdexcept>

namespace gael {

ExactMatrix::ExactMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("ExactMatrix: negative dimension");
}

ExactMatrix ExactMatrix::identity(int n) {
  ExactMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r > 0 ? static_cast<int>(rows.begin()->size()) : 0;
  ExactMatrix m(r, c);
  int i = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c)
      throw std::invalid_argument("ExactMatrix: ragged rows");
    int j = 0;
    for (long v : row) m.at(i, j++) = v;
    ++i;
  }
  return m;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool ExactMatrix::is_zero() const {
  for (const auto& v : data_)
    if (v != 0) return false;
  return true;
}

bool operator==(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
  for (size_t i = 0; i < a.data_.size(); ++i)
    if (a.data_[i] != b.data_[i]) return false;
  return true;
}

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mat_mul: dimension mismatch");
  ExactMatrix c(a.rows(), b.cols());
  mpz_class acc;
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < b.cols(); ++j) {
      acc = 0;
      for (int k = 0; k < a.cols(); ++k) acc += a.at(i, k) * b.at(k, j);
      c.at(i, j) = acc;
    }
  }
  return c;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) { return mat_mul(a, b); }

ExactMatrix mat_pow(const ExactMatrix& a, unsigned k) {
  if (!a.square()) throw std::invalid_argument("mat_pow: matrix not square");
  ExactMatrix p = ExactMatrix::identity(a.rows());
  for (unsigned i = 0; i < k; ++i) p = mat_mul(p, a);
  return p;
}

std::vector<ExactMatrix> prefix_powers(const ExactMatrix& a, unsigned kmax) {
  if (!a.square()) throw std::invalid_argument("prefix_powers: matrix not square");
  std::vector<ExactMatrix> powers;
  powers.reserve(kmax + 1);
  powers.push_back(ExactMatrix::identity(a.rows()));
  for (unsigned k = 1; k <= kmax; ++k) powers.push_back(mat_mul(powers.back(), a));
  return powers;
}

mpz_class entry_norm(const ExactMatrix& a) {
  mpz_class sum = 0;
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) sum += abs(a.at(i, j));
  return sum;
}

PathCountVector path_count_vector(const ExactMatrix& a, unsigned k) {
  if (!a.square()) throw std::invalid_argument("path_count_vector: matrix not square");
  const ExactMatrix p = mat_pow(a, k);
  PathCountVector out;
  out.k = k;
  out.counts.assign(a.cols(), mpz_class(0));
  for (int j = 0; j < a.cols(); ++j)
    for (int i = 0; i < a.rows(); ++i) out.counts[j] += p.at(i, j);
  return out;
}

std::vector<std::vector<mpz_class>> path_count_table(const ExactMatrix& a, unsigned kmax) {
  if (!a.square()) throw std::invalid_argument("path_count_table: matrix not square");
  const int n = a.cols();
  std::vector<std::vector<mpz_class>> table(kmax + 1, std::vector<mpz_class>(n));
  for (int j = 0; j < n; ++j) table[0][j] = 1;
  // P_{k+1}(w) = sum_v P_k(v) * A[v][w]
  for (unsigned k = 1; k <= kmax; ++k)
    for (int w = 0; w < n; ++w) {
      mpz_class acc = 0;
      for (int v = 0; v < n; ++v) acc += table[k - 1][v] * a.at(v, w);
      table[k][w] = acc;
    }
  return table;
}

bool is_nilpotent(const ExactMatrix& a) {
  if (!a.square()) throw std::invalid_argument("is_nilpotent: matrix not square");
  return mat_pow(a, static_cast<unsigned>(a.rows())).is_zero();
}

}  // namespace gael
