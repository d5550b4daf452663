#include "gael/filtration.hpp"

#include <stdexcept>

namespace gael {

namespace {

void check_x(const ExactMatrix& a, std::span<const int> x) {
  for (int v : x) {
    if (v < 0 || v >= a.rows())
      throw std::invalid_argument("relative dimension: X contains an unknown vertex index");
    bool emits = false;
    for (int j = 0; j < a.cols() && !emits; ++j) emits = a.at(v, j) != 0;
    if (!emits)
      throw std::invalid_argument("relative dimension: X contains a sink");
  }
}

// sum over s+t=k of sum_{v in subset} P_s(v) P_t(v)
mpz_class pair_count_over(const std::vector<std::vector<mpz_class>>& ptable,
                          std::span<const int> subset, unsigned k) {
  mpz_class total = 0;
  for (unsigned s = 0; s <= k; ++s) {
    const auto& ps = ptable[s];
    const auto& pt = ptable[k - s];
    for (int v : subset) total += ps[v] * pt[v];
  }
  return total;
}

std::vector<int> all_indices(int n) {
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  return idx;
}

}  // namespace

std::string_view to_string(AlgebraKind kind) {
  switch (kind) {
    case AlgebraKind::Path: return "path";
    case AlgebraKind::Cohn: return "cohn";
    case AlgebraKind::Leavitt: return "leavitt";
    case AlgebraKind::Relative: return "relative";
  }
  return "?";
}

AlgebraKind algebra_kind_from_string(std::string_view name) {
  if (name == "path") return AlgebraKind::Path;
  if (name == "cohn") return AlgebraKind::Cohn;
  if (name == "leavitt") return AlgebraKind::Leavitt;
  if (name == "relative") return AlgebraKind::Relative;
  throw std::invalid_argument("unknown algebra kind '" + std::string(name) + "'");
}

mpz_class graded_dim_path(const ExactMatrix& a, unsigned k) {
  return entry_norm(mat_pow(a, k));
}

std::vector<mpz_class> cohn_dim_prefix(const ExactMatrix& a, unsigned kmax) {
  const auto pow_a = prefix_powers(a, kmax);
  const auto pow_at = prefix_powers(a.transpose(), kmax);
  std::vector<mpz_class> dims(kmax + 1);
  for (unsigned k = 0; k <= kmax; ++k) {
    mpz_class sum = 0;
    for (unsigned s = 0; s <= k; ++s) sum += entry_norm(mat_mul(pow_a[s], pow_at[k - s]));
    dims[k] = sum;
  }
  return dims;
}

mpz_class graded_dim_cohn(const ExactMatrix& a, unsigned k) {
  return cohn_dim_prefix(a, k).back();
}

mpz_class path_pair_count(const ExactMatrix& a, unsigned k) {
  const auto ptable = path_count_table(a, k);
  const auto every = all_indices(a.rows());
  return pair_count_over(ptable, every, k);
}

std::vector<mpz_class> relative_dim_prefix(const ExactMatrix& a, std::span<const int> x,
                                           unsigned kmax) {
  check_x(a, x);
  const auto ptable = path_count_table(a, kmax);
  const auto every = all_indices(a.rows());
  std::vector<mpz_class> dims(kmax + 1);
  for (unsigned k = 0; k <= kmax; ++k) {
    dims[k] = pair_count_over(ptable, every, k);
    if (k >= 2) dims[k] -= pair_count_over(ptable, x, k - 2);
  }
  return dims;
}

mpz_class graded_dim_relative(const ExactMatrix& a, std::span<const int> x, unsigned k) {
  return relative_dim_prefix(a, x, k).back();
}

DimSequence dim_sequence(const Graph& g, AlgebraKind kind, unsigned kmax) {
  const ExactMatrix a = g.adjacency();
  DimSequence seq;
  seq.kind = kind;
  seq.graph_id = g.id();
  switch (kind) {
    case AlgebraKind::Path: {
      const auto powers = prefix_powers(a, kmax);
      seq.dims.reserve(kmax + 1);
      for (const auto& p : powers) seq.dims.push_back(entry_norm(p));
      break;
    }
    case AlgebraKind::Cohn:
      seq.dims = cohn_dim_prefix(a, kmax);
      break;
    case AlgebraKind::Leavitt:
      seq.x = g.regular_indices();
      seq.dims = relative_dim_prefix(a, seq.x, kmax);
      break;
    case AlgebraKind::Relative:
      seq.x = g.x_indices();
      seq.dims = relative_dim_prefix(a, seq.x, kmax);
      break;
  }
  seq.finite_dimensional = is_nilpotent(a);

  // d_0 and d_1 are vertex/edge counts by definition; the general formulas
  // must reproduce them.
  const mpz_class d0 = g.vertex_count();
  const mpz_class d1 = kind == AlgebraKind::Path ? mpz_class(g.edge_count())
                                                 : mpz_class(2 * g.edge_count());
  if (seq.dims[0] != d0) throw std::logic_error("dim_sequence: d_0 != |E^0|");
  if (kmax >= 1 && seq.dims[1] != d1) throw std::logic_error("dim_sequence: d_1 mismatch");
  return seq;
}

}  // namespace gael
