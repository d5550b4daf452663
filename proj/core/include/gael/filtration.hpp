#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gael/exact_matrix.hpp"
#include "gael/graph.hpp"

namespace gael {

/// Which standard filtration a dimension sequence belongs to. Leavitt is the
/// relative algebra at X = Reg(E); Cohn is the relative algebra at X = {}.
enum class AlgebraKind { Path, Cohn, Leavitt, Relative };

std::string_view to_string(AlgebraKind kind);
AlgebraKind algebra_kind_from_string(std::string_view name);

/// Graded dimensions d_k = dim(V_k / V_{k-1}) of a standard filtration.
struct DimSequence {
  AlgebraKind kind = AlgebraKind::Path;
  std::string graph_id;
  std::vector<int> x;  // resolved X (vertex indices); empty for path/cohn
  std::vector<mpz_class> dims;
  bool finite_dimensional = false;
};

/// Number of paths of length exactly k; equals ||A^k|| (|E^0| at k = 0).
mpz_class graded_dim_path(const ExactMatrix& a, unsigned k);

/// Cohn graded dimension via the norm sum  sum_{s=0}^{k} ||A^s (A^T)^(k-s)||.
mpz_class graded_dim_cohn(const ExactMatrix& a, unsigned k);

/// All Cohn graded dimensions for k = 0..kmax, sharing one set of powers.
std::vector<mpz_class> cohn_dim_prefix(const ExactMatrix& a, unsigned kmax);

/// Number of pairs (lambda, mu) of paths with r(lambda) = r(mu) and
/// l(lambda) + l(mu) = k, counted through path-count vectors:
/// sum_{s+t=k} sum_v P_s(v) P_t(v). Independent of the norm-sum route.
mpz_class path_pair_count(const ExactMatrix& a, unsigned k);

/// Relative-Cohn graded dimension: the pair count minus the pairs whose two
/// components both end in the distinguished edge of a vertex in X,
///   N_k = sum_{s+t=k} sum_v P_s(v)P_t(v) - sum_{s+t=k-2} sum_{v in X} P_s(v)P_t(v).
/// X = {} reproduces the Cohn count; X = Reg(E) gives the Leavitt count.
mpz_class graded_dim_relative(const ExactMatrix& a, std::span<const int> x, unsigned k);

std::vector<mpz_class> relative_dim_prefix(const ExactMatrix& a, std::span<const int> x,
                                           unsigned kmax);

DimSequence dim_sequence(const Graph& g, AlgebraKind kind, unsigned kmax);

}  // namespace gael
