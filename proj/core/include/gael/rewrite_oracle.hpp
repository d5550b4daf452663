#pragma once

#include <gmpxx.h>

#include <map>
#include <span>
#include <string>
#include <vector>

#include "gael/graph.hpp"

namespace gael {

/// Path in the graph; trivial paths (length 0) stand for vertices.
struct Path {
  int source = 0;
  int range = 0;
  std::vector<int> edges;

  size_t length() const noexcept { return edges.size(); }
  bool trivial() const noexcept { return edges.empty(); }

  friend bool operator==(const Path& a, const Path& b) {
    return a.source == b.source && a.edges == b.edges;
  }
};

/// lambda mu* with r(lambda) = r(mu). weight = l(lambda) + l(mu).
/// A word is reducible exactly when both components are nontrivial, end in
/// the same edge e, and e is the distinguished edge of its source vertex
/// with that vertex in X.
struct NormalFormWord {
  Path lambda;
  Path mu;

  unsigned weight() const noexcept {
    return static_cast<unsigned>(lambda.length() + mu.length());
  }
  friend bool operator==(const NormalFormWord& a, const NormalFormWord& b) {
    return a.lambda == b.lambda && a.mu == b.mu;
  }
};

/// Weight-major total order, so the maximal element of an ordered container
/// is a maximal-weight word (the one the rewriting strategy picks first).
struct WordOrder {
  bool operator()(const NormalFormWord& a, const NormalFormWord& b) const;
};

/// Finitely supported rational combination of words; no zero coefficients.
using AlgebraElement = std::map<NormalFormWord, mpq_class, WordOrder>;

/// Per-vertex distinguished edge gamma_v for v in X (-1 elsewhere). The
/// graded counts are independent of the choice; the basis is not.
struct SpecialEdgeChoice {
  std::vector<int> gamma;
};

struct ClosureReport {
  bool ok = false;
  std::vector<std::string> violations;
};

struct ChoiceIndependenceReport {
  bool ok = false;
  size_t choices_checked = 0;
  std::string detail;
};

/// Brute-force model of the relative Cohn algebra over a graph: spanning
/// words, rewriting to normal form, products, and graded counts. This is the
/// truth source the dimension formulas are gated against, so it never takes
/// shortcuts through them. One instance is single-threaded (it grows a path
/// cache internally); distinct instances are independent.
class CohnOracle {
 public:
  CohnOracle(Graph g, std::vector<int> x, size_t max_words = kDefaultWordCap);
  CohnOracle(Graph g, std::vector<int> x, SpecialEdgeChoice choice,
             size_t max_words = kDefaultWordCap);

  static constexpr size_t kDefaultWordCap = 20000;

  static SpecialEdgeChoice default_choice(const Graph& g, std::span<const int> x);

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<int>& x() const noexcept { return x_; }
  const SpecialEdgeChoice& choice() const noexcept { return choice_; }

  /// All pairs (lambda, mu) with r(lambda) = r(mu) and weight <= k,
  /// vertices included as weight-0 words, in a deterministic order.
  std::vector<NormalFormWord> enumerate_spanning(unsigned k) const;

  bool reducible(const NormalFormWord& w) const;

  /// Rewrites every reducible word (alpha gamma_v, beta gamma_v) into
  /// (alpha, beta) - sum over f in s^{-1}(v), f != gamma_v of (alpha f, beta f),
  /// maximal-weight word first, until only irreducible words remain.
  AlgebraElement reduce(AlgebraElement element) const;

  /// Bilinear splice product (lambda mu*)(alpha beta*); reduced output.
  AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b) const;

  static AlgebraElement single(NormalFormWord w, const mpq_class& coeff = 1);

  std::vector<NormalFormWord> irreducible_words(unsigned max_weight) const;

  /// Number of irreducible words of weight exactly k. Strong mode reduces
  /// every reducible spanning word of weight <= k and demands the result stay
  /// inside the span of irreducible words of no larger weight, throwing
  /// std::logic_error otherwise.
  mpz_class graded_dim_bruteforce(unsigned k, bool strong = false) const;

  /// Filtration axiom V_n V_m in V_{n+m} on irreducible words.
  ClosureReport product_closure_check(unsigned n, unsigned m) const;

  std::string word_to_string(const NormalFormWord& w) const;

 private:
  void init();
  void ensure_paths(unsigned len) const;
  size_t pair_count_exact(unsigned weight) const;
  Path chop(const Path& p) const;
  Path extend(const Path& p, int edge) const;

  Graph graph_;
  std::vector<int> x_;
  std::vector<char> in_x_;
  SpecialEdgeChoice choice_;
  size_t cap_;

  // paths_[len] in generation order; paths_at_[len][v]: indices ranging at v
  mutable std::vector<std::vector<Path>> paths_;
  mutable std::vector<std::vector<std::vector<int>>> paths_at_;
};

/// Re-counts graded dimensions under every admissible special-edge choice and
/// verifies they coincide for each weight <= k.
ChoiceIndependenceReport choice_independence_check(const Graph& g, std::vector<int> x,
                                                   unsigned k,
                                                   size_t max_words = CohnOracle::kDefaultWordCap);

}  // namespace gael
