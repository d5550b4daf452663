#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "gael/filtration.hpp"
#include "gael/rewrite_oracle.hpp"
#include "support/test_graphs.hpp"

using namespace gael;
namespace tg = gael::testing;

namespace {

std::vector<Graph> small_corpus() {
  return {tg::rose(2), tg::rose(3), tg::fibonacci(), tg::two_cycle(), tg::a2(),
          tg::isolated_vertex(), Graph::random(3, 5, 2), Graph::random(4, 6, 3)};
}

}  // namespace

TEST_CASE("path graded dimensions") {
  CHECK(graded_dim_path(tg::rose(2).adjacency(), 10) == 1024);
  CHECK(graded_dim_path(tg::fibonacci().adjacency(), 4) == 13);
  CHECK(graded_dim_path(tg::a2().adjacency(), 2) == 0);
  CHECK(graded_dim_path(tg::a2().adjacency(), 0) == 2);
}

TEST_CASE("cohn graded dimensions") {
  for (const Graph& g : {tg::rose(2), tg::fibonacci(), tg::a2()})
    CHECK(graded_dim_cohn(g.adjacency(), 0) == g.vertex_count());
  CHECK(graded_dim_cohn(tg::rose(2).adjacency(), 2) == 12);
  CHECK(graded_dim_cohn(tg::a2().adjacency(), 2) == 1);  // only e e*
}

TEST_CASE("relative graded dimensions") {
  const auto rose2 = tg::rose(2).adjacency();
  const std::vector<int> at_v{0};
  CHECK(graded_dim_relative(rose2, at_v, 2) == 11);
  CHECK(graded_dim_relative(rose2, std::vector<int>{}, 2) == graded_dim_cohn(rose2, 2));
  CHECK(graded_dim_relative(tg::a2().adjacency(), at_v, 2) == 0);  // e e* collapses to v

  CHECK_THROWS_AS(graded_dim_relative(tg::a2().adjacency(), std::vector<int>{1}, 2),
                  std::invalid_argument);  // w is a sink
  CHECK_THROWS_AS(graded_dim_relative(tg::a2().adjacency(), std::vector<int>{5}, 2),
                  std::invalid_argument);
}

TEST_CASE("dimension sequences of the named graphs") {
  const DimSequence a2_path = dim_sequence(tg::a2(), AlgebraKind::Path, 5);
  CHECK(a2_path.finite_dimensional);
  CHECK(a2_path.dims == std::vector<mpz_class>{2, 1, 0, 0, 0, 0});

  const DimSequence rose2_cohn = dim_sequence(tg::rose(2), AlgebraKind::Cohn, 4);
  CHECK(rose2_cohn.dims == std::vector<mpz_class>{1, 4, 12, 32, 80});  // (k+1) 2^k
  CHECK_FALSE(rose2_cohn.finite_dimensional);

  const DimSequence rose2_leavitt = dim_sequence(tg::rose(2), AlgebraKind::Leavitt, 4);
  CHECK(rose2_leavitt.dims == std::vector<mpz_class>{1, 4, 11, 28, 68});  // 2^(k-2)(3k+5)

  // relative at X = Reg never exceeds the Cohn dimensions
  const DimSequence cyc_rel = dim_sequence(tg::two_cycle(), AlgebraKind::Leavitt, 3);
  const DimSequence cyc_cohn = dim_sequence(tg::two_cycle(), AlgebraKind::Cohn, 3);
  for (unsigned k = 0; k <= 3; ++k) CHECK(cyc_rel.dims[k] <= cyc_cohn.dims[k]);
  CHECK(cyc_rel.dims == std::vector<mpz_class>{2, 4, 4, 4});
}

TEST_CASE("norm-sum route equals the path-pair count") {
  for (const Graph& g : small_corpus()) {
    const ExactMatrix a = g.adjacency();
    const auto cohn = cohn_dim_prefix(a, 30);
    for (unsigned k = 0; k <= 30; ++k) CHECK(cohn[k] == path_pair_count(a, k));
  }
}

TEST_CASE("monotonicity in X and the graded sandwich") {
  for (const Graph& g : small_corpus()) {
    const ExactMatrix a = g.adjacency();
    const auto subsets = tg::regular_subsets(g);
    const auto cohn = cohn_dim_prefix(a, 15);
    const auto path = prefix_powers(a, 15);
    for (const auto& x : subsets) {
      const auto dx = relative_dim_prefix(a, x, 15);
      for (unsigned k = 0; k <= 15; ++k) {
        CHECK(entry_norm(path[k]) <= dx[k]);
        CHECK(dx[k] <= cohn[k]);
      }
      for (const auto& y : subsets) {
        if (!std::includes(y.begin(), y.end(), x.begin(), x.end())) continue;
        const auto dy = relative_dim_prefix(a, y, 15);
        for (unsigned k = 0; k <= 15; ++k) CHECK(dy[k] <= dx[k]);
      }
    }
  }
}

TEST_CASE("relative formula matches the rewriting oracle on small graphs") {
  for (const Graph& g : {tg::rose(2), tg::fibonacci(), tg::two_cycle(), tg::a2()}) {
    const ExactMatrix a = g.adjacency();
    for (const auto& x : tg::regular_subsets(g)) {
      const CohnOracle oracle(g, x);
      for (unsigned k = 0; k <= 5; ++k)
        CHECK(graded_dim_relative(a, x, k) == oracle.graded_dim_bruteforce(k));
    }
  }
}

TEST_CASE("finite dimensionality is exactly nilpotency") {
  for (const Graph& g : small_corpus()) {
    const bool nil = is_nilpotent(g.adjacency());
    for (auto kind : {AlgebraKind::Path, AlgebraKind::Cohn, AlgebraKind::Leavitt}) {
      const DimSequence d = dim_sequence(g, kind, 12);
      CHECK(d.finite_dimensional == nil);
      if (nil) {
        // dims vanish beyond the vertex count
        for (unsigned k = static_cast<unsigned>(2 * g.vertex_count()); k <= 12; ++k)
          CHECK(d.dims[k] == 0);
      }
    }
  }
}

TEST_CASE("kind names round-trip") {
  for (auto kind : {AlgebraKind::Path, AlgebraKind::Cohn, AlgebraKind::Leavitt,
                    AlgebraKind::Relative})
    CHECK(algebra_kind_from_string(to_string(kind)) == kind);
  CHECK_THROWS_AS(algebra_kind_from_string("nope"), std::invalid_argument);
}
