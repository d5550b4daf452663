#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gael/entropy.hpp"
#include "support/charpoly.hpp"
#include "support/test_graphs.hpp"

using namespace gael;
namespace tg = gael::testing;

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kLnPhi = 0.48121182505960347;  // ln((1+sqrt 5)/2)
constexpr double kPhi = 1.6180339887498949;

DimSequence synthetic(std::vector<mpz_class> dims, bool finite = false) {
  DimSequence d;
  d.kind = AlgebraKind::Path;
  d.graph_id = "synthetic";
  d.dims = std::move(dims);
  d.finite_dimensional = finite;
  return d;
}

}  // namespace

TEST_CASE("log_big is accurate for huge integers") {
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 2, 500);
  CHECK(log_big(big) == doctest::Approx(500.0 * kLn2).epsilon(1e-13));
  mpz_ui_pow_ui(big.get_mpz_t(), 10, 61);
  CHECK(log_big(big) == doctest::Approx(61.0 * std::log(10.0)).epsilon(1e-13));
  CHECK(log_big(mpz_class(1)) == doctest::Approx(0.0));
  CHECK_THROWS_AS(log_big(mpz_class(0)), std::domain_error);
}

TEST_CASE("geometric dimensions give the pure rate at every k") {
  // d_k = 2^k: every per-k estimate collapses to ln 2
  std::vector<mpz_class> dims;
  mpz_class v = 1;
  for (int k = 0; k <= 60; ++k, v *= 2) dims.push_back(v);
  const EntropyEstimate e = entropy_estimate(synthetic(dims));
  for (const auto& [k, h] : e.per_k) CHECK(h == doctest::Approx(kLn2).epsilon(1e-12));
  CHECK(e.tail_estimate == doctest::Approx(kLn2).epsilon(1e-12));
  CHECK(e.growth_estimate == doctest::Approx(kLn2).epsilon(1e-12));
}

TEST_CASE("polynomial factors decay in the tail") {
  // d_k = (k+1) 2^k at kmax = 200
  std::vector<mpz_class> dims;
  mpz_class v = 1;
  for (long k = 0; k <= 200; ++k, v *= 2) dims.push_back(mpz_class(k + 1) * v);
  const EntropyEstimate e = entropy_estimate(synthetic(dims));

  // the windowed max of ln(d_k)/k sits exactly ln(k0+1)/k0 above ln 2
  CHECK(e.window_begin == 100);
  CHECK(e.tail_estimate ==
        doctest::Approx(kLn2 + std::log(101.0) / 100.0).epsilon(1e-12));
  // the long-baseline slope cancels the polynomial factor
  CHECK(std::abs(e.growth_estimate - kLn2) < 0.03);
  CHECK(e.growth_estimate >= kLn2);
}

TEST_CASE("finite-dimensional sequences have entropy zero") {
  for (auto kind : {AlgebraKind::Path, AlgebraKind::Cohn, AlgebraKind::Leavitt}) {
    const EntropyEstimate e = entropy_estimate(dim_sequence(tg::a2(), kind, 20));
    CHECK(e.finite_dimensional);
    CHECK(e.tail_estimate == 0.0);
    CHECK(e.growth_estimate == 0.0);
  }
}

TEST_CASE("inconsistent input is rejected") {
  CHECK_THROWS_AS(entropy_estimate(synthetic({0, 0, 0}, false)), std::invalid_argument);
  CHECK_NOTHROW(entropy_estimate(synthetic({0, 0, 0}, true)));
  CHECK_THROWS_AS(entropy_estimate(synthetic({})), std::invalid_argument);
  CHECK_THROWS_AS(entropy_estimate(synthetic({1, 2}), 1.5), std::invalid_argument);
}

TEST_CASE("spectral radius of the named matrices") {
  const SpectralEstimate two = spectral_radius(ExactMatrix::from_rows({{2}}));
  CHECK(two.converged);
  CHECK(two.lower <= 2.0);
  CHECK(two.upper >= 2.0);
  CHECK(two.rho == doctest::Approx(2.0).epsilon(1e-12));

  const SpectralEstimate nil = spectral_radius(ExactMatrix::from_rows({{0, 1}, {0, 0}}));
  CHECK(nil.converged);
  CHECK(nil.rho == 0.0);
  CHECK(nil.upper == 0.0);

  const SpectralEstimate fib =
      spectral_radius(ExactMatrix::from_rows({{1, 1}, {1, 0}}), 1e-9);
  CHECK(fib.converged);
  CHECK(fib.lower <= kPhi);
  CHECK(fib.upper >= kPhi);
  CHECK(fib.upper / fib.lower - 1.0 <= 1e-9);

  // periodic case: the shift keeps the iteration pinned at rho = 1
  const SpectralEstimate cyc = spectral_radius(tg::two_cycle().adjacency());
  CHECK(cyc.rho == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("brackets contain the characteristic-polynomial root") {
  std::vector<Graph> corpus = {tg::rose(2), tg::rose(3), tg::fibonacci(), tg::two_cycle(),
                               tg::a2(), tg::isolated_vertex()};
  std::uint64_t seed = 700;
  for (int i = 0; i < 12; ++i) corpus.push_back(Graph::random(3, 3 + i % 4, seed++));
  for (const Graph& g : corpus) {
    if (g.vertex_count() > 3) continue;
    const ExactMatrix a = g.adjacency();
    const double rho_ref = tg::reference_rho(a);
    const SpectralEstimate est = spectral_radius(a);
    CHECK(est.lower <= rho_ref + 1e-12);
    CHECK(est.upper >= rho_ref - 1e-12);
    CHECK(std::abs(est.rho - rho_ref) <= 1e-9 * std::max(1.0, rho_ref));
    CHECK(est.converged);
  }
}

TEST_CASE("reducible matrices converge too") {
  // a cycle only reachable from a transient part: plain ratio brackets on the
  // whole matrix stall, the per-component iteration does not
  const Graph g({"u", "v", "w"},
                {{"loop", "w", "w"}, {"uv", "u", "v"}, {"uw", "u", "w"}},
                std::nullopt);
  const SpectralEstimate est = spectral_radius(g.adjacency());
  CHECK(est.converged);
  CHECK(est.rho == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("closed-form entropy") {
  CHECK(closed_form_entropy(tg::rose(2).adjacency()) ==
        doctest::Approx(kLn2).epsilon(1e-13));
  CHECK(closed_form_entropy(tg::two_cycle().adjacency()) == 0.0);
  CHECK(closed_form_entropy(tg::a2().adjacency()) == 0.0);
  CHECK(closed_form_entropy(tg::fibonacci().adjacency()) ==
        doctest::Approx(kLnPhi).epsilon(1e-12));
}

TEST_CASE("doubling every edge adds ln 2") {
  for (const Graph& g : {tg::rose(2), tg::fibonacci(), tg::two_cycle()}) {
    const ExactMatrix a = g.adjacency();
    ExactMatrix doubled = a;
    for (int i = 0; i < a.rows(); ++i)
      for (int j = 0; j < a.cols(); ++j) doubled.at(i, j) *= 2;
    CHECK(std::abs(closed_form_entropy(doubled) - closed_form_entropy(a) - kLn2) < 1e-12);
  }
}

TEST_CASE("tail estimates converge to the closed form") {
  std::vector<Graph> corpus = {tg::rose(2), tg::rose(3), tg::fibonacci(), tg::two_cycle()};
  std::uint64_t seed = 41;
  for (int i = 0; i < 4; ++i) corpus.push_back(Graph::random(3, 4 + i % 3, seed++));
  const double allowance = std::max(0.05, 5.0 * std::log(200.0) / 200.0);
  for (const Graph& g : corpus) {
    const EntropyEstimate e = entropy_estimate(dim_sequence(g, AlgebraKind::Path, 200));
    const double anchor = closed_form_entropy(g.adjacency());
    if (e.finite_dimensional) {
      CHECK(anchor == 0.0);
      continue;
    }
    CHECK(std::abs(e.tail_estimate - anchor) <= allowance);
    CHECK(e.tail_estimate >= anchor - 1e-12);  // ||A^k|| >= rho^k
  }
}

TEST_CASE("verify_chain on the named graphs") {
  const ChainReport rose = verify_chain(tg::rose(2), 200, 0.05);
  CHECK(rose.chain_ok);
  CHECK(rose.sandwich_ok);
  CHECK(rose.closed_form == doctest::Approx(kLn2).epsilon(1e-12));
  CHECK(std::abs(rose.path.growth_estimate - kLn2) < 1e-12);
  CHECK(std::abs(rose.cohn.growth_estimate - kLn2) < 0.05);

  const ChainReport fib = verify_chain(tg::fibonacci(), 200, 0.02);
  CHECK(fib.chain_ok);
  CHECK(fib.closed_form == doctest::Approx(kLnPhi).epsilon(1e-12));

  const ChainReport acyclic = verify_chain(tg::a2(), 50, 0.05);
  CHECK(acyclic.chain_ok);
  CHECK(acyclic.closed_form == 0.0);
  CHECK(acyclic.path.tail_estimate == 0.0);

  CHECK_THROWS_AS(verify_chain(tg::rose(2), 5, 0.05), std::invalid_argument);
}

TEST_CASE("norm bound holds in exact arithmetic") {
  // rose-2 with r = 3: 2^k <= 3^k (1 + 2) for all k
  const NormBoundReport rose = norm_bound_check(tg::rose(2).adjacency(), 3, 20);
  CHECK(rose.asserted);
  CHECK(rose.ok);

  // Fibonacci with r = 4: ||A^k|| = F_{k+3} <= 4^k (2 + 3)
  const NormBoundReport fib = norm_bound_check(tg::fibonacci().adjacency(), 4, 20);
  CHECK(fib.asserted);
  CHECK(fib.ok);

  const NormBoundReport zero = norm_bound_check(ExactMatrix(2, 2), 1, 10);
  CHECK(zero.ok);  // 0 <= n at every k, and n <= n at k = 0
}

TEST_CASE("norm bound regimes") {
  const ExactMatrix fib = tg::fibonacci().adjacency();  // rho ~ 1.618, ||A|| = 3
  CHECK_THROWS_AS(norm_bound_check(fib, 3, 10), std::invalid_argument);   // r = ||A||
  CHECK_THROWS_AS(norm_bound_check(fib, 1, 10), std::invalid_argument);   // r < rho
  const NormBoundReport observed = norm_bound_check(fib, 2, 10);  // rho < r < ||A||
  CHECK_FALSE(observed.asserted);
}
