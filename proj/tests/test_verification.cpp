#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gael/verification.hpp"
#include "support/test_graphs.hpp"

using namespace gael;
namespace tg = gael::testing;

TEST_CASE("the property suite passes on the named graphs") {
  for (const Graph& g : {tg::rose(2), tg::rose(3), tg::fibonacci(), tg::two_cycle(),
                         tg::a2(), tg::isolated_vertex()}) {
    const auto results = run_property_checks(g);
    REQUIRE(results.size() == 6);
    for (const auto& r : results) {
      INFO(g.id(), " ", r.name, " ", r.details);
      CHECK(r.ok);
    }
    CHECK(all_ok(results));
  }
}

TEST_CASE("the property suite passes on seeded random graphs") {
  std::uint64_t seed = 9000;
  for (int i = 0; i < 8; ++i) {
    const Graph g = Graph::random(1 + i % 4, 2 + i % 5, seed++);
    const auto results = run_property_checks(g);
    for (const auto& r : results) {
      INFO(g.to_json(), " ", r.name, " ", r.details);
      CHECK(r.ok);
    }
  }
}

TEST_CASE("fault injection is caught") {
  PropertyOptions opt;
  opt.inject_fault = true;
  const auto results = run_property_checks(tg::rose(2), opt);
  CHECK_FALSE(all_ok(results));
  bool identity_failed = false;
  for (const auto& r : results)
    if (r.name == "cohn_norm_identity" && !r.ok) identity_failed = true;
  CHECK(identity_failed);
}
