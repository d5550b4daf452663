#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>

#include "gael/graph.hpp"
#include "support/test_graphs.hpp"

using namespace gael;
namespace tg = gael::testing;

TEST_CASE("parse minimal and rose documents") {
  const Graph g = Graph::parse_json(R"({"vertices":["v"],"edges":[],"X":[]})");
  CHECK(g.vertex_count() == 1);
  CHECK(g.edge_count() == 0);
  CHECK(g.x_explicit());
  CHECK(g.x_indices().empty());

  const Graph rose = Graph::parse_json(
      R"({"vertices":["v"],"edges":[["e1","v","v"],["e2","v","v"]],"X":["v"]})");
  CHECK(rose.vertex_count() == 1);
  CHECK(rose.edge_count() == 2);
  CHECK(rose.x_indices() == std::vector<int>{0});
  CHECK(rose.classify().regular == std::vector<std::string>{"v"});
}

TEST_CASE("validation failures") {
  CHECK_THROWS_AS(Graph::parse_json(R"({"vertices":["v"],"edges":[["e","v","w"]]})"),
                  std::invalid_argument);  // unknown endpoint
  CHECK_THROWS_AS(Graph::parse_json(R"({"vertices":["v","v"],"edges":[]})"),
                  std::invalid_argument);  // duplicate vertex
  CHECK_THROWS_AS(
      Graph::parse_json(R"({"vertices":["v"],"edges":[["e","v","v"],["e","v","v"]]})"),
      std::invalid_argument);  // duplicate edge name
  CHECK_THROWS_AS(Graph::parse_json(R"({"vertices":["v","w"],"edges":[["e","v","w"]],"X":["w"]})"),
                  std::invalid_argument);  // sink in X
  CHECK_THROWS_AS(Graph::parse_json(R"({"vertices":["v"],"edges":[],"bogus":1})"),
                  std::invalid_argument);  // unknown field
  CHECK_THROWS_AS(Graph::parse_json("not json"), std::invalid_argument);
}

TEST_CASE("adjacency matrices of the named graphs") {
  CHECK(tg::rose(2).adjacency() == ExactMatrix::from_rows({{2}}));
  CHECK(tg::a2().adjacency() == ExactMatrix::from_rows({{0, 1}, {0, 0}}));
  CHECK(tg::two_cycle().adjacency() == ExactMatrix::from_rows({{0, 1}, {1, 0}}));
  CHECK(tg::fibonacci().adjacency() == ExactMatrix::from_rows({{1, 1}, {1, 0}}));
}

TEST_CASE("vertex classification") {
  const auto a2 = tg::a2().classify();
  CHECK(a2.sinks == std::vector<std::string>{"w"});
  CHECK(a2.sources == std::vector<std::string>{"v"});
  CHECK(a2.regular == std::vector<std::string>{"v"});

  const auto rose = tg::rose(2).classify();
  CHECK(rose.sinks.empty());
  CHECK(rose.sources.empty());
  CHECK(rose.regular == std::vector<std::string>{"v"});

  const auto isolated = tg::isolated_vertex().classify();
  CHECK(isolated.sinks == std::vector<std::string>{"v"});
  CHECK(isolated.sources == std::vector<std::string>{"v"});
  CHECK(isolated.regular.empty());
}

TEST_CASE("classification partitions the vertices") {
  for (const Graph& g : tg::enumerate_multigraphs(3, 3)) {
    const auto c = g.classify();
    CHECK(c.sinks.size() + c.regular.size() == static_cast<size_t>(g.vertex_count()));
    // row sum at v = out-degree, column sum = in-degree
    const ExactMatrix a = g.adjacency();
    for (int v = 0; v < g.vertex_count(); ++v) {
      mpz_class row = 0, col = 0;
      for (int j = 0; j < g.vertex_count(); ++j) {
        row += a.at(v, j);
        col += a.at(j, v);
      }
      CHECK(row == mpz_class(static_cast<long>(g.out_edges()[v].size())));
      mpz_class in_deg = 0;
      for (int e = 0; e < g.edge_count(); ++e)
        if (g.edge_range(e) == v) ++in_deg;
      CHECK(col == in_deg);
    }
  }
}

TEST_CASE("serialization round-trips") {
  const std::vector<Graph> cases = {tg::rose(3), tg::a2(), tg::fibonacci(),
                                    tg::with_x(tg::fibonacci(), {"v"}),
                                    tg::with_x(tg::rose(2), {})};
  for (const Graph& g : cases) {
    const Graph back = Graph::parse_json(g.to_json());
    CHECK(back.to_json() == g.to_json());
    CHECK(back.x_explicit() == g.x_explicit());
    CHECK(back.x_indices() == g.x_indices());
  }
}

TEST_CASE("omitted X defaults to the regular vertices") {
  const Graph g = Graph::parse_json(R"({"vertices":["v","w"],"edges":[["e","v","w"]]})");
  CHECK_FALSE(g.x_explicit());
  CHECK(g.x_indices() == std::vector<int>{0});
}

TEST_CASE("edge list input") {
  const Graph g = Graph::parse_edge_list("v -> w ab\nw -> v\n# comment\n\nv -> v\n");
  CHECK(g.vertex_count() == 2);
  CHECK(g.edge_count() == 3);
  CHECK(g.edges()[0].name == "ab");
  CHECK(g.edges()[1].name == "e1");
  CHECK_THROWS_AS(Graph::parse_edge_list("v w\n"), std::invalid_argument);
}

TEST_CASE("seeded random graphs are deterministic") {
  const Graph a = Graph::random(2, 3, 7);
  const Graph b = Graph::random(2, 3, 7);
  CHECK(a.to_json() == b.to_json());

  const Graph single = Graph::random(1, 0, 99);
  CHECK(single.vertex_count() == 1);
  CHECK(single.edge_count() == 0);

  const Graph c = Graph::random(3, 4, 1);
  CHECK(c.vertex_count() == 3);
  CHECK(c.edge_count() == 4);
  CHECK_FALSE(c.x_explicit());  // X defaults to Reg
}
