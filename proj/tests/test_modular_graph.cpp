#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "theta/modular_graph.hpp"
#include "theta/numeric.hpp"

#include <set>

using namespace theta;

namespace {

DirectedModularGraph two_vertices() {
  DirectedModularGraph g;
  g.vertices = {{"v1", 1, 2}, {"v2", 2, 3}};
  g.edges = {{"e", "v1", "v2"}};
  return g;
}

DirectedModularGraph loop_at_v(std::int64_t genus, std::int64_t degree) {
  DirectedModularGraph g;
  g.vertices = {{"v", genus, degree}};
  g.edges = {{"e", "v", "v"}};
  return g;
}

}  // namespace

TEST_CASE("validate") {
  DirectedModularGraph single;
  single.vertices = {{"v", 0, 0}};
  single.neg_markings = {"v"};
  CHECK(validate(single).empty());

  DirectedModularGraph dangling;
  dangling.vertices = {{"v", 0, 0}};
  dangling.edges = {{"e", "v", "w"}};
  CHECK(validate(dangling).size() == 1);

  DirectedModularGraph split = two_vertices();
  split.pos_markings = {"v1"};
  split.neg_markings = {"v2"};
  CHECK(validate(split).empty());

  DirectedModularGraph bad;
  bad.vertices = {{"v", -1, 0}, {"v", 0, 0}};
  bad.pos_markings = {"x"};
  CHECK(validate(bad).size() == 3);
}

TEST_CASE("arithmetic_genus") {
  DirectedModularGraph one;
  one.vertices = {{"v", 3, 0}};
  CHECK(arithmetic_genus(one) == 3);

  DirectedModularGraph joined;
  joined.vertices = {{"a", 1, 0}, {"b", 2, 0}};
  joined.edges = {{"e", "a", "b"}};
  CHECK(arithmetic_genus(joined) == 3);

  CHECK(arithmetic_genus(loop_at_v(0, 0)) == 1);

  DirectedModularGraph apart;
  apart.vertices = {{"a", 1, 0}, {"b", 2, 0}};
  CHECK(component_count(apart) == 2);
  CHECK(arithmetic_genus(apart) == 3);
}

TEST_CASE("cut_edge") {
  const auto cut = cut_edge(two_vertices(), "e");
  CHECK(cut.edges.empty());
  CHECK(cut.pos_markings == std::vector<std::string>{"v1"});
  CHECK(cut.neg_markings == std::vector<std::string>{"v2"});
  CHECK(valences(cut) == valences(two_vertices()));

  const auto cut_loop = cut_edge(loop_at_v(0, 0), "e");
  CHECK(cut_loop.pos_markings == std::vector<std::string>{"v"});
  CHECK(cut_loop.neg_markings == std::vector<std::string>{"v"});

  CHECK_THROWS_AS(cut_edge(two_vertices(), "nope"), DomainError);
}

TEST_CASE("contract_edge") {
  const auto merged = contract_edge(two_vertices(), "e");
  REQUIRE(merged.vertices.size() == 1);
  CHECK(merged.vertices[0] == Vertex{"v1", 3, 5});

  const auto loop = contract_edge(loop_at_v(1, 4), "e");
  REQUIRE(loop.vertices.size() == 1);
  CHECK(loop.vertices[0] == Vertex{"v", 2, 4});

  DirectedModularGraph parallel = two_vertices();
  parallel.edges.push_back({"f", "v2", "v1"});
  parallel.neg_markings = {"v2"};
  const auto p = contract_edge(parallel, "e");
  REQUIRE(p.edges.size() == 1);
  CHECK(p.edges[0] == Edge{"f", "v1", "v1"});
  CHECK(p.neg_markings == std::vector<std::string>{"v1"});
  CHECK(arithmetic_genus(p) == arithmetic_genus(parallel));

  CHECK_THROWS_AS(contract_edge(two_vertices(), "nope"), DomainError);
}

TEST_CASE("glue") {
  const auto g = two_vertices();
  CHECK(isomorphic(glue(cut_edge(g, "e")), g));
  const auto loop = loop_at_v(0, 0);
  const auto reglued = glue(cut_edge(loop, "e"));
  REQUIRE(reglued.edges.size() == 1);
  CHECK(reglued.edges[0].source == "v");
  CHECK(reglued.edges[0].target == "v");
  CHECK(arithmetic_genus(reglued) == 1);
  CHECK_THROWS_AS(glue(g), DomainError);
}

TEST_CASE("orientation flips") {
  DirectedModularGraph g;
  g.vertices = {{"v", 0, 0}};
  g.neg_markings = {"v"};
  const auto flipped = flip_neg_to_pos(g);
  CHECK(flipped.neg_markings.empty());
  CHECK(flipped.pos_markings == std::vector<std::string>{"v"});
  CHECK(flipped.vertices[0].degree == -1);
  CHECK(flip_pos_to_neg(flipped).vertices[0].degree == -1);

  DirectedModularGraph h;
  h.vertices = {{"v", 0, 5}};
  h.pos_markings = {"v"};
  const auto back = flip_pos_to_neg(h);
  CHECK(back.neg_markings.size() == 1);
  CHECK(back.pos_markings.empty());
  CHECK(back.vertices[0].degree == 5);

  CHECK_THROWS_AS(flip_neg_to_pos(h), DomainError);
  CHECK_THROWS_AS(flip_pos_to_neg(g), DomainError);
}

TEST_CASE("isomorphism respects marking order and direction") {
  DirectedModularGraph a;
  a.vertices = {{"x", 0, 0}, {"y", 0, 0}};
  a.edges = {{"e", "x", "y"}};
  a.pos_markings = {"x"};
  DirectedModularGraph b = a;
  b.vertices = {{"p", 0, 0}, {"q", 0, 0}};
  b.edges = {{"k", "q", "p"}};
  b.pos_markings = {"q"};
  CHECK(isomorphic(a, b));
  b.pos_markings = {"p"};
  CHECK_FALSE(isomorphic(a, b));

  DirectedModularGraph c = a;
  c.pos_markings = {"x", "y"};
  DirectedModularGraph d = a;
  d.pos_markings = {"y", "x"};
  CHECK_FALSE(isomorphic(c, d));
}

TEST_CASE("conservation laws on random graphs") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 10000; ++trial) {
    const auto g = random_graph(rng, 8);
    REQUIRE(validate(g).empty());
    if (!g.edges.empty()) {
      const auto& e = g.edges[rng() % g.edges.size()].id;
      const auto c = contract_edge(g, e);
      CHECK(validate(c).empty());
      CHECK(arithmetic_genus(c) == arithmetic_genus(g));
      CHECK(total_degree(c) == total_degree(g));
      const auto cut = cut_edge(g, e);
      CHECK(valences(cut) == valences(g));
      CHECK(isomorphic(glue(cut), g));
    }
    if (!g.neg_markings.empty()) CHECK(total_degree(flip_neg_to_pos(g)) == total_degree(g) - 1);
    if (!g.pos_markings.empty()) CHECK(total_degree(flip_pos_to_neg(g)) == total_degree(g));
  }
}

TEST_CASE("contracting two disjoint edges commutes up to isomorphism") {
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    const auto g = random_graph(rng, 8);
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
      for (std::size_t j = i + 1; j < g.edges.size(); ++j) {
        const Edge& e = g.edges[i];
        const Edge& f = g.edges[j];
        const std::set<std::string> ends{e.source, e.target};
        if (ends.count(f.source) || ends.count(f.target)) continue;
        const auto ef = contract_edge(contract_edge(g, e.id), f.id);
        const auto fe = contract_edge(contract_edge(g, f.id), e.id);
        CHECK(isomorphic(ef, fe));
        ++checked;
      }
    }
  }
  CHECK(checked > 100);
}
