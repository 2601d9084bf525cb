#include <random>
#include <sstream>

#include <doctest.h>

#include "misinfo/error.hpp"
#include "misinfo/graph.hpp"
#include "oracles.hpp"

using misinfo::SocialGraph;

namespace {

SocialGraph parse(const std::string& text) {
  std::istringstream in(text);
  return misinfo::load_edge_list(in);
}

SocialGraph triangle() { return parse("source,target\na,b\nb,c\nc,a\n"); }

}  // namespace

TEST_CASE("edge list loading") {
  SUBCASE("simple path") {
    const auto g = parse("source,target\na,b\nb,c");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 2);
  }
  SUBCASE("reverse duplicate collapses") {
    const auto g = parse("source,target\na,b\nb,a");
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 1);
  }
  SUBCASE("self-loop is rejected") {
    CHECK_THROWS_AS(parse("source,target\na,a"), misinfo::ValidationError);
  }
  SUBCASE("isolated node rows and blank lines") {
    const auto g = parse("source,target\r\n\r\na,b\r\nz,\r\n\n");
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 1);
    CHECK(g.degree("z") == 0);
  }
  SUBCASE("wrong column count reports the line") {
    try {
      parse("source,target\na,b\na,b,c\n");
      FAIL("expected ParseError");
    } catch (const misinfo::ParseError& e) {
      REQUIRE(e.line().has_value());
      CHECK(*e.line() == 3);
    }
  }
  SUBCASE("missing header") {
    CHECK_THROWS_AS(parse("a,b\n"), misinfo::ParseError);
    CHECK_THROWS_AS(parse(""), misinfo::ParseError);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(misinfo::load_edge_list_file("/nonexistent/edges.csv"), misinfo::IoError);
  }
}

TEST_CASE("node ids are ordered lexicographically") {
  const auto g = parse("source,target\nzed,b10\nb2,zed\n");
  REQUIRE(g.node_count() == 3);
  CHECK(g.id(0) == "b10");
  CHECK(g.id(1) == "b2");
  CHECK(g.id(2) == "zed");
  CHECK_THROWS_AS(g.index_of("nope"), misinfo::LookupError);
}

TEST_CASE("degree") {
  CHECK(triangle().degree("a") == 2);

  SocialGraph::Builder b;
  b.add_node("lonely");
  for (int i = 0; i < 5; ++i) b.add_edge("hub", "leaf" + std::to_string(i));
  const auto star = b.build();
  CHECK(star.degree("hub") == 5);
  CHECK(star.degree("lonely") == 0);
  CHECK_THROWS_AS(star.degree("ghost"), misinfo::LookupError);
}

TEST_CASE("mutual count") {
  CHECK(triangle().mutual_count("a", "b") == 1);
  CHECK(parse("source,target\na,b\nb,c").mutual_count("a", "c") == 1);
  CHECK(parse("source,target\na,\nb,").mutual_count("a", "b") == 0);
  CHECK_THROWS_AS(triangle().mutual_count("a", "a"), misinfo::InvalidArgument);
}

TEST_CASE("trust coefficient") {
  CHECK(triangle().trust("a", "b") == 0.5);
  CHECK(parse("source,target\na,\nb,").trust("a", "b") == 0.0);

  // u and v not adjacent, both linked to x, y, z.
  const auto g = parse("source,target\nu,x\nu,y\nu,z\nv,x\nv,y\nv,z\n");
  CHECK(g.trust("u", "v") == 1.0);
  CHECK_THROWS_AS(g.trust("u", "u"), misinfo::InvalidArgument);
  CHECK_THROWS_AS(g.trust("u", "nobody"), misinfo::LookupError);
}

TEST_CASE("trust properties on random graphs") {
  std::mt19937_64 rng(20240501);
  std::uniform_int_distribution<int> size(2, 50);
  for (int trial = 0; trial < 40; ++trial) {
    const auto rg = misinfo::testing::random_graph(rng, size(rng), 0.2);
    SocialGraph::Builder b;
    for (const auto& n : rg.nodes) b.add_node(n);
    for (const auto& [x, y] : rg.edges) b.add_edge(x, y);
    const auto g = b.build();
    const auto sets = misinfo::testing::neighbor_sets(rg.nodes, rg.edges);

    std::size_t degree_sum = 0;
    for (const auto& n : rg.nodes) degree_sum += g.degree(n);
    CHECK(degree_sum == 2 * g.edge_count());
    CHECK(g.edge_count() == rg.edges.size());

    for (const auto& i : rg.nodes) {
      for (const auto& j : rg.nodes) {
        if (i == j) continue;
        const double t = g.trust(i, j);
        CHECK(t == g.trust(j, i));
        CHECK(t >= 0.0);
        CHECK(t <= 1.0);
        CHECK(t == misinfo::testing::brute_dice(sets, i, j));
        CHECK(g.mutual_count(i, j) == misinfo::testing::brute_mutual(sets, i, j));
      }
    }
  }
}

TEST_CASE("edge list round trip") {
  const auto g = parse("source,target\nq,\na,b\nc,b\n");
  std::ostringstream out;
  misinfo::write_edge_list(out, g);
  CHECK(parse(out.str()) == g);
}
