#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "properties.hpp"
#include "seidelkit/seidelkit.hpp"

using namespace seidelkit;
using testkit::random_graph;

namespace {
std::uint64_t random_subset(std::mt19937_64& rng, int n) {
  return n == 0 ? 0 : rng() & ((std::uint64_t{1} << n) - 1);
}
}  // namespace

TEST_CASE("named constructions") {
  CHECK(static_cast<bool>(graph_isomorphism(line_graph(complete_bipartite(2, 2)), cycle_graph(4))));
  REQUIRE(paley_graph(5).order() == 5);
  CHECK(is_switching_equivalent(paley_graph(5), cycle_graph(5)));
  CHECK(static_cast<bool>(graph_isomorphism(paley_graph(5), cycle_graph(5))));
  CHECK(hat_k(2) == path_graph(3));
  CHECK(triangular_graph(4).order() == 6);
  CHECK(cone_graph(complete_graph(3)) == complete_graph(4));
  CHECK(static_cast<bool>(graph_isomorphism(hat_k(4), line_graph(tree_t(4)))));
  CHECK_THROWS_AS(paley_graph(8), Error);
  CHECK_THROWS_AS(paley_graph(7), Error);  // 7 = 3 mod 4
  CHECK_THROWS_AS(hat_k(1), Error);
}

TEST_CASE("spec-string grammar") {
  CHECK(parse_graph_spec("L(K2,2)") == line_graph(complete_bipartite(2, 2)));
  CHECK(parse_graph_spec("T(5)") == triangular_graph(5));
  CHECK(parse_graph_spec("Kbar4") == empty_graph(4));
  CHECK(parse_graph_spec("L(K6)+K1") == disjoint_union(triangular_graph(6), Graph(1)));
  CHECK(parse_graph_spec("~(K3)") == empty_graph(3));
  CHECK(parse_graph_spec("cone(C5)").order() == 6);
  CHECK(parse_graph_spec("hatK(6)") == hat_k(6));
  CHECK(parse_graph_spec("Tn(3)") == tree_t(3));
  CHECK(parse_graph_spec("Paley(13)").order() == 13);
  CHECK_THROWS_AS(parse_graph_spec("Q5"), Error);
  CHECK_THROWS_AS(parse_graph_spec("K3)"), Error);
}

TEST_CASE("graph6 round trip") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 40; ++trial) {
    int n = static_cast<int>(rng() % 20);
    Graph g = random_graph(rng, n);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
  CHECK_THROWS_AS(from_graph6(""), Error);
}

TEST_CASE("switching identities") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g = random_graph(rng, n);
    std::uint64_t u = random_subset(rng, n), w = random_subset(rng, n);
    CHECK(switch_graph(g, std::uint64_t{0}) == g);
    CHECK(switch_graph(switch_graph(g, u), u) == g);
    CHECK(switch_graph(switch_graph(g, u), w) == switch_graph(g, u ^ w));
    // complement set gives the same switch
    std::uint64_t full = (std::uint64_t{1} << n) - 1;
    CHECK(switch_graph(g, u) == switch_graph(g, full & ~u));
    // Seidel char poly invariance
    CHECK(char_poly(seidel_of(g).matrix()) ==
          char_poly(seidel_of(switch_graph(g, u)).matrix()));
  }
  // switching one side of K_{t,t} empties it
  for (int t : {2, 3}) {
    std::uint64_t side = (std::uint64_t{1} << t) - 1;
    CHECK(switch_graph(complete_bipartite(t, t), side) == empty_graph(2 * t));
  }
}

TEST_CASE("descendants isolate the chosen vertex") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + static_cast<int>(rng() % 7);
    Graph g = random_graph(rng, n);
    int v = static_cast<int>(rng() % n);
    Graph d = descendant(g, v);
    CHECK(d.degree(v) == 0);
    CHECK(is_switching_equivalent(g, d));
  }
  CHECK(descendant(complete_graph(2), 0) == empty_graph(2));
}

TEST_CASE("switching equivalence with certificates") {
  CHECK(is_switching_equivalent(empty_graph(4), complete_bipartite(2, 2)));
  CHECK_FALSE(is_switching_equivalent(complete_graph(3), empty_graph(3)));
  CHECK_THROWS_AS(is_switching_equivalent(Graph(2), Graph(3)), Error);
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 1 + static_cast<int>(rng() % 7);
    Graph g = random_graph(rng, n);
    std::uint64_t u = random_subset(rng, n);
    auto cert = is_switching_equivalent(g, switch_graph(g, u));
    REQUIRE(cert);
    // certificates are verified internally; re-check here anyway
    CHECK(switch_graph(g, cert->switch_set).relabel(cert->permutation) == switch_graph(g, u));
    // symmetry
    CHECK(is_switching_equivalent(switch_graph(g, u), g));
    // invariance under relabeling
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(is_switching_equivalent(g.relabel(perm), switch_graph(g, u)));
  }
}

TEST_CASE("isomorphism search") {
  CHECK(static_cast<bool>(graph_isomorphism(cycle_graph(5), cycle_graph(5))));
  CHECK_FALSE(graph_isomorphism(cycle_graph(6), complete_bipartite(3, 3)));
  // Petersen-style regular pair: T(5) vs its complement (the Petersen graph)
  Graph t5 = triangular_graph(5);
  CHECK_FALSE(graph_isomorphism(t5, t5.complement()));
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 1 + static_cast<int>(rng() % 8);
    Graph g = random_graph(rng, n);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    auto sigma = graph_isomorphism(g, g.relabel(perm));
    REQUIRE(sigma);
    CHECK(g.relabel(*sigma) == g.relabel(perm));
  }
}
