#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "properties.hpp"
#include "seidelkit/seidelkit.hpp"

using namespace seidelkit;
using testkit::brute_force_extension;
using testkit::brute_force_two_vertex_extension;
using testkit::graph_from_mask;
using testkit::random_graph;
using testkit::representable_largest;

TEST_CASE("find_extension agrees with the brute-force scan up to order 5") {
  long tested = 0, skipped = 0;
  for (int n = 1; n <= 5; ++n) {
    const int bits = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
      Graph g = graph_from_mask(n, mask);
      SeidelMatrix s = seidel_of(g);
      auto lambda = representable_largest(s);
      if (!lambda) {
        ++skipped;
        continue;
      }
      ++tested;
      for (bool preserve_rank : {false, true}) {
        auto v = find_extension(s, *lambda, preserve_rank);
        CHECK(v.found == brute_force_extension(s, *lambda, preserve_rank));
      }
    }
  }
  CHECK(tested > 1000);
  CHECK(skipped < tested);
}

TEST_CASE("no one-vertex extension implies no two-vertex extension") {
  for (int n = 1; n <= 4; ++n) {
    const int bits = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
      Graph g = graph_from_mask(n, mask);
      SeidelMatrix s = seidel_of(g);
      auto lambda = representable_largest(s);
      if (!lambda) continue;
      for (bool preserve_rank : {false, true}) {
        bool one = brute_force_extension(s, *lambda, preserve_rank);
        bool two = brute_force_two_vertex_extension(s, *lambda, preserve_rank);
        if (two) CHECK(one);
      }
    }
  }
}

TEST_CASE("verdicts are switching invariant") {
  std::mt19937_64 rng(8842);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    Graph g = random_graph(rng, n);
    if (!representable_largest(seidel_of(g))) continue;
    std::uint64_t u = rng() & ((std::uint64_t{1} << n) - 1);
    Graph h = switch_graph(g, u);
    CHECK(is_maximal(g).first == is_maximal(h).first);
    CHECK(is_strongly_maximal(g).first == is_strongly_maximal(h).first);
  }
}

TEST_CASE("strongly maximal implies maximal") {
  std::mt19937_64 rng(90210);
  int strong_seen = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    Graph g = random_graph(rng, n);
    if (!representable_largest(seidel_of(g))) continue;
    if (is_strongly_maximal(g).first) {
      ++strong_seen;
      CHECK(is_maximal(g).first);
    }
  }
  CHECK(strong_seen > 0);
}

TEST_CASE("named verdicts") {
  CHECK(is_maximal(triangular_graph(8)).first);
  CHECK(is_strongly_maximal(triangular_graph(8)).first);
  // irrational two-eigenvalue matrix, full switching class fails p < 2
  CHECK(is_strongly_maximal(disjoint_union(cycle_graph(5), Graph(1))).first);
  // K_bar4 extends (to K_bar5's class), so it is not strongly maximal
  auto [strong, v] = is_strongly_maximal(empty_graph(4));
  CHECK_FALSE(strong);
  REQUIRE(v.found);
  CHECK(v.witness[0] == 1);
  SeidelMatrix ext = seidel_of(empty_graph(4)).extended(v.witness);
  CHECK(compare_largest(ext, Quadratic(3)) == Compare::Equal);
  // D-type classes: no equal-rank superlattice, but a bigger one exists
  Graph lk24 = line_graph(complete_bipartite(2, 4));
  CHECK(is_maximal(lk24).first);
  CHECK_FALSE(is_strongly_maximal(lk24).first);
}

TEST_CASE("budget and precondition errors") {
  SeidelMatrix s = seidel_of(empty_graph(5));
  CHECK_THROWS_AS(find_extension(s, Quadratic(3), false), Error);  // largest is 4
  CHECK_THROWS_AS(find_extension(s, Quadratic(4), false, 0), Error);
  // generous budget succeeds where the zero budget threw
  CHECK_NOTHROW(find_extension(s, Quadratic(4), false, 1 << 20));
}

TEST_CASE("lattice route agrees with the search at eigenvalue 3") {
  CHECK(strong_maximality_via_lattice(triangular_graph(8)).passed);
  CHECK(strong_maximality_via_lattice(line_graph(complete_bipartite(2, 4))).passed);
  CHECK(strong_maximality_via_lattice(triangular_graph(5)).passed);
  CHECK_THROWS_AS(strong_maximality_via_lattice(cycle_graph(5)), Error);  // largest < 3
}

TEST_CASE("extendability criterion") {
  auto kb4 = extendability_criterion(empty_graph(4));
  CHECK(kb4.extendable);
  CHECK(kb4.exhaustive_scan);
  CHECK(kb4.class_member_found);
  CHECK(kb4.report.passed);

  auto kb5 = extendability_criterion(empty_graph(5));
  CHECK_FALSE(kb5.extendable);
  CHECK(kb5.exhaustive_scan);
  CHECK_FALSE(kb5.class_member_found);
  CHECK(kb5.report.passed);

  auto c5k1 = extendability_criterion(disjoint_union(cycle_graph(5), Graph(1)));
  CHECK_FALSE(c5k1.extendable);
  CHECK(c5k1.report.passed);
}

TEST_CASE("lambda table values and errors") {
  auto table = lambda_table(4);
  REQUIRE(table.size() == 2);
  CHECK(table[0].n == 3);
  REQUIRE(table[0].value);
  CHECK(*table[0].value == Quadratic(2));
  CHECK(table[1].n == 4);
  REQUIRE(table[1].value);
  CHECK(*table[1].value == Quadratic::sqrt_of(5));
  CHECK(table[1].minpoly == IntPoly({Int(-5), Int(0), Int(1)}));
  // the witness really attains the value and avoids the complete class
  SeidelMatrix s = seidel_of(table[1].witness);
  CHECK(compare_largest(s, *table[1].value) == Compare::Equal);
  CHECK(compare_largest(s, Quadratic(1)) == Compare::Greater);
  CHECK_THROWS_AS(lambda_table(2), Error);
  CHECK_THROWS_AS(lambda_table(9), Error);
}

TEST_CASE("extremal constructions") {
  for (int r : {3, 4, 5, 6, 7, 8}) {
    auto [g, rep] = extremal_construction(r);
    CHECK(rep.passed);
    CHECK(g.order() == extremal_order(r));
  }
  CHECK(extremal_order(5) == 10);
  CHECK(extremal_order(6) == 16);
  CHECK(extremal_order(7) == 28);
  CHECK(extremal_order(9) == 16);
  CHECK_THROWS_AS(extremal_construction(2), Error);
}

TEST_CASE("hatK eigenvalue window") {
  for (int n = 2; n <= 10; ++n) CHECK(hatk_eigenvalue_check(n).passed);
  CHECK_THROWS_AS(hatk_eigenvalue_check(1), Error);
}
