#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "properties.hpp"
#include "seidelkit/seidelkit.hpp"

using namespace seidelkit;

TEST_CASE("root lattice types") {
  CHECK(RootLatticeType(Family::A, 2).root_count() == 6);
  CHECK(RootLatticeType(Family::D, 4).root_count() == 24);
  CHECK(RootLatticeType(Family::E, 6).root_count() == 72);
  CHECK(RootLatticeType(Family::E, 7).root_count() == 126);
  CHECK(RootLatticeType(Family::E, 8).root_count() == 240);
  CHECK(RootLatticeType(Family::D, 5).str() == "D5");
  CHECK_THROWS_AS(RootLatticeType(Family::D, 3), Error);
  CHECK_THROWS_AS(RootLatticeType(Family::E, 9), Error);
  CHECK_THROWS_AS(RootLatticeType(Family::A, 0), Error);
}

TEST_CASE("standard root systems have the right size and norms") {
  for (int n = 1; n <= 8; ++n) {
    RootLatticeType t(Family::A, n);
    auto rs = standard_roots(t);
    CHECK(static_cast<long>(rs.roots.size()) == t.root_count());
    for (const auto& r : rs.roots) CHECK(rs.norm(r) == 2);
  }
  for (int n = 4; n <= 8; ++n) {
    RootLatticeType t(Family::D, n);
    auto rs = standard_roots(t);
    CHECK(static_cast<long>(rs.roots.size()) == t.root_count());
  }
  for (int n = 6; n <= 8; ++n) {
    RootLatticeType t(Family::E, n);
    auto rs = standard_roots(t);
    CHECK(static_cast<long>(rs.roots.size()) == t.root_count());
    for (const auto& r : rs.roots) CHECK(rs.norm(r) == 2);
  }
}

TEST_CASE("hermite normal form basics") {
  std::vector<std::vector<Int>> rows = {{Int(2), Int(0)}, {Int(3), Int(0)}, {Int(0), Int(5)}};
  auto h = hnf_rows(rows);
  REQUIRE(h.size() == 2);
  CHECK(h[0][0] == 1);  // gcd(2,3)
  CHECK(h[1][1] == 5);
  // rank-deficient input
  std::vector<std::vector<Int>> dep = {{Int(1), Int(2)}, {Int(2), Int(4)}};
  CHECK(hnf_rows(dep).size() == 1);
}

TEST_CASE("lambda lattice construction") {
  auto k4 = lambda_lattice(complete_graph(4));
  CHECK(k4.rank == 5);
  auto c4 = lambda_lattice(cycle_graph(4));
  CHECK(c4.rank == 4);
  CHECK(lambda_lattice(triangular_graph(8)).rank == 8);
  // rank identity with the Seidel side
  for (const char* spec : {"L(K5)", "L(K2,4)", "C5"}) {
    Graph g = parse_graph_spec(spec);
    CHECK(lambda_lattice(g).rank == rank_at(seidel_of(g), Quadratic(3)) + 1);
  }
  CHECK_THROWS_AS(lambda_lattice(empty_graph(6)), Error);  // largest eigenvalue 5 > 3
}

TEST_CASE("root enumeration matches the classification table") {
  CHECK(enumerate_roots(lambda_lattice(complete_graph(4))).roots.size() == 30);   // A_5
  CHECK(enumerate_roots(lambda_lattice(cycle_graph(4))).roots.size() == 24);      // D_4
  CHECK(enumerate_roots(lambda_lattice(triangular_graph(5))).roots.size() == 72); // E_6
  CHECK(classify(lambda_lattice(complete_graph(4))) == RootLatticeType(Family::A, 5));
  CHECK(classify(lambda_lattice(cycle_graph(4))) == RootLatticeType(Family::D, 4));
  CHECK(classify(lambda_lattice(triangular_graph(5))) == RootLatticeType(Family::E, 6));
  CHECK(classify(lambda_lattice(disjoint_union(triangular_graph(6), Graph(1)))) ==
        RootLatticeType(Family::E, 7));
  CHECK(classify(lambda_lattice(line_graph(complete_bipartite(2, 5)))) ==
        RootLatticeType(Family::D, 7));
}

TEST_CASE("enumerate_roots agrees with standard coordinates") {
  // Gram matrix of a simple-root basis generates the full root system
  for (auto [fam, rank] : {std::pair{Family::A, 3}, {Family::D, 4}, {Family::E, 6}}) {
    RootLatticeType t(fam, rank);
    auto rs = standard_roots(t);
    // greedy pick of an independent generating subset happens inside
    const int m = static_cast<int>(rs.roots.size());
    IMat gram(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Rational ip = rs.inner(rs.roots[i], rs.roots[j]);
        REQUIRE(ip.get_den() == 1);
        gram(i, j) = ip.get_num();
      }
    GramLattice lat{gram, rank};
    CHECK(static_cast<long>(enumerate_roots(lat).roots.size()) == t.root_count());
    CHECK(classify(lat) == t);
  }
}

TEST_CASE("classify rejects reducible and non-root-generated input") {
  IMat reducible(2, 2);
  reducible(0, 0) = 2;
  reducible(1, 1) = 2;
  CHECK_THROWS_AS(classify(GramLattice{reducible, 2}), Error);  // A_1 + A_1
  IMat scaled(1, 1);
  scaled(0, 0) = 4;  // no vectors of norm 2
  CHECK_THROWS_AS(classify(GramLattice{scaled, 1}), Error);
}

TEST_CASE("switching class representatives") {
  CHECK(is_switching_equivalent(switching_class_rep(RootLatticeType(Family::A, 5)),
                                complete_graph(4)));
  CHECK(is_switching_equivalent(switching_class_rep(RootLatticeType(Family::D, 6)),
                                line_graph(complete_bipartite(2, 4))));
  CHECK(is_switching_equivalent(switching_class_rep(RootLatticeType(Family::E, 6)),
                                triangular_graph(5)));
  CHECK(is_switching_equivalent(switching_class_rep(RootLatticeType(Family::E, 7)),
                                disjoint_union(triangular_graph(6), Graph(1))));
  CHECK(is_switching_equivalent(switching_class_rep(RootLatticeType(Family::E, 8)),
                                triangular_graph(8)));
}

TEST_CASE("inclusion table") {
  auto D = [](int n) { return RootLatticeType(Family::D, n); };
  auto E = [](int n) { return RootLatticeType(Family::E, n); };
  CHECK(lattice_inclusion(D(8), E(8)));
  CHECK_FALSE(lattice_inclusion(D(7), E(7)));
  CHECK_FALSE(lattice_inclusion(D(6), E(6)));
  CHECK(lattice_inclusion(D(5), E(6)));
  CHECK(lattice_inclusion(D(6), E(7)));
  CHECK(lattice_inclusion(E(6), E(7)));
  CHECK(lattice_inclusion(E(7), E(8)));
  CHECK_FALSE(lattice_inclusion(E(6), D(9)));
  CHECK(lattice_inclusion(D(4), D(10)));
  CHECK_FALSE(lattice_inclusion(D(10), D(4)));
  CHECK_THROWS_AS(lattice_inclusion(RootLatticeType(Family::A, 5), D(6)), Error);
}

TEST_CASE("half-set choices for E8 are interchangeable") {
  // N = roots with inner product 1 against r = j/2 pairs up as {a, r-a};
  // any transversal of the 28 pairs gives a member of the same class
  auto rs = standard_roots(RootLatticeType(Family::E, 8));
  std::vector<Rational> r(8, Rational(1, 2));
  std::vector<std::vector<std::vector<Rational>>> pairs;
  std::vector<std::vector<Rational>> seen;
  for (const auto& a : rs.roots) {
    if (!(rs.inner(r, a) == 1)) continue;
    bool used = false;
    for (const auto& s : seen)
      if (s == a) used = true;
    if (used) continue;
    std::vector<Rational> partner(8);
    for (int i = 0; i < 8; ++i) partner[i] = r[i] - a[i];
    pairs.push_back({a, partner});
    seen.push_back(a);
    seen.push_back(partner);
  }
  REQUIRE(pairs.size() == 28);
  Graph reference = triangular_graph(8);
  std::mt19937_64 rng(321);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<std::vector<Rational>> x;
    for (const auto& pr : pairs) x.push_back(pr[rng() & 1]);
    Graph g = graph_from_root_set(rs, x);
    CHECK(is_switching_equivalent(g, reference));
  }
}

TEST_CASE("lattice classification is switching invariant") {
  std::mt19937_64 rng(55);
  Graph g = line_graph(complete_bipartite(2, 4));  // D_6 class
  for (int trial = 0; trial < 5; ++trial) {
    std::uint64_t u = rng() & ((std::uint64_t{1} << g.order()) - 1);
    Graph h = switch_graph(g, u);
    if (compare_largest(seidel_of(h), Quadratic(3)) == Compare::Greater) continue;
    CHECK(classify(lambda_lattice(h)) == RootLatticeType(Family::D, 6));
  }
}
