#include <random>

#include "catch2/catch_amalgamated.hpp"
#include "properties.hpp"
#include "seidelkit/seidelkit.hpp"

using namespace seidelkit;
using testkit::det_cofactor;

TEST_CASE("rational and integer helpers") {
  CHECK(isqrt_floor(Int(0)) == 0);
  CHECK(isqrt_floor(Int(35)) == 5);
  CHECK(isqrt_floor(Int(36)) == 6);
  Int root;
  CHECK(is_perfect_square(Int(49), &root));
  CHECK(root == 7);
  CHECK_FALSE(is_perfect_square(Int(50)));
  Int s, d;
  squarefree_decompose(Int(180), s, d);  // 180 = 6^2 * 5
  CHECK(s == 6);
  CHECK(d == 5);
  CHECK(is_prime(13));
  CHECK_FALSE(is_prime(9));
  CHECK_FALSE(is_prime(1));
}

TEST_CASE("quadratic field arithmetic and exact sign") {
  Quadratic sqrt5 = Quadratic::sqrt_of(5);
  CHECK(sqrt5.sign() == 1);
  CHECK((Quadratic(2) - sqrt5).sign() == -1);
  CHECK((Quadratic(Rational(7, 3)) - sqrt5).sign() == 1);
  CHECK(sqrt5 * sqrt5 == Quadratic(5));
  CHECK(Quadratic::sqrt_of(8) == Quadratic(0, 2, 2));   // canonicalized radicand
  CHECK(Quadratic(0, 3, 1) == Quadratic(3));            // sqrt(1) folds in
  CHECK(Quadratic(1) / sqrt5 == Quadratic(0, Rational(1, 5), 5));
  Quadratic x(Rational(-3, 2), Rational(1, 2), 65);     // (-3+sqrt(65))/2
  CHECK((x * x + Quadratic(3) * x - Quadratic(14)) == Quadratic(0));
  CHECK_THROWS_AS(sqrt5 + Quadratic::sqrt_of(3), Error);
  CHECK_THROWS_AS(Quadratic(1) / Quadratic(0), Error);
}

TEST_CASE("field sign is multiplicative on a grid") {
  std::vector<Quadratic> grid;
  for (int a = -2; a <= 2; ++a)
    for (int b = -2; b <= 2; ++b) grid.push_back(Quadratic(Rational(a), Rational(b, 3), 5));
  for (const auto& x : grid)
    for (const auto& y : grid) CHECK(sign_of(x * y) == sign_of(x) * sign_of(y));
}

TEST_CASE("char_poly agrees with cofactor determinants") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 30; ++trial) {
    int n = 2 + static_cast<int>(rng() % 6);
    IMat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Int v = static_cast<long>(rng() % 7) - 3;
        m(i, j) = v;
        m(j, i) = v;
      }
    IntPoly cp = char_poly(m);
    for (long t : {-2L, 0L, 1L, 3L}) {
      IMat shifted(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) shifted(i, j) = (i == j ? Int(t) : Int(0)) - m(i, j);
      CHECK(cp.eval(Int(t)) == det_cofactor(shifted));
    }
  }
}

TEST_CASE("psd_status certificates") {
  // rank and PSD on identity
  CHECK(psd_status(to_field(IMat::identity(2))).psd);
  CHECK(psd_status(to_field(IMat::identity(2))).rank == 2);
  // indefinite with exact negative witness
  IMat m(2, 2);
  m(0, 0) = 1; m(0, 1) = 2; m(1, 0) = 2; m(1, 1) = 1;
  auto cert = psd_status(to_field(m));
  REQUIRE_FALSE(cert.psd);
  REQUIRE(cert.witness.size() == 2);
  auto mv = to_field(m).apply(cert.witness);
  CHECK(dot(cert.witness, mv).sign() < 0);
  // rank = order - multiplicity of eigenvalue 0, randomized
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    IMat b(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) b(i, j) = static_cast<long>(rng() % 5) - 2;
    IMat g(n, n);  // b b^T is PSD
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Int s = 0;
        for (int k = 0; k < n; ++k) s += b(i, k) * b(j, k);
        g(i, j) = s;
      }
    auto c = psd_status(to_field(g));
    REQUIRE(c.psd);
    IntPoly cp = char_poly(g);
    int zero_mult = 0;
    while (zero_mult <= n && cp.c.size() > static_cast<size_t>(zero_mult) &&
           cp.c[zero_mult] == 0)
      ++zero_mult;
    CHECK(c.rank == n - zero_mult);
    CHECK(c.rank == rank_of(to_field(g)));
  }
}

TEST_CASE("solve_symmetric exactness") {
  QMat id = to_field(IMat::identity(4));
  std::vector<Quadratic> j(4, Quadratic(1));
  auto x = solve_symmetric(id, j);
  REQUIRE(x);
  CHECK(dot(*x, j) == Quadratic(4));
  QMat zero(1, 1);
  zero(0, 0) = Quadratic(0);
  CHECK_FALSE(solve_symmetric(zero, std::vector<Quadratic>{Quadratic(1)}));
  // consistency on a random singular system
  QMat m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) m(i, k) = Quadratic(Rational((i + 1) * (k + 1)));  // rank 1
  std::vector<Quadratic> b = {Quadratic(2), Quadratic(4), Quadratic(6)};
  auto sol = solve_symmetric(m, b);
  REQUIRE(sol);
  auto mb = m.apply(*sol);
  for (int i = 0; i < 3; ++i) CHECK(mb[i] == b[i]);
}

TEST_CASE("largest_root isolation and multiplicity") {
  // (x-1)^2 (x+2)
  IntPoly p = IntPoly({Int(-1), Int(1)}).pow(2) * IntPoly({Int(2), Int(1)});
  auto lr = largest_root(p);
  CHECK(lr.multiplicity == 2);
  CHECK(lr.interval.lo < Rational(1));
  CHECK(lr.interval.hi > Rational(1));
  IntPoly q5({Int(-5), Int(0), Int(1)});
  auto v5 = largest_root(q5);
  CHECK(v5.multiplicity == 1);
  CHECK(SturmChain(q5).count(v5.interval.lo, v5.interval.hi) == 1);
  CHECK(v5.interval.hi > Rational(2));  // the isolated root is sqrt(5) > 2
  CHECK(v5.interval.lo < Rational(9, 4));
  IntPoly q7({Int(-14), Int(3), Int(1)});
  auto l7 = largest_root(q7);
  CHECK(SturmChain(q7).count(l7.interval.lo, l7.interval.hi) == 1);
  CHECK(SturmChain(q7).count(Rational(2), l7.interval.hi) == 1);  // root in (2,3)
  CHECK(SturmChain(q7).count(Rational(3), l7.interval.hi) == 0);
  CHECK_THROWS_AS(largest_root(IntPoly({Int(1), Int(0), Int(1)})), Error);  // x^2 + 1
}

TEST_CASE("identify_root recovers rational and quadratic values") {
  IntPoly p({Int(-5), Int(0), Int(1)});  // x^2 - 5
  auto lr = largest_root(p);
  auto v = identify_root(p, lr.interval);
  REQUIRE(v);
  CHECK(*v == Quadratic::sqrt_of(5));
  IntPoly q({Int(-14), Int(3), Int(1)});
  auto w = identify_root(q, largest_root(q).interval);
  REQUIRE(w);
  CHECK(*w == Quadratic(Rational(-3, 2), Rational(1, 2), 65));
  IntPoly r = IntPoly({Int(-2), Int(1)}) * IntPoly({Int(3), Int(1)});  // roots 2, -3
  auto u = identify_root(r, largest_root(r).interval);
  REQUIRE(u);
  CHECK(*u == Quadratic(2));
  // irreducible cubic: not representable
  IntPoly c({Int(-3), Int(-1), Int(0), Int(1)});  // x^3 - x - 3
  CHECK_FALSE(identify_root(c, largest_root(c).interval));
}

TEST_CASE("compare_roots is exact") {
  IntPoly p5({Int(-5), Int(0), Int(1)});
  IntPoly p65({Int(-14), Int(3), Int(1)});
  auto a = largest_root(p5).interval;
  auto b = largest_root(p65).interval;
  CHECK(compare_roots(p5, a, p65, b) < 0);  // sqrt5 < (-3+sqrt65)/2
  CHECK(compare_roots(p5, a, p5, a) == 0);
  // common root through different polynomials
  IntPoly prod = p5 * IntPoly({Int(-1), Int(1)});
  auto c = largest_root(prod).interval;
  CHECK(compare_roots(p5, a, prod, c) == 0);
}

TEST_CASE("ldl_psd factors PSD matrices and rejects indefinite ones") {
  IMat g(3, 3);
  long vals[3][3] = {{2, 1, 1}, {1, 2, 1}, {1, 1, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g(i, j) = vals[i][j];
  auto f = ldl_psd(to_field(g));
  CHECK(f.rank == 3);
  // reconstruct L D L^T
  QMat l = f.l, rec(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Quadratic s(0);
      for (int k = 0; k < 3; ++k) s += l(i, k) * f.d[k] * l(j, k);
      rec(i, j) = s;
    }
  CHECK(rec == to_field(g));
  IMat ind(2, 2);
  ind(0, 0) = 1; ind(0, 1) = 2; ind(1, 0) = 2; ind(1, 1) = 1;
  CHECK_THROWS_AS(ldl_psd(to_field(ind)), Error);
}
