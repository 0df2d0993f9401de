#pragma once

// Root lattices A_n / D_n / E_6,7,8: standard root systems, the lattice
// Lambda(G) generated by the cone Gram matrix, exact short-vector
// enumeration (integer HNF kernel reduction + Fincke-Pohst on a rational
// Cholesky factor), type classification by (rank, root count), switching
// class representatives, and the containment table for types D and E.

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "seidelkit/graph.hpp"
#include "seidelkit/matrix.hpp"
#include "seidelkit/numeric.hpp"

namespace seidelkit {

enum class Family { A, D, E };

struct RootLatticeType {
  Family family;
  int rank = 0;

  RootLatticeType(Family f, int r) : family(f), rank(r) {
    switch (f) {
      case Family::A:
        if (r < 1) throw Error("InvalidType: A_n needs n >= 1");
        break;
      case Family::D:
        if (r < 4) throw Error("InvalidType: D_n needs n >= 4");
        break;
      case Family::E:
        if (r < 6 || r > 8) throw Error("InvalidType: E_n needs n in {6,7,8}");
        break;
    }
  }

  bool operator==(const RootLatticeType& o) const { return family == o.family && rank == o.rank; }

  std::string str() const {
    const char* f = family == Family::A ? "A" : family == Family::D ? "D" : "E";
    return std::string(f) + std::to_string(rank);
  }

  long root_count() const {
    switch (family) {
      case Family::A:
        return static_cast<long>(rank) * (rank + 1);
      case Family::D:
        return 2L * rank * (rank - 1);
      case Family::E:
        return rank == 6 ? 72 : rank == 7 ? 126 : 240;
    }
    return 0;
  }
};

struct GramLattice {
  IMat gram;
  int rank = 0;
};

// Roots as coordinate vectors with norms measured by a bilinear form.
struct RootSystem {
  std::vector<std::vector<Rational>> roots;
  RMat form;

  Rational norm(const std::vector<Rational>& v) const {
    std::vector<Rational> fv = form.apply(v);
    Rational s = 0;
    for (size_t i = 0; i < v.size(); ++i) s += v[i] * fv[i];
    return s;
  }
  Rational inner(const std::vector<Rational>& u, const std::vector<Rational>& v) const {
    std::vector<Rational> fv = form.apply(v);
    Rational s = 0;
    for (size_t i = 0; i < u.size(); ++i) s += u[i] * fv[i];
    return s;
  }
};

// ---- standard coordinates ----

inline RootSystem standard_roots(const RootLatticeType& t) {
  RootSystem rs;
  auto push = [&rs](std::vector<Rational> v) { rs.roots.push_back(std::move(v)); };
  if (t.family == Family::A) {
    int dim = t.rank + 1;
    rs.form = RMat::identity(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        if (i == j) continue;
        std::vector<Rational> v(dim, Rational(0));
        v[i] = 1;
        v[j] = -1;
        push(std::move(v));
      }
    return rs;
  }
  if (t.family == Family::D) {
    int dim = t.rank;
    rs.form = RMat::identity(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j)
        for (int si : {1, -1})
          for (int sj : {1, -1}) {
            std::vector<Rational> v(dim, Rational(0));
            v[i] = si;
            v[j] = sj;
            push(std::move(v));
          }
    return rs;
  }
  // E_8 = D_8 roots plus (+-1/2)^8 with an even number of minus signs;
  // E_7 / E_6 cut by orthogonality to e_1-e_2 (and e_2-e_3)
  rs.form = RMat::identity(8);
  RootSystem d8 = standard_roots(RootLatticeType(Family::D, 8));
  std::vector<std::vector<Rational>> all = d8.roots;
  for (int mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    std::vector<Rational> v(8);
    for (int i = 0; i < 8; ++i) v[i] = Rational((mask >> i) & 1 ? -1 : 1, 2);
    all.push_back(std::move(v));
  }
  for (auto& v : all) {
    if (t.rank <= 7 && !(v[0] == v[1])) continue;
    if (t.rank <= 6 && !(v[1] == v[2])) continue;
    push(std::move(v));
  }
  return rs;
}

// ---- Lambda(G) ----

inline GramLattice lambda_lattice(const Graph& g) {
  Graph cone = cone_graph(g);
  IMat gram = cone.adjacency();
  for (int i = 0; i < cone.order(); ++i) gram(i, i) = 2;
  auto field = to_field(gram);
  if (!psd_status(field).psd) throw Error("EigenvalueTooLarge");
  return GramLattice{gram, rank_of(field)};
}

// ---- integer Hermite normal form (row lattice basis) ----

// Returns a basis (as rows) of the lattice generated by the input rows.
inline std::vector<std::vector<Int>> hnf_rows(std::vector<std::vector<Int>> rows) {
  if (rows.empty()) return rows;
  const size_t cols = rows[0].size();
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows.size(); ++col) {
    // gcd elimination in this column below `row`
    for (;;) {
      size_t best = rows.size();
      for (size_t i = row; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        if (best == rows.size() || abs(rows[i][col]) < abs(rows[best][col])) best = i;
      }
      if (best == rows.size()) break;
      std::swap(rows[row], rows[best]);
      bool reduced = true;
      for (size_t i = row + 1; i < rows.size(); ++i) {
        if (rows[i][col] == 0) continue;
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[row][col].get_mpz_t());
        for (size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[row][j];
        if (rows[i][col] != 0) reduced = false;
      }
      if (reduced) break;
    }
    if (rows[row][col] != 0) {
      if (rows[row][col] < 0)
        for (size_t j = 0; j < cols; ++j) rows[row][j] = -rows[row][j];
      // reduce the rows above
      for (size_t i = 0; i < row; ++i) {
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), rows[row][col].get_mpz_t());
        if (q != 0)
          for (size_t j = 0; j < cols; ++j) rows[i][j] -= q * rows[row][j];
      }
      ++row;
    }
  }
  rows.resize(row);
  return rows;
}

// ---- root enumeration ----

namespace detail {

struct ReducedLattice {
  RMat basis;      // rows: lattice basis in coordinates of the generator subset
  RMat gram;       // basis Gram matrix (integer entries)
  std::vector<int> generators;  // indices of the chosen independent generators
};

// Quotient the generator presentation by its relation kernel: pick a
// maximal independent generator subset, express every generator in it, and
// HNF-reduce the resulting rational coordinate rows to a Z-basis.
inline ReducedLattice reduce_generators(const GramLattice& lat) {
  const int n = lat.gram.rows();
  const int r = lat.rank;
  RMat gq = lat.gram.template map<Rational>([](const Int& x) { return Rational(x); });
  std::vector<int> sel;
  for (int i = 0; i < n && static_cast<int>(sel.size()) < r; ++i) {
    std::vector<int> trial = sel;
    trial.push_back(i);
    RMat sub(static_cast<int>(trial.size()), static_cast<int>(trial.size()));
    for (size_t a = 0; a < trial.size(); ++a)
      for (size_t b = 0; b < trial.size(); ++b) sub(static_cast<int>(a), static_cast<int>(b)) = gq(trial[a], trial[b]);
    if (rank_of(sub) == static_cast<int>(trial.size())) sel = std::move(trial);
  }
  if (static_cast<int>(sel.size()) != r) throw Error("reduce_generators: rank deficiency");
  RMat gsel(r, r);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) gsel(a, b) = gq(sel[a], sel[b]);
  // coordinates of every generator in the selected basis
  std::vector<std::vector<Rational>> coords;
  for (int j = 0; j < n; ++j) {
    std::vector<Rational> rhs(r);
    for (int a = 0; a < r; ++a) rhs[a] = gq(sel[a], j);
    auto c = solve_symmetric(gsel, rhs);
    if (!c) throw Error("reduce_generators: generator outside span");
    coords.push_back(std::move(*c));
  }
  // common denominator, integer HNF, rescale back
  Int den = 1;
  for (const auto& v : coords)
    for (const auto& q : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<std::vector<Int>> rows;
  for (const auto& v : coords) {
    std::vector<Int> row(r);
    for (int a = 0; a < r; ++a) row[a] = v[a].get_num() * (den / v[a].get_den());
    rows.push_back(std::move(row));
  }
  auto basis_rows = hnf_rows(std::move(rows));
  if (static_cast<int>(basis_rows.size()) != r) throw Error("reduce_generators: HNF rank mismatch");
  RMat basis(r, r);
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b) basis(a, b) = Rational(basis_rows[a][b]) / Rational(den);
  RMat gram = basis * gsel * basis.transposed();
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      if (gram(a, b).get_den() != 1) throw Error("reduce_generators: non-integral lattice");
  return ReducedLattice{std::move(basis), std::move(gram), std::move(sel)};
}

// All x in Z^r with x^T gram x == norm, by Fincke-Pohst on the exact LDL^T.
inline std::vector<std::vector<Int>> short_vectors(const RMat& gram, const Rational& target) {
  const int r = gram.rows();
  auto f = ldl_psd(gram);
  for (int i = 0; i < r; ++i)
    if (sign_of(f.d[i]) <= 0) throw Error("short_vectors: form not positive definite");
  std::vector<std::vector<Int>> out;
  std::vector<Int> x(r, Int(0));
  // levels from r-1 down to 0; y_k = x_k + sum_{j>k} L(j,k) x_j
  std::function<void(int, const Rational&)> rec = [&](int k, const Rational& rem) {
    if (k < 0) {
      if (rem == 0) {
        bool zero = true;
        for (const auto& v : x)
          if (v != 0) zero = false;
        if (!zero) out.push_back(x);
      }
      return;
    }
    Rational c = 0;
    for (int j = k + 1; j < r; ++j) c += f.l(j, k) * Rational(x[j]);
    // d_k (x_k + c)^2 <= rem
    Rational bound2 = rem / f.d[k];
    double approx = std::sqrt(std::max(0.0, bound2.get_d()));
    double centre = -c.get_d();
    long lo = static_cast<long>(std::floor(centre - approx)) - 2;
    long hi = static_cast<long>(std::ceil(centre + approx)) + 2;
    for (long t = lo; t <= hi; ++t) {
      Rational y = Rational(t) + c;
      Rational used = f.d[k] * y * y;
      if (used > rem) continue;
      x[k] = t;
      rec(k - 1, rem - used);
    }
    x[k] = 0;
  };
  rec(r - 1, target);
  return out;
}

}  // namespace detail

inline RootSystem enumerate_roots(const GramLattice& lat) {
  if (lat.rank == 0) return RootSystem{{}, RMat(0, 0)};
  auto red = detail::reduce_generators(lat);
  auto vecs = detail::short_vectors(red.gram, Rational(2));
  RootSystem rs;
  rs.form = red.gram;
  for (auto& v : vecs) {
    std::vector<Rational> q(v.size());
    for (size_t i = 0; i < v.size(); ++i) q[i] = Rational(v[i]);
    rs.roots.push_back(std::move(q));
  }
  return rs;
}

// ---- classification by (rank, root count) ----

inline RootLatticeType classify(const GramLattice& lat) {
  RootSystem rs = enumerate_roots(lat);
  const int r = lat.rank;
  const long count = static_cast<long>(rs.roots.size());
  // root-generated: the roots must span the whole lattice over Z
  {
    std::vector<std::vector<Int>> rows;
    for (const auto& v : rs.roots) {
      std::vector<Int> row(v.size());
      for (size_t i = 0; i < v.size(); ++i) row[i] = v[i].get_num();
      rows.push_back(std::move(row));
    }
    auto h = hnf_rows(std::move(rows));
    bool generated = static_cast<int>(h.size()) == r;
    if (generated) {
      Int det = 1;
      for (int i = 0; i < r; ++i) det *= h[i][i];
      generated = det == 1;
    }
    if (!generated) throw Error("NotRootGenerated");
  }
  // irreducible: the root graph under nonzero inner products is connected
  {
    const size_t m = rs.roots.size();
    std::vector<int> comp(m, -1);
    std::vector<size_t> stack;
    size_t seen = 0;
    if (m > 0) {
      stack.push_back(0);
      comp[0] = 0;
      while (!stack.empty()) {
        size_t v = stack.back();
        stack.pop_back();
        ++seen;
        for (size_t w = 0; w < m; ++w) {
          if (comp[w] >= 0) continue;
          if (sign_of(rs.inner(rs.roots[v], rs.roots[w])) != 0) {
            comp[w] = 0;
            stack.push_back(w);
          }
        }
      }
    }
    if (seen != m) throw Error("NotIrreducible");
  }
  if (count == static_cast<long>(r) * (r + 1)) return RootLatticeType(Family::A, r);
  if (r >= 4 && count == 2L * r * (r - 1)) return RootLatticeType(Family::D, r);
  if (r == 6 && count == 72) return RootLatticeType(Family::E, 6);
  if (r == 7 && count == 126) return RootLatticeType(Family::E, 7);
  if (r == 8 && count == 240) return RootLatticeType(Family::E, 8);
  throw Error("classify: unrecognized (rank, root count) = (" + std::to_string(r) + ", " +
              std::to_string(count) + ")");
}

// ---- switching class representatives ----

// Graph with A + 2I equal to the Gram matrix of the given norm-2 vectors.
inline Graph graph_from_root_set(const RootSystem& ambient, const std::vector<std::vector<Rational>>& x) {
  const int n = static_cast<int>(x.size());
  Graph g(n);
  for (int i = 0; i < n; ++i) {
    if (!(ambient.norm(x[i]) == 2)) throw Error("graph_from_root_set: vector of norm != 2");
    for (int j = i + 1; j < n; ++j) {
      Rational ip = ambient.inner(x[i], x[j]);
      if (ip == 1) g.set_edge(i, j);
      else if (!(ip == 0))
        throw Error("graph_from_root_set: inner product outside {0,1}");
    }
  }
  return g;
}

// Explicit choice of switching root r and half-set X per type.
inline Graph switching_class_rep(const RootLatticeType& t) {
  std::vector<std::vector<Rational>> x;
  auto unit2 = [](int dim, int i, int j, int si = 1, int sj = 1) {
    std::vector<Rational> v(dim, Rational(0));
    v[i] = si;
    v[j] = sj;
    return v;
  };
  RootSystem ambient;
  if (t.family == Family::A) {
    // r = e_1 - e_2, X = { e_1 - e_i : i = 3..n+1 }
    int dim = t.rank + 1;
    ambient.form = RMat::identity(dim);
    for (int i = 2; i < dim; ++i) x.push_back(unit2(dim, 0, i, 1, -1));
  } else if (t.family == Family::D) {
    // r = e_1 + e_2, X = { e_i + e_j : i in {1,2}, j = 3..n }
    int dim = t.rank;
    ambient.form = RMat::identity(dim);
    for (int i = 0; i < 2; ++i)
      for (int j = 2; j < dim; ++j) x.push_back(unit2(dim, i, j));
  } else {
    // r = j/2; X = pairs e_i + e_j inside the orthogonality cut
    ambient.form = RMat::identity(8);
    if (t.rank == 8) {
      for (int i = 0; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) x.push_back(unit2(8, i, j));
    } else if (t.rank == 7) {
      x.push_back(unit2(8, 0, 1));
      for (int i = 2; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) x.push_back(unit2(8, i, j));
    } else {
      for (int i = 3; i < 8; ++i)
        for (int j = i + 1; j < 8; ++j) x.push_back(unit2(8, i, j));
    }
  }
  return graph_from_root_set(ambient, x);
}

// Containment table for irreducible root lattices of types D and E.
inline bool lattice_inclusion(const RootLatticeType& s, const RootLatticeType& t) {
  if (s.family == Family::A || t.family == Family::A) throw Error("UnsupportedFamily");
  if (s.family == Family::D && t.family == Family::D) return s.rank <= t.rank;
  if (s.family == Family::E && t.family == Family::E) return s.rank <= t.rank;
  if (s.family == Family::E && t.family == Family::D) return false;
  // D_m inside E_n
  switch (t.rank) {
    case 6: return s.rank <= 5;
    case 7: return s.rank <= 6;
    default: return s.rank <= 8;
  }
}

}  // namespace seidelkit
