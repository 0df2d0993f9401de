#pragma once

// Integer and rational polynomials: characteristic polynomials by
// Faddeev-LeVerrier, Sturm-sequence root isolation and counting, exact
// comparison of isolated roots, and identification of rational/quadratic
// roots of monic integer polynomials.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "seidelkit/matrix.hpp"
#include "seidelkit/numeric.hpp"
#include "seidelkit/quadratic.hpp"

namespace seidelkit {

// Coefficients lowest degree first; the zero polynomial is {}.
struct IntPoly {
  std::vector<Int> c;

  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs) : c(std::move(coeffs)) { trim(); }
  static IntPoly constant(const Int& v) { return v == 0 ? IntPoly() : IntPoly({v}); }
  static IntPoly x() { return IntPoly({Int(0), Int(1)}); }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  const Int& lead() const { return c.back(); }
  bool is_monic() const { return !c.empty() && c.back() == 1; }

  bool operator==(const IntPoly& o) const { return c == o.c; }

  Int eval(const Int& t) const {
    Int v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + *it;
    return v;
  }
  Rational eval(const Rational& t) const {
    Rational v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + Rational(*it);
    return v;
  }

  IntPoly operator+(const IntPoly& o) const {
    std::vector<Int> r(std::max(c.size(), o.c.size()), Int(0));
    for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r[i] += o.c[i];
    return IntPoly(std::move(r));
  }
  IntPoly operator-(const IntPoly& o) const {
    std::vector<Int> r(std::max(c.size(), o.c.size()), Int(0));
    for (size_t i = 0; i < c.size(); ++i) r[i] += c[i];
    for (size_t i = 0; i < o.c.size(); ++i) r[i] -= o.c[i];
    return IntPoly(std::move(r));
  }
  IntPoly operator*(const IntPoly& o) const {
    if (is_zero() || o.is_zero()) return IntPoly();
    std::vector<Int> r(c.size() + o.c.size() - 1, Int(0));
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
    return IntPoly(std::move(r));
  }

  IntPoly derivative() const {
    if (c.size() <= 1) return IntPoly();
    std::vector<Int> r(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) r[i - 1] = c[i] * Int(static_cast<long>(i));
    return IntPoly(std::move(r));
  }

  IntPoly pow(int e) const {
    IntPoly r = constant(1);
    for (int i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
      if (c[i] == 0) continue;
      Int a = c[i];
      if (!first) os << (a > 0 ? " + " : " - ");
      else if (a < 0) os << "-";
      Int aa = abs(a);
      first = false;
      if (i == 0 || aa != 1) os << aa.get_str();
      if (i >= 1) os << "x";
      if (i >= 2) os << "^" << i;
    }
    return os.str();
  }
};

// Exact division; throws when the division is not exact.
inline IntPoly divide_exact(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) throw Error("IntPoly: division by zero polynomial");
  IntPoly rem = num;
  std::vector<Int> q(num.is_zero() ? 0 : std::max(0, num.degree() - den.degree() + 1), Int(0));
  while (!rem.is_zero() && rem.degree() >= den.degree()) {
    Int qc;
    if (!mpz_divisible_p(rem.lead().get_mpz_t(), den.lead().get_mpz_t()))
      throw Error("IntPoly: inexact division");
    qc = rem.lead() / den.lead();
    int shift = rem.degree() - den.degree();
    q[shift] = qc;
    std::vector<Int> sub(rem.c);
    for (size_t i = 0; i < den.c.size(); ++i) sub[i + shift] -= qc * den.c[i];
    rem = IntPoly(std::move(sub));
  }
  if (!rem.is_zero()) throw Error("IntPoly: inexact division");
  return IntPoly(std::move(q));
}

inline bool divides(const IntPoly& den, const IntPoly& num) {
  try {
    (void)divide_exact(num, den);
    return true;
  } catch (const Error&) {
    return false;
  }
}

// ---- rational polynomials (internal helpers) ----

struct RatPoly {
  std::vector<Rational> c;

  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs) : c(std::move(coeffs)) { trim(); }
  explicit RatPoly(const IntPoly& p) {
    c.reserve(p.c.size());
    for (const auto& a : p.c) c.emplace_back(a);
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }

  Rational eval(const Rational& t) const {
    Rational v = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * t + *it;
    return v;
  }

  RatPoly derivative() const {
    if (c.size() <= 1) return RatPoly();
    std::vector<Rational> r(c.size() - 1);
    for (size_t i = 1; i < c.size(); ++i) r[i - 1] = c[i] * Rational(static_cast<long>(i));
    return RatPoly(std::move(r));
  }
};

inline RatPoly rat_rem(RatPoly num, const RatPoly& den) {
  while (!num.is_zero() && num.degree() >= den.degree()) {
    Rational f = num.c.back() / den.c.back();
    int shift = num.degree() - den.degree();
    for (size_t i = 0; i < den.c.size(); ++i) num.c[i + shift] -= f * den.c[i];
    num.trim();
  }
  return num;
}

inline RatPoly rat_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = rat_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) {
    Rational lead = a.c.back();
    for (auto& x : a.c) x /= lead;
  }
  return a;
}

// Primitive integer form of a rational polynomial (content removed, positive
// leading coefficient).
inline IntPoly to_primitive(const RatPoly& p) {
  if (p.is_zero()) return IntPoly();
  Int den_lcm = 1;
  for (const auto& q : p.c) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den().get_mpz_t());
  std::vector<Int> c(p.c.size());
  Int g = 0;
  for (size_t i = 0; i < p.c.size(); ++i) {
    c[i] = p.c[i].get_num() * (den_lcm / p.c[i].get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c[i].get_mpz_t());
  }
  if (g > 1)
    for (auto& x : c) x /= g;
  if (c.back() < 0)
    for (auto& x : c) x = -x;
  return IntPoly(std::move(c));
}

inline IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
  return to_primitive(rat_gcd(RatPoly(a), RatPoly(b)));
}

inline RatPoly rat_quotient(const RatPoly& num, const RatPoly& den) {
  RatPoly rem = num;
  std::vector<Rational> q(std::max(0, num.degree() - den.degree() + 1), Rational(0));
  while (!rem.is_zero() && rem.degree() >= den.degree()) {
    Rational f = rem.c.back() / den.c.back();
    int shift = rem.degree() - den.degree();
    q[shift] = f;
    for (size_t i = 0; i < den.c.size(); ++i) rem.c[i + shift] -= f * den.c[i];
    rem.trim();
  }
  if (!rem.is_zero()) throw Error("RatPoly: inexact division");
  return RatPoly(std::move(q));
}

inline IntPoly squarefree_part(const IntPoly& p) {
  if (p.degree() <= 1) return p;
  IntPoly g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return p;
  return to_primitive(rat_quotient(RatPoly(p), RatPoly(g)));
}

// ---- Sturm sequences ----

class SturmChain {
 public:
  explicit SturmChain(const IntPoly& squarefree) {
    chain_.push_back(RatPoly(squarefree));
    chain_.push_back(chain_[0].derivative());
    while (!chain_.back().is_zero()) {
      RatPoly r = rat_rem(chain_[chain_.size() - 2], chain_.back());
      for (auto& x : r.c) x = -x;
      if (r.is_zero()) break;
      chain_.push_back(std::move(r));
    }
  }

  int sign_variations(const Rational& t) const {
    int v = 0, prev = 0;
    for (const auto& p : chain_) {
      int s = sign_of(p.eval(t));
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  }

  // number of roots in the half-open interval (a, b]
  int count(const Rational& a, const Rational& b) const {
    return sign_variations(a) - sign_variations(b);
  }

 private:
  std::vector<RatPoly> chain_;
};

struct RootInterval {
  Rational lo, hi;  // open interval (lo, hi) containing exactly one root
  std::optional<Rational> exact;
};

inline Rational cauchy_bound(const IntPoly& p) {
  Rational b = 0;
  Rational lead(abs(p.lead()));
  for (int i = 0; i < p.degree(); ++i) {
    Rational q = Rational(abs(p.c[i])) / lead;
    if (q > b) b = q;
  }
  return b + 1;
}

// Isolation context for real roots of one squarefree polynomial.
class RootIsolator {
 public:
  explicit RootIsolator(IntPoly squarefree) : g_(std::move(squarefree)), sturm_(g_) {}

  const IntPoly& poly() const { return g_; }
  const SturmChain& sturm() const { return sturm_; }

  int count(const Rational& a, const Rational& b) const { return sturm_.count(a, b); }

  std::vector<RootInterval> isolate_all() const {
    std::vector<RootInterval> out;
    Rational b = cauchy_bound(g_);
    isolate_rec(-b, b, sturm_.count(-b, b), out);
    return out;
  }

  std::optional<RootInterval> largest() const {
    Rational b = cauchy_bound(g_);
    Rational lo = -b, hi = b;
    if (sturm_.count(lo, hi) == 0) return std::nullopt;
    while (sturm_.count(lo, hi) > 1) {
      Rational mid = (lo + hi) / 2;
      if (sturm_.count(mid, hi) >= 1) lo = mid;
      else hi = mid;
    }
    return finish(lo, hi);
  }

  // shrink an isolating interval by one bisection step
  void refine(RootInterval& iv) const {
    if (iv.exact) {
      Rational w = (iv.hi - iv.lo) / 4;
      iv.lo = *iv.exact - w;
      iv.hi = *iv.exact + w;
      return;
    }
    Rational mid = (iv.lo + iv.hi) / 2;
    if (sign_of(g_.eval(mid)) == 0) {
      iv.exact = mid;
      return;
    }
    if (sturm_.count(iv.lo, mid) == 1) iv.hi = mid;
    else iv.lo = mid;
  }

 private:
  RootInterval finish(Rational lo, Rational hi) const {
    // (lo, hi] holds one root; make the interval open and root-centred
    RootInterval iv{lo, hi, std::nullopt};
    if (sign_of(g_.eval(hi)) == 0) {
      iv.exact = hi;
      Rational w = (hi - lo) / 2;
      if (w == 0) w = 1;
      iv.lo = hi - w;
      iv.hi = hi + w;
    }
    return iv;
  }

  void isolate_rec(const Rational& lo, const Rational& hi, int cnt,
                   std::vector<RootInterval>& out) const {
    if (cnt == 0) return;
    if (cnt == 1) {
      out.push_back(finish(lo, hi));
      return;
    }
    Rational mid = (lo + hi) / 2;
    if (sign_of(g_.eval(mid)) == 0) {
      // nudge the split point off the root
      Rational eps = (hi - lo) / 1024;
      Rational m2 = mid + eps;
      int right = sturm_.count(m2, hi);
      isolate_rec(lo, m2, cnt - right, out);
      isolate_rec(m2, hi, right, out);
      return;
    }
    int right = sturm_.count(mid, hi);
    isolate_rec(lo, mid, cnt - right, out);
    isolate_rec(mid, hi, right, out);
  }

  IntPoly g_;
  SturmChain sturm_;
};

// ---- roots of general integer polynomials ----

struct LargestRoot {
  RootInterval interval;
  int multiplicity = 1;
};

// Multiplicity of the root isolated (among roots of p) by iv, via the
// gcd-with-derivative chain.
inline int root_multiplicity(const IntPoly& p, const RootInterval& iv) {
  int m = 0;
  IntPoly cur = p;
  Rational lo = iv.lo, hi = iv.hi;
  while (cur.degree() >= 1) {
    IntPoly sf = squarefree_part(cur);
    SturmChain st(sf);
    if (iv.exact) {
      if (sign_of(sf.eval(*iv.exact)) != 0) break;
    } else if (st.count(lo, hi) == 0) {
      break;
    }
    ++m;
    cur = poly_gcd(cur, cur.derivative());
  }
  return m == 0 ? 1 : m;
}

inline LargestRoot largest_root(const IntPoly& p) {
  if (p.degree() < 1) throw Error("NoRealRoot");
  IntPoly g = squarefree_part(p);
  RootIsolator iso(g);
  auto iv = iso.largest();
  if (!iv) throw Error("NoRealRoot");
  return LargestRoot{*iv, root_multiplicity(p, *iv)};
}

// Exact comparison of two isolated real roots.
inline int compare_roots(const IntPoly& g1, RootInterval i1, const IntPoly& g2, RootInterval i2) {
  if (i1.exact && i2.exact) return sign_of(*i1.exact - *i2.exact) ;
  RootIsolator iso1(squarefree_part(g1));
  RootIsolator iso2(squarefree_part(g2));
  IntPoly h = poly_gcd(iso1.poly(), iso2.poly());
  std::optional<SturmChain> hs;
  if (h.degree() >= 1) hs.emplace(h);
  for (;;) {
    if (i1.hi <= i2.lo) return -1;
    if (i2.hi <= i1.lo) return 1;
    if (i1.exact && sign_of(iso2.poly().eval(*i1.exact)) == 0 &&
        *i1.exact > i2.lo && *i1.exact < i2.hi)
      return 0;
    if (i2.exact && sign_of(iso1.poly().eval(*i2.exact)) == 0 &&
        *i2.exact > i1.lo && *i2.exact < i1.hi)
      return 0;
    if (hs) {
      Rational lo = std::max(i1.lo, i2.lo), hi = std::min(i1.hi, i2.hi);
      if (lo < hi && hs->count(lo, hi) >= 1 && iso1.count(lo, hi) == 1 &&
          iso2.count(lo, hi) == 1)
        return 0;
    }
    iso1.refine(i1);
    iso2.refine(i2);
  }
}

// Quadratic-field value of the root isolated by iv, when its minimal
// polynomial over Q has degree at most 2 and p is monic. Returns nullopt for
// higher-degree roots.
inline std::optional<Quadratic> identify_root(const IntPoly& p, RootInterval iv) {
  if (!p.is_monic()) return std::nullopt;
  IntPoly g = squarefree_part(p);
  RootIsolator iso(g);
  if (iv.exact) return Quadratic(*iv.exact);
  // integer root: narrow below width 1 and test the at most two candidates
  RootInterval t = iv;
  while (t.hi - t.lo >= 1 && !t.exact) iso.refine(t);
  if (t.exact) return Quadratic(*t.exact);
  Int lo_floor;
  mpz_fdiv_q(lo_floor.get_mpz_t(), t.lo.get_num().get_mpz_t(), t.lo.get_den().get_mpz_t());
  for (Int k = lo_floor; Rational(k) < t.hi; ++k)
    if (Rational(k) > t.lo && g.eval(k) == 0) return Quadratic(Rational(k));
  // quadratic root: its conjugate is another real root of g; recover the
  // integer trace and norm from refined intervals
  auto all = iso.isolate_all();
  for (auto& other : all) {
    RootInterval a = t, b = other;
    // skip the interval isolating the same root
    if (!(b.hi <= a.lo || a.hi <= b.lo)) {
      if (compare_roots(g, a, g, b) == 0) continue;
    }
    for (int round = 0; round < 128; ++round) {
      Rational slo = a.lo + b.lo, shi = a.hi + b.hi;
      Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
      Rational plo = std::min(std::min(p1, p2), std::min(p3, p4));
      Rational phi = std::max(std::max(p1, p2), std::max(p3, p4));
      auto unique_int = [](const Rational& lo, const Rational& hi) -> std::optional<Int> {
        Int f;
        mpz_cdiv_q(f.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
        if (Rational(f) > hi) return std::nullopt;
        if (Rational(f + 1) <= hi) return std::nullopt;  // more than one candidate
        return f;
      };
      auto s = unique_int(slo, shi);
      auto pr = unique_int(plo, phi);
      if (s && pr) {
        IntPoly cand({*pr, -*s, Int(1)});  // x^2 - s x + pr
        Int disc = *s * *s - 4 * *pr;
        if (disc > 0 && !is_perfect_square(disc) && divides(cand, g)) {
          for (int sgn : {1, -1}) {
            Quadratic root(Rational(*s, 2), Rational(sgn, 2), disc);
            if (root > Quadratic(a.lo) && root < Quadratic(a.hi)) return root;
          }
        }
        break;  // candidates pinned but not a quadratic factor match
      }
      iso.refine(a);
      iso.refine(b);
      if (a.exact || b.exact) break;
    }
  }
  return std::nullopt;
}

// ---- characteristic polynomial ----

// det(xI - M) for a square integer matrix, by Faddeev-LeVerrier; all the
// divisions are exact over the integers.
inline IntPoly char_poly(const IMat& m) {
  const int n = m.rows();
  std::vector<Int> coeff(n + 1, Int(0));
  coeff[n] = 1;
  IMat ak = m;
  for (int k = 1; k <= n; ++k) {
    Int tr = 0;
    for (int i = 0; i < n; ++i) tr += ak(i, i);
    Int ck = -tr / k;  // exact
    coeff[n - k] = ck;
    if (k == n) break;
    for (int i = 0; i < n; ++i) ak(i, i) += ck;
    ak = m * ak;
  }
  return IntPoly(std::move(coeff));
}

// char poly mod 2 as a dense bit vector, lowest degree first
inline std::vector<int> mod2(const IntPoly& p) {
  std::vector<int> r(p.c.size());
  for (size_t i = 0; i < p.c.size(); ++i) r[i] = mpz_odd_p(p.c[i].get_mpz_t()) ? 1 : 0;
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

// ---- polynomials over a quadratic field ----

struct QPoly {
  std::vector<Quadratic> c;

  QPoly() = default;
  explicit QPoly(std::vector<Quadratic> coeffs) : c(std::move(coeffs)) { trim(); }
  explicit QPoly(const IntPoly& p) {
    for (const auto& a : p.c) c.emplace_back(Rational(a));
    trim();
  }
  void trim() {
    while (!c.empty() && c.back() == Quadratic(0)) c.pop_back();
  }
  bool operator==(const QPoly& o) const { return c == o.c; }
  QPoly operator*(const QPoly& o) const {
    if (c.empty() || o.c.empty()) return QPoly();
    std::vector<Quadratic> r(c.size() + o.c.size() - 1, Quadratic(0));
    for (size_t i = 0; i < c.size(); ++i)
      for (size_t j = 0; j < o.c.size(); ++j) r[i + j] += c[i] * o.c[j];
    return QPoly(std::move(r));
  }
};

}  // namespace seidelkit
