#pragma once

// Simple graphs on up to 62 vertices: the named constructions, Seidel
// switching, graph6 I/O, a compact spec-string grammar, and switching
// equivalence via descendants and partition-refinement isomorphism search.
//
// Vertex labelling conventions (frozen so outputs are reproducible):
//   - line graph: vertices are the edges of the base graph ordered
//     lexicographically by endpoint pair
//   - cone: the apex is the last vertex
//   - Paley(q): vertices 0..q-1, i ~ j iff (i-j) is a nonzero quadratic
//     residue mod q
//   - disjoint union: blocks in argument order
//   - hatK(n): vertices 1..n complete, vertex n+1 attached to vertex n only
//   - Tn(n): star centre 0, leaves 1..n, extra vertex n+1 attached to leaf 1

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "seidelkit/matrix.hpp"
#include "seidelkit/numeric.hpp"
#include "seidelkit/poly.hpp"

namespace seidelkit {

class Graph {
 public:
  Graph() : n_(0) {}
  explicit Graph(int n) : n_(n), adj_(n, 0) {
    if (n < 0 || n > 62) throw Error("Graph: order out of range");
  }

  int order() const { return n_; }

  bool edge(int i, int j) const { return i != j && (adj_[i] >> j) & 1; }
  void set_edge(int i, int j, bool on = true) {
    if (i == j) throw Error("Graph: no loops");
    if (on) {
      adj_[i] |= std::uint64_t{1} << j;
      adj_[j] |= std::uint64_t{1} << i;
    } else {
      adj_[i] &= ~(std::uint64_t{1} << j);
      adj_[j] &= ~(std::uint64_t{1} << i);
    }
  }
  void toggle_edge(int i, int j) { set_edge(i, j, !edge(i, j)); }

  int degree(int v) const { return __builtin_popcountll(adj_[v]); }
  std::uint64_t neighbours(int v) const { return adj_[v]; }

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }
  bool operator!=(const Graph& o) const { return !(*this == o); }

  IMat adjacency() const {
    IMat a(n_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) a(i, j) = edge(i, j) ? 1 : 0;
    return a;
  }

  Graph complement() const {
    Graph g(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (!edge(i, j)) g.set_edge(i, j);
    return g;
  }

  Graph induced(const std::vector<int>& verts) const {
    Graph g(static_cast<int>(verts.size()));
    for (size_t i = 0; i < verts.size(); ++i)
      for (size_t j = i + 1; j < verts.size(); ++j)
        if (edge(verts[i], verts[j])) g.set_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
  }

  Graph relabel(const std::vector<int>& perm) const {
    // vertex v of *this becomes perm[v]
    Graph g(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (edge(i, j)) g.set_edge(perm[i], perm[j]);
    return g;
  }

  bool connected() const {
    if (n_ == 0) return true;
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
      std::uint64_t next = 0;
      for (int v = 0; v < n_; ++v)
        if ((frontier >> v) & 1) next |= adj_[v];
      frontier = next & ~seen;
      seen |= next;
    }
    return seen == (std::uint64_t{1} << n_) - 1;
  }

 private:
  int n_;
  std::vector<std::uint64_t> adj_;
};

// ---- constructions ----

inline Graph complete_graph(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.set_edge(i, j);
  return g;
}

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.set_edge(i, a + j);
  return g;
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw Error("InvalidSpec: cycle needs >= 3 vertices");
  Graph g(n);
  for (int i = 0; i < n; ++i) g.set_edge(i, (i + 1) % n);
  return g;
}

inline Graph path_graph(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.set_edge(i, i + 1);
  return g;
}

inline Graph line_graph(const Graph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (g.edge(i, j)) edges.emplace_back(i, j);
  Graph l(static_cast<int>(edges.size()));
  for (size_t a = 0; a < edges.size(); ++a)
    for (size_t b = a + 1; b < edges.size(); ++b) {
      auto [i, j] = edges[a];
      auto [k, m] = edges[b];
      if (i == k || i == m || j == k || j == m) l.set_edge(static_cast<int>(a), static_cast<int>(b));
    }
  return l;
}

inline Graph cone_graph(const Graph& g) {
  Graph c(g.order() + 1);
  for (int i = 0; i < g.order(); ++i) {
    for (int j = i + 1; j < g.order(); ++j)
      if (g.edge(i, j)) c.set_edge(i, j);
    c.set_edge(i, g.order());
  }
  return c;
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
  Graph g(a.order() + b.order());
  for (int i = 0; i < a.order(); ++i)
    for (int j = i + 1; j < a.order(); ++j)
      if (a.edge(i, j)) g.set_edge(i, j);
  for (int i = 0; i < b.order(); ++i)
    for (int j = i + 1; j < b.order(); ++j)
      if (b.edge(i, j)) g.set_edge(a.order() + i, a.order() + j);
  return g;
}

inline Graph triangular_graph(int n) { return line_graph(complete_graph(n)); }

inline Graph paley_graph(long q) {
  if (!is_prime(q) || q % 4 != 1) throw Error("InvalidSpec: Paley needs a prime q = 1 mod 4");
  std::vector<bool> residue(q, false);
  for (long x = 1; x < q; ++x) residue[(x * x) % q] = true;
  Graph g(static_cast<int>(q));
  for (long i = 0; i < q; ++i)
    for (long j = i + 1; j < q; ++j)
      if (residue[(j - i) % q]) g.set_edge(static_cast<int>(i), static_cast<int>(j));
  return g;
}

// K_n plus one pendant vertex attached to vertex n-1 (= L(T_n))
inline Graph hat_k(int n) {
  if (n < 2) throw Error("InvalidSpec: hatK needs n >= 2");
  Graph h(n + 1);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) h.set_edge(i, j);
  h.set_edge(n - 1, n);
  return h;
}

// the tree obtained by attaching a new vertex to a leaf of the claw K_{1,n}
inline Graph tree_t(int n) {
  if (n < 1) throw Error("InvalidSpec: Tn needs n >= 1");
  Graph g(n + 2);
  for (int i = 1; i <= n; ++i) g.set_edge(0, i);
  g.set_edge(1, n + 1);
  return g;
}

// ---- switching ----

inline Graph switch_graph(const Graph& g, const std::vector<int>& u) {
  std::uint64_t mask = 0;
  for (int v : u) {
    if (v < 0 || v >= g.order()) throw Error("switch: vertex out of range");
    mask |= std::uint64_t{1} << v;
  }
  Graph h = g;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j) {
      bool iu = (mask >> i) & 1, ju = (mask >> j) & 1;
      if (iu != ju) h.toggle_edge(i, j);
    }
  return h;
}

inline Graph switch_graph(const Graph& g, std::uint64_t mask) {
  std::vector<int> u;
  for (int v = 0; v < g.order(); ++v)
    if ((mask >> v) & 1) u.push_back(v);
  return switch_graph(g, u);
}

// switch so that v becomes isolated; the result is a member of [G]
inline Graph descendant(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw Error("descendant: vertex out of range");
  return switch_graph(g, g.neighbours(v));
}

// ---- graph6 ----

inline std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(63 + n));  // n <= 62
  int bit = 5;
  char cur = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (g.edge(i, j)) cur |= 1 << bit;
      if (--bit < 0) {
        out.push_back(static_cast<char>(63 + cur));
        bit = 5;
        cur = 0;
      }
    }
  if (bit != 5) out.push_back(static_cast<char>(63 + cur));
  return out;
}

inline Graph from_graph6(const std::string& s) {
  if (s.empty()) throw Error("graph6: empty string");
  size_t pos = 0;
  int n = s[pos] - 63;
  if (n < 0 || n > 62) throw Error("graph6: only orders up to 62 are supported");
  ++pos;
  Graph g(n);
  int bit = 5;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      if (pos >= s.size()) throw Error("graph6: truncated string");
      int ch = s[pos] - 63;
      if (ch < 0 || ch > 63) throw Error("graph6: invalid character");
      if ((ch >> bit) & 1) g.set_edge(i, j);
      if (--bit < 0) {
        bit = 5;
        ++pos;
      }
    }
  return g;
}

// ---- spec-string grammar ----
//
//   spec   := term ('+' term)*                 disjoint union
//   term   := 'K' n | 'K' a ',' b | 'Kbar' n | 'C' n | 'P' n
//           | 'T(' n ')' | 'Tn(' n ')' | 'hatK(' n ')' | 'Paley(' q ')'
//           | 'L(' spec ')' | 'cone(' spec ')' | '~(' spec ')'
//
// e.g. "L(K8)", "L(K2,5)+K1", "Paley(13)", "hatK(6)", "cone(C5)"

namespace detail {

class SpecParser {
 public:
  explicit SpecParser(const std::string& s) : s_(s) {}

  Graph parse() {
    Graph g = parse_sum();
    skip_ws();
    if (pos_ != s_.size()) throw Error("InvalidSpec: trailing input at '" + s_.substr(pos_) + "'");
    return g;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }
  bool eat(const std::string& word) {
    skip_ws();
    if (s_.compare(pos_, word.size(), word) == 0) {
      pos_ += word.size();
      return true;
    }
    return false;
  }
  long number() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < s_.size() && isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw Error("InvalidSpec: number expected at '" + s_.substr(start) + "'");
    return std::stol(s_.substr(start, pos_ - start));
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c)
      throw Error(std::string("InvalidSpec: expected '") + c + "'");
    ++pos_;
  }

  Graph parse_sum() {
    Graph g = parse_term();
    while (true) {
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '+') {
        ++pos_;
        g = disjoint_union(g, parse_term());
      } else {
        return g;
      }
    }
  }

  Graph parse_term() {
    skip_ws();
    if (eat("Kbar")) return empty_graph(static_cast<int>(number()));
    if (eat("Paley(")) {
      long q = number();
      expect(')');
      return paley_graph(q);
    }
    if (eat("hatK(")) {
      long n = number();
      expect(')');
      return hat_k(static_cast<int>(n));
    }
    if (eat("L(")) {
      Graph g = parse_sum();
      expect(')');
      return line_graph(g);
    }
    if (eat("cone(")) {
      Graph g = parse_sum();
      expect(')');
      return cone_graph(g);
    }
    if (eat("~(")) {
      Graph g = parse_sum();
      expect(')');
      return g.complement();
    }
    if (eat("Tn(")) {
      long n = number();
      expect(')');
      return tree_t(static_cast<int>(n));
    }
    if (eat("T(")) {
      long n = number();
      expect(')');
      return triangular_graph(static_cast<int>(n));
    }
    if (eat("K")) {
      long a = number();
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == ',') {
        ++pos_;
        long b = number();
        return complete_bipartite(static_cast<int>(a), static_cast<int>(b));
      }
      return complete_graph(static_cast<int>(a));
    }
    if (eat("C")) return cycle_graph(static_cast<int>(number()));
    if (eat("P")) return path_graph(static_cast<int>(number()));
    throw Error("InvalidSpec: unknown construction at '" + s_.substr(pos_) + "'");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace detail

inline Graph parse_graph_spec(const std::string& s) { return detail::SpecParser(s).parse(); }

// ---- isomorphism (colour refinement + individualization backtracking) ----

namespace detail {

inline std::vector<int> refine_colours(const Graph& g, std::vector<int> colour) {
  const int n = g.order();
  for (int round = 0; round < n; ++round) {
    std::map<std::pair<int, std::vector<int>>, std::vector<int>> classes;
    for (int v = 0; v < n; ++v) {
      std::vector<int> sig;
      for (int w = 0; w < n; ++w)
        if (g.edge(v, w)) sig.push_back(colour[w]);
      std::sort(sig.begin(), sig.end());
      classes[{colour[v], std::move(sig)}].push_back(v);
    }
    std::vector<int> next(n);
    int c = 0;
    for (auto& [key, verts] : classes) {
      for (int v : verts) next[v] = c;
      ++c;
    }
    if (next == colour) break;
    colour = std::move(next);
  }
  return colour;
}

inline bool iso_backtrack(const Graph& g, const Graph& h, std::vector<int> cg, std::vector<int> ch,
                          std::vector<int>& mapping) {
  const int n = g.order();
  cg = refine_colours(g, std::move(cg));
  ch = refine_colours(h, std::move(ch));
  // colour class sizes must agree
  std::map<int, int> sg, sh;
  for (int v = 0; v < n; ++v) {
    sg[cg[v]]++;
    sh[ch[v]]++;
  }
  if (sg != sh) return false;
  // pick the smallest non-singleton class
  int target = -1;
  for (auto& [c, cnt] : sg)
    if (cnt > 1 && (target < 0 || cnt < sg[target])) target = c;
  if (target < 0) {
    // discrete colouring: the map is forced
    std::vector<int> pos_h(n, -1);
    for (int v = 0; v < n; ++v) pos_h[ch[v]] = v;
    std::vector<int> m(n);
    for (int v = 0; v < n; ++v) m[v] = pos_h[cg[v]];
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (g.edge(i, j) != h.edge(m[i], m[j])) return false;
    mapping = std::move(m);
    return true;
  }
  int vg = -1;
  for (int v = 0; v < n; ++v)
    if (cg[v] == target) {
      vg = v;
      break;
    }
  int fresh = n;  // a colour not yet in use
  for (int w = 0; w < n; ++w) {
    if (ch[w] != target) continue;
    std::vector<int> cg2 = cg, ch2 = ch;
    cg2[vg] = fresh;
    ch2[w] = fresh;
    if (iso_backtrack(g, h, std::move(cg2), std::move(ch2), mapping)) return true;
  }
  return false;
}

}  // namespace detail

// Permutation p with h = g relabelled by p, when the graphs are isomorphic.
inline std::optional<std::vector<int>> graph_isomorphism(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) return std::nullopt;
  const int n = g.order();
  std::vector<int> mapping;
  if (!detail::iso_backtrack(g, h, std::vector<int>(n, 0), std::vector<int>(n, 0), mapping))
    return std::nullopt;
  return mapping;
}

struct SwitchingCertificate {
  std::vector<int> permutation;  // vertex v of G maps to permutation[v] in H
  std::vector<int> switch_set;   // H = relabel(switch(G, U), P)
};

// Switching equivalence extended by isomorphism: exists P, U with
// H = P(G^U). Decided through descendants: G ~ H iff some descendant of H is
// isomorphic to descendant(G, 0).
inline std::optional<SwitchingCertificate> is_switching_equivalent(const Graph& g, const Graph& h) {
  if (g.order() != h.order()) throw Error("OrderMismatch");
  const int n = g.order();
  if (n == 0) return SwitchingCertificate{{}, {}};
  // fast rejection by Seidel characteristic polynomial
  auto seidel = [](const Graph& x) {
    IMat s(x.order(), x.order());
    for (int i = 0; i < x.order(); ++i)
      for (int j = 0; j < x.order(); ++j) s(i, j) = i == j ? 0 : (x.edge(i, j) ? -1 : 1);
    return char_poly(s);
  };
  if (!(seidel(g) == seidel(h))) return std::nullopt;
  Graph dg = descendant(g, 0);
  std::uint64_t a_mask = g.neighbours(0);
  for (int w = 0; w < n; ++w) {
    Graph dh = descendant(h, w);
    auto sigma = graph_isomorphism(dg, dh);
    if (!sigma) continue;
    // h = relabel(switch(g, U), sigma) with U = A xor sigma^{-1}(B)
    std::uint64_t b_mask = h.neighbours(w);
    std::vector<int> u;
    for (int v = 0; v < n; ++v) {
      bool in_a = (a_mask >> v) & 1;
      bool in_b = (b_mask >> (*sigma)[v]) & 1;
      if (in_a != in_b) u.push_back(v);
    }
    SwitchingCertificate cert{*sigma, u};
    if (switch_graph(g, cert.switch_set).relabel(cert.permutation) != h)
      throw Error("is_switching_equivalent: internal certificate mismatch");
    return cert;
  }
  return std::nullopt;
}

}  // namespace seidelkit
