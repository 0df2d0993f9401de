#pragma once

// One-vertex Seidel extension search with incremental Schur-complement
// pruning, the maximal / strongly maximal / extendable verdicts, the
// lattice cross-check route at eigenvalue 3, the lambda(n) table, and the
// extremal construction builders.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "seidelkit/graph.hpp"
#include "seidelkit/lattice.hpp"
#include "seidelkit/matrix.hpp"
#include "seidelkit/numeric.hpp"
#include "seidelkit/poly.hpp"
#include "seidelkit/seidel.hpp"

namespace seidelkit {

struct ExtensionVerdict {
  bool found = false;
  std::vector<int> witness;  // sign vector, first entry +1
  long long nodes = 0;
  long long pruned = 0;
};

inline long long default_node_budget() {
  if (const char* env = std::getenv("SEIDELKIT_BUDGET")) {
    long long v = std::atoll(env);
    if (v > 0) return v;
  }
  return 1LL << 28;
}

// Search sign vectors s (s_1 = +1) so that S' = [[S, s],[s^T, 0]] keeps
// largest eigenvalue lambda; preserve_rank additionally demands
// rk(lambda I - S') = rk(lambda I - S). Pruning works on the fixed
// unpivoted LDL^T of M = lambda I - S: PSD of the bordered matrix forces
// -s into col(M) (z_k = 0 at zero pivots, which pins s_k) and
// s^T M^+ s <= lambda, monotone along the prefix.
inline ExtensionVerdict find_extension(const SeidelMatrix& s, const Quadratic& lambda,
                                       bool preserve_rank,
                                       long long budget = default_node_budget()) {
  if (compare_largest(s, lambda) != Compare::Equal)
    throw Error("PreconditionViolated: lambda is not the largest eigenvalue");
  const int n = s.order();
  QMat m = shifted(s, lambda);
  auto f = ldl_psd(m);
  ExtensionVerdict verdict;
  std::vector<Quadratic> z(n, Quadratic(0));
  std::vector<int> signs(n, 0);

  // returns true once a witness is found (the DFS tries +1 before -1, so the
  // first hit is the lexicographically least witness)
  std::function<bool(int, const Quadratic&)> rec = [&](int k, const Quadratic& q) -> bool {
    if (k == n) {
      if (preserve_rank && !(q == lambda)) return false;
      return true;
    }
    if (++verdict.nodes > budget) throw Error("OutOfBudget");
    Quadratic t(0);
    for (int j = 0; j < k; ++j)
      if (!(f.l(k, j) == Quadratic(0))) t += f.l(k, j) * z[j];
    if (sign_of(f.d[k]) == 0) {
      // z_k must vanish: s_k is forced to t
      Quadratic forced = t;
      int sv;
      if (forced == Quadratic(1)) sv = 1;
      else if (forced == Quadratic(-1)) sv = -1;
      else {
        ++verdict.pruned;
        return false;
      }
      if (k == 0 && sv != 1) {
        ++verdict.pruned;
        return false;
      }
      signs[k] = sv;
      z[k] = Quadratic(0);
      return rec(k + 1, q);
    }
    for (int sv : {1, -1}) {
      if (k == 0 && sv != 1) continue;
      Quadratic zk = Quadratic(sv) - t;
      Quadratic q2 = q + zk * zk / f.d[k];
      if (q2 > lambda) {
        ++verdict.pruned;
        continue;
      }
      signs[k] = sv;
      z[k] = zk;
      if (rec(k + 1, q2)) return true;
    }
    return false;
  };

  if (rec(0, Quadratic(0))) {
    verdict.found = true;
    verdict.witness = signs;
    // independent re-verification of the witness
    SeidelMatrix ext = s.extended(signs);
    auto cert = psd_status(shifted(ext, lambda));
    if (!cert.psd) throw Error("find_extension: witness failed PSD re-verification");
    if (preserve_rank && rank_at(ext, lambda) != f.rank)
      throw Error("find_extension: witness failed rank re-verification");
  }
  return verdict;
}

inline Quadratic largest_eigenvalue(const SeidelMatrix& s) {
  auto spec = seidel_spectrum(s);
  if (!spec.largest_value)
    throw Error("largest eigenvalue is not rational or quadratic");
  return *spec.largest_value;
}

inline std::pair<bool, ExtensionVerdict> is_maximal(const Graph& g) {
  SeidelMatrix s = seidel_of(g);
  auto v = find_extension(s, largest_eigenvalue(s), true);
  return {!v.found, v};
}

inline std::pair<bool, ExtensionVerdict> is_strongly_maximal(const Graph& g) {
  SeidelMatrix s = seidel_of(g);
  auto v = find_extension(s, largest_eigenvalue(s), false);
  return {!v.found, v};
}

// ---- lattice cross-check at eigenvalue 3 ----

namespace detail {

// all D/E types that properly contain t, optionally restricted to equal rank
inline std::vector<RootLatticeType> proper_superlattices(const RootLatticeType& t, bool equal_rank) {
  std::vector<RootLatticeType> out;
  std::vector<RootLatticeType> candidates;
  for (int r = 4; r <= t.rank + 1; ++r) candidates.emplace_back(Family::D, r);
  for (int r = 6; r <= 8; ++r) candidates.emplace_back(Family::E, r);
  for (const auto& m : candidates) {
    if (m == t) continue;
    if (equal_rank && m.rank != t.rank) continue;
    if (lattice_inclusion(t, m)) out.push_back(m);
  }
  return out;
}

}  // namespace detail

// Cross-checks the search verdicts against the lattice containment route
// for graphs whose largest Seidel eigenvalue is exactly 3 and whose
// Lambda(G) is a full type lattice.
inline CheckReport strong_maximality_via_lattice(const Graph& g) {
  SeidelMatrix s = seidel_of(g);
  if (compare_largest(s, Quadratic(3)) != Compare::Equal) throw Error("NotApplicable");
  RootLatticeType type = classify(lambda_lattice(g));
  bool lattice_maximal = detail::proper_superlattices(type, true).empty();
  bool lattice_strong = detail::proper_superlattices(type, false).empty();
  auto [search_maximal, v1] = is_maximal(g);
  auto [search_strong, v2] = is_strongly_maximal(g);
  CheckReport rep;
  rep.passed = lattice_maximal == search_maximal && lattice_strong == search_strong;
  rep.status = rep.passed ? "RoutesAgree" : "RoutesDisagree";
  rep.notes.push_back("type=" + type.str());
  rep.notes.push_back(std::string("maximal=") + (search_maximal ? "true" : "false"));
  rep.notes.push_back(std::string("strongly_maximal=") + (search_strong ? "true" : "false"));
  return rep;
}

// ---- extendability criteria ----

struct ExtendabilityReport {
  bool extendable = false;          // by direct search
  bool exhaustive_scan = false;     // class scan covered all 2^{n-1} switches
  bool class_member_found = false;  // some H in [G] with p(H) <= 2 - 1/theta
  std::optional<Quadratic> p_of_g;  // p(G) itself, when j is in the column space
  bool regular_p_consistent = true;   // p = n/(k+theta) on regular members
  bool sufficient_condition_consistent = true;   // sufficient condition never contradicts
  bool equivalence_chain_consistent = true;   // two-eigenvalue equivalence chain
  bool srg_member_found = false;
  bool p_below_2_found = false;
  CheckReport report;
};

inline ExtendabilityReport extendability_criterion(const Graph& g, int sample_count = 200) {
  SeidelMatrix s = seidel_of(g);
  const int n = s.order();
  Quadratic lambda = largest_eigenvalue(s);
  Quadratic theta = (lambda + Quadratic(1)) / Quadratic(2);
  Quadratic threshold = Quadratic(2) - Quadratic(1) / theta;

  ExtendabilityReport out;
  out.extendable = find_extension(s, lambda, false).found;
  out.p_of_g = p_value(g, theta);

  auto params = two_eigenvalue_params(s);
  Quadratic tau;
  if (params) tau = (params->mu + Quadratic(1)) / Quadratic(2);

  auto scan_one = [&](std::uint64_t mask) {
    Graph h = switch_graph(g, mask);
    auto p = p_value(h, theta);
    if (p && *p <= threshold) out.class_member_found = true;
    if (p && *p < Quadratic(2)) out.p_below_2_found = true;
    auto srg = srg_params(h);
    if (srg) {
      // regular closed form: p = n / (k + theta)
      Quadratic expect = Quadratic(n) / (Quadratic(srg->k) + theta);
      if (!p || !(*p == expect)) out.regular_p_consistent = false;
      if (expect <= threshold && !out.extendable) out.sufficient_condition_consistent = false;
      if (params) {
        Quadratic k_expected = (Quadratic(n) - Quadratic(2) * tau) / Quadratic(2);
        if (Quadratic(srg->k) == k_expected) out.srg_member_found = true;
      }
    } else {
      int k0 = h.order() > 0 ? h.degree(0) : 0;
      bool regular = true;
      for (int v = 1; v < h.order(); ++v)
        if (h.degree(v) != k0) regular = false;
      if (regular && h.order() > 0) {
        Quadratic expect = Quadratic(n) / (Quadratic(k0) + theta);
        if (!p || !(*p == expect)) out.regular_p_consistent = false;
        if (expect <= threshold && !out.extendable) out.sufficient_condition_consistent = false;
      }
    }
  };

  if (n <= 14) {
    out.exhaustive_scan = true;
    std::uint64_t total = n == 0 ? 1 : (std::uint64_t{1} << (n - 1));
    for (std::uint64_t mask = 0; mask < total; ++mask) scan_one(mask << 1);
  } else {
    std::mt19937_64 rng(20230517);
    for (int i = 0; i < sample_count; ++i)
      scan_one((rng() & ((std::uint64_t{1} << n) - 1)) & ~std::uint64_t{1});
    scan_one(0);
  }

  CheckReport& rep = out.report;
  rep.passed = true;
  if (out.exhaustive_scan) {
    // under an exhaustive scan the threshold criterion is an equivalence
    if (out.class_member_found != out.extendable) {
      rep.passed = false;
      rep.notes.push_back("threshold equivalence failed");
    }
    if (params) {
      // chain: extendable <=> some p(H) < 2 <=> SRG member
      if (out.p_below_2_found != out.extendable || out.srg_member_found != out.extendable) {
        rep.passed = false;
        rep.notes.push_back("two-eigenvalue equivalence chain failed");
      }
    }
  } else {
    rep.notes.push_back("sampled scan: class evidence only, not proof");
    // sampling can only under-report extendability
    if (out.class_member_found && !out.extendable) {
      rep.passed = false;
      rep.notes.push_back("sampled member extends but search says strongly maximal");
    }
  }
  if (!out.regular_p_consistent) {
    rep.passed = false;
    rep.notes.push_back("p-value mismatch on a regular member");
  }
  if (!out.sufficient_condition_consistent) {
    rep.passed = false;
    rep.notes.push_back("sufficient condition for extendability contradicted");
  }
  out.equivalence_chain_consistent = rep.passed || out.exhaustive_scan;
  rep.status = rep.passed ? "ExtendabilityConsistent" : "ExtendabilityInconsistent";
  return out;
}

// ---- lambda(n) table ----

struct LambdaEntry {
  int n = 0;
  std::optional<Quadratic> value;  // when rational or quadratic
  IntPoly minpoly;
  RootInterval interval;
  Graph witness;
};

// Minimum largest Seidel eigenvalue over graphs of order n not switching
// equivalent to a complete graph. Every switching class has a member with
// an isolated vertex, so the enumeration runs over graphs on n-1 vertices
// joined with K_1; classes of complete graphs are exactly those with
// largest eigenvalue at most 1.
inline std::vector<LambdaEntry> lambda_table(int n_max) {
  if (n_max < 3) throw Error("lambda_table: n_max must be at least 3");
  if (n_max > 8) throw Error("OutOfBudget");
  std::vector<LambdaEntry> table;
  for (int n = 3; n <= n_max; ++n) {
    const int m = n - 1;
    const int bits = m * (m - 1) / 2;
    std::optional<IntPoly> best_sf;
    RootInterval best_iv;
    IntPoly best_cp;
    Graph best_graph;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
      Graph g(n);  // vertex 0 isolated, vertices 1..n-1 from the mask
      int bit = 0;
      for (int i = 1; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
          if ((mask >> bit) & 1) g.set_edge(i, j);
      IntPoly cp = char_poly(seidel_of(g).matrix());
      IntPoly sf = squarefree_part(cp);
      RootIsolator iso(sf);
      auto iv = iso.largest();
      if (!iv) continue;
      // classes of complete graphs have largest eigenvalue <= 1
      if (iso.count(Rational(1), cauchy_bound(sf)) == 0) continue;
      if (!best_sf || compare_roots(sf, *iv, *best_sf, best_iv) < 0) {
        best_sf = sf;
        best_iv = *iv;
        best_cp = cp;
        best_graph = g;
      }
    }
    if (!best_sf) throw Error("lambda_table: no admissible graph found");
    LambdaEntry entry;
    entry.n = n;
    entry.interval = best_iv;
    entry.witness = best_graph;
    entry.value = identify_root(best_cp, best_iv);
    if (entry.value) {
      if (entry.value->is_rational()) {
        entry.minpoly = IntPoly({-entry.value->rational_part().get_num(),
                                 entry.value->rational_part().get_den()});
      } else {
        Rational tr = entry.value->rational_part() * 2;
        Rational nm = entry.value->rational_part() * entry.value->rational_part() -
                      entry.value->surd_coeff() * entry.value->surd_coeff() *
                          Rational(entry.value->surd());
        entry.minpoly = IntPoly({nm.get_num(), -tr.get_num(), Int(1)});
      }
    } else {
      entry.minpoly = *best_sf;
    }
    if (!table.empty()) {
      // weak monotonicity of the sequence
      const LambdaEntry& prev = table.back();
      if (compare_roots(prev.minpoly, prev.interval, entry.minpoly, entry.interval) > 0)
        throw Error("lambda_table: monotonicity violated");
    }
    table.push_back(std::move(entry));
  }
  return table;
}

// ---- extremal constructions ----

inline long extremal_order(int r) {
  switch (r) {
    case 5: return 10;
    case 6: return 16;
    case 7: return 28;
    default: return 2L * (r - 1);
  }
}

inline std::pair<Graph, CheckReport> extremal_construction(int r) {
  if (r < 3) throw Error("InvalidRank");
  Graph g;
  std::string name;
  switch (r) {
    case 5: g = triangular_graph(5); name = "L(K5)"; break;
    case 6: g = disjoint_union(triangular_graph(6), Graph(1)); name = "L(K6)+K1"; break;
    case 7: g = triangular_graph(8); name = "L(K8)"; break;
    default:
      g = line_graph(complete_bipartite(2, r - 1));
      name = "L(K2," + std::to_string(r - 1) + ")";
  }
  SeidelMatrix s = seidel_of(g);
  CheckReport rep;
  rep.passed = true;
  if (g.order() != extremal_order(r)) {
    rep.passed = false;
    rep.notes.push_back("order mismatch");
  }
  if (compare_largest(s, Quadratic(3)) != Compare::Equal) {
    rep.passed = false;
    rep.notes.push_back("largest eigenvalue is not 3");
  }
  if (rank_at(s, Quadratic(3)) != r) {
    rep.passed = false;
    rep.notes.push_back("rank mismatch");
  }
  if (!is_maximal(g).first) {
    rep.passed = false;
    rep.notes.push_back("not maximal");
  }
  rep.status = rep.passed ? "ExtremalVerified:" + name : "ExtremalFailed:" + name;
  // derived dimension column N(d) = max_{r' <= d} N*(r')
  long running = 0;
  for (int d = 3; d <= r; ++d) {
    running = std::max(running, extremal_order(d));
    rep.notes.push_back("N_1/3(" + std::to_string(d) + ")=" + std::to_string(running));
  }
  return {g, rep};
}

// ---- hatK and containment checks ----

inline CheckReport hatk_eigenvalue_check(int n) {
  if (n < 2) throw Error("hatk_eigenvalue_check: n >= 2 required");
  Graph g = hat_k(n);
  IntPoly cp = char_poly(seidel_of(g).matrix());
  // quadratic factor carrying the largest eigenvalue; the other factors are
  // (x-1)^{n-2}(x+1), as forced by the equitable partition and trace 0
  IntPoly f({Int(-3 * n + 4), Int(n - 3), Int(1)});
  IntPoly expected = IntPoly({Int(-1), Int(1)}).pow(n - 2) * IntPoly({Int(1), Int(1)}) * f;
  CheckReport rep;
  rep.passed = cp == expected;
  if (!rep.passed) rep.notes.push_back("characteristic polynomial mismatch");
  // largest root lies in (3 - 4/n, 3): f(3-4/n) < 0 < f(3)
  Rational left = Rational(3) - Rational(4, n);
  if (!(f.eval(left) < 0 && f.eval(Rational(3)) > 0)) {
    rep.passed = false;
    rep.notes.push_back("interval sign check failed");
  }
  auto lr_cp = largest_root(cp);
  auto lr_f = largest_root(f);
  if (compare_roots(cp, lr_cp.interval, f, lr_f.interval) != 0) {
    rep.passed = false;
    rep.notes.push_back("largest Seidel eigenvalue is not the largest root of f");
  }
  rep.status = rep.passed ? "HatKVerified" : "HatKFailed";
  return rep;
}

// Containment spot-check: graphs of order n with largest Seidel eigenvalue in
// (1,3) contain hatK(ceil(n/2)) as an induced subgraph up to switching.
inline CheckReport containment_spotcheck(int n, int samples) {
  if (n != 8 && n != 9) throw Error("OutOfBudget");
  Graph target = hat_k((n + 1) / 2);
  const int tsize = target.order();
  Graph base = line_graph(complete_bipartite(2, n - 1));

  auto in_window = [](const SeidelMatrix& s) {
    return compare_largest(s, Quadratic(1)) == Compare::Greater &&
           compare_largest(s, Quadratic(3)) == Compare::Less;
  };
  auto contains_target = [&](const Graph& g) {
    std::vector<int> idx(tsize);
    for (int i = 0; i < tsize; ++i) idx[i] = i;
    while (true) {
      if (is_switching_equivalent(g.induced(idx), target)) return true;
      int i = tsize - 1;
      while (i >= 0 && idx[i] == g.order() - tsize + i) --i;
      if (i < 0) return false;
      ++idx[i];
      for (int j = i + 1; j < tsize; ++j) idx[j] = idx[j - 1] + 1;
    }
  };

  CheckReport rep;
  rep.passed = true;
  int tested = 0, skipped = 0;
  auto consider = [&](const Graph& g) {
    if (!in_window(seidel_of(g))) {
      ++skipped;
      return;
    }
    ++tested;
    if (!contains_target(g)) {
      rep.passed = false;
      rep.notes.push_back("counterexample: " + to_graph6(g));
    }
  };

  if (n == 8) {
    // exhaustive over induced n-subsets of L(K_{2,n-1})
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    while (true) {
      consider(base.induced(idx));
      int i = n - 1;
      while (i >= 0 && idx[i] == base.order() - n + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
  } else {
    std::mt19937_64 rng(762531);
    for (int trial = 0; trial < samples; ++trial) {
      std::vector<int> pool(base.order());
      for (int i = 0; i < base.order(); ++i) pool[i] = i;
      std::shuffle(pool.begin(), pool.end(), rng);
      pool.resize(n);
      std::sort(pool.begin(), pool.end());
      consider(base.induced(pool));
    }
    // rejection-sampled random graphs; the eigenvalue window filters them
    for (int trial = 0; trial < samples; ++trial) {
      Graph g(n);
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          if (rng() & 1) g.set_edge(i, j);
      consider(g);
    }
  }
  rep.notes.push_back("tested=" + std::to_string(tested) + " skipped=" + std::to_string(skipped));
  rep.status = rep.passed ? "ContainmentVerified" : "ContainmentFailed";
  if (tested == 0) {
    rep.passed = false;
    rep.status = "NoCandidates";
  }
  return rep;
}

}  // namespace seidelkit
