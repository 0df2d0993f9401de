// Command-line front end: spectra, switching, equivalence, maximality
// verdicts, p-values, lattices, the lambda table, extremal constructions,
// and the named verification suites.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "seidelkit/seidelkit.hpp"

namespace {

using namespace seidelkit;

Graph load_graph(const std::string& spec, const std::string& g6) {
  if (!spec.empty() && !g6.empty()) throw Error("give either --graph or --graph6, not both");
  if (!spec.empty()) return parse_graph_spec(spec);
  if (!g6.empty()) return from_graph6(g6);
  throw Error("a graph is required (--graph or --graph6)");
}

// exact-number display: value plus a clearly marked decimal approximation
std::string show(const Quadratic& q) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", q.approx());
  return q.str() + "  (~ " + buf + ")";
}

// "a/b", "sqrt(d)", "a/b + c/e*sqrt(d)", "(...)/2"-style inputs
Quadratic parse_quadratic(std::string s) {
  std::string t;
  for (char c : s)
    if (c != ' ') t.push_back(c);
  if (!t.empty() && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  auto parse_rat = [](const std::string& r) {
    Rational v(r);
    v.canonicalize();
    return v;
  };
  auto term = [&](const std::string& part, bool negate) -> Quadratic {
    auto sq = part.find("sqrt(");
    if (sq == std::string::npos) {
      Rational v = parse_rat(part);
      return Quadratic(negate ? -v : v);
    }
    std::string coeff = part.substr(0, sq);
    if (!coeff.empty() && coeff.back() == '*') coeff.pop_back();
    Rational c = coeff.empty() ? Rational(1) : parse_rat(coeff);
    if (negate) c = -c;
    auto close = part.find(')', sq);
    if (close == std::string::npos) throw Error("bad number: " + part);
    Int d(part.substr(sq + 5, close - sq - 5));
    return Quadratic(0, c, d);
  };
  // split on the last top-level '+'/'-' that is not a leading sign
  for (size_t i = t.size(); i-- > 1;) {
    if ((t[i] == '+' || t[i] == '-') && t[i - 1] != '*' && t[i - 1] != '/' && t[i - 1] != '(' &&
        t[i - 1] != '+' && t[i - 1] != '-') {
      return term(t.substr(0, i), false) + term(t.substr(i + 1), t[i] == '-');
    }
  }
  return term(t, false);
}

int cmd_spectrum(const Graph& g) {
  SpectrumSummary s = seidel_spectrum(seidel_of(g));
  std::cout << "order: " << g.order() << "\n";
  std::cout << "charpoly: " << s.charpoly.str() << "\n";
  if (s.largest_value) {
    std::cout << "largest: " << show(*s.largest_value) << "\n";
  } else {
    std::cout << "largest: root of " << s.largest_minpoly.str() << " in ("
              << to_string(s.largest_interval.lo) << ", " << to_string(s.largest_interval.hi)
              << ")\n";
  }
  std::cout << "multiplicity: " << s.largest_multiplicity << "\n";
  return 0;
}

int cmd_maximal(const Graph& g, bool strong, bool as_json) {
  auto t0 = std::chrono::steady_clock::now();
  auto [verdict, v] = strong ? is_strongly_maximal(g) : is_maximal(g);
  double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  Quadratic lambda = largest_eigenvalue(seidel_of(g));
  std::string outcome = verdict ? (strong ? "strongly-maximal" : "maximal")
                                : (strong ? "extendable" : "not-maximal");
  if (as_json) {
    nlohmann::ordered_json j;
    j["report_version"] = 1;
    j["query"]["graph6"] = to_graph6(g);
    j["query"]["lambda"] = lambda.str();
    j["query"]["strong"] = strong;
    j["outcome"] = outcome;
    if (v.found) {
      std::string w;
      for (int x : v.witness) w.push_back(x > 0 ? '+' : '-');
      j["witness"] = w;
    }
    j["nodes"] = v.nodes;
    j["elapsed"] = elapsed;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << outcome << "  lambda = " << show(lambda) << "  nodes = " << v.nodes << "\n";
    if (v.found) {
      std::cout << "witness signs: ";
      for (int x : v.witness) std::cout << (x > 0 ? '+' : '-');
      std::cout << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Seidel-matrix toolkit"};
  app.require_subcommand(1);

  std::string spec, g6, spec2, g62, theta_str, suite;
  std::vector<int> switch_set;
  bool strong = false, as_json = false, roots = false, do_classify = false;
  int max_n = 7, rank = 5;

  auto add_graph_opts = [&](CLI::App* sub) {
    sub->add_option("--graph", spec, "graph spec string, e.g. L(K8) or C5+K1");
    sub->add_option("--graph6", g6, "graph6 string");
  };

  auto* sp = app.add_subcommand("spectrum", "exact Seidel spectrum");
  add_graph_opts(sp);

  auto* sw = app.add_subcommand("switch", "switch with respect to a vertex set");
  add_graph_opts(sw);
  sw->add_option("--set", switch_set, "vertices of the switching set")->required();

  auto* eq = app.add_subcommand("equiv", "switching equivalence of two graphs");
  add_graph_opts(eq);
  eq->add_option("--graph2", spec2, "second graph spec");
  eq->add_option("--graph6-2", g62, "second graph6 string");

  auto* mx = app.add_subcommand("maximal", "maximality verdict");
  add_graph_opts(mx);
  mx->add_flag("--strong", strong, "decide strong maximality instead");
  mx->add_flag("--json", as_json, "machine-readable verdict");

  auto* pv = app.add_subcommand("p-value", "least t making the bordered matrix PSD");
  add_graph_opts(pv);
  pv->add_option("--theta", theta_str, "theta, e.g. 2, 3/2, 1/2+1/2*sqrt(5)")->required();

  auto* lt = app.add_subcommand("lattice", "root lattice generated by the cone Gram matrix");
  add_graph_opts(lt);
  lt->add_flag("--roots", roots, "list the roots");
  lt->add_flag("--classify", do_classify, "print the lattice type");

  auto* lam = app.add_subcommand("lambda-table", "minimum largest eigenvalue per order");
  lam->add_option("--max-n", max_n, "largest order (<= 8)");

  auto* ex = app.add_subcommand("extremal", "extremal line-system construction");
  ex->add_option("--rank", rank, "target rank (>= 3)")->required();

  auto* vf = app.add_subcommand("verify", "run a named verification suite");
  vf->add_option("--suite", suite, "suite name")->required();
  vf->add_flag("--json", as_json, "emit JSON instead of a table");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sp->parsed()) return cmd_spectrum(load_graph(spec, g6));
    if (sw->parsed()) {
      Graph g = load_graph(spec, g6);
      std::cout << to_graph6(switch_graph(g, switch_set)) << "\n";
      return 0;
    }
    if (eq->parsed()) {
      Graph g = load_graph(spec, g6);
      Graph h = load_graph(spec2, g62);
      auto cert = is_switching_equivalent(g, h);
      if (!cert) {
        std::cout << "not switching equivalent\n";
        return 1;
      }
      std::cout << "switching equivalent\npermutation:";
      for (int p : cert->permutation) std::cout << " " << p;
      std::cout << "\nswitch set:";
      for (int v : cert->switch_set) std::cout << " " << v;
      std::cout << "\n";
      return 0;
    }
    if (mx->parsed()) return cmd_maximal(load_graph(spec, g6), strong, as_json);
    if (pv->parsed()) {
      Graph g = load_graph(spec, g6);
      auto p = p_value(g, parse_quadratic(theta_str));
      if (p) std::cout << "p = " << show(*p) << "\n";
      else std::cout << "p = infinite (all-ones vector outside the column space)\n";
      return 0;
    }
    if (lt->parsed()) {
      Graph g = load_graph(spec, g6);
      GramLattice lat = lambda_lattice(g);
      std::cout << "rank: " << lat.rank << "\n";
      if (do_classify) std::cout << "type: " << classify(lat).str() << "\n";
      if (roots) {
        RootSystem rs = enumerate_roots(lat);
        std::cout << "roots: " << rs.roots.size() << "\n";
        for (const auto& r : rs.roots) {
          for (size_t i = 0; i < r.size(); ++i)
            std::cout << (i ? " " : "") << to_string(r[i]);
          std::cout << "\n";
        }
      }
      return 0;
    }
    if (lam->parsed()) {
      for (const auto& e : lambda_table(max_n)) {
        std::cout << "lambda(" << e.n << ") = ";
        if (e.value) std::cout << show(*e.value);
        else
          std::cout << "root of " << e.minpoly.str() << " in (" << to_string(e.interval.lo)
                    << ", " << to_string(e.interval.hi) << ")";
        std::cout << "  witness " << to_graph6(e.witness) << "\n";
      }
      return 0;
    }
    if (ex->parsed()) {
      auto [g, rep] = extremal_construction(rank);
      std::cout << "graph: " << to_graph6(g) << "\norder: " << g.order() << "\n"
                << rep.status << "\n";
      for (const auto& n : rep.notes) std::cout << n << "\n";
      return rep.passed ? 0 : 1;
    }
    if (vf->parsed()) {
      SuiteReport rep = run_suite(suite);
      std::cout << (as_json ? suite_json(rep) : suite_table(rep));
      return rep.exit_status();
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
