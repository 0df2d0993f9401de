// Acceptance gate: one pass/fail line per criterion, exit = number of
// failures. Criteria 1-9 replay the named check suites; criterion 10 adds
// randomized cross-validation against the independent test oracles.

#include <cstdio>
#include <random>
#include <string>

#include "properties.hpp"
#include "seidelkit/seidelkit.hpp"

using namespace seidelkit;

namespace {

int failures = 0;

void line(const std::string& name, bool ok, const std::string& detail = "") {
  std::printf("%-52s %s%s%s\n", name.c_str(), ok ? "pass" : "FAIL",
              detail.empty() ? "" : "  ", detail.c_str());
  if (!ok) ++failures;
}

bool suite_passes(const std::string& name, std::string& detail) {
  SuiteReport rep = run_suite(name);
  int bad = 0;
  for (const auto& c : rep.checks)
    if (c.status == "fail") ++bad;
  detail = std::to_string(rep.checks.size() - bad) + "/" + std::to_string(rep.checks.size()) +
           " checks";
  return rep.all_passed();
}

void suite_criterion(const std::string& title, const std::string& suite) {
  std::string detail;
  bool ok = false;
  try {
    ok = suite_passes(suite, detail);
  } catch (const std::exception& e) {
    detail = e.what();
  }
  line(title, ok, detail);
}

// theorem3 split into its maximal and strongly-maximal record groups
void theorem3_criteria() {
  SuiteReport rep = run_suite("theorem3");
  bool max_ok = true, strong_ok = true;
  int max_n = 0, strong_n = 0;
  for (const auto& c : rep.checks) {
    bool pass = c.status == "pass";
    if (c.claim.rfind("maximal/", 0) == 0) {
      ++max_n;
      max_ok = max_ok && pass;
    } else if (c.claim.rfind("strongly-maximal/", 0) == 0) {
      ++strong_n;
      strong_ok = strong_ok && pass;
    } else {
      // implication and lattice-route records back the strong verdicts
      strong_ok = strong_ok && pass;
    }
  }
  line("2. maximal verdicts on the named list", max_ok, std::to_string(max_n) + " graphs");
  line("3. strongly maximal verdicts on the named list", strong_ok,
       std::to_string(strong_n) + " graphs");
}

void oracle_criterion() {
  bool ok = true;
  std::string detail;

  // exhaustive brute-force agreement up to order 5
  long tested = 0;
  for (int n = 1; n <= 5 && ok; ++n) {
    const int bits = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits) && ok; ++mask) {
      Graph g = testkit::graph_from_mask(n, mask);
      SeidelMatrix s = seidel_of(g);
      auto lambda = testkit::representable_largest(s);
      if (!lambda) continue;
      ++tested;
      for (bool pr : {false, true})
        if (find_extension(s, *lambda, pr).found != testkit::brute_force_extension(s, *lambda, pr)) {
          ok = false;
          detail = "search/brute-force mismatch on " + to_graph6(g);
        }
    }
  }

  // interlacing of vertex-deleted Seidel spectra
  std::mt19937_64 rng(6021023);
  for (int trial = 0; trial < 200 && ok; ++trial) {
    int n = 2 + static_cast<int>(rng() % 7);
    Graph g = testkit::random_graph(rng, n);
    IntPoly p = char_poly(seidel_of(g).matrix());
    int drop = static_cast<int>(rng() % n);
    std::vector<int> keep;
    for (int v = 0; v < n; ++v)
      if (v != drop) keep.push_back(v);
    IntPoly q = char_poly(seidel_of(g.induced(keep)).matrix());
    if (!testkit::interlacing_ok(p, q)) {
      ok = false;
      detail = "interlacing failed on " + to_graph6(g);
    }
  }

  // switching invariance of spectra and verdicts
  for (int trial = 0; trial < 200 && ok; ++trial) {
    int n = 2 + static_cast<int>(rng() % 5);
    Graph g = testkit::random_graph(rng, n);
    std::uint64_t u = rng() & ((std::uint64_t{1} << n) - 1);
    Graph h = switch_graph(g, u);
    if (char_poly(seidel_of(g).matrix()) != char_poly(seidel_of(h).matrix())) {
      ok = false;
      detail = "spectrum not switching invariant on " + to_graph6(g);
      break;
    }
    if (!testkit::representable_largest(seidel_of(g))) continue;
    if (is_maximal(g).first != is_maximal(h).first ||
        is_strongly_maximal(g).first != is_strongly_maximal(h).first) {
      ok = false;
      detail = "verdict not switching invariant on " + to_graph6(g);
    }
  }

  // the parity suite rides along with the oracle checks
  std::string parity_detail;
  bool parity_ok = suite_passes("parity", parity_detail);
  if (ok) detail = "oracles ok (" + std::to_string(tested) + " exhaustive), parity " + parity_detail;
  line("10. parity identity and independent oracles", ok && parity_ok, detail);
}

}  // namespace

int main() {
  suite_criterion("1. minimum-eigenvalue table through order 7", "lambda-table");
  theorem3_criteria();
  suite_criterion("4. extremal line-system orders", "corollary13");
  suite_criterion("5. lattice types and class representatives", "lattice-sc");
  suite_criterion("6. bordered-matrix equivalences", "section4");
  suite_criterion("7. absolute bound with equality cases", "absolute-bound");
  suite_criterion("8. extendability criteria", "section5");
  suite_criterion("9. one-point extensions and conference cases", "section6");
  oracle_criterion();
  std::printf("%d criteria failed\n", failures);
  return failures;
}
