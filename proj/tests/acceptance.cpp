// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "unipcert/catalog.hpp"
#include "unipcert/duality.hpp"
#include "unipcert/induction.hpp"
#include "unipcert/parabolic.hpp"
#include "unipcert/verify.hpp"

using namespace unipcert;

namespace {

int failures = 0;

void criterion(const char* id, const char* description, double limit_ms,
               const std::function<std::string()>& run) {
  auto start = std::chrono::steady_clock::now();
  std::string problem;
  try {
    problem = run();
  } catch (const std::exception& e) {
    problem = std::string("exception: ") + e.what();
  }
  auto end = std::chrono::steady_clock::now();
  double ms =
      std::chrono::duration_cast<std::chrono::microseconds>(end - start)
          .count() /
      1000.0;
  if (problem.empty() && ms > limit_ms)
    problem = "exceeded the time limit of " + std::to_string(limit_ms) + " ms";
  if (problem.empty()) {
    std::printf("%s PASS (%.0f ms) %s\n", id, ms, description);
  } else {
    std::printf("%s FAIL (%.0f ms) %s -- %s\n", id, ms, description,
                problem.c_str());
    ++failures;
  }
}

std::string from_report(const VerifyReport& report) {
  if (report.failures.empty()) return "";
  std::string out = std::to_string(report.failures.size()) +
                    " failing instances; first: " + report.failures.front();
  return out;
}

InfChar int_labels(std::vector<int> values) {
  std::vector<int> doubled;
  for (int v : values) doubled.push_back(2 * v);
  return InfChar(std::move(doubled), WeylKind::BC);
}

}  // namespace

int main() {
  criterion("A1", "worked induction example on Sp(5,4), byte-exact", 1000, [] {
    SignedTableau s =
        SignedTableau::parse("3+^2 3-^2 2+ 2- 1+^2", RealForm::sp(5, 4));
    auto k1 = raise_rows(s, 1);
    if (k1.size() != 2) return std::string("k=1 returned ") +
                               std::to_string(k1.size()) + " tableaux";
    if (k1[0].str() != "5+^2 3-^2 2+ 2- 1+^2")
      return "k=1 first tableau is " + k1[0].str();
    if (k1[1].str() != "5-^2 3+^2 2+ 2- 1+^2")
      return "k=1 second tableau is " + k1[1].str();
    auto k3 = raise_rows(s, 3);
    if (k3.size() != 1) return std::string("k=3 returned ") +
                               std::to_string(k3.size()) + " tableaux";
    if (k3[0].str() != "5+^2 5-^2 4+ 4- 1+^2")
      return "k=3 tableau is " + k3[0].str();
    return std::string();
  });

  criterion("A2", "chi' anchors for the zero and two-column orbits, n <= 10",
            1000, [] {
    for (int n = 1; n <= 10; ++n) {
      std::vector<int> rho, alt;
      for (int v = 1; v <= n; ++v) rho.push_back(2 * v);
      for (int i = 0; i < n; ++i) alt.push_back(i % 2 == 0 ? 2 : 0);
      if (chi_prime_raw(Partition(std::vector<int>(2 * n, 1)), Family::Sp) !=
          rho)
        return "zero orbit anchor fails at n = " + std::to_string(n);
      if (chi_prime_raw(Partition({n, n}), Family::Sp) != alt)
        return "two-column anchor fails at n = " + std::to_string(n);
    }
    return std::string();
  });

  criterion("A3", "infinitesimal character equivalence for Sp, n <= 8", 30000,
            [] {
    return from_report(run_check("ic-equivalence", Family::Sp, 8));
  });

  criterion("A4", "infinitesimal character equivalence for SO*, n <= 8", 30000,
            [] {
    return from_report(run_check("ic-equivalence", Family::SOStar, 8));
  });

  criterion("A5", "promotion/reconstruction round trips, n <= 7", 60000, [] {
    return from_report(run_check("roundtrip", std::nullopt, 7));
  });

  criterion("A6", "weakly fair lambda solutions, n <= 7", 60000, [] {
    return from_report(run_check("lambda", std::nullopt, 7));
  });

  criterion("A7", "certificate chains with verified steps, n <= 7", 120000, [] {
    return from_report(run_check("certify", std::nullopt, 7));
  });

  criterion("A8", "domino uniqueness, n <= 6, plus the negative control",
            120000, [] {
    std::string sweep = from_report(run_check("domino-unique", std::nullopt, 6));
    if (!sweep.empty()) return sweep;
    if (domino_count(Partition({2, 2}), int_labels({1, 0})) != 1)
      return std::string("count((2,2), {1,0}) != 1");
    long long wrong = domino_count(Partition({2, 2}), int_labels({1, 1}));
    if (wrong != 0)
      return "count((2,2), {1,1}) = " + std::to_string(wrong) +
             ", expected 0 (incompatible with the uniqueness sweep; see "
             "README notes)";
    return std::string();
  });

  criterion("A9", "nonintegral strip-and-induce exhaustion, n <= 8", 120000,
            [] {
    return from_report(run_check("nonintegral", std::nullopt, 8));
  });

  criterion("A10", "collapse agrees with the exhaustive oracle, totals <= 12",
            60000, [] {
    return from_report(run_check("collapse-oracle", std::nullopt, 6));
  });

  if (failures) {
    std::printf("%d criteria failed\n", failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
