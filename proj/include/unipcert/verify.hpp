#pragma once

#include <optional>
#include <string>
#include <vector>

#include "unipcert/tableau.hpp"

namespace unipcert {

struct VerifyReport {
  std::string check;
  std::string family;  // "sp", "sostar" or "both"
  int max_n = 0;
  long long instances = 0;
  std::vector<std::string> failures;  // full reproduction data, one line each
  double wall_ms = 0.0;
};

// Known check ids, in the order `verify --all` runs them.
std::vector<std::string> known_checks();

// Deterministic exhaustive run of one check.  Unknown ids are errors.
VerifyReport run_check(const std::string& id, std::optional<Family> family,
                       int max_n);

}  // namespace unipcert
