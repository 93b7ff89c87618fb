#include "unipcert/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

#include "unipcert/catalog.hpp"
#include "unipcert/duality.hpp"
#include "unipcert/induction.hpp"
#include "unipcert/parabolic.hpp"
#include "unipcert/partition.hpp"

namespace unipcert {

namespace {

std::vector<RealForm> forms_of_rank(Family fam, int n) {
  std::vector<RealForm> out;
  if (fam == Family::Sp) {
    for (int p = 0; p <= n; ++p) out.push_back(RealForm::sp(p, n - p));
  } else {
    out.push_back(RealForm::so_star(n));
  }
  return out;
}

std::vector<Family> families(std::optional<Family> family) {
  if (family) return {*family};
  return {Family::Sp, Family::SOStar};
}

bool moving_mult_at_most_two(const SignedTableau& t) {
  int moving_parity = t.form().family == Family::Sp ? 0 : 1;
  Partition shape = t.shape();
  for (int m : shape.parts())
    if (m % 2 == moving_parity && shape.multiplicity(m) > 2) return false;
  return true;
}

// Exhaustive dominance maximum over all FormType-partitions of the total.
Partition collapse_oracle(const Partition& p, FormType t) {
  std::optional<Partition> best;
  for (const Partition& cand : partitions_of(p.total())) {
    if (!is_type(cand, t) || !dominates(p, cand)) continue;
    if (!best || dominates(cand, *best)) best = cand;
  }
  if (!best) throw std::logic_error("collapse_oracle: no candidate");
  return *best;
}

using CheckFn = std::function<void(Family, int, long long&,
                                   std::vector<std::string>&)>;

void check_collapse_oracle(Family, int max_n, long long& instances,
                           std::vector<std::string>& failures) {
  for (int total = 0; total <= 2 * max_n; ++total) {
    for (const Partition& p : partitions_of(total)) {
      for (FormType t : {FormType::B, FormType::C, FormType::D}) {
        if (t == FormType::C && total % 2 != 0) continue;
        ++instances;
        Partition got = collapse(p, t);
        Partition want = collapse_oracle(p, t);
        if (!(got == want))
          failures.push_back("collapse(" + p.str() + "," + to_string(t) +
                             ") = " + got.str() + ", oracle says " +
                             want.str());
      }
    }
  }
}

void check_transpose_involution(Family, int max_n, long long& instances,
                                std::vector<std::string>& failures) {
  for (int total = 0; total <= 2 * max_n; ++total) {
    for (const Partition& p : partitions_of(total)) {
      ++instances;
      if (!(transpose(transpose(p)) == p))
        failures.push_back("transpose is not involutive on " + p.str());
    }
  }
}

void check_duality_involution(Family, int max_n, long long& instances,
                              std::vector<std::string>& failures) {
  for (int total = 0; total <= 2 * max_n; total += 2) {
    for (const Partition& p : partitions_of(total)) {
      if (is_special(p, FormType::C)) {
        ++instances;
        Partition back = spaltenstein_dual(
            spaltenstein_dual(p, DualDirection::CtoB), DualDirection::BtoC);
        if (!(back == p))
          failures.push_back("d(d(" + p.str() + ")) = " + back.str() +
                             " via C->B->C");
      }
      if (is_special(p, FormType::D)) {
        ++instances;
        Partition back = spaltenstein_dual(
            spaltenstein_dual(p, DualDirection::DtoD), DualDirection::DtoD);
        if (!(back == p))
          failures.push_back("d(d(" + p.str() + ")) = " + back.str() +
                             " via D->D->D");
      }
    }
    for (const Partition& p : partitions_of(total + 1)) {
      if (is_special(p, FormType::B)) {
        ++instances;
        Partition back = spaltenstein_dual(
            spaltenstein_dual(p, DualDirection::BtoC), DualDirection::CtoB);
        if (!(back == p))
          failures.push_back("d(d(" + p.str() + ")) = " + back.str() +
                             " via B->C->B");
      }
    }
  }
}

void check_ic(Family fam, int max_n, long long& instances,
              std::vector<std::string>& failures) {
  for (int n = 1; n <= max_n; ++n) {
    IcReport report = check_ic_equivalence(fam, n);
    instances += report.shapes_checked;
    for (const IcCounterexample& c : report.counterexamples)
      failures.push_back(
          to_string(fam) + " shape " + c.shape.str() + ": chi_match=" +
          std::to_string(c.chi_match) + " dual_even=" +
          std::to_string(c.dual_even) + " parts=" +
          std::to_string(c.parts_criterion));
  }
}

void for_each_tableau(Family fam, int max_n,
                      const std::function<void(const SignedTableau&)>& fn) {
  for (int n = 1; n <= max_n; ++n)
    for (const RealForm& rf : forms_of_rank(fam, n))
      for (const Partition& shape : shapes_meeting_p(rf))
        for (const SignedTableau& t : enumerate_K_orbits(rf, shape)) fn(t);
}

void check_roundtrip(Family fam, int max_n, long long& instances,
                     std::vector<std::string>& failures) {
  for_each_tableau(fam, max_n, [&](const SignedTableau& t) {
    if (!moving_mult_at_most_two(t)) return;
    ++instances;
    std::string label = t.form().str() + " " + t.str();
    try {
      PromotedTableau s1 = promote(t);
      LeviSequence levi = levi_sequence(s1);
      PromotedTableau rebuilt = reconstruct_dense(levi);
      if (!(rebuilt == s1)) {
        failures.push_back(label + ": reconstruct_dense(levi) = " +
                           rebuilt.str() + " differs from S1 = " + s1.str());
        return;
      }
      SignedTableau back = collapse_promoted(s1);
      if (!(back == t)) {
        failures.push_back(label + ": collapse_promoted(S1) = " + back.str());
        return;
      }
      if (fam == Family::Sp &&
          (levi.p_sum() != t.form().p || levi.q_sum() != t.form().q)) {
        failures.push_back(label + ": Levi sums do not match the form");
        return;
      }
      if (fam == Family::SOStar && levi.rank() != t.form().n) {
        failures.push_back(label + ": Levi rank does not match the form");
        return;
      }
      if (!birational_check(t))
        failures.push_back(label + ": birational dimension check failed");
    } catch (const std::exception& e) {
      failures.push_back(label + ": " + e.what());
    }
  });
}

void check_lambda(Family fam, int max_n, long long& instances,
                  std::vector<std::string>& failures) {
  for_each_tableau(fam, max_n, [&](const SignedTableau& t) {
    if (!moving_mult_at_most_two(t)) return;
    ++instances;
    std::string label = t.form().str() + " " + t.str();
    try {
      AqDatum datum = aq_datum(t);
      if (!datum.weakly_fair) {
        failures.push_back(label + ": datum is not weakly fair");
        return;
      }
      if (!equal_mod_w(datum.infchar, chi_prime(t.shape(), fam)))
        failures.push_back(label + ": lambda+rho differs from chi' mod W");
    } catch (const std::exception& e) {
      failures.push_back(label + ": " + e.what());
    }
  });
}

void check_certify(Family fam, int max_n, long long& instances,
                   std::vector<std::string>& failures) {
  for_each_tableau(fam, max_n, [&](const SignedTableau& t) {
    ++instances;
    std::string label = t.form().str() + " " + t.str();
    try {
      UnitarityCertificate cert = certify(t);
      const SignedTableau& terminal = cert.terminal->dense_orbit;
      if (!moving_mult_at_most_two(terminal)) {
        failures.push_back(label + ": terminal tableau " + terminal.str() +
                           " still has a large multiplicity");
        return;
      }
      // Re-verify each step externally.
      for (const InductionStep& step : cert.steps) {
        std::vector<SignedTableau> raised = raise_rows(step.source, step.k);
        if (raised.size() != 1) {
          failures.push_back(label + ": chain step is not a unique raise");
          return;
        }
        InfChar lhs = chi_prime(step.target.shape(), fam);
        InfChar rhs =
            concat(chi_prime(step.source.shape(), fam), det_string(step.k, 1));
        if (!equal_mod_w(lhs, rhs)) {
          failures.push_back(label + ": step infinitesimal character broken");
          return;
        }
      }
    } catch (const std::exception& e) {
      failures.push_back(label + ": " + e.what());
    }
  });
}

void check_domino(Family fam, int max_n, long long& instances,
                  std::vector<std::string>& failures) {
  for (int n = 1; n <= max_n; ++n) {
    for (const Partition& shape : even_multiplicity_partitions(2 * n)) {
      ++instances;
      long long count = domino_count(shape, chi_prime(shape, fam));
      if (count != 1)
        failures.push_back(to_string(fam) + " shape " + shape.str() +
                           ": domino_count = " + std::to_string(count));
    }
  }
}

void check_nonintegral(Family fam, int max_n, long long& instances,
                       std::vector<std::string>& failures) {
  FormType dual_type = fam == Family::Sp ? FormType::B : FormType::D;
  DualDirection down =
      fam == Family::Sp ? DualDirection::BtoC : DualDirection::DtoD;
  for (int n = 1; n <= max_n; ++n) {
    int boxes = fam == Family::Sp ? 2 * n + 1 : 2 * n;
    for (const Partition& dual : partitions_of(boxes)) {
      if (!is_type(dual, dual_type) || is_even_orbit(dual, dual_type))
        continue;
      Partition shape = spaltenstein_dual(dual, down);
      for (const RealForm& rf : forms_of_rank(fam, n)) {
        ++instances;
        std::string label = rf.str() + " dual " + dual.str();
        try {
          std::vector<InducedDatum> data = special_unipotent_data(dual, rf);
          size_t expected = has_even_columns(shape)
                                ? enumerate_K_orbits(rf, shape).size()
                                : 0;
          if (data.size() != expected) {
            failures.push_back(label + ": emitted " +
                               std::to_string(data.size()) + " data, " +
                               std::to_string(expected) + " K-orbits");
            continue;
          }
          InfChar chi = chi_of_dual(dual, dual_type);
          bool very_even = true;
          for (int m : dual.parts()) very_even = very_even && m % 2 == 0;
          for (const InducedDatum& d : data) {
            // Very even duals: the Jordan type labels two orbits whose
            // characters differ by the type D sign parity.
            bool chi_ok = very_even ? equal_mod_w_abs(d.infchar, chi)
                                    : equal_mod_w(d.infchar, chi);
            if (!chi_ok)
              failures.push_back(label + ": infchar differs from chi(dual)");
            if (!(d.induced_orbit.shape() == shape))
              failures.push_back(label + ": induced shape differs from d(dual)");
          }
        } catch (const std::exception& e) {
          failures.push_back(label + ": " + e.what());
        }
      }
    }
  }
}

void check_counting(Family fam, int max_n, long long& instances,
                    std::vector<std::string>& failures) {
  for (int n = 1; n <= max_n; ++n)
    for (const RealForm& rf : forms_of_rank(fam, n))
      for (const Partition& shape : shapes_meeting_p(rf)) {
        ++instances;
        size_t orbits = enumerate_K_orbits(rf, shape).size();
        size_t records = unip_prime(rf, shape).size();
        if (orbits != records)
          failures.push_back(rf.str() + " shape " + shape.str() + ": " +
                             std::to_string(records) + " records vs " +
                             std::to_string(orbits) + " orbits");
      }
}

struct CheckSpec {
  std::string id;
  bool family_parametrized;
  CheckFn fn;
};

const std::vector<CheckSpec>& check_table() {
  static const std::vector<CheckSpec> table = {
      {"transpose-involution", false, check_transpose_involution},
      {"collapse-oracle", false, check_collapse_oracle},
      {"duality-involution", false, check_duality_involution},
      {"ic-equivalence", true, check_ic},
      {"roundtrip", true, check_roundtrip},
      {"lambda", true, check_lambda},
      {"certify", true, check_certify},
      {"domino-unique", true, check_domino},
      {"nonintegral", true, check_nonintegral},
      {"counting", true, check_counting},
  };
  return table;
}

}  // namespace

std::vector<std::string> known_checks() {
  std::vector<std::string> out;
  for (const CheckSpec& c : check_table()) out.push_back(c.id);
  return out;
}

VerifyReport run_check(const std::string& id, std::optional<Family> family,
                       int max_n) {
  if (max_n < 1) throw std::invalid_argument("verify: max_n must be >= 1");
  const CheckSpec* spec = nullptr;
  for (const CheckSpec& c : check_table())
    if (c.id == id) spec = &c;
  if (!spec) throw std::invalid_argument("verify: unknown check '" + id + "'");

  VerifyReport report;
  report.check = id;
  report.max_n = max_n;
  auto start = std::chrono::steady_clock::now();
  if (spec->family_parametrized) {
    std::vector<Family> fams = families(family);
    report.family = family ? to_string(*family) : "both";
    for (Family f : fams)
      spec->fn(f, max_n, report.instances, report.failures);
  } else {
    report.family = "both";
    spec->fn(Family::Sp, max_n, report.instances, report.failures);
  }
  std::sort(report.failures.begin(), report.failures.end());
  auto end = std::chrono::steady_clock::now();
  report.wall_ms =
      std::chrono::duration_cast<std::chrono::microseconds>(end - start)
          .count() /
      1000.0;
  return report;
}

}  // namespace unipcert
