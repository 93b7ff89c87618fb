#include <doctest.h>

#include <stdexcept>

#include "unipcert/duality.hpp"

using namespace unipcert;

namespace {
Partition P(std::vector<int> v) { return Partition(std::move(v)); }
}  // namespace

TEST_CASE("spaltenstein_dual examples") {
  CHECK(spaltenstein_dual(P({2, 2}), DualDirection::CtoB) == P({3, 1, 1}));
  CHECK(spaltenstein_dual(P({3, 1, 1}), DualDirection::BtoC) == P({2, 2}));
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> ones(2 * n, 1);
    CHECK(spaltenstein_dual(P(ones), DualDirection::CtoB) == P({2 * n + 1}));
    CHECK(spaltenstein_dual(P({2 * n}), DualDirection::CtoB) ==
          P(std::vector<int>(2 * n + 1, 1)));
  }
  CHECK(spaltenstein_dual(P({3, 1}), DualDirection::DtoD) == P({1, 1, 1, 1}));
  CHECK_THROWS_AS(spaltenstein_dual(P({3, 1}), DualDirection::CtoB),
                  std::invalid_argument);
}

TEST_CASE("chi_prime paper anchors") {
  for (int n = 1; n <= 10; ++n) {
    std::vector<int> expected;
    for (int v = 1; v <= n; ++v) expected.push_back(2 * v);
    CHECK(chi_prime_raw(P(std::vector<int>(2 * n, 1)), Family::Sp) == expected);

    std::vector<int> alternating;
    for (int i = 0; i < n; ++i) alternating.push_back(i % 2 == 0 ? 2 : 0);
    CHECK(chi_prime_raw(P({n, n}), Family::Sp) == alternating);
  }
  CHECK(chi_prime_raw(P({4, 4, 1, 1}), Family::Sp) ==
        std::vector<int>({2, 4, 0, 2, 0}));
  CHECK_THROWS_AS(chi_prime(P({2, 1, 1}), Family::Sp), std::invalid_argument);
}

TEST_CASE("chi_prime is always integral with n entries") {
  for (int n = 1; n <= 8; ++n)
    for (const Partition& shape : even_multiplicity_partitions(2 * n))
      for (Family fam : {Family::Sp, Family::SOStar}) {
        InfChar chi = chi_prime(shape, fam);
        CHECK(chi.integral());
        CHECK(chi.size() == n);
      }
  // The SO* zero orbit carries the even orthogonal rho multiset.
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> expected;
    for (int v = 0; v < n; ++v) expected.push_back(2 * v);
    CHECK(chi_prime_raw(P(std::vector<int>(2 * n, 1)), Family::SOStar) ==
          expected);
  }
}

TEST_CASE("chi_of_dual examples") {
  CHECK(chi_of_dual(P({3, 1, 1}), FormType::B) ==
        InfChar({2, 0}, WeylKind::BC));
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> rho;
    for (int v = n; v >= 1; --v) rho.push_back(2 * v);
    CHECK(chi_of_dual(P({2 * n + 1}), FormType::B) ==
          InfChar(rho, WeylKind::BC));
  }
  CHECK(chi_of_dual(P({3, 2, 2}), FormType::B) ==
        InfChar({2, 1, 1}, WeylKind::BC));
}

TEST_CASE("duality and chi' agree on the worked instance") {
  InfChar from_dual =
      chi_of_dual(spaltenstein_dual(P({2, 2}), DualDirection::CtoB),
                  FormType::B);
  CHECK(equal_mod_w(from_dual, chi_prime(P({2, 2}), Family::Sp)));
}

TEST_CASE("ic equivalence spot checks") {
  // (2,2): even part 2 present up to k=2, so all three conditions hold.
  Partition dual22 = spaltenstein_dual(P({2, 2}), DualDirection::CtoB);
  CHECK(is_even_orbit(dual22, FormType::B));
  CHECK(part_occurrence_criterion(P({2, 2}), Family::Sp));

  // (4,4,1,1): even part 2 missing although 4 appears.
  Partition shape = P({4, 4, 1, 1});
  CHECK_FALSE(part_occurrence_criterion(shape, Family::Sp));
  Partition dual = spaltenstein_dual(shape, DualDirection::CtoB);
  CHECK(dual == P({5, 2, 2, 1, 1}));
  CHECK_FALSE(is_even_orbit(dual, FormType::B));
  CHECK_FALSE(equal_mod_w(chi_of_dual(dual, FormType::B),
                          chi_prime(shape, Family::Sp)));
}

TEST_CASE("ic equivalence is exhaustive at small rank") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(check_ic_equivalence(Family::Sp, n).counterexamples.empty());
    CHECK(check_ic_equivalence(Family::SOStar, n).counterexamples.empty());
  }
}

TEST_CASE("duality is involutive on special partitions") {
  for (int total = 0; total <= 16; total += 2) {
    for (const Partition& p : partitions_of(total)) {
      if (is_special(p, FormType::C)) {
        Partition round = spaltenstein_dual(
            spaltenstein_dual(p, DualDirection::CtoB), DualDirection::BtoC);
        CHECK(round == p);
      }
      if (is_special(p, FormType::D)) {
        Partition round = spaltenstein_dual(
            spaltenstein_dual(p, DualDirection::DtoD), DualDirection::DtoD);
        CHECK(round == p);
      }
    }
    for (const Partition& p : partitions_of(total + 1)) {
      if (is_special(p, FormType::B)) {
        Partition round = spaltenstein_dual(
            spaltenstein_dual(p, DualDirection::BtoC), DualDirection::CtoB);
        CHECK(round == p);
      }
    }
  }
}
