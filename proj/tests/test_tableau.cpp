#include <doctest.h>

#include <stdexcept>

#include <set>

#include "unipcert/tableau.hpp"

using namespace unipcert;

namespace {

SignedTableau T(const char* text, RealForm rf) {
  return SignedTableau::parse(text, rf);
}

}  // namespace

TEST_CASE("grammar round trip and canonical form") {
  RealForm rf = RealForm::sp(5, 4);
  SignedTableau t = T("3+^2 3-^2 2+ 2- 1+^2", rf);
  CHECK(t.str() == "3+^2 3-^2 2+ 2- 1+^2");
  // Out-of-order input is canonicalized by the printer.
  CHECK(T("1+^2 2- 2+ 3-^2 3+^2", rf).str() == "3+^2 3-^2 2+ 2- 1+^2");
  CHECK_THROWS_AS(T("2+ 2+", rf), std::invalid_argument);
  CHECK_THROWS_AS(T("2", rf), std::invalid_argument);
  CHECK_THROWS_AS(T("2+^0", rf), std::invalid_argument);
  CHECK_THROWS_AS(T("0+", rf), std::invalid_argument);
}

TEST_CASE("validate examples") {
  CHECK(T("2+ 2-", RealForm::sp(1, 1)).is_valid());
  auto bad = T("2+^2", RealForm::sp(2, 0)).validate();
  REQUIRE_FALSE(bad.empty());
  CHECK(bad.front().rule == "even-part-sign-balance");
  CHECK(T("3+ 3-", RealForm::so_star(3)).is_valid());
  CHECK_FALSE(T("3+^2", RealForm::so_star(3)).is_valid());
}

TEST_CASE("signature") {
  CHECK(T("2+ 2-", RealForm::sp(1, 1)).signature() ==
        std::pair<int, int>(2, 2));
  CHECK(T("3+", RealForm::sp(2, 1)).signature() == std::pair<int, int>(2, 1));
  CHECK(T("1+^4", RealForm::sp(2, 0)).signature() ==
        std::pair<int, int>(4, 0));
}

TEST_CASE("enumerate_K_orbits examples") {
  auto orbits = enumerate_K_orbits(RealForm::sp(2, 2), Partition({3, 3, 1, 1}));
  REQUIRE(orbits.size() == 2);
  CHECK(orbits[0].str() == "3+^2 1-^2");
  CHECK(orbits[1].str() == "3-^2 1+^2");

  auto one = enumerate_K_orbits(RealForm::sp(1, 1), Partition({2, 2}));
  REQUIRE(one.size() == 1);
  CHECK(one[0].str() == "2+ 2-");

  CHECK(enumerate_K_orbits(RealForm::sp(2, 0), Partition({2, 2})).empty());
  CHECK_THROWS_AS(enumerate_K_orbits(RealForm::sp(2, 0), Partition({2, 1, 1})),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_K_orbits(RealForm::sp(1, 1), Partition({2, 2, 2})),
                  std::invalid_argument);
}

TEST_CASE("shapes_meeting_p examples") {
  auto sp11 = shapes_meeting_p(RealForm::sp(1, 1));
  CHECK(sp11 == std::vector<Partition>(
                    {Partition({1, 1, 1, 1}), Partition({2, 2})}));
  auto sp20 = shapes_meeting_p(RealForm::sp(2, 0));
  CHECK(sp20 == std::vector<Partition>({Partition({1, 1, 1, 1})}));
  auto so1 = shapes_meeting_p(RealForm::so_star(1));
  CHECK(so1 == std::vector<Partition>({Partition({1, 1})}));
}

TEST_CASE("enumeration is deterministic, valid and evenly signed") {
  for (int n = 1; n <= 8; ++n) {
    std::vector<RealForm> forms;
    for (int p = 0; p <= n; ++p) forms.push_back(RealForm::sp(p, n - p));
    forms.push_back(RealForm::so_star(n));
    for (const RealForm& rf : forms) {
      for (const Partition& shape : shapes_meeting_p(rf)) {
        auto orbits = enumerate_K_orbits(rf, shape);
        auto again = enumerate_K_orbits(rf, shape);
        CHECK(orbits == again);
        std::set<std::string> seen;
        for (const SignedTableau& t : orbits) {
          CHECK(t.is_valid());
          Partition tshape = t.shape();
          CHECK(tshape == shape);
          CHECK(seen.insert(t.str()).second);
          // All parts occur with even total multiplicity.
          for (int m : tshape.parts())
            CHECK(tshape.multiplicity(m) % 2 == 0);
          if (rf.family == Family::Sp) {
            CHECK(t.signature() ==
                  std::pair<int, int>(2 * rf.p, 2 * rf.q));
          } else {
            CHECK(t.boxes() == 2 * rf.n);
          }
        }
      }
    }
  }
}
