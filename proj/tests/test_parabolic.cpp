#include <doctest.h>

#include <stdexcept>

#include "unipcert/parabolic.hpp"

using namespace unipcert;

namespace {

SignedTableau T(const char* text, RealForm rf) {
  return SignedTableau::parse(text, rf);
}

LeviSequence L(Family fam, std::vector<std::pair<int, int>> pq) {
  LeviSequence levi;
  levi.family = fam;
  levi.pq = std::move(pq);
  return levi;
}

}  // namespace

TEST_CASE("promote examples") {
  CHECK(promote(T("2+ 2- 1+^2", RealForm::sp(2, 1))).str() == "3+ 1+^2 1-");
  CHECK(promote(T("1+^4 1-^2", RealForm::sp(2, 1))).str() == "1+^4 1-^2");
  CHECK(promote(T("3+ 3-", RealForm::so_star(3))).str() == "4+ 2-");
  CHECK(promote(T("1+ 1-", RealForm::so_star(1))).str() == "2+");
  CHECK_THROWS_AS(promote(T("2+^2 2-^2", RealForm::sp(2, 2))),
                  std::invalid_argument);
}

TEST_CASE("levi_sequence examples") {
  auto levi1 = levi_sequence(promote(T("2+ 2- 1+^2", RealForm::sp(2, 1))));
  CHECK(levi1 == L(Family::Sp, {{1, 1}, {1, 0}}));

  auto levi2 = levi_sequence(promote(T("1+^4 1-^2", RealForm::sp(2, 1))));
  CHECK(levi2 == L(Family::Sp, {{2, 1}}));

  auto levi3 = levi_sequence(promote(T("2+ 2-", RealForm::sp(1, 1))));
  CHECK(levi3 == L(Family::Sp, {{0, 1}, {1, 0}}));

  // Levi sums match the real form.
  CHECK(levi1.p_sum() == 2);
  CHECK(levi1.q_sum() == 1);
}

TEST_CASE("reconstruct_dense examples") {
  CHECK(reconstruct_dense(L(Family::Sp, {{2, 1}})).str() == "1+^4 1-^2");
  CHECK(reconstruct_dense(L(Family::Sp, {{0, 1}, {1, 0}})).str() == "3+ 1-");
  CHECK(reconstruct_dense(L(Family::Sp, {{1, 1}, {1, 0}})).str() ==
        "3+ 1+^2 1-");
  CHECK_THROWS_AS(reconstruct_dense(L(Family::Sp, {{0, 0}, {1, 0}})),
                  std::invalid_argument);
}

TEST_CASE("collapse_promoted examples") {
  CHECK(collapse_promoted(promote(T("2+ 2- 1+^2", RealForm::sp(2, 1)))).str() ==
        "2+ 2- 1+^2");
  // Already-valid promoted tableaux are reinterpreted unchanged.
  PromotedTableau valid(
      {Row{3, Sign::Plus, 2}, Row{1, Sign::Minus, 2}}, RealForm::sp(2, 2));
  CHECK(collapse_promoted(valid).str() == "3+^2 1-^2");
  CHECK(collapse_promoted(promote(T("3+ 3-", RealForm::so_star(3)))).str() ==
        "3+ 3-");
  CHECK(collapse_promoted(promote(T("1+ 1-", RealForm::so_star(1)))).str() ==
        "1+ 1-");
  // Outside the promotion image: 3- has no 1+ partner of the promoted form.
  PromotedTableau outside(
      {Row{3, Sign::Plus, 1}, Row{3, Sign::Minus, 1}, Row{1, Sign::Plus, 1},
       Row{1, Sign::Minus, 1}},
      RealForm::sp(2, 2));
  CHECK_THROWS_AS(collapse_promoted(outside), std::invalid_argument);
}

TEST_CASE("induced_shape examples") {
  CHECK(induced_shape(L(Family::Sp, {{2, 1}})) ==
        Partition({1, 1, 1, 1, 1, 1}));
  CHECK(induced_shape(L(Family::Sp, {{0, 1}, {1, 0}})) == Partition({2, 2}));
  CHECK(induced_shape(L(Family::Sp, {{1, 1}, {1, 0}})) ==
        Partition({2, 2, 1, 1}));
}

TEST_CASE("birational_check examples") {
  CHECK(birational_check(T("1+^2 1-^2", RealForm::sp(1, 1))));
  CHECK(birational_check(T("2+ 2-", RealForm::sp(1, 1))));
}

TEST_CASE("solve_lambda on the worked Sp(1,1) instance") {
  AqDatum datum = solve_lambda(T("2+ 2-", RealForm::sp(1, 1)));
  CHECK(datum.levi == L(Family::Sp, {{0, 1}, {1, 0}}));
  CHECK(datum.lambda_doubled == std::vector<int>({0, -4}));  // t_1 = -2
  CHECK(datum.weakly_fair);
  CHECK(equal_mod_w(datum.infchar, InfChar({2, 0}, WeylKind::BC)));
  CHECK(datum.dense_orbit.str() == "2+ 2-");
}

TEST_CASE("solve_lambda on the zero orbit gives lambda = 0") {
  AqDatum datum = solve_lambda(T("1+^2 1-^2", RealForm::sp(1, 1)));
  CHECK(datum.levi == L(Family::Sp, {{1, 1}}));
  CHECK(datum.lambda_doubled == std::vector<int>({0}));
  CHECK(equal_mod_w(datum.infchar, InfChar({4, 2}, WeylKind::BC)));  // rho
}

TEST_CASE("aq_datum assembles and guards the precondition") {
  AqDatum datum = aq_datum(T("2+ 2-", RealForm::sp(1, 1)));
  CHECK(datum.multiplicity == 1);
  CHECK(datum.dense_orbit == T("2+ 2-", RealForm::sp(1, 1)));

  AqDatum zero = aq_datum(T("1+^4 1-^2", RealForm::sp(2, 1)));
  CHECK(zero.levi == L(Family::Sp, {{2, 1}}));

  CHECK_THROWS_AS(aq_datum(T("2+^2 2-^2", RealForm::sp(2, 2))),
                  std::invalid_argument);
}

TEST_CASE("round trips over all small tableaux") {
  for (int n = 1; n <= 5; ++n) {
    std::vector<RealForm> forms;
    for (int p = 0; p <= n; ++p) forms.push_back(RealForm::sp(p, n - p));
    forms.push_back(RealForm::so_star(n));
    for (const RealForm& rf : forms) {
      for (const Partition& shape : shapes_meeting_p(rf)) {
        for (const SignedTableau& t : enumerate_K_orbits(rf, shape)) {
          int moving = rf.family == Family::Sp ? 0 : 1;
          bool ok = true;
          for (int m : shape.parts())
            if (m % 2 == moving && shape.multiplicity(m) > 2) ok = false;
          if (!ok) continue;
          PromotedTableau s1 = promote(t);
          CHECK(collapse_promoted(s1) == t);
          CHECK(reconstruct_dense(levi_sequence(s1)) == s1);
          CHECK(birational_check(t));
        }
      }
    }
  }
}
