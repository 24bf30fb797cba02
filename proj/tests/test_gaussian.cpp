#include <gtest/gtest.h>

#include <algorithm>

#include "divcalc/divcalc.hpp"

using namespace divcalc;

namespace {

GaussianInput main_input(Int l2) {
  GaussianInput in;
  in.L2 = l2;
  return in;
}

bool has_note(const GaussianVerdict& v, const std::string& needle) {
  return std::any_of(v.notes.begin(), v.notes.end(),
                     [&](const std::string& n) { return n.find(needle) != std::string::npos; });
}

}  // namespace

TEST(Gonality, Table) {
  EXPECT_EQ(gonality(30, 5), 9);
  EXPECT_EQ(gonality(22, 4), 7);
  EXPECT_EQ(gonality(6, 2), 3);
  EXPECT_EQ(gonality(16, 4), 6);
  EXPECT_EQ(gonality(36, 6), 10);
  EXPECT_EQ(gonality(10, 3), 4);
  EXPECT_EQ(gonality(18, 4), 6);
  EXPECT_EQ(gonality(28, 5), 9);
  EXPECT_EQ(gonality(40, 6), 11);
  EXPECT_EQ(gonality(12, 2), 4);
  EXPECT_EQ(gonality(26, 5), 10);
  EXPECT_EQ(gonality(10, 3, false), 6);
  EXPECT_EQ(gonality_detail(16, 4).which, GonalityCase::SquareEven);
  EXPECT_EQ(gonality_detail(9, 3).which, GonalityCase::General);
  EXPECT_EQ(gonality_detail(12, 3).which, GonalityCase::Listed);
  EXPECT_THROW(gonality(8, 3), PreconditionError);
  EXPECT_THROW(gonality(0, 1), PreconditionError);
  EXPECT_THROW(gonality(4, 0), PreconditionError);
}

TEST(Clifford, Helpers) {
  EXPECT_EQ(clifford_of_series(4, 2), 2);
  EXPECT_EQ(cliff_upper_bound(9), 4);
  EXPECT_THROW(cliff_upper_bound(3), PreconditionError);
}

TEST(CliffCriterion, Examples) {
  auto a = check_cliff_criterion(2, 0);
  EXPECT_TRUE(a.surjective());
  EXPECT_EQ(a.rule, "cliff(i)");
  auto b = check_cliff_criterion(3, 1);
  EXPECT_TRUE(b.surjective());
  EXPECT_EQ(b.rule, "cliff(ii)");
  EXPECT_EQ(check_cliff_criterion(2, 1).status, VerdictStatus::NoConclusion);
  EXPECT_EQ(check_cliff_criterion(4, 2).status, VerdictStatus::NoConclusion);
  EXPECT_THROW(check_cliff_criterion(1, 0), PreconditionError);
}

TEST(Bel, Examples) {
  EXPECT_TRUE(check_bel(7, 8, 0, 0, 2).surjective());
  auto low = check_bel(7, 7, 0, 0, 2);
  EXPECT_EQ(low.status, VerdictStatus::NoConclusion);
  EXPECT_TRUE(has_note(low, "deg M >= g + 1"));
  EXPECT_TRUE(check_bel(9, 12, 0, 1, 3).surjective());
  EXPECT_FALSE(check_bel(9, 12, 1, 1, 3).surjective());
  EXPECT_TRUE(has_note(check_bel(7, 8, 0, 0, 5), "exceeds the bound"));

  EXPECT_TRUE(check_bel_divisor(9, {0}, 1, 0, 3).surjective());
  EXPECT_FALSE(check_bel_divisor(9, {0, 0}, 1, 0, 3).surjective());
  EXPECT_FALSE(check_bel_divisor(9, {1}, 1, 0, 3).surjective());
  EXPECT_THROW(check_bel_divisor(9, {}, 1, 0, 3), PreconditionError);
}

TEST(LowGenus, FormulaBounds) {
  GaussianInput in;
  in.aux_h0["4K-M"] = 5;
  in.cork_mu = 0;
  in.h1M = 0;
  auto g3 = corank_low_genus(3, in);
  EXPECT_EQ(g3.status, VerdictStatus::CorankBound);
  EXPECT_EQ(g3.corank, 5);
  EXPECT_FALSE(g3.equality);
  in.degM = 2;
  EXPECT_TRUE(corank_low_genus(3, in).equality);

  GaussianInput g5;
  g5.h0_2K_minus_M = 1;
  g5.cork_mu = 0;
  g5.h1M = 0;
  EXPECT_EQ(corank_low_genus(5, g5, CurveType::Nontrigonal).corank, 3);
  EXPECT_THROW(corank_low_genus(5, g5), PreconditionError);

  GaussianInput g4;
  g4.h0_2K_minus_M = 2;
  g4.aux_h0["3K-M"] = 1;
  g4.cork_mu = 1;
  g4.h1M = 0;
  EXPECT_EQ(corank_low_genus(4, g4).corank, 2);
  EXPECT_THROW(corank_low_genus(7, g4), PreconditionError);
}

TEST(LowGenus, ClampsNegativeValues) {
  GaussianInput in;
  in.aux_h0["4K-M"] = 1;
  in.cork_mu = 2;
  in.h1M = 0;
  auto v = corank_low_genus(3, in);
  EXPECT_EQ(v.corank, 0);
  EXPECT_TRUE(v.clamped);
  EXPECT_TRUE(has_note(v, "clamped"));
}

TEST(LowGenus, PlaneQuinticAndTrigonal) {
  GaussianInput q;
  q.aux_h0["5A-M"] = 0;
  auto v = corank_low_genus(6, q, CurveType::PlaneQuintic);
  EXPECT_TRUE(v.surjective());
  EXPECT_EQ(v.rule, "low(d)");
  q.aux_h0["5A-M"] = 2;
  q.aux_h0["4A-M"] = 1;
  q.h1M = 0;
  q.cork_mu = 0;
  auto w = corank_low_genus(6, q, CurveType::PlaneQuintic);
  EXPECT_EQ(w.status, VerdictStatus::CorankBound);
  EXPECT_EQ(w.corank, 2);
  EXPECT_TRUE(w.equality);
  EXPECT_THROW(corank_low_genus(7, q, CurveType::PlaneQuintic), PreconditionError);

  GaussianInput t;
  t.aux_h0["3K-(g-4)A-M"] = 0;
  t.h0_2K_minus_M = 1;
  EXPECT_TRUE(corank_low_genus(8, t, CurveType::Trigonal).surjective());
  t.aux_h0["3K-(g-4)A-M"] = 3;
  t.degM = 40;  // H1(M) = 0 follows from deg M >= 2g - 1
  t.cork_mu = 0;
  auto u = corank_low_genus(8, t, CurveType::Trigonal);
  EXPECT_EQ(u.corank, 3);
  EXPECT_TRUE(u.equality);
  EXPECT_TRUE(has_note(u, "derived"));
}

TEST(LowGenus, ContradictoryH1IsRejected) {
  GaussianInput in;
  in.aux_h0["4K-M"] = 1;
  in.cork_mu = 0;
  in.h1M = 2;
  in.degM = 10;
  EXPECT_THROW(corank_low_genus(3, in), PreconditionError);
}

TEST(DegreeCorollaries, Thresholds) {
  EXPECT_TRUE(check_degree_corollaries(10, 36, {}).surjective());
  EXPECT_FALSE(check_degree_corollaries(10, 35, {}).surjective());
  EXPECT_FALSE(check_degree_corollaries(10, 36, {false, false, true}).surjective());
  EXPECT_TRUE(check_degree_corollaries(10, 37, {false, false, true}).surjective());

  DegreeFlags tri{false, true, false};
  EXPECT_TRUE(check_degree_corollaries(10, 36, tri).surjective());
  tri.m_eq_special = true;
  EXPECT_FALSE(check_degree_corollaries(10, 36, tri).surjective());
  EXPECT_TRUE(check_degree_corollaries(14, 50, tri).surjective());
  EXPECT_FALSE(check_degree_corollaries(14, 49, {false, true, false}).surjective());

  EXPECT_TRUE(check_degree_corollaries(6, 25, {true, false, false}).surjective());
  EXPECT_FALSE(check_degree_corollaries(6, 25, {true, false, true}).surjective());
  EXPECT_THROW(check_degree_corollaries(7, 25, {true, false, false}), PreconditionError);
  EXPECT_THROW(check_degree_corollaries(6, 25, {true, true, false}), PreconditionError);
  EXPECT_THROW(check_degree_corollaries(4, 25, {}), PreconditionError);
}

TEST(Tetragonal, Branches) {
  EXPECT_TRUE(tetragonal_corank(1, 0, false, false).surjective());
  auto b = tetragonal_corank(0, 2, true, true);
  EXPECT_EQ(b.status, VerdictStatus::CorankBound);
  EXPECT_EQ(b.corank, 2);
  EXPECT_TRUE(b.equality);
  EXPECT_FALSE(tetragonal_corank(3, 2, true, true).equality);
  EXPECT_EQ(tetragonal_corank(2, 1, false, true).status, VerdictStatus::NoConclusion);
}

TEST(B2Rule, Examples) {
  EXPECT_TRUE(b2_rule_enriques(12, 2).b2_at_least_1);
  EXPECT_TRUE(b2_rule_enriques(16, 2).b2_at_least_1);
  EXPECT_FALSE(b2_rule_enriques(10, 2).b2_at_least_1);
  EXPECT_FALSE(b2_rule_enriques(12, 3).b2_at_least_1);
  EXPECT_THROW(b2_rule_enriques(11, 2), PreconditionError);

  auto c = chain_b2_tetragonal(12, 2, 1);
  EXPECT_TRUE(c.surjective());
  EXPECT_EQ(c.rule, "tetragonal(i)");
  EXPECT_FALSE(chain_b2_tetragonal(10, 2, 1).surjective());
  EXPECT_FALSE(chain_b2_tetragonal(12, 2, 2).surjective());
}

TEST(MainTheorem, Examples) {
  auto in = main_input(4);
  in.h0_residual = 0;
  auto a = check_main_theorem(in);
  EXPECT_TRUE(a.surjective());
  EXPECT_EQ(a.rule, "(i)");

  in = main_input(6);
  in.h0_residual = 0;
  EXPECT_EQ(check_main_theorem(in).rule, "(ii)");

  in = main_input(12);
  in.h0_residual = 1;
  auto d = check_main_theorem(in);
  EXPECT_TRUE(d.surjective());
  EXPECT_EQ(d.rule, "(iv)");

  in = main_input(10);
  in.h0_residual = 1;
  auto n = check_main_theorem(in);
  EXPECT_EQ(n.status, VerdictStatus::NoConclusion);
  EXPECT_TRUE(has_note(n, "(iv) needs L² >= 12"));

  in = main_input(8);
  in.degM = 6;
  in.h1M = 0;
  in.h0_2K_minus_M = 0;
  in.cliff = 2;
  auto c = check_main_theorem(in);
  EXPECT_EQ(c.rule, "(iii)");
  EXPECT_TRUE(has_note(c, "satisfied: (iii) (v)"));
}

TEST(MainTheorem, ConditionFiveAlone) {
  auto in = main_input(10);
  in.degM = 7;
  in.h1M = 0;
  in.h0_2K_minus_M = 1;
  in.cliff = 3;
  auto v = check_main_theorem(in);
  EXPECT_TRUE(v.surjective());
  EXPECT_EQ(v.rule, "(v)");

  in.degM = 6;  // below L²/2 + 2
  EXPECT_EQ(check_main_theorem(in).status, VerdictStatus::NoConclusion);
  in.degM = 7;
  in.cliff = 2;
  EXPECT_EQ(check_main_theorem(in).status, VerdictStatus::NoConclusion);
}

TEST(MainTheorem, InputValidation) {
  EXPECT_THROW(check_main_theorem(main_input(6)), PreconditionError);
  EXPECT_THROW(check_main_theorem(main_input(5)), PreconditionError);
  EXPECT_THROW(check_main_theorem(main_input(2)), PreconditionError);
  auto in = main_input(12);
  in.h0_residual = 0;
  in.g = 6;
  EXPECT_THROW(check_main_theorem(in), PreconditionError);
  in.g = 7;
  in.phi = 4;
  EXPECT_THROW(check_main_theorem(in), PreconditionError);
  in.phi = 2;
  in.h0_2K_minus_M = 1;
  EXPECT_THROW(check_main_theorem(in), PreconditionError);
  in.h0_2K_minus_M.reset();
  in.h0_residual = -1;
  EXPECT_THROW(check_main_theorem(in), PreconditionError);
}

TEST(MainTheorem, H0OfTwoKMinusMStandsInForTheResidual) {
  auto in = main_input(14);
  in.h0_2K_minus_M = 1;
  EXPECT_EQ(check_main_theorem(in).rule, "(iv)");
  auto echo = check_main_theorem(in).inputs;
  EXPECT_EQ(echo.front().first, "L2");
}
