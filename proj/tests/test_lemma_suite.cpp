#include <doctest.h>

#include <stdexcept>

#include "uniatlas/lemma_suite.hpp"

using namespace uniatlas;
using namespace uniatlas::lemmas;

namespace {
void expect_pass(const LemmaReport& report) {
  INFO(report.id);
  for (const auto& c : report.counterexamples) { INFO(c); }
  CHECK(report.pass);
  CHECK(report.universe > 0);
}
}  // namespace

TEST_CASE("exceptional component group checks") {
  expect_pass(verify_e6());
  const auto a5 = verify_e7_a5();
  expect_pass(a5);
  CHECK_FALSE(a5.notes.empty());
  expect_pass(verify_e7_abelian_cases());
}

TEST_CASE("symmetric groups are complete with inner witnesses") {
  const auto report = verify_symmetric_inner();
  expect_pass(report);
  CHECK(report.universe == 1 + 6 + 24 + 120);
}

TEST_CASE("spin presentation survey, small k") {
  expect_pass(verify_spin_presentation(4));
}

TEST_CASE("twist survey, small k") {
  expect_pass(verify_spin_suite(4));
}

TEST_CASE("square-sign realisation") {
  const auto parts = realize_square_signs(4, 0b0101u);
  CHECK(parts.k() == 4);
  CHECK(parts.square_sign(1) == 1);
  CHECK(parts.square_sign(2) == 0);
  CHECK(parts.square_sign(3) == 1);
  CHECK(parts.square_sign(4) == 0);
}

TEST_CASE("symbol and binomial suite") {
  expect_pass(verify_symbol_suite(8, 16));
}

TEST_CASE("abelian equivalence suite") {
  expect_pass(verify_abelian_equivalence());
}

TEST_CASE("component order consistency, small totals") {
  expect_pass(verify_component_consistency(12));
}

TEST_CASE("zeta suites") {
  expect_pass(verify_zeta_base());
  expect_pass(verify_so4_consistency());
  expect_pass(verify_block_cross_check(4));
}

TEST_CASE("suite runner") {
  CHECK_THROWS_AS(run_suite("bogus"), std::invalid_argument);
  const auto reports = run_suite("exceptional");
  CHECK(reports.size() == 3);
  CHECK(suite_names().size() == 6);
}
