#pragma once

#include <string>
#include <vector>

#include "uniatlas/spin_group.hpp"

namespace uniatlas::lemmas {

struct LemmaReport {
  std::string id;
  long long universe = 0;  // objects examined
  bool pass = false;
  std::vector<std::string> counterexamples;
  std::vector<std::string> notes;
};

/// Component group Z_3 x Z_2: any automorphism acting trivially on the
/// quotient by the central Z_3 fixes the involution, by element orders.
LemmaReport verify_e6();

/// Component group S_3 x Z_2 with central z: automorphisms fixing z and the
/// quotient either are the identity (6 twisted classes) or flip the
/// transposition cosets by z and drop the twisted class count below 6.
LemmaReport verify_e7_a5();

/// Abelian shapes: requiring as many twisted classes as elements forces the
/// trivial automorphism.
LemmaReport verify_e7_abelian_cases();

/// S_2 ... S_5: every automorphism is inner, with an explicit witness.
LemmaReport verify_symmetric_inner();

/// Presented 2-groups for every square-sign pattern with k <= k_max:
/// defining relations at every element pair, group sizes, centres, and the
/// even-word subgroup structure.
LemmaReport verify_spin_presentation(int k_max);

/// Exhaustive twist case analysis for k <= k_max: inner witnesses in case
/// (a) and in family B, and the fixed-point counts of family D case (b).
LemmaReport verify_spin_suite(int k_max);

/// Symbol blocks for k <= k_max: sizes, anchors, parity counts; plus the
/// binomial halving identity up to binom_max.
LemmaReport verify_symbol_suite(int k_max, int binom_max);

/// Three-way equivalence of the abelian twisted-class criteria on small
/// abelian groups, across all automorphisms.
LemmaReport verify_abelian_equivalence();

/// Spin / SO component-group orders against the presented group, for every
/// valid partition with total <= total_max.
LemmaReport verify_component_consistency(int total_max);

/// Both branches of the SL_2 base value, its agreement with the closed
/// formula at n = 1, and the numeric Gauss-sum route where p^a is small.
LemmaReport verify_zeta_base();

/// The candidate-elimination oracle returns exactly the closed formula on
/// the standard grid of queries.
LemmaReport verify_zeta_oracle();

/// Recursive and closed block assemblies agree for k <= k_max.
LemmaReport verify_block_cross_check(int k_max);

/// zeta'(SO_4) is the square of the SL_2 value (split form).
LemmaReport verify_so4_consistency();

std::vector<std::string> suite_names();
/// Reports for one of: all, groups, exceptional, spin, symbols, zeta.
/// Throws std::invalid_argument on an unknown suite name.
std::vector<LemmaReport> run_suite(const std::string& suite);

/// Smallest strictly increasing odd parts realising the given pattern of
/// square signs (bit i-1 of mask on = x_i squares to t).
spin::OddPartSet realize_square_signs(int k, unsigned mask);

}  // namespace uniatlas::lemmas
