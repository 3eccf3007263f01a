#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uniatlas/group_table.hpp"

namespace uniatlas::spin {

/// The set I = {a_1 < ... < a_k} of distinct odd parts of a partition.
/// Only the residues a_i mod 4 matter to the presented group, through the
/// square relation x_i^2 = t^{a_i(a_i-1)/2} (t denotes the central
/// involution coming from the kernel of the covering map).
class OddPartSet {
 public:
  explicit OddPartSet(std::vector<int> parts);
  const std::vector<int>& parts() const { return parts_; }
  int k() const { return static_cast<int>(parts_.size()); }
  /// Exponent of t in x_i^2, i.e. a_i(a_i-1)/2 mod 2.
  int square_sign(int i) const;

 private:
  std::vector<int> parts_;
};

/// Normal form t^theta x_1^{e_1} ... x_k^{e_k}; bit i-1 of `bits` is e_i.
struct SpinElement {
  unsigned theta = 0;
  unsigned bits = 0;
  bool operator==(const SpinElement&) const = default;
};

/// Normal-form product in the presented 2-group: reordering two generators
/// costs one t, collapsing x_i^2 costs t^{a_i(a_i-1)/2}.
SpinElement spin_multiply(const SpinElement& u, const SpinElement& v, const OddPartSet& parts);

SpinElement spin_identity();
SpinElement spin_theta();
SpinElement spin_generator(int i);          // x_i, 1-based
SpinElement spin_y(int i);                  // y_i = x_1 x_i, 2 <= i
std::string spin_label(const SpinElement& e, int k);

/// z = x_1 x_2 ... x_k.
SpinElement central_element_z(const OddPartSet& parts);

/// The full group S of order 2^{k+1}, its even-word subgroup A of order 2^k
/// and the distinguished elements, all materialised as group tables.
class SpinGroup {
 public:
  static SpinGroup build(const OddPartSet& parts);

  const OddPartSet& parts() const { return parts_; }
  int k() const { return parts_.k(); }
  const groups::GroupTable& table_s() const { return s_; }
  const groups::GroupTable& table_a() const { return a_; }

  int s_index(const SpinElement& e) const;
  SpinElement s_element(int index) const;
  /// Index in A, or -1 for odd words.
  int a_index(const SpinElement& e) const;
  SpinElement a_element(int index) const;
  int theta_in_a() const { return theta_in_a_; }

  /// The constant c with z = y_2 ... y_k t^c (computed, not assumed).
  /// Defined for even k only; -1 when k is odd and z is an odd word.
  int z_constant() const { return z_constant_; }

 private:
  SpinGroup(OddPartSet parts, groups::GroupTable s, groups::GroupTable a);
  OddPartSet parts_;
  groups::GroupTable s_;
  groups::GroupTable a_;
  std::vector<int> a_of_s_;  // S index -> A index or -1
  std::vector<int> s_of_a_;  // A index -> S index
  int theta_in_a_ = 0;
  int z_constant_ = 0;
};

/// Frobenius twist data on the generators y_i: F(y_i) = y_i t^{f_i}.
struct TwistPattern {
  std::vector<unsigned char> flips;  // f_2 ... f_k
};

enum class TwistCase { A, B };  // even / odd number of flipped generators
TwistCase classify_twist(const TwistPattern& t);

enum class SpinFamily { B, D };

/// The automorphism of A determined by a twist pattern (fixes t, multiplies
/// y_i by t^{f_i}); always a valid automorphism, which build verifies.
groups::Automorphism twist_automorphism(const SpinGroup& g, const TwistPattern& t);

struct TwistReport {
  TwistCase twist_case;
  bool is_inner;
  std::optional<int> witness;  // index in A when inner
  long long fixed_order;       // |A^F|
  long long z_fixed_order;     // |Z^F|, Z = image of the full centre in A
  long long a_tilde_order;     // |A / Z|
  bool well_chosen;            // fixed_order == z_fixed_order * a_tilde_order
};

/// Case analysis of a twist. Inner twists (case (a), and case (b) in family
/// B) are untwisted by their witness before fixed points are counted, so the
/// report always describes the representative the existence argument
/// produces. Family D requires k even, family B requires k odd; a half-spin
/// target additionally forbids case (b).
TwistReport twist_analysis(const SpinGroup& g, const TwistPattern& t, SpinFamily family,
                           bool half_spin = false);

/// x_i x_j for 2 <= i < j <= k; conjugation by it flips exactly y_i and y_j.
/// Throws std::invalid_argument on out-of-range indices.
SpinElement sigma_ij_witness(const SpinGroup& g, int i, int j);

}  // namespace uniatlas::spin
