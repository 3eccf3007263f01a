#pragma once

#include <optional>
#include <string>
#include <vector>

namespace uniatlas::groups {

/// Upper bound on the order of an explicit group table. Every group handled
/// here is a component group of a centraliser in a simple algebraic group,
/// so in practice orders stay at or below 2^{k+1} with small k.
inline constexpr int kMaxGroupOrder = 4096;

/// An explicit finite group given by its full multiplication table.
///
/// Elements are indices 0..order-1. The table is verified exhaustively on
/// construction: associativity, a two-sided identity, two-sided inverses and
/// unique labels. Construction throws std::invalid_argument on any defect.
class GroupTable {
 public:
  GroupTable(std::vector<std::vector<int>> mul, std::vector<std::string> labels);

  static GroupTable cyclic(int n);
  static GroupTable symmetric(int n);  // S_n, n <= 6
  static GroupTable direct_product(const GroupTable& g, const GroupTable& h);

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * order_ + b]; }
  int inverse(int a) const { return inverse_[a]; }
  const std::string& label(int a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const { return labels_; }

  int power(int a, long long e) const;
  int element_order(int a) const;
  bool is_abelian() const;
  std::optional<int> find_label(const std::string& label) const;

  /// Multiset of element orders, sorted. A cheap isomorphism fingerprint.
  std::vector<int> order_profile() const;

 private:
  int order_ = 0;
  int identity_ = 0;
  std::vector<int> mul_;  // row-major order x order
  std::vector<int> inverse_;
  std::vector<std::string> labels_;

  void verify() const;
};

/// A permutation of element indices. Valid automorphisms satisfy
/// perm(identity) = identity and perm(a*b) = perm(a)*perm(b).
struct Automorphism {
  std::vector<int> perm;

  int operator()(int x) const { return perm[x]; }
  bool operator==(const Automorphism&) const = default;
};

Automorphism identity_automorphism(const GroupTable& g);
/// Conjugation x -> a^{-1} x a.
Automorphism conjugation_by(const GroupTable& g, int a);
/// (f o h)(x) = f(h(x)).
Automorphism compose(const Automorphism& f, const Automorphism& h);
bool is_automorphism(const GroupTable& g, const Automorphism& f);

/// A subgroup materialised as its own table together with the embedding
/// into the parent (subgroup index -> parent index).
struct Subgroup {
  GroupTable table;
  std::vector<int> embedding;
};

/// A central quotient with the projection map (parent index -> coset index).
struct Quotient {
  GroupTable table;
  std::vector<int> projection;
};

/// Orbits of the relation x ~ g * x * F(g)^{-1} over all g, computed with a
/// union-find pass. The orbits partition the group; for F = identity they
/// are the ordinary conjugacy classes.
std::vector<std::vector<int>> f_conjugacy_classes(const GroupTable& g, const Automorphism& f);

/// The three equivalent statements for an abelian group with automorphism F:
/// the F-class count equals |G|, F fixes everything, and the same holds for
/// every inner twist of F. Throws std::invalid_argument on non-abelian input.
struct Lemma22Result {
  bool class_count_full;
  bool fixes_everything;
  bool all_inner_twists;
  bool all_equal() const {
    return class_count_full == fixes_everything && fixes_everything == all_inner_twists;
  }
};
Lemma22Result lemma22_equivalence(const GroupTable& g, const Automorphism& f);

Subgroup fixed_subgroup(const GroupTable& g, const Automorphism& f);
Subgroup center(const GroupTable& g);

/// Some witness a with F(x) = a^{-1} x a for all x, or nullopt if F is outer.
std::optional<int> is_inner(const GroupTable& g, const Automorphism& f);

/// Quotient by a central subgroup, given by its element indices.
/// Throws std::invalid_argument unless the elements form a central subgroup.
Quotient quotient_by_central(const GroupTable& g, const std::vector<int>& central);

/// A short generating sequence, chosen greedily by span growth.
std::vector<int> generating_sequence(const GroupTable& g);

/// Every automorphism, found by brute force over generator images.
/// Intended for small groups (the lemma-verification suites use it on
/// groups of order at most 120).
std::vector<Automorphism> all_automorphisms(const GroupTable& g);

/// Subgroup generated by the given elements.
std::vector<int> closure(const GroupTable& g, std::vector<int> gens);

/// JSON round-trip: {"order": n, "labels": [...], "mul": [[...]]}.
std::string to_json(const GroupTable& g);
GroupTable group_table_from_json(const std::string& text);

}  // namespace uniatlas::groups
