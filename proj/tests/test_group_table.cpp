#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <set>

#include "uniatlas/group_table.hpp"

using namespace uniatlas::groups;

namespace {

// Independent oracle for twisted classes: plain orbit closure by repeated
// sweeps, no union-find.
std::size_t orbit_closure_class_count(const GroupTable& g, const Automorphism& f) {
  const int n = g.order();
  std::vector<int> cls(n, -1);
  int count = 0;
  for (int seed = 0; seed < n; ++seed) {
    if (cls[seed] >= 0) continue;
    std::vector<int> frontier{seed};
    cls[seed] = count;
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int x : frontier)
        for (int a = 0; a < n; ++a) {
          const int y = g.mul(g.mul(a, x), g.inverse(f(a)));
          if (cls[y] < 0) {
            cls[y] = count;
            next.push_back(y);
          }
        }
      frontier = std::move(next);
    }
    ++count;
  }
  return static_cast<std::size_t>(count);
}

GroupTable klein_four() { return GroupTable::direct_product(GroupTable::cyclic(2), GroupTable::cyclic(2)); }

}  // namespace

TEST_CASE("construction rejects defective tables") {
  // A latin square that is not associative: the cyclic table with one row
  // swapped breaks either associativity or the identity laws.
  std::vector<std::vector<int>> bad{{0, 1, 2}, {1, 2, 0}, {2, 1, 0}};
  CHECK_THROWS_AS(GroupTable(bad, {"e", "a", "b"}), std::invalid_argument);
  CHECK_THROWS_AS(GroupTable({{0, 1}, {1, 0}}, {"e", "e"}), std::invalid_argument);
}

TEST_CASE("basic structure of stock groups") {
  const auto z6 = GroupTable::cyclic(6);
  CHECK(z6.order() == 6);
  CHECK(z6.is_abelian());
  CHECK(z6.element_order(1) == 6);

  const auto s3 = GroupTable::symmetric(3);
  CHECK(s3.order() == 6);
  CHECK_FALSE(s3.is_abelian());
  CHECK(s3.order_profile() == std::vector<int>{1, 2, 2, 2, 3, 3});
}

TEST_CASE("twisted classes with the identity recover ordinary classes") {
  const auto v4 = klein_four();
  CHECK(f_conjugacy_classes(v4, identity_automorphism(v4)).size() == 4);
  const auto s3 = GroupTable::symmetric(3);
  CHECK(f_conjugacy_classes(s3, identity_automorphism(s3)).size() == 3);
}

TEST_CASE("coordinate swap on the Klein four group") {
  const auto v4 = klein_four();
  // Swap (a,b) -> (b,a): index a*2+b -> b*2+a.
  Automorphism swap;
  swap.perm = {0, 2, 1, 3};
  REQUIRE(is_automorphism(v4, swap));
  const auto classes = f_conjugacy_classes(v4, swap);
  CHECK(classes.size() == orbit_closure_class_count(v4, swap));
  CHECK(classes.size() == 2);  // frozen from the orbit-closure oracle
}

TEST_CASE("orbits partition the group") {
  const auto s4 = GroupTable::symmetric(4);
  for (const auto& f : {identity_automorphism(s4), conjugation_by(s4, 5)}) {
    const auto classes = f_conjugacy_classes(s4, f);
    std::set<int> all;
    std::size_t total = 0;
    for (const auto& cls : classes) {
      total += cls.size();
      all.insert(cls.begin(), cls.end());
    }
    CHECK(total == static_cast<std::size_t>(s4.order()));
    CHECK(all.size() == total);
  }
}

TEST_CASE("three-way equivalence on abelian groups") {
  const auto z3 = GroupTable::cyclic(3);
  const auto id3 = identity_automorphism(z3);
  auto r = lemma22_equivalence(z3, id3);
  CHECK(r.class_count_full);
  CHECK(r.fixes_everything);
  CHECK(r.all_inner_twists);

  Automorphism inversion;
  inversion.perm = {0, 2, 1};
  r = lemma22_equivalence(z3, inversion);
  CHECK_FALSE(r.class_count_full);
  CHECK_FALSE(r.fixes_everything);
  CHECK_FALSE(r.all_inner_twists);
  // Inversion on Z_3 leaves a single twisted class.
  CHECK(f_conjugacy_classes(z3, inversion).size() == 1);

  const auto z2 = GroupTable::cyclic(2);
  r = lemma22_equivalence(z2, identity_automorphism(z2));
  CHECK(r.all_equal());
  CHECK(r.class_count_full);

  CHECK_THROWS_AS(lemma22_equivalence(GroupTable::symmetric(3),
                                      identity_automorphism(GroupTable::symmetric(3))),
                  std::invalid_argument);
}

TEST_CASE("fixed subgroups") {
  const auto z4 = GroupTable::cyclic(4);
  Automorphism inversion;
  inversion.perm = {0, 3, 2, 1};
  const auto fixed = fixed_subgroup(z4, inversion);
  CHECK(fixed.table.order() == 2);
  CHECK(fixed.embedding == std::vector<int>{0, 2});

  const auto s3 = GroupTable::symmetric(3);
  CHECK(fixed_subgroup(s3, identity_automorphism(s3)).table.order() == 6);
}

TEST_CASE("inner witnesses and the conjugation convention") {
  const auto s3 = GroupTable::symmetric(3);
  for (int a = 0; a < s3.order(); ++a) {
    const auto f = conjugation_by(s3, a);
    const auto witness = is_inner(s3, f);
    REQUIRE(witness.has_value());
    for (int x = 0; x < s3.order(); ++x)
      CHECK(f(x) == s3.mul(s3.inverse(*witness), s3.mul(x, *witness)));
  }

  const auto z3 = GroupTable::cyclic(3);
  Automorphism inversion;
  inversion.perm = {0, 2, 1};
  CHECK_FALSE(is_inner(z3, inversion).has_value());
}

TEST_CASE("every automorphism of S_4 is inner") {
  const auto s4 = GroupTable::symmetric(4);
  const auto autos = all_automorphisms(s4);
  CHECK(autos.size() == 24);
  for (const auto& f : autos) CHECK(is_inner(s4, f).has_value());
}

TEST_CASE("centres") {
  CHECK(center(GroupTable::symmetric(3)).table.order() == 1);
  CHECK(center(GroupTable::cyclic(6)).table.order() == 6);
  const auto d = GroupTable::direct_product(GroupTable::symmetric(3), GroupTable::cyclic(2));
  CHECK(center(d).table.order() == 2);
}

TEST_CASE("central quotients") {
  const auto z4 = GroupTable::cyclic(4);
  const auto q = quotient_by_central(z4, {0, 2});
  CHECK(q.table.order() == 2);
  CHECK(q.table.order_profile() == std::vector<int>{1, 2});
  CHECK(q.table.order() * 2 == z4.order());

  const auto d = GroupTable::direct_product(GroupTable::symmetric(3), GroupTable::cyclic(2));
  const int z = 1;  // (identity, 1)
  const auto qd = quotient_by_central(d, {0, z});
  CHECK(qd.table.order() == 6);
  CHECK_FALSE(qd.table.is_abelian());
  CHECK(qd.table.order_profile() == GroupTable::symmetric(3).order_profile());

  // Non-central subgroup is rejected.
  const auto s3 = GroupTable::symmetric(3);
  CHECK_THROWS_AS(quotient_by_central(s3, closure(s3, {1})), std::invalid_argument);
}

TEST_CASE("projection multiplies orders") {
  const auto groups_to_try = {GroupTable::cyclic(8), klein_four(),
                              GroupTable::direct_product(GroupTable::cyclic(4), GroupTable::cyclic(2))};
  for (const auto& g : groups_to_try) {
    const auto z = center(g);
    const auto q = quotient_by_central(g, z.embedding);
    CHECK(q.table.order() * z.table.order() == g.order());
  }
}

TEST_CASE("json round trip") {
  const auto s3 = GroupTable::symmetric(3);
  const auto text = to_json(s3);
  const auto back = group_table_from_json(text);
  CHECK(back.order() == s3.order());
  for (int a = 0; a < s3.order(); ++a)
    for (int b = 0; b < s3.order(); ++b) CHECK(back.mul(a, b) == s3.mul(a, b));
  CHECK(back.labels() == s3.labels());

  CHECK_THROWS(group_table_from_json("{\"order\": 2}"));
  CHECK_THROWS(group_table_from_json(
      "{\"order\": 3, \"labels\": [\"a\", \"b\"], \"mul\": [[0, 1], [1, 0]]}"));
  // A valid-looking payload that breaks the group laws is rejected too.
  CHECK_THROWS_AS(group_table_from_json(
                      "{\"order\": 2, \"labels\": [\"a\", \"b\"], \"mul\": [[0, 1], [1, 1]]}"),
                  std::invalid_argument);
}

TEST_CASE("non-closed central subsets are rejected") {
  const auto z6 = GroupTable::cyclic(6);
  CHECK_THROWS_AS(quotient_by_central(z6, {0, 2}), std::invalid_argument);
  CHECK(quotient_by_central(z6, {0, 2, 4}).table.order() == 2);
  CHECK_THROWS_AS(quotient_by_central(z6, {1, 2}), std::invalid_argument);
}
