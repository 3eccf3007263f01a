#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <set>

#include "uniatlas/class_data.hpp"

using namespace uniatlas::classdata;

namespace {

// Independent route to the centraliser dimension: pairwise minima instead
// of transpose squares.
long long pairwise_min_centralizer(Family family, const Partition& p) {
  long long s = 0;
  for (int a : p.parts())
    for (int b : p.parts()) s += std::min(a, b);
  long long odd = 0;
  for (int a : p.parts())
    if (a % 2 == 1) ++odd;
  return family == Family::Sp ? (s + odd) / 2 : (s - odd) / 2;
}

}  // namespace

TEST_CASE("partition validity") {
  CHECK(validate_partition(Family::SO, Partition({3, 1})));
  CHECK_FALSE(validate_partition(Family::SO, Partition({2, 1, 1})));
  CHECK(validate_partition(Family::Sp, Partition({4, 2})));
  CHECK_FALSE(validate_partition(Family::Sp, Partition({3, 1})));
  CHECK(validate_partition(Family::Sp, Partition({3, 3})));
  CHECK_FALSE(validate_partition(Family::Sp, Partition({2, 1})));  // odd total
  CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Partition({0}), std::invalid_argument);
}

TEST_CASE("component group orders") {
  CHECK(component_group_order(Family::Sp, Partition({4, 2})) == 4);
  CHECK(component_group_order(Family::SO, Partition({7, 5, 3, 1})) == 8);
  CHECK(component_group_order(Family::Sp, Partition({1, 1})) == 1);
  CHECK(component_group_order(Family::SO, Partition({3, 3})) == 1);
  // Spin doubling needs an odd part and no repeated odd part.
  CHECK(component_group_order(Family::Spin, Partition({7, 5, 3, 1})) == 16);
  CHECK(component_group_order(Family::Spin, Partition({3, 3})) == 1);
  CHECK(component_group_order(Family::Spin, Partition({4, 4, 3, 3})) ==
        component_group_order(Family::SO, Partition({4, 4, 3, 3})));
  CHECK_THROWS_AS(component_group_order(Family::Sp, Partition({3, 1})), std::invalid_argument);
}

TEST_CASE("cuspidal pair table") {
  auto sp3 = cuspidal_pair_partition(Family::Sp, 3);
  REQUIRE(sp3.has_value());
  CHECK(sp3->parts() == std::vector<int>{4, 2});
  CHECK_FALSE(cuspidal_pair_partition(Family::Sp, 4).has_value());
  auto so2 = cuspidal_pair_partition(Family::SO, 2);
  REQUIRE(so2.has_value());
  CHECK(so2->parts() == std::vector<int>{3, 1});
  CHECK_FALSE(cuspidal_pair_partition(Family::SO, 3).has_value());
  CHECK(cuspidal_block_parameter(Family::Sp, 10) == 4);
  CHECK(cuspidal_block_parameter(Family::SO, 8) == 2);
}

TEST_CASE("orbit dimensions for small symplectic classes") {
  const auto regular = orbit_dimensions(Family::Sp, Partition({2}));
  CHECK(regular.dim_orbit == 2);
  CHECK(regular.dim_springer_fiber == 0);

  const auto trivial = orbit_dimensions(Family::Sp, Partition({1, 1}));
  CHECK(trivial.dim_orbit == 0);
  CHECK(trivial.dim_springer_fiber == 1);

  const auto middle = orbit_dimensions(Family::Sp, Partition({2, 2}));
  CHECK(middle.dim_orbit == 6);
  CHECK(middle.dim_centralizer == 4);
}

TEST_CASE("two centraliser-dimension routes agree") {
  for (int total = 1; total <= 12; ++total)
    for (const auto& p : all_partitions(total))
      for (Family family : {Family::Sp, Family::SO}) {
        if (!validate_partition(family, p)) continue;
        const auto dims = orbit_dimensions(family, p);
        CHECK(dims.dim_centralizer == pairwise_min_centralizer(family, p));
      }
}

TEST_CASE("orbit dimension parity and fiber positivity") {
  for (int total = 1; total <= 12; ++total)
    for (const auto& p : all_partitions(total))
      for (Family family : {Family::Sp, Family::SO, Family::Spin}) {
        if (!validate_partition(family, p)) continue;
        const auto dims = orbit_dimensions(family, p);
        CHECK(dims.dim_orbit % 2 == 0);
        CHECK(dims.dim_springer_fiber >= 0);
      }
}

TEST_CASE("fiber vanishes exactly on the regular partition") {
  for (Family family : {Family::Sp, Family::SO}) {
    for (int total = 2; total <= 10; ++total) {
      if (family == Family::Sp && total % 2 != 0) continue;
      // Regular class: (N) when valid, else (N-1, 1).
      const Partition regular = [&] {
        if (validate_partition(family, Partition({total}))) return Partition({total});
        return Partition({total - 1, 1});
      }();
      REQUIRE(validate_partition(family, regular));
      for (const auto& p : all_partitions(total)) {
        if (!validate_partition(family, p)) continue;
        const auto dims = orbit_dimensions(family, p);
        CHECK((dims.dim_springer_fiber == 0) == (p == regular));
        // Regular means dominance-maximal among valid partitions.
        CHECK(dominates(regular, p));
      }
    }
  }
}

TEST_CASE("dominance refinement never increases orbit dimension") {
  for (Family family : {Family::Sp, Family::SO}) {
    for (int total = 2; total <= 12; ++total) {
      std::vector<Partition> valid;
      for (const auto& p : all_partitions(total))
        if (validate_partition(family, p)) valid.push_back(p);
      for (const auto& p : valid)
        for (const auto& q : valid)
          if (dominates(p, q))
            CHECK(orbit_dimensions(family, q).dim_orbit <=
                  orbit_dimensions(family, p).dim_orbit);
    }
  }
}

TEST_CASE("class enumeration") {
  const auto sp2 = enumerate_classes(Family::Sp, 2);
  CHECK(sp2.size() == 4);
  std::multiset<long long> dims;
  for (const auto& rec : sp2) dims.insert(rec.dim_orbit);
  CHECK(dims == std::multiset<long long>{0, 4, 6, 8});

  CHECK(enumerate_classes(Family::Sp, 1).size() == 2);

  const auto so3 = enumerate_classes(Family::SO, 3);
  CHECK(so3.size() == 2);
  CHECK(so3.front().partition.parts() == std::vector<int>{1, 1, 1});
  CHECK(so3.back().partition.parts() == std::vector<int>{3});

  // Sorted by orbit dimension, cuspidal flag marks the table row.
  const auto sp3 = enumerate_classes(Family::Sp, 3);
  long long prev = -1;
  int cusp_count = 0;
  for (const auto& rec : sp3) {
    CHECK(rec.dim_orbit >= prev);
    prev = rec.dim_orbit;
    if (rec.cuspidal) {
      ++cusp_count;
      CHECK(rec.partition.parts() == std::vector<int>{4, 2});
    }
  }
  CHECK(cusp_count == 1);

  CHECK_THROWS_AS(enumerate_classes(Family::Sp, 0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_classes(Family::Sp, 13), std::invalid_argument);
}

TEST_CASE("partition formatting") {
  CHECK(Partition({4, 2}).str() == "2,4");
  CHECK(Partition({3, 1, 1}).str() == "1,1,3");
}
