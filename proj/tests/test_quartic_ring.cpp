#include <doctest.h>

#include <stdexcept>

#include "test_rng.hpp"
#include "uniatlas/quartic_ring.hpp"

using namespace uniatlas::quartic;

namespace {

QuarticElem random_elem(TestRng& rng, long long p) {
  QuarticElem e;
  e.p = p;
  e.rational = {rng.range(-100, 100), rng.range(-100, 100)};
  e.radical = {rng.range(-100, 100), rng.range(-100, 100)};
  return e;
}

}  // namespace

TEST_CASE("fourth roots of unity") {
  CHECK(Root4::j() * Root4::j() == Root4::minus_one());
  CHECK(Root4::minus_j().pow(4) == Root4::one());
  CHECK(Root4::minus_j().pow(2) == Root4::minus_one());
  CHECK(Root4::j().inverse() == Root4::minus_j());
  CHECK(Root4::minus_one().str() == "-1");
  CHECK(Root4::parse("-j") == Root4::minus_j());
  CHECK_FALSE(Root4::parse("i").has_value());
}

TEST_CASE("defining products") {
  const long long p = 5;
  CHECK(ring_mul(QuarticElem::sqrt_p(p), QuarticElem::sqrt_p(p)) == QuarticElem::integer(p, 5));
  CHECK(QuarticElem::from_root(p, Root4::j() * Root4::j()) == QuarticElem::integer(p, -1));
  const auto one_plus = ring_add(QuarticElem::integer(p, 1), QuarticElem::sqrt_p(p));
  const auto one_minus = ring_sub(QuarticElem::integer(p, 1), QuarticElem::sqrt_p(p));
  CHECK(ring_mul(one_plus, one_minus) == QuarticElem::integer(p, 1 - 5));
}

TEST_CASE("mismatched primes are rejected") {
  CHECK_THROWS_AS(ring_mul(QuarticElem::integer(5, 1), QuarticElem::integer(7, 1)),
                  std::invalid_argument);
}

TEST_CASE("ring axioms on random triples") {
  TestRng rng;
  const long long p = 7;
  for (int trial = 0; trial < 300; ++trial) {
    const auto x = random_elem(rng, p);
    const auto y = random_elem(rng, p);
    const auto z = random_elem(rng, p);
    CHECK(ring_mul(x, y) == ring_mul(y, x));
    CHECK(ring_mul(ring_mul(x, y), z) == ring_mul(x, ring_mul(y, z)));
    CHECK(ring_mul(x, ring_add(y, z)) == ring_add(ring_mul(x, y), ring_mul(x, z)));
    CHECK(ring_add(x, ring_neg(x)).is_zero());
  }
  // j^4 = 1 and sqrt(p)^2 = p identically.
  auto j_elem = QuarticElem::from_root(p, Root4::j());
  auto acc = QuarticElem::integer(p, 1);
  for (int i = 0; i < 4; ++i) acc = ring_mul(acc, j_elem);
  CHECK(acc == QuarticElem::integer(p, 1));
}

TEST_CASE("half powers") {
  CHECK(half_power(5, 2) == QuarticElem::integer(5, 5));
  QuarticElem expected = QuarticElem::sqrt_p(5);
  expected.radical = {5, 0};
  CHECK(half_power(5, 3) == expected);
  CHECK(half_power(3, 0) == QuarticElem::integer(3, 1));

  TestRng rng;
  for (int trial = 0; trial < 100; ++trial) {
    const long long a = rng.range(0, 12);
    const long long b = rng.range(0, 12);
    CHECK(ring_mul(half_power(3, a), half_power(3, b)) == half_power(3, a + b));
    // The reduced variant is additive modulo 4: an odd-odd product puts a
    // raw p back through sqrt(p)^2.
    CHECK(reduce_mod4(strip_p_powers(ring_mul(half_power_mod4(3, a), half_power_mod4(3, b)))) ==
          reduce_mod4(half_power_mod4(3, a + b)));
  }
}

TEST_CASE("epsilon and reduced half powers") {
  CHECK(epsilon_mod4(5) == 1);
  CHECK(epsilon_mod4(7) == -1);
  CHECK(epsilon_mod4(17) == 1);
  // half_power_mod4 is congruent to half_power coefficientwise mod 4.
  for (long long p : {3LL, 5LL, 7LL, 13LL})
    for (long long a = 0; a <= 9; ++a)
      CHECK(reduce_mod4(half_power(p, a)) == reduce_mod4(half_power_mod4(p, a)));
}

TEST_CASE("mod-4 residues with p-power stripping") {
  CHECK(reduce_mod4(strip_p_powers(QuarticElem::integer(5, 25))) == Mod4Residues{1, 0, 0, 0});

  QuarticElem x = QuarticElem::sqrt_p(7);
  x.radical = {7, 0};  // 7 sqrt(7)
  CHECK(reduce_mod4(strip_p_powers(x)) == Mod4Residues{0, 0, 3, 0});

  QuarticElem y = QuarticElem::from_gauss(3, {4, 8});
  CHECK(reduce_mod4(y).all_zero());
  CHECK(reduce_mod4(strip_p_powers(y)).all_zero());
}

TEST_CASE("stripping respects multiplication mod 4 on the rational subring") {
  TestRng rng;
  const long long p = 5;
  auto mod4_equal = [](const QuarticElem& a, const QuarticElem& b) {
    return reduce_mod4(a) == reduce_mod4(b);
  };
  for (int trial = 0; trial < 200; ++trial) {
    QuarticElem x = QuarticElem::from_gauss(p, {rng.range(-50, 50), rng.range(-50, 50)});
    QuarticElem y = QuarticElem::from_gauss(p, {rng.range(-50, 50), rng.range(-50, 50)});
    // strip(x*y) = strip(x)*strip(y) mod 4: both replace each p-power by
    // the matching epsilon power, and p = eps mod 4.
    CHECK(mod4_equal(strip_p_powers(ring_mul(x, y)),
                     ring_mul(strip_p_powers(x), strip_p_powers(y))));
    CHECK(mod4_equal(strip_p_powers(ring_add(x, y)),
                     ring_add(strip_p_powers(x), strip_p_powers(y))));
  }
}
