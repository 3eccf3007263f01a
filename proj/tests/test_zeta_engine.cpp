#include <doctest.h>

#include <stdexcept>

#include "uniatlas/gauss_sums.hpp"
#include "uniatlas/zeta_engine.hpp"

using namespace uniatlas;
using namespace uniatlas::zeta;
using quartic::QuarticElem;
using quartic::Root4;

TEST_CASE("query validation") {
  CHECK(make_query(SeriesFamily::Sp, 3, 3, 1).k == 2);
  CHECK(make_query(SeriesFamily::Sp, 10, 5, 2).k == 4);
  CHECK(make_query(SeriesFamily::SO, 8, 7, 1).k == 2);
  CHECK_THROWS_AS(make_query(SeriesFamily::Sp, 4, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_query(SeriesFamily::SO, 3, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_query(SeriesFamily::Sp, 3, 9, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_query(SeriesFamily::Sp, 3, 3, 0), std::invalid_argument);
}

TEST_CASE("base values") {
  CHECK(zeta_base_sl2(5, 1) == Root4::minus_one());
  CHECK(zeta_base_sl2(3, 1) == Root4::minus_j());
  CHECK(zeta_base_sl2(3, 2) == Root4::minus_one());
  CHECK(eta(5) == Root4::minus_one());
  CHECK(eta(7) == Root4::minus_j());
  CHECK(eta_pow(7, 4) == Root4::one());
  CHECK(eta_pow(5, 1) == Root4::minus_one());
  CHECK(delta_sign(1) == Root4::minus_one());
  CHECK(delta_sign(6) == Root4::one());
}

TEST_CASE("closed formula branches") {
  CHECK(zeta_prime(SeriesFamily::Sp, 1, 5, 1) == Root4::minus_one());
  // (-j)^{3} = j.
  CHECK(zeta_prime(SeriesFamily::Sp, 3, 3, 1) == Root4::j());
  // eps^{an/2} with eps = -1, a = 2, n = 2.
  CHECK(zeta_prime(SeriesFamily::SO, 2, 7, 2) == Root4::one());
  CHECK(zeta_prime(SeriesFamily::SO, 8, 7, 1) == Root4::one());
}

TEST_CASE("base case agreement across routes") {
  for (long long p = 3; p < 100; p += 2) {
    if (!gauss::is_prime(p)) continue;
    for (int a = 1; a <= 6; ++a) {
      CHECK(zeta_prime(SeriesFamily::Sp, 1, p, a) == zeta_base_sl2(p, a));
      CHECK(zeta_prime(SeriesFamily::SO, 2, p, a) == zeta_base_sl2(p, a).square());
    }
  }
}

TEST_CASE("block sum for k = 2 matches the three-term form") {
  // candidate p^{3a/2} + 2 + eta^a p^{a/2}, exactly.
  for (long long p : {3LL, 5LL, 7LL, 13LL})
    for (int a = 1; a <= 3; ++a) {
      const auto query = make_query(SeriesFamily::Sp, 3, p, a);
      const auto candidate = zeta_prime(query);
      const auto bs = block_sum(query, candidate);
      REQUIRE(bs.exact.has_value());
      auto expected = quartic::ring_mul(QuarticElem::from_root(p, candidate),
                                        quartic::half_power(p, 3LL * a));
      expected = quartic::ring_add(expected, QuarticElem::integer(p, 2));
      expected = quartic::ring_add(
          expected, quartic::ring_mul(QuarticElem::from_root(p, eta_pow(p, a)),
                                      quartic::half_power(p, a)));
      CHECK(*bs.exact == expected);
      CHECK(bs.consistent);
      CHECK(bs.terms.size() == 4);
    }
}

TEST_CASE("block sum for k = 3 reduces to the counted closed form") {
  // candidate p^{3a} + 3 + 4 eta^a p^{a/2}, after replacing integer powers
  // of p by powers of eps.
  for (long long p : {3LL, 5LL})
    for (int a = 1; a <= 2; ++a) {
      const auto query = make_query(SeriesFamily::Sp, 6, p, a);
      const auto candidate = zeta_prime(query);
      const auto bs = block_sum(query, candidate);
      auto expected = quartic::ring_mul(QuarticElem::from_root(p, candidate),
                                        quartic::half_power_mod4(p, 6LL * a));
      expected = quartic::ring_add(expected, QuarticElem::integer(p, 3));
      auto odd_term = quartic::ring_mul(QuarticElem::from_root(p, eta_pow(p, a)),
                                        quartic::half_power_mod4(p, a));
      odd_term.rational = quartic::scale(odd_term.rational, 4);
      odd_term.radical = quartic::scale(odd_term.radical, 4);
      expected = quartic::ring_add(expected, odd_term);
      CHECK(bs.reduced == expected);
      CHECK(bs.reduced_closed == expected);
      CHECK(bs.terms.size() == 8);
    }
}

TEST_CASE("so block expression") {
  const auto query = make_query(SeriesFamily::SO, 2, 5, 1);
  const auto bs = block_sum(query, Root4::one());
  REQUIRE(bs.exact.has_value());
  CHECK(*bs.exact == QuarticElem::integer(5, 5 - 1));
  CHECK(bs.terms.empty());
}

TEST_CASE("recursive assembly equals closed form for k <= 5") {
  for (int k = 1; k <= 5; ++k) {
    const int n = k * (k + 1) / 2;
    for (long long p : {3LL, 7LL})
      for (int a = 1; a <= 2; ++a) {
        const auto query = make_query(SeriesFamily::Sp, n, p, a);
        for (int e = 0; e < 4; ++e) {
          const auto bs = block_sum(query, Root4::j_power(e));
          CHECK(bs.consistent);
          CHECK(bs.reduced == bs.reduced_closed);
        }
      }
  }
}

TEST_CASE("torus-supported terms carry the trivial value") {
  const auto query = make_query(SeriesFamily::Sp, 6, 5, 1);
  const auto bs = block_sum(query, zeta_prime(query));
  int torus_terms = 0;
  for (const auto& term : bs.terms)
    if (term.symbol.m == 0) {
      ++torus_terms;
      CHECK(term.zeta == Root4::one());
    }
  CHECK(torus_terms == 3);
}

TEST_CASE("candidate elimination, frozen examples") {
  {
    const auto survivors = eliminate_candidates(make_query(SeriesFamily::Sp, 3, 3, 1));
    REQUIRE(survivors.size() == 1);
    CHECK(survivors.front() == Root4::j());
  }
  {
    const auto survivors = eliminate_candidates(make_query(SeriesFamily::SO, 2, 5, 1));
    REQUIRE(survivors.size() == 1);
    CHECK(survivors.front() == Root4::one());
  }
  {
    const auto survivors = eliminate_candidates(make_query(SeriesFamily::Sp, 1, 5, 2));
    REQUIRE(survivors.size() == 1);
    CHECK(survivors.front() == Root4::one());  // (-1)^2
  }
}

TEST_CASE("elimination grid agrees with the formula") {
  const std::pair<SeriesFamily, int> targets[] = {
      {SeriesFamily::Sp, 1}, {SeriesFamily::Sp, 3}, {SeriesFamily::Sp, 6},
      {SeriesFamily::SO, 2}, {SeriesFamily::SO, 8}};
  for (const auto& [family, n] : targets)
    for (long long p : {3LL, 5LL, 7LL, 13LL})
      for (int a = 1; a <= 3; ++a) {
        const auto query = make_query(family, n, p, a);
        const auto survivors = eliminate_candidates(query);
        REQUIRE(survivors.size() == 1);
        CHECK(survivors.front() == zeta_prime(query));
      }
}

TEST_CASE("elimination beyond the standard grid") {
  // Larger blocks: k = 4 and 5 for Sp, k = 3 for SO.
  struct Case {
    SeriesFamily family;
    int n;
  };
  for (const auto& [family, n] : {Case{SeriesFamily::Sp, 10}, Case{SeriesFamily::Sp, 15},
                                  Case{SeriesFamily::SO, 18}})
    for (long long p : {3LL, 5LL})
      for (int a = 1; a <= 2; ++a) {
        const auto query = make_query(family, n, p, a);
        const auto survivors = eliminate_candidates(query);
        REQUIRE(survivors.size() == 1);
        CHECK(survivors.front() == zeta_prime(query));
      }
}

TEST_CASE("divisibility reports") {
  struct Case {
    SeriesFamily family;
    int n;
    long long p;
    int a;
  };
  for (const auto& [family, n, p, a] :
       {Case{SeriesFamily::Sp, 3, 3, 1}, Case{SeriesFamily::Sp, 6, 5, 1},
        Case{SeriesFamily::SO, 8, 7, 2}}) {
    const auto report = divisibility_report(make_query(family, n, p, a));
    CHECK(report.pass);
    CHECK(report.survivors.size() == 1);
    if (family == SeriesFamily::Sp) {
      CHECK(report.rows.size() == (1u << report.query.k));
      // b offsets: fiber + m/2, so twice-values are 2*fiber + m.
      for (const auto& row : report.rows) CHECK(row.b.twice >= 0);
    }
  }
}
