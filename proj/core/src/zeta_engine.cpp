#include "uniatlas/zeta_engine.hpp"

#include <cstdlib>
#include <stdexcept>

#include "uniatlas/gauss_sums.hpp"

namespace uniatlas::zeta {

using quartic::GaussInt;
using quartic::QuarticElem;
using quartic::Root4;

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

bool pow_fits(long long p, long long e) {
  long double v = 1;
  for (long long i = 0; i < e; ++i) {
    v *= static_cast<long double>(p);
    if (v > 4.0e17L) return false;
  }
  return true;
}

/// zeta' * p^{am/2} as an exact element.
std::optional<QuarticElem> raw_term(long long p, Root4 zeta, long long am) {
  if (!pow_fits(p, am / 2)) return std::nullopt;
  return quartic::ring_mul(QuarticElem::from_root(p, zeta), quartic::half_power(p, am));
}

/// The same term with integer powers of p replaced by powers of eps.
QuarticElem reduced_term(long long p, Root4 zeta, long long am) {
  return quartic::ring_mul(QuarticElem::from_root(p, zeta), quartic::half_power_mod4(p, am));
}

std::optional<QuarticElem> opt_add(std::optional<QuarticElem> acc,
                                   const std::optional<QuarticElem>& term) {
  if (!acc || !term) return std::nullopt;
  // Guard against coefficient overflow in the raw accumulation.
  auto big = [](const QuarticElem& e) {
    const long long cap = 2e18;
    auto chk = [cap](long long v) { return std::llabs(v) > cap / 2; };
    return chk(e.rational.re) || chk(e.rational.im) || chk(e.radical.re) || chk(e.radical.im);
  };
  if (big(*acc) || big(*term)) return std::nullopt;
  return quartic::ring_add(*acc, *term);
}

}  // namespace

std::string family_name(SeriesFamily f) { return f == SeriesFamily::Sp ? "sp" : "so"; }

std::optional<SeriesFamily> parse_series_family(const std::string& name) {
  if (name == "sp" || name == "Sp") return SeriesFamily::Sp;
  if (name == "so" || name == "SO") return SeriesFamily::SO;
  return std::nullopt;
}

ZetaQuery make_query(SeriesFamily family, int n, long long p, int a) {
  if (!gauss::is_prime(p) || p == 2) fail("make_query: p must be an odd prime");
  if (a < 1) fail("make_query: a must be positive");
  const auto cd_family =
      family == SeriesFamily::Sp ? classdata::Family::Sp : classdata::Family::SO;
  const auto k = classdata::cuspidal_block_parameter(cd_family, n);
  if (!k) fail("make_query: no cuspidal pair for this rank");
  return ZetaQuery{family, n, *k, p, a};
}

int epsilon(long long p) { return quartic::epsilon_mod4(p); }

Root4 eta(long long p) {
  return epsilon(p) == 1 ? Root4::minus_one() : Root4::minus_j();
}

Root4 eta_pow(long long p, long long a) { return eta(p).pow(a); }

Root4 delta_sign(long long m) { return m % 2 == 0 ? Root4::one() : Root4::minus_one(); }

Root4 zeta_base_sl2(long long p, int a) {
  if (a < 1) fail("zeta_base_sl2: a must be positive");
  return epsilon(p) == 1 ? Root4::minus_one().pow(a) : Root4::minus_j().pow(a);
}

namespace {

/// The closed formula for the cuspidal pair of Sp_2m / SO_2m; m = 0 is the
/// torus case with value 1. Used both for the public entry point and for
/// the induction terms of a block.
Root4 zeta_prime_value(long long m, long long p, long long a) {
  if (m == 0) return Root4::one();
  const int eps = epsilon(p);
  Root4 out;
  if (m % 2 == 0) {
    out = eps == 1 ? Root4::one() : Root4::minus_one().pow(a * m / 2);
  } else if (eps == 1) {
    out = Root4::minus_one().pow(a * m);
  } else {
    out = Root4::minus_j().pow(a * m);
  }
  // Every branch is eta^{am}.
  if (out != eta_pow(p, a * m)) fail("zeta_prime_value: branch mismatch");
  return out;
}

}  // namespace

Root4 zeta_prime(const ZetaQuery& query) {
  return zeta_prime_value(query.n, query.p, query.a);
}

Root4 zeta_prime(SeriesFamily family, int n, long long p, int a) {
  return zeta_prime(make_query(family, n, p, a));
}

BlockSum block_sum(const ZetaQuery& query, Root4 candidate) {
  const long long p = query.p;
  const long long a = query.a;
  BlockSum out{.terms = {},
               .exact = QuarticElem::integer(p, 0),
               .exact_closed = QuarticElem::integer(p, 0),
               .reduced = QuarticElem::integer(p, 0),
               .reduced_closed = QuarticElem::integer(p, 0),
               .consistent = false};

  if (query.family == SeriesFamily::SO) {
    // candidate * p^{an/2} - 1; n = 2k^2 is even so the power is integral.
    const long long an = a * static_cast<long long>(query.n);
    const auto minus_one = QuarticElem::integer(p, -1);
    out.exact = opt_add(raw_term(p, candidate, an), minus_one);
    out.exact_closed = out.exact;
    out.reduced = quartic::ring_add(reduced_term(p, candidate, an), minus_one);
    out.reduced_closed = out.reduced;
    out.consistent = true;
    return out;
  }

  // Sp: term-by-term over the enumerated block, the candidate standing in
  // for the cuspidal slot, every other slot filled by the closed formula
  // for Sp_{2m} (the induction step).
  const auto block = symbols::enumerate_block(query.k);
  if (static_cast<long long>(block.size()) != (1LL << query.k))
    fail("block_sum: block size must be 2^k");
  long long even_m = 0, odd_m = 0;
  for (const auto& rec : block) {
    BlockTerm term;
    term.symbol = rec;
    term.half_exp = a * rec.m;
    if (rec.cuspidal) {
      if (rec.m != query.n) fail("block_sum: cuspidal symbol must have m = n");
      term.zeta = candidate;
    } else {
      term.zeta = zeta_prime_value(rec.m, p, a);
      if (rec.m == 0 && !(term.zeta == Root4::one()))
        fail("block_sum: torus-supported terms must carry 1");
      (rec.m % 2 == 0 ? even_m : odd_m) += 1;
    }
    out.exact = opt_add(out.exact, raw_term(p, term.zeta, term.half_exp));
    out.reduced = quartic::ring_add(out.reduced, reduced_term(p, term.zeta, term.half_exp));
    out.terms.push_back(std::move(term));
  }

  // Closed form: candidate * p^{an/2} plus the counted constants. The
  // even-m terms contribute 1 each, the odd-m terms eta^a p^{a/2} each,
  // with counts (2^{k-1}-1, 2^{k-1}) for n even and (2^{k-1}, 2^{k-1}-1)
  // for n odd.
  {
    const long long half = 1LL << (query.k - 1);
    const long long expected_even = query.n % 2 == 0 ? half - 1 : half;
    const long long expected_odd = query.n % 2 == 0 ? half : half - 1;
    if (even_m != expected_even || odd_m != expected_odd)
      fail("block_sum: parity counts disagree with the closed form");

    const auto constant = QuarticElem::integer(p, even_m);
    const auto eta_a = eta_pow(p, a);
    const auto cusp_raw = raw_term(p, candidate, a * query.n);
    const auto odd_raw = raw_term(p, eta_a, a);
    if (cusp_raw && odd_raw) {
      auto scaled = *odd_raw;
      scaled.rational = quartic::scale(scaled.rational, odd_m);
      scaled.radical = quartic::scale(scaled.radical, odd_m);
      out.exact_closed = quartic::ring_add(quartic::ring_add(*cusp_raw, constant), scaled);
    } else {
      out.exact_closed = std::nullopt;
    }
    auto scaled_red = reduced_term(p, eta_a, a);
    scaled_red.rational = quartic::scale(scaled_red.rational, odd_m);
    scaled_red.radical = quartic::scale(scaled_red.radical, odd_m);
    out.reduced_closed = quartic::ring_add(
        quartic::ring_add(reduced_term(p, candidate, a * query.n), constant), scaled_red);
  }

  out.consistent = out.reduced == out.reduced_closed;
  if (!out.consistent) fail("block_sum: recursive and closed assemblies disagree");
  if (query.k <= 2 && out.exact && out.exact_closed && !(*out.exact == *out.exact_closed))
    fail("block_sum: raw assemblies must agree for k <= 2");
  return out;
}

namespace {

bool divisible4(const GaussInt& g) { return quartic::divisible(g, 4); }

struct ReducedSplit {
  GaussInt r;  // rational part
  GaussInt s;  // sqrt(p) part
};

ReducedSplit split(const QuarticElem& e) { return {e.rational, e.radical}; }

/// Necessary conditions from reducing the block expression modulo 4.
bool passes_mod4_tests(const ZetaQuery& query, const QuarticElem& reduced) {
  const auto [r, s] = split(reduced);
  const long long eps = epsilon(query.p);

  // Conjugate-product elimination: 4 | (r + s sqrt p)(r - s sqrt p) with the
  // leftover integral p replaced by eps.
  const GaussInt product = r * r - quartic::scale(s * s, eps);
  if (!divisible4(product)) return false;

  // Residual step, valid once |A_G(u)| >= 4: the rational and radical parts
  // must vanish mod 4 together. A lone vanishing side forces the
  // "4 divides 2" contradiction.
  if (query.n >= 3 && (divisible4(r) != divisible4(s))) return false;
  return true;
}

}  // namespace

std::vector<Root4> eliminate_candidates(const ZetaQuery& query) {
  std::vector<Root4> survivors;
  for (int e = 0; e < 4; ++e) {
    const Root4 candidate = Root4::j_power(e);
    const auto bs = block_sum(query, candidate);
    if (!passes_mod4_tests(query, bs.reduced)) continue;

    if (query.family == SeriesFamily::Sp && query.n == 1) {
      // SL_2 base case: the value is minus the Gauss-sum ratio
      // G_{p^a} / p^{a/2}; both displayed branches reduce to this.
      const Root4 gauss_zeta = gauss::gauss_ratio_root(query.p, query.a);
      const Root4 base = Root4::minus_one() * gauss_zeta;
      if (!(candidate == base)) continue;
    }
    if (query.family == SeriesFamily::SO && query.n == 2) {
      // The cuspidal pair upstairs is a product of two SL_2 cuspidal pairs,
      // so the value is the square of the surviving base value.
      const auto base_query = make_query(SeriesFamily::Sp, 1, query.p, query.a);
      const auto base_survivors = eliminate_candidates(base_query);
      bool matched = false;
      for (const auto& b : base_survivors) matched = matched || candidate == b.square();
      if (!matched) continue;
    }
    survivors.push_back(candidate);
  }
  if (survivors.empty()) fail("eliminate_candidates: no survivor; convention bug");
  return survivors;
}

DivisibilityReport divisibility_report(const ZetaQuery& query) {
  DivisibilityReport report{.query = query,
                            .zeta_value = zeta_prime(query),
                            .survivors = eliminate_candidates(query),
                            .pass = false,
                            .rows = {}};
  report.pass =
      report.survivors.size() == 1 && report.survivors.front() == report.zeta_value;

  if (query.family == SeriesFamily::Sp) {
    const auto bs = block_sum(query, report.zeta_value);
    const auto ambient_partition =
        classdata::cuspidal_pair_partition(classdata::Family::Sp, query.n);
    const auto dims = classdata::orbit_dimensions(classdata::Family::Sp, *ambient_partition);
    const classdata::ClassRecord ambient{
        classdata::Family::Sp,
        *ambient_partition,
        classdata::component_group_order(classdata::Family::Sp, *ambient_partition),
        dims.dim_orbit,
        dims.dim_springer_fiber,
        true};
    for (const auto& term : bs.terms) {
      ReportRow row;
      row.a_set = term.symbol.symbol.a_set;
      row.b_set = term.symbol.symbol.b_set;
      row.defect = term.symbol.defect;
      row.m = term.symbol.m;
      row.zeta = term.zeta;
      row.b = symbols::b_value(term.symbol, ambient);
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

}  // namespace uniatlas::zeta
