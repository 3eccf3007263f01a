#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uniatlas/class_data.hpp"
#include "uniatlas/quartic_ring.hpp"
#include "uniatlas/springer_symbols.hpp"

namespace uniatlas::zeta {

enum class SeriesFamily { Sp, SO };

/// A query for the fourth root of unity attached to the cuspidal pair of
/// Sp_2n or SO_2n over F_q, q = p^a. Construction validates that a cuspidal
/// pair exists and records its block parameter k.
struct ZetaQuery {
  SeriesFamily family;
  int n;
  int k;
  long long p;
  int a;
};

ZetaQuery make_query(SeriesFamily family, int n, long long p, int a);

int epsilon(long long p);

/// eta = -1 when p = 1 mod 4, -j when p = 3 mod 4.
quartic::Root4 eta(long long p);
quartic::Root4 eta_pow(long long p, long long a);

/// delta for a Levi of semisimple rank m: (-1)^m.
quartic::Root4 delta_sign(long long m);

/// The SL_2 base value: (-1)^a when p = 1 mod 4, (-j)^a when p = 3 mod 4.
quartic::Root4 zeta_base_sl2(long long p, int a);

/// The closed formula: eps^{an/2} for n even; (-1)^{an} for n odd with
/// eps = 1; (-j)^{an} for n odd with eps = -1. All branches agree with
/// eta^{an}, which the implementation asserts.
quartic::Root4 zeta_prime(const ZetaQuery& query);
quartic::Root4 zeta_prime(SeriesFamily family, int n, long long p, int a);

struct BlockTerm {
  symbols::SymbolRecord symbol;
  quartic::Root4 zeta;     // the value for Sp_{2m} by the closed formula
  long long half_exp;      // the exponent a*m of sqrt(p)
};

/// The divisibility expression of the block with a candidate value in the
/// cuspidal slot, after factoring q^{dim Springer fiber}.
///
/// For Sp the term list is assembled from the enumerated block and summed
/// two ways: term by term, and through the closed form whose rational parts
/// count the even-m and odd-m symbols. Both routes are reduced by replacing
/// integer powers of p with matching powers of eps (exact modulo 4, since
/// p = eps mod 4) and must agree exactly; disagreement throws. The raw
/// unreduced sums agree as well when k <= 2, where no integer p-powers are
/// produced. For SO the expression is candidate * p^{an/2} - 1.
struct BlockSum {
  std::vector<BlockTerm> terms;                     // Sp only
  std::optional<quartic::QuarticElem> exact;        // raw term-by-term sum, when it fits
  std::optional<quartic::QuarticElem> exact_closed; // raw closed form, when it fits
  quartic::QuarticElem reduced;                     // eps-reduced term-by-term sum
  quartic::QuarticElem reduced_closed;              // eps-reduced closed form
  bool consistent;
};

BlockSum block_sum(const ZetaQuery& query, quartic::Root4 candidate);

/// Candidate elimination mirroring the divisibility argument. Each of the
/// four fourth roots of unity is pushed through two necessary conditions on
/// the reduced expression r + s*sqrt(p):
///   (1) 4 | r^2 - eps*s^2 in Z[j]   (conjugate-product elimination),
///   (2) for n >= 3, where 4 divides the block expression, r and s must
///       vanish mod 4 together - exactly one vanishing forces the
///       "4 divides 2" contradiction of the residual step.
/// The base cases carry |A_G(u)| = 2 and mod-4 data cannot finish there;
/// they are settled the way the induction starts: Sp with n = 1 by the
/// quadratic Gauss sum over F_{p^a}, and SO with n = 2 by squaring the
/// surviving SL_2 value.
std::vector<quartic::Root4> eliminate_candidates(const ZetaQuery& query);

struct ReportRow {
  std::vector<int> a_set;
  std::vector<int> b_set;
  int defect;
  long long m;
  quartic::Root4 zeta;
  symbols::HalfInteger b;
};

struct DivisibilityReport {
  ZetaQuery query;
  quartic::Root4 zeta_value;
  std::vector<quartic::Root4> survivors;
  bool pass;  // the formula value survives, alone
  std::vector<ReportRow> rows;  // Sp only
};

DivisibilityReport divisibility_report(const ZetaQuery& query);

std::string family_name(SeriesFamily f);
std::optional<SeriesFamily> parse_series_family(const std::string& name);

}  // namespace uniatlas::zeta
