#include "uniatlas/springer_symbols.hpp"

#include <algorithm>
#include <stdexcept>

namespace uniatlas::symbols {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

void check_k(int k, int cap) {
  if (k < 1 || k > cap) fail("symbols: k out of range");
}

int k_inv_of_defect(int d) {
  if (d == 0) fail("symbols: defect cannot vanish");
  return d >= 1 ? d - 1 : -d;
}

}  // namespace

int block_defect_anchor(int k) {
  check_k(k, 64);
  const int d0 = (k % 2 == 1) ? -k : k + 1;
  // n = d0 (d0 - 1) / 2 recovers the triangular rank.
  const long long n = static_cast<long long>(d0) * (d0 - 1) / 2;
  if (n != static_cast<long long>(k) * (k + 1) / 2) fail("block_defect_anchor: inconsistent anchor");
  return d0;
}

std::vector<SymbolRecord> enumerate_block(int k) {
  check_k(k, 12);
  const int d0 = block_defect_anchor(k);
  const bool k_even = k % 2 == 0;

  // Ground sets. Even k: A u B = {0,2,...,2k} with 0 forced into A and B
  // ranging over subsets of {2,...,2k}. Odd k: A u B = {1,3,...,2k-1} with
  // A ranging over all subsets.
  std::vector<int> ground;
  if (k_even)
    for (int v = 0; v <= 2 * k; v += 2) ground.push_back(v);
  else
    for (int v = 1; v <= 2 * k - 1; v += 2) ground.push_back(v);

  std::vector<SymbolRecord> out;
  out.reserve(1u << k);
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    SpringerSymbol sym;
    if (k_even) {
      sym.a_set.push_back(0);
      for (int i = 0; i < k; ++i) {
        const int v = ground[i + 1];  // {2,4,...,2k}
        (mask >> i & 1u ? sym.b_set : sym.a_set).push_back(v);
      }
    } else {
      for (int i = 0; i < k; ++i) {
        const int v = ground[i];
        (mask >> i & 1u ? sym.a_set : sym.b_set).push_back(v);
      }
    }
    SymbolRecord rec;
    rec.defect = sym.defect();
    rec.k_inv = k_inv_of_defect(rec.defect);
    rec.m = static_cast<long long>(rec.k_inv) * (rec.k_inv + 1) / 2;
    rec.cuspidal = rec.defect == d0;
    rec.symbol = std::move(sym);
    out.push_back(std::move(rec));
  }

  // Defect arithmetic from the subset size, asserted per symbol.
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    const int x = __builtin_popcount(mask);
    const int expected = k_even ? k + 1 - 2 * x : 2 * x - k;
    if (out[mask].defect != expected) fail("enumerate_block: defect arithmetic violated");
  }

  const auto cusp_count = std::count_if(out.begin(), out.end(),
                                        [](const SymbolRecord& r) { return r.cuspidal; });
  if (cusp_count != 1) fail("enumerate_block: the anchor defect must be attained exactly once");

  std::stable_sort(out.begin(), out.end(), [](const SymbolRecord& a, const SymbolRecord& b) {
    return a.cuspidal > b.cuspidal;
  });
  return out;
}

std::pair<long long, long long> parity_counts(int k) {
  long long even = 0, odd = 0;
  for (const auto& rec : enumerate_block(k)) (rec.m % 2 == 0 ? even : odd) += 1;
  return {even, odd};
}

int m_parity(int k_inv) {
  if (k_inv < 0) fail("m_parity: k_inv must be non-negative");
  const int y = k_inv / 2;
  const int parity = (k_inv % 2 == 0) ? y % 2 : (y + 1) % 2;
  // The closed rule must match the triangular number itself.
  const long long m = static_cast<long long>(k_inv) * (k_inv + 1) / 2;
  if (parity != static_cast<int>(m % 2)) fail("m_parity: rule mismatch");
  return parity;
}

bool binomial_halving(int k) {
  check_k(k, 62);
  long long even = 0, odd = 0, binom = 1;  // C(k, 0)
  for (int x = 0; x <= k; ++x) {
    (x % 2 == 0 ? even : odd) += binom;
    binom = binom * (k - x) / (x + 1);
  }
  const long long half = 1LL << (k - 1);
  return even == half && odd == half;
}

HalfInteger b_value(const SymbolRecord& record, const classdata::ClassRecord& ambient) {
  if (ambient.family != classdata::Family::Sp || !ambient.cuspidal)
    fail("b_value: ambient must be the cuspidal Sp class");
  const long long n = ambient.partition.total() / 2;
  // The block's k is recoverable from n; the cuspidal symbol has m = n.
  long long triangle = 0;
  int k = 0;
  while (triangle < n) triangle += ++k;
  if (triangle != n) fail("b_value: ambient rank is not triangular");
  if (record.cuspidal && record.m != n) fail("b_value: cuspidal symbol must have m = n");
  if (record.m > n) fail("b_value: m exceeds ambient rank");
  return HalfInteger{2 * ambient.dim_springer_fiber + record.m};
}

}  // namespace uniatlas::symbols
