#pragma once

#include <utility>
#include <vector>

#include "uniatlas/class_data.hpp"

namespace uniatlas::symbols {

/// Exact half-integers, stored as twice their value.
struct HalfInteger {
  long long twice = 0;
  bool operator==(const HalfInteger&) const = default;
  bool is_integer() const { return twice % 2 == 0; }
};

/// A symbol (A, B) from the block of the cuspidal pair of Sp_2n with
/// n = k(k+1)/2. For k even the sets partition {0,2,...,2k} with 0 allowed
/// only in A; for k odd they partition {1,3,...,2k-1}.
struct SpringerSymbol {
  std::vector<int> a_set;
  std::vector<int> b_set;
  int defect() const { return static_cast<int>(a_set.size()) - static_cast<int>(b_set.size()); }
  bool operator==(const SpringerSymbol&) const = default;
};

struct SymbolRecord {
  SpringerSymbol symbol;
  int defect;
  int k_inv;     // d-1 when d >= 1, -d when d <= -1
  long long m;   // k_inv (k_inv + 1) / 2, the semisimple rank of L/Z(L)
  bool cuspidal;
};

/// The anchor defect d_0: -k when k is odd, k+1 when k is even. An odd
/// number with n = d_0 (d_0 - 1) / 2.
int block_defect_anchor(int k);

/// The 2^k symbols of the block, the cuspidal one first, then by increasing
/// subset bitmask of the varying side (B for k even, A for k odd).
std::vector<SymbolRecord> enumerate_block(int k);

/// (# records with m even, # records with m odd); both are 2^{k-1}.
std::pair<long long, long long> parity_counts(int k);

/// Parity of m = k_inv (k_inv + 1) / 2: for k_inv = 2y it is y mod 2, for
/// k_inv = 2y+1 it is (y+1) mod 2.
int m_parity(int k_inv);

/// sum_{x even} C(k,x) == sum_{x odd} C(k,x) == 2^{k-1}, checked exactly.
bool binomial_halving(int k);

/// b = dim(Springer fiber of the ambient cuspidal class) + m/2.
/// The ambient record must be the cuspidal class of Sp_2n with n = k(k+1)/2.
HalfInteger b_value(const SymbolRecord& record, const classdata::ClassRecord& ambient);

}  // namespace uniatlas::symbols
