#pragma once

#include <optional>
#include <string>
#include <vector>

namespace uniatlas::classdata {

enum class Family { Sp, SO, Spin };

std::string family_name(Family f);
std::optional<Family> parse_family(const std::string& name);

/// A partition with weakly decreasing positive parts.
///
/// Convention: a unipotent class of Sp_2n carries a partition of 2n in which
/// every odd part has even multiplicity; a class of SO_N (and of the spin
/// cover) carries a partition of N in which every even part has even
/// multiplicity.
class Partition {
 public:
  explicit Partition(std::vector<int> parts);
  const std::vector<int>& parts() const { return parts_; }
  int total() const { return total_; }
  std::vector<int> transpose() const;
  int multiplicity(int part) const;
  bool operator==(const Partition&) const = default;
  /// Parts in increasing order joined by commas, e.g. "1,3,5".
  std::string str() const;

 private:
  std::vector<int> parts_;
  int total_ = 0;
};

bool validate_partition(Family family, const Partition& p);

/// |A_G(u)| for the class with partition p. Sp: 2^{#distinct even parts};
/// SO: 2^{max(0, #distinct odd parts - 1)}; Spin: the SO value doubled
/// exactly when p has at least one odd part and no odd part repeats.
long long component_group_order(Family family, const Partition& p);

/// Table of cuspidal-pair existence: Sp_2n has one iff n = 1 + ... + k,
/// with class partition (2,4,...,2k); SO_2n has one iff n = 2k^2, with
/// class partition (1,3,...,4k-1).
std::optional<Partition> cuspidal_pair_partition(Family family, int n);
/// The k in the conditions above, when a cuspidal pair exists.
std::optional<int> cuspidal_block_parameter(Family family, int n);

struct OrbitDims {
  long long dim_group;
  long long rank;
  long long dim_centralizer;
  long long dim_orbit;
  long long dim_springer_fiber;
};

/// Centraliser dimension from the transpose-square count: with
/// s = sum (transpose parts)^2 and o = #odd parts (with multiplicity),
/// dim C = (s + o)/2 for Sp and (s - o)/2 for SO / Spin. The Springer-fiber
/// dimension is (dim C - rank)/2; integrality of both is checked.
OrbitDims orbit_dimensions(Family family, const Partition& p);

struct ClassRecord {
  Family family;
  Partition partition;
  long long a_order;
  long long dim_orbit;
  long long dim_springer_fiber;
  bool cuspidal;
};

/// All valid classes, sorted by increasing orbit dimension (partition order
/// breaking ties). For Sp the parameter n is the rank (partitions of 2n);
/// for SO / Spin it is the partitioned total N.
std::vector<ClassRecord> enumerate_classes(Family family, int n);

/// All partitions of n, weakly decreasing.
std::vector<Partition> all_partitions(int n);

/// True when q refines p in the dominance order (q <= p).
bool dominates(const Partition& p, const Partition& q);

}  // namespace uniatlas::classdata
