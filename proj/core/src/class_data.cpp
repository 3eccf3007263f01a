#include "uniatlas/class_data.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace uniatlas::classdata {

namespace {
[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }
}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::Sp: return "sp";
    case Family::SO: return "so";
    case Family::Spin: return "spin";
  }
  fail("family_name: bad enum");
}

std::optional<Family> parse_family(const std::string& name) {
  if (name == "sp" || name == "Sp") return Family::Sp;
  if (name == "so" || name == "SO") return Family::SO;
  if (name == "spin" || name == "Spin") return Family::Spin;
  return std::nullopt;
}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) fail("Partition: parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) fail("Partition: parts must be weakly decreasing");
    total_ += parts_[i];
  }
}

std::vector<int> Partition::transpose() const {
  if (parts_.empty()) return {};
  std::vector<int> t(parts_.front());
  for (int i = 1; i <= parts_.front(); ++i) {
    int count = 0;
    for (int part : parts_)
      if (part >= i) ++count;
    t[i - 1] = count;
  }
  return t;
}

int Partition::multiplicity(int part) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
}

std::string Partition::str() const {
  std::string out;
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
    if (!out.empty()) out += ',';
    out += std::to_string(*it);
  }
  return out;
}

bool validate_partition(Family family, const Partition& p) {
  if (family == Family::Sp) {
    if (p.total() % 2 != 0) return false;
    for (int part : p.parts())
      if (part % 2 == 1 && p.multiplicity(part) % 2 != 0) return false;
    return true;
  }
  for (int part : p.parts())
    if (part % 2 == 0 && p.multiplicity(part) % 2 != 0) return false;
  return true;
}

long long component_group_order(Family family, const Partition& p) {
  if (!validate_partition(family, p)) fail("component_group_order: invalid partition");
  std::vector<int> distinct;
  for (int part : p.parts())
    if (distinct.empty() || distinct.back() != part) distinct.push_back(part);

  if (family == Family::Sp) {
    int evens = 0;
    for (int part : distinct)
      if (part % 2 == 0) ++evens;
    return 1LL << evens;
  }

  int odds = 0;
  bool odd_repeats = false;
  for (int part : distinct)
    if (part % 2 == 1) {
      ++odds;
      if (p.multiplicity(part) > 1) odd_repeats = true;
    }
  const long long so_order = odds > 0 ? (1LL << (odds - 1)) : 1LL;
  if (family == Family::SO) return so_order;
  // Spin: the centre embeds into the component group exactly when some odd
  // part exists and no odd part repeats.
  return (odds > 0 && !odd_repeats) ? 2 * so_order : so_order;
}

std::optional<Partition> cuspidal_pair_partition(Family family, int n) {
  const auto k = cuspidal_block_parameter(family, n);
  if (!k) return std::nullopt;
  std::vector<int> parts;
  if (family == Family::Sp) {
    for (int i = *k; i >= 1; --i) parts.push_back(2 * i);
  } else {
    for (int i = 2 * *k; i >= 1; --i) parts.push_back(2 * i - 1);
  }
  return Partition(parts);
}

std::optional<int> cuspidal_block_parameter(Family family, int n) {
  if (n < 1) return std::nullopt;
  if (family == Family::Sp) {
    int sum = 0;
    for (int k = 1; sum < n; ++k) {
      sum += k;
      if (sum == n) return k;
    }
    return std::nullopt;
  }
  if (family == Family::SO) {
    for (int k = 1; 2 * k * k <= n; ++k)
      if (2 * k * k == n) return k;
    return std::nullopt;
  }
  return std::nullopt;
}

OrbitDims orbit_dimensions(Family family, const Partition& p) {
  if (!validate_partition(family, p)) fail("orbit_dimensions: invalid partition");
  const long long n_total = p.total();
  long long sq = 0;
  for (int t : p.transpose()) sq += static_cast<long long>(t) * t;
  long long odd = 0;
  for (int part : p.parts())
    if (part % 2 == 1) ++odd;

  OrbitDims d{};
  if (family == Family::Sp) {
    const long long rank = n_total / 2;
    d.dim_group = rank * (n_total + 1);
    d.rank = rank;
    if ((sq + odd) % 2 != 0) fail("orbit_dimensions: centraliser dimension not integral");
    d.dim_centralizer = (sq + odd) / 2;
  } else {
    d.dim_group = n_total * (n_total - 1) / 2;
    d.rank = n_total / 2;
    if ((sq - odd) % 2 != 0) fail("orbit_dimensions: centraliser dimension not integral");
    d.dim_centralizer = (sq - odd) / 2;
  }
  d.dim_orbit = d.dim_group - d.dim_centralizer;
  if (d.dim_orbit % 2 != 0) fail("orbit_dimensions: orbit dimension must be even");
  const long long fiber2 = d.dim_centralizer - d.rank;
  if (fiber2 < 0 || fiber2 % 2 != 0) fail("orbit_dimensions: fiber dimension not integral");
  d.dim_springer_fiber = fiber2 / 2;
  return d;
}

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> current;
  // Decreasing parts, largest first.
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  if (n >= 0) rec(rec, n, n == 0 ? 1 : n);
  return out;
}

bool dominates(const Partition& p, const Partition& q) {
  if (p.total() != q.total()) return false;
  long long sp = 0, sq = 0;
  const size_t len = std::max(p.parts().size(), q.parts().size());
  for (size_t i = 0; i < len; ++i) {
    sp += i < p.parts().size() ? p.parts()[i] : 0;
    sq += i < q.parts().size() ? q.parts()[i] : 0;
    if (sq > sp) return false;
  }
  return true;
}

std::vector<ClassRecord> enumerate_classes(Family family, int n) {
  if (n < 1 || n > 12) fail("enumerate_classes: n out of range (1..12)");
  const int total = family == Family::Sp ? 2 * n : n;

  std::optional<Partition> cuspidal;
  if (family == Family::Sp) {
    cuspidal = cuspidal_pair_partition(Family::Sp, n);
  } else if (family == Family::SO && total % 2 == 0) {
    cuspidal = cuspidal_pair_partition(Family::SO, total / 2);
  }

  std::vector<ClassRecord> out;
  for (auto& p : all_partitions(total)) {
    if (!validate_partition(family, p)) continue;
    const auto dims = orbit_dimensions(family, p);
    out.push_back(ClassRecord{family, p, component_group_order(family, p), dims.dim_orbit,
                              dims.dim_springer_fiber, cuspidal && p == *cuspidal});
  }
  std::sort(out.begin(), out.end(), [](const ClassRecord& a, const ClassRecord& b) {
    if (a.dim_orbit != b.dim_orbit) return a.dim_orbit < b.dim_orbit;
    return a.partition.parts() < b.partition.parts();
  });
  return out;
}

}  // namespace uniatlas::classdata
