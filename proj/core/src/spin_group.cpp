#include "uniatlas/spin_group.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace uniatlas::spin {

namespace {
[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }
}  // namespace

OddPartSet::OddPartSet(std::vector<int> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) fail("OddPartSet: need at least one part");
  if (parts_.size() > 20) fail("OddPartSet: too many parts");
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0 || parts_[i] % 2 == 0) fail("OddPartSet: parts must be odd and positive");
    if (i > 0 && parts_[i] <= parts_[i - 1]) fail("OddPartSet: parts must be strictly increasing");
  }
}

int OddPartSet::square_sign(int i) const {
  const long long a = parts_.at(static_cast<size_t>(i) - 1);
  return static_cast<int>((a * (a - 1) / 2) % 2);
}

SpinElement spin_multiply(const SpinElement& u, const SpinElement& v, const OddPartSet& parts) {
  const int k = parts.k();
  const unsigned mask = (k >= 32) ? ~0u : ((1u << k) - 1u);
  if ((u.bits & ~mask) || (v.bits & ~mask)) fail("spin_multiply: generator index out of range");

  unsigned theta = u.theta ^ v.theta;
  // Move each x_j of v leftwards past the x_i of u with i > j.
  for (int j = 0; j < k; ++j) {
    if (!(v.bits >> j & 1u)) continue;
    const unsigned above = u.bits >> (j + 1);
    theta ^= static_cast<unsigned>(std::popcount(above)) & 1u;
  }
  // Collapse squares.
  unsigned common = u.bits & v.bits;
  for (int i = 0; i < k; ++i)
    if (common >> i & 1u) theta ^= static_cast<unsigned>(parts.square_sign(i + 1));
  return SpinElement{theta & 1u, (u.bits ^ v.bits) & mask};
}

SpinElement spin_identity() { return {}; }
SpinElement spin_theta() { return SpinElement{1, 0}; }

SpinElement spin_generator(int i) {
  if (i < 1) fail("spin_generator: 1-based index");
  return SpinElement{0, 1u << (i - 1)};
}

SpinElement spin_y(int i) {
  if (i < 2) fail("spin_y: defined for i >= 2");
  return SpinElement{0, 1u | (1u << (i - 1))};
}

std::string spin_label(const SpinElement& e, int k) {
  std::string out;
  if (e.theta) out = "t";
  for (int i = 1; i <= k; ++i)
    if (e.bits >> (i - 1) & 1u) {
      if (!out.empty()) out += ' ';
      out += "x" + std::to_string(i);
    }
  return out.empty() ? "1" : out;
}

SpinElement central_element_z(const OddPartSet& parts) {
  SpinElement z;
  for (int i = 1; i <= parts.k(); ++i) z = spin_multiply(z, spin_generator(i), parts);
  return z;
}

SpinGroup::SpinGroup(OddPartSet parts, groups::GroupTable s, groups::GroupTable a)
    : parts_(std::move(parts)), s_(std::move(s)), a_(std::move(a)) {}

SpinGroup SpinGroup::build(const OddPartSet& parts) {
  const int k = parts.k();
  if (k > 11) fail("SpinGroup: k exceeds table cap");
  const int order_s = 1 << (k + 1);

  auto to_index = [](const SpinElement& e) {
    return static_cast<int>((e.bits << 1) | e.theta);
  };
  auto from_index = [](int idx) {
    return SpinElement{static_cast<unsigned>(idx) & 1u, static_cast<unsigned>(idx) >> 1};
  };

  std::vector<std::vector<int>> mul_s(order_s, std::vector<int>(order_s));
  std::vector<std::string> labels_s(order_s);
  for (int i = 0; i < order_s; ++i) {
    labels_s[i] = spin_label(from_index(i), k);
    for (int j = 0; j < order_s; ++j)
      mul_s[i][j] = to_index(spin_multiply(from_index(i), from_index(j), parts));
  }
  groups::GroupTable table_s(std::move(mul_s), std::move(labels_s));

  // Even-word subgroup.
  std::vector<int> even_indices;
  for (int i = 0; i < order_s; ++i)
    if (std::popcount(static_cast<unsigned>(i) >> 1) % 2 == 0) even_indices.push_back(i);
  const int order_a = static_cast<int>(even_indices.size());
  std::vector<int> a_of_s(order_s, -1);
  for (int i = 0; i < order_a; ++i) a_of_s[even_indices[i]] = i;
  std::vector<std::vector<int>> mul_a(order_a, std::vector<int>(order_a));
  std::vector<std::string> labels_a(order_a);
  for (int i = 0; i < order_a; ++i) {
    labels_a[i] = table_s.label(even_indices[i]);
    for (int j = 0; j < order_a; ++j) {
      const int prod = table_s.mul(even_indices[i], even_indices[j]);
      assert(a_of_s[prod] >= 0);
      mul_a[i][j] = a_of_s[prod];
    }
  }
  groups::GroupTable table_a(std::move(mul_a), std::move(labels_a));

  SpinGroup g(parts, std::move(table_s), std::move(table_a));
  g.a_of_s_ = std::move(a_of_s);
  g.s_of_a_ = std::move(even_indices);
  g.theta_in_a_ = g.a_index(spin_theta());
  assert(g.theta_in_a_ >= 0);

  // {t, y_2, ..., y_k} generates A.
  {
    std::vector<int> gens{g.theta_in_a_};
    for (int i = 2; i <= k; ++i) gens.push_back(g.a_index(spin_y(i)));
    if (static_cast<int>(groups::closure(g.a_, gens).size()) != g.a_.order())
      fail("SpinGroup: generator check failed");
  }

  // z = y_2 ... y_k t^c for a computed c. Both sides are words in the same
  // generators only when k is even; z is an odd word otherwise.
  {
    const SpinElement z = central_element_z(parts);
    SpinElement yprod;
    for (int i = 2; i <= k; ++i) yprod = spin_multiply(yprod, spin_y(i), parts);
    if (k % 2 == 0) {
      if (yprod.bits != z.bits) fail("SpinGroup: y-product has wrong word");
      g.z_constant_ = static_cast<int>(z.theta ^ yprod.theta);
    } else {
      g.z_constant_ = -1;
    }
  }
  return g;
}

int SpinGroup::s_index(const SpinElement& e) const {
  return static_cast<int>((e.bits << 1) | e.theta);
}

SpinElement SpinGroup::s_element(int index) const {
  return SpinElement{static_cast<unsigned>(index) & 1u, static_cast<unsigned>(index) >> 1};
}

int SpinGroup::a_index(const SpinElement& e) const { return a_of_s_[s_index(e)]; }

SpinElement SpinGroup::a_element(int index) const { return s_element(s_of_a_[index]); }

TwistCase classify_twist(const TwistPattern& t) {
  int ones = 0;
  for (auto f : t.flips) ones += f ? 1 : 0;
  return ones % 2 == 0 ? TwistCase::A : TwistCase::B;
}

groups::Automorphism twist_automorphism(const SpinGroup& g, const TwistPattern& t) {
  const int k = g.k();
  if (static_cast<int>(t.flips.size()) != k - 1) fail("twist_automorphism: need k-1 flip bits");
  groups::Automorphism f;
  f.perm.resize(g.table_a().order());
  for (int idx = 0; idx < g.table_a().order(); ++idx) {
    const SpinElement e = g.a_element(idx);
    // y-coordinates of an even word are its x_i exponents for i >= 2.
    unsigned chi = 0;
    for (int i = 2; i <= k; ++i)
      if ((e.bits >> (i - 1) & 1u) && t.flips[i - 2]) chi ^= 1u;
    SpinElement image{e.theta ^ chi, e.bits};
    f.perm[idx] = g.a_index(image);
  }
  if (!groups::is_automorphism(g.table_a(), f)) fail("twist_automorphism: pattern is not a twist");
  return f;
}

namespace {

/// Image of the full centre of the covering group in A: {1, t, z, zt} in
/// family D (where z = x_1...x_k is an even word), {1, t} in family B.
std::vector<int> central_image(const SpinGroup& g, SpinFamily family) {
  std::vector<int> out{g.table_a().identity(), g.theta_in_a()};
  if (family == SpinFamily::D) {
    const SpinElement z = central_element_z(g.parts());
    const int zi = g.a_index(z);
    if (zi < 0) fail("central_image: z must be an even word in family D");
    out.push_back(zi);
    out.push_back(g.table_a().mul(zi, g.theta_in_a()));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TwistReport twist_analysis(const SpinGroup& g, const TwistPattern& t, SpinFamily family,
                           bool half_spin) {
  const int k = g.k();
  if (family == SpinFamily::D && k % 2 != 0)
    fail("twist_analysis: family D needs an even number of odd parts");
  if (family == SpinFamily::B && k % 2 != 1)
    fail("twist_analysis: family B needs an odd number of odd parts");
  if (half_spin && family != SpinFamily::D) fail("twist_analysis: half-spin targets are type D");

  TwistReport r{};
  r.twist_case = classify_twist(t);
  if (half_spin && r.twist_case == TwistCase::B)
    fail("twist_analysis: case (b) cannot occur for a half-spin target");

  const auto& a = g.table_a();
  auto f = twist_automorphism(g, t);
  const auto witness = groups::is_inner(a, f);
  r.is_inner = witness.has_value();
  r.witness = witness;

  const bool expect_inner =
      r.twist_case == TwistCase::A || family == SpinFamily::B;
  if (expect_inner != r.is_inner) fail("twist_analysis: case analysis violated");

  // Inner twists are untwisted by the witness; the fixed-point data below
  // then describes the resulting representative.
  if (r.is_inner) f = groups::identity_automorphism(a);

  const auto fixed = groups::fixed_subgroup(a, f);
  r.fixed_order = fixed.table.order();

  const auto centre_elems = central_image(g, family);
  long long z_fixed = 0;
  for (int e : centre_elems)
    if (f(e) == e) ++z_fixed;
  r.z_fixed_order = z_fixed;

  const auto quotient = groups::quotient_by_central(a, centre_elems);
  r.a_tilde_order = quotient.table.order();

  r.well_chosen = r.fixed_order == r.z_fixed_order * r.a_tilde_order;
  return r;
}

SpinElement sigma_ij_witness(const SpinGroup& g, int i, int j) {
  const int k = g.k();
  if (!(2 <= i && i < j && j <= k)) fail("sigma_ij_witness: need 2 <= i < j <= k");
  const SpinElement w = spin_multiply(spin_generator(i), spin_generator(j), g.parts());
  const int wi = g.a_index(w);
  if (wi < 0) fail("sigma_ij_witness: x_i x_j must be an even word");

  // Conjugation by x_i x_j must flip exactly y_i and y_j.
  const auto conj = groups::conjugation_by(g.table_a(), wi);
  for (int l = 2; l <= k; ++l) {
    const int yl = g.a_index(spin_y(l));
    const int image = conj(yl);
    const int flipped = g.table_a().mul(yl, g.theta_in_a());
    const bool expect_flip = (l == i || l == j);
    if (image != (expect_flip ? flipped : yl)) fail("sigma_ij_witness: conjugation check failed");
  }
  return w;
}

}  // namespace uniatlas::spin
