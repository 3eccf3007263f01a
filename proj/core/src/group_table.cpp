#include "uniatlas/group_table.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace uniatlas::groups {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

GroupTable::GroupTable(std::vector<std::vector<int>> mul, std::vector<std::string> labels) {
  order_ = static_cast<int>(mul.size());
  if (order_ < 1) fail("GroupTable: empty table");
  if (order_ > kMaxGroupOrder) fail("GroupTable: order exceeds cap");
  if (labels.size() != mul.size()) fail("GroupTable: label count mismatch");
  mul_.resize(static_cast<size_t>(order_) * order_);
  for (int a = 0; a < order_; ++a) {
    if (static_cast<int>(mul[a].size()) != order_) fail("GroupTable: ragged table");
    for (int b = 0; b < order_; ++b) {
      int v = mul[a][b];
      if (v < 0 || v >= order_) fail("GroupTable: entry out of range");
      mul_[static_cast<size_t>(a) * order_ + b] = v;
    }
  }
  labels_ = std::move(labels);

  // Locate the two-sided identity.
  identity_ = -1;
  for (int e = 0; e < order_; ++e) {
    bool ok = true;
    for (int x = 0; x < order_ && ok; ++x)
      ok = this->mul(e, x) == x && this->mul(x, e) == x;
    if (ok) {
      identity_ = e;
      break;
    }
  }
  if (identity_ < 0) fail("GroupTable: no identity element");

  inverse_.assign(order_, -1);
  for (int a = 0; a < order_; ++a) {
    for (int b = 0; b < order_; ++b) {
      if (this->mul(a, b) == identity_ && this->mul(b, a) == identity_) {
        inverse_[a] = b;
        break;
      }
    }
    if (inverse_[a] < 0) fail("GroupTable: element without inverse");
  }

  verify();
}

void GroupTable::verify() const {
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (static_cast<int>(seen.size()) != order_) fail("GroupTable: duplicate labels");
  const int n = order_;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int ab = mul(a, b);
      for (int c = 0; c < n; ++c)
        if (mul(ab, c) != mul(a, mul(b, c))) fail("GroupTable: associativity fails");
    }
}

GroupTable GroupTable::cyclic(int n) {
  if (n < 1) fail("cyclic: n must be positive");
  std::vector<std::vector<int>> mul(n, std::vector<int>(n));
  std::vector<std::string> labels(n);
  for (int a = 0; a < n; ++a) {
    labels[a] = std::to_string(a);
    for (int b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  }
  return GroupTable(std::move(mul), std::move(labels));
}

GroupTable GroupTable::symmetric(int n) {
  if (n < 1 || n > 6) fail("symmetric: supported range is 1..6");
  const auto perms = all_permutations(n);
  const int m = static_cast<int>(perms.size());
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < m; ++i) index[perms[i]] = i;
  std::vector<std::vector<int>> mul(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int a = 0; a < m; ++a) {
    std::string lab;
    for (int v : perms[a]) lab += static_cast<char>('0' + v);
    labels[a] = lab;
    for (int b = 0; b < m; ++b) {
      std::vector<int> comp(n);
      for (int i = 0; i < n; ++i) comp[i] = perms[a][perms[b][i]];
      mul[a][b] = index.at(comp);
    }
  }
  return GroupTable(std::move(mul), std::move(labels));
}

GroupTable GroupTable::direct_product(const GroupTable& g, const GroupTable& h) {
  const int n = g.order(), m = h.order();
  if (static_cast<long long>(n) * m > kMaxGroupOrder) fail("direct_product: order exceeds cap");
  std::vector<std::vector<int>> mul(n * m, std::vector<int>(n * m));
  std::vector<std::string> labels(n * m);
  auto idx = [m](int a, int b) { return a * m + b; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < m; ++b) {
      labels[idx(a, b)] = g.label(a) + "|" + h.label(b);
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < m; ++d)
          mul[idx(a, b)][idx(c, d)] = idx(g.mul(a, c), h.mul(b, d));
    }
  return GroupTable(std::move(mul), std::move(labels));
}

int GroupTable::power(int a, long long e) const {
  if (e < 0) {
    a = inverse(a);
    e = -e;
  }
  int acc = identity_;
  while (e > 0) {
    if (e & 1) acc = mul(acc, a);
    a = mul(a, a);
    e >>= 1;
  }
  return acc;
}

int GroupTable::element_order(int a) const {
  int x = a, ord = 1;
  while (x != identity_) {
    x = mul(x, a);
    ++ord;
  }
  return ord;
}

bool GroupTable::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::optional<int> GroupTable::find_label(const std::string& label) const {
  for (int a = 0; a < order_; ++a)
    if (labels_[a] == label) return a;
  return std::nullopt;
}

std::vector<int> GroupTable::order_profile() const {
  std::vector<int> profile(order_);
  for (int a = 0; a < order_; ++a) profile[a] = element_order(a);
  std::sort(profile.begin(), profile.end());
  return profile;
}

Automorphism identity_automorphism(const GroupTable& g) {
  Automorphism f;
  f.perm.resize(g.order());
  std::iota(f.perm.begin(), f.perm.end(), 0);
  return f;
}

Automorphism conjugation_by(const GroupTable& g, int a) {
  Automorphism f;
  f.perm.resize(g.order());
  const int ai = g.inverse(a);
  for (int x = 0; x < g.order(); ++x) f.perm[x] = g.mul(ai, g.mul(x, a));
  return f;
}

Automorphism compose(const Automorphism& f, const Automorphism& h) {
  Automorphism out;
  out.perm.resize(h.perm.size());
  for (size_t x = 0; x < h.perm.size(); ++x) out.perm[x] = f.perm[h.perm[x]];
  return out;
}

bool is_automorphism(const GroupTable& g, const Automorphism& f) {
  const int n = g.order();
  if (static_cast<int>(f.perm.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int x = 0; x < n; ++x) {
    if (f.perm[x] < 0 || f.perm[x] >= n || seen[f.perm[x]]) return false;
    seen[f.perm[x]] = 1;
  }
  if (f(g.identity()) != g.identity()) return false;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (f(g.mul(a, b)) != g.mul(f(a), f(b))) return false;
  return true;
}

std::vector<std::vector<int>> f_conjugacy_classes(const GroupTable& g, const Automorphism& f) {
  if (!is_automorphism(g, f)) fail("f_conjugacy_classes: not an automorphism");
  const int n = g.order();
  UnionFind uf(n);
  for (int x = 0; x < n; ++x)
    for (int a = 0; a < n; ++a) {
      const int y = g.mul(g.mul(a, x), g.inverse(f(a)));
      uf.unite(x, y);
    }
  std::map<int, std::vector<int>> orbits;
  for (int x = 0; x < n; ++x) orbits[uf.find(x)].push_back(x);
  std::vector<std::vector<int>> out;
  out.reserve(orbits.size());
  for (auto& [root, members] : orbits) out.push_back(std::move(members));
  return out;
}

Lemma22Result lemma22_equivalence(const GroupTable& g, const Automorphism& f) {
  if (!g.is_abelian()) fail("lemma22_equivalence: group must be abelian");
  if (!is_automorphism(g, f)) fail("lemma22_equivalence: not an automorphism");
  Lemma22Result r{};
  r.class_count_full =
      static_cast<int>(f_conjugacy_classes(g, f).size()) == g.order();
  r.fixes_everything =
      fixed_subgroup(g, f).table.order() == g.order();
  r.all_inner_twists = true;
  for (int a = 0; a < g.order(); ++a) {
    const auto twisted = compose(conjugation_by(g, a), f);
    if (fixed_subgroup(g, twisted).table.order() != g.order()) {
      r.all_inner_twists = false;
      break;
    }
  }
  return r;
}

namespace {

Subgroup subgroup_from_elements(const GroupTable& g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  const int m = static_cast<int>(elements.size());
  std::vector<int> pos(g.order(), -1);
  for (int i = 0; i < m; ++i) pos[elements[i]] = i;
  std::vector<std::vector<int>> mul(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = g.label(elements[i]);
    for (int j = 0; j < m; ++j) {
      const int prod = g.mul(elements[i], elements[j]);
      if (pos[prod] < 0) fail("subgroup_from_elements: subset not closed");
      mul[i][j] = pos[prod];
    }
  }
  return Subgroup{GroupTable(std::move(mul), std::move(labels)), std::move(elements)};
}

}  // namespace

Subgroup fixed_subgroup(const GroupTable& g, const Automorphism& f) {
  if (!is_automorphism(g, f)) fail("fixed_subgroup: not an automorphism");
  std::vector<int> fix;
  for (int x = 0; x < g.order(); ++x)
    if (f(x) == x) fix.push_back(x);
  return subgroup_from_elements(g, std::move(fix));
}

Subgroup center(const GroupTable& g) {
  std::vector<int> z;
  for (int x = 0; x < g.order(); ++x) {
    bool central = true;
    for (int y = 0; y < g.order() && central; ++y) central = g.mul(x, y) == g.mul(y, x);
    if (central) z.push_back(x);
  }
  return subgroup_from_elements(g, std::move(z));
}

std::optional<int> is_inner(const GroupTable& g, const Automorphism& f) {
  if (!is_automorphism(g, f)) fail("is_inner: not an automorphism");
  for (int a = 0; a < g.order(); ++a) {
    bool match = true;
    const int ai = g.inverse(a);
    for (int x = 0; x < g.order() && match; ++x) match = f(x) == g.mul(ai, g.mul(x, a));
    if (match) return a;
  }
  return std::nullopt;
}

Quotient quotient_by_central(const GroupTable& g, const std::vector<int>& central) {
  std::set<int> zset(central.begin(), central.end());
  if (zset.empty() || !zset.count(g.identity()))
    fail("quotient_by_central: subgroup must contain the identity");
  for (int z : zset) {
    if (z < 0 || z >= g.order()) fail("quotient_by_central: element out of range");
    for (int x = 0; x < g.order(); ++x)
      if (g.mul(z, x) != g.mul(x, z)) fail("quotient_by_central: subgroup not central");
    for (int w : zset)
      if (!zset.count(g.mul(z, w))) fail("quotient_by_central: subset not closed");
    if (!zset.count(g.inverse(z))) fail("quotient_by_central: subset not inverse-closed");
  }

  // Cosets, canonically represented by their least element.
  std::vector<int> coset_rep(g.order(), -1);
  std::vector<int> reps;
  for (int x = 0; x < g.order(); ++x) {
    if (coset_rep[x] >= 0) continue;
    std::vector<int> coset;
    for (int z : zset) coset.push_back(g.mul(x, z));
    const int rep = *std::min_element(coset.begin(), coset.end());
    for (int y : coset) coset_rep[y] = rep;
    reps.push_back(rep);
  }
  std::sort(reps.begin(), reps.end());
  std::vector<int> rep_index(g.order(), -1);
  for (int i = 0; i < static_cast<int>(reps.size()); ++i) rep_index[reps[i]] = i;

  const int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> mul(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = g.label(reps[i]);
    for (int j = 0; j < m; ++j)
      mul[i][j] = rep_index[coset_rep[g.mul(reps[i], reps[j])]];
  }
  std::vector<int> projection(g.order());
  for (int x = 0; x < g.order(); ++x) projection[x] = rep_index[coset_rep[x]];
  return Quotient{GroupTable(std::move(mul), std::move(labels)), std::move(projection)};
}

std::vector<int> closure(const GroupTable& g, std::vector<int> gens) {
  std::vector<char> in(g.order(), 0);
  std::vector<int> out{g.identity()};
  in[g.identity()] = 1;
  for (int x : gens)
    if (!in[x]) {
      in[x] = 1;
      out.push_back(x);
    }
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = 0; j < out.size(); ++j) {
      const int p = g.mul(out[i], out[j]);
      if (!in[p]) {
        in[p] = 1;
        out.push_back(p);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> generating_sequence(const GroupTable& g) {
  std::vector<int> gens;
  std::vector<int> span{g.identity()};
  while (static_cast<int>(span.size()) < g.order()) {
    int best = -1;
    size_t best_size = span.size();
    for (int x = 0; x < g.order(); ++x) {
      if (std::binary_search(span.begin(), span.end(), x)) continue;
      auto trial = gens;
      trial.push_back(x);
      const size_t size = closure(g, trial).size();
      if (size > best_size) {
        best = x;
        best_size = size;
      }
    }
    gens.push_back(best);
    span = closure(g, gens);
  }
  return gens;
}

std::vector<Automorphism> all_automorphisms(const GroupTable& g) {
  const int n = g.order();
  const auto gens = generating_sequence(g);
  const int m = static_cast<int>(gens.size());

  if (m == 0) return {identity_automorphism(g)};

  // Express every element as (previous element) * generator, by BFS.
  std::vector<int> via_parent(n, -1), via_gen(n, -1);
  {
    std::vector<int> queue{g.identity()};
    via_parent[g.identity()] = g.identity();
    via_gen[g.identity()] = -1;
    for (size_t i = 0; i < queue.size(); ++i)
      for (int gi = 0; gi < m; ++gi) {
        const int next = g.mul(queue[i], gens[gi]);
        if (via_parent[next] < 0) {
          via_parent[next] = queue[i];
          via_gen[next] = gi;
          queue.push_back(next);
        }
      }
  }

  std::vector<std::vector<int>> candidates(m);
  for (int gi = 0; gi < m; ++gi) {
    const int ord = g.element_order(gens[gi]);
    for (int x = 0; x < n; ++x)
      if (g.element_order(x) == ord) candidates[gi].push_back(x);
  }

  // BFS order for image propagation.
  std::vector<int> bfs_order;
  bfs_order.reserve(n);
  {
    std::vector<char> seen(n, 0);
    std::vector<int> queue{g.identity()};
    seen[g.identity()] = 1;
    for (size_t i = 0; i < queue.size(); ++i) {
      bfs_order.push_back(queue[i]);
      for (int gi = 0; gi < m; ++gi) {
        const int next = g.mul(queue[i], gens[gi]);
        if (!seen[next]) {
          seen[next] = 1;
          queue.push_back(next);
        }
      }
    }
  }

  std::vector<Automorphism> autos;
  std::vector<int> choice(m, 0);
  std::vector<int> image(n);
  while (true) {
    image.assign(n, -1);
    image[g.identity()] = g.identity();
    for (int x : bfs_order) {
      if (x == g.identity()) continue;
      image[x] = g.mul(image[via_parent[x]], candidates[via_gen[x]][choice[via_gen[x]]]);
    }
    bool valid = true;
    std::vector<char> hit(n, 0);
    for (int x = 0; x < n && valid; ++x) {
      if (hit[image[x]]) valid = false;
      hit[image[x]] = 1;
    }
    for (int a = 0; a < n && valid; ++a)
      for (int b = 0; b < n && valid; ++b)
        if (image[g.mul(a, b)] != g.mul(image[a], image[b])) valid = false;
    if (valid) autos.push_back(Automorphism{image});

    int pos = m - 1;
    while (pos >= 0 && ++choice[pos] == static_cast<int>(candidates[pos].size()))
      choice[pos--] = 0;
    if (pos < 0) break;
  }
  return autos;
}

std::string to_json(const GroupTable& g) {
  nlohmann::ordered_json out;
  out["order"] = g.order();
  out["labels"] = g.labels();
  std::vector<std::vector<int>> mul(g.order(), std::vector<int>(g.order()));
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) mul[a][b] = g.mul(a, b);
  out["mul"] = mul;
  return out.dump();
}

GroupTable group_table_from_json(const std::string& text) {
  const auto parsed = nlohmann::json::parse(text);
  const int order = parsed.at("order").get<int>();
  auto labels = parsed.at("labels").get<std::vector<std::string>>();
  auto mul = parsed.at("mul").get<std::vector<std::vector<int>>>();
  if (static_cast<int>(mul.size()) != order) fail("group_table_from_json: order mismatch");
  return GroupTable(std::move(mul), std::move(labels));
}

}  // namespace uniatlas::groups
