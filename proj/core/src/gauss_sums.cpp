#include "uniatlas/gauss_sums.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace uniatlas::gauss {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

using Poly = std::vector<int>;  // coefficients, low degree first, reduced mod p

Poly trim(Poly f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

Poly poly_mul(const Poly& f, const Poly& g, long long p) {
  if (f.empty() || g.empty()) return {};
  Poly out(f.size() + g.size() - 1, 0);
  for (size_t i = 0; i < f.size(); ++i)
    for (size_t j = 0; j < g.size(); ++j)
      out[i + j] = static_cast<int>((out[i + j] + static_cast<long long>(f[i]) * g[j]) % p);
  return trim(out);
}

Poly poly_mod(Poly f, const Poly& m, long long p) {
  const int dm = static_cast<int>(m.size()) - 1;
  f = trim(std::move(f));
  while (static_cast<int>(f.size()) - 1 >= dm) {
    const int shift = static_cast<int>(f.size()) - 1 - dm;
    // m is monic.
    const long long lead = f.back();
    for (int i = 0; i <= dm; ++i) {
      long long v = f[shift + i] - lead * m[i] % p;
      f[shift + i] = static_cast<int>(((v % p) + p) % p);
    }
    f = trim(std::move(f));
  }
  return f;
}

Poly poly_powmod(Poly base, long long e, const Poly& m, long long p) {
  Poly acc{1};
  base = poly_mod(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) acc = poly_mod(poly_mul(acc, base, p), m, p);
    base = poly_mod(poly_mul(base, base, p), m, p);
    e >>= 1;
  }
  return acc;
}

Poly poly_gcd(Poly a, Poly b, long long p) {
  auto inv_mod = [&](long long v) {
    long long r = 1, base = ((v % p) + p) % p, e = p - 2;
    while (e > 0) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return r;
  };
  a = trim(std::move(a));
  b = trim(std::move(b));
  while (!b.empty()) {
    // Reduce a mod b after making b monic.
    const long long lead_inv = inv_mod(b.back());
    Poly monic = b;
    for (auto& c : monic) c = static_cast<int>(static_cast<long long>(c) * lead_inv % p);
    a = poly_mod(std::move(a), monic, p);
    std::swap(a, b);
  }
  return a;
}

bool poly_irreducible(const Poly& f, long long p) {
  const int s = static_cast<int>(f.size()) - 1;
  const Poly x{0, 1};
  // x^{p^s} = x mod f, and gcd(x^{p^{s/r}} - x, f) = 1 for prime r | s.
  long long ps = 1;
  for (int i = 0; i < s; ++i) ps *= p;
  Poly xq = poly_powmod(x, ps, f, p);
  Poly diff = xq;
  diff.resize(std::max<size_t>(diff.size(), 2), 0);
  diff[1] = static_cast<int>(((diff[1] - 1) % p + p) % p);
  if (!trim(std::move(diff)).empty()) return false;
  for (int r = 2; r <= s; ++r) {
    if (s % r != 0) continue;
    bool r_prime = true;
    for (int d = 2; d * d <= r; ++d)
      if (r % d == 0) r_prime = false;
    if (!r_prime) continue;
    long long pd = 1;
    for (int i = 0; i < s / r; ++i) pd *= p;
    Poly xd = poly_powmod(x, pd, f, p);
    Poly g = xd;
    g.resize(std::max<size_t>(g.size(), 2), 0);
    g[1] = static_cast<int>(((g[1] - 1) % p + p) % p);
    const Poly gcd = poly_gcd(trim(std::move(g)), f, p);
    if (!(gcd.size() == 1)) return false;
  }
  return true;
}

Poly find_irreducible(long long p, int s) {
  // First monic polynomial of degree s, in lexicographic coefficient order.
  std::vector<int> coeffs(s, 0);
  while (true) {
    Poly f(coeffs.begin(), coeffs.end());
    f.push_back(1);
    if (poly_irreducible(f, p)) return f;
    int i = 0;
    while (i < s && ++coeffs[i] == p) coeffs[i++] = 0;
    if (i == s) fail("find_irreducible: exhausted search");
  }
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int legendre(long long a, long long p) {
  a = ((a % p) + p) % p;
  if (a == 0) return 0;
  long long r = 1, base = a, e = (p - 1) / 2;
  while (e > 0) {
    if (e & 1) r = r * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

FiniteField::FiniteField(long long p, int s) : p_(p), s_(s) {
  if (!is_prime(p) || p == 2) fail("FiniteField: p must be an odd prime");
  if (s < 1) fail("FiniteField: degree must be positive");
  q_ = 1;
  for (int i = 0; i < s; ++i) {
    q_ *= p;
    if (q_ > 100000) fail("FiniteField: p^s cap exceeded");
  }
  modulus_ = find_irreducible(p, s);

  // Trace of the basis monomials x^i: sum of Frobenius powers.
  trace_basis_.assign(s, 0);
  for (int i = 0; i < s_; ++i) {
    Poly acc;  // zero
    for (int t = 0; t < s_; ++t) {
      long long e = 1;
      for (int u = 0; u < t; ++u) e *= p_;
      Poly term = poly_powmod(Poly{0, 1}, e, modulus_, p_);  // x^{p^t}
      term = poly_powmod(std::move(term), i, modulus_, p_);  // (x^i)^{p^t}
      acc.resize(std::max(acc.size(), term.size()), 0);
      for (size_t c = 0; c < term.size(); ++c)
        acc[c] = static_cast<int>((acc[c] + term[c]) % p_);
    }
    acc = trim(std::move(acc));
    // The trace lands in F_p: the only surviving coefficient is the constant.
    for (size_t c = 1; c < acc.size(); ++c)
      if (acc[c] != 0) fail("FiniteField: trace did not land in the prime field");
    trace_basis_[i] = acc.empty() ? 0 : acc[0];
  }
}

std::vector<int> FiniteField::element(long long index) const {
  std::vector<int> coeffs(s_);
  for (int i = 0; i < s_; ++i) {
    coeffs[i] = static_cast<int>(index % p_);
    index /= p_;
  }
  return coeffs;
}

long long FiniteField::index(const std::vector<int>& coeffs) const {
  long long idx = 0;
  for (int i = s_ - 1; i >= 0; --i) {
    const int c = i < static_cast<int>(coeffs.size()) ? coeffs[i] : 0;
    idx = idx * p_ + c;
  }
  return idx;
}

long long FiniteField::mul(long long a, long long b) const {
  const Poly prod = poly_mod(poly_mul(element(a), element(b), p_), modulus_, p_);
  return index(prod);
}

long long FiniteField::pow(long long a, long long e) const {
  long long acc = 1;  // index of the constant 1
  long long base = a;
  while (e > 0) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

int FiniteField::trace(long long a) const {
  const auto coeffs = element(a);
  long long t = 0;
  for (int i = 0; i < s_; ++i) t += static_cast<long long>(coeffs[i]) * trace_basis_[i];
  return static_cast<int>(((t % p_) + p_) % p_);
}

int FiniteField::quadratic_character(long long a) const {
  if (a == 0) fail("quadratic_character: zero element");
  const long long v = pow(a, (q_ - 1) / 2);
  if (v == 1) return 1;
  // The only square roots of 1 are +-1; -1 has index p-1 (constant p-1).
  if (v == static_cast<long long>(p_ - 1)) return -1;
  fail("quadratic_character: unexpected value");
}

GaussSumResult quadratic_gauss_sum(long long p, int s) {
  if (!is_prime(p) || p == 2) fail("quadratic_gauss_sum: p must be an odd prime");
  if (s < 1) fail("quadratic_gauss_sum: s must be positive");

  GaussSumResult out;
  out.p = p;
  out.s = s;

  long double re = 0, im = 0;
  const long double tau = 2.0L * std::numbers::pi_v<long double>;
  if (s == 1) {
    for (long long x = 1; x < p; ++x) {
      const long double angle = tau * static_cast<long double>(x) / p;
      const int chi = legendre(x, p);
      re += chi * std::cos(angle);
      im += chi * std::sin(angle);
    }
  } else {
    const FiniteField field(p, s);
    for (long long x = 1; x < field.size(); ++x) {
      const long double angle = tau * static_cast<long double>(field.trace(x)) / p;
      const int chi = field.quadratic_character(x);
      re += chi * std::cos(angle);
      im += chi * std::sin(angle);
    }
  }
  out.value = {static_cast<double>(re), static_cast<double>(im)};

  long double ps = 1;
  for (int i = 0; i < s; ++i) ps *= p;
  out.modulus_error = static_cast<double>(std::fabs((re * re + im * im) - ps));

  const double root = std::sqrt(static_cast<double>(ps));
  const double tol = 1e-6;
  if (std::abs(out.value.real() - root) < tol && std::abs(out.value.imag()) < tol)
    out.verdict = GaussVerdict::RealPositive;
  else if (std::abs(out.value.imag() - root) < tol && std::abs(out.value.real()) < tol)
    out.verdict = GaussVerdict::ImagPositive;
  else
    out.verdict = GaussVerdict::Other;
  return out;
}

SqrtConvention sqrt_p_convention(long long p) {
  const auto g = quadratic_gauss_sum(p, 1);
  SqrtConvention out;
  out.p = p;
  out.epsilon = quartic::epsilon_mod4(p);
  out.uses_j_inverse = out.epsilon == -1;
  out.gauss_value = g.value;
  out.verified = out.epsilon == 1 ? g.verdict == GaussVerdict::RealPositive
                                  : g.verdict == GaussVerdict::ImagPositive;
  return out;
}

quartic::Root4 gauss_ratio_root(long long p, int a) {
  const auto g = quadratic_gauss_sum(p, a);
  const double root = std::pow(static_cast<double>(p), 0.5 * a);
  const std::complex<double> ratio = g.value / root;
  const std::complex<double> roots[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  for (int e = 0; e < 4; ++e)
    if (std::abs(ratio - roots[e]) < 1e-6) return quartic::Root4::j_power(e);
  throw std::domain_error("gauss_ratio_root: ratio is not a fourth root of unity");
}

}  // namespace uniatlas::gauss
