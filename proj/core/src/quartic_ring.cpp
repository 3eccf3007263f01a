#include "uniatlas/quartic_ring.hpp"

#include <stdexcept>

namespace uniatlas::quartic {

namespace {
[[noreturn]] void fail(const std::string& what) { throw std::invalid_argument(what); }

void check_same_p(const QuarticElem& x, const QuarticElem& y) {
  if (x.p != y.p) fail("quartic: mismatched primes");
}

void check_odd_prime_shape(long long p) {
  if (p < 3 || p % 2 == 0) fail("quartic: p must be an odd prime");
}
}  // namespace

GaussInt operator+(GaussInt a, GaussInt b) { return {a.re + b.re, a.im + b.im}; }
GaussInt operator-(GaussInt a, GaussInt b) { return {a.re - b.re, a.im - b.im}; }
GaussInt operator*(GaussInt a, GaussInt b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
GaussInt operator-(GaussInt a) { return {-a.re, -a.im}; }
GaussInt scale(GaussInt a, long long c) { return {a.re * c, a.im * c}; }
bool divisible(GaussInt a, long long m) { return a.re % m == 0 && a.im % m == 0; }

Root4 Root4::j_power(long long e) { return Root4(static_cast<int>(((e % 4) + 4) % 4)); }

Root4 Root4::pow(long long n) const { return j_power(static_cast<long long>(e_) * n); }

GaussInt Root4::gauss() const {
  switch (e_) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

std::string Root4::str() const {
  switch (e_) {
    case 0: return "1";
    case 1: return "j";
    case 2: return "-1";
    default: return "-j";
  }
}

std::optional<Root4> Root4::parse(std::string_view text) {
  if (text == "1") return one();
  if (text == "j") return j();
  if (text == "-1") return minus_one();
  if (text == "-j") return minus_j();
  return std::nullopt;
}

QuarticElem QuarticElem::integer(long long p, long long value) {
  check_odd_prime_shape(p);
  return {p, {value, 0}, {0, 0}};
}

QuarticElem QuarticElem::from_gauss(long long p, GaussInt g) {
  check_odd_prime_shape(p);
  return {p, g, {0, 0}};
}

QuarticElem QuarticElem::from_root(long long p, Root4 r) { return from_gauss(p, r.gauss()); }

QuarticElem QuarticElem::sqrt_p(long long p) {
  check_odd_prime_shape(p);
  return {p, {0, 0}, {1, 0}};
}

QuarticElem ring_add(const QuarticElem& x, const QuarticElem& y) {
  check_same_p(x, y);
  return {x.p, x.rational + y.rational, x.radical + y.radical};
}

QuarticElem ring_sub(const QuarticElem& x, const QuarticElem& y) {
  check_same_p(x, y);
  return {x.p, x.rational - y.rational, x.radical - y.radical};
}

QuarticElem ring_mul(const QuarticElem& x, const QuarticElem& y) {
  check_same_p(x, y);
  return {x.p, x.rational * y.rational + scale(x.radical * y.radical, x.p),
          x.rational * y.radical + x.radical * y.rational};
}

QuarticElem ring_neg(const QuarticElem& x) { return {x.p, -x.rational, -x.radical}; }

QuarticElem operator+(const QuarticElem& x, const QuarticElem& y) { return ring_add(x, y); }
QuarticElem operator-(const QuarticElem& x, const QuarticElem& y) { return ring_sub(x, y); }
QuarticElem operator*(const QuarticElem& x, const QuarticElem& y) { return ring_mul(x, y); }

int epsilon_mod4(long long p) {
  check_odd_prime_shape(p);
  return p % 4 == 1 ? 1 : -1;
}

QuarticElem half_power(long long p, long long a) {
  check_odd_prime_shape(p);
  if (a < 0) fail("half_power: exponent must be non-negative");
  long long integer_part = 1;
  for (long long i = 0; i < a / 2; ++i) integer_part *= p;
  QuarticElem out = QuarticElem::integer(p, integer_part);
  if (a % 2 == 1) out = ring_mul(out, QuarticElem::sqrt_p(p));
  return out;
}

QuarticElem half_power_mod4(long long p, long long a) {
  check_odd_prime_shape(p);
  if (a < 0) fail("half_power_mod4: exponent must be non-negative");
  const long long eps = epsilon_mod4(p);
  const long long integer_part = (a / 2) % 2 == 0 ? 1 : eps;
  QuarticElem out = QuarticElem::integer(p, integer_part);
  if (a % 2 == 1) out = ring_mul(out, QuarticElem::sqrt_p(p));
  return out;
}

Mod4Residues reduce_mod4(const QuarticElem& x) {
  auto r = [](long long v) { return static_cast<int>(((v % 4) + 4) % 4); };
  return {r(x.rational.re), r(x.rational.im), r(x.radical.re), r(x.radical.im)};
}

QuarticElem strip_p_powers(const QuarticElem& x) {
  const long long eps = epsilon_mod4(x.p);
  auto strip = [&](long long c) {
    if (c == 0) return 0LL;
    long long sign = 1;
    while (c % x.p == 0) {
      c /= x.p;
      sign *= eps;
    }
    return sign * c;
  };
  QuarticElem out = x;
  out.rational.re = strip(x.rational.re);
  out.rational.im = strip(x.rational.im);
  out.radical.re = strip(x.radical.re);
  out.radical.im = strip(x.radical.im);
  return out;
}

std::string to_string(const QuarticElem& x) {
  auto gauss_str = [](GaussInt g) {
    std::string s = std::to_string(g.re);
    s += g.im >= 0 ? "+" : "";
    s += std::to_string(g.im) + "j";
    return s;
  };
  return "(" + gauss_str(x.rational) + ") + (" + gauss_str(x.radical) + ")*sqrt(" +
         std::to_string(x.p) + ")";
}

}  // namespace uniatlas::quartic
