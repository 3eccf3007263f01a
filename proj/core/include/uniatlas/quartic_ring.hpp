#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace uniatlas::quartic {

/// Gaussian integer re + im*j with j^2 = -1.
struct GaussInt {
  long long re = 0;
  long long im = 0;
  bool operator==(const GaussInt&) const = default;
  bool is_zero() const { return re == 0 && im == 0; }
};

GaussInt operator+(GaussInt a, GaussInt b);
GaussInt operator-(GaussInt a, GaussInt b);
GaussInt operator*(GaussInt a, GaussInt b);
GaussInt operator-(GaussInt a);
GaussInt scale(GaussInt a, long long c);
/// Componentwise divisibility by m.
bool divisible(GaussInt a, long long m);

/// A fourth root of unity j^e.
class Root4 {
 public:
  constexpr Root4() = default;
  static constexpr Root4 one() { return Root4(0); }
  static constexpr Root4 j() { return Root4(1); }
  static constexpr Root4 minus_one() { return Root4(2); }
  static constexpr Root4 minus_j() { return Root4(3); }
  static Root4 j_power(long long e);

  int exponent() const { return e_; }
  Root4 operator*(Root4 o) const { return j_power(e_ + o.e_); }
  Root4 pow(long long n) const;
  Root4 inverse() const { return j_power(-e_); }
  Root4 square() const { return j_power(2LL * e_); }
  GaussInt gauss() const;
  std::string str() const;
  static std::optional<Root4> parse(std::string_view text);
  bool operator==(const Root4&) const = default;

 private:
  explicit constexpr Root4(int e) : e_(e) {}
  int e_ = 0;
};

/// Exact element (a0 + a1 j) + (b0 + b1 j) sqrt(p) of the ring generated by
/// j and a formal square root of the odd prime p.
struct QuarticElem {
  long long p = 3;
  GaussInt rational;  // coefficient of 1
  GaussInt radical;   // coefficient of sqrt(p)

  static QuarticElem integer(long long p, long long value);
  static QuarticElem from_gauss(long long p, GaussInt g);
  static QuarticElem from_root(long long p, Root4 r);
  static QuarticElem sqrt_p(long long p);
  bool operator==(const QuarticElem&) const = default;
  bool is_zero() const { return rational.is_zero() && radical.is_zero(); }
};

QuarticElem ring_add(const QuarticElem& x, const QuarticElem& y);
QuarticElem ring_sub(const QuarticElem& x, const QuarticElem& y);
QuarticElem ring_mul(const QuarticElem& x, const QuarticElem& y);
QuarticElem ring_neg(const QuarticElem& x);
QuarticElem operator+(const QuarticElem& x, const QuarticElem& y);
QuarticElem operator-(const QuarticElem& x, const QuarticElem& y);
QuarticElem operator*(const QuarticElem& x, const QuarticElem& y);

/// The sign of p mod 4: +1 or -1.
int epsilon_mod4(long long p);

/// p^{a/2} as an exact element: p^{floor(a/2)} (sqrt p)^{a mod 2}.
QuarticElem half_power(long long p, long long a);

/// p^{a/2} with the integer part reduced through p = eps mod 4, i.e.
/// eps^{floor(a/2)} (sqrt p)^{a mod 2}. Congruent to half_power mod 4.
QuarticElem half_power_mod4(long long p, long long a);

struct Mod4Residues {
  int a0 = 0, a1 = 0, b0 = 0, b1 = 0;
  bool all_zero() const { return a0 == 0 && a1 == 0 && b0 == 0 && b1 == 0; }
  bool operator==(const Mod4Residues&) const = default;
};

/// Coefficientwise residues mod 4 (non-negative representatives).
Mod4Residues reduce_mod4(const QuarticElem& x);

/// Replace the p-power factor of every coefficient by the matching power of
/// eps: c -> eps^{v_p(c)} * c / p^{v_p(c)}. Congruent to x mod 4.
QuarticElem strip_p_powers(const QuarticElem& x);

std::string to_string(const QuarticElem& x);

}  // namespace uniatlas::quartic
