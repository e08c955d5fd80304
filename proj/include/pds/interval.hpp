#pragma once

#include <string>

#include "pds/cyclo.hpp"
#include "pds/rational.hpp"

namespace pds {

/// Closed real interval with rational endpoints, lo <= hi.
struct Interval {
  Rational lo, hi;

  Interval() = default;
  Interval(const Rational& x) : lo(x), hi(x) {}  // NOLINT(google-explicit-constructor)
  Interval(const Rational& a, const Rational& b);

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains_zero() const { return lo <= 0 && hi >= 0; }
  bool positive() const { return lo > 0; }
  bool negative() const { return hi < 0; }
  /// Widens outward to the grid 2^-bits.
  Interval rounded(int bits) const;
  double approx() const { return mid().get_d(); }
};

Interval operator+(const Interval& a, const Interval& b);
Interval operator-(const Interval& a, const Interval& b);
Interval operator-(const Interval& a);
Interval operator*(const Interval& a, const Interval& b);
/// Throws InvalidArgument if b contains zero.
Interval operator/(const Interval& a, const Interval& b);
Interval sqr(const Interval& a);
Interval hull(const Interval& a, const Interval& b);
bool overlaps(const Interval& a, const Interval& b);

/// Rectangular complex interval.
struct ComplexInterval {
  Interval re, im;

  ComplexInterval() = default;
  ComplexInterval(const Interval& r, const Interval& i = Interval(0)) : re(r), im(i) {}  // NOLINT
  bool contains(const Rational& x, const Rational& y) const { return re.contains(x) && im.contains(y); }
  bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
  Rational width() const { return re.width() > im.width() ? re.width() : im.width(); }
  ComplexInterval conj() const { return {re, -im}; }
  /// Enclosure of |z|^2.
  Interval abs2() const { return sqr(re) + sqr(im); }
  ComplexInterval rounded(int bits) const { return {re.rounded(bits), im.rounded(bits)}; }
  std::string debug_string() const;
};

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b);
ComplexInterval operator-(const ComplexInterval& a);
ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b);
/// Throws InvalidArgument if b may contain zero.
ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b);

/// Enclosure of the complex value of x (principal embedding zeta_L = e^{2 pi i/L}),
/// width at most 2^-precision.
ComplexInterval embed(const CycloNumber& x, int precision);

/// Exact sign of a real cyclotomic number. Throws InvalidArgument if x is not real.
int sign(const CycloNumber& x);
/// Sign of |a| - |b|, exact.
int compare_abs(const CycloNumber& a, const CycloNumber& b);

/// Certified bounds from MPFR at the given working precision.
Rational sqrt_upper(const Rational& x, int bits = 128);
Rational sqrt_lower(const Rational& x, int bits = 128);
Interval pi_interval(int bits);
Interval log_interval(const Rational& x, int bits);  // x > 0
Interval exp_interval(const Interval& x, int bits);
Interval cos_interval(const Interval& x, int bits);
Interval sin_interval(const Interval& x, int bits);

}  // namespace pds
