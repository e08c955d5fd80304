#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pds/cyclo.hpp"
#include "pds/interval.hpp"

namespace pds {

/// Univariate polynomial over cyclotomic numbers; c[k] multiplies z^k.
/// Trailing zero coefficients are trimmed.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<CycloNumber> coeffs);
  static UPoly monomial(int k, const CycloNumber& c = CycloNumber(1));

  const std::vector<CycloNumber>& coeffs() const noexcept { return c_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  CycloNumber coeff(int k) const;
  const CycloNumber& lead() const { return c_.back(); }
  int value_order() const;

  CycloNumber operator()(const CycloNumber& z) const;
  ComplexInterval evaluate(const ComplexInterval& z, int precision) const;

  UPoly operator+(const UPoly& o) const;
  UPoly operator-(const UPoly& o) const;
  UPoly operator*(const UPoly& o) const;
  UPoly scaled(const CycloNumber& s) const;
  UPoly derivative() const;
  UPoly monic() const;
  /// z^n conj(p(1/conj z)) for n >= degree.
  UPoly reciprocal_conj(int n) const;
  /// Coefficientwise complex conjugate.
  UPoly conj() const;

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }
  std::string debug_string() const;

 private:
  std::vector<CycloNumber> c_;
  void trim();
};

/// Quotient and remainder; throws InvalidArgument on division by zero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd (zero if both are zero).
UPoly gcd(const UPoly& a, const UPoly& b);
/// p / gcd(p, p'), monic.
UPoly squarefree_part(const UPoly& p);

/// Closed disk with rational center and radius.
struct RootDisk {
  Rational re, im, radius;
  /// -1 strictly inside the unit circle, +1 strictly outside, 0 touching.
  int location() const;
  /// Bounding box.
  ComplexInterval box() const;
  double approx_re() const { return re.get_d(); }
  double approx_im() const { return im.get_d(); }
};

/// Certified isolation of the roots of a squarefree p: pairwise disjoint disks,
/// each holding exactly one root. Working precision 53 << level bits; returns
/// empty if certification fails at that level.
std::optional<std::vector<RootDisk>> isolate_roots(const UPoly& p, int level);
/// Isolates at increasing levels until every disk has radius <= max_radius
/// (if given) or level max_level is exhausted.
std::optional<std::vector<RootDisk>> isolate_roots_adaptive(const UPoly& p, int max_level = 5);

/// Non-certified numeric roots in double precision (Aberth iteration).
std::vector<std::pair<double, double>> approximate_roots(const UPoly& p);

/// re + im*i as an element of Q(zeta_4).
CycloNumber gaussian(const Rational& re, const Rational& im);

}  // namespace pds
