#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pds/rational.hpp"

namespace pds {

/// Integer polynomial, coefficient k multiplies x^k.
using IntPoly = std::vector<std::int64_t>;

/// The L-th cyclotomic polynomial (cached).
const IntPoly& cyclotomic_polynomial(int L);

/// Element of Q(zeta_L) in the power basis 1, zeta, ..., zeta^{phi(L)-1}.
///
/// Stored as a common positive denominator and integer numerators, always
/// reduced mod Phi_L. Values whose only nonzero coordinate is the constant
/// term are demoted to order 1, so rationals are cheap.
class CycloNumber {
 public:
  CycloNumber();
  CycloNumber(long v);  // NOLINT(google-explicit-constructor)
  CycloNumber(const Rational& r);  // NOLINT(google-explicit-constructor)

  /// Sum of coeffs[k] * zeta_L^k; coeffs may have any length.
  static CycloNumber from_powers(int L, const std::vector<Rational>& coeffs);

  int order() const noexcept { return order_; }
  /// phi(order()), the length of the coefficient vector.
  std::size_t degree() const noexcept { return num_.size(); }
  Rational coeff(std::size_t k) const;
  std::vector<Rational> coeffs() const;

  bool is_zero() const;
  bool is_rational() const noexcept { return order_ == 1; }
  /// Throws InvalidArgument if the value is not rational.
  Rational to_rational() const;

  CycloNumber conj() const;
  /// Galois action zeta -> zeta^a, gcd(a, order) = 1.
  CycloNumber galois(long a) const;
  /// Throws InvalidArgument on zero.
  CycloNumber inverse() const;
  /// Same value viewed in Q(zeta_{L2}); requires order() | L2. The result is
  /// demoted again only by later arithmetic.
  CycloNumber lifted(int L2) const;
  /// True if x == conj(x).
  bool is_real() const;

  CycloNumber operator-() const;
  CycloNumber& operator+=(const CycloNumber& o);
  CycloNumber& operator-=(const CycloNumber& o);
  CycloNumber& operator*=(const CycloNumber& o);
  CycloNumber& operator/=(const CycloNumber& o);
  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(const CycloNumber& a, const CycloNumber& b);
  friend CycloNumber operator/(CycloNumber a, const CycloNumber& b) { return a /= b; }
  friend bool operator==(const CycloNumber& a, const CycloNumber& b);
  friend bool operator!=(const CycloNumber& a, const CycloNumber& b) { return !(a == b); }

  /// Debug rendering, e.g. "1/2 + 3*zeta12^2".
  std::string debug_string() const;

  // Raw access for accumulators.
  const Integer& denominator() const noexcept { return den_; }
  const std::vector<Integer>& numerators() const noexcept { return num_; }

 private:
  friend class FullBasisAccumulator;
  int order_ = 1;
  Integer den_ = 1;
  std::vector<Integer> num_;
  void normalize();
};

/// zeta_L^k in canonical form.
CycloNumber root_of_unity(int L, long k);
/// Throws InvalidArgument if order(x) does not divide L2.
CycloNumber cyclo_lift(const CycloNumber& x, int L2);
inline bool is_zero(const CycloNumber& x) { return x.is_zero(); }

/// Accumulates sums of the form sum c * zeta_M^e in the redundant length-M
/// basis and reduces once at the end. Used for Fourier sums and Gauss sums.
class FullBasisAccumulator {
 public:
  explicit FullBasisAccumulator(int M);
  int order() const noexcept { return M_; }
  /// Adds x * zeta_M^shift; requires order(x) | M.
  void add(const CycloNumber& x, long shift = 0);
  /// Adds c * zeta_M^shift.
  void add_rational(const Rational& c, long shift);
  void add_integer(long c, long shift);
  CycloNumber result() const;

 private:
  int M_;
  Integer den_ = 1;
  std::vector<Integer> acc_;
  void rescale_to(const Integer& den);
};

}  // namespace pds
