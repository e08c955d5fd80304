#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pds/cyclo.hpp"
#include "pds/interval.hpp"

namespace pds {

class DirichletCharacter;

/// Finite Dirichlet polynomial sum a_n n^{-s}; zero coefficients are not stored.
class DirichletPoly {
 public:
  DirichletPoly() = default;
  explicit DirichletPoly(std::map<long, CycloNumber> terms);

  const std::map<long, CycloNumber>& terms() const noexcept { return terms_; }
  CycloNumber coeff(long n) const;
  CycloNumber constant_term() const { return coeff(1); }
  void add_term(long n, const CycloNumber& c);
  bool is_zero() const noexcept { return terms_.empty(); }
  std::vector<long> support() const;
  /// lcm of the cyclotomic orders of the coefficients.
  int value_order() const;

  DirichletPoly operator*(const DirichletPoly& o) const;
  DirichletPoly operator+(const DirichletPoly& o) const;
  DirichletPoly scaled(const CycloNumber& c) const;
  friend bool operator==(const DirichletPoly& a, const DirichletPoly& b);
  friend bool operator!=(const DirichletPoly& a, const DirichletPoly& b) { return !(a == b); }

  /// e.g. "2 + 2^{-s} - 4^{-s}" with coefficients in debug form.
  std::string debug_string() const;

 private:
  std::map<long, CycloNumber> terms_;
};

/// Multivariate polynomial in z_j = p_j^{-s}, p_j = primes[j].
class BohrPoly {
 public:
  using Exponents = std::vector<int>;

  BohrPoly() = default;
  BohrPoly(std::vector<long> primes, std::map<Exponents, CycloNumber> terms);

  const std::vector<long>& primes() const noexcept { return primes_; }
  std::size_t nvars() const noexcept { return primes_.size(); }
  const std::map<Exponents, CycloNumber>& terms() const noexcept { return terms_; }
  CycloNumber coeff(const Exponents& e) const;
  CycloNumber constant_term() const;
  void add_term(const Exponents& e, const CycloNumber& c);
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const;
  int degree_in(std::size_t j) const;
  /// Variables that occur with positive degree.
  std::vector<std::size_t> active_variables() const;
  int value_order() const;

  CycloNumber evaluate(const std::vector<CycloNumber>& z) const;
  ComplexInterval evaluate(const std::vector<ComplexInterval>& z, int precision) const;

  BohrPoly operator*(const BohrPoly& o) const;  // same prime list required
  friend bool operator==(const BohrPoly& a, const BohrPoly& b);

  /// Back to a Dirichlet polynomial.
  DirichletPoly to_dirichlet() const;
  std::string debug_string() const;

 private:
  std::vector<long> primes_;
  std::map<Exponents, CycloNumber> terms_;
};

/// Exponent vector of n over the primes of the support of P.
BohrPoly bohr_lift(const DirichletPoly& p);
/// Bohr lift over a given prime list (must contain every prime of the support).
BohrPoly bohr_lift(const DirichletPoly& p, const std::vector<long>& primes);

/// Coefficients a_n rho(n) for the completely multiplicative rho given on primes
/// (primes not listed map to 1). Throws InvalidArgument if some |rho(p)| > 1.
DirichletPoly twist(const DirichletPoly& p, const std::map<long, CycloNumber>& rho);

/// Enclosure of sum a_n n^{-s}.
ComplexInterval evaluate(const DirichletPoly& p, const ComplexInterval& s, int precision);
/// Enclosure of n^{-s}.
ComplexInterval power_neg_s(long n, const ComplexInterval& s, int precision);

struct LPartialSum {
  ComplexInterval value;
  /// Bound on |sum_{n > N}| when min Re s > 1; empty otherwise.
  std::optional<Rational> tail_bound;
};
LPartialSum l_partial_sum(const DirichletCharacter& chi, const ComplexInterval& s, long N, int precision = 60);

}  // namespace pds
