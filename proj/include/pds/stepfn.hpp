#pragma once

#include <complex>
#include <string>
#include <vector>

#include "pds/periodic.hpp"

namespace pds {

struct StepPiece {
  Rational from, to;
  CycloNumber value;
};

/// Step function on (0,1) with rational breakpoints, in minimal form.
class StepFunction {
 public:
  StepFunction();  // the zero function

  const std::vector<Rational>& breakpoints() const noexcept { return breaks_; }
  const std::vector<CycloNumber>& piece_values() const noexcept { return values_; }
  int value_order() const noexcept { return order_; }
  std::size_t piece_count() const noexcept { return values_.size(); }
  std::vector<StepPiece> pieces() const;
  bool is_zero() const;

  /// phi(x+) for x in [0,1) and phi(x-) for x in (0,1].
  const CycloNumber& right_limit(const Rational& x) const;
  const CycloNumber& left_limit(const Rational& x) const;

  friend bool operator==(const StepFunction& a, const StepFunction& b);
  std::string debug_string() const;

 private:
  friend StepFunction make_step(const std::vector<StepPiece>&, int);
  std::vector<Rational> breaks_;
  std::vector<CycloNumber> values_;
  int order_ = 1;
};

/// Builds the minimal representation. Pieces must tile (0,1) without gaps or
/// overlaps; their order does not matter. value_order is the declared value field.
StepFunction make_step(const std::vector<StepPiece>& pieces, int value_order = 1);
/// Indicator of the open interval (a, b), 0 <= a < b <= 1.
StepFunction indicator(const Rational& a, const Rational& b);
/// sum c_i phi_i, merged.
StepFunction linear_combine(const std::vector<std::pair<CycloNumber, StepFunction>>& terms);

/// Jump of the odd 2-periodic extension at x.
CycloNumber jump(const StepFunction& phi, const Rational& x);
/// lcm of the denominators of the interior breakpoints.
long minimal_denominator(const StepFunction& phi);

struct JumpData {
  long t = 1;
  long q = 2;
  PeriodicFn g;  // g(m) = J(m/t), period q = 2t
};
/// Throws InvalidArgument if t is not a multiple of minimal_denominator(phi).
JumpData jump_data(const StepFunction& phi, long t);
/// f(n) = sum_{m=1}^{q} J(m/t) e^{2 pi i m n/q}; checks fourier_transform(f) == g.
PeriodicFn sine_coeff_fn(const StepFunction& phi, long t);

struct BwCoefficient {
  long n;
  CycloNumber f;              // exact f(n); a_n = f(n) / (sqrt(2) pi n)
  std::complex<double> a;     // floating rendering of a_n
};
std::vector<BwCoefficient> bw_coefficients(const StepFunction& phi, long N);

}  // namespace pds
