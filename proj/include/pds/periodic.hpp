#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "pds/arith.hpp"
#include "pds/characters.hpp"
#include "pds/dirpoly.hpp"

namespace pds {

/// q-periodic arithmetical function; values[k] is the value at n = k + 1.
class PeriodicFn {
 public:
  PeriodicFn() = default;
  PeriodicFn(long q, std::vector<CycloNumber> values);
  static PeriodicFn zero(long q);

  long period() const noexcept { return q_; }
  const std::vector<CycloNumber>& values() const noexcept { return values_; }
  const CycloNumber& operator()(long n) const { return values_[static_cast<std::size_t>(mod_floor(n - 1, q_))]; }
  bool is_zero() const;
  int value_order() const;
  ArithFnView view() const;

  PeriodicFn operator+(const PeriodicFn& o) const;
  PeriodicFn operator-(const PeriodicFn& o) const;
  PeriodicFn scaled(const CycloNumber& c) const;
  PeriodicFn conj() const;
  friend bool operator==(const PeriodicFn& a, const PeriodicFn& b);

 private:
  long q_ = 1;
  std::vector<CycloNumber> values_{CycloNumber()};
};

/// sum_{n=1}^{q} f(n) conj(g(n)).
CycloNumber inner_product(const PeriodicFn& f, const PeriodicFn& g);

/// Identifies E_{q,psi}: psi primitive with conductor dividing q.
struct ESpaceTag {
  long q = 1;
  DirichletCharacter psi;

  long q0() const { return psi.modulus(); }
  friend bool operator==(const ESpaceTag& a, const ESpaceTag& b) { return a.q == b.q && a.psi == b.psi; }
};

/// (T f)(m) = (1/q) sum_{n=1}^{q} e^{-2 pi i m n/q} f(n).
PeriodicFn fourier_transform(const PeriodicFn& f);
/// f(n) = sum_{m=1}^{q} g(m) e^{2 pi i m n/q}; inverse of fourier_transform.
PeriodicFn inverse_fourier_transform(const PeriodicFn& g);

struct XiFunction {
  long d;                  // divisor of q
  DirichletCharacter chi;  // character mod q/d
  PeriodicFn fn;           // xi(n) = chi(n/d) if d | n, else 0
};
/// The q functions xi_chi in order of d, then character index.
const std::vector<XiFunction>& xi_basis(long q);

/// f(n) = f(n^) psi(n/n^) for n = 1..q with n^ = gcd(n, q/q0).
bool e_membership(const PeriodicFn& f, const ESpaceTag& tag);
/// Orthogonal components of f; only nonzero components, ordered by (q0, index of psi).
std::vector<std::pair<ESpaceTag, PeriodicFn>> e_decompose(const PeriodicFn& f);
/// The tag if f is nonzero and has exactly one nonzero component.
std::optional<ESpaceTag> find_unique_component(const PeriodicFn& f);
/// P = sum_{d | q/q0} (f * mu psi)(d) d^{-s}. Throws InvalidArgument if f is not in E_{q,psi}.
DirichletPoly poly_quotient(const PeriodicFn& f, const ESpaceTag& tag);

/// (f * mu psi)(n) for a periodic f and a character psi.
CycloNumber convolve_mu_psi(const PeriodicFn& f, const DirichletCharacter& psi, long n);

}  // namespace pds
