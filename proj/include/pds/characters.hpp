#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "pds/cyclo.hpp"

namespace pds {

/// A Dirichlet character mod q, stored as exponents of zeta_order on residues.
class DirichletCharacter {
 public:
  DirichletCharacter() = default;

  long modulus() const noexcept { return q_; }
  /// Order of the character (order of its value group).
  int order() const noexcept { return order_; }
  /// Exponent e with chi(n) = zeta_order^e, or -1 when gcd(n, q) > 1.
  int exponent(long n) const { return exps_[static_cast<std::size_t>(mod_floor(n, q_))]; }
  CycloNumber operator()(long n) const;
  CycloNumber conj_value(long n) const;
  const std::vector<int>& exponents() const noexcept { return exps_; }

  long conductor() const noexcept { return conductor_; }
  /// Position in enumerate_characters(modulus()).
  std::size_t index() const noexcept { return index_; }
  /// Position of the inducing primitive character in enumerate_characters(conductor()).
  std::size_t inducing_index() const noexcept { return inducing_index_; }
  /// CRT exponent tuple used for the deterministic ordering.
  const std::vector<int>& crt_tuple() const noexcept { return tuple_; }
  int parity() const;
  bool is_primitive() const noexcept { return conductor_ == q_; }
  bool is_principal() const noexcept { return index_ == 0; }
  bool is_real() const noexcept { return order_ <= 2; }

  DirichletCharacter conj() const;
  /// The primitive character inducing this one.
  DirichletCharacter primitive() const;

  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.q_ == b.q_ && a.index_ == b.index_;
  }
  friend bool operator!=(const DirichletCharacter& a, const DirichletCharacter& b) { return !(a == b); }

 private:
  friend class CharacterTable;
  long q_ = 1;
  int order_ = 1;
  std::vector<int> exps_{0};
  std::vector<int> tuple_;
  long conductor_ = 1;
  std::size_t index_ = 0;
  std::size_t inducing_index_ = 0;
  std::shared_ptr<const std::vector<CycloNumber>> powers_;
};

/// All phi(q) characters mod q in lexicographic CRT-tuple order; index 0 is principal.
const std::vector<DirichletCharacter>& enumerate_characters(long q);
/// Primitive characters mod q in enumeration order.
std::vector<DirichletCharacter> primitive_characters(long q);
/// (conductor, inducing primitive character).
std::pair<long, DirichletCharacter> conductor(const DirichletCharacter& chi);
/// The character psi * chi_q mod q. Throws InvalidArgument if modulus(psi) does not divide q.
DirichletCharacter induce(const DirichletCharacter& psi, long q);
/// Character mod q whose exponent table (over zeta_order) matches; throws if none.
DirichletCharacter character_from_exponents(long q, int order, const std::vector<int>& exps);
/// Character mod q with the given values on the listed residues; throws if none or ambiguous.
DirichletCharacter character_from_values(long q, const std::vector<std::pair<long, CycloNumber>>& values);
/// Pointwise product of two characters with the same modulus.
DirichletCharacter multiply(const DirichletCharacter& a, const DirichletCharacter& b);

/// (n | p) for an odd prime p. Throws InvalidArgument otherwise.
int legendre_symbol(long n, long p);
/// The Legendre symbol mod p as a character.
DirichletCharacter legendre_character(long p);

/// sum_{m=1}^{q} chi(m) e^{2 pi i m n / q}.
CycloNumber gauss_sum_direct(long n, const DirichletCharacter& chi);
/// Closed form through the inducing primitive character.
CycloNumber gauss_sum_formula(long n, const DirichletCharacter& chi);
/// tau(psi) = gauss_sum_direct(1, psi), cached.
const CycloNumber& gauss_sum(const DirichletCharacter& psi);

/// psi = psi1 * psi2 with psi_i mod q_i. Requires q = q1 q2, gcd(q1, q2) = 1.
std::pair<DirichletCharacter, DirichletCharacter> crt_split(const DirichletCharacter& psi, long q1, long q2);

}  // namespace pds
