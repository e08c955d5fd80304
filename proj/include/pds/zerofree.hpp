#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pds/dirpoly.hpp"
#include "pds/upoly.hpp"

namespace pds {

enum class ZeroStatus { ZeroFreeOpen, HasZero, Undetermined };

const char* to_string(ZeroStatus s);

enum class CertificateKind {
  Dominance,
  SeparableFactorization,
  UnivariateRootBound,
  NegativityTwist,
  InteriorWitness,
  AffineReduction,
  None,
};

const char* to_string(CertificateKind k);

/// Root enclosure with its position relative to the unit circle:
/// -1 inside, 0 on the circle (proved), +1 outside.
struct LocatedRoot {
  RootDisk disk;
  int location = 0;
};

struct Certificate {
  CertificateKind kind = CertificateKind::None;
  std::string reason;

  // Dominance: |a_1| and sum_{n>=2} |a_n| (enclosures).
  Interval leading_abs, tail_abs;

  // SeparableFactorization.
  std::vector<BohrPoly> factors;
  std::vector<Certificate> parts;

  // UnivariateRootBound.
  std::size_t variable = 0;
  std::vector<LocatedRoot> roots;

  // NegativityTwist: values on support primes; idempotent_zero lists primes with rho2(p) = 0.
  std::map<long, int> rho;
  std::vector<long> idempotent_zero;
  CycloNumber sum;
  /// Value of the twisted polynomial at 0 (case ii) or the sum itself (case i).
  CycloNumber twisted_constant;

  // InteriorWitness: one enclosure per variable of the Bohr lift.
  std::vector<ComplexInterval> point;
  Rational residual_bound;
  bool certified = false;
  /// Exact coordinates when the witness is an exact algebraic point.
  std::optional<std::vector<CycloNumber>> exact_point;

  // AffineReduction: Q = A(w) + z B(w); sample points of |A|^2 - |B|^2 on the circle.
  std::size_t affine_variable = 0, base_variable = 0;
  std::vector<std::pair<Rational, Rational>> circle_samples;

  // Boundary factors stripped before the decision, as (variable, m, u) with u - z^m.
  std::vector<BohrPoly> removed;
};

struct ZeroFreeVerdict {
  ZeroStatus status = ZeroStatus::Undetermined;
  Certificate certificate;
  BohrPoly lifted;
};

struct ZeroFreeOptions {
  /// Downgrade uncertified HasZero to Undetermined.
  bool certified_only = false;
  Rational margin = Rational(1, 10);
  int precision = 64;
  std::uint64_t seed = 1;
  int starts = 64;
};

/// Requires a_1 != 0 (InvalidArgument otherwise).
ZeroFreeVerdict decide_zero_free(const DirichletPoly& p, const ZeroFreeOptions& opt = {});
ZeroFreeVerdict decide_zero_free(const BohrPoly& q, const ZeroFreeOptions& opt = {});

/// |a_1| >= sum_{n>=2} |a_n|, equality accepted.
std::optional<Certificate> dominance_certificate(const DirichletPoly& p);
std::optional<Certificate> dominance_certificate(const BohrPoly& q);

/// Factors over a partition of the active variables, each in fewer variables;
/// empty if the polynomial does not split.
std::vector<BohrPoly> separable_factorization(const BohrPoly& q);

/// Exact test for one variable. Throws InvalidArgument if q(0) = 0.
ZeroFreeVerdict univariate_open_disk_test(const UPoly& q);

std::optional<Certificate> twist_idempotent_reject(const DirichletPoly& p);
std::optional<Certificate> twist_idempotent_reject(const BohrPoly& q);

/// Rational slices first, then seeded multistart damped Newton on |Q|^2.
std::optional<Certificate> interior_zero_search(const BohrPoly& q, const Rational& margin, int precision,
                                                std::uint64_t seed = 1, int starts = 64);

struct Deflation {
  BohrPoly deflated;
  std::vector<BohrPoly> removed;
};
/// Strips factors u - z_j^m, |u| = 1; q = deflated * prod removed.
Deflation boundary_deflation(const BohrPoly& q);

/// Q = A(w) + z B(w) in two variables: zero-free iff A has no interior zero and
/// |A| >= |B| on the circle. Empty when not applicable or inconclusive.
std::optional<ZeroFreeVerdict> affine_reduction(const BohrPoly& q);

/// Restriction of q to one variable (all others must be inactive).
UPoly to_univariate(const BohrPoly& q, std::size_t var);

/// Re-checks a certificate from scratch; true when it proves what it claims.
bool verify_certificate(const BohrPoly& q, ZeroStatus status, const Certificate& c);

}  // namespace pds
