#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pds/characters.hpp"
#include "pds/stepfn.hpp"
#include "pds/zerofree.hpp"

namespace pds {

enum class CompletenessStatus { Complete, Incomplete, Undetermined };
enum class IncompletenessReason { ZeroFunction, NoCharacterCondition1, ZeroConstantTerm, HasZeroInC0, PrefilterViolation };
enum class DecideMode { Fast, Certify };

const char* to_string(CompletenessStatus s);
const char* to_string(IncompletenessReason r);
const char* to_string(DecideMode m);

struct PrefilterViolation {
  std::string name;    // jump-inequality, sign-coherence, p3mod4-equality, jump-modulus, jump-census, denominator-bound
  std::string detail;
};

struct DecideOptions {
  DecideMode mode = DecideMode::Fast;
  ZeroFreeOptions zero;
  /// Common denominator to use; defaults to the minimal one.
  std::optional<long> t;
};

struct CompletenessVerdict {
  CompletenessStatus status = CompletenessStatus::Undetermined;
  long t = 1;
  /// Primitive character; its modulus is q0.
  std::optional<DirichletCharacter> character;
  std::optional<DirichletPoly> theorem_polynomial;
  std::optional<ZeroFreeVerdict> zero_verdict;
  std::optional<IncompletenessReason> reason;
  std::vector<PrefilterViolation> violations;
};

CompletenessVerdict decide_completeness(const StepFunction& phi, const DecideOptions& opt = {});

/// Primitive psi satisfying condition (1) for the denominator t (minimal if absent).
std::optional<DirichletCharacter> find_character(const StepFunction& phi, std::optional<long> t = {});
/// As find_character, also checked against 2t; throws InternalError on disagreement.
std::optional<DirichletCharacter> associated_character(const StepFunction& phi);

/// sum_{d | q/q0} (g * mu psi)(q/(d q0)) d^{-s}; throws InvalidArgument if condition (1)
/// fails and InternalError if the Gauss-sum identity with the sine coefficients fails.
DirichletPoly theorem_polynomial(const StepFunction& phi, const DirichletCharacter& psi, std::optional<long> t = {});

std::vector<PrefilterViolation> necessary_prefilters(const StepFunction& phi);

struct JumpCensus {
  std::vector<Rational> jumps;  // interior discontinuities
  std::vector<long> moduli;     // n >= 3 with J(2/n) != 0
  long count = 0;               // number of interior discontinuities
  long formula_count = 0;       // (1/2) sum phi(n) over moduli
  bool consistent = true;
};
JumpCensus jump_census(const StepFunction& phi);

/// prod_{p <= 2N+1} p^{floor(log_p 3N)}.
Integer denominator_bound(long N);
/// True if denominator t0 divides denominator_bound(N).
bool divides_denominator_bound(long t0, long N);

}  // namespace pds
