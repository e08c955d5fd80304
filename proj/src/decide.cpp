#include "pds/decide.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "pds/arith.hpp"
#include "pds/error.hpp"

namespace pds {

const char* to_string(CompletenessStatus s) {
  switch (s) {
    case CompletenessStatus::Complete: return "Complete";
    case CompletenessStatus::Incomplete: return "Incomplete";
    case CompletenessStatus::Undetermined: return "Undetermined";
  }
  return "?";
}

const char* to_string(IncompletenessReason r) {
  switch (r) {
    case IncompletenessReason::ZeroFunction: return "ZeroFunction";
    case IncompletenessReason::NoCharacterCondition1: return "NoCharacterCondition1";
    case IncompletenessReason::ZeroConstantTerm: return "ZeroConstantTerm";
    case IncompletenessReason::HasZeroInC0: return "HasZeroInC0";
    case IncompletenessReason::PrefilterViolation: return "PrefilterViolation";
  }
  return "?";
}

const char* to_string(DecideMode m) { return m == DecideMode::Fast ? "fast" : "certify"; }

namespace {

long pick_t(const StepFunction& phi, std::optional<long> t) { return t ? *t : minimal_denominator(phi); }

std::string frac(long s, long t) { return to_string(make_rational(s, t)); }

bool all_real(const StepFunction& phi) {
  return std::all_of(phi.piece_values().begin(), phi.piece_values().end(),
                     [](const CycloNumber& v) { return v.is_real(); });
}

}  // namespace

std::optional<DirichletCharacter> find_character(const StepFunction& phi, std::optional<long> t_opt) {
  if (phi.is_zero()) return std::nullopt;
  JumpData jd = jump_data(phi, pick_t(phi, t_opt));
  std::optional<DirichletCharacter> found;
  for (long q0 : divisors(jd.q))
    for (const auto& psi : primitive_characters(q0)) {
      if (!e_membership(jd.g, ESpaceTag{jd.q, psi})) continue;
      if (found) throw InternalError("two characters satisfy condition (1)");
      found = psi;
    }
  return found;
}

std::optional<DirichletCharacter> associated_character(const StepFunction& phi) {
  if (phi.is_zero()) return std::nullopt;
  const long t = minimal_denominator(phi);
  auto a = find_character(phi, t);
  auto b = find_character(phi, 2 * t);
  if (a.has_value() != b.has_value() || (a && *a != *b))
    throw InternalError("associated character depends on the denominator");
  return a;
}

DirichletPoly theorem_polynomial(const StepFunction& phi, const DirichletCharacter& psi, std::optional<long> t_opt) {
  if (!psi.is_primitive()) throw InvalidArgument("theorem_polynomial: character is not primitive");
  const long t = pick_t(phi, t_opt);
  JumpData jd = jump_data(phi, t);
  const long q0 = psi.modulus();
  if (jd.q % q0 != 0 || !e_membership(jd.g, ESpaceTag{jd.q, psi}))
    throw InvalidArgument("theorem_polynomial: condition (1) fails for this character");
  PeriodicFn f = sine_coeff_fn(phi, t);
  const CycloNumber& tau = gauss_sum(psi);
  const DirichletCharacter psibar = psi.conj();
  DirichletPoly p;
  for (long d : divisors(jd.q / q0)) {
    CycloNumber c = convolve_mu_psi(jd.g, psi, jd.q / (d * q0));
    if (convolve_mu_psi(f, psibar, d) != tau * CycloNumber(d) * c)
      throw InternalError("sine-coefficient identity fails at d = " + std::to_string(d));
    if (!c.is_zero()) p.add_term(d, c);
  }
  return p;
}

// ---------------------------------------------------------------- prefilters

Integer denominator_bound(long N) {
  Integer out = 1;
  if (N < 1) return out;
  for (long p : primes_up_to(2 * N + 1)) {
    long pe = 1;
    while (pe * p <= 3 * N) {
      pe *= p;
      out *= p;
    }
  }
  return out;
}

bool divides_denominator_bound(long t0, long N) {
  if (N < 1) return t0 == 1;
  for (auto [p, e] : factorize(t0)) {
    if (p > 2 * N + 1) return false;
    long pe = 1;
    int allowed = 0;
    while (pe * p <= 3 * N) {
      pe *= p;
      ++allowed;
    }
    if (e > allowed) return false;
  }
  return true;
}

JumpCensus jump_census(const StepFunction& phi) {
  JumpCensus c;
  const auto& br = phi.breakpoints();
  for (const auto& x : br)
    if (x > 0 && x < 1 && !jump(phi, x).is_zero()) c.jumps.push_back(x);
  c.count = static_cast<long>(c.jumps.size());
  const long t = minimal_denominator(phi);
  std::set<Rational> predicted;
  for (long n : divisors(2 * t)) {
    if (n < 3 || jump(phi, make_rational(2, n)).is_zero()) continue;
    c.moduli.push_back(n);
    c.formula_count += euler_phi(n);
    for (long m = 1; 2 * m < n; ++m)
      if (std::gcd(m, n) == 1) predicted.insert(make_rational(2 * m, n));
  }
  c.formula_count /= 2;
  std::set<Rational> actual(c.jumps.begin(), c.jumps.end());
  c.consistent = predicted == actual && c.formula_count == c.count;
  return c;
}

std::vector<PrefilterViolation> necessary_prefilters(const StepFunction& phi) {
  std::vector<PrefilterViolation> out;
  if (phi.is_zero()) return out;
  const long t = minimal_denominator(phi);
  auto J = [&](long s, long d) { return jump(phi, make_rational(s, d)); };

  if (all_real(phi)) {
    const CycloNumber two_phi0 = J(2, 1);
    const int s0 = sign(two_phi0);
    std::vector<long> primes;
    for (auto [p, e] : factorize(2 * t)) primes.push_back(p);
    if (s0 != 0 && primes.size() < 20) {
      for (unsigned long mask = 1; mask < (1UL << primes.size()); ++mask) {
        CycloNumber S(0);
        for (unsigned long sub = mask;; sub = (sub - 1) & mask) {
          if (sub == 0) break;
          long prod = 1;
          int bits = 0;
          for (std::size_t i = 0; i < primes.size(); ++i)
            if (sub & (1UL << i)) {
              prod *= primes[i];
              ++bits;
            }
          CycloNumber v = J(2, prod);
          S += bits % 2 == 1 ? v : -v;
        }
        int cmp = sign(two_phi0 - S);
        if (cmp * s0 <= 0) {
          std::ostringstream d;
          d << "primes {";
          bool first = true;
          for (std::size_t i = 0; i < primes.size(); ++i)
            if (mask & (1UL << i)) {
              d << (first ? "" : ",") << primes[i];
              first = false;
            }
          d << "}";
          out.push_back({"jump-inequality", d.str()});
          break;
        }
      }
    }
    if (s0 == 0) {
      bool pos = false, neg = false;
      for (long p : primes) {
        int s = sign(J(2, p));
        pos = pos || s > 0;
        neg = neg || s < 0;
      }
      if (pos && neg) out.push_back({"sign-coherence", "J(2/p) takes both signs"});
    }
    for (auto [p, e] : factorize(t)) {
      if (p % 4 != 3) continue;
      long pk = 1;
      for (int k = 1; k <= e; ++k) {
        pk *= p;
        std::optional<CycloNumber> odd, even;
        bool bad = false;
        for (long m = 1; m < pk && !bad; ++m) {
          if (m % p == 0) continue;
          auto& slot = m % 2 == 1 ? odd : even;
          CycloNumber v = J(m, pk);
          if (!slot)
            slot = v;
          else if (*slot != v)
            bad = true;
        }
        if (bad) out.push_back({"p3mod4-equality", "denominator " + std::to_string(pk)});
      }
    }
  }

  for (long t0 : divisors(t)) {
    bool bad = false;
    for (long s = 1; s <= 2 * t0 && !bad; ++s) {
      if (std::gcd(s, t0) != 1) continue;
      long base = std::gcd(s, 2L);
      if (compare_abs(J(s, t0), J(base, t0)) != 0) {
        out.push_back({"jump-modulus", "|J(" + frac(s, t0) + ")| != |J(" + frac(base, t0) + ")|"});
        bad = true;
      }
    }
  }

  JumpCensus c = jump_census(phi);
  if (!c.consistent)
    out.push_back({"jump-census", std::to_string(c.count) + " jumps vs formula " + std::to_string(c.formula_count)});
  if (c.count > 0) {
    for (const auto& x : c.jumps) {
      long t0 = x.get_den().get_si();
      if (!divides_denominator_bound(t0, c.count)) {
        out.push_back({"denominator-bound", "jump at " + to_string(x)});
        break;
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------- pipeline

CompletenessVerdict decide_completeness(const StepFunction& phi, const DecideOptions& opt) {
  CompletenessVerdict v;
  v.t = phi.is_zero() ? 1 : pick_t(phi, opt.t);
  if (phi.is_zero()) {
    v.status = CompletenessStatus::Incomplete;
    v.reason = IncompletenessReason::ZeroFunction;
    return v;
  }
  jump_data(phi, v.t);  // validates t
  if (opt.mode == DecideMode::Fast) {
    v.violations = necessary_prefilters(phi);
    if (!v.violations.empty()) {
      v.status = CompletenessStatus::Incomplete;
      v.reason = IncompletenessReason::PrefilterViolation;
      return v;
    }
  }
  v.character = find_character(phi, v.t);
  if (!v.character) {
    v.status = CompletenessStatus::Incomplete;
    v.reason = IncompletenessReason::NoCharacterCondition1;
  } else {
    v.theorem_polynomial = theorem_polynomial(phi, *v.character, v.t);
    if (v.theorem_polynomial->constant_term().is_zero()) {
      v.status = CompletenessStatus::Incomplete;
      v.reason = IncompletenessReason::ZeroConstantTerm;
    } else {
      ZeroFreeOptions zo = opt.zero;
      if (opt.mode == DecideMode::Certify) zo.certified_only = true;
      v.zero_verdict = decide_zero_free(*v.theorem_polynomial, zo);
      switch (v.zero_verdict->status) {
        case ZeroStatus::ZeroFreeOpen:
          v.status = CompletenessStatus::Complete;
          if (v.character->parity() != 1) throw InternalError("complete function with odd associated character");
          break;
        case ZeroStatus::HasZero:
          v.status = CompletenessStatus::Incomplete;
          v.reason = IncompletenessReason::HasZeroInC0;
          break;
        case ZeroStatus::Undetermined:
          v.status = CompletenessStatus::Undetermined;
          break;
      }
    }
  }
  if (opt.mode == DecideMode::Certify) {
    v.violations = necessary_prefilters(phi);
    if (!v.violations.empty() && v.status == CompletenessStatus::Complete)
      throw InternalError("prefilter " + v.violations[0].name + " contradicts a Complete verdict");
  }
  return v;
}

}  // namespace pds
