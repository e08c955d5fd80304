#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pds/characters.hpp"
#include "pds/decide.hpp"
#include "pds/stepfn.hpp"

namespace pds {

struct ScanEntry {
  std::string descriptor;
  StepFunction phi;
  CompletenessVerdict verdict;
  /// Completeness predicted by a closed-form law, when the scan has one.
  std::optional<bool> expected;
};

struct ScanReport {
  std::string kind;
  std::vector<ScanEntry> entries;  // in candidate order
  std::vector<std::string> undetermined;

  std::size_t count(CompletenessStatus s) const;
  std::vector<std::string> complete() const;
  /// Entries whose verdict disagrees with `expected`.
  std::vector<std::string> mismatches() const;
};

struct ScanOptions {
  DecideOptions decide;
  int jobs = 1;
};

/// Decides every candidate; results keep the input order regardless of jobs.
ScanReport run_scan(const std::string& kind, std::vector<std::pair<std::string, StepFunction>> inputs,
                    const ScanOptions& opt = {});

/// sum_{m <= (nq-1)/2, gcd(m,n)=1} psi(m) chi_(2m/(nq),1). psi must be primitive, even, mod q > 1.
StepFunction build_sn(const DirichletCharacter& psi, long n);

struct SnCombination {
  StepFunction phi;
  /// |c_1| > (d(u u') - 1) max_{d | u, d > 1} |c_d|, u' the part of u coprime to q.
  bool hypothesis = false;
};
/// sum_{d | u} c_d S_d for even u; keys of c must divide u.
SnCombination sn_combination(const DirichletCharacter& psi, long u, const std::map<long, CycloNumber>& c);

enum class CombVariant { V, VComplement, EvenT };
const char* to_string(CombVariant v);
/// V = (0,1/t) u (2/t,3/t) u ...; V and its complement need odd t >= 3, EvenT needs even t >= 4.
StepFunction build_comb(long t, CombVariant variant);

/// chi_(0,1) + chi_(2/t,1) + chi_(4/t,1) + ... + chi_((t-1)/t,1), odd t >= 3.
StepFunction build_ladder(long t);

/// The two alternating combs with denominator n.
std::pair<std::string, std::string> alternating_combs(long n);

/// Proper open sets that are unions of cells (k/p^l, (k+1)/p^l) with adjacent cells merged and
/// p^l minimal for the boundary. At most 20 cells.
ScanReport enumerate_pl(long p, long l, const ScanOptions& opt = {});

/// chi_(a,b) for Farey pairs 0 <= a < b <= 1 of order max_denominator.
ScanReport scan_intervals(long max_denominator, const ScanOptions& opt = {});

/// chi_(0,r) for rationals 0 < r <= 1 with denominator <= max_denominator.
ScanReport kozlov_scan(long max_denominator, const ScanOptions& opt = {});

/// The ten intervals (alpha, beta) whose indicators are complete, as descriptors.
const std::vector<std::string>& complete_interval_descriptors();

struct SumFamilyResult {
  bool hypothesis = false;
  long t = 1;
  CompletenessVerdict verdict;
};
/// Checks h_1 = ... = h_n != 0 with h_i(m) = J_i(2m/t) over a common odd t, and that every phi_i is
/// complete; decides sum c_i phi_i. Throws InvalidArgument if no odd common denominator exists and
/// InternalError if the hypothesis holds, all c_i > 0, and the sum is not Complete.
SumFamilyResult sum_family_check(const std::vector<StepFunction>& phis, const std::vector<Rational>& c,
                                 const DecideOptions& opt = {});

/// "half": c1 chi_(0,1/2) + c2 chi_(1/2,1), complete iff |c1+c2| >= |c1-c2|.
/// "third": c1 chi_(0,2/3) + c2 chi_(1/3,1), complete iff |c1+c2| >= |c2|.
StepFunction family_function(const std::string& family, const Rational& c1, const Rational& c2);
bool family_law(const std::string& family, const Rational& c1, const Rational& c2);
/// All (c1, c2) in grid^2, not both zero.
ScanReport coefficient_family_sweep(const std::string& family, const std::vector<Rational>& grid,
                                    const ScanOptions& opt = {});

/// "(a,b)" with reduced fractions.
std::string interval_descriptor(const Rational& a, const Rational& b);

}  // namespace pds
