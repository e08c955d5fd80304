#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pds {

struct SuiteResult {
  std::string name;
  long passed = 0;
  long failed = 0;
  std::string first_failure;
  bool ok() const { return failed == 0 && passed > 0; }
};

struct SelftestOptions {
  std::uint64_t seed = 1;
  /// Corrupts one expected value so the harness can be seen to fail.
  bool inject_fault = false;
};

/// Gauss-sum closed form vs direct sum, all chi mod q <= qmax, 1 <= n <= q.
SuiteResult suite_gauss_sums(long qmax = 36, bool fault = false);
/// Both orthogonality relations for q <= qmax.
SuiteResult suite_orthogonality(long qmax = 30);
/// n = phi(n) sum_{d | n} mu^2(d)/phi(d) for n <= nmax.
SuiteResult suite_totient_identity(long nmax = 10000, bool fault = false);
/// (mu * chi_m)(n) = mu(n) if n | m else 0, m <= mmax, n <= 4 mmax.
SuiteResult suite_mu_principal(long mmax = 60);
/// tau(., chi) lies in E_{q, conj(psi)} for chi induced by psi, q <= qmax.
SuiteResult suite_gauss_membership(long qmax = 36);
/// f in E_{q,psi} iff Tf in E_{q,conj(psi)}, on the xi basis, components and seeded random f, q <= qmax.
SuiteResult suite_fourier_membership(long qmax = 24, std::uint64_t seed = 1);
/// inverse_fourier_transform(fourier_transform(f)) = f on seeded random f, q <= qmax.
SuiteResult suite_fourier_roundtrip(long qmax = 36, std::uint64_t seed = 1);

std::vector<SuiteResult> run_selftest(const SelftestOptions& opt = {});

}  // namespace pds
