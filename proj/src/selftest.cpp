#include "pds/selftest.hpp"

#include <numeric>
#include <random>

#include "pds/arith.hpp"
#include "pds/characters.hpp"
#include "pds/periodic.hpp"

namespace pds {

namespace {

void record(SuiteResult& r, bool ok, const std::string& what) {
  if (ok) {
    ++r.passed;
  } else {
    if (r.failed == 0) r.first_failure = what;
    ++r.failed;
  }
}

PeriodicFn random_fn(std::mt19937_64& rng, long q, int order) {
  std::uniform_int_distribution<int> coef(-3, 3), expo(0, order - 1);
  std::vector<CycloNumber> v;
  for (long n = 1; n <= q; ++n) v.push_back(CycloNumber(static_cast<long>(coef(rng))) * root_of_unity(order, expo(rng)));
  return PeriodicFn(q, v);
}

}  // namespace

SuiteResult suite_gauss_sums(long qmax, bool fault) {
  SuiteResult r;
  r.name = "gauss-sum formula";
  for (long q = 1; q <= qmax; ++q)
    for (const auto& c : enumerate_characters(q))
      for (long n = 1; n <= q; ++n) {
        CycloNumber direct = gauss_sum_direct(n, c);
        if (fault && q == qmax && n == 1 && c.is_principal()) direct += CycloNumber(1L);
        record(r, direct == gauss_sum_formula(n, c),
               "q=" + std::to_string(q) + " index=" + std::to_string(c.index()) + " n=" + std::to_string(n));
      }
  return r;
}

SuiteResult suite_orthogonality(long qmax) {
  SuiteResult r;
  r.name = "orthogonality";
  for (long q = 1; q <= qmax; ++q) {
    const auto& cs = enumerate_characters(q);
    for (const auto& c : cs) {
      CycloNumber s;
      for (long n = 1; n <= q; ++n) s += c(n);
      record(r, s == CycloNumber(c.is_principal() ? euler_phi(q) : 0L), "character sum q=" + std::to_string(q));
    }
    for (long m = 1; m <= q; ++m) {
      if (std::gcd(m, q) != 1) continue;
      for (long n = 1; n <= q; ++n) {
        CycloNumber s;
        for (const auto& c : cs) s += c.conj_value(n) * c(m);
        record(r, s == CycloNumber((n - m) % q == 0 ? euler_phi(q) : 0L),
               "q=" + std::to_string(q) + " m=" + std::to_string(m) + " n=" + std::to_string(n));
      }
    }
  }
  return r;
}

SuiteResult suite_totient_identity(long nmax, bool fault) {
  SuiteResult r;
  r.name = "n = phi(n) sum mu^2(d)/phi(d)";
  for (long n = 1; n <= nmax; ++n) {
    Rational s = 0;
    for (long d : divisors(n))
      if (mobius(d) != 0) s += Rational(1, euler_phi(d));
    s *= euler_phi(n);
    record(r, s == n + (fault && n == nmax ? 1 : 0), "n=" + std::to_string(n));
  }
  return r;
}

SuiteResult suite_mu_principal(long mmax) {
  SuiteResult r;
  r.name = "(mu * chi_m)(n)";
  ArithFnView mu = mobius_fn();
  for (long m = 1; m <= mmax; ++m) {
    ArithFnView chi = principal_fn(m);
    for (long n = 1; n <= 4 * mmax; ++n)
      record(r, dirichlet_convolve(mu, chi, n) == CycloNumber(m % n == 0 ? static_cast<long>(mobius(n)) : 0L),
             "m=" + std::to_string(m) + " n=" + std::to_string(n));
  }
  return r;
}

SuiteResult suite_gauss_membership(long qmax) {
  SuiteResult r;
  r.name = "gauss sums in E_{q,conj psi}";
  for (long q = 1; q <= qmax; ++q)
    for (const auto& chi : enumerate_characters(q)) {
      std::vector<CycloNumber> v;
      for (long n = 1; n <= q; ++n) v.push_back(gauss_sum_direct(n, chi));
      record(r, e_membership(PeriodicFn(q, v), ESpaceTag{q, chi.primitive().conj()}),
             "q=" + std::to_string(q) + " index=" + std::to_string(chi.index()));
    }
  return r;
}

SuiteResult suite_fourier_membership(long qmax, std::uint64_t seed) {
  SuiteResult r;
  r.name = "membership under the Fourier transform";
  std::mt19937_64 rng(seed);
  for (long q = 1; q <= qmax; ++q) {
    std::vector<PeriodicFn> samples{random_fn(rng, q, 1)};
    for (const auto& xi : xi_basis(q)) samples.push_back(xi.fn);
    for (const auto& [tag, part] : e_decompose(random_fn(rng, q, 4))) samples.push_back(part);
    for (const auto& f : samples) {
      PeriodicFn tf = fourier_transform(f);
      for (long q0 : divisors(q))
        for (const auto& psi : primitive_characters(q0))
          record(r, e_membership(f, ESpaceTag{q, psi}) == e_membership(tf, ESpaceTag{q, psi.conj()}),
                 "q=" + std::to_string(q) + " q0=" + std::to_string(q0));
    }
  }
  return r;
}

SuiteResult suite_fourier_roundtrip(long qmax, std::uint64_t seed) {
  SuiteResult r;
  r.name = "fourier round trip";
  std::mt19937_64 rng(seed);
  for (long q = 1; q <= qmax; ++q)
    for (int order : {1, 4, 6}) {
      PeriodicFn f = random_fn(rng, q, order);
      record(r, inverse_fourier_transform(fourier_transform(f)) == f && fourier_transform(inverse_fourier_transform(f)) == f,
             "q=" + std::to_string(q));
    }
  return r;
}

std::vector<SuiteResult> run_selftest(const SelftestOptions& opt) {
  return {suite_gauss_sums(36, opt.inject_fault), suite_orthogonality(30),
          suite_totient_identity(10000, opt.inject_fault), suite_mu_principal(60),
          suite_gauss_membership(36),  suite_fourier_membership(24, opt.seed),
          suite_fourier_roundtrip(36, opt.seed)};
}

}  // namespace pds
