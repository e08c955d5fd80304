#include <random>

#include "doctest.h"
#include "pds/arith.hpp"

using namespace pds;

TEST_CASE("factorization and classical functions") {
  CHECK(factorize(1).empty());
  CHECK(factorize(60) == Factorization{{2, 2}, {3, 1}, {5, 1}});
  CHECK(factorize(30) == Factorization{{2, 1}, {3, 1}, {5, 1}});
  CHECK(mobius(1) == 1);
  CHECK(mobius(6) == 1);
  CHECK(mobius(12) == 0);
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(9) == 6);
  CHECK(euler_phi(101) == 100);
  CHECK(divisors(1) == std::vector<long>{1});
  CHECK(divisors(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(6) == std::vector<long>{1, 2, 3, 6});
  CHECK(divisor_count(1) == 1);
  CHECK(divisor_count(36) == 9);
}

TEST_CASE("totient brute force") {
  for (long n = 1; n <= 300; ++n) {
    long c = 0;
    for (long m = 1; m <= n; ++m) c += std::gcd(m, n) == 1;
    CHECK(euler_phi(n) == c);
  }
}

TEST_CASE("convolution examples") {
  ArithFnView mu = mobius_fn(), one = constant_one_fn();
  CHECK(dirichlet_convolve(mu, one, 12).is_zero());
  CHECK(dirichlet_convolve(mu, one, 1) == CycloNumber(1L));
  std::vector<long> g{-1, 0, -1, 2};
  ArithFnView gv{[&](long n) { return CycloNumber(g[static_cast<std::size_t>((n - 1) % 4)]); }, 4, 0};
  CHECK(dirichlet_convolve(gv, mu, 4) == CycloNumber(2L));
  CHECK(dirichlet_convolve(mu, principal_fn(6), 4).is_zero());
}

TEST_CASE("d(n^2) = (mu^2 * d)(n)") {
  ArithFnView mu2{[](long n) { return CycloNumber(static_cast<long>(mobius(n) * mobius(n))); }, 0, 0};
  ArithFnView d{[](long n) { return CycloNumber(divisor_count(n)); }, 0, 0};
  for (long n = 1; n <= 100; ++n) CHECK(dirichlet_convolve(mu2, d, n) == CycloNumber(divisor_count(n * n)));
}

TEST_CASE("n = phi(n) sum mu^2(d)/phi(d)") {
  for (long n = 1; n <= 10000; ++n) {
    Rational s = 0;
    for (long d : divisors(n)) {
      int m = mobius(d);
      if (m != 0) s += Rational(1, euler_phi(d));
    }
    s *= euler_phi(n);
    CHECK(s == n);
  }
}

TEST_CASE("multiplicativity") {
  for (long m = 1; m <= 500; m += 7)
    for (long n = 1; n <= 500; n += 3) {
      if (std::gcd(m, n) != 1) continue;
      CHECK(mobius(m * n) == mobius(m) * mobius(n));
      CHECK(euler_phi(m * n) == euler_phi(m) * euler_phi(n));
    }
}

TEST_CASE("(mu * chi_m)(n)") {
  ArithFnView mu = mobius_fn();
  for (long m = 1; m <= 60; ++m)
    for (long n = 1; n <= 240; ++n) {
      CycloNumber v = dirichlet_convolve(mu, principal_fn(m), n);
      CHECK(v == CycloNumber(m % n == 0 ? static_cast<long>(mobius(n)) : 0L));
    }
}

TEST_CASE("convolution commutative and associative") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<long> a(30), b(30), c(30);
    for (auto* v : {&a, &b, &c})
      for (auto& x : *v) x = d(rng);
    auto view = [](const std::vector<long>& v) {
      return ArithFnView{[&v](long n) { return CycloNumber(n <= 30 ? v[static_cast<std::size_t>(n - 1)] : 0L); }, 0, 30};
    };
    ArithFnView fa = view(a), fb = view(b), fc = view(c);
    ArithFnView fab{[&](long n) { return dirichlet_convolve(fa, fb, n); }, 0, 0};
    ArithFnView fbc{[&](long n) { return dirichlet_convolve(fb, fc, n); }, 0, 0};
    for (long n = 1; n <= 60; ++n) {
      CHECK(dirichlet_convolve(fa, fb, n) == dirichlet_convolve(fb, fa, n));
      CHECK(dirichlet_convolve(fab, fc, n) == dirichlet_convolve(fa, fbc, n));
    }
  }
}
