#include "pds/arith.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>

#include "pds/error.hpp"

namespace pds {
namespace {

constexpr long kSieveCap = 1L << 22;

class Sieve {
 public:
  long spf(long n) {
    {
      std::shared_lock lock(mutex_);
      if (n < static_cast<long>(spf_.size())) return spf_[static_cast<std::size_t>(n)];
    }
    std::unique_lock lock(mutex_);
    if (n >= static_cast<long>(spf_.size())) grow(std::min(kSieveCap, std::max(2 * n, 1024L)));
    return spf_[static_cast<std::size_t>(n)];
  }

 private:
  void grow(long limit) {
    spf_.assign(static_cast<std::size_t>(limit) + 1, 0);
    for (long i = 2; i <= limit; ++i) {
      if (spf_[static_cast<std::size_t>(i)] != 0) continue;
      for (long j = i; j <= limit; j += i)
        if (spf_[static_cast<std::size_t>(j)] == 0) spf_[static_cast<std::size_t>(j)] = i;
    }
  }
  std::shared_mutex mutex_;
  std::vector<long> spf_;
};

Sieve& sieve() {
  static Sieve s;
  return s;
}

void require_positive(long n) {
  if (n < 1) throw InvalidArgument("expected a positive integer, got " + std::to_string(n));
}

}  // namespace

Factorization factorize(long n) {
  require_positive(n);
  Factorization out;
  auto push = [&](long p) {
    if (!out.empty() && out.back().first == p) ++out.back().second;
    else out.emplace_back(p, 1);
  };
  if (n < kSieveCap) {
    while (n > 1) {
      long p = sieve().spf(n);
      push(p);
      n /= p;
    }
    return out;
  }
  for (long p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      push(p);
      n /= p;
    }
  }
  if (n > 1) push(n);
  return out;
}

bool is_prime(long n) {
  if (n < 2) return false;
  auto f = factorize(n);
  return f.size() == 1 && f[0].second == 1;
}

std::vector<long> primes_up_to(long n) {
  std::vector<long> out;
  for (long p = 2; p <= n; ++p)
    if (is_prime(p)) out.push_back(p);
  return out;
}

int mobius(long n) {
  int m = 1;
  for (auto [p, e] : factorize(n)) {
    if (e > 1) return 0;
    m = -m;
  }
  return m;
}

long euler_phi(long n) {
  long r = n;
  for (auto [p, e] : factorize(n)) r -= r / p;
  return r;
}

std::vector<long> divisors(long n) {
  std::vector<long> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    long pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long divisor_count(long n) {
  long c = 1;
  for (auto [p, e] : factorize(n)) c *= e + 1;
  return c;
}

int valuation(long n, long p) {
  require_positive(n);
  int e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0) r *= b;
  return r;
}

ArithFnView mobius_fn() { return {[](long n) { return CycloNumber(static_cast<long>(mobius(n))); }, 0, 0}; }
ArithFnView constant_one_fn() { return {[](long) { return CycloNumber(1L); }, 1, 0}; }
ArithFnView principal_fn(long m) {
  return {[m](long n) { return CycloNumber(std::gcd(n, m) == 1 ? 1L : 0L); }, m, 0};
}

CycloNumber dirichlet_convolve(const ArithFnView& f, const ArithFnView& g, long n) {
  require_positive(n);
  CycloNumber sum;
  for (long d : divisors(n)) {
    if (g.support > 0 && d > g.support) continue;
    if (f.support > 0 && n / d > f.support) continue;
    CycloNumber gd = g(d);
    if (gd.is_zero()) continue;
    CycloNumber fd = f(n / d);
    if (fd.is_zero()) continue;
    sum += fd * gd;
  }
  return sum;
}

}  // namespace pds
