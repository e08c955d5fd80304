#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "pds/cyclo.hpp"

namespace pds {

/// (prime, exponent) pairs with strictly increasing primes.
using Factorization = std::vector<std::pair<long, int>>;

Factorization factorize(long n);
bool is_prime(long n);
std::vector<long> primes_up_to(long n);
int mobius(long n);
long euler_phi(long n);
std::vector<long> divisors(long n);
long divisor_count(long n);
/// Largest e with p^e | n.
int valuation(long n, long p);
long ipow(long b, int e);

/// An arithmetical function n -> value. period 0 means aperiodic; support 0
/// means not finitely supported, otherwise value(n) = 0 for n > support.
struct ArithFnView {
  std::function<CycloNumber(long)> value;
  long period = 0;
  long support = 0;

  CycloNumber operator()(long n) const { return value(n); }
};

ArithFnView mobius_fn();
ArithFnView constant_one_fn();
/// The principal character mod m as an arithmetical function.
ArithFnView principal_fn(long m);

/// sum_{d | n} f(n/d) g(d).
CycloNumber dirichlet_convolve(const ArithFnView& f, const ArithFnView& g, long n);

}  // namespace pds
