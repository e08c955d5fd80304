#include "pds/characters.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <shared_mutex>

#include "pds/arith.hpp"
#include "pds/error.hpp"

namespace pds {
namespace {

struct Generator {
  long pe;                // prime power modulus of the component
  int order;              // order of the generator
  std::vector<int> logs;  // discrete log for each residue mod pe, -1 for non-units
};

long powmod(long b, long e, long m) {
  long r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = static_cast<long>((static_cast<__int128>(r) * b) % m);
    b = static_cast<long>((static_cast<__int128>(b) * b) % m);
    e >>= 1;
  }
  return r;
}

long primitive_root_mod_prime_power(long p, int e) {
  long phi_p = p - 1;
  auto f = factorize(phi_p);
  long g = 2;
  for (;; ++g) {
    bool ok = true;
    for (auto [r, k] : f)
      if (powmod(g, phi_p / r, p) == 1) ok = false;
    if (ok) break;
  }
  if (e >= 2 && powmod(g, p - 1, p * p) == 1) g += p;
  return g;
}

std::vector<Generator> generators(long q) {
  std::vector<Generator> gens;
  for (auto [p, e] : factorize(q)) {
    long pe = ipow(p, e);
    if (p == 2) {
      if (e == 1) continue;
      Generator minus{pe, 2, std::vector<int>(static_cast<std::size_t>(pe), -1)};
      if (e == 2) {
        minus.logs[1] = 0;
        minus.logs[3] = 1;
        gens.push_back(minus);
        continue;
      }
      int ord5 = static_cast<int>(pe / 4);
      Generator five{pe, ord5, std::vector<int>(static_cast<std::size_t>(pe), -1)};
      long x = 1;
      for (int k = 0; k < ord5; ++k) {
        minus.logs[static_cast<std::size_t>(x)] = 0;
        five.logs[static_cast<std::size_t>(x)] = k;
        long y = pe - x;
        minus.logs[static_cast<std::size_t>(y)] = 1;
        five.logs[static_cast<std::size_t>(y)] = k;
        x = x * 5 % pe;
      }
      gens.push_back(minus);
      gens.push_back(five);
      continue;
    }
    long g = primitive_root_mod_prime_power(p, e);
    int ord = static_cast<int>(euler_phi(pe));
    Generator gen{pe, ord, std::vector<int>(static_cast<std::size_t>(pe), -1)};
    long x = 1;
    for (int k = 0; k < ord; ++k) {
      gen.logs[static_cast<std::size_t>(x)] = k;
      x = x * g % pe;
    }
    gens.push_back(gen);
  }
  return gens;
}

class PowerCache {
 public:
  std::shared_ptr<const std::vector<CycloNumber>> get(int L) {
    {
      std::shared_lock lock(mutex_);
      auto it = cache_.find(L);
      if (it != cache_.end()) return it->second;
    }
    auto v = std::make_shared<std::vector<CycloNumber>>();
    for (int k = 0; k < L; ++k) v->push_back(root_of_unity(L, k));
    std::unique_lock lock(mutex_);
    return cache_.emplace(L, std::move(v)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<int, std::shared_ptr<const std::vector<CycloNumber>>> cache_;
};

PowerCache& power_cache() {
  static PowerCache c;
  return c;
}

// Normalizes (N, exps) to the true order of the character.
int normalize_order(int N, std::vector<int>& exps) {
  int g = N;
  for (int e : exps)
    if (e > 0) g = std::gcd(g, e);
  for (int& e : exps)
    if (e > 0) e /= g;
  return N / g;
}

}  // namespace

class CharacterTable {
 public:
  static const std::vector<DirichletCharacter>& get(long q) {
    static std::shared_mutex mutex;
    static std::map<long, std::unique_ptr<std::vector<DirichletCharacter>>> cache;
    if (q < 1) throw InvalidArgument("character modulus must be positive");
    {
      std::shared_lock lock(mutex);
      auto it = cache.find(q);
      if (it != cache.end()) return *it->second;
    }
    auto table = build(q);
    std::unique_lock lock(mutex);
    return *cache.emplace(q, std::move(table)).first->second;
  }

  static DirichletCharacter make(long q, int N, std::vector<int> exps) {
    DirichletCharacter c;
    c.q_ = q;
    c.order_ = normalize_order(N, exps);
    c.exps_ = std::move(exps);
    c.powers_ = power_cache().get(c.order_);
    return c;
  }

 private:
  static std::unique_ptr<std::vector<DirichletCharacter>> build(long q) {
    auto gens = generators(q);
    int N = 1;
    for (const auto& g : gens) N = std::lcm(N, g.order);
    auto out = std::make_unique<std::vector<DirichletCharacter>>();
    std::vector<int> tuple(gens.size(), 0);
    for (;;) {
      std::vector<int> exps(static_cast<std::size_t>(q), -1);
      for (long n = 0; n < q; ++n) {
        if (std::gcd(n, q) != 1) continue;
        long e = 0;
        for (std::size_t j = 0; j < gens.size(); ++j) {
          int lg = gens[j].logs[static_cast<std::size_t>(n % gens[j].pe)];
          e += static_cast<long>(tuple[j]) * lg * (N / gens[j].order);
        }
        exps[static_cast<std::size_t>(n)] = static_cast<int>(e % N);
      }
      DirichletCharacter c = make(q, N, std::move(exps));
      c.tuple_ = tuple;
      c.index_ = out->size();
      out->push_back(std::move(c));
      // lexicographic increment, last coordinate fastest
      if (gens.empty()) break;
      bool done = true;
      for (std::size_t j = gens.size(); j-- > 0;) {
        if (++tuple[j] < gens[j].order) {
          done = false;
          break;
        }
        tuple[j] = 0;
      }
      if (done) break;
    }
    for (auto& c : *out) assign_conductor(c);
    return out;
  }

  static void assign_conductor(DirichletCharacter& c) {
    const long q = c.q_;
    for (long d : divisors(q)) {
      bool trivial = true;
      for (long n = 1; n < q && trivial; n += d) {
        int e = c.exps_[static_cast<std::size_t>(n)];
        if (e > 0) trivial = false;
      }
      if (!trivial) continue;
      c.conductor_ = d;
      if (d == q) {
        c.inducing_index_ = c.index_;
        return;
      }
      std::vector<int> pe(static_cast<std::size_t>(d), -1);
      for (long n = 1; n < q; ++n) {
        int e = c.exps_[static_cast<std::size_t>(n)];
        if (e >= 0 && pe[static_cast<std::size_t>(n % d)] < 0) pe[static_cast<std::size_t>(n % d)] = e;
      }
      if (d == 1) pe[0] = 0;
      const auto& lower = get(d);
      for (const auto& psi : lower) {
        if (psi.order_ == c.order_ && psi.exps_ == pe) {
          c.inducing_index_ = psi.index_;
          return;
        }
      }
      throw InternalError("inducing character not found");
    }
    throw InternalError("conductor search failed");
  }
};

CycloNumber DirichletCharacter::operator()(long n) const {
  int e = exponent(n);
  if (e < 0) return CycloNumber();
  if (!powers_) return root_of_unity(order_, e);
  return (*powers_)[static_cast<std::size_t>(e)];
}

CycloNumber DirichletCharacter::conj_value(long n) const {
  int e = exponent(n);
  if (e < 0) return CycloNumber();
  if (!powers_) return root_of_unity(order_, -e);
  return (*powers_)[static_cast<std::size_t>(mod_floor(-e, order_))];
}

int DirichletCharacter::parity() const {
  if (q_ <= 2) return 1;
  int e = exponent(-1);
  return e == 0 ? 1 : -1;
}

DirichletCharacter DirichletCharacter::conj() const {
  std::vector<int> e = exps_;
  for (int& x : e)
    if (x > 0) x = order_ - x;
  return character_from_exponents(q_, order_, e);
}

DirichletCharacter DirichletCharacter::primitive() const { return enumerate_characters(conductor_)[inducing_index_]; }

const std::vector<DirichletCharacter>& enumerate_characters(long q) { return CharacterTable::get(q); }

std::vector<DirichletCharacter> primitive_characters(long q) {
  std::vector<DirichletCharacter> out;
  for (const auto& c : enumerate_characters(q))
    if (c.is_primitive()) out.push_back(c);
  return out;
}

std::pair<long, DirichletCharacter> conductor(const DirichletCharacter& chi) {
  return {chi.conductor(), chi.primitive()};
}

DirichletCharacter character_from_exponents(long q, int order, const std::vector<int>& exps) {
  if (static_cast<long>(exps.size()) != q) throw InvalidArgument("exponent table length differs from modulus");
  DirichletCharacter probe = CharacterTable::make(q, order, exps);
  for (const auto& c : enumerate_characters(q))
    if (c.order() == probe.order() && c.exponents() == probe.exponents()) return c;
  throw InvalidArgument("exponent table is not a Dirichlet character mod " + std::to_string(q));
}

DirichletCharacter character_from_values(long q, const std::vector<std::pair<long, CycloNumber>>& values) {
  const DirichletCharacter* found = nullptr;
  for (const auto& c : enumerate_characters(q)) {
    bool ok = true;
    for (const auto& [n, v] : values)
      if (c(n) != v) {
        ok = false;
        break;
      }
    if (!ok) continue;
    if (found) throw InvalidArgument("character values do not determine a unique character");
    found = &c;
  }
  if (!found) throw InvalidArgument("no character mod " + std::to_string(q) + " has the given values");
  return *found;
}

DirichletCharacter induce(const DirichletCharacter& psi, long q) {
  const long q0 = psi.modulus();
  if (q < 1 || q % q0 != 0) throw InvalidArgument("cannot induce from modulus " + std::to_string(q0) + " to " + std::to_string(q));
  std::vector<int> exps(static_cast<std::size_t>(q), -1);
  for (long n = 0; n < q; ++n)
    if (std::gcd(n, q) == 1) exps[static_cast<std::size_t>(n)] = psi.exponent(n);
  return character_from_exponents(q, psi.order(), exps);
}

DirichletCharacter multiply(const DirichletCharacter& a, const DirichletCharacter& b) {
  if (a.modulus() != b.modulus()) throw InvalidArgument("character product needs equal moduli");
  const long q = a.modulus();
  int N = std::lcm(a.order(), b.order());
  std::vector<int> exps(static_cast<std::size_t>(q), -1);
  for (long n = 0; n < q; ++n) {
    int ea = a.exponent(n), eb = b.exponent(n);
    if (ea < 0 || eb < 0) continue;
    exps[static_cast<std::size_t>(n)] = (ea * (N / a.order()) + eb * (N / b.order())) % N;
  }
  return character_from_exponents(q, N, exps);
}

int legendre_symbol(long n, long p) {
  if (p < 3 || !is_prime(p)) throw InvalidArgument("Legendre symbol needs an odd prime, got " + std::to_string(p));
  long r = mod_floor(n, p);
  if (r == 0) return 0;
  return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

DirichletCharacter legendre_character(long p) {
  std::vector<int> exps(static_cast<std::size_t>(p), -1);
  for (long n = 1; n < p; ++n) exps[static_cast<std::size_t>(n)] = legendre_symbol(n, p) == 1 ? 0 : 1;
  return character_from_exponents(p, 2, exps);
}

CycloNumber gauss_sum_direct(long n, const DirichletCharacter& chi) {
  const long q = chi.modulus();
  const int M = std::lcm(static_cast<int>(q), chi.order());
  FullBasisAccumulator acc(M);
  const long sc = M / chi.order(), sq = M / q;
  for (long m = 1; m <= q; ++m) {
    int e = chi.exponent(m);
    if (e < 0) continue;
    acc.add_integer(1, e * sc + mod_floor(m * n, q) * sq);
  }
  return acc.result();
}

const CycloNumber& gauss_sum(const DirichletCharacter& psi) {
  static std::shared_mutex mutex;
  static std::map<std::pair<long, std::size_t>, CycloNumber> cache;
  auto key = std::make_pair(psi.modulus(), psi.index());
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  CycloNumber v = gauss_sum_direct(1, psi);
  std::unique_lock lock(mutex);
  return cache.emplace(key, std::move(v)).first->second;
}

CycloNumber gauss_sum_formula(long n, const DirichletCharacter& chi) {
  const long q = chi.modulus(), q0 = chi.conductor();
  DirichletCharacter psi = chi.primitive();
  const long nh = std::gcd(n, q / q0);
  const long k = q / (nh * q0);
  int mu = mobius(k);
  if (mu == 0) return CycloNumber();
  CycloNumber v = psi(k);
  if (v.is_zero()) return v;
  Rational c(euler_phi(q) * mu, euler_phi(q / nh));
  c.canonicalize();
  return CycloNumber(c) * v * psi.conj_value(n / nh) * gauss_sum(psi);
}

std::pair<DirichletCharacter, DirichletCharacter> crt_split(const DirichletCharacter& psi, long q1, long q2) {
  const long q = psi.modulus();
  if (q1 < 1 || q2 < 1 || q1 * q2 != q || std::gcd(q1, q2) != 1) throw InvalidArgument("invalid CRT split");
  auto part = [&](long qa, long qb) {
    std::vector<int> exps(static_cast<std::size_t>(qa), -1);
    for (long r = 0; r < qa; ++r) {
      if (std::gcd(r, qa) != 1) continue;
      // n = r mod qa, n = 1 mod qb
      long n = r;
      while (n % qb != 1 % qb) n += qa;
      exps[static_cast<std::size_t>(r)] = psi.exponent(n);
    }
    return character_from_exponents(qa, psi.order(), exps);
  };
  return {part(q1, q2), part(q2, q1)};
}

}  // namespace pds
