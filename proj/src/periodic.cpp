#include "pds/periodic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>

#include "pds/error.hpp"

namespace pds {

PeriodicFn::PeriodicFn(long q, std::vector<CycloNumber> values) : q_(q), values_(std::move(values)) {
  if (q < 1) throw InvalidArgument("period must be positive");
  if (static_cast<long>(values_.size()) != q) throw InvalidArgument("periodic function needs exactly q values");
}

PeriodicFn PeriodicFn::zero(long q) { return PeriodicFn(q, std::vector<CycloNumber>(static_cast<std::size_t>(q))); }

bool PeriodicFn::is_zero() const {
  for (const auto& v : values_)
    if (!v.is_zero()) return false;
  return true;
}

int PeriodicFn::value_order() const {
  int L = 1;
  for (const auto& v : values_) L = std::lcm(L, v.order());
  return L;
}

ArithFnView PeriodicFn::view() const {
  auto self = std::make_shared<PeriodicFn>(*this);
  return {[self](long n) { return (*self)(n); }, q_, 0};
}

PeriodicFn PeriodicFn::operator+(const PeriodicFn& o) const {
  if (o.q_ != q_) throw InvalidArgument("periods differ");
  PeriodicFn r = *this;
  for (std::size_t k = 0; k < values_.size(); ++k) r.values_[k] += o.values_[k];
  return r;
}

PeriodicFn PeriodicFn::operator-(const PeriodicFn& o) const { return *this + o.scaled(CycloNumber(-1L)); }

PeriodicFn PeriodicFn::scaled(const CycloNumber& c) const {
  PeriodicFn r = *this;
  for (auto& v : r.values_) v *= c;
  return r;
}

PeriodicFn PeriodicFn::conj() const {
  PeriodicFn r = *this;
  for (auto& v : r.values_) v = v.conj();
  return r;
}

bool operator==(const PeriodicFn& a, const PeriodicFn& b) { return a.q_ == b.q_ && a.values_ == b.values_; }

CycloNumber inner_product(const PeriodicFn& f, const PeriodicFn& g) {
  if (f.period() != g.period()) throw InvalidArgument("periods differ");
  CycloNumber s;
  for (long n = 1; n <= f.period(); ++n) {
    if (f(n).is_zero() || g(n).is_zero()) continue;
    s += f(n) * g(n).conj();
  }
  return s;
}

namespace {

PeriodicFn exponential_sum(const PeriodicFn& f, int sign, const Rational& scale) {
  const long q = f.period();
  const int M = std::lcm(static_cast<int>(q), f.value_order());
  const long sq = M / q;
  std::vector<CycloNumber> out;
  out.reserve(static_cast<std::size_t>(q));
  for (long m = 1; m <= q; ++m) {
    FullBasisAccumulator acc(M);
    for (long n = 1; n <= q; ++n) acc.add(f(n), sign * mod_floor(m * n, q) * sq);
    out.push_back(acc.result() * CycloNumber(scale));
  }
  return PeriodicFn(q, std::move(out));
}

}  // namespace

PeriodicFn fourier_transform(const PeriodicFn& f) { return exponential_sum(f, -1, Rational(1, f.period())); }
PeriodicFn inverse_fourier_transform(const PeriodicFn& g) { return exponential_sum(g, 1, Rational(1)); }

const std::vector<XiFunction>& xi_basis(long q) {
  static std::shared_mutex mutex;
  static std::map<long, std::unique_ptr<std::vector<XiFunction>>> cache;
  if (q < 1) throw InvalidArgument("period must be positive");
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(q);
    if (it != cache.end()) return *it->second;
  }
  auto basis = std::make_unique<std::vector<XiFunction>>();
  for (long d : divisors(q)) {
    for (const auto& chi : enumerate_characters(q / d)) {
      std::vector<CycloNumber> v(static_cast<std::size_t>(q));
      for (long n = d; n <= q; n += d) v[static_cast<std::size_t>(n - 1)] = chi(n / d);
      basis->push_back({d, chi, PeriodicFn(q, std::move(v))});
    }
  }
  std::unique_lock lock(mutex);
  return *cache.emplace(q, std::move(basis)).first->second;
}

bool e_membership(const PeriodicFn& f, const ESpaceTag& tag) {
  const long q = f.period(), q0 = tag.q0();
  if (!tag.psi.is_primitive()) throw InvalidArgument("E-space tag needs a primitive character");
  if (q % q0 != 0 || tag.q != q) throw InvalidArgument("conductor does not divide the period");
  const long r = q / q0;
  for (long n = 1; n <= q; ++n) {
    const long nh = std::gcd(n, r);
    if (nh == n) continue;
    CycloNumber rhs = f(nh).is_zero() ? CycloNumber() : f(nh) * tag.psi(n / nh);
    if (f(n) != rhs) return false;
  }
  return true;
}

std::vector<std::pair<ESpaceTag, PeriodicFn>> e_decompose(const PeriodicFn& f) {
  const long q = f.period();
  std::map<std::pair<long, std::size_t>, std::pair<ESpaceTag, PeriodicFn>> parts;
  for (const auto& xi : xi_basis(q)) {
    CycloNumber ip = inner_product(f, xi.fn);
    if (ip.is_zero()) continue;
    DirichletCharacter psi = xi.chi.primitive();
    auto key = std::make_pair(psi.modulus(), psi.index());
    auto it = parts.find(key);
    if (it == parts.end()) it = parts.emplace(key, std::make_pair(ESpaceTag{q, psi}, PeriodicFn::zero(q))).first;
    CycloNumber c = ip * CycloNumber(Rational(1, euler_phi(q / xi.d)));
    it->second.second = it->second.second + xi.fn.scaled(c);
  }
  std::vector<std::pair<ESpaceTag, PeriodicFn>> out;
  for (auto& [k, v] : parts)
    if (!v.second.is_zero()) out.push_back(std::move(v));
  return out;
}

std::optional<ESpaceTag> find_unique_component(const PeriodicFn& f) {
  if (f.is_zero()) return std::nullopt;
  auto parts = e_decompose(f);
  if (parts.size() != 1) return std::nullopt;
  return parts[0].first;
}

CycloNumber convolve_mu_psi(const PeriodicFn& f, const DirichletCharacter& psi, long n) {
  CycloNumber s;
  for (long k : divisors(n)) {
    const long e = n / k;
    int mu = mobius(e);
    if (mu == 0 || f(k).is_zero()) continue;
    CycloNumber v = psi(e);
    if (v.is_zero()) continue;
    s += mu > 0 ? f(k) * v : -(f(k) * v);
  }
  return s;
}

DirichletPoly poly_quotient(const PeriodicFn& f, const ESpaceTag& tag) {
  if (!e_membership(f, tag)) throw InvalidArgument("function is not in the requested E-space");
  DirichletPoly p;
  for (long d : divisors(f.period() / tag.q0())) p.add_term(d, convolve_mu_psi(f, tag.psi, d));
  return p;
}

}  // namespace pds
