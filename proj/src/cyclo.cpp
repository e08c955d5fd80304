#include "pds/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <sstream>

#include "pds/error.hpp"

namespace pds {
namespace {

struct FieldData {
  IntPoly phi;                                    // Phi_L, monic
  std::vector<std::vector<std::int64_t>> powers;  // x^e mod Phi_L, e in [0, L)
};

// Exact division of integer polynomials, divisor monic.
IntPoly divide_monic(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {0};
  IntPoly q(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    q[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  for (std::size_t j = 0; j < dn; ++j) {
    if (num[j] != 0) throw InternalError("cyclotomic division left a remainder");
  }
  return q;
}

IntPoly compute_phi(int L);

class FieldCache {
 public:
  const FieldData& get(int L) {
    {
      std::shared_lock lock(mutex_);
      auto it = cache_.find(L);
      if (it != cache_.end()) return *it->second;
    }
    auto data = std::make_unique<FieldData>();
    data->phi = compute_phi(L);
    const std::size_t n = data->phi.size() - 1;
    data->powers.assign(static_cast<std::size_t>(L), std::vector<std::int64_t>(n, 0));
    std::vector<std::int64_t> cur(n, 0);
    cur[0] = 1;
    if (n == 0) throw InternalError("degenerate cyclotomic field");
    for (int e = 0; e < L; ++e) {
      data->powers[static_cast<std::size_t>(e)] = cur;
      // multiply by x, then reduce the x^n term
      std::int64_t top = cur[n - 1];
      for (std::size_t k = n - 1; k > 0; --k) cur[k] = cur[k - 1];
      cur[0] = 0;
      if (top != 0) {
        for (std::size_t k = 0; k < n; ++k) cur[k] -= top * data->phi[k];
      }
    }
    std::unique_lock lock(mutex_);
    auto [it, inserted] = cache_.emplace(L, std::move(data));
    return *it->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<int, std::unique_ptr<FieldData>> cache_;
};

FieldCache& field_cache() {
  static FieldCache cache;
  return cache;
}

IntPoly compute_phi(int L) {
  IntPoly p(static_cast<std::size_t>(L) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(L)] = 1;
  for (int d = 1; d < L; ++d) {
    if (L % d == 0) p = divide_monic(p, field_cache().get(d).phi);
  }
  return p;
}

const FieldData& field(int L) {
  if (L < 1) throw InvalidArgument("cyclotomic order must be positive");
  return field_cache().get(L);
}

// Reduces sum_e full[e] zeta_L^e (any e >= 0) to the power basis.
std::vector<Integer> reduce_full(int L, const std::vector<Integer>& full) {
  const FieldData& f = field(L);
  const std::size_t n = f.phi.size() - 1;
  std::vector<Integer> out(n, 0);
  for (std::size_t e = 0; e < full.size(); ++e) {
    if (full[e] == 0) continue;
    const auto& row = f.powers[e % static_cast<std::size_t>(L)];
    for (std::size_t k = 0; k < n; ++k) {
      if (row[k] == 0) continue;
      if (row[k] > 0) {
        out[k] += full[e] * static_cast<unsigned long>(row[k]);
      } else {
        out[k] -= full[e] * static_cast<unsigned long>(-row[k]);
      }
    }
  }
  return out;
}

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Returns (q, r) with a = q*b + r.
std::pair<QPoly, QPoly> qdivmod(QPoly a, const QPoly& b) {
  trim(a);
  QPoly q;
  if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
  const Rational& lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    Rational c = a.back() / lead;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= c * b[j];
    a.pop_back();
    trim(a);
  }
  return {q, a};
}

QPoly qmul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

QPoly qsub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

const IntPoly& cyclotomic_polynomial(int L) { return field(L).phi; }

CycloNumber::CycloNumber() : num_(1, 0) {}
CycloNumber::CycloNumber(long v) : num_(1, v) {}
CycloNumber::CycloNumber(const Rational& r) : den_(r.get_den()), num_(1, r.get_num()) {}

CycloNumber CycloNumber::from_powers(int L, const std::vector<Rational>& coeffs) {
  Integer den = 1;
  for (const auto& c : coeffs) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> full(coeffs.size());
  for (std::size_t e = 0; e < coeffs.size(); ++e) {
    full[e] = coeffs[e].get_num() * (den / coeffs[e].get_den());
  }
  CycloNumber out;
  out.order_ = L;
  out.den_ = den;
  out.num_ = reduce_full(L, full);
  out.normalize();
  return out;
}

void CycloNumber::normalize() {
  Integer g = den_;
  for (const auto& c : num_) {
    if (g == 1) break;
    if (c != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g != 1) {
    den_ /= g;
    for (auto& c : num_) {
      if (c != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    }
  }
  bool constant = true;
  for (std::size_t k = 1; k < num_.size(); ++k) {
    if (num_[k] != 0) {
      constant = false;
      break;
    }
  }
  if (constant) {
    order_ = 1;
    num_.resize(1);
    if (num_[0] == 0) den_ = 1;
  }
}

Rational CycloNumber::coeff(std::size_t k) const {
  if (k >= num_.size()) return 0;
  Rational r(num_[k], den_);
  r.canonicalize();
  return r;
}

std::vector<Rational> CycloNumber::coeffs() const {
  std::vector<Rational> out(num_.size());
  for (std::size_t k = 0; k < num_.size(); ++k) out[k] = coeff(k);
  return out;
}

bool CycloNumber::is_zero() const {
  for (const auto& c : num_)
    if (c != 0) return false;
  return true;
}

Rational CycloNumber::to_rational() const {
  for (std::size_t k = 1; k < num_.size(); ++k)
    if (num_[k] != 0) throw InvalidArgument("cyclotomic value is not rational");
  return coeff(0);
}

CycloNumber CycloNumber::galois(long a) const {
  if (order_ == 1) return *this;
  if (std::gcd(a, static_cast<long>(order_)) != 1) throw InvalidArgument("Galois exponent not coprime to order");
  std::vector<Integer> full(static_cast<std::size_t>(order_), 0);
  for (std::size_t k = 0; k < num_.size(); ++k) {
    long e = mod_floor(a * static_cast<long>(k), order_);
    full[static_cast<std::size_t>(e)] += num_[k];
  }
  CycloNumber out;
  out.order_ = order_;
  out.den_ = den_;
  out.num_ = reduce_full(order_, full);
  out.normalize();
  return out;
}

CycloNumber CycloNumber::conj() const { return galois(-1); }

bool CycloNumber::is_real() const { return conj() == *this; }

CycloNumber CycloNumber::lifted(int L2) const {
  if (L2 < 1 || L2 % order_ != 0) {
    throw InvalidArgument("cannot lift order " + std::to_string(order_) + " to " + std::to_string(L2));
  }
  if (L2 == order_) return *this;
  const std::size_t step = static_cast<std::size_t>(L2 / order_);
  std::vector<Integer> full(num_.size() * step, 0);
  for (std::size_t k = 0; k < num_.size(); ++k) full[k * step] = num_[k];
  CycloNumber out;
  out.order_ = L2;
  out.den_ = den_;
  out.num_ = reduce_full(L2, full);
  return out;
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw InvalidArgument("inverse of zero");
  if (is_rational()) {
    Rational r(den_, num_[0]);
    r.canonicalize();
    return CycloNumber(r);
  }
  // extended Euclid: find s with a*s = 1 mod Phi
  const IntPoly& phi = field(order_).phi;
  QPoly m(phi.begin(), phi.end());
  QPoly a(num_.size());
  for (std::size_t k = 0; k < num_.size(); ++k) a[k] = coeff(k);
  trim(a);
  QPoly r0 = m, r1 = a, s0 = {}, s1 = {Rational(1)};
  while (!(r1.size() == 1)) {
    if (r1.empty()) throw InternalError("non-invertible cyclotomic element");
    auto [q, r] = qdivmod(r0, r1);
    QPoly s2 = qsub(s0, qmul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  Rational c = r1[0];
  for (auto& x : s1) x /= c;
  return from_powers(order_, s1);
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber out = *this;
  for (auto& c : out.num_) c = -c;
  return out;
}

namespace {
int common_order(int a, int b) { return std::lcm(a, b); }
}  // namespace

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
  if (o.is_zero()) return *this;
  const int L = common_order(order_, o.order_);
  CycloNumber a = order_ == L ? std::move(*this) : lifted(L);
  const CycloNumber* bp = &o;
  CycloNumber blift;
  if (o.order_ != L) {
    blift = o.lifted(L);
    bp = &blift;
  }
  const CycloNumber& b = *bp;
  a.num_.resize(b.num_.size(), 0);
  if (a.den_ == b.den_) {
    for (std::size_t k = 0; k < b.num_.size(); ++k) a.num_[k] += b.num_[k];
  } else {
    Integer den;
    mpz_lcm(den.get_mpz_t(), a.den_.get_mpz_t(), b.den_.get_mpz_t());
    Integer fa = den / a.den_, fb = den / b.den_;
    for (std::size_t k = 0; k < a.num_.size(); ++k) a.num_[k] = a.num_[k] * fa + b.num_[k] * fb;
    a.den_ = den;
  }
  a.order_ = L;
  a.normalize();
  *this = std::move(a);
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) { return *this += -o; }

CycloNumber operator*(const CycloNumber& a, const CycloNumber& b) {
  if (a.is_zero() || b.is_zero()) return CycloNumber();
  if (a.order_ == 1 || b.order_ == 1) {
    const CycloNumber& s = a.order_ == 1 ? a : b;
    const CycloNumber& v = a.order_ == 1 ? b : a;
    CycloNumber out = v;
    for (auto& c : out.num_) c *= s.num_[0];
    out.den_ *= s.den_;
    if (out.den_ < 0) {
      out.den_ = -out.den_;
      for (auto& c : out.num_) c = -c;
    }
    out.normalize();
    return out;
  }
  const int L = std::lcm(a.order_, b.order_);
  const CycloNumber& x = a.order_ == L ? a : a.lifted(L);
  CycloNumber ylift;
  const CycloNumber* yp = &b;
  if (b.order_ != L) {
    ylift = b.lifted(L);
    yp = &ylift;
  }
  const CycloNumber& y = *yp;
  std::vector<Integer> full(x.num_.size() + y.num_.size() - 1, 0);
  for (std::size_t i = 0; i < x.num_.size(); ++i) {
    if (x.num_[i] == 0) continue;
    for (std::size_t j = 0; j < y.num_.size(); ++j) {
      if (y.num_[j] == 0) continue;
      mpz_addmul(full[i + j].get_mpz_t(), x.num_[i].get_mpz_t(), y.num_[j].get_mpz_t());
    }
  }
  CycloNumber out;
  out.order_ = L;
  out.den_ = x.den_ * y.den_;
  out.num_ = reduce_full(L, full);
  out.normalize();
  return out;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) {
  *this = *this * o;
  return *this;
}

CycloNumber& CycloNumber::operator/=(const CycloNumber& o) {
  *this = *this * o.inverse();
  return *this;
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  if (a.order_ == b.order_ && a.num_.size() == b.num_.size()) {
    return a.den_ == b.den_ && a.num_ == b.num_;
  }
  return (a - b).is_zero();
}

std::string CycloNumber::debug_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < num_.size(); ++k) {
    if (num_[k] == 0) continue;
    Rational c = coeff(k);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    Rational ac = abs(c);
    if (k == 0) {
      os << to_string(ac);
    } else {
      if (ac != 1) os << to_string(ac) << "*";
      os << "zeta" << order_;
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

CycloNumber root_of_unity(int L, long k) {
  if (L < 1) throw InvalidArgument("root_of_unity: order must be positive");
  k = mod_floor(k, L);
  std::vector<Rational> c(static_cast<std::size_t>(k) + 1, 0);
  c[static_cast<std::size_t>(k)] = 1;
  return CycloNumber::from_powers(L, c);
}

CycloNumber cyclo_lift(const CycloNumber& x, int L2) { return x.lifted(L2); }

FullBasisAccumulator::FullBasisAccumulator(int M) : M_(M), acc_(static_cast<std::size_t>(M), 0) {
  if (M < 1) throw InvalidArgument("accumulator order must be positive");
}

void FullBasisAccumulator::rescale_to(const Integer& den) {
  if (den == den_) return;
  Integer f = den / den_;
  for (auto& c : acc_)
    if (c != 0) c *= f;
  den_ = den;
}

void FullBasisAccumulator::add(const CycloNumber& x, long shift) {
  if (M_ % x.order() != 0) throw InvalidArgument("accumulator order not a multiple of value order");
  if (x.is_zero()) return;
  const Integer& xd = x.denominator();
  if (xd != den_) {
    Integer den;
    mpz_lcm(den.get_mpz_t(), den_.get_mpz_t(), xd.get_mpz_t());
    rescale_to(den);
  }
  Integer f = den_ / xd;
  const long step = M_ / x.order();
  const auto& num = x.numerators();
  for (std::size_t k = 0; k < num.size(); ++k) {
    if (num[k] == 0) continue;
    auto e = static_cast<std::size_t>(mod_floor(static_cast<long>(k) * step + shift, M_));
    if (f == 1) acc_[e] += num[k];
    else mpz_addmul(acc_[e].get_mpz_t(), num[k].get_mpz_t(), f.get_mpz_t());
  }
}

void FullBasisAccumulator::add_rational(const Rational& c, long shift) {
  if (c == 0) return;
  if (c.get_den() != den_) {
    Integer den;
    mpz_lcm(den.get_mpz_t(), den_.get_mpz_t(), c.get_den_mpz_t());
    rescale_to(den);
  }
  auto e = static_cast<std::size_t>(mod_floor(shift, M_));
  acc_[e] += c.get_num() * (den_ / c.get_den());
}

void FullBasisAccumulator::add_integer(long c, long shift) {
  if (c == 0) return;
  auto e = static_cast<std::size_t>(mod_floor(shift, M_));
  if (den_ == 1) acc_[e] += c;
  else acc_[e] += den_ * c;
}

CycloNumber FullBasisAccumulator::result() const {
  CycloNumber out;
  out.order_ = M_;
  out.den_ = den_;
  out.num_ = reduce_full(M_, acc_);
  out.normalize();
  return out;
}

}  // namespace pds
