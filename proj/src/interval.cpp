#include "pds/interval.hpp"

#include <mpfr.h>

#include <algorithm>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <utility>

#include "pds/error.hpp"

namespace pds {
namespace {

class Mpfr {
 public:
  explicit Mpfr(int bits) { mpfr_init2(v, bits); }
  ~Mpfr() { mpfr_clear(v); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  Rational q() const {
    Rational r;
    mpfr_get_q(r.get_mpq_t(), v);
    return r;
  }
  mpfr_t v;
};

Rational floor_grid(const Rational& x, int bits) {
  Integer scaled;
  Rational s = x;
  mpq_mul_2exp(s.get_mpq_t(), s.get_mpq_t(), static_cast<mp_bitcnt_t>(bits));
  mpz_fdiv_q(scaled.get_mpz_t(), s.get_num_mpz_t(), s.get_den_mpz_t());
  Rational r(scaled);
  mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(bits));
  return r;
}

Rational ceil_grid(const Rational& x, int bits) { return -floor_grid(-x, bits); }

Rational min4(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return std::min({a, b, c, d});
}
Rational max4(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  return std::max({a, b, c, d});
}

// Enclosures of cos(2 pi k/L), sin(2 pi k/L).
std::pair<Interval, Interval> unit_root_enclosure(int L, long k, int bits) {
  k = mod_floor(k, L);
  if (k == 0) return {Interval(1), Interval(0)};
  if (2 * k == L) return {Interval(-1), Interval(0)};
  if (4 * k == L) return {Interval(0), Interval(1)};
  if (4 * k == 3L * L) return {Interval(0), Interval(-1)};
  Rational frac(2 * k, L);
  frac.canonicalize();
  Interval angle = Interval(frac) * pi_interval(bits + 8);
  return {cos_interval(angle, bits + 8), sin_interval(angle, bits + 8)};
}

class TrigCache {
 public:
  const std::vector<std::pair<Interval, Interval>>& get(int L, int bits) {
    auto key = std::make_pair(L, bits);
    {
      std::shared_lock lock(mutex_);
      auto it = cache_.find(key);
      if (it != cache_.end()) return it->second;
    }
    std::vector<std::pair<Interval, Interval>> table;
    table.reserve(static_cast<std::size_t>(L));
    for (long k = 0; k < L; ++k) table.push_back(unit_root_enclosure(L, k, bits));
    std::unique_lock lock(mutex_);
    return cache_.emplace(key, std::move(table)).first->second;
  }

 private:
  std::shared_mutex mutex_;
  std::map<std::pair<int, int>, std::vector<std::pair<Interval, Interval>>> cache_;
};

TrigCache& trig_cache() {
  static TrigCache cache;
  return cache;
}

}  // namespace

Interval::Interval(const Rational& a, const Rational& b) : lo(a), hi(b) {
  if (lo > hi) throw InvalidArgument("interval with lo > hi");
}

Interval Interval::rounded(int bits) const { return {floor_grid(lo, bits), ceil_grid(hi, bits)}; }

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

Interval operator*(const Interval& a, const Interval& b) {
  if (a.lo == a.hi && b.lo == b.hi) return Interval(a.lo * b.lo);
  Rational p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  return {min4(p1, p2, p3, p4), max4(p1, p2, p3, p4)};
}

Interval operator/(const Interval& a, const Interval& b) {
  if (b.contains_zero()) throw InvalidArgument("interval division by an interval containing zero");
  Rational ilo = 1 / b.hi, ihi = 1 / b.lo;
  return a * Interval(ilo, ihi);
}

Interval sqr(const Interval& a) {
  Rational l2 = a.lo * a.lo, h2 = a.hi * a.hi;
  if (a.contains_zero()) return {0, std::max(l2, h2)};
  return {std::min(l2, h2), std::max(l2, h2)};
}

Interval hull(const Interval& a, const Interval& b) { return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }
bool overlaps(const Interval& a, const Interval& b) { return !(a.hi < b.lo || b.hi < a.lo); }

std::string ComplexInterval::debug_string() const {
  std::ostringstream os;
  os << "[" << re.lo.get_d() << ", " << re.hi.get_d() << "] + i[" << im.lo.get_d() << ", " << im.hi.get_d() << "]";
  return os.str();
}

ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) { return {a.re + b.re, a.im + b.im}; }
ComplexInterval operator-(const ComplexInterval& a, const ComplexInterval& b) { return {a.re - b.re, a.im - b.im}; }
ComplexInterval operator-(const ComplexInterval& a) { return {-a.re, -a.im}; }
ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
ComplexInterval operator/(const ComplexInterval& a, const ComplexInterval& b) {
  Interval d = b.abs2();
  if (d.contains_zero()) throw InvalidArgument("complex interval division by a box containing zero");
  ComplexInterval n = a * b.conj();
  return {n.re / d, n.im / d};
}

ComplexInterval embed(const CycloNumber& x, int precision) {
  if (precision < 1) throw InvalidArgument("embed: precision must be positive");
  if (x.is_rational()) {
    Rational r = x.to_rational();
    Interval re(r);
    if (r.get_den() != 1 && (r.get_den() & (r.get_den() - 1)) != 0) re = re.rounded(precision + 2);
    return {re, Interval(0)};
  }
  const int L = x.order();
  const auto& num = x.numerators();
  Integer total = 0;
  for (const auto& c : num) total += abs(c);
  Rational scale = Rational(total, x.denominator()) * static_cast<long>(num.size()) + 1;
  long extra = static_cast<long>(mpz_sizeinbase(scale.get_num_mpz_t(), 2)) + 4;
  int bits = static_cast<int>(((precision + extra + 31) / 32) * 32);
  for (int attempt = 0; attempt < 6; ++attempt, bits *= 2) {
    const auto& table = trig_cache().get(L, bits);
    ComplexInterval sum(Interval(0), Interval(0));
    for (std::size_t k = 0; k < num.size(); ++k) {
      if (num[k] == 0) continue;
      Interval c(Rational(num[k], x.denominator()));
      c.lo.canonicalize();
      c.hi.canonicalize();
      sum = sum + ComplexInterval(c * table[k].first, c * table[k].second);
    }
    sum = sum.rounded(precision + 2);
    Rational target(1);
    mpq_div_2exp(target.get_mpq_t(), target.get_mpq_t(), static_cast<mp_bitcnt_t>(precision));
    if (sum.width() <= target) return sum;
  }
  throw InternalError("embed failed to reach the requested width");
}

int sign(const CycloNumber& x) {
  if (x.is_zero()) return 0;
  if (x.is_rational()) return sgn(x.to_rational());
  if (!x.is_real()) throw InvalidArgument("sign of a non-real cyclotomic number");
  for (int prec = 64; prec <= (1 << 16); prec *= 2) {
    Interval re = embed(x, prec).re;
    if (re.positive()) return 1;
    if (re.negative()) return -1;
  }
  throw InternalError("sign refinement did not terminate");
}

int compare_abs(const CycloNumber& a, const CycloNumber& b) { return sign(a * a.conj() - b * b.conj()); }

Rational sqrt_upper(const Rational& x, int bits) {
  if (x < 0) throw InvalidArgument("sqrt of negative");
  Mpfr m(bits);
  mpfr_set_q(m.v, x.get_mpq_t(), MPFR_RNDU);
  mpfr_sqrt(m.v, m.v, MPFR_RNDU);
  return m.q();
}

Rational sqrt_lower(const Rational& x, int bits) {
  if (x < 0) throw InvalidArgument("sqrt of negative");
  Mpfr m(bits);
  mpfr_set_q(m.v, x.get_mpq_t(), MPFR_RNDD);
  mpfr_sqrt(m.v, m.v, MPFR_RNDD);
  return m.q();
}

Interval pi_interval(int bits) {
  Mpfr lo(bits), hi(bits);
  mpfr_const_pi(lo.v, MPFR_RNDD);
  mpfr_const_pi(hi.v, MPFR_RNDU);
  return {lo.q(), hi.q()};
}

Interval log_interval(const Rational& x, int bits) {
  if (x <= 0) throw InvalidArgument("log of non-positive");
  if (x == 1) return Interval(0);
  Mpfr a(bits), b(bits);
  mpfr_set_q(a.v, x.get_mpq_t(), MPFR_RNDD);
  mpfr_log(a.v, a.v, MPFR_RNDD);
  mpfr_set_q(b.v, x.get_mpq_t(), MPFR_RNDU);
  mpfr_log(b.v, b.v, MPFR_RNDU);
  return {a.q(), b.q()};
}

Interval exp_interval(const Interval& x, int bits) {
  Mpfr a(bits), b(bits);
  mpfr_set_q(a.v, x.lo.get_mpq_t(), MPFR_RNDD);
  mpfr_exp(a.v, a.v, MPFR_RNDD);
  mpfr_set_q(b.v, x.hi.get_mpq_t(), MPFR_RNDU);
  mpfr_exp(b.v, b.v, MPFR_RNDU);
  return {a.q(), b.q()};
}

namespace {

// Lipschitz-1 enclosure around a representable midpoint.
template <typename Fn>
Interval trig_interval(const Interval& x, int bits, Fn fn) {
  Mpfr m(bits), lo(bits), hi(bits);
  Rational mid = x.mid();
  mpfr_set_q(m.v, mid.get_mpq_t(), MPFR_RNDN);
  Rational mq = m.q();
  Rational delta = std::max(abs(x.hi - mq), abs(mq - x.lo));
  fn(lo.v, m.v, MPFR_RNDD);
  fn(hi.v, m.v, MPFR_RNDU);
  Rational l = lo.q() - delta, h = hi.q() + delta;
  if (l < -1) l = -1;
  if (h > 1) h = 1;
  return {l, h};
}

}  // namespace

Interval cos_interval(const Interval& x, int bits) { return trig_interval(x, bits, mpfr_cos); }
Interval sin_interval(const Interval& x, int bits) { return trig_interval(x, bits, mpfr_sin); }

}  // namespace pds
