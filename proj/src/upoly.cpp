#include "pds/upoly.hpp"

#include <mpfr.h>

#include <algorithm>
#include <boost/multiprecision/mpfr.hpp>
#include <mutex>
#include <cmath>
#include <sstream>

#include "pds/error.hpp"

namespace pds {

UPoly::UPoly(std::vector<CycloNumber> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::monomial(int k, const CycloNumber& c) {
  std::vector<CycloNumber> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

CycloNumber UPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return CycloNumber(0);
  return c_[static_cast<std::size_t>(k)];
}

int UPoly::value_order() const {
  int L = 1;
  for (const auto& c : c_) L = static_cast<int>(lcm64(L, c.order()));
  return L;
}

CycloNumber UPoly::operator()(const CycloNumber& z) const {
  CycloNumber acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc;
}

ComplexInterval UPoly::evaluate(const ComplexInterval& z, int precision) const {
  ComplexInterval acc(Interval(0), Interval(0));
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    acc = (acc * z + embed(*it, precision + 8)).rounded(precision + 8);
  return acc;
}

UPoly UPoly::operator+(const UPoly& o) const {
  std::vector<CycloNumber> v(std::max(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k < c_.size()) v[k] += c_[k];
    if (k < o.c_.size()) v[k] += o.c_[k];
  }
  return UPoly(std::move(v));
}

UPoly UPoly::operator-(const UPoly& o) const { return *this + o.scaled(CycloNumber(-1)); }

UPoly UPoly::operator*(const UPoly& o) const {
  if (is_zero() || o.is_zero()) return UPoly();
  std::vector<CycloNumber> v(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return UPoly(std::move(v));
}

UPoly UPoly::scaled(const CycloNumber& s) const {
  std::vector<CycloNumber> v = c_;
  for (auto& c : v) c = c * s;
  return UPoly(std::move(v));
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<CycloNumber> v(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) v[k - 1] = c_[k] * CycloNumber(static_cast<long>(k));
  return UPoly(std::move(v));
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(lead().inverse());
}

UPoly UPoly::reciprocal_conj(int n) const {
  if (n < degree()) throw InvalidArgument("reciprocal_conj: n below degree");
  std::vector<CycloNumber> v(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= degree(); ++k) v[static_cast<std::size_t>(n - k)] = c_[static_cast<std::size_t>(k)].conj();
  return UPoly(std::move(v));
}

UPoly UPoly::conj() const {
  std::vector<CycloNumber> v = c_;
  for (auto& c : v) c = c.conj();
  return UPoly(std::move(v));
}

std::string UPoly::debug_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(" << c_[k].debug_string() << ")";
    if (k == 1) out << "*z";
    if (k > 1) out << "*z^" << k;
  }
  return out.str();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
  std::vector<CycloNumber> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UPoly(), a};
  std::vector<CycloNumber> q(static_cast<std::size_t>(a.degree() - db) + 1);
  CycloNumber inv = b.lead().inverse();
  for (int k = a.degree(); k >= db; --k) {
    CycloNumber f = r[static_cast<std::size_t>(k)] * inv;
    q[static_cast<std::size_t>(k - db)] = f;
    if (f.is_zero()) continue;
    for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs()[static_cast<std::size_t>(j)];
  }
  r.resize(static_cast<std::size_t>(db));
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = y.monic();
    y = r.monic();
  }
  return x.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

CycloNumber gaussian(const Rational& re, const Rational& im) {
  return CycloNumber(re) + CycloNumber(im) * root_of_unity(4, 1);
}

int RootDisk::location() const {
  Rational m2 = re * re + im * im;
  // inside iff |c| + r < 1
  if (radius < 1) {
    Rational t = 1 - radius;
    if (m2 < t * t) return -1;
  }
  Rational t = 1 + radius;
  if (m2 > t * t) return 1;
  return 0;
}

ComplexInterval RootDisk::box() const {
  return {Interval(re - radius, re + radius), Interval(im - radius, im + radius)};
}

namespace {

using Big = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                          boost::multiprecision::et_off>;

template <class R>
struct Cx {
  R re, im;
};

template <class R>
Cx<R> add(const Cx<R>& a, const Cx<R>& b) { return {a.re + b.re, a.im + b.im}; }
template <class R>
Cx<R> sub(const Cx<R>& a, const Cx<R>& b) { return {a.re - b.re, a.im - b.im}; }
template <class R>
Cx<R> mul(const Cx<R>& a, const Cx<R>& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
template <class R>
R norm2(const Cx<R>& a) { return a.re * a.re + a.im * a.im; }
template <class R>
Cx<R> div(const Cx<R>& a, const Cx<R>& b) {
  R d = norm2(b);
  return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

double to_real(const Rational& q, double) { return q.get_d(); }
Big to_real(const Rational& q, const Big&) {
  Big r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}
Rational to_rational(double x) { return Rational(x); }
Rational to_rational(const Big& x) {
  Rational r;
  mpfr_get_q(r.get_mpq_t(), x.backend().data());
  return r;
}

// Aberth-Ehrlich iteration; returns true on convergence.
template <class R>
bool aberth(const std::vector<Cx<R>>& a, std::vector<Cx<R>>& z, const R& tol, int max_iter) {
  const std::size_t n = a.size() - 1;
  for (int it = 0; it < max_iter; ++it) {
    bool done = true;
    for (std::size_t k = 0; k < n; ++k) {
      Cx<R> p = a[n], dp{R(0), R(0)};
      for (std::size_t j = n; j-- > 0;) {
        dp = add(mul(dp, z[k]), p);
        p = add(mul(p, z[k]), a[j]);
      }
      if (norm2(p) == 0) continue;
      if (norm2(dp) == 0) dp = {R(1), R(0)};
      Cx<R> ratio = div(p, dp);
      Cx<R> s{R(0), R(0)};
      for (std::size_t j = 0; j < n; ++j) {
        if (j == k) continue;
        Cx<R> d = sub(z[k], z[j]);
        if (norm2(d) == 0) d = {tol, R(0)};
        s = add(s, div(Cx<R>{R(1), R(0)}, d));
      }
      Cx<R> denom = sub(Cx<R>{R(1), R(0)}, mul(ratio, s));
      Cx<R> w = norm2(denom) == 0 ? ratio : div(ratio, denom);
      z[k] = sub(z[k], w);
      R scale = 1 + norm2(z[k]);
      if (norm2(w) > tol * tol * scale) done = false;
    }
    if (done) return true;
  }
  return false;
}

std::vector<Cx<double>> initial_guess(const std::vector<Cx<double>>& a) {
  const std::size_t n = a.size() - 1;
  double a0 = std::sqrt(norm2(a[0])), an = std::sqrt(norm2(a[n]));
  double r = a0 > 0 ? std::pow(a0 / an, 1.0 / static_cast<double>(n)) : 1.0;
  if (!(r > 1e-8) || !std::isfinite(r)) r = 1.0;
  std::vector<Cx<double>> z(n);
  const double pi = std::acos(-1.0);
  for (std::size_t k = 0; k < n; ++k) {
    double th = 2 * pi * static_cast<double>(k) / static_cast<double>(n) + 0.7;
    z[k] = {r * std::cos(th), r * std::sin(th)};
  }
  return z;
}

template <class R>
std::vector<Cx<R>> numeric_coeffs(const UPoly& p, int bits) {
  std::vector<Cx<R>> a;
  R proto{};
  for (const auto& c : p.coeffs()) {
    ComplexInterval e = embed(c, bits);
    a.push_back({to_real(e.re.mid(), proto), to_real(e.im.mid(), proto)});
  }
  return a;
}

std::vector<Cx<double>> double_roots(const UPoly& p) {
  auto a = numeric_coeffs<double>(p, 60);
  auto z = initial_guess(a);
  aberth<double>(a, z, 1e-15, 800);
  return z;
}

// Weierstrass/Gerschgorin inclusion for exact candidate points.
std::optional<std::vector<RootDisk>> certify(const UPoly& p, const std::vector<std::pair<Rational, Rational>>& z,
                                             int bits) {
  const std::size_t n = z.size();
  const int prec = 2 * bits + 16;
  ComplexInterval lead = embed(p.lead(), prec);
  std::vector<RootDisk> out;
  for (std::size_t i = 0; i < n; ++i) {
    ComplexInterval zi(Interval(z[i].first), Interval(z[i].second));
    ComplexInterval val = p.evaluate(zi, prec);
    ComplexInterval den = lead;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      ComplexInterval d(Interval(z[i].first - z[j].first), Interval(z[i].second - z[j].second));
      den = (den * d).rounded(prec);
    }
    Interval dn = den.abs2();
    if (dn.lo <= 0) return std::nullopt;
    Rational ratio = val.abs2().hi / dn.lo;
    Rational radius = sqrt_upper(ratio, prec) * static_cast<long>(n);
    radius = Interval(radius).rounded(prec).hi;
    if (radius == 0) {
      Rational tiny(1);
      mpq_div_2exp(tiny.get_mpq_t(), tiny.get_mpq_t(), static_cast<mp_bitcnt_t>(prec));
      radius = tiny;
    }
    out.push_back({z[i].first, z[i].second, radius});
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Rational dx = out[i].re - out[j].re, dy = out[i].im - out[j].im;
      Rational s = out[i].radius + out[j].radius;
      if (dx * dx + dy * dy <= s * s) return std::nullopt;
    }
  return out;
}

}  // namespace

std::vector<std::pair<double, double>> approximate_roots(const UPoly& p) {
  std::vector<std::pair<double, double>> out;
  if (p.degree() < 1) return out;
  for (const auto& z : double_roots(p)) out.emplace_back(z.re, z.im);
  return out;
}

std::optional<std::vector<RootDisk>> isolate_roots(const UPoly& p, int level) {
  if (p.is_zero()) throw InvalidArgument("isolate_roots: zero polynomial");
  if (p.degree() == 0) return std::vector<RootDisk>{};
  const int bits = 53 << level;
  auto dz = double_roots(p);
  std::vector<std::pair<Rational, Rational>> pts;
  if (level == 0) {
    for (const auto& z : dz) {
      if (!std::isfinite(z.re) || !std::isfinite(z.im)) return std::nullopt;
      pts.emplace_back(to_rational(z.re), to_rational(z.im));
    }
  } else {
    // the backend's default precision is process-global
    static std::mutex big_mutex;
    std::lock_guard lock(big_mutex);
    const unsigned digits = static_cast<unsigned>(bits * 0.30103) + 10;
    Big::default_precision(digits);
    auto a = numeric_coeffs<Big>(p, bits + 32);
    std::vector<Cx<Big>> z;
    for (const auto& w : dz) {
      if (!std::isfinite(w.re) || !std::isfinite(w.im)) return std::nullopt;
      z.push_back({Big(w.re), Big(w.im)});
    }
    Big tol = boost::multiprecision::pow(Big(2), -(bits - 8));
    aberth<Big>(a, z, tol, 200);
    for (const auto& w : z)
      pts.emplace_back(Interval(to_rational(w.re)).rounded(bits + 8).lo, Interval(to_rational(w.im)).rounded(bits + 8).lo);
  }
  return certify(p, pts, bits);
}

std::optional<std::vector<RootDisk>> isolate_roots_adaptive(const UPoly& p, int max_level) {
  for (int level = 0; level <= max_level; ++level) {
    auto r = isolate_roots(p, level);
    if (r) return r;
  }
  return std::nullopt;
}

}  // namespace pds
