#include "pds/zerofree.hpp"

#include <gmp.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <set>

#include "pds/error.hpp"

namespace pds {

const char* to_string(ZeroStatus s) {
  switch (s) {
    case ZeroStatus::ZeroFreeOpen: return "ZeroFreeOpen";
    case ZeroStatus::HasZero: return "HasZero";
    case ZeroStatus::Undetermined: return "Undetermined";
  }
  return "?";
}

const char* to_string(CertificateKind k) {
  switch (k) {
    case CertificateKind::Dominance: return "Dominance";
    case CertificateKind::SeparableFactorization: return "SeparableFactorization";
    case CertificateKind::UnivariateRootBound: return "UnivariateRootBound";
    case CertificateKind::NegativityTwist: return "NegativityTwist";
    case CertificateKind::InteriorWitness: return "InteriorWitness";
    case CertificateKind::AffineReduction: return "AffineReduction";
    case CertificateKind::None: return "None";
  }
  return "?";
}

namespace {

using Exponents = BohrPoly::Exponents;

Rational pow2(int e) {
  Rational r(1);
  if (e >= 0)
    mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
  else
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
  return r;
}

Interval abs_enclosure(const CycloNumber& x, int bits) {
  Interval m = embed(x, bits).abs2();
  Rational lo = m.lo > 0 ? sqrt_lower(m.lo, bits + 16) : Rational(0);
  return {lo, sqrt_upper(m.hi, bits + 16)};
}

std::optional<Rational> exact_abs(const CycloNumber& x) {
  CycloNumber m = x * x.conj();
  if (!m.is_rational()) return std::nullopt;
  Rational r = m.to_rational();
  if (mpz_perfect_square_p(r.get_num_mpz_t()) == 0 || mpz_perfect_square_p(r.get_den_mpz_t()) == 0)
    return std::nullopt;
  Integer a, b;
  mpz_sqrt(a.get_mpz_t(), r.get_num_mpz_t());
  mpz_sqrt(b.get_mpz_t(), r.get_den_mpz_t());
  Rational out(a, b);
  out.canonicalize();
  return out;
}

// Enclosure of sup |z| over a box, squared.
Rational box_abs2_upper(const ComplexInterval& b) {
  Rational x = std::max(abs(b.re.lo), abs(b.re.hi));
  Rational y = std::max(abs(b.im.lo), abs(b.im.hi));
  return x * x + y * y;
}

bool strictly_inside(const ComplexInterval& b) { return box_abs2_upper(b) < 1; }

ComplexInterval exact_box(const CycloNumber& x, int bits) { return embed(x, bits); }

// Q with the variables in `fixed` substituted; result in variable `free_var`.
UPoly substitute(const BohrPoly& q, const std::map<std::size_t, CycloNumber>& fixed, std::size_t free_var) {
  std::map<std::pair<std::size_t, int>, CycloNumber> powers;
  auto power = [&](std::size_t j, int e) -> CycloNumber {
    auto key = std::make_pair(j, e);
    auto it = powers.find(key);
    if (it != powers.end()) return it->second;
    CycloNumber v(1);
    for (int k = 0; k < e; ++k) v = v * fixed.at(j);
    powers.emplace(key, v);
    return v;
  };
  std::vector<CycloNumber> c(static_cast<std::size_t>(std::max(0, q.degree_in(free_var))) + 1);
  for (const auto& [e, a] : q.terms()) {
    CycloNumber t = a;
    bool ok = true;
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (j == free_var || e[j] == 0) continue;
      auto it = fixed.find(j);
      if (it == fixed.end()) throw InvalidArgument("substitute: unfixed variable");
      if (it->second.is_zero()) {
        ok = false;
        break;
      }
      t = t * power(j, e[j]);
    }
    if (ok) c[static_cast<std::size_t>(e[free_var])] += t;
  }
  return UPoly(std::move(c));
}

Certificate none(std::string reason) {
  Certificate c;
  c.kind = CertificateKind::None;
  c.reason = std::move(reason);
  return c;
}

ZeroFreeVerdict verdict(ZeroStatus s, Certificate c) {
  ZeroFreeVerdict v;
  v.status = s;
  v.certificate = std::move(c);
  return v;
}

// Certified interior witness from a root disk of the restriction to one variable.
std::optional<Certificate> witness_from_disk(const BohrPoly& q, std::map<std::size_t, CycloNumber> fixed,
                                             std::size_t free_var, const RootDisk& d, int precision) {
  ComplexInterval box = d.box();
  if (!strictly_inside(box)) return std::nullopt;
  Certificate c;
  c.kind = CertificateKind::InteriorWitness;
  c.certified = true;
  c.point.assign(q.nvars(), ComplexInterval(Interval(0), Interval(0)));
  c.point[free_var] = box;
  for (std::size_t j = 0; j < q.nvars(); ++j)
    if (j != free_var && fixed.count(j) == 0) fixed[j] = CycloNumber(0);
  for (const auto& [j, v] : fixed) c.point[j] = exact_box(v, precision + 16);
  ComplexInterval val = q.evaluate(c.point, precision);
  if (!val.contains_zero()) return std::nullopt;
  c.residual_bound = sqrt_upper(val.abs2().hi, precision);
  return c;
}

Certificate exact_witness(std::vector<CycloNumber> pt, int precision) {
  Certificate c;
  c.kind = CertificateKind::InteriorWitness;
  c.certified = true;
  for (const auto& v : pt) c.point.push_back(exact_box(v, precision + 16));
  c.residual_bound = 0;
  c.exact_point = std::move(pt);
  return c;
}

bool exact_inside(const CycloNumber& z) { return sign(z * z.conj() - CycloNumber(1)) < 0; }

// Roots of a univariate polynomial inside radius bound (|center| <= bound), certified.
std::optional<Certificate> univariate_witness(const BohrPoly& q, const std::map<std::size_t, CycloNumber>& fixed,
                                              std::size_t free_var, const UPoly& u, const Rational& bound,
                                              int precision, std::optional<std::pair<double, double>> near = {}) {
  if (u.is_zero()) {
    std::vector<CycloNumber> pt(q.nvars(), CycloNumber(0));
    for (const auto& [j, v] : fixed) pt[j] = v;
    return exact_witness(pt, precision);
  }
  if (u.degree() < 1) return std::nullopt;
  UPoly sf = squarefree_part(u);
  if (sf.degree() == 1) {
    CycloNumber root = -sf.coeff(0) / sf.coeff(1);
    if (sign(root * root.conj() - CycloNumber(bound * bound)) > 0 || !exact_inside(root)) return std::nullopt;
    std::vector<CycloNumber> pt(q.nvars(), CycloNumber(0));
    for (const auto& [j, v] : fixed) pt[j] = v;
    pt[free_var] = root;
    return exact_witness(pt, precision);
  }
  for (int level = 0; level <= 3; ++level) {
    auto disks = isolate_roots(sf, level);
    if (!disks) continue;
    std::vector<const RootDisk*> order;
    for (const auto& d : *disks) order.push_back(&d);
    if (near) {
      auto dist = [&](const RootDisk* d) {
        double dx = d->approx_re() - near->first, dy = d->approx_im() - near->second;
        return dx * dx + dy * dy;
      };
      std::sort(order.begin(), order.end(), [&](auto* a, auto* b) { return dist(a) < dist(b); });
    }
    bool retry = false;
    for (const RootDisk* d : order) {
      Rational m2 = d->re * d->re + d->im * d->im;
      if (m2 > bound * bound) continue;
      if (d->location() != -1 || !strictly_inside(d->box())) {
        retry = true;
        continue;
      }
      auto w = witness_from_disk(q, fixed, free_var, *d, precision);
      if (w) return w;
      retry = true;
    }
    if (!retry) return std::nullopt;
  }
  return std::nullopt;
}

std::vector<std::size_t> other_vars(const std::vector<std::size_t>& vars, std::size_t skip) {
  std::vector<std::size_t> out;
  for (auto v : vars)
    if (v != skip) out.push_back(v);
  return out;
}

// Low-height rationals in [-bound, bound], ordered by height.
std::vector<Rational> slice_values(const Rational& bound) {
  std::vector<Rational> out{Rational(0)};
  for (long b = 2; b <= 5; ++b)
    for (long a = 1; a < b; ++a) {
      if (std::gcd(a, b) != 1) continue;
      Rational r(a, b);
      if (r > bound) continue;
      out.push_back(-r);
      out.push_back(r);
    }
  return out;
}

std::complex<double> to_complex(const CycloNumber& x) {
  ComplexInterval e = embed(x, 60);
  return {e.re.mid().get_d(), e.im.mid().get_d()};
}

struct NumericPoly {
  std::vector<std::pair<std::vector<int>, std::complex<double>>> terms;
  std::size_t n = 0;
  double scale = 0;

  std::complex<double> value(const std::vector<std::complex<double>>& z, std::vector<std::complex<double>>* grad) const {
    std::complex<double> v = 0;
    if (grad) grad->assign(n, 0);
    for (const auto& [e, c] : terms) {
      std::complex<double> m = c;
      for (std::size_t j = 0; j < n; ++j)
        for (int k = 0; k < e[j]; ++k) m *= z[j];
      v += m;
      if (!grad) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (e[j] == 0) continue;
        std::complex<double> d = c * static_cast<double>(e[j]);
        for (std::size_t i = 0; i < n; ++i)
          for (int k = 0; k < e[i] - (i == j ? 1 : 0); ++k) d *= z[i];
        (*grad)[j] += d;
      }
    }
    return v;
  }
};

NumericPoly numeric(const BohrPoly& q) {
  NumericPoly np;
  np.n = q.nvars();
  for (const auto& [e, c] : q.terms()) {
    np.terms.emplace_back(e, to_complex(c));
    np.scale += std::abs(np.terms.back().second);
  }
  return np;
}

Rational dyadic(double x, int bits) { return Interval(Rational(x)).rounded(bits).lo; }

}  // namespace

// ---------------------------------------------------------------- dominance

std::optional<Certificate> dominance_certificate(const BohrPoly& q) {
  CycloNumber a1 = q.constant_term();
  if (a1.is_zero()) return std::nullopt;
  std::vector<CycloNumber> tail;
  for (const auto& [e, c] : q.terms())
    if (std::any_of(e.begin(), e.end(), [](int x) { return x != 0; })) tail.push_back(c);
  Certificate cert;
  cert.kind = CertificateKind::Dominance;
  for (int bits = 64; bits <= 1024; bits *= 2) {
    Interval A = abs_enclosure(a1, bits);
    Interval T(0);
    for (const auto& c : tail) T = T + abs_enclosure(c, bits);
    cert.leading_abs = A;
    cert.tail_abs = T;
    if (A.lo >= T.hi) return cert;
    if (A.hi < T.lo) return std::nullopt;
  }
  if (tail.size() == 1) {
    if (compare_abs(a1, tail[0]) >= 0) return cert;
    return std::nullopt;
  }
  auto A = exact_abs(a1);
  if (!A) return std::nullopt;
  Rational T = 0;
  for (const auto& c : tail) {
    auto m = exact_abs(c);
    if (!m) return std::nullopt;
    T += *m;
  }
  if (*A >= T) {
    cert.leading_abs = Interval(*A);
    cert.tail_abs = Interval(T);
    return cert;
  }
  return std::nullopt;
}

std::optional<Certificate> dominance_certificate(const DirichletPoly& p) {
  if (p.constant_term().is_zero()) return std::nullopt;
  return dominance_certificate(bohr_lift(p));
}

// ---------------------------------------------------------------- separable

namespace {

std::optional<std::pair<BohrPoly, BohrPoly>> split(const BohrPoly& q, const std::vector<bool>& in_s) {
  std::map<Exponents, std::map<Exponents, CycloNumber>> m;
  std::set<Exponents> cols;
  for (const auto& [e, c] : q.terms()) {
    Exponents s(e.size(), 0), t(e.size(), 0);
    for (std::size_t j = 0; j < e.size(); ++j) (in_s[j] ? s : t)[j] = e[j];
    m[s][t] = c;
    cols.insert(t);
  }
  if (m.size() < 2 || cols.size() < 2) return std::nullopt;
  const Exponents& s0 = m.begin()->first;
  const Exponents& t0 = m.begin()->second.begin()->first;
  const CycloNumber pivot = m.begin()->second.begin()->second;
  auto get = [&](const Exponents& s, const Exponents& t) {
    auto it = m.find(s);
    if (it == m.end()) return CycloNumber(0);
    auto jt = it->second.find(t);
    return jt == it->second.end() ? CycloNumber(0) : jt->second;
  };
  for (const auto& [s, row] : m)
    for (const auto& t : cols)
      if (get(s, t) * pivot != get(s, t0) * get(s0, t)) return std::nullopt;
  BohrPoly f(q.primes(), {}), g(q.primes(), {});
  CycloNumber inv = pivot.inverse();
  for (const auto& [s, row] : m) {
    CycloNumber v = get(s, t0);
    if (!v.is_zero()) f.add_term(s, v);
  }
  for (const auto& t : cols) {
    CycloNumber v = get(s0, t);
    if (!v.is_zero()) g.add_term(t, v * inv);
  }
  return std::make_pair(f, g);
}

void factor_fully(const BohrPoly& q, std::vector<BohrPoly>& out) {
  auto vars = q.active_variables();
  const std::size_t k = vars.size();
  if (k >= 2 && k < 20) {
    // subsets containing vars[0], by increasing size
    std::vector<unsigned long> masks;
    for (unsigned long mask = 0; mask < (1UL << (k - 1)); ++mask) masks.push_back(mask);
    std::stable_sort(masks.begin(), masks.end(),
                     [](unsigned long a, unsigned long b) { return __builtin_popcountl(a) < __builtin_popcountl(b); });
    for (unsigned long mask : masks) {
      if (mask == (1UL << (k - 1)) - 1) continue;
      std::vector<bool> in_s(q.nvars(), false);
      in_s[vars[0]] = true;
      for (std::size_t i = 1; i < k; ++i)
        if (mask & (1UL << (i - 1))) in_s[vars[i]] = true;
      auto fg = split(q, in_s);
      if (!fg) continue;
      factor_fully(fg->first, out);
      factor_fully(fg->second, out);
      return;
    }
  }
  out.push_back(q);
}

}  // namespace

std::vector<BohrPoly> separable_factorization(const BohrPoly& q) {
  if (q.active_variables().size() < 2) return {};
  std::vector<BohrPoly> out;
  factor_fully(q, out);
  if (out.size() < 2) return {};
  return out;
}

// ---------------------------------------------------------------- univariate

UPoly to_univariate(const BohrPoly& q, std::size_t var) {
  std::vector<CycloNumber> c(static_cast<std::size_t>(std::max(0, q.degree_in(var))) + 1);
  for (const auto& [e, a] : q.terms()) {
    for (std::size_t j = 0; j < e.size(); ++j)
      if (j != var && e[j] != 0) throw InvalidArgument("to_univariate: other variable active");
    c[static_cast<std::size_t>(e[var])] += a;
  }
  return UPoly(std::move(c));
}

namespace {

// Inversion z -> 1/conj(z) of a disk avoiding 0.
std::optional<RootDisk> invert(const RootDisk& d) {
  Rational m2 = d.re * d.re + d.im * d.im;
  Rational den = m2 - d.radius * d.radius;
  if (den <= 0) return std::nullopt;
  return RootDisk{d.re / den, d.im / den, d.radius / den};
}

bool disjoint(const RootDisk& a, const RootDisk& b) {
  Rational dx = a.re - b.re, dy = a.im - b.im, s = a.radius + b.radius;
  return dx * dx + dy * dy > s * s;
}

std::optional<Certificate> disk_witness(const RootDisk& d) {
  ComplexInterval box = d.box();
  if (!strictly_inside(box)) return std::nullopt;
  Certificate c;
  c.kind = CertificateKind::InteriorWitness;
  c.certified = true;
  c.point = {box};
  return c;
}

}  // namespace

ZeroFreeVerdict univariate_open_disk_test(const UPoly& q) {
  if (q.coeff(0).is_zero()) throw InvalidArgument("univariate test: zero constant term");
  Certificate cert;
  cert.kind = CertificateKind::UnivariateRootBound;
  if (q.degree() == 0) return verdict(ZeroStatus::ZeroFreeOpen, cert);
  UPoly psf = squarefree_part(q);
  const int n = psf.degree();
  UPoly h = gcd(psf, psf.reciprocal_conj(n));
  UPoly r = divmod(psf, h).first;
  auto finish_witness = [&](const Certificate& w) {
    Certificate c = w;
    ComplexInterval val = q.evaluate(c.point[0], 64);
    c.residual_bound = sqrt_upper(val.abs2().hi, 64);
    return verdict(ZeroStatus::HasZero, c);
  };
  std::vector<LocatedRoot> located;
  if (r.degree() >= 1) {
    bool done = false;
    for (int level = 0; level <= 6 && !done; ++level) {
      auto disks = isolate_roots(r, level);
      if (!disks) continue;
      bool all = true;
      for (const auto& d : *disks) {
        int loc = d.location();
        if (loc == -1) {
          if (auto w = disk_witness(d)) return finish_witness(*w);
          all = false;
        }
        if (loc == 0) all = false;
      }
      if (all) {
        for (const auto& d : *disks) located.push_back({d, d.location()});
        done = true;
      }
    }
    if (!done) return verdict(ZeroStatus::Undetermined, none("root of the non-self-reciprocal part unresolved"));
  }
  if (h.degree() >= 1) {
    bool done = false;
    for (int level = 0; level <= 6 && !done; ++level) {
      auto disks = isolate_roots(h, level);
      if (!disks) continue;
      bool all = true;
      std::vector<LocatedRoot> here;
      for (std::size_t i = 0; i < disks->size(); ++i) {
        const RootDisk& d = (*disks)[i];
        int loc = d.location();
        if (loc == -1) {
          if (auto w = disk_witness(d)) return finish_witness(*w);
          all = false;
          continue;
        }
        if (loc == 1) {
          auto img = invert(d);
          if (img && img->location() == -1)
            if (auto w = disk_witness(*img)) return finish_witness(*w);
          all = false;
          continue;
        }
        auto img = invert(d);
        bool alone = img.has_value();
        for (std::size_t j = 0; alone && j < disks->size(); ++j)
          if (j != i && !disjoint(*img, (*disks)[j])) alone = false;
        if (!alone) {
          all = false;
          continue;
        }
        here.push_back({d, 0});
      }
      if (all) {
        located.insert(located.end(), here.begin(), here.end());
        done = true;
      }
    }
    if (!done) return verdict(ZeroStatus::Undetermined, none("boundary root unresolved"));
  }
  cert.roots = std::move(located);
  return verdict(ZeroStatus::ZeroFreeOpen, cert);
}

// ---------------------------------------------------------------- twists

std::optional<Certificate> twist_idempotent_reject(const BohrPoly& q) {
  CycloNumber a1 = q.constant_term();
  if (a1.is_zero()) return std::nullopt;
  CycloNumber norm = a1.conj();
  std::vector<std::pair<Exponents, CycloNumber>> terms;
  for (const auto& [e, c] : q.terms()) {
    CycloNumber v = c * norm;
    if (!v.is_real()) return std::nullopt;
    terms.emplace_back(e, v);
  }
  auto vars = q.active_variables();
  const std::size_t k = vars.size();
  if (k > 12) return std::nullopt;
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= 3;
  // digit d -> value d - 1, lexicographic with the first variable slowest
  auto vertex = [&](std::size_t idx) {
    std::vector<int> v(q.nvars(), 0);
    for (std::size_t i = k; i-- > 0;) {
      v[vars[i]] = static_cast<int>(idx % 3) - 1;
      idx /= 3;
    }
    return v;
  };
  auto index_of = [&](const std::vector<int>& v) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < k; ++i) idx = idx * 3 + static_cast<std::size_t>(v[vars[i]] + 1);
    return idx;
  };
  auto eval = [&](const std::vector<std::pair<Exponents, CycloNumber>>& ts, const std::vector<int>& v) {
    CycloNumber s(0);
    for (const auto& [e, c] : ts) {
      int m = 1;
      for (std::size_t j = 0; j < e.size() && m != 0; ++j)
        for (int r = 0; r < e[j]; ++r) m *= v[j];
      if (m != 0) s += m == 1 ? c : -c;
    }
    return s;
  };
  std::vector<int> sgn(total);
  for (std::size_t idx = 0; idx < total; ++idx) sgn[idx] = sign(eval(terms, vertex(idx)));
  std::vector<std::pair<Exponents, CycloNumber>> raw(q.terms().begin(), q.terms().end());
  auto make = [&](const std::vector<int>& rho, const std::vector<long>& zeros, const std::vector<int>& v) {
    Certificate c;
    c.kind = CertificateKind::NegativityTwist;
    for (auto j : vars) c.rho[q.primes()[j]] = rho[j];
    c.idempotent_zero = zeros;
    c.sum = eval(raw, v);
    c.twisted_constant = eval(raw, rho);
    return c;
  };
  for (std::size_t idx = 0; idx < total; ++idx)
    if (sgn[idx] < 0) {
      auto v = vertex(idx);
      return make(v, {}, v);
    }
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (sgn[idx] <= 0) continue;
    auto w = vertex(idx);
    std::vector<std::size_t> nz;
    for (auto j : vars)
      if (w[j] != 0) nz.push_back(j);
    if (nz.empty() || nz.size() > 20) continue;
    for (unsigned long mask = 1; mask < (1UL << nz.size()); ++mask) {
      auto v = w;
      std::vector<long> zeros;
      for (std::size_t i = 0; i < nz.size(); ++i)
        if (mask & (1UL << i)) {
          v[nz[i]] = 0;
          zeros.push_back(q.primes()[nz[i]]);
        }
      if (sgn[index_of(v)] <= 0) return make(w, zeros, v);
    }
  }
  return std::nullopt;
}

std::optional<Certificate> twist_idempotent_reject(const DirichletPoly& p) {
  if (p.constant_term().is_zero()) return std::nullopt;
  return twist_idempotent_reject(bohr_lift(p));
}

// ---------------------------------------------------------------- deflation

Deflation boundary_deflation(const BohrPoly& q) {
  Deflation out{q, {}};
  bool changed = true;
  while (changed && !out.deflated.is_constant()) {
    changed = false;
    const BohrPoly& cur = out.deflated;
    const int W = static_cast<int>(lcm64(2, cur.value_order()));
    for (std::size_t j : cur.active_variables()) {
      // group by the remaining exponents
      std::map<Exponents, std::vector<CycloNumber>> groups;
      for (const auto& [e, c] : cur.terms()) {
        Exponents rest = e;
        rest[j] = 0;
        auto& v = groups[rest];
        if (v.size() <= static_cast<std::size_t>(e[j])) v.resize(static_cast<std::size_t>(e[j]) + 1);
        v[static_cast<std::size_t>(e[j])] = c;
      }
      const int deg = cur.degree_in(j);
      for (int m = 1; m <= deg && !changed; ++m) {
        for (int k = 0; k < W && !changed; ++k) {
          CycloNumber u = root_of_unity(W, k);
          UPoly divisor = UPoly::monomial(m) - UPoly({u});
          std::map<Exponents, UPoly> quot;
          bool ok = true;
          for (const auto& [rest, coeffs] : groups) {
            auto [qq, rr] = divmod(UPoly(coeffs), divisor);
            if (!rr.is_zero()) {
              ok = false;
              break;
            }
            quot.emplace(rest, qq);
          }
          if (!ok) continue;
          BohrPoly next(cur.primes(), {});
          for (const auto& [rest, qq] : quot)
            for (int d = 0; d <= qq.degree(); ++d) {
              if (qq.coeff(d).is_zero()) continue;
              Exponents e = rest;
              e[j] = d;
              next.add_term(e, -qq.coeff(d));
            }
          BohrPoly factor(cur.primes(), {});
          Exponents zero(cur.nvars(), 0), ej(cur.nvars(), 0);
          ej[j] = m;
          factor.add_term(zero, u);
          factor.add_term(ej, CycloNumber(-1));
          out.removed.push_back(factor);
          out.deflated = next;
          changed = true;
        }
      }
      if (changed) break;
    }
  }
  return out;
}

// ---------------------------------------------------------------- affine

namespace {

struct Arc {
  double lo, hi;
};

// Point on the unit circle with rational coordinates near angle theta.
std::pair<Rational, Rational> circle_point(double theta) {
  const double pi = std::acos(-1.0);
  bool flip = false;
  if (theta > pi / 2) {
    theta -= pi;
    flip = true;
  } else if (theta < -pi / 2) {
    theta += pi;
    flip = true;
  }
  Rational t(std::tan(theta / 2));
  Rational d = 1 + t * t;
  Rational x = (1 - t * t) / d, y = 2 * t / d;
  if (flip) return {-x, -y};
  return {x, y};
}

}  // namespace

std::optional<ZeroFreeVerdict> affine_reduction(const BohrPoly& q) {
  auto vars = q.active_variables();
  if (vars.size() != 2) return std::nullopt;
  if (q.constant_term().is_zero()) return std::nullopt;
  for (int pass = 0; pass < 2; ++pass) {
    const std::size_t zv = vars[static_cast<std::size_t>(1 - pass)], wv = vars[static_cast<std::size_t>(pass)];
    if (q.degree_in(zv) != 1) continue;
    std::vector<CycloNumber> ac(static_cast<std::size_t>(q.degree_in(wv)) + 1), bc(ac.size());
    for (const auto& [e, c] : q.terms()) (e[zv] == 0 ? ac : bc)[static_cast<std::size_t>(e[wv])] += c;
    UPoly A(ac), B(bc);
    Certificate cert;
    cert.kind = CertificateKind::AffineReduction;
    cert.affine_variable = zv;
    cert.base_variable = wv;
    ZeroFreeVerdict va = univariate_open_disk_test(A);
    if (va.status == ZeroStatus::Undetermined) return std::nullopt;
    if (va.status == ZeroStatus::HasZero) {
      Certificate w = va.certificate;
      std::vector<ComplexInterval> pt(q.nvars(), ComplexInterval(Interval(0), Interval(0)));
      pt[wv] = w.point[0];
      w.point = pt;
      ComplexInterval val = q.evaluate(pt, 64);
      if (!val.contains_zero()) return std::nullopt;
      w.residual_bound = sqrt_upper(val.abs2().hi, 64);
      return verdict(ZeroStatus::HasZero, w);
    }
    const int n = std::max(A.degree(), B.degree());
    UPoly S = A * A.reciprocal_conj(n) - B * B.reciprocal_conj(n);
    if (S.is_zero()) return verdict(ZeroStatus::ZeroFreeOpen, cert);
    UPoly sf = squarefree_part(S);
    std::vector<RootDisk> touching;
    bool isolated = false;
    for (int level = 0; level <= 4 && !isolated; ++level) {
      auto disks = isolate_roots(sf, level);
      if (!disks) continue;
      touching.clear();
      bool small = true;
      for (const auto& d : *disks) {
        if (d.location() != 0) continue;
        touching.push_back(d);
        if (d.radius > Rational(1, 1000000000)) small = false;
      }
      isolated = small;
    }
    if (!isolated) return std::nullopt;
    const double pi = std::acos(-1.0);
    std::vector<Arc> arcs;
    for (const auto& d : touching) {
      double m = std::hypot(d.approx_re(), d.approx_im());
      double r = d.radius.get_d();
      if (r >= 0.5 * m) return std::nullopt;
      double c = std::atan2(d.approx_im(), d.approx_re());
      double half = std::asin(r / m) + 1e-9;
      arcs.push_back({c - half, c + half});
    }
    // normalize into [-pi, pi) with wrap split
    std::vector<Arc> flat;
    for (auto a : arcs) {
      if (a.lo < -pi) {
        flat.push_back({a.lo + 2 * pi, pi});
        flat.push_back({-pi, a.hi});
      } else if (a.hi > pi) {
        flat.push_back({a.lo, pi});
        flat.push_back({-pi, a.hi - 2 * pi});
      } else {
        flat.push_back(a);
      }
    }
    std::sort(flat.begin(), flat.end(), [](const Arc& a, const Arc& b) { return a.lo < b.lo; });
    std::vector<Arc> merged;
    for (const auto& a : flat) {
      if (!merged.empty() && a.lo <= merged.back().hi)
        merged.back().hi = std::max(merged.back().hi, a.hi);
      else
        merged.push_back(a);
    }
    std::vector<double> samples;
    if (merged.empty()) {
      samples.push_back(0.0);
    } else {
      for (std::size_t i = 0; i < merged.size(); ++i) {
        double lo = merged[i].hi;
        double hi = i + 1 < merged.size() ? merged[i + 1].lo : merged[0].lo + 2 * pi;
        if (hi - lo < 1e-6) {
          if (hi - lo <= 0) continue;
          return std::nullopt;
        }
        double mid = 0.5 * (lo + hi);
        if (mid >= pi) mid -= 2 * pi;
        samples.push_back(mid);
      }
    }
    for (double th : samples) {
      auto [x, y] = circle_point(th);
      for (const auto& d : touching) {
        Rational dx = x - d.re, dy = y - d.im;
        if (dx * dx + dy * dy <= d.radius * d.radius) return std::nullopt;
      }
      CycloNumber w0 = gaussian(x, y);
      CycloNumber av = A(w0), bv = B(w0);
      int s = sign(av * av.conj() - bv * bv.conj());
      if (s == 0) return std::nullopt;
      cert.circle_samples.emplace_back(x, y);
      if (s > 0) continue;
      for (int k = 1; k <= 80; ++k) {
        CycloNumber w1 = w0 * CycloNumber(1 - pow2(-k));
        CycloNumber a = A(w1), b = B(w1);
        if (b.is_zero() || sign(b * b.conj() - a * a.conj()) <= 0) continue;
        CycloNumber z1 = -a / b;
        std::vector<CycloNumber> pt(q.nvars(), CycloNumber(0));
        pt[zv] = z1;
        pt[wv] = w1;
        if (!q.evaluate(pt).is_zero()) throw InternalError("affine witness does not vanish");
        return verdict(ZeroStatus::HasZero, exact_witness(pt, 64));
      }
      return std::nullopt;
    }
    return verdict(ZeroStatus::ZeroFreeOpen, cert);
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- interior search

std::optional<Certificate> interior_zero_search(const BohrPoly& q, const Rational& margin, int precision,
                                                std::uint64_t seed, int starts) {
  if (margin <= 0 || margin >= 1) throw InvalidArgument("interior_zero_search: margin must lie in (0,1)");
  auto vars = q.active_variables();
  if (vars.empty()) return std::nullopt;
  const Rational bound = 1 - margin;
  if (vars.size() == 1) return univariate_witness(q, {}, vars[0], to_univariate(q, vars[0]), bound, precision);

  // rational slices
  const auto values = slice_values(bound);
  const std::size_t k = vars.size();
  const std::size_t cap = k == 2 ? values.size() : 400;
  for (std::size_t f = k; f-- > 0;) {
    const std::size_t free_var = vars[f];
    auto fixed_vars = other_vars(vars, free_var);
    std::vector<std::vector<std::size_t>> combos;
    std::vector<std::size_t> idx(fixed_vars.size(), 0);
    std::size_t limit = std::min<std::size_t>(values.size(), 9);
    if (fixed_vars.size() == 1) limit = values.size();
    while (true) {
      combos.push_back(idx);
      std::size_t i = idx.size();
      while (i-- > 0) {
        if (++idx[i] < limit) break;
        idx[i] = 0;
      }
      if (i == static_cast<std::size_t>(-1)) break;
    }
    std::stable_sort(combos.begin(), combos.end(), [](const auto& a, const auto& b) {
      return *std::max_element(a.begin(), a.end()) < *std::max_element(b.begin(), b.end());
    });
    if (combos.size() > cap) combos.resize(cap);
    for (const auto& c : combos) {
      std::map<std::size_t, CycloNumber> fixed;
      for (std::size_t i = 0; i < fixed_vars.size(); ++i) fixed[fixed_vars[i]] = CycloNumber(values[c[i]]);
      UPoly u = substitute(q, fixed, free_var);
      if (auto w = univariate_witness(q, fixed, free_var, u, bound, precision)) return w;
    }
  }

  // multistart damped Newton
  NumericPoly np = numeric(q);
  const double R = bound.get_d();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  const double pi = std::acos(-1.0);
  for (int s = 0; s < starts; ++s) {
    std::vector<std::complex<double>> z(q.nvars(), 0.0);
    for (auto j : vars) z[j] = std::polar(R * std::sqrt(unif(rng)), 2 * pi * unif(rng));
    std::vector<std::complex<double>> g;
    std::complex<double> v = np.value(z, &g);
    for (int it = 0; it < 200 && std::abs(v) > 1e-13 * np.scale; ++it) {
      double gn = 0;
      for (auto j : vars) gn += std::norm(g[j]);
      if (gn == 0) break;
      double alpha = 1;
      bool moved = false;
      for (int h = 0; h < 30; ++h, alpha *= 0.5) {
        auto z2 = z;
        for (auto j : vars) {
          z2[j] -= alpha * v * std::conj(g[j]) / gn;
          if (std::abs(z2[j]) > R) z2[j] *= R / std::abs(z2[j]);
        }
        std::vector<std::complex<double>> g2;
        auto v2 = np.value(z2, &g2);
        if (std::abs(v2) < std::abs(v)) {
          z = z2;
          v = v2;
          g = g2;
          moved = true;
          break;
        }
      }
      if (!moved) break;
    }
    if (std::abs(v) > 1e-10 * np.scale) continue;
    std::size_t free_var = vars[0];
    for (auto j : vars)
      if (std::abs(g[j]) > std::abs(g[free_var])) free_var = j;
    std::map<std::size_t, CycloNumber> fixed;
    for (auto j : vars)
      if (j != free_var) fixed[j] = gaussian(dyadic(z[j].real(), 30), dyadic(z[j].imag(), 30));
    UPoly u = substitute(q, fixed, free_var);
    if (auto w = univariate_witness(q, fixed, free_var, u, Rational(1) - margin / 2, precision,
                                    std::make_pair(z[free_var].real(), z[free_var].imag())))
      return w;
    // uncertified: small box around the numeric point
    Certificate c;
    c.kind = CertificateKind::InteriorWitness;
    c.certified = false;
    const Rational eps = pow2(-30);
    c.point.assign(q.nvars(), ComplexInterval(Interval(0), Interval(0)));
    bool inside = true;
    for (auto j : vars) {
      Rational x = dyadic(z[j].real(), 40), y = dyadic(z[j].imag(), 40);
      c.point[j] = ComplexInterval(Interval(x - eps, x + eps), Interval(y - eps, y + eps));
      if (!strictly_inside(c.point[j])) inside = false;
    }
    if (!inside) continue;
    ComplexInterval val = q.evaluate(c.point, precision);
    if (!val.contains_zero()) continue;
    c.residual_bound = sqrt_upper(val.abs2().hi, precision);
    return c;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- layers

namespace {

ZeroFreeVerdict decide_bohr(const BohrPoly& q, const ZeroFreeOptions& opt);

ZeroFreeVerdict lift_univariate(const BohrPoly& q, std::size_t var, ZeroFreeVerdict v) {
  if (v.certificate.kind == CertificateKind::InteriorWitness) {
    std::vector<ComplexInterval> pt(q.nvars(), ComplexInterval(Interval(0), Interval(0)));
    pt[var] = v.certificate.point.at(0);
    v.certificate.point = pt;
  }
  v.certificate.variable = var;
  return v;
}

ZeroFreeVerdict decide_bohr(const BohrPoly& q, const ZeroFreeOptions& opt) {
  if (auto d = dominance_certificate(q)) return verdict(ZeroStatus::ZeroFreeOpen, *d);
  auto vars = q.active_variables();
  if (vars.size() >= 2) {
    auto factors = separable_factorization(q);
    if (!factors.empty()) {
      Certificate cert;
      cert.kind = CertificateKind::SeparableFactorization;
      cert.factors = factors;
      bool all_free = true;
      for (const auto& f : factors) {
        ZeroFreeVerdict v = decide_bohr(f, opt);
        if (v.status == ZeroStatus::HasZero) return v;
        if (v.status != ZeroStatus::ZeroFreeOpen) all_free = false;
        cert.parts.push_back(v.certificate);
      }
      if (all_free) return verdict(ZeroStatus::ZeroFreeOpen, cert);
      return verdict(ZeroStatus::Undetermined, none("a separable factor is undetermined"));
    }
  }
  if (vars.size() == 1) return lift_univariate(q, vars[0], univariate_open_disk_test(to_univariate(q, vars[0])));
  if (auto t = twist_idempotent_reject(q)) return verdict(ZeroStatus::HasZero, *t);
  if (auto a = affine_reduction(q)) return *a;
  if (auto w = interior_zero_search(q, opt.margin, opt.precision, opt.seed, opt.starts)) {
    if (w->certified || !opt.certified_only) return verdict(ZeroStatus::HasZero, *w);
    return verdict(ZeroStatus::Undetermined, none("uncertified interior witness"));
  }
  return verdict(ZeroStatus::Undetermined, none("no layer was conclusive"));
}

}  // namespace

ZeroFreeVerdict decide_zero_free(const BohrPoly& q, const ZeroFreeOptions& opt) {
  if (q.constant_term().is_zero()) throw InvalidArgument("zero constant term");
  ZeroFreeVerdict v;
  if (auto d = dominance_certificate(q)) {
    v = verdict(ZeroStatus::ZeroFreeOpen, *d);
  } else {
    Deflation def = boundary_deflation(q);
    v = decide_bohr(def.deflated, opt);
    v.certificate.removed = def.removed;
  }
  v.lifted = q;
  return v;
}

ZeroFreeVerdict decide_zero_free(const DirichletPoly& p, const ZeroFreeOptions& opt) {
  if (p.constant_term().is_zero()) throw InvalidArgument("zero constant term");
  return decide_zero_free(bohr_lift(p), opt);
}

// ---------------------------------------------------------------- verification

namespace {

bool verify_on(const BohrPoly& q, ZeroStatus status, const Certificate& c) {
  switch (c.kind) {
    case CertificateKind::Dominance:
      return status == ZeroStatus::ZeroFreeOpen && dominance_certificate(q).has_value();
    case CertificateKind::SeparableFactorization: {
      if (status != ZeroStatus::ZeroFreeOpen || c.factors.size() != c.parts.size() || c.factors.empty()) return false;
      BohrPoly prod = c.factors[0];
      for (std::size_t i = 1; i < c.factors.size(); ++i) prod = prod * c.factors[i];
      if (!(prod == q)) return false;
      for (std::size_t i = 0; i < c.factors.size(); ++i)
        if (!verify_on(c.factors[i], status, c.parts[i])) return false;
      return true;
    }
    case CertificateKind::UnivariateRootBound: {
      auto vars = q.active_variables();
      if (vars.size() > 1) return false;
      if (vars.empty()) return status == ZeroStatus::ZeroFreeOpen && !q.constant_term().is_zero();
      return status == ZeroStatus::ZeroFreeOpen &&
             univariate_open_disk_test(to_univariate(q, vars[0])).status == ZeroStatus::ZeroFreeOpen;
    }
    case CertificateKind::AffineReduction: {
      auto v = affine_reduction(q);
      return status == ZeroStatus::ZeroFreeOpen && v && v->status == ZeroStatus::ZeroFreeOpen;
    }
    case CertificateKind::NegativityTwist: {
      if (status != ZeroStatus::HasZero) return false;
      CycloNumber norm = q.constant_term().conj();
      std::vector<int> rho(q.nvars(), 1), both(q.nvars(), 1);
      for (std::size_t j = 0; j < q.nvars(); ++j) {
        auto it = c.rho.find(q.primes()[j]);
        rho[j] = it == c.rho.end() ? 1 : it->second;
        if (rho[j] < -1 || rho[j] > 1) return false;
        both[j] = rho[j];
        if (std::find(c.idempotent_zero.begin(), c.idempotent_zero.end(), q.primes()[j]) != c.idempotent_zero.end())
          both[j] = 0;
      }
      std::vector<CycloNumber> r1, r2;
      for (std::size_t j = 0; j < q.nvars(); ++j) {
        r1.emplace_back(static_cast<long>(rho[j]));
        r2.emplace_back(static_cast<long>(both[j]));
      }
      CycloNumber s1 = q.evaluate(r1) * norm, s2 = q.evaluate(r2) * norm;
      if (!s1.is_real() || !s2.is_real()) return false;
      for (const auto& [e, a] : q.terms())
        if (!(a * norm).is_real()) return false;
      if (c.idempotent_zero.empty()) return sign(s2) < 0;
      return sign(s2) < 0 || (sign(s1) > 0 && sign(s2) <= 0);
    }
    case CertificateKind::InteriorWitness: {
      if (status != ZeroStatus::HasZero || !c.certified || c.point.size() != q.nvars()) return false;
      for (const auto& b : c.point)
        if (!strictly_inside(b)) return false;
      if (c.exact_point) {
        if (c.exact_point->size() != q.nvars()) return false;
        for (const auto& z : *c.exact_point)
          if (!exact_inside(z)) return false;
        return q.evaluate(*c.exact_point).is_zero();
      }
      return q.evaluate(c.point, 96).contains_zero();
    }
    case CertificateKind::None:
      return status == ZeroStatus::Undetermined;
  }
  return false;
}

}  // namespace

bool verify_certificate(const BohrPoly& q, ZeroStatus status, const Certificate& c) {
  BohrPoly target = q;
  if (!c.removed.empty()) {
    Deflation d = boundary_deflation(q);
    BohrPoly prod = d.deflated;
    for (const auto& f : d.removed) prod = prod * f;
    if (!(prod == q)) return false;
    target = d.deflated;
  }
  return verify_on(target, status, c);
}

}  // namespace pds
