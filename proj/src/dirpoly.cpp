#include "pds/dirpoly.hpp"

#include <numeric>
#include <set>
#include <sstream>

#include "pds/arith.hpp"
#include "pds/characters.hpp"
#include "pds/error.hpp"

namespace pds {

DirichletPoly::DirichletPoly(std::map<long, CycloNumber> terms) {
  for (auto& [n, c] : terms) add_term(n, c);
}

CycloNumber DirichletPoly::coeff(long n) const {
  auto it = terms_.find(n);
  return it == terms_.end() ? CycloNumber() : it->second;
}

void DirichletPoly::add_term(long n, const CycloNumber& c) {
  if (n < 1) throw InvalidArgument("Dirichlet polynomial index must be positive");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(n, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::vector<long> DirichletPoly::support() const {
  std::vector<long> out;
  for (const auto& [n, c] : terms_) out.push_back(n);
  return out;
}

int DirichletPoly::value_order() const {
  int L = 1;
  for (const auto& [n, c] : terms_) L = std::lcm(L, c.order());
  return L;
}

DirichletPoly DirichletPoly::operator*(const DirichletPoly& o) const {
  DirichletPoly out;
  for (const auto& [m, a] : terms_)
    for (const auto& [n, b] : o.terms_) out.add_term(m * n, a * b);
  return out;
}

DirichletPoly DirichletPoly::operator+(const DirichletPoly& o) const {
  DirichletPoly out = *this;
  for (const auto& [n, b] : o.terms_) out.add_term(n, b);
  return out;
}

DirichletPoly DirichletPoly::scaled(const CycloNumber& c) const {
  DirichletPoly out;
  for (const auto& [n, a] : terms_) out.add_term(n, a * c);
  return out;
}

bool operator==(const DirichletPoly& a, const DirichletPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [n, c] : a.terms_) {
    if (it->first != n || it->second != c) return false;
    ++it;
  }
  return true;
}

std::string DirichletPoly::debug_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [n, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.debug_string() << ")";
    if (n != 1) os << "*" << n << "^{-s}";
  }
  return os.str();
}

BohrPoly::BohrPoly(std::vector<long> primes, std::map<Exponents, CycloNumber> terms) : primes_(std::move(primes)) {
  for (auto& [e, c] : terms) add_term(e, c);
}

CycloNumber BohrPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? CycloNumber() : it->second;
}

CycloNumber BohrPoly::constant_term() const { return coeff(Exponents(primes_.size(), 0)); }

void BohrPoly::add_term(const Exponents& e, const CycloNumber& c) {
  if (e.size() != primes_.size()) throw InvalidArgument("exponent vector length differs from variable count");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

bool BohrPoly::is_constant() const {
  for (const auto& [e, c] : terms_)
    for (int x : e)
      if (x != 0) return false;
  return true;
}

int BohrPoly::degree_in(std::size_t j) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[j]);
  return d;
}

std::vector<std::size_t> BohrPoly::active_variables() const {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < primes_.size(); ++j)
    if (degree_in(j) > 0) out.push_back(j);
  return out;
}

int BohrPoly::value_order() const {
  int L = 1;
  for (const auto& [e, c] : terms_) L = std::lcm(L, c.order());
  return L;
}

CycloNumber BohrPoly::evaluate(const std::vector<CycloNumber>& z) const {
  if (z.size() != primes_.size()) throw InvalidArgument("point dimension differs from variable count");
  std::vector<std::vector<CycloNumber>> pw(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) {
    pw[j].push_back(CycloNumber(1L));
    for (int k = 1; k <= degree_in(j); ++k) pw[j].push_back(pw[j].back() * z[j]);
  }
  CycloNumber sum;
  for (const auto& [e, c] : terms_) {
    CycloNumber t = c;
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j] > 0) t *= pw[j][static_cast<std::size_t>(e[j])];
    sum += t;
  }
  return sum;
}

ComplexInterval BohrPoly::evaluate(const std::vector<ComplexInterval>& z, int precision) const {
  if (z.size() != primes_.size()) throw InvalidArgument("point dimension differs from variable count");
  const int bits = precision + 16;
  std::vector<std::vector<ComplexInterval>> pw(z.size());
  for (std::size_t j = 0; j < z.size(); ++j) {
    pw[j].push_back(ComplexInterval(Interval(1)));
    for (int k = 1; k <= degree_in(j); ++k) pw[j].push_back((pw[j].back() * z[j]).rounded(bits));
  }
  ComplexInterval sum(Interval(0));
  for (const auto& [e, c] : terms_) {
    ComplexInterval t = embed(c, bits);
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j] > 0) t = (t * pw[j][static_cast<std::size_t>(e[j])]).rounded(bits);
    sum = sum + t;
  }
  return sum;
}

BohrPoly BohrPoly::operator*(const BohrPoly& o) const {
  if (primes_ != o.primes_) throw InvalidArgument("Bohr polynomials over different prime lists");
  BohrPoly out(primes_, {});
  for (const auto& [a, x] : terms_)
    for (const auto& [b, y] : o.terms_) {
      Exponents e(a.size());
      for (std::size_t j = 0; j < a.size(); ++j) e[j] = a[j] + b[j];
      out.add_term(e, x * y);
    }
  return out;
}

bool operator==(const BohrPoly& a, const BohrPoly& b) {
  if (a.primes_ != b.primes_ || a.terms_.size() != b.terms_.size()) return false;
  auto it = b.terms_.begin();
  for (const auto& [e, c] : a.terms_) {
    if (it->first != e || it->second != c) return false;
    ++it;
  }
  return true;
}

DirichletPoly BohrPoly::to_dirichlet() const {
  DirichletPoly out;
  for (const auto& [e, c] : terms_) {
    long n = 1;
    for (std::size_t j = 0; j < e.size(); ++j) n *= ipow(primes_[j], e[j]);
    out.add_term(n, c);
  }
  return out;
}

std::string BohrPoly::debug_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.debug_string() << ")";
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] == 0) continue;
      os << "*z" << primes_[j];
      if (e[j] > 1) os << "^" << e[j];
    }
  }
  return os.str();
}

BohrPoly bohr_lift(const DirichletPoly& p, const std::vector<long>& primes) {
  BohrPoly out(primes, {});
  for (const auto& [n, c] : p.terms()) {
    BohrPoly::Exponents e(primes.size(), 0);
    long rest = n;
    for (std::size_t j = 0; j < primes.size(); ++j)
      while (rest % primes[j] == 0) {
        rest /= primes[j];
        ++e[j];
      }
    if (rest != 1) throw InvalidArgument("prime list does not cover the support");
    out.add_term(e, c);
  }
  return out;
}

BohrPoly bohr_lift(const DirichletPoly& p) {
  std::set<long> ps;
  for (const auto& [n, c] : p.terms())
    for (auto [q, e] : factorize(n)) ps.insert(q);
  return bohr_lift(p, std::vector<long>(ps.begin(), ps.end()));
}

DirichletPoly twist(const DirichletPoly& p, const std::map<long, CycloNumber>& rho) {
  for (const auto& [q, v] : rho)
    if (compare_abs(v, CycloNumber(1L)) > 0) throw InvalidArgument("twist value exceeds 1 in modulus at p=" + std::to_string(q));
  DirichletPoly out;
  for (const auto& [n, c] : p.terms()) {
    CycloNumber t = c;
    for (auto [q, e] : factorize(n)) {
      auto it = rho.find(q);
      if (it == rho.end()) continue;
      for (int k = 0; k < e; ++k) t *= it->second;
    }
    out.add_term(n, t);
  }
  return out;
}

ComplexInterval power_neg_s(long n, const ComplexInterval& s, int precision) {
  if (n == 1) return ComplexInterval(Interval(1));
  const int bits = precision + 32;
  Interval ln = log_interval(Rational(n), bits);
  Interval mag = exp_interval(-(s.re * ln).rounded(bits), bits);
  Interval arg = (s.im * ln).rounded(bits);
  ComplexInterval unit(cos_interval(arg, bits), -sin_interval(arg, bits));
  return (ComplexInterval(mag) * unit).rounded(bits);
}

ComplexInterval evaluate(const DirichletPoly& p, const ComplexInterval& s, int precision) {
  ComplexInterval sum(Interval(0));
  for (const auto& [n, c] : p.terms()) sum = sum + embed(c, precision + 16) * power_neg_s(n, s, precision + 8);
  return sum.rounded(precision + 4);
}

LPartialSum l_partial_sum(const DirichletCharacter& chi, const ComplexInterval& s, long N, int precision) {
  LPartialSum out{ComplexInterval(Interval(0)), std::nullopt};
  for (long n = 1; n <= N; ++n) {
    CycloNumber v = chi(n);
    if (v.is_zero()) continue;
    out.value = (out.value + embed(v, precision + 16) * power_neg_s(n, s, precision + 8)).rounded(precision + 8);
  }
  const Rational& sigma = s.re.lo;
  if (sigma > 1) {
    // sum_{n>N} n^{-sigma} <= N^{1-sigma}/(sigma-1)
    if (sigma.get_den() == 1 && sigma.get_num() < 64) {
      Integer pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(N), sigma.get_num().get_ui() - 1);
      out.tail_bound = Rational(1) / (Rational(pw) * (sigma - 1));
      return out;
    }
    Interval e = exp_interval((Interval(1 - sigma) * log_interval(Rational(N), precision + 16)).rounded(precision + 16),
                              precision + 16);
    out.tail_bound = e.hi / (sigma - 1);
  }
  return out;
}

}  // namespace pds
