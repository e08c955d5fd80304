#include "pds/stepfn.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "pds/error.hpp"
#include "pds/interval.hpp"

namespace pds {

StepFunction::StepFunction() : breaks_{Rational(0), Rational(1)}, values_{CycloNumber()} {}

std::vector<StepPiece> StepFunction::pieces() const {
  std::vector<StepPiece> out;
  for (std::size_t i = 0; i < values_.size(); ++i) out.push_back({breaks_[i], breaks_[i + 1], values_[i]});
  return out;
}

bool StepFunction::is_zero() const { return values_.size() == 1 && values_[0].is_zero(); }

const CycloNumber& StepFunction::right_limit(const Rational& x) const {
  if (x < 0 || x >= 1) throw InvalidArgument("right limit outside [0,1)");
  auto it = std::upper_bound(breaks_.begin(), breaks_.end(), x);
  return values_[static_cast<std::size_t>(it - breaks_.begin()) - 1];
}

const CycloNumber& StepFunction::left_limit(const Rational& x) const {
  if (x <= 0 || x > 1) throw InvalidArgument("left limit outside (0,1]");
  auto it = std::lower_bound(breaks_.begin(), breaks_.end(), x);
  return values_[static_cast<std::size_t>(it - breaks_.begin()) - 1];
}

bool operator==(const StepFunction& a, const StepFunction& b) {
  return a.breaks_ == b.breaks_ && a.values_ == b.values_;
}

std::string StepFunction::debug_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) os << ", ";
    os << "(" << to_string(breaks_[i]) << "," << to_string(breaks_[i + 1]) << "):" << values_[i].debug_string();
  }
  return os.str();
}

StepFunction make_step(const std::vector<StepPiece>& input, int value_order) {
  if (input.empty()) throw InvalidArgument("step function needs at least one piece");
  std::vector<StepPiece> ps = input;
  std::sort(ps.begin(), ps.end(), [](const StepPiece& a, const StepPiece& b) { return a.from < b.from; });
  if (ps.front().from != 0) throw InvalidArgument("pieces must start at 0");
  if (ps.back().to != 1) throw InvalidArgument("pieces must end at 1");
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (!(ps[i].from < ps[i].to)) throw InvalidArgument("piece with from >= to");
    if (i > 0 && ps[i].from < ps[i - 1].to) throw InvalidArgument("overlapping pieces");
    if (i > 0 && ps[i].from > ps[i - 1].to) throw InvalidArgument("gap between pieces");
  }
  StepFunction f;
  f.breaks_ = {Rational(0)};
  f.values_.clear();
  int L = std::max(1, value_order);
  for (const auto& p : ps) {
    L = std::lcm(L, p.value.order());
    if (!f.values_.empty() && f.values_.back() == p.value) {
      f.breaks_.back() = p.to;
    } else {
      f.values_.push_back(p.value);
      f.breaks_.push_back(p.to);
    }
  }
  f.order_ = L;
  return f;
}

StepFunction indicator(const Rational& a, const Rational& b) {
  if (!(0 <= a && a < b && b <= 1)) throw InvalidArgument("indicator needs 0 <= a < b <= 1");
  std::vector<StepPiece> ps;
  if (a > 0) ps.push_back({0, a, CycloNumber()});
  ps.push_back({a, b, CycloNumber(1L)});
  if (b < 1) ps.push_back({b, 1, CycloNumber()});
  return make_step(ps);
}

StepFunction linear_combine(const std::vector<std::pair<CycloNumber, StepFunction>>& terms) {
  if (terms.empty()) throw InvalidArgument("linear_combine needs at least one term");
  std::vector<Rational> cuts;
  int L = 1;
  for (const auto& [c, phi] : terms) {
    cuts.insert(cuts.end(), phi.breakpoints().begin(), phi.breakpoints().end());
    L = std::lcm(L, phi.value_order());
    L = std::lcm(L, c.order());
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  std::vector<StepPiece> ps;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    CycloNumber v;
    for (const auto& [c, phi] : terms) v += c * phi.right_limit(cuts[i]);
    ps.push_back({cuts[i], cuts[i + 1], v});
  }
  return make_step(ps, L);
}

CycloNumber jump(const StepFunction& phi, const Rational& x) {
  // reduce to [0, 2)
  Rational r = x / 2;
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  Rational y = x - Rational(fl) * 2;
  if (y > 1) y = 2 - y;
  if (y == 0) return phi.right_limit(0) * CycloNumber(2L);
  if (y == 1) return phi.left_limit(1) * CycloNumber(-2L);
  return phi.right_limit(y) - phi.left_limit(y);
}

long minimal_denominator(const StepFunction& phi) {
  long t = 1;
  const auto& b = phi.breakpoints();
  for (std::size_t i = 1; i + 1 < b.size(); ++i) t = std::lcm(t, b[i].get_den().get_si());
  return t;
}

JumpData jump_data(const StepFunction& phi, long t) {
  if (t < 1 || t % minimal_denominator(phi) != 0) {
    throw InvalidArgument("t = " + std::to_string(t) + " is not a common denominator of the breakpoints");
  }
  const long q = 2 * t;
  std::vector<CycloNumber> g;
  g.reserve(static_cast<std::size_t>(q));
  for (long m = 1; m <= q; ++m) {
    Rational x(m, t);
    x.canonicalize();
    g.push_back(jump(phi, x));
  }
  return {t, q, PeriodicFn(q, std::move(g))};
}

PeriodicFn sine_coeff_fn(const StepFunction& phi, long t) {
  JumpData jd = jump_data(phi, t);
  PeriodicFn f = inverse_fourier_transform(jd.g);
  if (fourier_transform(f) != jd.g) throw InternalError("Fourier transform of f does not reproduce the jump data");
  return f;
}

std::vector<BwCoefficient> bw_coefficients(const StepFunction& phi, long N) {
  if (N < 1) throw InvalidArgument("N must be positive");
  PeriodicFn f = sine_coeff_fn(phi, minimal_denominator(phi));
  std::vector<BwCoefficient> out;
  for (long n = 1; n <= N; ++n) {
    const CycloNumber& v = f(n);
    ComplexInterval e = embed(v, 60);
    std::complex<double> a(e.re.approx(), e.im.approx());
    a /= std::sqrt(2.0) * M_PI * static_cast<double>(n);
    out.push_back({n, v, a});
  }
  return out;
}

}  // namespace pds
