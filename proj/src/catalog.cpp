#include "pds/catalog.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <thread>

#include "pds/arith.hpp"
#include "pds/error.hpp"
#include "pds/interval.hpp"

namespace pds {

std::size_t ScanReport::count(CompletenessStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(entries.begin(), entries.end(), [&](const ScanEntry& e) { return e.verdict.status == s; }));
}

std::vector<std::string> ScanReport::complete() const {
  std::vector<std::string> out;
  for (const auto& e : entries)
    if (e.verdict.status == CompletenessStatus::Complete) out.push_back(e.descriptor);
  return out;
}

std::vector<std::string> ScanReport::mismatches() const {
  std::vector<std::string> out;
  for (const auto& e : entries)
    if (e.expected && *e.expected != (e.verdict.status == CompletenessStatus::Complete)) out.push_back(e.descriptor);
  return out;
}

ScanReport run_scan(const std::string& kind, std::vector<std::pair<std::string, StepFunction>> inputs,
                    const ScanOptions& opt) {
  ScanReport r;
  r.kind = kind;
  r.entries.resize(inputs.size());
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    r.entries[i].descriptor = std::move(inputs[i].first);
    r.entries[i].phi = std::move(inputs[i].second);
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errors(inputs.size());
  auto worker = [&] {
    for (std::size_t i = next++; i < r.entries.size(); i = next++) {
      try {
        r.entries[i].verdict = decide_completeness(r.entries[i].phi, opt.decide);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (const auto& e : r.entries)
    if (e.verdict.status == CompletenessStatus::Undetermined) r.undetermined.push_back(e.descriptor);
  return r;
}

std::string interval_descriptor(const Rational& a, const Rational& b) {
  return "(" + to_string(a) + "," + to_string(b) + ")";
}

namespace {

Rational R(long a, long b = 1) { return make_rational(a, b); }

// Union of cells [k/n, (k+1)/n] over chosen k, as maximal open intervals (numerators).
std::vector<std::pair<long, long>> runs(const std::vector<bool>& chosen) {
  std::vector<std::pair<long, long>> out;
  const long n = static_cast<long>(chosen.size());
  for (long k = 0; k < n;) {
    if (!chosen[static_cast<std::size_t>(k)]) {
      ++k;
      continue;
    }
    long e = k;
    while (e < n && chosen[static_cast<std::size_t>(e)]) ++e;
    out.emplace_back(k, e);
    k = e;
  }
  return out;
}

std::string runs_descriptor(const std::vector<std::pair<long, long>>& rs, long n) {
  std::string s;
  for (const auto& [a, b] : rs) {
    if (!s.empty()) s += "u";
    s += interval_descriptor(R(a, n), R(b, n));
  }
  return s;
}

StepFunction runs_function(const std::vector<std::pair<long, long>>& rs, long n) {
  std::vector<std::pair<CycloNumber, StepFunction>> terms;
  for (const auto& [a, b] : rs) terms.emplace_back(CycloNumber(1L), indicator(R(a, n), R(b, n)));
  return linear_combine(terms);
}

std::vector<Rational> farey(long n) {
  std::set<Rational> s;
  for (long b = 1; b <= n; ++b)
    for (long a = 0; a <= b; ++a) s.insert(R(a, b));
  return {s.begin(), s.end()};
}

}  // namespace

// ---------------------------------------------------------------- builders

StepFunction build_sn(const DirichletCharacter& psi, long n) {
  const long q = psi.modulus();
  if (n < 1) throw InvalidArgument("build_sn: n must be positive");
  if (q <= 1 || !psi.is_primitive() || psi.parity() != 1)
    throw InvalidArgument("build_sn: character must be primitive, even, with modulus > 1");
  std::vector<std::pair<CycloNumber, StepFunction>> terms;
  for (long m = 1; m <= (n * q - 1) / 2; ++m) {
    if (std::gcd(m, n) != 1) continue;
    CycloNumber v = psi(m);
    if (!v.is_zero()) terms.emplace_back(v, indicator(R(2 * m, n * q), R(1)));
  }
  return linear_combine(terms);
}

SnCombination sn_combination(const DirichletCharacter& psi, long u, const std::map<long, CycloNumber>& c) {
  if (u < 2 || u % 2 != 0) throw InvalidArgument("sn_combination: u must be a positive even integer");
  long up = u;
  for (auto [p, e] : factorize(psi.modulus()))
    while (up % p == 0) up /= p;
  const CycloNumber k(divisor_count(u * up) - 1);
  const CycloNumber c1 = c.count(1) ? c.at(1) : CycloNumber();
  SnCombination out;
  out.hypothesis = !c1.is_zero();
  std::vector<std::pair<CycloNumber, StepFunction>> terms;
  for (const auto& [d, cd] : c) {
    if (d < 1 || u % d != 0) throw InvalidArgument("sn_combination: coefficient index does not divide u");
    if (cd.is_zero()) continue;
    terms.emplace_back(cd, build_sn(psi, d));
    if (d > 1 && compare_abs(c1, k * cd) <= 0) out.hypothesis = false;
  }
  out.phi = linear_combine(terms);
  return out;
}

const char* to_string(CombVariant v) {
  switch (v) {
    case CombVariant::V: return "V";
    case CombVariant::VComplement: return "V_complement";
    case CombVariant::EvenT: return "even_t";
  }
  return "?";
}

StepFunction build_comb(long t, CombVariant variant) {
  const bool odd = variant != CombVariant::EvenT;
  if (odd && (t < 3 || t % 2 == 0)) throw InvalidArgument("build_comb: this variant needs odd t >= 3");
  if (!odd && (t < 4 || t % 2 != 0)) throw InvalidArgument("build_comb: even_t needs even t >= 4");
  std::vector<bool> chosen(static_cast<std::size_t>(t));
  for (long k = 0; k < t; ++k) {
    bool even_cell = k % 2 == 0;
    chosen[static_cast<std::size_t>(k)] = variant == CombVariant::VComplement ? !even_cell : even_cell;
  }
  return runs_function(runs(chosen), t);
}

StepFunction build_ladder(long t) {
  if (t < 3 || t % 2 == 0) throw InvalidArgument("build_ladder: t must be odd and >= 3");
  std::vector<std::pair<CycloNumber, StepFunction>> terms{{CycloNumber(1L), indicator(R(0), R(1))}};
  for (long k = 2; k < t; k += 2) terms.emplace_back(CycloNumber(1L), indicator(R(k, t), R(1)));
  return linear_combine(terms);
}

std::pair<std::string, std::string> alternating_combs(long n) {
  std::vector<bool> a(static_cast<std::size_t>(n)), b(static_cast<std::size_t>(n));
  for (long k = 0; k < n; ++k) {
    a[static_cast<std::size_t>(k)] = k % 2 == 1;
    b[static_cast<std::size_t>(k)] = k % 2 == 0;
  }
  return {runs_descriptor(runs(a), n), runs_descriptor(runs(b), n)};
}

// ---------------------------------------------------------------- scans

ScanReport enumerate_pl(long p, long l, const ScanOptions& opt) {
  if (!is_prime(p) || l < 1) throw InvalidArgument("enumerate_pl: need a prime p and l >= 1");
  const long n = ipow(p, static_cast<int>(l));
  if (n > 20) throw InvalidArgument("enumerate_pl: more than 20 cells");
  std::vector<std::pair<std::string, StepFunction>> inputs;
  for (unsigned long mask = 1; mask + 1 < (1UL << n); ++mask) {
    std::vector<bool> chosen(static_cast<std::size_t>(n));
    for (long k = 0; k < n; ++k) chosen[static_cast<std::size_t>(k)] = (mask >> k) & 1UL;
    auto rs = runs(chosen);
    long g = 0;
    for (auto [a, b] : rs) g = std::gcd(std::gcd(g, a), b);
    if (g % p == 0) continue;
    inputs.emplace_back(runs_descriptor(rs, n), runs_function(rs, n));
  }
  return run_scan("pl", std::move(inputs), opt);
}

ScanReport scan_intervals(long max_denominator, const ScanOptions& opt) {
  if (max_denominator < 1) throw InvalidArgument("scan_intervals: max_denominator must be positive");
  auto f = farey(max_denominator);
  std::set<std::string> listed(complete_interval_descriptors().begin(), complete_interval_descriptors().end());
  std::vector<std::pair<std::string, StepFunction>> inputs;
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j) inputs.emplace_back(interval_descriptor(f[i], f[j]), indicator(f[i], f[j]));
  ScanReport r = run_scan("intervals", std::move(inputs), opt);
  for (auto& e : r.entries) e.expected = listed.count(e.descriptor) > 0;
  return r;
}

ScanReport kozlov_scan(long max_denominator, const ScanOptions& opt) {
  if (max_denominator < 1) throw InvalidArgument("kozlov_scan: max_denominator must be positive");
  std::vector<std::pair<std::string, StepFunction>> inputs;
  for (const auto& r : farey(max_denominator))
    if (r > 0) inputs.emplace_back(to_string(r), indicator(R(0), r));
  ScanReport rep = run_scan("kozlov", std::move(inputs), opt);
  for (auto& e : rep.entries) e.expected = e.descriptor == "1" || e.descriptor == "1/2" || e.descriptor == "2/3";
  return rep;
}

const std::vector<std::string>& complete_interval_descriptors() {
  static const std::vector<std::string> v = {"(0,1)",     "(0,1/2)",   "(1/2,1)",   "(0,2/3)",   "(1/3,2/3)",
                                             "(1/3,1)",   "(1/4,3/4)", "(1/5,3/5)", "(2/5,4/5)", "(1/6,5/6)"};
  return v;
}

// ---------------------------------------------------------------- families

SumFamilyResult sum_family_check(const std::vector<StepFunction>& phis, const std::vector<Rational>& c,
                                 const DecideOptions& opt) {
  if (phis.empty() || phis.size() != c.size()) throw InvalidArgument("sum_family_check: need matching lists");
  SumFamilyResult out;
  for (const auto& phi : phis) out.t = std::lcm(out.t, minimal_denominator(phi));
  if (out.t % 2 == 0) throw InvalidArgument("sum_family_check: no odd common denominator");
  std::optional<std::vector<CycloNumber>> h0;
  bool equal = true, nonzero = false, all_complete = true;
  for (const auto& phi : phis) {
    std::vector<CycloNumber> h;
    for (long m = 1; m <= out.t; ++m) h.push_back(jump(phi, R(2 * m, out.t)));
    for (const auto& v : h) nonzero = nonzero || !v.is_zero();
    if (!h0)
      h0 = h;
    else if (*h0 != h)
      equal = false;
    all_complete = all_complete && decide_completeness(phi, opt).status == CompletenessStatus::Complete;
  }
  out.hypothesis = equal && nonzero && all_complete;
  std::vector<std::pair<CycloNumber, StepFunction>> terms;
  bool positive = true;
  for (std::size_t i = 0; i < phis.size(); ++i) {
    terms.emplace_back(CycloNumber(c[i]), phis[i]);
    positive = positive && c[i] > 0;
  }
  out.verdict = decide_completeness(linear_combine(terms), opt);
  if (out.hypothesis && positive && out.verdict.status != CompletenessStatus::Complete)
    throw InternalError("positive combination under the equal-jump hypothesis is not Complete");
  return out;
}

StepFunction family_function(const std::string& family, const Rational& c1, const Rational& c2) {
  if (family == "half")
    return linear_combine({{CycloNumber(c1), indicator(R(0), R(1, 2))}, {CycloNumber(c2), indicator(R(1, 2), R(1))}});
  if (family == "third")
    return linear_combine({{CycloNumber(c1), indicator(R(0), R(2, 3))}, {CycloNumber(c2), indicator(R(1, 3), R(1))}});
  throw InvalidArgument("unknown family '" + family + "'");
}

bool family_law(const std::string& family, const Rational& c1, const Rational& c2) {
  auto abs = [](const Rational& x) { return x < 0 ? Rational(-x) : x; };
  if (family == "half") return abs(c1 + c2) >= abs(c1 - c2);
  if (family == "third") return abs(c1 + c2) >= abs(c2);
  throw InvalidArgument("unknown family '" + family + "'");
}

ScanReport coefficient_family_sweep(const std::string& family, const std::vector<Rational>& grid,
                                    const ScanOptions& opt) {
  family_law(family, 0, 0);  // validates the name
  std::vector<std::pair<std::string, StepFunction>> inputs;
  std::vector<bool> law;
  for (const auto& a : grid)
    for (const auto& b : grid) {
      if (a == 0 && b == 0) continue;
      inputs.emplace_back("(" + to_string(a) + "," + to_string(b) + ")", family_function(family, a, b));
      law.push_back(family_law(family, a, b));
    }
  ScanReport r = run_scan("sweep-" + family, std::move(inputs), opt);
  for (std::size_t i = 0; i < law.size(); ++i) r.entries[i].expected = law[i];
  return r;
}

}  // namespace pds
