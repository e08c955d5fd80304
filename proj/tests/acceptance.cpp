// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when a
// criterion fails, unless it is listed with --expect-fail.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "pds/arith.hpp"
#include "pds/catalog.hpp"
#include "pds/error.hpp"
#include "pds/numoracle.hpp"
#include "pds/selftest.hpp"

using namespace pds;

namespace {

// pinned limits
constexpr double kIntervalSeconds = 60, kKozlovSeconds = 60, kPlSeconds = 120, kIdentitySeconds = 120;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Rational R(long a, long b = 1) { return make_rational(a, b); }
CycloNumber C(long v) { return CycloNumber(v); }
StepFunction chi(long a, long b, long c, long d) { return indicator(R(a, b), R(c, d)); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::set<std::string> as_set(const std::vector<std::string>& v) { return {v.begin(), v.end()}; }

std::string join(const std::set<std::string>& s) {
  std::string out;
  for (const auto& x : s) out += (out.empty() ? "" : ",") + x;
  return "{" + out + "}";
}

// shared corpus of criteria 1-3
struct Corpus {
  ScanReport intervals6, intervals12, kozlov, pl7, pl5;
  double t_int12 = 0, t_koz = 0, t_pl = 0;
  std::vector<const ScanEntry*> all() const {
    std::vector<const ScanEntry*> out;
    for (const auto* r : {&intervals12, &kozlov, &pl7, &pl5})
      for (const auto& e : r->entries) out.push_back(&e);
    return out;
  }
};

Corpus build_corpus() {
  Corpus c;
  c.intervals6 = scan_intervals(6);
  auto t0 = std::chrono::steady_clock::now();
  c.intervals12 = scan_intervals(12);
  c.t_int12 = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  c.kozlov = kozlov_scan(40);
  c.t_koz = seconds_since(t0);
  t0 = std::chrono::steady_clock::now();
  c.pl7 = enumerate_pl(7, 1);
  c.pl5 = enumerate_pl(5, 1);
  c.t_pl = seconds_since(t0);
  return c;
}

Outcome criterion1(const Corpus& c) {
  Outcome o;
  const auto listed = as_set(complete_interval_descriptors());
  for (const auto* r : {&c.intervals6, &c.intervals12}) {
    if (as_set(r->complete()) != listed) o.fail("complete set " + join(as_set(r->complete())));
    if (!r->undetermined.empty()) o.fail(std::to_string(r->undetermined.size()) + " undetermined");
  }
  if (c.t_int12 >= kIntervalSeconds) o.fail("max_denominator 12 took " + std::to_string(c.t_int12) + " s");
  std::ostringstream s;
  s << c.intervals6.entries.size() << " + " << c.intervals12.entries.size() << " intervals, 10 complete each, "
    << c.t_int12 << " s for max_denominator 12";
  if (o.pass) o.detail = s.str();
  return o;
}

Outcome criterion2(const Corpus& c) {
  Outcome o;
  auto got = as_set(c.kozlov.complete());
  if (got != std::set<std::string>{"1", "1/2", "2/3"}) o.fail("complete set " + join(got));
  if (!c.kozlov.undetermined.empty()) o.fail("undetermined present");
  if (c.t_koz >= kKozlovSeconds) o.fail("too slow");
  if (o.pass) o.detail = std::to_string(c.kozlov.entries.size()) + " radii, complete " + join(got);
  return o;
}

Outcome criterion3(const Corpus& c) {
  Outcome o;
  auto combs = alternating_combs(7);
  auto got7 = as_set(c.pl7.complete());
  if (got7 != std::set<std::string>{combs.first, combs.second}) o.fail("p=7 complete set " + join(got7));
  auto got5 = as_set(c.pl5.complete());
  if (got5.size() <= 2 || !got5.count("(1/5,3/5)") || !got5.count("(2/5,4/5)")) o.fail("p=5 complete set " + join(got5));
  if (!c.pl7.undetermined.empty() || !c.pl5.undetermined.empty()) o.fail("undetermined present");
  if (c.t_pl >= kPlSeconds) o.fail("too slow");
  if (o.pass)
    o.detail = "p=7: 2 of " + std::to_string(c.pl7.entries.size()) + "; p=5: " + std::to_string(got5.size()) + " of " +
               std::to_string(c.pl5.entries.size());
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::vector<Rational> grid;
  for (long k = -3; k <= 3; ++k) grid.push_back(R(k));
  std::size_t n = 0;
  for (const char* fam : {"half", "third"}) {
    auto r = coefficient_family_sweep(fam, grid);
    n += r.entries.size();
    if (!r.mismatches().empty()) o.fail(std::string(fam) + " mismatch at " + r.mismatches()[0]);
    if (!r.undetermined.empty()) o.fail(std::string(fam) + " undetermined at " + r.undetermined[0]);
  }
  if (o.pass) o.detail = std::to_string(n) + " grid points match both laws including equality";
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto complete = [](const StepFunction& phi) {
    return decide_completeness(phi).status == CompletenessStatus::Complete;
  };
  std::vector<std::pair<std::string, DirichletCharacter>> chars = {
      {"legendre mod 5", legendre_character(5)},
      {"mod 12", character_from_values(12, {{5, C(-1)}, {7, C(-1)}, {11, C(1)}})},
      {"mod 8", character_from_values(8, {{3, C(-1)}, {5, C(-1)}})},
      {"mod 7 omega", character_from_values(7, {{2, root_of_unity(3, 1)}, {3, root_of_unity(3, 2)}})},
      {"mod 7 omega-bar", character_from_values(7, {{2, root_of_unity(3, 2)}, {3, root_of_unity(3, 1)}})}};
  int decided = 0;
  for (const auto& [name, psi] : chars)
    for (long v : {1L, 2L, 3L, 6L}) {
      if (std::gcd(v, psi.modulus()) != 1) continue;
      ++decided;
      if (!complete(build_sn(psi, v))) o.fail(name + " S_" + std::to_string(v) + " not Complete");
    }
  // explicit membership claims
  const auto& l5 = chars[0].second;
  std::vector<std::pair<std::string, std::pair<StepFunction, StepFunction>>> eq = {
      {"S2 mod 5", {build_sn(l5, 2), chi(1, 5, 3, 5)}},
      {"S1 mod 5", {build_sn(l5, 1), chi(2, 5, 4, 5)}},
      {"S3 mod 5", {build_sn(l5, 3), linear_combine({{C(1), chi(2, 15, 4, 15)}, {C(1), chi(8, 15, 14, 15)}})}},
      {"S6 mod 5", {build_sn(l5, 6), linear_combine({{C(1), chi(1, 15, 7, 15)}, {C(1), chi(11, 15, 13, 15)}})}},
      {"S1 mod 12", {build_sn(chars[1].second, 1), chi(1, 6, 5, 6)}},
      {"S1 mod 8", {build_sn(chars[2].second, 1), chi(1, 4, 3, 4)}},
      {"S3 mod 8", {build_sn(chars[2].second, 3), linear_combine({{C(1), chi(1, 12, 5, 12)}, {C(1), chi(7, 12, 11, 12)}})}}};
  for (long k : {1L, 2L}) {
    const auto& psi = chars[2 + k].second;
    CycloNumber w = root_of_unity(3, k);
    eq.push_back({"S1 mod 7", {build_sn(psi, 1), linear_combine({{C(1), chi(2, 7, 4, 7)}, {-w.conj(), chi(4, 7, 6, 7)}})}});
    eq.push_back({"S2 mod 7", {build_sn(psi, 2), linear_combine({{C(1), chi(1, 7, 3, 7)}, {-w, chi(3, 7, 5, 7)}})}});
    // chi_(2/7,4/7) - omega chi_(4/7,6/7) for either cube root omega
    if (!complete(linear_combine({{C(1), chi(2, 7, 4, 7)}, {-w, chi(4, 7, 6, 7)}})))
      o.fail("chi(2/7,4/7) - omega chi(4/7,6/7) not Complete");
  }
  for (const auto& [name, pr] : eq) {
    if (!(pr.first == pr.second)) o.fail(name + " differs from the stated function");
    if (!complete(pr.second)) o.fail(name + " not Complete");
  }
  // alpha chi_(1/5,3/5) + beta chi_(2/5,4/5) with 2|alpha| <= |beta|
  int combos = 0;
  for (auto [alpha, beta] : std::vector<std::pair<CycloNumber, CycloNumber>>{
           {C(1), C(3)}, {C(1), C(2)}, {C(-1), C(2)}, {root_of_unity(4, 1), C(2)}, {C(1), root_of_unity(3, 1) * C(2)}, {C(0), C(1)}}) {
    ++combos;
    auto s = sn_combination(l5, 2, {{1, beta}, {2, alpha}});
    if (!complete(s.phi)) o.fail("combination " + alpha.debug_string() + ", " + beta.debug_string() + " not Complete");
  }
  if (o.pass)
    o.detail = std::to_string(decided) + " S_v decided, " + std::to_string(eq.size()) + " stated functions, " +
               std::to_string(combos) + " combinations, all Complete";
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (long t = 3; t <= 15; t += 2) {
    auto v = decide_completeness(build_ladder(t));
    DirichletPoly want({{1, C(t + 2)}, {2, C(-(t + 1))}, {t, C(1)}});
    if (v.status != CompletenessStatus::Complete) o.fail("t=" + std::to_string(t) + " not Complete");
    else if (!(*v.theorem_polynomial == want)) o.fail("t=" + std::to_string(t) + " polynomial " + v.theorem_polynomial->debug_string());
    else if (v.zero_verdict->certificate.kind != CertificateKind::Dominance) o.fail("t=" + std::to_string(t) + " not via Dominance");
  }
  if (o.pass) o.detail = "t = 3..15 odd: Complete via Dominance, P = (t+2) - (t+1)2^-s + t^-s";
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto comb = build_comb(3, CombVariant::V);
  auto lad = build_ladder(3);
  for (auto c : {std::vector<Rational>{R(1), R(1)}, {R(2), R(5)}, {R(1, 3), R(7)}}) {
    auto r = sum_family_check({comb, lad}, c);
    if (!r.hypothesis) o.fail("hypothesis false");
    if (r.verdict.status != CompletenessStatus::Complete) o.fail("sum not Complete");
  }
  if (o.pass) o.detail = "hypothesis true and Complete for (1,1), (2,5), (1/3,7)";
  return o;
}

Outcome criterion8() {
  Outcome o;
  auto t0 = std::chrono::steady_clock::now();
  long total = 0;
  for (const auto& r : run_selftest()) {
    total += r.passed + r.failed;
    if (!r.ok()) o.fail(r.name + ": " + r.first_failure);
  }
  double s = seconds_since(t0);
  if (s >= kIdentitySeconds) o.fail("took " + std::to_string(s) + " s");
  if (o.pass) o.detail = std::to_string(total) + " exact checks in " + std::to_string(s) + " s";
  return o;
}

bool contains(const Interval& x, const Rational& v) { return x.lo <= v && v <= x.hi; }

Outcome criterion9() {
  Outcome o;
  auto dp = [](std::map<long, long> t) {
    std::map<long, CycloNumber> m;
    for (auto [n, c] : t) m[n] = C(c);
    return DirichletPoly(m);
  };
  DirichletPoly p3a = dp({{1, 1}, {2, 1}}), p3b = dp({{1, 1}, {2, -1}, {3, -1}});
  std::vector<std::pair<std::string, DirichletPoly>> ps = {{"P1", dp({{1, 1}, {2, -1}, {3, -1}, {6, -1}})},
                                                          {"P2", dp({{1, 1}, {2, -2}, {3, -1}})},
                                                          {"P3", p3a * p3b},
                                                          {"P4", dp({{1, 1}, {2, 1}, {3, -1}, {4, 1}})}};
  for (const auto& [name, p] : ps)
    if (!twist_idempotent_reject(p)) o.fail(name + " not rejected by the twist layer");
  DirichletPoly p = dp({{1, 1}, {2, 1}, {3, 1}, {6, -1}});
  auto w = interior_zero_search(bohr_lift(p), R(1, 10), 64);
  if (!w || !w->certified) {
    o.fail("no certified interior witness");
  } else {
    const auto& pt = w->point;
    bool in = pt.size() == 2 && contains(pt[0].re, R(-1, 2)) && contains(pt[0].im, R(0)) &&
              contains(pt[1].re, R(-1, 3)) && contains(pt[1].im, R(0));
    if (!in) o.fail("witness enclosure misses (-1/2, -1/3)");
    if (!verify_certificate(bohr_lift(p), ZeroStatus::HasZero, *w)) o.fail("witness does not re-verify");
  }
  if (o.pass) o.detail = "P1-P4 rejected by twists; certified witness contains (-1/2,-1/3)";
  return o;
}

Outcome criterion10(const Corpus& c) {
  Outcome o;
  DecideOptions cert;
  cert.mode = DecideMode::Certify;
  long runs = 0, checked = 0;
  for (const auto* e : c.all()) {
    CompletenessVerdict v;
    try {
      v = decide_completeness(e->phi, cert);
      ++runs;
    } catch (const InternalError& err) {
      o.fail(e->descriptor + ": " + err.what());
      continue;
    }
    if (!v.character) continue;
    const DirichletCharacter& psi = *v.character;
    JumpData jd = jump_data(e->phi, v.t);
    PeriodicFn f = sine_coeff_fn(e->phi, v.t);
    const long q0 = psi.modulus();
    for (long d : divisors(jd.q / q0)) {
      ++checked;
      if (convolve_mu_psi(f, psi.conj(), d) != gauss_sum(psi) * C(d) * convolve_mu_psi(jd.g, psi, jd.q / (d * q0)))
        o.fail(e->descriptor + ": identity fails at d=" + std::to_string(d));
    }
  }
  if (o.pass)
    o.detail = std::to_string(runs) + " certify runs, identity checked exactly at " + std::to_string(checked) + " divisors";
  return o;
}

Outcome criterion11(const Corpus& c) {
  Outcome o;
  auto entries = c.all();
  const std::vector<CycloNumber> scalars = {C(-3), CycloNumber(R(2, 7)) * root_of_unity(5, 2)};
  for (const auto* e : entries) {
    const CompletenessStatus base = e->verdict.status;
    for (const auto& s : scalars)
      if (decide_completeness(linear_combine({{s, e->phi}})).status != base) o.fail(e->descriptor + ": scaling changes verdict");
    const long t = minimal_denominator(e->phi);
    DecideOptions doubled;
    doubled.t = 2 * t;
    auto v2 = decide_completeness(e->phi, doubled);
    if (v2.status != base) o.fail(e->descriptor + ": doubling t changes verdict");
    auto a = find_character(e->phi, t), b = find_character(e->phi, 2 * t);
    if (a.has_value() != b.has_value() || (a && *a != *b)) o.fail(e->descriptor + ": character depends on t");
  }
  if (entries.size() < 1200) o.fail("corpus has only " + std::to_string(entries.size()) + " inputs");
  if (o.pass)
    o.detail = std::to_string(entries.size()) + " inputs: scaling by 2 scalars, t -> 2t, character at t and 2t";
  return o;
}

Outcome criterion12() {
  Outcome o;
  auto a = calibrate(64, 512);
  auto b = calibrate(64, 512);
  if (to_csv(a) != to_csv(b)) o.fail("calibration CSV not reproducible");
  std::ostringstream s;
  s << "complete ceiling " << a.thresholds.complete_ceiling << ", incomplete floor " << a.thresholds.incomplete_floor;
  if (!a.thresholds.separated()) o.fail("populations overlap: " + s.str());
  if (o.pass) o.detail = "separated: " + s.str() + "; CSV reproducible";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  std::set<int> expect_fail;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--expect-fail") == 0 && i + 1 < argc) {
      std::stringstream ss(argv[++i]);
      std::string item;
      while (std::getline(ss, item, ',')) expect_fail.insert(std::stoi(item));
    }

  auto t0 = std::chrono::steady_clock::now();
  Corpus corpus = build_corpus();
  std::vector<std::function<Outcome()>> criteria = {
      [&] { return criterion1(corpus); }, [&] { return criterion2(corpus); }, [&] { return criterion3(corpus); },
      criterion4,                          criterion5,                          criterion6,
      criterion7,                          criterion8,                          criterion9,
      [&] { return criterion10(corpus); }, [&] { return criterion11(corpus); }, criterion12};
  int unexpected = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i + 1);
    Outcome out;
    try {
      out = criteria[i]();
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << out.detail;
    if (!out.pass && expect_fail.count(id)) std::cout << " [expected]";
    std::cout << std::endl;
    if (!out.pass && !expect_fail.count(id)) ++unexpected;
  }
  std::cout << "total " << seconds_since(t0) << " s" << std::endl;
  return unexpected == 0 ? 0 : 1;
}
