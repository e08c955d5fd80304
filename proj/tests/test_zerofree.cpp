#include <Eigen/Eigenvalues>
#include <complex>
#include <random>

#include "doctest.h"
#include "pds/error.hpp"
#include "pds/zerofree.hpp"

using namespace pds;

namespace {

DirichletPoly dp(std::map<long, long> t) {
  std::map<long, CycloNumber> m;
  for (auto [n, c] : t) m[n] = CycloNumber(c);
  return DirichletPoly(m);
}

Rational R(long a, long b = 1) { return make_rational(a, b); }

BohrPoly bp(std::vector<long> primes, std::map<std::vector<int>, CycloNumber> t) {
  return BohrPoly(std::move(primes), std::move(t));
}

UPoly up(std::vector<long> c) {
  std::vector<CycloNumber> v;
  for (long x : c) v.emplace_back(x);
  return UPoly(v);
}

// Companion-matrix roots (independent of the Aberth code).
std::vector<std::complex<double>> eigen_roots(const UPoly& p) {
  const int n = p.degree();
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(n, n);
  auto lead = [&](int k) {
    ComplexInterval e = embed(p.coeff(k), 60);
    return std::complex<double>(e.re.mid().get_d(), e.im.mid().get_d());
  };
  std::complex<double> an = lead(n);
  for (int i = 1; i < n; ++i) C(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) C(i, n - 1) = -lead(i) / an;
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C);
  std::vector<std::complex<double>> out;
  for (int i = 0; i < n; ++i) out.push_back(es.eigenvalues()(i));
  return out;
}

// Dense random sample of |Q| > 0 at interval precision in the radius-0.99 polydisk.
bool sample_refutes(const BohrPoly& q, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0, 1);
  const double pi = std::acos(-1.0);
  for (int s = 0; s < count; ++s) {
    std::vector<ComplexInterval> z;
    for (std::size_t j = 0; j < q.nvars(); ++j) {
      auto w = std::polar(0.99 * std::sqrt(u(rng)), 2 * pi * u(rng));
      z.emplace_back(Interval(Interval(Rational(w.real())).rounded(24).lo),
                     Interval(Interval(Rational(w.imag())).rounded(24).lo));
    }
    if (q.evaluate(z, 24).contains_zero()) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("dominance") {
  CHECK(dominance_certificate(dp({{1, 2}, {2, 1}, {4, -1}})).has_value());
  CHECK(dominance_certificate(dp({{1, 1}, {2, 1}})).has_value());
  CHECK_FALSE(dominance_certificate(dp({{1, 1}, {2, -1}, {3, -1}})).has_value());
  CHECK(dominance_certificate(dp({{1, 3}, {3, -1}})).has_value());
  CHECK(dominance_certificate(dp({{1, 5}, {2, -4}, {3, 1}})).has_value());
  // |1 + zeta_3| = 1
  DirichletPoly p({{1, CycloNumber(1L)}, {2, CycloNumber(1L) + root_of_unity(3, 1)}});
  CHECK(dominance_certificate(p).has_value());
  DirichletPoly p2({{1, CycloNumber(1L)}, {2, root_of_unity(5, 1)}, {3, root_of_unity(5, 2)}});
  CHECK_FALSE(dominance_certificate(p2).has_value());
}

TEST_CASE("separable factorization") {
  CycloNumber w = root_of_unity(3, 1);
  std::vector<long> ps{2, 3};
  BohrPoly f1 = bp(ps, {{{0, 0}, -w}, {{1, 0}, CycloNumber(1L)}});
  BohrPoly f2 = bp(ps, {{{0, 0}, -w.conj()}, {{0, 1}, CycloNumber(1L)}});
  auto fs = separable_factorization(f1 * f2);
  REQUIRE(fs.size() == 2);
  CHECK(fs[0] * fs[1] == f1 * f2);
  for (const auto& f : fs) CHECK(f.active_variables().size() == 1);
  CHECK(separable_factorization(bohr_lift(dp({{1, 1}, {2, 1}, {3, 1}, {6, -1}}))).empty());
  auto g = separable_factorization(bohr_lift(dp({{1, 1}, {2, 1}, {3, -1}, {6, -1}})));
  REQUIRE(g.size() == 2);
  CHECK(g[0] * g[1] == bohr_lift(dp({{1, 1}, {2, 1}, {3, -1}, {6, -1}})));
  // three factors
  BohrPoly three = bohr_lift(dp({{1, 1}, {2, 1}}) * dp({{1, 2}, {3, -1}}) * dp({{1, 3}, {5, 1}, {25, 1}}));
  CHECK(separable_factorization(three).size() == 3);
}

TEST_CASE("univariate open disk test") {
  CHECK(univariate_open_disk_test(up({1, 1})).status == ZeroStatus::ZeroFreeOpen);
  CHECK(univariate_open_disk_test(up({2, 1, -1})).status == ZeroStatus::ZeroFreeOpen);
  auto v = univariate_open_disk_test(up({1, -2}));
  CHECK(v.status == ZeroStatus::HasZero);
  CHECK(v.certificate.kind == CertificateKind::InteriorWitness);
  CHECK(v.certificate.point[0].contains(R(1, 2), 0));
  CHECK_THROWS_AS(univariate_open_disk_test(up({0, 1})), InvalidArgument);
  // repeated boundary roots and cyclotomic coefficients
  CHECK(univariate_open_disk_test(up({1, 2, 1})).status == ZeroStatus::ZeroFreeOpen);
  CHECK(univariate_open_disk_test(up({1, 0, 0, 0, 0, -1})).status == ZeroStatus::ZeroFreeOpen);
  UPoly c({CycloNumber(1L), -root_of_unity(7, 2)});
  CHECK(univariate_open_disk_test(c * c * up({3, -1})).status == ZeroStatus::ZeroFreeOpen);
  // roots 1/3 and 3 paired by inversion
  CHECK(univariate_open_disk_test(up({3, -10, 3})).status == ZeroStatus::HasZero);
  CHECK(univariate_open_disk_test(up({-3, 10, -3}) * up({1, 1})).status == ZeroStatus::HasZero);
}

TEST_CASE("univariate test agrees with companion eigenvalues") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coef(-5, 5), deg(1, 8), kind(0, 3);
  int undetermined = 0;
  for (int trial = 0; trial < 100; ++trial) {
    UPoly p;
    do {
      int d = deg(rng);
      std::vector<CycloNumber> c;
      for (int k = 0; k <= d; ++k) {
        CycloNumber x(static_cast<long>(coef(rng)));
        if (kind(rng) == 0) x += CycloNumber(static_cast<long>(coef(rng))) * root_of_unity(3, 1);
        c.push_back(x);
      }
      p = UPoly(c);
      if (kind(rng) == 1) p = p * up({1, 1});
      if (kind(rng) == 2) p = p * UPoly({CycloNumber(1L), -root_of_unity(4, 1)}) * up({1, -1});
    } while (p.degree() < 1 || p.coeff(0).is_zero());
    auto v = univariate_open_disk_test(p);
    if (v.status == ZeroStatus::Undetermined) {
      ++undetermined;
      continue;
    }
    double minabs = 1e300;
    for (auto r : eigen_roots(p)) minabs = std::min(minabs, std::abs(r));
    if (minabs < 1 - 1e-6) CHECK(v.status == ZeroStatus::HasZero);
    if (minabs > 1 - 1e-12) CHECK(v.status == ZeroStatus::ZeroFreeOpen);
    std::map<long, CycloNumber> terms;
    long n = 1;
    for (const auto& c : p.coeffs()) {
      if (!c.is_zero()) terms[n] = c;
      n *= 2;
    }
    BohrPoly b = bohr_lift(DirichletPoly(terms), {2});
    CHECK(verify_certificate(b, v.status, v.certificate));
  }
  CHECK(undetermined == 0);
}

TEST_CASE("twist and idempotent rejection") {
  auto c1 = twist_idempotent_reject(dp({{1, 1}, {2, 1}, {3, 1}, {6, -1}}));
  REQUIRE(c1.has_value());
  CHECK(c1->rho.at(2) == -1);
  CHECK(c1->rho.at(3) == -1);
  CHECK(c1->idempotent_zero.empty());
  CHECK(c1->sum == CycloNumber(-2L));
  auto c4 = twist_idempotent_reject(dp({{1, 1}, {2, -1}, {3, -1}, {4, 1}}));
  REQUIRE(c4.has_value());
  CHECK(c4->rho.at(2) == -1);
  CHECK(c4->idempotent_zero == std::vector<long>{2});
  CHECK(c4->sum == CycloNumber(0L));
  CHECK(c4->twisted_constant == CycloNumber(2L));
  CHECK_FALSE(twist_idempotent_reject(dp({{1, 1}, {2, 1}})).has_value());
  // unimodular rotation of a real polynomial still rejects
  DirichletPoly rot = dp({{1, 1}, {2, 1}, {3, 1}, {6, -1}}).scaled(root_of_unity(5, 2));
  CHECK(twist_idempotent_reject(rot).has_value());
  // not simultaneously realizable: abstain
  DirichletPoly cx({{1, CycloNumber(1L)}, {2, root_of_unity(4, 1) * CycloNumber(2L)}, {3, CycloNumber(-2L)}});
  CHECK_FALSE(twist_idempotent_reject(cx).has_value());
}

TEST_CASE("interior zero search") {
  BohrPoly q = bohr_lift(dp({{1, 1}, {2, 1}, {3, 1}, {6, -1}}));
  auto w = interior_zero_search(q, R(1, 10), 64);
  REQUIRE(w.has_value());
  CHECK(w->certified);
  REQUIRE(w->exact_point.has_value());
  CHECK((*w->exact_point)[0] == CycloNumber(R(-1, 2)));
  CHECK((*w->exact_point)[1] == CycloNumber(R(-1, 3)));
  CHECK(verify_certificate(q, ZeroStatus::HasZero, *w));
  CHECK_FALSE(interior_zero_search(bohr_lift(dp({{1, 2}, {2, 1}, {4, -1}})), R(1, 10), 64).has_value());
  CHECK_FALSE(interior_zero_search(bohr_lift(dp({{1, 2}, {2, 1}, {4, -1}})), R(1, 1000), 64).has_value());
  DirichletPoly lin({{1, CycloNumber(1L)}, {2, CycloNumber(R(-3, 2))}});
  auto w2 = interior_zero_search(bohr_lift(lin), R(1, 10), 64);
  REQUIRE(w2.has_value());
  CHECK(w2->certified);
  CHECK((*w2->exact_point)[0] == CycloNumber(R(2, 3)));
  CHECK_THROWS_AS(interior_zero_search(q, R(0), 64), InvalidArgument);
  // irrational zero located by Newton, certified on a slice
  BohrPoly q3 = bohr_lift(dp({{1, 3}, {2, 2}, {3, 2}, {5, 2}, {30, 1}}));
  auto w3 = interior_zero_search(q3, R(1, 10), 64, 7, 64);
  REQUIRE(w3.has_value());
  CHECK(w3->certified);
  CHECK(verify_certificate(q3, ZeroStatus::HasZero, *w3));
}

TEST_CASE("boundary deflation") {
  BohrPoly a = bohr_lift(dp({{1, 1}, {2, -1}}) * dp({{1, 3}, {3, -1}}));
  Deflation d = boundary_deflation(a);
  REQUIRE(d.removed.size() == 1);
  CHECK(d.removed[0] == bohr_lift(dp({{1, 1}, {2, -1}}), a.primes()));
  CHECK(d.deflated == bohr_lift(dp({{1, 3}, {3, -1}}), a.primes()));
  CHECK(boundary_deflation(bohr_lift(dp({{1, 1}, {2, 1}, {3, 1}, {6, -1}}))).removed.empty());
  BohrPoly sq = bohr_lift(dp({{1, 1}, {2, 2}, {4, 1}}));
  Deflation e = boundary_deflation(sq);
  CHECK(e.removed.size() == 2);
  CHECK(e.deflated.is_constant());
  BohrPoly prod = e.deflated;
  for (const auto& f : e.removed) prod = prod * f;
  CHECK(prod == sq);
  // u - z^2 with u = -1
  BohrPoly q2 = bohr_lift(dp({{1, 1}, {4, 1}}) * dp({{1, 5}, {2, 1}}));
  Deflation f = boundary_deflation(q2);
  CHECK(f.removed.size() == 1);
}

TEST_CASE("affine reduction") {
  BohrPoly q = bohr_lift(dp({{1, 7}, {2, -5}, {3, 3}, {6, -1}}));
  auto v = affine_reduction(q);
  REQUIRE(v.has_value());
  CHECK(v->status == ZeroStatus::ZeroFreeOpen);
  CHECK(verify_certificate(q, v->status, v->certificate));
  // |A| < |B| somewhere on the circle: exact zero produced
  BohrPoly r = bohr_lift(DirichletPoly(
      {{1, CycloNumber(3L)}, {2, root_of_unity(4, 1) * CycloNumber(2L)}, {3, CycloNumber(2L)}}));
  auto w = affine_reduction(r);
  REQUIRE(w.has_value());
  CHECK(w->status == ZeroStatus::HasZero);
  CHECK(verify_certificate(r, w->status, w->certificate));
}

TEST_CASE("decide zero free") {
  auto v1 = decide_zero_free(dp({{1, 2}, {2, 1}, {4, -1}}));
  CHECK(v1.status == ZeroStatus::ZeroFreeOpen);
  CHECK(v1.certificate.kind == CertificateKind::Dominance);
  auto v2 = decide_zero_free(dp({{1, 1}, {2, 1}, {3, 1}, {6, -1}}));
  CHECK(v2.status == ZeroStatus::HasZero);
  CHECK(v2.certificate.kind == CertificateKind::NegativityTwist);
  auto v3 = decide_zero_free(dp({{1, 5}, {2, -4}, {3, 1}}));
  CHECK(v3.status == ZeroStatus::ZeroFreeOpen);
  CHECK(v3.certificate.kind == CertificateKind::Dominance);
  CHECK_THROWS_AS(decide_zero_free(dp({{2, 1}})), InvalidArgument);
  CHECK(decide_zero_free(dp({{1, 7}, {2, -5}, {3, 3}, {6, -1}})).status == ZeroStatus::ZeroFreeOpen);
  CHECK(decide_zero_free(dp({{1, 1}, {2, -1}}) * dp({{1, 3}, {3, -1}})).status == ZeroStatus::ZeroFreeOpen);
}

TEST_CASE("verdicts re-verify and survive sampling") {
  std::vector<DirichletPoly> cases = {
      dp({{1, 2}, {2, 1}, {4, -1}}),
      dp({{1, 5}, {2, -4}, {3, 1}}),
      dp({{1, 7}, {2, -5}, {3, 3}, {6, -1}}),
      dp({{1, 1}, {2, -1}}) * dp({{1, 3}, {3, -1}}),
      dp({{1, 2}, {2, 1}, {4, -1}}) * dp({{1, 1}, {3, 1}}),
      dp({{1, 1}, {2, 1}, {3, 1}, {6, -1}}),
      dp({{1, 1}, {2, -1}, {3, -1}, {4, 1}}),
      dp({{1, 3}, {2, 1}, {3, 1}, {6, 2}}),
      DirichletPoly({{1, CycloNumber(3L)}, {2, root_of_unity(4, 1) * CycloNumber(2L)}, {3, CycloNumber(2L)}}),
  };
  for (const auto& p : cases) {
    auto v = decide_zero_free(p);
    CAPTURE(p.debug_string());
    CHECK(v.status != ZeroStatus::Undetermined);
    CHECK(verify_certificate(v.lifted, v.status, v.certificate));
    if (v.status == ZeroStatus::ZeroFreeOpen) {
      CHECK_FALSE(sample_refutes(v.lifted, 10000, 5));
      // twist stability and the idempotent base case
      for (int a : {-1, 0, 1})
        for (int b : {-1, 0, 1}) {
          std::map<long, CycloNumber> rho;
          auto primes = v.lifted.primes();
          rho[primes[0]] = CycloNumber(static_cast<long>(a));
          if (primes.size() > 1) rho[primes[1]] = CycloNumber(static_cast<long>(b));
          DirichletPoly t = twist(p, rho);
          CHECK_FALSE(twist_idempotent_reject(t).has_value());
          CycloNumber s(0L);
          for (const auto& [n, c] : t.terms()) s += c;
          CHECK(sign(s) >= 0);
        }
    }
  }
}
