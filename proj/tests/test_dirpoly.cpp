#include <random>

#include "doctest.h"
#include "pds/characters.hpp"
#include "pds/dirpoly.hpp"
#include "pds/error.hpp"

using namespace pds;

namespace {

DirichletPoly dp(std::map<long, long> t) {
  std::map<long, CycloNumber> m;
  for (auto [n, c] : t) m[n] = CycloNumber(c);
  return DirichletPoly(m);
}

Rational R(long a, long b = 1) { return make_rational(a, b); }

}  // namespace

TEST_CASE("bohr lift") {
  BohrPoly b = bohr_lift(dp({{1, 1}, {2, 1}, {3, 1}, {6, -1}}));
  CHECK(b.primes() == std::vector<long>{2, 3});
  CHECK(b.coeff({1, 1}) == CycloNumber(-1L));
  CHECK(b.constant_term() == CycloNumber(1L));
  BohrPoly c = bohr_lift(dp({{1, 5}}));
  CHECK(c.is_constant());
  BohrPoly d = bohr_lift(dp({{1, 2}, {2, 1}, {4, -1}}));
  CHECK(d.coeff({2}) == CycloNumber(-1L));
  CHECK(d.to_dirichlet() == dp({{1, 2}, {2, 1}, {4, -1}}));
  DirichletPoly p = dp({{1, 1}, {2, 3}, {4, -1}}), q = dp({{1, 2}, {3, 1}, {9, 5}});
  std::vector<long> ps{2, 3};
  CHECK(bohr_lift(p * q, ps) == bohr_lift(p, ps) * bohr_lift(q, ps));
}

TEST_CASE("twists") {
  DirichletPoly p = dp({{1, 1}, {2, 1}, {3, 1}, {6, -1}});
  CHECK(twist(p, {{2, CycloNumber(-1L)}, {3, CycloNumber(-1L)}}) == dp({{1, 1}, {2, -1}, {3, -1}, {6, -1}}));
  CHECK(twist(p, {}) == p);
  DirichletPoly p4 = dp({{1, 1}, {2, -1}, {3, -1}, {4, 1}});
  CHECK(twist(p4, {{2, CycloNumber(-1L)}}) == dp({{1, 1}, {2, 1}, {3, -1}, {4, 1}}));
  CHECK_THROWS_AS(twist(p, {{2, CycloNumber(2L)}}), InvalidArgument);
  std::map<long, CycloNumber> r1{{2, root_of_unity(3, 1)}, {3, CycloNumber(R(1, 2))}};
  std::map<long, CycloNumber> r2{{2, CycloNumber(-1L)}, {3, root_of_unity(4, 1)}};
  std::map<long, CycloNumber> r12{{2, r1[2] * r2[2]}, {3, r1[3] * r2[3]}};
  DirichletPoly big = dp({{1, 1}, {2, 2}, {3, -1}, {4, 3}, {6, 1}, {12, -2}, {18, 1}});
  CHECK(twist(twist(big, r1), r2) == twist(big, r12));
}

TEST_CASE("evaluation") {
  ComplexInterval zero(Interval(0));
  CHECK(evaluate(dp({{1, 2}, {2, 1}, {4, -1}}), zero, 40).contains(2, 0));
  CHECK(evaluate(dp({{1, 1}, {2, -1}, {3, -1}, {6, -1}}), zero, 40).contains(-2, 0));
  DirichletPoly p = dp({{1, 3}, {2, 5}, {7, -4}});
  ComplexInterval far = evaluate(p, ComplexInterval(Interval(50), Interval(R(1, 3))), 60);
  CHECK(std::abs(far.re.approx() - 3) < 1e-10);
  std::mt19937 rng(3);
  DirichletPoly q = dp({{1, 1}, {2, 2}, {3, -1}, {6, 1}, {4, -3}});
  BohrPoly b = bohr_lift(q);
  for (int trial = 0; trial < 20; ++trial) {
    ComplexInterval s(Interval(R(static_cast<long>(rng() % 100) + 1, 37)), Interval(R(static_cast<long>(rng() % 200) - 100, 17)));
    ComplexInterval direct = evaluate(q, s, 50);
    ComplexInterval via = b.evaluate({power_neg_s(2, s, 60), power_neg_s(3, s, 60)}, 50);
    CHECK(overlaps(direct.re, via.re));
    CHECK(overlaps(direct.im, via.im));
  }
}

TEST_CASE("partial L sums") {
  ComplexInterval two(Interval(2));
  LPartialSum z = l_partial_sum(enumerate_characters(1)[0], two, 2000);
  REQUIRE(z.tail_bound.has_value());
  CHECK(*z.tail_bound <= R(1, 2000));
  double pi2 = M_PI * M_PI / 6;
  CHECK(z.value.re.hi <= Rational(pi2) + Rational(1e-12));
  CHECK(z.value.re.lo + *z.tail_bound >= Rational(pi2 - 1e-12));
  LPartialSum z2 = l_partial_sum(enumerate_characters(2)[0], two, 2000);
  CHECK(std::abs(z2.value.re.approx() - 0.75 * pi2) < 1e-3);
  CHECK_FALSE(l_partial_sum(enumerate_characters(1)[0], ComplexInterval(Interval(R(1, 2))), 10).tail_bound.has_value());
}
