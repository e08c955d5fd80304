#include <algorithm>
#include <set>

#include "doctest.h"
#include "pds/arith.hpp"
#include "pds/catalog.hpp"
#include "pds/error.hpp"

using namespace pds;

namespace {

Rational R(long a, long b = 1) { return make_rational(a, b); }
StepFunction chi(long a, long b, long c, long d) { return indicator(R(a, b), R(c, d)); }
CycloNumber C(long v) { return CycloNumber(v); }

DirichletCharacter mod12() { return character_from_values(12, {{5, C(-1)}, {7, C(-1)}, {11, C(1)}}); }
DirichletCharacter mod8() { return character_from_values(8, {{3, C(-1)}, {5, C(-1)}}); }
// psi(2) = omega, psi(3) = conj(omega), omega a primitive cube root of unity
DirichletCharacter mod7(long k) {
  return character_from_values(7, {{2, root_of_unity(3, k)}, {3, root_of_unity(3, -k)}});
}

bool complete(const StepFunction& phi) { return decide_completeness(phi).status == CompletenessStatus::Complete; }

}  // namespace

TEST_CASE("build_sn examples") {
  auto l5 = legendre_character(5);
  CHECK(build_sn(l5, 2) == chi(1, 5, 3, 5));
  CHECK(build_sn(l5, 1) == chi(2, 5, 4, 5));
  CHECK(build_sn(l5, 3) == linear_combine({{C(1), chi(2, 15, 4, 15)}, {C(1), chi(8, 15, 14, 15)}}));
  CHECK(build_sn(l5, 6) == linear_combine({{C(1), chi(1, 15, 7, 15)}, {C(1), chi(11, 15, 13, 15)}}));
  CHECK(mod12().is_primitive());
  CHECK(build_sn(mod12(), 1) == chi(1, 6, 5, 6));
  CHECK(build_sn(mod8(), 1) == chi(1, 4, 3, 4));
  CHECK(build_sn(mod8(), 3) == linear_combine({{C(1), chi(1, 12, 5, 12)}, {C(1), chi(7, 12, 11, 12)}}));
  for (long k : {1L, 2L}) {
    auto psi = mod7(k);
    CycloNumber w = root_of_unity(3, k);
    CHECK(build_sn(psi, 1) == linear_combine({{C(1), chi(2, 7, 4, 7)}, {-w.conj(), chi(4, 7, 6, 7)}}));
    CHECK(build_sn(psi, 2) == linear_combine({{C(1), chi(1, 7, 3, 7)}, {-w, chi(3, 7, 5, 7)}}));
    CHECK(complete(build_sn(psi, 1)));
    CHECK(complete(build_sn(psi, 2)));
  }
  CHECK_THROWS_AS(build_sn(legendre_character(3), 1), InvalidArgument);  // odd
  CHECK_THROWS_AS(build_sn(DirichletCharacter(), 1), InvalidArgument);
  CHECK_THROWS_AS(build_sn(enumerate_characters(10)[1], 1), InvalidArgument);
}

TEST_CASE("sn_combination") {
  auto l5 = legendre_character(5);
  auto a = sn_combination(l5, 2, {{1, C(3)}, {2, C(1)}});
  CHECK(a.hypothesis);
  CHECK(complete(a.phi));
  auto b = sn_combination(l5, 2, {{1, C(2)}, {2, C(1)}});
  CHECK_FALSE(b.hypothesis);
  CHECK(complete(b.phi));
  auto c = sn_combination(l5, 2, {{1, C(4)}, {2, C(0)}});
  CHECK(c.hypothesis);
  CHECK(c.phi == linear_combine({{C(4), build_sn(l5, 1)}}));
  // boundary case 2|alpha| = |beta| for alpha S_2 + beta S_1
  CHECK(complete(sn_combination(l5, 2, {{1, C(2)}, {2, root_of_unity(4, 1)}}).phi));
  CHECK_THROWS_AS(sn_combination(l5, 3, {{1, C(1)}}), InvalidArgument);
  CHECK_THROWS_AS(sn_combination(l5, 2, {{3, C(1)}}), InvalidArgument);
}

TEST_CASE("S_v for squarefree v coprime to the modulus") {
  for (long q = 3; q <= 12; ++q)
    for (const auto& psi : primitive_characters(q)) {
      if (psi.parity() != 1) continue;
      for (long v = 1; v <= 15; ++v) {
        if (std::gcd(v, q) != 1) continue;
        auto fv = factorize(v);
        bool squarefree = std::all_of(fv.begin(), fv.end(), [](auto pe) { return pe.second == 1; });
        if (!squarefree) continue;
        CAPTURE(q);
        CAPTURE(v);
        CHECK(complete(build_sn(psi, v)));
      }
    }
}

TEST_CASE("combs and ladders") {
  CHECK(build_comb(3, CombVariant::V) == linear_combine({{C(1), chi(0, 1, 1, 3)}, {C(1), chi(2, 3, 1, 1)}}));
  CHECK(build_comb(3, CombVariant::VComplement) == chi(1, 3, 2, 3));
  CHECK(build_comb(4, CombVariant::EvenT) == linear_combine({{C(1), chi(0, 1, 1, 4)}, {C(1), chi(2, 4, 3, 4)}}));
  for (auto v : {CombVariant::V, CombVariant::VComplement}) CHECK(complete(build_comb(7, v)));
  CHECK(complete(build_comb(4, CombVariant::EvenT)));
  CHECK(complete(build_comb(6, CombVariant::EvenT)));
  CHECK_THROWS_AS(build_comb(4, CombVariant::V), InvalidArgument);
  CHECK_THROWS_AS(build_comb(3, CombVariant::EvenT), InvalidArgument);

  auto l3 = build_ladder(3);
  auto p = l3.pieces();
  REQUIRE(p.size() == 2);
  CHECK(p[0].to == R(2, 3));
  CHECK(p[0].value == C(1));
  CHECK(p[1].value == C(2));
  for (long t = 3; t <= 9; t += 2) {
    auto v = decide_completeness(build_ladder(t));
    CHECK(v.status == CompletenessStatus::Complete);
    CHECK(*v.theorem_polynomial == DirichletPoly({{1, C(t + 2)}, {2, C(-(t + 1))}, {t, C(1)}}));
  }
  CHECK_THROWS_AS(build_ladder(1), InvalidArgument);
  CHECK_THROWS_AS(build_ladder(4), InvalidArgument);
}

TEST_CASE("enumerate_pl") {
  auto r7 = enumerate_pl(7, 1);
  CHECK(r7.entries.size() == 126);
  CHECK(r7.undetermined.empty());
  auto combs = alternating_combs(7);
  auto c7 = r7.complete();
  CHECK(std::set<std::string>(c7.begin(), c7.end()) == std::set<std::string>{combs.first, combs.second});
  auto r5 = enumerate_pl(5, 1);
  auto c5 = r5.complete();
  CHECK(c5.size() > 2);
  CHECK(std::count(c5.begin(), c5.end(), "(1/5,3/5)") == 1);
  CHECK(std::count(c5.begin(), c5.end(), "(2/5,4/5)") == 1);
  CHECK(enumerate_pl(2, 2).entries.size() == 12);  // boundary must not sit on halves only
  CHECK_THROWS_AS(enumerate_pl(6, 1), InvalidArgument);
}

TEST_CASE("interval and kozlov scans") {
  auto r1 = scan_intervals(1);
  CHECK(r1.complete() == std::vector<std::string>{"(0,1)"});
  auto r6 = scan_intervals(6);
  CHECK(r6.entries.size() == 78);
  CHECK(r6.complete().size() == 10);
  CHECK(r6.mismatches().empty());
  CHECK(r6.undetermined.empty());
  auto k3 = kozlov_scan(3).complete();
  CHECK(std::set<std::string>(k3.begin(), k3.end()) == std::set<std::string>{"1", "1/2", "2/3"});
  CHECK(kozlov_scan(1).complete() == std::vector<std::string>{"1"});
  ScanOptions par;
  par.jobs = 3;
  auto a = scan_intervals(4);
  auto b = scan_intervals(4, par);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].descriptor == b.entries[i].descriptor);
    CHECK(a.entries[i].verdict.status == b.entries[i].verdict.status);
  }
}

TEST_CASE("sum families") {
  auto comb = build_comb(3, CombVariant::V);
  auto lad = build_ladder(3);
  for (auto c : {std::vector<Rational>{R(1), R(1)}, {R(2), R(5)}, {R(1, 3), R(7)}}) {
    auto r = sum_family_check({comb, lad}, c);
    CHECK(r.hypothesis);
    CHECK(r.t == 3);
    CHECK(r.verdict.status == CompletenessStatus::Complete);
  }
  auto r5 = sum_family_check({build_comb(5, CombVariant::V), build_ladder(5)}, {R(1), R(2)});
  CHECK(r5.hypothesis);
  auto no = sum_family_check({comb, chi(1, 3, 2, 3)}, {R(1), R(1)});
  CHECK_FALSE(no.hypothesis);
  CHECK_THROWS_AS(sum_family_check({chi(0, 1, 1, 2), lad}, {R(1), R(1)}), InvalidArgument);
}

TEST_CASE("coefficient family sweeps") {
  CHECK(complete(family_function("half", R(1), R(0))));
  CHECK_FALSE(complete(family_function("half", R(1), R(-1))));
  CHECK_FALSE(complete(family_function("third", R(1), R(-2))));
  std::vector<Rational> grid;
  for (long k = -3; k <= 3; ++k) grid.push_back(R(k));
  for (const char* fam : {"half", "third"}) {
    auto r = coefficient_family_sweep(fam, grid);
    CHECK(r.entries.size() == 48);
    CHECK(r.mismatches().empty());
    CHECK(r.undetermined.empty());
  }
  CHECK_THROWS_AS(coefficient_family_sweep("quarter", grid), InvalidArgument);
}
