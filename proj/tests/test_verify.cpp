#include "storic/verify.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace storic;

namespace {

FamilyParams golden3() {
  FamilyParams p;
  p.n = 3;
  p.p = 3;
  p.l = 1;
  p.a = 2;
  p.d = 1;
  p.b = {0};
  p.c = {1};
  return p;
}

FamilyParams charp3() {
  FamilyParams p;
  p.n = 3;
  p.p = 2;
  p.l = 1;
  p.a = 1;
  p.d = 1;
  p.b = {0};
  p.c = {1};
  return p;
}

}  // namespace

TEST_CASE("PointSet codec round trip") {
  PointSet s;
  s.field = make_field(7, 1);
  s.coords = 6;
  std::vector<std::uint32_t> pt = {1, 0, 6, 2, 5, 3};
  std::uint64_t idx = s.encode(pt);
  CHECK(s.decode(idx) == pt);
  // first coordinate most significant
  CHECK(s.encode({1, 0, 0, 0, 0, 0}) > s.encode({0, 6, 6, 6, 6, 6}));
  s.points = {3, 9, 11};
  CHECK(s.contains(9));
  CHECK(!s.contains(10));
}

TEST_CASE("zero_set basics") {
  EquationSystem sys = build_system(golden3());
  FieldPtr f5 = make_field(5, 1);
  PointSet z = zero_set(sys.full(), f5, 3);
  CHECK(std::is_sorted(z.points.begin(), z.points.end()));
  CHECK(z.contains(z.encode(std::vector<std::uint32_t>(6, 0))));

  // image points are zeros
  PointSet img = image_set(golden3(), f5);
  CHECK(std::includes(z.points.begin(), z.points.end(), img.points.begin(),
                      img.points.end()));
  CHECK(img.points.size() <= 125);

  // deterministic under threading
  EnumOptions par;
  par.jobs = 4;
  PointSet z4 = zero_set(sys.full(), f5, 3, par);
  CHECK(z4.points == z.points);

  EnumOptions tiny;
  tiny.budget = 10;
  CHECK_THROWS_AS(zero_set(sys.full(), f5, 3, tiny), BudgetError);
}

TEST_CASE("membership oracle accepts image points") {
  FamilyParams p = golden3();
  FieldPtr f = make_field(7, 1);
  MembershipOracle oracle(p, f);
  std::mt19937_64 rng(23);
  for (int it = 0; it < 30; ++it) {
    std::vector<std::uint32_t> u(3);
    for (auto& x : u) x = rng() % 7;
    std::vector<std::uint32_t> pt = phi(p, *f, u);
    MembershipVerdict v = oracle.query(pt);
    CHECK(v.in_v);
    REQUIRE(v.witness_params.size() == 3);
    CHECK(phi(p, *v.field, v.witness_params) ==
          (v.field == f ? pt : [&] {
            Embedding e(f, v.field);
            std::vector<std::uint32_t> lifted;
            for (std::uint32_t x : pt) lifted.push_back(e.apply(x));
            return lifted;
          }()));
  }
}

TEST_CASE("membership oracle rejects the F-witness with a full transcript") {
  EquationSystem sys = build_system(golden3());
  FieldPtr f = make_field(7, 1);
  MembershipOracle oracle(golden3(), f, /*record_trace=*/true);
  MembershipVerdict v = oracle.query({1, 1, 1, 2, 1, 1});
  CHECK(!v.in_v);
  // 3 cube roots of 1 times 2 square roots of 1
  CHECK(v.trace.size() == 6);
  for (const auto& c : v.trace) CHECK(c.failed_coordinate >= 0);
}

TEST_CASE("check_prop1 in the defining characteristic") {
  EquationSystem sys = build_system(charp3());
  Prop1Report r = check_prop1(sys, {1, 2});
  CHECK(r.pass);
  REQUIRE(r.fields.size() == 2);
  for (const auto& pf : r.fields) {
    CHECK(!pf.skipped);
    CHECK(pf.equal);
    CHECK(pf.zero_size == pf.image_size);
  }
}

TEST_CASE("check_prop2 away from the defining characteristic") {
  EquationSystem sys = build_system(golden3());
  Prop2Report r = check_prop2(sys, 5);
  CHECK(r.pass);
  CHECK(r.image_subset);
  CHECK(r.counterexamples.empty());
  CHECK(r.in_v == r.zero_size);
  std::uint64_t total = 0;
  for (const auto& [deg, cnt] : r.witness_degree_counts) total += cnt;
  CHECK(total == r.zero_size);
}

TEST_CASE("witness_F certificate, golden instance") {
  EquationSystem sys = build_system(golden3());
  WitnessCertificate w = witness_F(sys, 1, 7);
  CHECK(w.pass);
  CHECK(w.point == std::vector<std::uint32_t>{1, 1, 1, 2, 1, 1});
  CHECK(std::find(w.vanishing.begin(), w.vanishing.end(), "F1") !=
        w.vanishing.end());
  CHECK(std::find(w.vanishing.begin(), w.vanishing.end(), "F3") !=
        w.vanishing.end());
  CHECK(w.nonvanishing == "H1");
  CHECK(w.nonvanishing_value != 0);
  CHECK(!w.membership.in_v);
  CHECK(w.membership.trace.size() == 6);
  for (const auto& [name, ab] : w.monomial_conditions)
    CHECK((ab.first || ab.second));
}

TEST_CASE("witness_pair certificate, n = 4") {
  FamilyParams p;
  p.n = 4;
  p.p = 3;
  p.l = 1;
  p.a = 2;
  p.d = 1;
  p.b = {0, 0};
  p.c = {1, 1};
  EquationSystem sys = build_system(p);
  WitnessCertificate w = witness_pair(sys, 1, 2, 7);
  CHECK(w.pass);
  CHECK(!w.membership.in_v);
  CHECK(w.nonvanishing_value != 0);
}

TEST_CASE("lemma checks on valid instances") {
  for (FamilyParams p : {golden3(), [] {
         FamilyParams q;
         q.n = 4;
         q.p = 2;
         q.l = 1;
         q.a = 1;
         q.d = 1;
         q.b = {1, 2};
         q.c = {1, 3};
         return q;
       }()}) {
    LemmaReport l1 = check_lemma1(p, 500, 42);
    CHECK(l1.pass);
    CHECK(l1.checked == 500);
    LemmaReport l2 = check_lemma2(p, 3 * std::max(p.p_pow_l(), p.a));
    INFO(l2.detail);
    CHECK(l2.pass);
    CHECK(l2.checked > 0);
  }
}
