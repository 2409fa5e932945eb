#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/families.hpp"
#include "zetalab/realizer.hpp"

using namespace zetalab;

namespace {

const Family& cusp() {
  static const Family f = make_family("cusp", {});
  return f;
}

std::vector<std::int64_t> v(std::initializer_list<std::int64_t> x) { return x; }

}  // namespace

TEST_CASE("select_component") {
  CHECK(select_component(make_family("twopair", {}).data, 10) == "E6");
  CHECK(select_component(cusp().data, 6) == "E3");
  CHECK(select_component(cusp().data, 1) == "E3");
  CHECK_THROWS_WITH_AS(select_component(cusp().data, 5), "eigenvalue order not realizable from this data", NotRealizable);
  CHECK(select_component(make_family("fermat", {{"d", 4}}).data, 2) == "E");
  CHECK_THROWS_AS(select_component(make_family("morse", {{"n", 4}}).data, 1), NotRealizable);
}

TEST_CASE("solve_congruence") {
  const auto col = cusp().data.curvette_matrix->column(2);
  auto s = solve_congruence(col, 5, 6, BigRational(5, 6));
  CHECK(s.base == v({1, 0, 0}));
  CHECK(s.modulus == 6);
  CHECK(solve_congruence(col, 5, 6, BigRational(0)).base == v({2, 1, 0}));
  CHECK(solve_congruence(col, 5, 6, BigRational(1, 6)).base == v({0, 0, 0}));
  CHECK_THROWS_AS(solve_congruence(v({2, 4}), 1, 6, BigRational(0)), MathError);
}

TEST_CASE("solve_congruence agrees with enumeration") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const auto rd = resolve_program(oracle::random_program(rng, 5));
    const auto& a = *rd.curvette_matrix;
    for (std::size_t j = 0; j < a.rows(); ++j) {
      const auto& c = rd.components[j];
      for (auto d : divisors_of(c.N)) {
        for (std::int64_t u = 0; u < d; ++u) {
          if (std::gcd(u, d) != 1) continue;
          const auto sol = solve_congruence(a.column(j), c.nu, c.N, BigRational(u, d));
          const std::int64_t rhs = ((-u * (c.N / d)) % c.N + c.N) % c.N;
          CHECK(sol.base == oracle::congruence_by_enumeration(a.column(j), c.nu, c.N, rhs));
        }
      }
    }
  }
  // Two-pair curve, primitive 10th roots at E6.
  const auto ex = make_family("twopair", {}).data;
  const auto col = ex.curvette_matrix->column(5);
  for (std::int64_t u : {1, 3, 7, 9}) {
    const auto sol = solve_congruence(col, 13, 30, BigRational(u, 10));
    CHECK(sol.base == oracle::congruence_by_enumeration(col, 13, 30, ((-u * 3) % 30 + 30) % 30));
  }
}

TEST_CASE("collision_filter") {
  const auto& a = *cusp().data.curvette_matrix;
  CHECK(collision_filter(cusp().data, a, "E3", v({1, 0, 0})));
  CHECK(collision_filter(cusp().data, a, "E3", v({0, 0, 0})));

  // Two components with equal data and equal columns collide for every m.
  ResolutionData twin;
  twin.components = {{"E1", ComponentKind::exceptional, 2, 2}, {"E2", ComponentKind::exceptional, 2, 2},
                     {"S1", ComponentKind::strict, 1, 1}};
  twin.strata = {{{"E1"}, -1, std::nullopt}, {{"E2"}, -1, std::nullopt}, {{"S1"}, 0, std::nullopt}};
  const IntMatrix same{{1, 1}, {1, 1}};
  for (std::int64_t m1 = 0; m1 < 4; ++m1)
    for (std::int64_t m2 = 0; m2 < 4; ++m2) CHECK_FALSE(collision_filter(twin, same, "E1", v({m1, m2})));
}

TEST_CASE("residue_formula") {
  const auto& a = *cusp().data.curvette_matrix;
  CHECK(residue_formula(cusp().data, a, "E3", v({1, 0, 0})) == BigRational(-7, 12));
  // Trivial form: alpha = (1/3, 1/2, 1/6) at s0 = -5/6.
  CHECK(residue_formula(cusp().data, a, "E3", v({0, 0, 0})) == BigRational(5, 3));
  // A curvette with m = 0 on E3 leaves the residue unchanged.
  const auto w = apply_form(cusp().data, a, {{{"E3", 0, 1}}});
  CHECK(rf_laurent_leading(topological_zeta(w).rf, BigRational(-5, 6), 1) == BigRational(5, 3));
}

TEST_CASE("residue formula equals the Laurent coefficient on a cusp grid") {
  const auto& rd = cusp().data;
  const auto& a = *rd.curvette_matrix;
  int compared = 0;
  for (std::int64_t m1 = 0; m1 < 5; ++m1)
    for (std::int64_t m2 = 0; m2 < 5; ++m2) {
      const auto m = v({m1, m2, 0});
      if (!collision_filter(rd, a, "E3", m)) continue;
      const auto w = apply_form(rd, a, form_from_exponents(rd, m));
      const BigRational s0(-w.component("E3").nu, 6);
      const auto z = topological_zeta(w);
      const auto r = residue_formula(rd, a, "E3", m);
      if (z.pole_at(s0)) {
        CHECK(z.pole_at(s0)->order == 1);
        CHECK(rf_laurent_leading(z.rf, s0, 1) == r);
      } else {
        CHECK(r.is_zero());
      }
      ++compared;
    }
  CHECK(compared == 25);
}

TEST_CASE("residue formula equals the Laurent coefficient on random programs") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> e(0, 5);
  int compared = 0;
  while (compared < 50) {
    const auto rd = resolve_program(oracle::random_program(rng, 8));
    const auto& a = *rd.curvette_matrix;
    const auto exc = rd.indices_of(ComponentKind::exceptional);
    std::uniform_int_distribution<std::size_t> pick(0, exc.size() - 1);
    const auto j0 = rd.components[exc[pick(rng)]].id;
    std::vector<std::int64_t> m(exc.size());
    for (auto& x : m) x = e(rng);
    if (!collision_filter(rd, a, j0, m)) continue;
    const auto w = apply_form(rd, a, form_from_exponents(rd, m));
    const BigRational s0(-w.component(j0).nu, w.component(j0).N);
    const auto z = topological_zeta(w);
    const auto r = residue_formula(rd, a, j0, m);
    if (const auto* p = z.pole_at(s0)) {
      CHECK(p->order == 1);
      CHECK(rf_laurent_leading(z.rf, s0, 1) == r);
    } else {
      CHECK(r.is_zero());
    }
    ++compared;
  }
}

TEST_CASE("realize on the cusp") {
  const auto& rd = cusp().data;
  const auto& a = *rd.curvette_matrix;
  const auto cert = realize(rd, a, RootOfUnity::from_fraction(5, 6));
  CHECK(cert.j0 == "E3");
  CHECK(cert.form == FormSpec{{{"E1", 1, 1}}});
  CHECK(cert.s0 == BigRational(-7, 6));
  CHECK(cert.pole_order == 1);
  CHECK(cert.residue == BigRational(-7, 12));
  CHECK(check_certificate(rd, a, cert).empty());

  // The lambda = 1 base candidate x^2 y has a vanishing residue at -2.
  const auto m = v({2, 1, 0});
  CHECK(residue_formula(rd, a, "E3", m).is_zero());
  CHECK(topological_zeta(apply_form(rd, a, form_from_exponents(rd, m))).pole_at(BigRational(-2)) == nullptr);
  const auto one = realize(rd, a, RootOfUnity::from_fraction(0, 1));
  CHECK(one.s0.is_integer());
  CHECK(one.form != FormSpec{{{"E1", 2, 1}, {"E2", 1, 1}}});
  CHECK(check_certificate(rd, a, one).empty());

  CHECK_THROWS_AS(realize(rd, a, RootOfUnity::from_fraction(1, 5)), NotRealizable);
  CHECK_THROWS_AS(realize(rd, a, RootOfUnity::from_fraction(1, 2)), NotRealizable);
  CHECK_THROWS_AS(realize(rd, a, RootOfUnity::from_fraction(0, 1), 0), RadiusExhausted);
}

TEST_CASE("realize on the two-pair curve and the normal-crossings cases") {
  const auto ex = make_family("twopair", {}).data;
  for (std::int64_t u : {1, 3, 7, 9}) {
    const auto target = RootOfUnity::from_fraction(u, 10);
    const auto cert = realize(ex, *ex.curvette_matrix, target);
    CHECK(cert.j0 == "E6");
    CHECK(cert.s0 == BigRational(-apply_form(ex, *ex.curvette_matrix, cert.form).component("E6").nu, 30));
    CHECK(cert.s0.denominator() == 10);
    CHECK(RootOfUnity::exp_of(cert.s0) == target);
    CHECK(check_certificate(ex, *ex.curvette_matrix, cert).empty());
  }

  const auto xn = make_family("xn", {{"N", 6}}).data;
  const auto c = realize(xn, *xn.curvette_matrix, RootOfUnity::from_fraction(1, 3));
  CHECK(c.j0 == "S1");
  CHECK(RootOfUnity::exp_of(c.s0).turns() == BigRational(1, 3));

  const auto morse = make_family("morse", {{"n", 4}}).data;
  const auto cm = realize(morse, *morse.curvette_matrix, RootOfUnity::from_fraction(0, 1));
  CHECK(cm.s0 == BigRational(-1));
  CHECK(cm.form.terms.empty());
}

TEST_CASE("verify_principle") {
  const auto pq = make_family("pq", {{"p", 3}, {"q", 5}});
  auto r = verify_principle(pq.data, *pq.data.curvette_matrix, named_form_set(pq, "omega_ij"));
  CHECK(r.poles_are_eigenvalues);
  CHECK(r.eigenvalues_hit);

  const auto fermat = make_family("fermat", {{"d", 5}});
  r = verify_principle(fermat.data, *fermat.data.curvette_matrix, named_form_set(fermat, "omega_i_reduced"));
  CHECK(r.poles_are_eigenvalues);
  CHECK(r.eigenvalues_hit);

  // The trivial form alone misses most eigenvalues of the cusp.
  r = verify_principle(cusp().data, *cusp().data.curvette_matrix, {{"trivial", {}}});
  CHECK(r.poles_are_eigenvalues);
  CHECK_FALSE(r.eigenvalues_hit);
  CHECK(r.missing.size() == 1);

  // x^5 y^0 on the cusp has the stray pole -(3*2+1*3)/6 = -3/2.
  r = verify_principle(cusp().data, *cusp().data.curvette_matrix, {{"x^5", named_form(cusp(), "omega_ij:i=6,j=1")}});
  CHECK_FALSE(r.poles_are_eigenvalues);
}
