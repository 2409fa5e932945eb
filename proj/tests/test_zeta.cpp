#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "zetalab/errors.hpp"
#include "zetalab/families.hpp"
#include "zetalab/zeta.hpp"

using namespace zetalab;
using oracle::lin;
using oracle::poly;

namespace {

std::map<std::int64_t, std::int64_t> factors(const ResolutionData& rd) { return acampo_zeta(rd).factors(); }

RationalFunction rf(const UniPoly& n, const UniPoly& d) { return rf_normalize(n, d); }

}  // namespace

TEST_CASE("acampo_zeta") {
  CHECK(factors(make_family("cusp", {}).data) == std::map<std::int64_t, std::int64_t>{{2, 1}, {3, 1}, {6, -1}});
  CHECK(factors(make_family("twopair", {}).data) ==
        std::map<std::int64_t, std::int64_t>{{4, 1}, {6, 1}, {12, -1}, {15, 1}, {30, -1}});
  for (std::int64_t d = 3; d <= 6; ++d)
    CHECK(factors(make_family("fermat", {{"d", d}}).data) == std::map<std::int64_t, std::int64_t>{{d, d * d - 3 * d + 3}});
}

TEST_CASE("eigenvalue_report") {
  CHECK(eigenvalue_report(make_family("twopair", {}).data).eigenvalue_orders == std::set<std::int64_t>{1, 6, 10, 12, 30});
  CHECK(eigenvalue_report(make_family("xn", {{"N", 12}}).data).eigenvalue_orders ==
        std::set<std::int64_t>{1, 2, 3, 4, 6, 12});
  CHECK(eigenvalue_report(make_family("cusp", {}).data).eigenvalue_orders == std::set<std::int64_t>{1, 6});
  const auto r = eigenvalue_report(make_family("twopair", {}).data);
  for (auto d : r.eigenvalue_orders) {
    bool divides = false;
    for (const auto& c : make_family("twopair", {}).data.components) divides = divides || c.N % d == 0;
    CHECK(divides);
  }
  CHECK(eigenvalues(eigenvalue_report(make_family("cusp", {}).data)).size() == 3);
}

TEST_CASE("apply_form") {
  const auto cusp = make_family("cusp", {}).data;
  const auto& a = *cusp.curvette_matrix;
  const auto w = apply_form(cusp, a, {{{"E1", 1, 1}}});
  CHECK(w.component("E1").nu == 3);
  CHECK(w.component("E2").nu == 4);
  CHECK(w.component("E3").nu == 7);
  CHECK(w.component("C1").nu == 2);
  CHECK(w.component("C1").N == 0);
  CHECK(w.singleton_chi("E1") == 0);
  CHECK(w.singleton_chi("C1") == 0);
  REQUIRE(w.find_stratum({"E1", "C1"}));
  CHECK(w.find_stratum({"E1", "C1"})->chi_local == 1);
  CHECK(validate(w).empty());

  CHECK(apply_form(cusp, a, {}) == cusp);
  CHECK_THROWS_AS(apply_form(cusp, a, {{{"S9", 1, 1}}}), ValidationError);
  CHECK_THROWS_AS(apply_form(cusp, IntMatrix{{1}}, {{{"E1", 1, 1}}}), ValidationError);
  CHECK_THROWS_AS(apply_form(w, *cusp.curvette_matrix, {{{"C1", 1, 1}}}), ValidationError);
}

TEST_CASE("apply_form on pq shifts nu of the last curve to ip + jq") {
  for (auto [p, q] : std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 3}, {3, 5}, {4, 7}}) {
    const auto fam = make_family("pq", {{"p", p}, {"q", q}});
    const auto last = exceptional_id(fam.program->centers.size());
    for (std::int64_t i = 1; i < q; ++i)
      for (std::int64_t j = 1; j < p; ++j) {
        const auto w = apply_form(fam.data, *fam.data.curvette_matrix, monomial_form(fam, {{"x", i - 1}, {"y", j - 1}}));
        CHECK(w.component(last).nu == i * p + j * q);
      }
  }
}

TEST_CASE("multi-copy curvettes split the exponent and the open stratum") {
  const auto cusp = make_family("cusp", {}).data;
  const auto w = apply_form(cusp, *cusp.curvette_matrix, {{{"E3", 5, 2}}});
  CHECK(w.component("C1").nu == 4);
  CHECK(w.component("C2").nu == 3);
  CHECK(w.singleton_chi("E3") == -3);
  CHECK(w.find_stratum({"E3", "C1"})->chi_local == 1);
  CHECK(w.find_stratum({"E3", "C2"})->chi_local == 1);
  CHECK(w.find_stratum({"E3", "C1", "C2"}) == nullptr);
  CHECK(w.component("E3").nu == 5 + 30);

  // Fermat: two lines meet once off the curve D.
  const auto f = make_family("fermat", {{"d", 4}}).data;
  const auto w2 = apply_form(f, *f.curvette_matrix, {{{"E", 3, 2}}});
  CHECK(w2.singleton_chi("E") == 7 - 2 * (2 - 4) + 1);
  CHECK(w2.find_stratum({"E", "C1"})->chi_local == (2 - 4) - 1);
  CHECK(w2.find_stratum({"E", "C1", "C2"})->chi_local == 1);
  CHECK(w2.find_stratum({"E", "F"})->chi_local == -4 - 2 * 4);
  CHECK(w2.find_stratum({"E", "F", "C1"})->chi_local == 4);
  CHECK(w2.find_stratum({"E", "F", "C1", "C2"}) == nullptr);
}

TEST_CASE("form application is linear") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> e(0, 4);
  for (int trial = 0; trial < 40; ++trial) {
    const auto rd = resolve_program(oracle::random_program(rng, 8));
    const auto& a = *rd.curvette_matrix;
    const auto n = a.rows();
    FormSpec w1, w2;
    for (std::size_t k = 0; k < n; ++k) {
      if (const int m = e(rng); m > 0) w1.terms.push_back({exceptional_id(k + 1), m, 1});
      if (const int m = e(rng); m > 0) w2.terms.push_back({exceptional_id(k + 1), m, 1});
    }
    FormSpec merged = w1;
    merged.terms.insert(merged.terms.end(), w2.terms.begin(), w2.terms.end());
    const auto seq = apply_form(apply_form(rd, a, w1), a, w2);
    const auto once = apply_form(rd, a, merged);
    CHECK(seq == once);
    CHECK(strata_sum(seq) == strata_sum(once));
  }
}

TEST_CASE("topological zeta of the named families") {
  CHECK(topological_zeta(make_family("cusp", {}).data).rf == rf(lin(5, 4), lin(5, 6) * lin(1, 1)));

  for (std::int64_t d = 1; d <= 3; ++d)
    for (auto [N, Np] : std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 1}, {2, 3}, {5, 6}}) {
      const auto fam = make_family("xy", {{"d", d}, {"N", N}, {"Np", Np}});
      for (std::int64_t b = 1; b <= d; ++b) {
        const auto w = named_form(fam, "omega_b:b=" + std::to_string(b));
        const auto z = topological_zeta(apply_form(fam.data, *fam.data.curvette_matrix, w));
        CHECK(z.rf == rf(poly({1}), poly({N * Np}) * lin(b, d) * lin(b, d)));
      }
    }

  for (std::int64_t d = 3; d <= 6; ++d) {
    const auto fam = make_family("fermat", {{"d", d}});
    for (std::int64_t i = 1; i <= d; ++i) {
      const auto z = topological_zeta(apply_form(fam.data, *fam.data.curvette_matrix, named_form(fam, "omega_i:i=" + std::to_string(i))));
      // 1/((2+i)+sd) ((d-1)^2 + (2-d)/i + (2d-d^2)/(1+s) + d/(i(1+s)))
      const UniPoly inner = poly({(d - 1) * (d - 1) * i + 2 - d}) * lin(1, 1) + poly({(2 * d - d * d) * i + d});
      CHECK(z.rf == rf(inner, poly({i}) * lin(2 + i, d) * lin(1, 1)));
    }
  }

  for (std::int64_t n : {2, 4, 6}) {
    const auto z = topological_zeta(make_family("morse", {{"n", n}}).data);
    CHECK(z.rf == rf(poly({n}), lin(1, 1) * lin(n, 2)));
  }
}

TEST_CASE("y^p - x^q: strata sum equals the first compact expression") {
  for (std::int64_t p = 2; p <= 9; ++p)
    for (std::int64_t q = p + 1; q <= 9; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto fam = make_family("pq", {{"p", p}, {"q", q}});
      for (std::int64_t i = 1; i < q; ++i)
        for (std::int64_t j = 1; j < p; ++j) {
          const auto z = topological_zeta(apply_form(fam.data, *fam.data.curvette_matrix,
                                                     monomial_form(fam, {{"x", i - 1}, {"y", j - 1}})));
          // (1/(ip+jq+spq)) (-1 + 1/(1+s) + q/i + p/j), over the common denominator ij(1+s).
          const UniPoly inner = poly({-i * j + q * j + p * i}) * lin(1, 1) + poly({i * j});
          CHECK(z.rf == rf(inner, poly({i * j}) * lin(i * p + j * q, p * q) * lin(1, 1)));
        }
    }
}

TEST_CASE("strata-sum oracle and candidate-pole confinement") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> e(0, 3);
  for (int trial = 0; trial < 60; ++trial) {
    const auto rd0 = resolve_program(oracle::random_program(rng, 7));
    FormSpec w;
    for (std::size_t k = 0; k < rd0.curvette_matrix->rows(); ++k)
      if (const int m = e(rng); m > 0) w.terms.push_back({exceptional_id(k + 1), m, 1 + (m > 2)});
    const auto rd = apply_form(rd0, *rd0.curvette_matrix, w);
    const auto z = topological_zeta(rd);
    for (const auto& s : oracle::sample_points(rng, 20, [&](const BigRational& s) { return oracle::hits_candidate(rd, s); }))
      CHECK(z.rf.eval(s) == oracle::strata_sum_at(rd, s));
    for (const auto& p : z.poles) {
      bool candidate = false;
      for (const auto& c : rd.components) candidate = candidate || (c.N >= 1 && BigRational(-c.nu, c.N) == p.s0);
      CHECK(candidate);
    }
  }
}

TEST_CASE("factored display form reproduces rf") {
  const auto fam = make_family("fermat", {{"d", 4}});
  const auto z = topological_zeta(apply_form(fam.data, *fam.data.curvette_matrix, named_form(fam, "omega_i:i=2")));
  CHECK(z.rf == rf(lin(1, 4), poly({2}) * lin(1, 1) * lin(1, 1)));
  REQUIRE(z.factored_denominator.size() == 1);
  CHECK(z.factored_denominator[0] == LinearFactor{1, 1, 2});
  UniPoly den{1};
  for (const auto& f : z.factored_denominator)
    for (int k = 0; k < f.power; ++k) den = den * lin(f.nu, f.N);
  CHECK(rf_normalize(z.factored_numerator, den) == z.rf);
  REQUIRE(z.poles.size() == 1);
  CHECK(z.poles[0].order == 2);
  CHECK(z.poles[0].leading == BigRational(-3, 2));
}

TEST_CASE("global zeta needs chi_global") {
  auto rd = make_family("cusp", {}).data;
  CHECK_THROWS_WITH_AS(topological_zeta(rd, false), doctest::Contains("missing chi_global"), ValidationError);
  // Smooth germ x = 0 in C^2: E°_empty = C^2 minus a line, the line itself.
  ResolutionData smooth;
  smooth.components = {{"S1", ComponentKind::strict, 1, 1}};
  smooth.strata = {{{}, 0, 0}, {{"S1"}, 1, 1}};
  CHECK(topological_zeta(smooth, false).rf == rf(poly({1}), lin(1, 1)));
}
