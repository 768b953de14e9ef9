#include "eurep/grid.hpp"
#include "eurep/representation.hpp"
#include "support.hpp"

#include <algorithm>
#include <random>

using namespace eurep;
using namespace eurep::testing;

namespace {

const std::vector<Lottery> kIndifferent{L("1/3,1/3,1/3"), L("5/12,1/6,5/12")};

ElicitationInput fixture_input(bool oriented_up) {
  ElicitationInput in{kIndifferent, StrictPair{Lottery::vertex(2, 2), Lottery::vertex(2, 0)}};
  if (!oriented_up) std::swap(in.strict->better, in.strict->worse);
  return in;
}

bool mutually_indifferent(const PreferenceOracle& o, const std::vector<Lottery>& pts) {
  return std::all_of(pts.begin(), pts.end(),
                     [&](const Lottery& p) { return o.compare(p, pts.front()) == Comparison::indifferent; });
}

std::vector<EmbeddedPoint> embedded(const std::vector<Lottery>& pts) {
  std::vector<EmbeddedPoint> out;
  for (const auto& p : pts) out.push_back(embed(p));
  return out;
}

}  // namespace

TEST_CASE("elicit") {
  const auto rep = elicit(fixture_input(true));
  CHECK(rep.utility.values == Qs("0,1,2"));
  CHECK(rep.oriented);
  CHECK(rep.hyperplane.normal == P("1,2"));

  CHECK(elicit(fixture_input(false)).utility.values == Qs("0,-1,-2"));
  CHECK(elicit(fixture_input(false)).orientation == -1);

  CHECK(error_of([] { elicit(ElicitationInput{{Lottery::uniform(2), Lottery::uniform(2)}, std::nullopt}); }) ==
        ErrorCode::RankDeficient);
  CHECK(error_of([] { elicit(ElicitationInput{{Lottery::uniform(2)}, std::nullopt}); }) == ErrorCode::WrongCount);

  // A strict pair on one level set contradicts the indifference data.
  ElicitationInput flat{kIndifferent, StrictPair{L("1/2,0,1/2"), Lottery::vertex(2, 1)}};
  CHECK(error_of([&] { elicit(flat); }) == ErrorCode::InconsistentStrictPair);
  // An endpoint on the spanned hyperplane is fine when the pair still
  // crosses level sets.
  ElicitationInput touching{kIndifferent, StrictPair{Lottery::vertex(2, 2), L("1/2,0,1/2")}};
  CHECK(elicit(touching).utility.values == Qs("0,1,2"));
}

TEST_CASE("elicited utility agrees with the EU oracle on the denominator-4 grid") {
  const auto rep = elicit(fixture_input(true));
  const auto eu = PreferenceOracle::expected_utility(UtilityFunction{Qs("0,1,2")});
  const auto grid = grid_lotteries(GridSpec{4, 2});
  for (const auto& p : grid) {
    for (const auto& q : grid) REQUIRE(classify(rep, p, q) == eu.compare(q, p));
  }
}

TEST_CASE("classify") {
  const auto rep = elicit(fixture_input(true));
  const auto u = Lottery::uniform(2);
  CHECK(classify(rep, u, Lottery::vertex(2, 2)) == Comparison::better);
  CHECK(classify(rep, u, u) == Comparison::indifferent);
  CHECK(classify(rep, u, L("1/2,0,1/2")) == Comparison::indifferent);
  CHECK(classify(rep, u, Lottery::vertex(2, 0)) == Comparison::worse);

  const auto unoriented = elicit(ElicitationInput{kIndifferent, std::nullopt});
  CHECK_FALSE(unoriented.oriented);
  CHECK(error_of([&] { classify(unoriented, u, u); }) == ErrorCode::UnorientedRepresentation);
  CHECK(error_of([&] { unoriented.oracle(); }) == ErrorCode::UnorientedRepresentation);
  CHECK(error_of([&] { classify(rep, u, L("1/2,1/2")); }) == ErrorCode::SpaceMismatch);
}

TEST_CASE("generate_indifferent_points") {
  SUBCASE("u = (0, 1, 2)") {
    const auto g = generate_indifferent_points(UtilityFunction{Qs("0,1,2")});
    CHECK(g.construction.base == L("1/3,1/3,1/3"));
    CHECK(g.construction.basis == std::vector{P("1,-2,1")});
    CHECK(g.construction.step == Q("1/12"));
    CHECK(g.construction.mean_utility == 1);
    REQUIRE(g.points.size() == 2);
    CHECK(g.points[1] == L("5/12,1/6,5/12"));
  }
  SUBCASE("constant utility") {
    const auto g = generate_indifferent_points(UtilityFunction{Qs("0,0,0")});
    REQUIRE(g.points.size() == 2);
    CHECK(affine_rank(embedded(g.points)) == 1);
    CHECK(mutually_indifferent(PreferenceOracle::expected_utility(UtilityFunction{Qs("0,0,0")}), g.points));
  }
  SUBCASE("n = 1") {
    const auto g = generate_indifferent_points(UtilityFunction{Qs("0,1")});
    CHECK(g.points == std::vector{L("1/2,1/2")});
    CHECK(g.construction.basis.empty());
  }
}

TEST_CASE("generated points: in the simplex, at the mean utility, spanning a hyperplane") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> value(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 5;
    UtilityFunction u;
    for (std::size_t i = 0; i <= n; ++i) u.values.emplace_back(value(rng));
    const auto g = generate_indifferent_points(u);
    REQUIRE(g.points.size() == n);
    for (const auto& p : g.points) REQUIRE(expected_utility(u, p) == g.construction.mean_utility);
    REQUIRE(affine_rank(embedded(g.points)) == n - 1);
    // matrix * base = (mean, 1)
    Rational row0, row1;
    for (std::size_t j = 0; j <= n; ++j) {
      row0 += g.construction.matrix(0, j) * g.construction.base[j];
      row1 += g.construction.matrix(1, j) * g.construction.base[j];
    }
    REQUIRE(row0 == g.construction.mean_utility);
    REQUIRE(row1 == 1);
  }
}

TEST_CASE("construct_ip_via_solvability") {
  const auto eu = PreferenceOracle::expected_utility(UtilityFunction{Qs("0,1,2")});
  CHECK(construct_ip_via_solvability(eu, Lottery::vertex(2, 2), L("1/2,0,1/2"), Lottery::vertex(2, 0)) ==
        std::vector{L("1/2,0,1/2"), L("0,1,0")});

  const auto eu1 = PreferenceOracle::expected_utility(UtilityFunction{Qs("0,1")});
  CHECK(construct_ip_via_solvability(eu1, Lottery::vertex(1, 1), L("1/2,1/2"), Lottery::vertex(1, 0)) ==
        std::vector{L("1/2,1/2")});

  CHECK(error_of([] {
          construct_ip_via_solvability(PreferenceOracle::hybrid_example(2), Lottery::vertex(2, 0), L("3/4,1/4,0"),
                                       Lottery::vertex(2, 2));
        }) == ErrorCode::NoSolveCapability);
  CHECK(error_of([&] {
          construct_ip_via_solvability(eu, Lottery::vertex(2, 0), L("1/2,0,1/2"), Lottery::vertex(2, 2));
        }) == ErrorCode::PreconditionViolated);

  // q off the segment [p, r] is first moved onto it.
  const auto pts = construct_ip_via_solvability(eu, Lottery::vertex(2, 2), Lottery::vertex(2, 1), Lottery::vertex(2, 0));
  CHECK(pts.front() == L("1/2,0,1/2"));
  CHECK(mutually_indifferent(eu, pts));
}

TEST_CASE("indifference_certificate") {
  const auto eu = PreferenceOracle::expected_utility(UtilityFunction{Qs("0,1,2")});
  SUBCASE("reduction branch") {
    const auto cert = indifference_certificate(L("1/2,0,1/2"), kIndifferent);
    CHECK(cert.branch == CertificateBranch::reduction);
    CHECK(cert.coefficients == Qs("-1,2"));
    REQUIRE(cert.reduction);
    CHECK(cert.reduction->k_star == 0);  // zero-based
    CHECK(cert.reduction->lambda_star == 1);
    CHECK(cert.reduction->alpha_star == Q("2/3"));
    CHECK(cert.reduction->mean == L("3/8,1/4,3/8"));
    CHECK(cert.reduction->reduced == L("5/12,1/6,5/12"));
    CHECK(cert.reduction->reduced_coefficients[cert.reduction->k_star] == 0);
    CHECK(replay(cert, eu).verified);
  }
  SUBCASE("convex branch") {
    const auto cert = indifference_certificate(kIndifferent[0], kIndifferent);
    CHECK(cert.branch == CertificateBranch::convex);
    CHECK(cert.coefficients == Qs("1,0"));
    CHECK(replay(cert, eu).verified);
  }
  SUBCASE("outside the hull") {
    CHECK(error_of([] { indifference_certificate(Lottery::vertex(2, 2), kIndifferent); }) ==
          ErrorCode::NotInAffineHull);
  }
}

TEST_CASE("replay rejects tampered certificates and non-representing oracles") {
  const auto eu = PreferenceOracle::expected_utility(UtilityFunction{Qs("0,1,2")});
  auto cert = indifference_certificate(L("1/2,0,1/2"), kIndifferent);

  auto bad_alpha = cert;
  bad_alpha.reduction->alpha_star = Q("1/2");
  CHECK_FALSE(replay(bad_alpha, eu).verified);

  auto bad_coeff = cert;
  bad_coeff.coefficients = Qs("-2,3");
  CHECK_FALSE(replay(bad_coeff, eu).verified);

  const auto other = PreferenceOracle::expected_utility(UtilityFunction{Qs("0,2,1")});
  const auto r = replay(cert, other);
  CHECK_FALSE(r.verified);
  CHECK_FALSE(r.failures.empty());
}

TEST_CASE("round trip: generate then elicit recovers u up to positive affine transformation") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<long> value(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 6;
    UtilityFunction u;
    for (std::size_t i = 0; i <= n; ++i) u.values.emplace_back(value(rng));
    if (std::all_of(u.values.begin(), u.values.end(), [&](auto& v) { return v == u.values[0]; })) continue;
    const auto best = std::max_element(u.values.begin(), u.values.end()) - u.values.begin();
    const auto worst = std::min_element(u.values.begin(), u.values.end()) - u.values.begin();
    const auto g = generate_indifferent_points(u);
    const auto rep = elicit(ElicitationInput{
        g.points, StrictPair{Lottery::vertex(n, static_cast<std::size_t>(best)), Lottery::vertex(n, static_cast<std::size_t>(worst))}});
    // u' = a u + b with a > 0: gauge-normalize both and compare.
    const Rational a = (rep.utility.values[best] - rep.utility.values[worst]) / (u.values[best] - u.values[worst]);
    REQUIRE(a.sign() > 0);
    const Rational b = rep.utility.values[0] - a * u.values[0];
    for (std::size_t i = 0; i <= n; ++i) REQUIRE(rep.utility.values[i] == a * u.values[i] + b);
  }
}

TEST_CASE("certificates replay for every grid point in the hull of the fixture") {
  const auto eu = PreferenceOracle::expected_utility(UtilityFunction{Qs("0,1,2")});
  const auto pts = embedded(kIndifferent);
  std::size_t count = 0;
  for (const auto& t : grid_lotteries(GridSpec{8, 2})) {
    if (!affine_coefficients(embed(t), pts)) continue;
    ++count;
    REQUIRE(replay(indifference_certificate(t, kIndifferent), eu).verified);
  }
  CHECK(count > 2);
}

TEST_CASE("translation property for a represented oracle") {
  const auto rep = elicit(fixture_input(true));
  const auto o = rep.oracle();
  const auto grid = grid_lotteries(GridSpec{5, 2});
  for (const auto& p : grid) {
    for (const auto& r : grid) {
      if (o.compare(r, p) != Comparison::indifferent) continue;
      for (const auto& q : grid) {
        std::vector<Rational> w;
        bool inside = true;
        for (std::size_t i = 0; i < 3; ++i) {
          w.push_back(r[i] + q[i] - p[i]);
          inside = inside && w.back().sign() >= 0;
        }
        if (!inside) continue;
        REQUIRE(o.compare(make_lottery(w), q) == Comparison::indifferent);
      }
    }
  }
}
