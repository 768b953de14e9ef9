#include "eurep/grid.hpp"
#include "eurep/preferences.hpp"
#include "support.hpp"

using namespace eurep;
using namespace eurep::testing;

namespace {

const UtilityFunction kU{Qs("0,1,2")};

}  // namespace

TEST_CASE("expected_utility") {
  CHECK(expected_utility(kU, L("1/3,1/3,1/3")) == 1);
  CHECK(expected_utility(kU, Lottery::vertex(2, 2)) == 2);
  CHECK(expected_utility(kU, L("1/2,0,1/2")) == 1);
  CHECK(error_of([] { expected_utility(kU, L("1/2,1/2")); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("compare") {
  const auto eu = PreferenceOracle::expected_utility(kU);
  CHECK(eu.compare(Lottery::vertex(2, 2), Lottery::vertex(2, 0)) == Comparison::better);
  const auto hybrid = PreferenceOracle::hybrid_example(2);
  CHECK(hybrid.compare(L("1/2,1/2,0"), L("1/2,0,1/2")) == Comparison::indifferent);
  const auto lex = PreferenceOracle::lexicographic(2);
  CHECK(lex.compare(L("1/2,1/4,1/4"), L("1/2,0,1/2")) == Comparison::better);
  const auto lex_rev = PreferenceOracle::lexicographic(2, {2, 1, 0});
  CHECK(lex_rev.compare(L("1/2,1/4,1/4"), L("1/2,0,1/2")) == Comparison::worse);
  CHECK(error_of([&] { eu.compare(L("1/2,1/2"), L("1/2,1/2")); }) == ErrorCode::SpaceMismatch);
  CHECK(error_of([] { PreferenceOracle::lexicographic(2, {0, 0, 1}); }) == ErrorCode::InvalidScenario);
}

TEST_CASE("comparison strings") {
  for (auto c : {Comparison::better, Comparison::indifferent, Comparison::worse}) {
    CHECK(comparison_from_string(to_string(c)) == c);
  }
  CHECK(to_string(Comparison::better) == "strictly-better");
  CHECK(error_of([] { comparison_from_string("better"); }) == ErrorCode::ParseError);
}

TEST_CASE("solve") {
  const auto eu = PreferenceOracle::expected_utility(kU);
  CHECK(eu.solve(Lottery::vertex(2, 2), L("1/2,0,1/2"), Lottery::vertex(2, 0)) == Q("1/2"));
  const auto u = Lottery::uniform(2);
  CHECK(eu.solve(u, L("1/2,0,1/2"), Lottery::vertex(2, 1)) == 1);
  CHECK(error_of([] {
          PreferenceOracle::hybrid_example(2).solve(Lottery::vertex(2, 0), L("3/4,1/4,0"), Lottery::vertex(2, 2));
        }) == ErrorCode::NoSolveCapability);
  CHECK(error_of([&] { eu.solve(Lottery::vertex(2, 0), u, Lottery::vertex(2, 2)); }) ==
        ErrorCode::PreconditionViolated);
}

TEST_CASE("capabilities and kind names") {
  CHECK(PreferenceOracle::expected_utility(kU).has_solve());
  CHECK_FALSE(PreferenceOracle::lexicographic(2).has_solve());
  CHECK_FALSE(PreferenceOracle::hybrid_example(2).has_solve());
  CHECK_FALSE(PreferenceOracle::majority(2).has_solve());
  CHECK(PreferenceOracle::represented(Hyperplane{P("1,2"), P("1/3,1/3")}, 1).has_solve());
  CHECK(PreferenceOracle::hybrid_example(2).kind_name() == "hybrid");
}

TEST_CASE("oracle properties over the grid") {
  const auto grid = grid_lotteries(GridSpec{6, 2});
  const std::vector<PreferenceOracle> oracles{
      PreferenceOracle::expected_utility(kU), PreferenceOracle::lexicographic(2),
      PreferenceOracle::hybrid_example(2), PreferenceOracle::majority(2),
      PreferenceOracle::represented(Hyperplane{P("1,2"), P("1/3,1/3")}, -1)};
  for (const auto& o : oracles) {
    CAPTURE(o.kind_name());
    for (const auto& p : grid) {
      REQUIRE(o.compare(p, p) == Comparison::indifferent);
      for (const auto& q : grid) REQUIRE(o.compare(p, q) == reversed(o.compare(q, p)));
    }
  }
  const auto eu = PreferenceOracle::expected_utility(kU);
  for (const auto& p : grid) {
    for (const auto& q : grid) {
      const int s = (expected_utility(kU, p) - expected_utility(kU, q)).sign();
      REQUIRE(static_cast<int>(eu.compare(p, q)) == s);
    }
  }
}

TEST_CASE("solve postcondition over the grid") {
  const auto eu = PreferenceOracle::expected_utility(UtilityFunction{Qs("3,-1,0")});
  const auto grid = grid_lotteries(GridSpec{3, 2});
  for (const auto& p : grid) {
    for (const auto& q : grid) {
      if (!weakly_better(eu.compare(p, q))) continue;
      for (const auto& r : grid) {
        if (!weakly_better(eu.compare(q, r))) continue;
        const Rational a = eu.solve(p, q, r);
        REQUIRE(a.sign() >= 0);
        REQUIRE(a <= 1);
        REQUIRE(eu.compare(mix(p, r, a), q) == Comparison::indifferent);
      }
    }
  }
}
