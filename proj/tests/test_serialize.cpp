#include "eurep/serialize.hpp"
#include "support.hpp"

using namespace eurep;
using namespace eurep::testing;

namespace {

PreferenceOracle hybrid() { return PreferenceOracle::hybrid_example(2); }

}  // namespace

TEST_CASE("rationals and lotteries serialize as canonical strings") {
  CHECK(to_json(Q("-5/12")) == Json("-5/12"));
  CHECK(to_json(L("1/2,0,1/2")) == Json::parse(R"(["1/2","0","1/2"])"));
  CHECK(lottery_from_json(Json::parse(R"(["1/2","0","1/2"])")) == L("1/2,0,1/2"));
  CHECK(error_of([] { rational_from_json(Json(0.5)); }) == ErrorCode::ParseError);
  CHECK(error_of([] { rational_from_json(Json(1)); }) == ErrorCode::ParseError);
  CHECK(error_of([] { lottery_from_json(Json::parse(R"(["1/2","1/2"])"), 3); }) == ErrorCode::LengthMismatch);
  CHECK(error_of([] { lottery_from_json(Json::parse(R"(["1/2","1/2","1/2"])")); }) == ErrorCode::SumNotOne);
  CHECK(lottery_from_text("0,0,1") == Lottery::vertex(2, 2));
}

TEST_CASE("oracles round-trip") {
  const std::vector<PreferenceOracle> oracles{
      PreferenceOracle::expected_utility(UtilityFunction{Qs("0,1,2")}), PreferenceOracle::lexicographic(2, {1, 2, 0}),
      hybrid(), PreferenceOracle::majority(3),
      PreferenceOracle::represented(Hyperplane{P("1,2"), P("1/3,1/3")}, -1)};
  for (const auto& o : oracles) {
    const auto back = oracle_from_json(to_json(o));
    CHECK(to_json(back) == to_json(o));
  }
  CHECK(error_of([] { oracle_from_json(Json::parse(R"({"kind":"psychic","n":2})")); }) ==
        ErrorCode::InvalidScenario);
  CHECK(error_of([] { oracle_from_json(Json::parse(R"({"kind":"hybrid"})")); }) == ErrorCode::ParseError);
}

TEST_CASE("certificates round-trip and still replay") {
  const auto eu = PreferenceOracle::expected_utility(UtilityFunction{Qs("0,1,2")});
  const std::vector<Lottery> pts{L("1/3,1/3,1/3"), L("5/12,1/6,5/12")};
  for (const auto& target : {L("1/2,0,1/2"), L("3/8,1/4,3/8"), pts[0]}) {
    const auto cert = indifference_certificate(target, pts);
    const auto back = certificate_from_json(Json::parse(to_json(cert).dump()));
    CHECK(to_json(back) == to_json(cert));
    CHECK(replay(back, eu).verified);
  }
}

TEST_CASE("every witness kind round-trips through JSON") {
  const auto h = hybrid();
  const GridSpec g{4, 2};
  std::vector<AxiomVerdict> verdicts{
      check_weak_order(PreferenceOracle::majority(2), g),
      check_independence(h, g, IndependenceVariant::independence),
      check_ip(h, g),
      check_ip(PreferenceOracle::lexicographic(2), g),
      check_translation(h, g),
  };
  for (auto kind : {ContinuityKind::grid_openness, ContinuityKind::mixture, ContinuityKind::archimedean,
                    ContinuityKind::solvability}) {
    verdicts.push_back(check_continuity(h, kind, g));
  }
  verdicts.push_back(AxiomVerdict{"betweenness", Outcome::violated, Budget{2, 0, 6},
                                  witness::Betweenness{L("1,0"), L("0,1"), Q("1/2"), L("1/2,1/2"),
                                                       Comparison::better, Comparison::worse, Comparison::better}});
  verdicts.push_back(AxiomVerdict{"convexity", Outcome::violated, Budget{2, 0, 6},
                                  witness::Convexity{L("1,0"), L("0,1"), L("1/2,1/2"), Q("1/2"), L("1/4,3/4"),
                                                     Comparison::worse}});
  verdicts.push_back(AxiomVerdict{"line-order", Outcome::violated, Budget{2, 0, 6},
                                  witness::LineOrder{L("1,0"), L("0,1"), Q("1/2"), L("1/2,1/2"), Comparison::worse,
                                                     Comparison::better}});
  for (const auto& v : verdicts) {
    CAPTURE(v.axiom);
    REQUIRE(v.witness);
    const auto text = to_json(v).dump();
    const auto back = verdict_from_json(Json::parse(text));
    CHECK(to_json(back).dump() == text);
  }
}

TEST_CASE("scenario parsing") {
  const auto s = scenario_from_json(Json::parse(R"({
    "version": 1,
    "outcomes": ["a", "b", "c"],
    "utility": ["0", "1", "2"],
    "oracle": {"kind": "eu"},
    "elicitation": {"indifferent": [["1/3","1/3","1/3"], ["5/12","1/6","5/12"]],
                    "strict": {"better": ["0","0","1"], "worse": ["1","0","0"]}},
    "queries": {"reference": "uniform", "lotteries": [["0","0","1"]]},
    "checks": [{"axiom": "continuity", "kind": "mixture", "grid": 4, "depth": 20}]
  })"));
  CHECK(s.n() == 2);
  CHECK(s.oracle->kind_name() == "eu");
  CHECK(s.elicitation->indifferent.size() == 2);
  CHECK(s.queries->reference == Lottery::uniform(2));
  REQUIRE(s.checks.size() == 1);
  CHECK(s.checks[0].variant == "mixture");
  CHECK(s.checks[0].depth == 20);

  CHECK(error_of([] { scenario_from_json(Json::parse(R"({"version": 2, "outcomes": 2})")); }) ==
        ErrorCode::InvalidScenario);
  CHECK(error_of([] { scenario_from_json(Json::parse(R"({"outcomes": 2})")); }) == ErrorCode::ParseError);
  CHECK(error_of([] {
          scenario_from_json(Json::parse(R"({"version": 1, "outcomes": 2, "utility": [0, 1, 2]})"));
        }) == ErrorCode::ParseError);
  CHECK(error_of([] {
          scenario_from_json(Json::parse(R"({"version": 1, "outcomes": 2, "utility": ["0", "1"]})"));
        }) == ErrorCode::LengthMismatch);
}
