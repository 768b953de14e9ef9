#include "eurep/axiom_checks.hpp"
#include "eurep/serialize.hpp"
#include "support.hpp"

#include <algorithm>

using namespace eurep;
using namespace eurep::testing;

namespace {

PreferenceOracle eu012() { return PreferenceOracle::expected_utility(UtilityFunction{Qs("0,1,2")}); }
PreferenceOracle hybrid() { return PreferenceOracle::hybrid_example(2); }

template <class W>
const W& witness_as(const AxiomVerdict& v) {
  REQUIRE(v.witness.has_value());
  REQUIRE(std::holds_alternative<W>(*v.witness));
  return std::get<W>(*v.witness);
}

void require_violation_replays(const AxiomVerdict& v, const PreferenceOracle& o) {
  REQUIRE(v.violated());
  REQUIRE(v.witness.has_value());
  CHECK(replay_witness(*v.witness, o));
}

}  // namespace

TEST_CASE("check_weak_order") {
  CHECK_FALSE(check_weak_order(eu012(), GridSpec{3, 2}).violated());
  CHECK_FALSE(check_weak_order(hybrid(), GridSpec{3, 2}).violated());
  const auto majority = PreferenceOracle::majority(2);
  const auto v = check_weak_order(majority, GridSpec{3, 2});
  require_violation_replays(v, majority);
  const auto& w = witness_as<witness::Transitivity>(v);
  CHECK(weakly_better(majority.compare(w.p, w.q)));
  CHECK(weakly_better(majority.compare(w.q, w.r)));
  CHECK(majority.compare(w.r, w.p) == Comparison::better);
}

TEST_CASE("check_independence") {
  CHECK_FALSE(check_independence(eu012(), GridSpec{3, 2}, IndependenceVariant::independence).violated());

  const auto v = check_independence(hybrid(), GridSpec{6, 2}, IndependenceVariant::independence);
  require_violation_replays(v, hybrid());
  const auto& w = witness_as<witness::Independence>(v);
  // First in enumeration order.
  CHECK(w.p == L("0,0,1"));
  CHECK(w.q == L("0,1,0"));
  CHECK(w.r == L("1,0,0"));
  CHECK(w.alpha == Q("1/2"));

  // The hand-derived instance: p ~ q, yet the mixtures are strictly ordered.
  const witness::Independence by_hand{L("1/2,1/2,0"),        L("1/2,0,1/2"),         L("0,0,1"),
                                      Q("1/2"),              L("1/4,1/4,1/2"),       L("1/4,0,3/4"),
                                      Comparison::indifferent, Comparison::better};
  CHECK(replay_witness(by_hand, hybrid()));

  CHECK_FALSE(check_independence(hybrid(), GridSpec{6, 2}, IndependenceVariant::betweenness).violated());
  CHECK_FALSE(check_independence(eu012(), GridSpec{4, 2}, IndependenceVariant::betweenness).violated());
}

TEST_CASE("check_ip") {
  {
    const auto v = check_ip(eu012(), GridSpec{4, 2});
    CHECK_FALSE(v.violated());
    auto pts = witness_as<witness::SpanningSet>(v).points;
    std::sort(pts.begin(), pts.end());
    auto expected = std::vector{L("1/2,0,1/2"), L("0,1,0")};
    std::sort(expected.begin(), expected.end());
    CHECK(pts == expected);
    CHECK(replay_witness(*v.witness, eu012()));
  }
  {
    const auto v = check_ip(hybrid(), GridSpec{2, 2});
    CHECK_FALSE(v.violated());
    auto pts = witness_as<witness::SpanningSet>(v).points;
    std::sort(pts.begin(), pts.end());
    auto expected = std::vector{L("1/2,1/2,0"), L("1/2,0,1/2")};
    std::sort(expected.begin(), expected.end());
    CHECK(pts == expected);
  }
  for (std::size_t d : {1, 3, 6}) {
    const auto lex = PreferenceOracle::lexicographic(2);
    const auto v = check_ip(lex, GridSpec{d, 2});
    CHECK(v.violated());
    CHECK(witness_as<witness::NoSpanningSet>(v).best_rank == 0);
    CHECK(replay_witness(*v.witness, lex));
  }
}

TEST_CASE("continuity falsifiers on the hybrid example") {
  const auto o = hybrid();
  for (auto kind : {ContinuityKind::grid_openness, ContinuityKind::mixture, ContinuityKind::archimedean,
                    ContinuityKind::solvability}) {
    for (std::size_t d : {4, 8}) {
      CAPTURE(to_string(kind));
      CAPTURE(d);
      require_violation_replays(check_continuity(o, kind, GridSpec{d, 2}), o);
    }
  }
}

TEST_CASE("hand-derived continuity witnesses on the hybrid example") {
  const auto o = hybrid();
  const auto p = Lottery::vertex(2, 0);
  const auto q = L("3/4,1/4,0");

  SUBCASE("archimedean: no mixture falls below q") {
    const auto w = probe_archimedean(o, p, q, L("3/4,0,1/4"), 8, kDefaultDepth);
    REQUIRE(w);
    CHECK_FALSE(w->upper);
    CHECK(replay_witness(*w, o));
  }
  SUBCASE("mixture: {a : mix >= q} = (3/4, 1] misses its boundary") {
    const auto w = probe_mixture(o, p, q, Lottery::vertex(2, 2), true, Q("3/4"), 8, kDefaultDepth);
    REQUIRE(w);
    CHECK(w->direction == 1);
    CHECK(w->at_boundary == Comparison::worse);
    CHECK(replay_witness(*w, o));
  }
  SUBCASE("solvability: no mixture ties with q") {
    const auto w = probe_solvability(o, p, q, Lottery::vertex(2, 2), 8, kDefaultDepth);
    REQUIRE(w);
    CHECK(w->lower <= Q("3/4"));
    CHECK(w->upper >= Q("3/4"));
    CHECK(replay_witness(*w, o));
  }
}

TEST_CASE("probes find nothing where the EU oracle is continuous") {
  const auto o = eu012();
  const auto p = Lottery::vertex(2, 2), r = Lottery::vertex(2, 0);
  CHECK_FALSE(probe_solvability(o, p, L("1/2,1/2,0"), r, 6, kDefaultDepth));
  CHECK_FALSE(probe_solvability(o, p, L("10/11,0,1/11"), r, 6, kDefaultDepth));  // alpha = 1/11
  CHECK_FALSE(probe_archimedean(o, p, L("1/2,1/2,0"), r, 6, kDefaultDepth));
  CHECK_FALSE(probe_mixture(o, p, L("1/2,1/2,0"), r, true, Q("1/3"), 6, kDefaultDepth));
  CHECK_FALSE(probe_openness(o, L("1/2,1/2,0"), p, 6, kDefaultDepth));
  // Depth below the first refinement level yields no evidence either way.
  CHECK_FALSE(probe_openness(hybrid(), L("0,1,0"), L("0,0,1"), 8, 2));
}

TEST_CASE("EU oracle: every check at d = 6 finds no violation") {
  const auto o = eu012();
  const GridSpec g{6, 2};
  CHECK_FALSE(check_weak_order(o, g).violated());
  CHECK_FALSE(check_independence(o, g, IndependenceVariant::independence).violated());
  CHECK_FALSE(check_independence(o, g, IndependenceVariant::betweenness).violated());
  CHECK_FALSE(check_ip(o, g).violated());
  for (auto kind : {ContinuityKind::grid_openness, ContinuityKind::mixture, ContinuityKind::archimedean,
                    ContinuityKind::solvability}) {
    CAPTURE(to_string(kind));
    const auto v = check_continuity(o, kind, g);
    CHECK_FALSE(v.violated());
    CHECK(v.budget.depth == kDefaultDepth);
    CHECK(v.budget.denominator_bound == 6);
  }
}

TEST_CASE("line order, convexity and translation") {
  const auto o = eu012();
  const GridSpec g{5, 2};
  CHECK_FALSE(check_line_order(o, g).violated());
  CHECK_FALSE(check_convexity(o, g).violated());
  CHECK_FALSE(check_translation(o, g).violated());

  // The hybrid example keeps line order: along any line the priority weight
  // is monotone and ties are broken monotonically too. Translating its
  // indifference segment off the tie line breaks indifference.
  const auto h = hybrid();
  CHECK_FALSE(check_line_order(h, g).violated());
  require_violation_replays(check_translation(h, g), h);
}

TEST_CASE("serial and parallel scans report identical verdicts") {
  const std::vector<PreferenceOracle> oracles{eu012(), hybrid(), PreferenceOracle::majority(2),
                                              PreferenceOracle::lexicographic(2, {2, 0, 1})};
  const GridSpec g{4, 2};
  for (const auto& o : oracles) {
    CAPTURE(o.kind_name());
    const auto same = [&](auto&& run) { CHECK(to_json(run(Execution::serial)) == to_json(run(Execution::parallel))); };
    same([&](Execution e) { return check_weak_order(o, g, e); });
    same([&](Execution e) { return check_independence(o, g, IndependenceVariant::independence, e); });
    same([&](Execution e) { return check_independence(o, g, IndependenceVariant::betweenness, e); });
    same([&](Execution e) { return check_line_order(o, g, e); });
    same([&](Execution e) { return check_convexity(o, g, e); });
    same([&](Execution e) { return check_translation(o, g, e); });
    for (auto kind : {ContinuityKind::grid_openness, ContinuityKind::mixture, ContinuityKind::archimedean,
                      ContinuityKind::solvability}) {
      same([&](Execution e) { return check_continuity(o, kind, g, 24, e); });
    }
  }
}

TEST_CASE("checks are deterministic across runs") {
  const auto a = check_continuity(hybrid(), ContinuityKind::mixture, GridSpec{6, 2});
  const auto b = check_continuity(hybrid(), ContinuityKind::mixture, GridSpec{6, 2});
  CHECK(to_json(a) == to_json(b));
}

TEST_CASE("tampered witnesses do not replay") {
  const auto o = hybrid();
  auto v = check_independence(o, GridSpec{4, 2}, IndependenceVariant::independence);
  auto w = witness_as<witness::Independence>(v);
  w.after = w.before;
  CHECK_FALSE(replay_witness(w, o));

  auto m = std::get<witness::MixtureClosedness>(*check_continuity(o, ContinuityKind::mixture, GridSpec{4, 2}).witness);
  m.boundary = m.boundary == 1 ? Q("1/2") : Rational(1);
  CHECK_FALSE(replay_witness(m, o));

  auto s = std::get<witness::Solvability>(*check_continuity(o, ContinuityKind::solvability, GridSpec{4, 2}).witness);
  CHECK_FALSE(replay_witness(s, eu012()));

  const auto maj = PreferenceOracle::majority(2);
  const auto t = check_weak_order(maj, GridSpec{3, 2});
  CHECK_FALSE(replay_witness(*t.witness, eu012()));
}

TEST_CASE("oracle and grid must share an outcome space") {
  CHECK(error_of([] { check_weak_order(eu012(), GridSpec{3, 3}); }) == ErrorCode::SpaceMismatch);
}
