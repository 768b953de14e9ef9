#pragma once

// JSON forms of every value the CLI reads or writes.
//
// Rationals are always canonical strings, never JSON numbers, so exactness
// survives a round trip. Readers validate as they go and raise ParseError
// (malformed JSON shape) or the domain error of the failed invariant.

#include "eurep/axiom_checks.hpp"
#include "eurep/geometry.hpp"
#include "eurep/lottery.hpp"
#include "eurep/preferences.hpp"
#include "eurep/representation.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace eurep {

using Json = nlohmann::ordered_json;

inline constexpr int kScenarioVersion = 1;

Json to_json(const Rational& r);
Json to_json(const Lottery& p);
Json to_json(const EmbeddedPoint& v);
Json to_json(const RationalMatrix& m);
Json to_json(const Hyperplane& h);
Json to_json(const UtilityFunction& u);
Json to_json(const PreferenceOracle& oracle);
Json to_json(const Representation& rep);
Json to_json(const IndifferentPoints& generated);
Json to_json(const IndifferenceCertificate& cert);
Json to_json(const ReplayResult& result);
Json to_json(const Witness& w);
Json to_json(const AxiomVerdict& v);

Rational rational_from_json(const Json& j);
/// `size` of 0 accepts any length of at least two.
Lottery lottery_from_json(const Json& j, std::size_t size = 0);
EmbeddedPoint point_from_json(const Json& j);
UtilityFunction utility_from_json(const Json& j);
Hyperplane hyperplane_from_json(const Json& j);
Representation representation_from_json(const Json& j);
/// `n` fills in the space size for kinds that do not carry one; `utility`
/// is the fallback for an "eu" block without its own values.
PreferenceOracle oracle_from_json(const Json& j, std::optional<std::size_t> n = std::nullopt,
                                  const std::optional<UtilityFunction>& utility = std::nullopt);
IndifferenceCertificate certificate_from_json(const Json& j);
Witness witness_from_json(const Json& j);
AxiomVerdict verdict_from_json(const Json& j);

/// Parses a lottery written as comma-separated rationals, e.g. "1/2,0,1/2".
Lottery lottery_from_text(const std::string& text, std::size_t size = 0);

struct QueryBlock {
  std::optional<Lottery> reference;  // uniform when absent
  std::vector<Lottery> lotteries;
};

struct CertifyBlock {
  Lottery target;
  std::vector<Lottery> points;
};

struct ConstructBlock {
  Lottery p, q, r;
};

struct CheckRequest {
  std::string axiom;
  std::string variant;  // independence variant or continuity kind; may be empty
  std::size_t grid = 6;
  std::size_t depth = kDefaultDepth;
};

struct Scenario {
  OutcomeSpace outcomes;
  std::optional<UtilityFunction> utility;
  std::optional<PreferenceOracle> oracle;
  std::optional<ElicitationInput> elicitation;
  std::optional<Representation> representation;
  std::optional<QueryBlock> queries;
  std::optional<CertifyBlock> certify;
  std::optional<ConstructBlock> construct;
  std::vector<CheckRequest> checks;

  std::size_t n() const { return outcomes.n(); }
};

Scenario scenario_from_json(const Json& j);
Json read_json_file(const std::string& path);

}  // namespace eurep
