#include "eurep/serialize.hpp"

#include "eurep/error.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace eurep {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) malformed(std::string("expected an object holding \"") + key + "\"");
  const auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing field \"") + key + "\"");
  return *it;
}

const Json* optional_field(const Json& j, const char* key) {
  if (!j.is_object()) return nullptr;
  const auto it = j.find(key);
  return it == j.end() || it->is_null() ? nullptr : &*it;
}

const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) malformed(std::string("field \"") + key + "\" must be an array");
  return a;
}

std::string string_of(const Json& j, const char* what) {
  if (!j.is_string()) malformed(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::size_t count_of(const Json& j, const char* what) {
  if (!j.is_number_unsigned()) malformed(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

bool bool_of(const Json& j, const char* what) {
  if (!j.is_boolean()) malformed(std::string(what) + " must be true or false");
  return j.get<bool>();
}

int sign_of(const Json& j) {
  if (!j.is_number_integer() || (j.get<long>() != 1 && j.get<long>() != -1)) malformed("orientation must be 1 or -1");
  return static_cast<int>(j.get<long>());
}

std::vector<Rational> rationals_from_json(const Json& j) {
  if (!j.is_array()) malformed("expected an array of rational strings");
  std::vector<Rational> out;
  out.reserve(j.size());
  for (const auto& x : j) out.push_back(rational_from_json(x));
  return out;
}

template <class T>
Json array_of(const std::vector<T>& xs) {
  Json a = Json::array();
  for (const auto& x : xs) a.push_back(to_json(x));
  return a;
}

std::vector<Lottery> lotteries_from_json(const Json& j, std::size_t size) {
  if (!j.is_array()) malformed("expected an array of lotteries");
  std::vector<Lottery> out;
  for (const auto& x : j) out.push_back(lottery_from_json(x, size));
  return out;
}

Json to_json(Comparison c) { return std::string(to_string(c)); }
Comparison comparison_from_json(const Json& j) { return comparison_from_string(string_of(j, "comparison")); }

Json to_json(const MixtureStep& s) {
  return Json{{"left", to_json(s.left)}, {"right", to_json(s.right)}, {"alpha", to_json(s.alpha)},
              {"result", to_json(s.result)}};
}

std::vector<MixtureStep> chain_from_json(const Json& j) {
  if (!j.is_array()) malformed("mixture chain must be an array");
  std::vector<MixtureStep> out;
  for (const auto& s : j) {
    out.push_back(MixtureStep{lottery_from_json(field(s, "left")), lottery_from_json(field(s, "right")),
                              rational_from_json(field(s, "alpha")), lottery_from_json(field(s, "result"))});
  }
  return out;
}

Json chain_to_json(const std::vector<MixtureStep>& chain) {
  Json a = Json::array();
  for (const auto& s : chain) a.push_back(to_json(s));
  return a;
}

std::string outcome_name(Outcome o) { return o == Outcome::violated ? "violated" : "no-violation-found"; }

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const Lottery& p) {
  Json a = Json::array();
  for (const auto& w : p.weights()) a.push_back(w.to_string());
  return a;
}

Json to_json(const EmbeddedPoint& v) { return array_of(v.coords); }

Json to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const Hyperplane& h) { return Json{{"normal", to_json(h.normal)}, {"base", to_json(h.base)}}; }

Json to_json(const UtilityFunction& u) { return array_of(u.values); }

Json to_json(const PreferenceOracle& oracle) {
  Json j{{"kind", std::string(oracle.kind_name())}, {"n", oracle.n()}};
  std::visit(overloaded{
                 [&](const oracle_kind::ExpectedUtility& k) { j["utility"] = to_json(k.utility); },
                 [&](const oracle_kind::Lexicographic& k) { j["priority"] = k.priority; },
                 [&](const oracle_kind::Represented& k) {
                   j["hyperplane"] = to_json(k.hyperplane);
                   j["orientation"] = k.orientation;
                 },
                 [](const auto&) {},
             },
             oracle.kind());
  return j;
}

Json to_json(const Representation& rep) {
  return Json{{"utility", to_json(rep.utility)},
              {"hyperplane", to_json(rep.hyperplane)},
              {"orientation", rep.orientation},
              {"oriented", rep.oriented}};
}

Json to_json(const IndifferentPoints& generated) {
  const auto& k = generated.construction;
  return Json{{"points", array_of(generated.points)},
              {"construction",
               Json{{"matrix", to_json(k.matrix)},
                    {"mean_utility", to_json(k.mean_utility)},
                    {"base", to_json(k.base)},
                    {"basis", array_of(k.basis)},
                    {"step", to_json(k.step)}}}};
}

Json to_json(const IndifferenceCertificate& cert) {
  Json j{{"target", to_json(cert.target)},
         {"points", array_of(cert.points)},
         {"coefficients", array_of(cert.coefficients)},
         {"branch", std::string(to_string(cert.branch))}};
  if (cert.branch == CertificateBranch::convex) j["convex_chain"] = chain_to_json(cert.convex_chain);
  if (cert.reduction) {
    const auto& r = *cert.reduction;
    j["reduction"] = Json{{"k_star", r.k_star},
                          {"lambda_star", to_json(r.lambda_star)},
                          {"mean", to_json(r.mean)},
                          {"mean_chain", chain_to_json(r.mean_chain)},
                          {"alpha_star", to_json(r.alpha_star)},
                          {"reduced", to_json(r.reduced)},
                          {"reduced_coefficients", array_of(r.reduced_coefficients)},
                          {"reduced_chain", chain_to_json(r.reduced_chain)},
                          {"independence_left", to_json(r.independence_left)},
                          {"independence_right", to_json(r.independence_right)}};
  }
  return j;
}

Json to_json(const ReplayResult& result) {
  return Json{{"verified", result.verified}, {"failures", result.failures}};
}

Json to_json(const Witness& w) {
  Json j{{"type", std::string(witness_type(w))}};
  std::visit(overloaded{
                 [&](const witness::Transitivity& x) {
                   j.update(Json{{"p", to_json(x.p)},
                                 {"q", to_json(x.q)},
                                 {"r", to_json(x.r)},
                                 {"p_vs_q", to_json(x.pq)},
                                 {"q_vs_r", to_json(x.qr)},
                                 {"p_vs_r", to_json(x.pr)}});
                 },
                 [&](const witness::Independence& x) {
                   j.update(Json{{"p", to_json(x.p)},
                                 {"q", to_json(x.q)},
                                 {"r", to_json(x.r)},
                                 {"alpha", to_json(x.alpha)},
                                 {"mixed_p", to_json(x.mixed_p)},
                                 {"mixed_q", to_json(x.mixed_q)},
                                 {"before", to_json(x.before)},
                                 {"after", to_json(x.after)}});
                 },
                 [&](const witness::Betweenness& x) {
                   j.update(Json{{"p", to_json(x.p)},
                                 {"q", to_json(x.q)},
                                 {"alpha", to_json(x.alpha)},
                                 {"mixture", to_json(x.mixture)},
                                 {"p_vs_q", to_json(x.p_vs_q)},
                                 {"p_vs_mixture", to_json(x.p_vs_mixture)},
                                 {"mixture_vs_q", to_json(x.mixture_vs_q)}});
                 },
                 [&](const witness::SpanningSet& x) {
                   j.update(Json{{"points", array_of(x.points)}, {"rank", x.rank}});
                 },
                 [&](const witness::NoSpanningSet& x) {
                   j.update(Json{{"denominator_bound", x.denominator_bound},
                                 {"classes", x.classes},
                                 {"best_rank", x.best_rank}});
                 },
                 [&](const witness::LineOrder& x) {
                   j.update(Json{{"p", to_json(x.p)},
                                 {"q", to_json(x.q)},
                                 {"t", to_json(x.t)},
                                 {"point", to_json(x.point)},
                                 {"vs_p", to_json(x.vs_p)},
                                 {"vs_q", to_json(x.vs_q)}});
                 },
                 [&](const witness::Convexity& x) {
                   j.update(Json{{"p", to_json(x.p)},
                                 {"q1", to_json(x.q1)},
                                 {"q2", to_json(x.q2)},
                                 {"alpha", to_json(x.alpha)},
                                 {"mixture", to_json(x.mixture)},
                                 {"observed", to_json(x.observed)}});
                 },
                 [&](const witness::Translation& x) {
                   j.update(Json{{"p", to_json(x.p)},
                                 {"q", to_json(x.q)},
                                 {"r", to_json(x.r)},
                                 {"translated", to_json(x.translated)},
                                 {"observed", to_json(x.observed)}});
                 },
                 [&](const witness::Solvability& x) {
                   j.update(Json{{"p", to_json(x.p)},
                                 {"q", to_json(x.q)},
                                 {"r", to_json(x.r)},
                                 {"denominator_bound", x.denominator_bound},
                                 {"depth", x.depth},
                                 {"lower", to_json(x.lower)},
                                 {"upper", to_json(x.upper)}});
                 },
                 [&](const witness::MixtureClosedness& x) {
                   Json observed = Json::array();
                   for (auto c : x.approach_observed) observed.push_back(to_json(c));
                   j.update(Json{{"p", to_json(x.p)},
                                 {"q", to_json(x.q)},
                                 {"r", to_json(x.r)},
                                 {"relation", x.at_least ? "at-least" : "at-most"},
                                 {"boundary", to_json(x.boundary)},
                                 {"at_boundary", to_json(x.at_boundary)},
                                 {"direction", x.direction},
                                 {"approach", array_of(x.approach)},
                                 {"approach_observed", std::move(observed)}});
                 },
                 [&](const witness::Archimedean& x) {
                   j.update(Json{{"p", to_json(x.p)},
                                 {"q", to_json(x.q)},
                                 {"r", to_json(x.r)},
                                 {"side", x.upper ? "upper" : "lower"},
                                 {"denominator_bound", x.denominator_bound},
                                 {"depth", x.depth}});
                 },
                 [&](const witness::Openness& x) {
                   j.update(Json{{"reference", to_json(x.reference)},
                                 {"point", to_json(x.point)},
                                 {"side", to_json(x.side)},
                                 {"radii", array_of(x.radii)},
                                 {"neighbors", array_of(x.neighbors)}});
                 },
             },
             w);
  return j;
}

Json to_json(const AxiomVerdict& v) {
  Json j{{"axiom", v.axiom},
         {"outcome", outcome_name(v.outcome)},
         {"budget",
          Json{{"denominator_bound", v.budget.denominator_bound},
               {"depth", v.budget.depth},
               {"grid_size", v.budget.grid_size}}}};
  if (v.witness) j["witness"] = to_json(*v.witness);
  return j;
}

Rational rational_from_json(const Json& j) { return Rational::parse(string_of(j, "rational")); }

Lottery lottery_from_json(const Json& j, std::size_t size) {
  auto weights = rationals_from_json(j);
  if (size != 0 && weights.size() != size) {
    throw Error(ErrorCode::LengthMismatch, "lottery has " + std::to_string(weights.size()) + " weights, expected " +
                                               std::to_string(size));
  }
  return make_lottery(std::move(weights));
}

Lottery lottery_from_text(const std::string& text, std::size_t size) {
  Json a = Json::array();
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) a.push_back(item);
  return lottery_from_json(a, size);
}

EmbeddedPoint point_from_json(const Json& j) { return EmbeddedPoint{rationals_from_json(j)}; }

UtilityFunction utility_from_json(const Json& j) {
  UtilityFunction u{rationals_from_json(j)};
  if (u.values.size() < 2) throw Error(ErrorCode::LengthMismatch, "utility needs at least two values");
  return u;
}

Hyperplane hyperplane_from_json(const Json& j) {
  Hyperplane h{point_from_json(field(j, "normal")), point_from_json(field(j, "base"))};
  if (h.normal.dimension() == 0 || h.normal.dimension() != h.base.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "hyperplane normal and base differ in dimension");
  }
  if (std::all_of(h.normal.coords.begin(), h.normal.coords.end(), [](const Rational& x) { return x.is_zero(); })) {
    throw Error(ErrorCode::InvalidScenario, "hyperplane normal is zero");
  }
  return h;
}

Representation representation_from_json(const Json& j) {
  Representation rep{utility_from_json(field(j, "utility")), hyperplane_from_json(field(j, "hyperplane")),
                     sign_of(field(j, "orientation")), bool_of(field(j, "oriented"), "oriented")};
  if (rep.utility.n() != rep.hyperplane.dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "utility and hyperplane sizes differ");
  }
  return rep;
}

PreferenceOracle oracle_from_json(const Json& j, std::optional<std::size_t> n,
                                  const std::optional<UtilityFunction>& utility) {
  const std::string kind = string_of(field(j, "kind"), "oracle kind");
  if (const Json* own_n = optional_field(j, "n")) {
    const std::size_t declared = count_of(*own_n, "oracle n");
    if (n && *n != declared) throw Error(ErrorCode::SpaceMismatch, "oracle n differs from the outcome space");
    n = declared;
  }
  const auto need_n = [&] {
    if (!n) malformed("oracle of kind " + kind + " needs \"n\"");
    return *n;
  };

  PreferenceOracle oracle = [&] {
    if (kind == "eu") {
      const Json* values = optional_field(j, "utility");
      if (!values && !utility) malformed("eu oracle needs a utility");
      return PreferenceOracle::expected_utility(values ? utility_from_json(*values) : *utility);
    }
    if (kind == "lexicographic") {
      if (const Json* priority = optional_field(j, "priority")) {
        if (!priority->is_array()) malformed("priority must be an array of outcome indices");
        std::vector<std::size_t> order;
        for (const auto& x : *priority) order.push_back(count_of(x, "priority entry"));
        return PreferenceOracle::lexicographic(need_n(), std::move(order));
      }
      return PreferenceOracle::lexicographic(need_n());
    }
    if (kind == "hybrid") return PreferenceOracle::hybrid_example(need_n());
    if (kind == "majority") return PreferenceOracle::majority(need_n());
    if (kind == "represented") {
      const Json* orient = optional_field(j, "orientation");
      return PreferenceOracle::represented(hyperplane_from_json(field(j, "hyperplane")), orient ? sign_of(*orient) : 1);
    }
    throw Error(ErrorCode::InvalidScenario, "unknown oracle kind \"" + kind + "\"");
  }();
  if (n && oracle.n() != *n) throw Error(ErrorCode::SpaceMismatch, "oracle size differs from the outcome space");
  return oracle;
}

IndifferenceCertificate certificate_from_json(const Json& j) {
  IndifferenceCertificate cert{lottery_from_json(field(j, "target")),
                               lotteries_from_json(array_field(j, "points"), 0),
                               rationals_from_json(field(j, "coefficients")),
                               CertificateBranch::convex,
                               {},
                               std::nullopt};
  const std::string branch = string_of(field(j, "branch"), "branch");
  if (branch == "convex") {
    cert.convex_chain = chain_from_json(field(j, "convex_chain"));
  } else if (branch == "reduction") {
    cert.branch = CertificateBranch::reduction;
  } else {
    malformed("unknown certificate branch \"" + branch + "\"");
  }
  if (const Json* r = optional_field(j, "reduction")) {
    cert.reduction = ReductionRecord{count_of(field(*r, "k_star"), "k_star"),
                                     rational_from_json(field(*r, "lambda_star")),
                                     lottery_from_json(field(*r, "mean")),
                                     chain_from_json(field(*r, "mean_chain")),
                                     rational_from_json(field(*r, "alpha_star")),
                                     lottery_from_json(field(*r, "reduced")),
                                     rationals_from_json(field(*r, "reduced_coefficients")),
                                     chain_from_json(field(*r, "reduced_chain")),
                                     lottery_from_json(field(*r, "independence_left")),
                                     lottery_from_json(field(*r, "independence_right"))};
  }
  return cert;
}

Witness witness_from_json(const Json& j) {
  const std::string type = string_of(field(j, "type"), "witness type");
  const auto L = [&](const char* key) { return lottery_from_json(field(j, key)); };
  const auto Q = [&](const char* key) { return rational_from_json(field(j, key)); };
  const auto C = [&](const char* key) { return comparison_from_json(field(j, key)); };
  const auto N = [&](const char* key) { return count_of(field(j, key), key); };

  if (type == "transitivity") {
    return witness::Transitivity{L("p"), L("q"), L("r"), C("p_vs_q"), C("q_vs_r"), C("p_vs_r")};
  }
  if (type == "independence") {
    return witness::Independence{L("p"),       L("q"),       L("r"),      Q("alpha"),
                                 L("mixed_p"), L("mixed_q"), C("before"), C("after")};
  }
  if (type == "betweenness") {
    return witness::Betweenness{L("p"),      L("q"),           Q("alpha"),          L("mixture"),
                                C("p_vs_q"), C("p_vs_mixture"), C("mixture_vs_q")};
  }
  if (type == "spanning-set") return witness::SpanningSet{lotteries_from_json(array_field(j, "points"), 0), N("rank")};
  if (type == "no-spanning-set") {
    return witness::NoSpanningSet{N("denominator_bound"), N("classes"), N("best_rank")};
  }
  if (type == "line-order") return witness::LineOrder{L("p"), L("q"), Q("t"), L("point"), C("vs_p"), C("vs_q")};
  if (type == "convexity") {
    return witness::Convexity{L("p"), L("q1"), L("q2"), Q("alpha"), L("mixture"), C("observed")};
  }
  if (type == "translation") return witness::Translation{L("p"), L("q"), L("r"), L("translated"), C("observed")};
  if (type == "solvability") {
    return witness::Solvability{L("p"), L("q"), L("r"), N("denominator_bound"), N("depth"), Q("lower"), Q("upper")};
  }
  if (type == "mixture-closedness") {
    const std::string relation = string_of(field(j, "relation"), "relation");
    if (relation != "at-least" && relation != "at-most") malformed("relation must be at-least or at-most");
    const Json& dir = field(j, "direction");
    if (!dir.is_number_integer()) malformed("direction must be 1 or -1");
    std::vector<Comparison> observed;
    for (const auto& c : array_field(j, "approach_observed")) observed.push_back(comparison_from_json(c));
    return witness::MixtureClosedness{L("p"),
                                      L("q"),
                                      L("r"),
                                      relation == "at-least",
                                      Q("boundary"),
                                      C("at_boundary"),
                                      static_cast<int>(dir.get<long>()),
                                      rationals_from_json(field(j, "approach")),
                                      std::move(observed)};
  }
  if (type == "archimedean") {
    const std::string side = string_of(field(j, "side"), "side");
    if (side != "upper" && side != "lower") malformed("side must be upper or lower");
    return witness::Archimedean{L("p"), L("q"), L("r"), side == "upper", N("denominator_bound"), N("depth")};
  }
  if (type == "openness") {
    return witness::Openness{L("reference"), L("point"), C("side"), rationals_from_json(field(j, "radii")),
                             lotteries_from_json(array_field(j, "neighbors"), 0)};
  }
  malformed("unknown witness type \"" + type + "\"");
}

AxiomVerdict verdict_from_json(const Json& j) {
  const std::string outcome = string_of(field(j, "outcome"), "outcome");
  if (outcome != "violated" && outcome != "no-violation-found") malformed("unknown outcome \"" + outcome + "\"");
  const Json& b = field(j, "budget");
  AxiomVerdict v{string_of(field(j, "axiom"), "axiom"),
                 outcome == "violated" ? Outcome::violated : Outcome::no_violation_found,
                 Budget{count_of(field(b, "denominator_bound"), "denominator_bound"), count_of(field(b, "depth"), "depth"),
                        count_of(field(b, "grid_size"), "grid_size")},
                 std::nullopt};
  if (const Json* w = optional_field(j, "witness")) v.witness = witness_from_json(*w);
  return v;
}

Scenario scenario_from_json(const Json& j) {
  if (!j.is_object()) malformed("scenario must be a JSON object");
  const Json& version = field(j, "version");
  if (!version.is_number_integer() || version.get<long>() != kScenarioVersion) {
    throw Error(ErrorCode::InvalidScenario, "unsupported scenario version (expected " +
                                                std::to_string(kScenarioVersion) + ")");
  }

  const Json& outcomes = field(j, "outcomes");
  OutcomeSpace space = [&] {
    if (outcomes.is_number_unsigned()) return OutcomeSpace::indexed(outcomes.get<std::size_t>());
    if (!outcomes.is_array()) malformed("outcomes must be a label array or the number n");
    std::vector<std::string> labels;
    for (const auto& l : outcomes) labels.push_back(string_of(l, "outcome label"));
    return OutcomeSpace(std::move(labels));
  }();
  Scenario s{std::move(space), std::nullopt, std::nullopt, std::nullopt, std::nullopt,
             std::nullopt,     std::nullopt, std::nullopt, {}};
  const std::size_t size = s.outcomes.size();
  const auto lottery = [&](const Json& x) { return make_lottery(rationals_from_json(x), s.outcomes); };
  const auto lotteries = [&](const Json& x) {
    if (!x.is_array()) malformed("expected an array of lotteries");
    std::vector<Lottery> out;
    for (const auto& p : x) out.push_back(lottery(p));
    return out;
  };

  if (const Json* u = optional_field(j, "utility")) {
    s.utility = utility_from_json(*u);
    if (s.utility->values.size() != size) throw Error(ErrorCode::LengthMismatch, "utility length differs from outcomes");
  }
  if (const Json* o = optional_field(j, "oracle")) s.oracle = oracle_from_json(*o, s.n(), s.utility);
  if (const Json* e = optional_field(j, "elicitation")) {
    ElicitationInput input{lotteries(array_field(*e, "indifferent")), std::nullopt};
    if (const Json* strict = optional_field(*e, "strict")) {
      input.strict = StrictPair{lottery(field(*strict, "better")), lottery(field(*strict, "worse"))};
    }
    s.elicitation = std::move(input);
  }
  if (const Json* r = optional_field(j, "representation")) {
    s.representation = representation_from_json(*r);
    if (s.representation->utility.values.size() != size) {
      throw Error(ErrorCode::LengthMismatch, "representation size differs from outcomes");
    }
  }
  if (const Json* q = optional_field(j, "queries")) {
    QueryBlock block{std::nullopt, {}};
    if (const Json* ref = optional_field(*q, "reference")) {
      if (ref->is_string()) {
        if (ref->get<std::string>() != "uniform") malformed("reference must be \"uniform\" or a lottery");
        block.reference = Lottery::uniform(s.n());
      } else {
        block.reference = lottery(*ref);
      }
    }
    if (const Json* ls = optional_field(*q, "lotteries")) block.lotteries = lotteries(*ls);
    s.queries = std::move(block);
  }
  if (const Json* c = optional_field(j, "certify")) {
    s.certify = CertifyBlock{lottery(field(*c, "target")), lotteries(array_field(*c, "points"))};
  }
  if (const Json* c = optional_field(j, "construct")) {
    s.construct = ConstructBlock{lottery(field(*c, "p")), lottery(field(*c, "q")), lottery(field(*c, "r"))};
  }
  if (const Json* checks = optional_field(j, "checks")) {
    if (!checks->is_array()) malformed("checks must be an array");
    for (const auto& c : *checks) {
      CheckRequest req{string_of(field(c, "axiom"), "axiom"), "", 6, kDefaultDepth};
      if (const Json* v = optional_field(c, "variant")) req.variant = string_of(*v, "variant");
      if (const Json* k = optional_field(c, "kind")) req.variant = string_of(*k, "kind");
      if (const Json* g = optional_field(c, "grid")) req.grid = count_of(*g, "grid");
      if (const Json* d = optional_field(c, "depth")) req.depth = count_of(*d, "depth");
      s.checks.push_back(std::move(req));
    }
  }
  return s;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidScenario, "cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, path + ": " + e.what());
  }
}

}  // namespace eurep
