// Command-line front end over the eurep library.
//
// Exit codes: 0 success or no violation found, 1 violation found or replay
// failed, 2 invalid input.

#include "eurep/axiom_checks.hpp"
#include "eurep/error.hpp"
#include "eurep/representation.hpp"
#include "eurep/serialize.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace eurep;

constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

struct Options {
  std::string scenario;
  std::string out;
  bool json = false;

  // oracle selection
  std::string oracle;
  std::string utility;
  std::size_t n = 0;

  std::string reference = "uniform";
  std::vector<std::string> queries;
  std::string certificate;

  std::string p, q, r;

  std::string axiom;
  std::string variant;
  std::size_t grid = 6;
  std::size_t depth = kDefaultDepth;
  bool serial = false;
  std::string replay;
};

bool is_flat(const Json& j) {
  if (!j.is_array()) return !j.is_object();
  for (const auto& x : j) {
    if (x.is_array() || x.is_object()) return false;
  }
  return true;
}

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s = "(";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar_text(j[i]);
    return s + ")";
  }
  return j.dump();
}

// Plain-text rendering of a JSON result: "key = value" lines, nesting by indent.
void render(const Json& j, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (is_flat(value)) {
        os << pad << key << " = " << scalar_text(value) << '\n';
      } else {
        os << pad << key << ":\n";
        render(value, os, indent + 2);
      }
    }
  } else if (j.is_array()) {
    for (const auto& x : j) {
      if (is_flat(x)) {
        os << pad << "- " << scalar_text(x) << '\n';
      } else {
        os << pad << "-\n";
        render(x, os, indent + 2);
      }
    }
  } else {
    os << pad << scalar_text(j) << '\n';
  }
}

void emit(const Options& opt, const Json& result, const std::string& text) {
  const std::string body = opt.json ? result.dump(2) + "\n" : text;
  std::cout << body;
  if (!opt.out.empty()) {
    std::ofstream file(opt.out);
    if (!file) throw Error(ErrorCode::InvalidScenario, "cannot write " + opt.out);
    file << body;
  }
}

void emit(const Options& opt, const Json& result) {
  std::ostringstream text;
  render(result, text, 0);
  emit(opt, result, text.str());
}

std::optional<Scenario> load_scenario(const Options& opt) {
  if (opt.scenario.empty()) return std::nullopt;
  return scenario_from_json(read_json_file(opt.scenario));
}

std::vector<Rational> rationals_from_text(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(Rational::parse(item));
  return out;
}

Representation scenario_representation(const Scenario& s) {
  if (s.representation) return *s.representation;
  if (s.elicitation) return elicit(*s.elicitation);
  throw Error(ErrorCode::InvalidScenario, "scenario has neither a representation nor elicitation data");
}

// Flags win over the scenario; within the scenario an explicit oracle wins
// over a utility, which wins over a representation.
std::optional<PreferenceOracle> resolve_oracle(const Options& opt, const std::optional<Scenario>& s) {
  std::optional<UtilityFunction> utility;
  if (!opt.utility.empty()) utility = UtilityFunction{rationals_from_text(opt.utility)};
  if (!opt.oracle.empty() || utility) {
    Json spec{{"kind", opt.oracle.empty() ? "eu" : opt.oracle}};
    std::optional<std::size_t> n;
    if (opt.n != 0) n = opt.n;
    if (utility) n = utility->n();
    if (!n) n = s ? s->n() : 2;
    return oracle_from_json(spec, n, utility);
  }
  if (!s) return std::nullopt;
  if (s->oracle) return s->oracle;
  if (s->utility) return PreferenceOracle::expected_utility(*s->utility);
  if (s->representation || s->elicitation) return scenario_representation(*s).oracle();
  return std::nullopt;
}

PreferenceOracle require_oracle(const Options& opt, const std::optional<Scenario>& s) {
  auto oracle = resolve_oracle(opt, s);
  if (!oracle) throw Error(ErrorCode::InvalidScenario, "no oracle given (use --oracle/--utility or a scenario)");
  return *oracle;
}

const Scenario& require_scenario(const std::optional<Scenario>& s) {
  if (!s) throw Error(ErrorCode::InvalidScenario, "this subcommand needs --scenario");
  return *s;
}

int run_elicit(const Options& opt) {
  const Scenario s = require_scenario(load_scenario(opt));
  if (!s.elicitation) throw Error(ErrorCode::InvalidScenario, "scenario has no elicitation block");
  const Representation rep = elicit(*s.elicitation);
  Json text{{"u", to_json(rep.utility)},
            {"normal", to_json(rep.hyperplane.normal)},
            {"base", to_json(rep.hyperplane.base)},
            {"orientation", rep.orientation},
            {"oriented", rep.oriented}};
  std::ostringstream out;
  render(text, out, 0);
  emit(opt, Json{{"representation", to_json(rep)}}, out.str());
  return 0;
}

int run_generate(const Options& opt) {
  const auto s = load_scenario(opt);
  std::optional<UtilityFunction> u;
  if (!opt.utility.empty()) {
    u = UtilityFunction{rationals_from_text(opt.utility)};
  } else if (s && s->utility) {
    u = s->utility;
  }
  if (!u) throw Error(ErrorCode::InvalidScenario, "generate needs --utility or a scenario utility");
  if (u->values.size() < 2) throw Error(ErrorCode::LengthMismatch, "utility needs at least two values");
  emit(opt, to_json(generate_indifferent_points(*u)));
  return 0;
}

int run_classify(const Options& opt) {
  const Scenario s = require_scenario(load_scenario(opt));
  const Representation rep = scenario_representation(s);
  const std::size_t size = s.outcomes.size();

  Lottery reference = Lottery::uniform(s.n());
  std::vector<Lottery> queries;
  if (s.queries) {
    if (s.queries->reference) reference = *s.queries->reference;
    queries = s.queries->lotteries;
  }
  if (opt.reference != "uniform") reference = lottery_from_text(opt.reference, size);
  if (!opt.queries.empty()) {
    queries.clear();
    for (const auto& q : opt.queries) queries.push_back(lottery_from_text(q, size));
  }
  if (queries.empty()) throw Error(ErrorCode::InvalidScenario, "no query lotteries given");

  Json results = Json::array();
  std::string text;
  for (const auto& q : queries) {
    const Comparison c = classify(rep, reference, q);
    results.push_back(Json{{"query", to_json(q)}, {"result", std::string(to_string(c))}});
    text += std::string(to_string(c)) + "\n";
  }
  emit(opt, Json{{"reference", to_json(reference)}, {"classifications", std::move(results)}}, text);
  return 0;
}

int run_certify(const Options& opt) {
  const auto s = load_scenario(opt);
  IndifferenceCertificate cert = [&] {
    if (!opt.certificate.empty()) {
      const Json file = read_json_file(opt.certificate);
      return certificate_from_json(file.contains("certificate") ? file["certificate"] : file);
    }
    const Scenario& sc = require_scenario(s);
    if (!sc.certify) throw Error(ErrorCode::InvalidScenario, "scenario has no certify block");
    return indifference_certificate(sc.certify->target, sc.certify->points);
  }();

  std::optional<PreferenceOracle> oracle = resolve_oracle(opt, s);
  if (!oracle && !opt.certificate.empty()) {
    const Json file = read_json_file(opt.certificate);
    if (file.contains("oracle")) oracle = oracle_from_json(file["oracle"]);
  }
  if (!oracle) throw Error(ErrorCode::InvalidScenario, "no oracle to replay the certificate against");

  const ReplayResult result = replay(cert, *oracle);
  emit(opt, Json{{"oracle", to_json(*oracle)}, {"certificate", to_json(cert)}, {"replay", to_json(result)}});
  return result.verified ? 0 : kExitViolation;
}

int run_construct(const Options& opt) {
  const auto s = load_scenario(opt);
  const PreferenceOracle oracle = require_oracle(opt, s);
  const std::size_t size = oracle.n() + 1;
  std::optional<ConstructBlock> block;
  if (s && s->construct) block = s->construct;
  if (!opt.p.empty() || !opt.q.empty() || !opt.r.empty()) {
    if (opt.p.empty() || opt.q.empty() || opt.r.empty()) {
      throw Error(ErrorCode::InvalidScenario, "--p, --q and --r must be given together");
    }
    block = ConstructBlock{lottery_from_text(opt.p, size), lottery_from_text(opt.q, size),
                           lottery_from_text(opt.r, size)};
  }
  if (!block) throw Error(ErrorCode::InvalidScenario, "construct-ip needs p, q, r");
  Json points = Json::array();
  for (const auto& x : construct_ip_via_solvability(oracle, block->p, block->q, block->r)) points.push_back(to_json(x));
  emit(opt, Json{{"points", std::move(points)}});
  return 0;
}

AxiomVerdict run_one_check(const PreferenceOracle& oracle, const CheckRequest& req, Execution exec) {
  const GridSpec grid{req.grid, oracle.n()};
  const std::string& a = req.axiom;
  if (a == "weak-order") return check_weak_order(oracle, grid, exec);
  if (a == "independence" || a == "betweenness") {
    const std::string variant = req.variant.empty() ? a : req.variant;
    if (variant != "independence" && variant != "betweenness") {
      throw Error(ErrorCode::InvalidScenario, "unknown independence variant \"" + variant + "\"");
    }
    return check_independence(
        oracle, grid, variant == "betweenness" ? IndependenceVariant::betweenness : IndependenceVariant::independence,
        exec);
  }
  if (a == "ip") return check_ip(oracle, grid);
  if (a == "line-order") return check_line_order(oracle, grid, exec);
  if (a == "convexity") return check_convexity(oracle, grid, exec);
  if (a == "translation") return check_translation(oracle, grid, exec);

  const std::string kind = a == "continuity" ? req.variant : a;
  for (auto k : {ContinuityKind::grid_openness, ContinuityKind::mixture, ContinuityKind::archimedean,
                 ContinuityKind::solvability}) {
    if (kind == to_string(k)) return check_continuity(oracle, k, grid, req.depth, exec);
  }
  if (a == "continuity") throw Error(ErrorCode::InvalidScenario, "continuity needs --kind");
  throw Error(ErrorCode::InvalidScenario, "unknown axiom \"" + a + "\"");
}

int run_replay(const Options& opt, const std::optional<Scenario>& s) {
  const Json file = read_json_file(opt.replay);
  std::optional<PreferenceOracle> oracle = resolve_oracle(opt, s);
  if (!oracle && file.contains("oracle")) oracle = oracle_from_json(file["oracle"]);
  if (!oracle) throw Error(ErrorCode::InvalidScenario, "no oracle to replay against");

  std::vector<AxiomVerdict> verdicts;
  if (file.contains("verdicts")) {
    for (const auto& v : file["verdicts"]) verdicts.push_back(verdict_from_json(v));
  } else {
    verdicts.push_back(verdict_from_json(file.contains("verdict") ? file["verdict"] : file));
  }

  bool all = true;
  Json results = Json::array();
  for (const auto& v : verdicts) {
    const bool ok = !v.witness || replay_witness(*v.witness, *oracle);
    all = all && ok;
    Json entry{{"axiom", v.axiom}, {"witness", v.witness ? std::string(witness_type(*v.witness)) : "none"},
               {"replayed", ok}};
    results.push_back(std::move(entry));
  }
  emit(opt, Json{{"oracle", to_json(*oracle)}, {"replay", std::move(results)}, {"verified", all}});
  return all ? 0 : kExitViolation;
}

int run_check(const Options& opt) {
  const auto s = load_scenario(opt);
  if (!opt.replay.empty()) return run_replay(opt, s);

  const PreferenceOracle oracle = require_oracle(opt, s);
  std::vector<CheckRequest> requests;
  if (!opt.axiom.empty()) {
    requests.push_back(CheckRequest{opt.axiom, opt.variant, opt.grid, opt.depth});
  } else if (s) {
    requests = s->checks;
  }
  if (requests.empty()) throw Error(ErrorCode::InvalidScenario, "no check requested (use --axiom)");

  const Execution exec = opt.serial ? Execution::serial : Execution::parallel;
  bool violated = false;
  Json verdicts = Json::array();
  for (const auto& req : requests) {
    const AxiomVerdict v = run_one_check(oracle, req, exec);
    violated = violated || v.violated();
    verdicts.push_back(to_json(v));
  }
  emit(opt, Json{{"oracle", to_json(oracle)}, {"verdicts", std::move(verdicts)}});
  return violated ? kExitViolation : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact expected-utility toolkit: elicitation, indifference certificates and axiom falsifiers"};
  app.require_subcommand(1);
  Options opt;

  const auto common = [&](CLI::App* cmd) {
    cmd->add_option("--scenario", opt.scenario, "Scenario file (JSON)");
    cmd->add_flag("--json", opt.json, "Print machine-readable JSON");
    cmd->add_option("--out", opt.out, "Also write the result to this file");
  };
  const auto oracle_flags = [&](CLI::App* cmd) {
    cmd->add_option("--oracle", opt.oracle, "Oracle kind: eu, lexicographic, hybrid, majority");
    cmd->add_option("--utility", opt.utility, "Utility values, e.g. 0,1,2");
    cmd->add_option("--n", opt.n, "Number of outcomes minus one (default 2)");
  };

  auto* elicit_cmd = app.add_subcommand("elicit", "Elicit a utility from indifference data");
  common(elicit_cmd);

  auto* generate_cmd = app.add_subcommand("generate", "Generate indifferent points from a utility");
  common(generate_cmd);
  generate_cmd->add_option("--utility", opt.utility, "Utility values, e.g. 0,1,2");

  auto* classify_cmd = app.add_subcommand("classify", "Classify lotteries against a reference");
  common(classify_cmd);
  classify_cmd->add_option("--reference", opt.reference, "Reference lottery or \"uniform\"");
  classify_cmd->add_option("--query", opt.queries, "Query lottery, e.g. 0,0,1 (repeatable)");

  auto* certify_cmd = app.add_subcommand("certify", "Build and replay an indifference certificate");
  common(certify_cmd);
  oracle_flags(certify_cmd);
  certify_cmd->add_option("--certificate", opt.certificate, "Replay an existing certificate file");

  auto* construct_cmd = app.add_subcommand("construct-ip", "Construct indifferent points through solve calls");
  common(construct_cmd);
  oracle_flags(construct_cmd);
  construct_cmd->add_option("--p", opt.p, "Best lottery");
  construct_cmd->add_option("--q", opt.q, "Middle lottery");
  construct_cmd->add_option("--r", opt.r, "Worst lottery");

  auto* check_cmd = app.add_subcommand("check", "Search the grid for an axiom violation");
  common(check_cmd);
  oracle_flags(check_cmd);
  check_cmd->add_option("--axiom", opt.axiom,
                        "weak-order, independence, betweenness, ip, continuity, line-order, convexity, translation");
  check_cmd->add_option("--variant", opt.variant, "independence or betweenness");
  check_cmd->add_option("--kind", opt.variant, "Continuity kind: grid-openness, mixture, archimedean, solvability");
  check_cmd->add_option("--grid", opt.grid, "Denominator bound of the grid")->check(CLI::PositiveNumber);
  check_cmd->add_option("--depth", opt.depth, "Refinement depth for continuity checks");
  check_cmd->add_flag("--serial", opt.serial, "Run the serial reference scan");
  check_cmd->add_option("--replay", opt.replay, "Replay the witnesses in a verdict file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  try {
    if (elicit_cmd->parsed()) return run_elicit(opt);
    if (generate_cmd->parsed()) return run_generate(opt);
    if (classify_cmd->parsed()) return run_classify(opt);
    if (certify_cmd->parsed()) return run_certify(opt);
    if (construct_cmd->parsed()) return run_construct(opt);
    if (check_cmd->parsed()) return run_check(opt);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
