#include "eurep/preferences.hpp"

#include "eurep/error.hpp"

#include <algorithm>
#include <numeric>

namespace eurep {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

Comparison from_sign(int s) {
  return s > 0 ? Comparison::better : (s < 0 ? Comparison::worse : Comparison::indifferent);
}

Comparison lexicographic_compare(const Lottery& p, const Lottery& q, const std::vector<std::size_t>& order) {
  for (auto i : order) {
    if (p[i] != q[i]) return p[i] > q[i] ? Comparison::better : Comparison::worse;
  }
  return Comparison::indifferent;
}

Comparison lexicographic_compare(const Lottery& p, const Lottery& q) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] != q[i]) return p[i] > q[i] ? Comparison::better : Comparison::worse;
  }
  return Comparison::indifferent;
}

std::vector<std::size_t> ascending(std::size_t n) {
  std::vector<std::size_t> order(n + 1);
  std::iota(order.begin(), order.end(), std::size_t{0});
  return order;
}

// sign(sum_k (p[k + offset] - q[k + offset]) * w[k]) without Rational temporaries.
int weighted_difference_sign(const std::vector<Rational>& w, const Lottery& p, const Lottery& q, std::size_t offset) {
  thread_local mpq_class acc, diff, term;
  acc = 0;
  for (std::size_t k = 0; k < w.size(); ++k) {
    mpq_sub(diff.get_mpq_t(), p[k + offset].raw().get_mpq_t(), q[k + offset].raw().get_mpq_t());
    mpq_mul(term.get_mpq_t(), diff.get_mpq_t(), w[k].raw().get_mpq_t());
    mpq_add(acc.get_mpq_t(), acc.get_mpq_t(), term.get_mpq_t());
  }
  return sgn(acc);
}

// Oracles whose ranking is a linear value function admit closed-form solve.
Rational linear_value(const PreferenceOracle::Kind& kind, const Lottery& p) {
  if (const auto* eu = std::get_if<oracle_kind::ExpectedUtility>(&kind)) return expected_utility(eu->utility, p);
  const auto& rep = std::get<oracle_kind::Represented>(kind);
  return Rational(rep.orientation) * dot(embed(p), rep.hyperplane.normal);
}

}  // namespace

std::string_view to_string(Comparison c) {
  switch (c) {
    case Comparison::better: return "strictly-better";
    case Comparison::indifferent: return "indifferent";
    case Comparison::worse: return "strictly-worse";
  }
  return "?";
}

Comparison comparison_from_string(std::string_view s) {
  if (s == "strictly-better") return Comparison::better;
  if (s == "indifferent") return Comparison::indifferent;
  if (s == "strictly-worse") return Comparison::worse;
  throw Error(ErrorCode::ParseError, "unknown comparison \"" + std::string(s) + "\"");
}

Comparison reversed(Comparison c) { return static_cast<Comparison>(-static_cast<int>(c)); }

Rational expected_utility(const UtilityFunction& u, const Lottery& p) {
  if (u.values.size() != p.size()) throw Error(ErrorCode::DimensionMismatch, "utility and lottery sizes differ");
  Rational total;
  for (std::size_t i = 0; i < p.size(); ++i) total += p[i] * u.values[i];
  return total;
}

PreferenceOracle PreferenceOracle::expected_utility(UtilityFunction u) {
  if (u.values.size() < 2) throw Error(ErrorCode::LengthMismatch, "utility needs at least two values");
  const std::size_t n = u.n();
  return PreferenceOracle(oracle_kind::ExpectedUtility{std::move(u)}, n);
}

PreferenceOracle PreferenceOracle::lexicographic(std::size_t n, std::vector<std::size_t> priority) {
  auto sorted = priority;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != ascending(n)) {
    throw Error(ErrorCode::InvalidScenario, "lexicographic priority must be a permutation of 0.." + std::to_string(n));
  }
  return PreferenceOracle(oracle_kind::Lexicographic{std::move(priority)}, n);
}

PreferenceOracle PreferenceOracle::lexicographic(std::size_t n) { return lexicographic(n, ascending(n)); }

PreferenceOracle PreferenceOracle::hybrid_example(std::size_t n) {
  if (n < 1) throw Error(ErrorCode::LengthMismatch, "n must be at least 1");
  return PreferenceOracle(oracle_kind::HybridExample{}, n);
}

PreferenceOracle PreferenceOracle::represented(Hyperplane h, int orientation) {
  if (orientation != 1 && orientation != -1) throw Error(ErrorCode::InvalidScenario, "orientation must be +1 or -1");
  const std::size_t n = h.dimension();
  return PreferenceOracle(oracle_kind::Represented{std::move(h), orientation}, n);
}

PreferenceOracle PreferenceOracle::majority(std::size_t n) { return PreferenceOracle(oracle_kind::Majority{}, n); }

std::string_view PreferenceOracle::kind_name() const {
  return std::visit(overloaded{
                        [](const oracle_kind::ExpectedUtility&) { return std::string_view("eu"); },
                        [](const oracle_kind::Lexicographic&) { return std::string_view("lexicographic"); },
                        [](const oracle_kind::HybridExample&) { return std::string_view("hybrid"); },
                        [](const oracle_kind::Represented&) { return std::string_view("represented"); },
                        [](const oracle_kind::Majority&) { return std::string_view("majority"); },
                    },
                    kind_);
}

bool PreferenceOracle::has_solve() const {
  return std::holds_alternative<oracle_kind::ExpectedUtility>(kind_) ||
         std::holds_alternative<oracle_kind::Represented>(kind_);
}

void PreferenceOracle::require_space(const Lottery& p) const {
  if (p.n() != n_) {
    throw Error(ErrorCode::SpaceMismatch, "lottery has " + std::to_string(p.size()) + " outcomes, oracle expects " +
                                              std::to_string(n_ + 1));
  }
}

Comparison PreferenceOracle::compare(const Lottery& p, const Lottery& q) const {
  require_space(p);
  require_space(q);
  return std::visit(
      overloaded{
          [&](const oracle_kind::ExpectedUtility& eu) {
            return from_sign(weighted_difference_sign(eu.utility.values, p, q, 0));
          },
          [&](const oracle_kind::Lexicographic& lex) { return lexicographic_compare(p, q, lex.priority); },
          [&](const oracle_kind::HybridExample&) {
            const Rational half(1, 2);
            if (p[0] == half && q[0] == half) return Comparison::indifferent;
            return lexicographic_compare(p, q);
          },
          [&](const oracle_kind::Represented& rep) {
            return from_sign(rep.orientation * weighted_difference_sign(rep.hyperplane.normal.coords, p, q, 1));
          },
          [&](const oracle_kind::Majority&) {
            int balance = 0;
            for (std::size_t i = 0; i < p.size(); ++i) {
              if (p[i] > q[i]) ++balance;
              if (p[i] < q[i]) --balance;
            }
            return from_sign(balance);
          },
      },
      kind_);
}

Rational PreferenceOracle::solve(const Lottery& p, const Lottery& q, const Lottery& r) const {
  if (!has_solve()) {
    throw Error(ErrorCode::NoSolveCapability, "oracle kind " + std::string(kind_name()) + " exposes no solve");
  }
  if (!weakly_better(compare(p, q)) || !weakly_better(compare(q, r))) {
    throw Error(ErrorCode::PreconditionViolated, "solve needs p >= q >= r");
  }
  const Rational vp = linear_value(kind_, p);
  const Rational vq = linear_value(kind_, q);
  const Rational vr = linear_value(kind_, r);
  if (vp == vr) return Rational(1);
  return (vq - vr) / (vp - vr);
}

}  // namespace eurep
