#pragma once

// Grid falsifiers for the preference axioms.
//
// Every check is a semi-decision: Violated carries a witness that replays
// exactly against the oracle; NoViolationFound only records the budget that
// was exhausted. Witnesses are the first found in the grid's enumeration
// order, so serial and parallel scans agree.
//
// check_ip inverts the polarity: finding a spanning indifferent set is
// NoViolationFound (with the set as evidence), failing to find one within
// budget is Violated.

#include "eurep/grid.hpp"
#include "eurep/lottery.hpp"
#include "eurep/preferences.hpp"
#include "eurep/scan.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace eurep {

inline constexpr std::size_t kDefaultDepth = 40;

namespace witness {

/// p >= q and q >= r but r > p.
struct Transitivity {
  Lottery p, q, r;
  Comparison pq, qr, pr;
};

/// compare(p, q) != compare(mix(p, r, a), mix(q, r, a)).
struct Independence {
  Lottery p, q, r;
  Rational alpha;
  Lottery mixed_p, mixed_q;
  Comparison before, after;
};

/// p >= q but the mixture does not sit between them.
struct Betweenness {
  Lottery p, q;
  Rational alpha;
  Lottery mixture;
  Comparison p_vs_q, p_vs_mixture, mixture_vs_q;
};

/// n mutually indifferent lotteries with affine rank n-1.
struct SpanningSet {
  std::vector<Lottery> points;
  std::size_t rank = 0;
};

/// No spanning indifferent set on the grid.
struct NoSpanningSet {
  std::size_t denominator_bound = 0;
  std::size_t classes = 0;
  std::size_t best_rank = 0;
};

/// p > q, point = q + t (p - q), and the observed ranks disagree with the
/// line-order table.
struct LineOrder {
  Lottery p, q;
  Rational t;
  Lottery point;
  Comparison vs_p, vs_q;
};

/// q1 ~ p, q2 ~ p but mix(q1, q2, alpha) is not indifferent to p.
struct Convexity {
  Lottery p, q1, q2;
  Rational alpha;
  Lottery mixture;
  Comparison observed;
};

/// r ~ p but r + (q - p) is not indifferent to q.
struct Translation {
  Lottery p, q, r, translated;
  Comparison observed;
};

/// p >= q >= r and the budgeted search found no alpha with mix(p, r, alpha) ~ q.
/// [lower, upper] is the final bisection bracket.
struct Solvability {
  Lottery p, q, r;
  std::size_t denominator_bound = 0;
  std::size_t depth = 0;
  Rational lower, upper;
};

/// The set {a : mix(p, r, a) >= q} (at_least) or {a : mix(p, r, a) <= q}
/// excludes `boundary` yet contains boundary + direction * 2^-k for every
/// listed k.
struct MixtureClosedness {
  Lottery p, q, r;
  bool at_least = true;
  Rational boundary;
  Comparison at_boundary;
  int direction = 1;
  std::vector<Rational> approach;
  std::vector<Comparison> approach_observed;
};

/// p > q > r but no interior weight puts the mixture strictly above q
/// (upper) or strictly below q (lower).
struct Archimedean {
  Lottery p, q, r;
  bool upper = false;
  std::size_t denominator_bound = 0;
  std::size_t depth = 0;
};

/// `point` is strictly on `side` of `reference`, yet at every listed radius
/// a neighbour lies strictly on the opposite side.
struct Openness {
  Lottery reference, point;
  Comparison side;
  std::vector<Rational> radii;
  std::vector<Lottery> neighbors;
};

}  // namespace witness

using Witness = std::variant<witness::Transitivity, witness::Independence, witness::Betweenness, witness::SpanningSet,
                             witness::NoSpanningSet, witness::LineOrder, witness::Convexity, witness::Translation,
                             witness::Solvability, witness::MixtureClosedness, witness::Archimedean,
                             witness::Openness>;

std::string_view witness_type(const Witness& w);

struct Budget {
  std::size_t denominator_bound = 0;
  std::size_t depth = 0;
  std::size_t grid_size = 0;
};

enum class Outcome { violated, no_violation_found };

struct AxiomVerdict {
  std::string axiom;
  Outcome outcome = Outcome::no_violation_found;
  Budget budget;
  std::optional<Witness> witness;

  bool violated() const { return outcome == Outcome::violated; }
};

enum class IndependenceVariant { independence, betweenness };
enum class ContinuityKind { grid_openness, mixture, archimedean, solvability };

std::string_view to_string(ContinuityKind k);
std::string_view to_string(IndependenceVariant v);

AxiomVerdict check_weak_order(const PreferenceOracle& oracle, const GridSpec& grid,
                              Execution exec = Execution::parallel);

AxiomVerdict check_independence(const PreferenceOracle& oracle, const GridSpec& grid, IndependenceVariant variant,
                                Execution exec = Execution::parallel);

AxiomVerdict check_ip(const PreferenceOracle& oracle, const GridSpec& grid);

AxiomVerdict check_continuity(const PreferenceOracle& oracle, ContinuityKind kind, const GridSpec& grid,
                              std::size_t depth = kDefaultDepth, Execution exec = Execution::parallel);

/// Geometric falsifiers: strict preference orders whole lines, indifference
/// classes are convex, and translates of indifference classes stay
/// indifference classes.
AxiomVerdict check_line_order(const PreferenceOracle& oracle, const GridSpec& grid,
                              Execution exec = Execution::parallel);
AxiomVerdict check_convexity(const PreferenceOracle& oracle, const GridSpec& grid,
                             Execution exec = Execution::parallel);
AxiomVerdict check_translation(const PreferenceOracle& oracle, const GridSpec& grid,
                               Execution exec = Execution::parallel);

// Single-instance probes used by the scans; exposed so specific candidates
// can be examined directly.

/// Budgeted search for alpha with mix(p, r, alpha) ~ q, given p >= q >= r.
std::optional<witness::Solvability> probe_solvability(const PreferenceOracle& oracle, const Lottery& p, const Lottery& q,
                                                     const Lottery& r, std::size_t denominator_bound,
                                                     std::size_t depth);
std::optional<witness::Archimedean> probe_archimedean(const PreferenceOracle& oracle, const Lottery& p, const Lottery& q,
                                                     const Lottery& r, std::size_t denominator_bound,
                                                     std::size_t depth);
std::optional<witness::MixtureClosedness> probe_mixture(const PreferenceOracle& oracle, const Lottery& p,
                                                       const Lottery& q, const Lottery& r, bool at_least,
                                                       const Rational& boundary, std::size_t denominator_bound,
                                                       std::size_t depth);
std::optional<witness::Openness> probe_openness(const PreferenceOracle& oracle, const Lottery& reference,
                                               const Lottery& point, std::size_t denominator_bound,
                                               std::size_t depth);

/// True when the witness still demonstrates what it claims against `oracle`:
/// every recorded lottery is recomputed exactly and every recorded
/// comparison re-queried.
bool replay_witness(const Witness& w, const PreferenceOracle& oracle);

}  // namespace eurep
