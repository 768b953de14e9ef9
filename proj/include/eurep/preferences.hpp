#pragma once

// Preference oracles: total comparison functions over lotteries.
//
// compare(p, q) answers "how does p rank against q". The strictly-better,
// indifferent and strictly-worse sets of a reference lottery r are the
// predicates compare(., r) == better / indifferent / worse.

#include "eurep/geometry.hpp"
#include "eurep/lottery.hpp"
#include "eurep/rational.hpp"

#include <cstddef>
#include <string_view>
#include <variant>
#include <vector>

namespace eurep {

enum class Comparison { worse = -1, indifferent = 0, better = 1 };

std::string_view to_string(Comparison c);
Comparison comparison_from_string(std::string_view s);
Comparison reversed(Comparison c);
inline bool weakly_better(Comparison c) { return c != Comparison::worse; }

/// u(x0), ..., u(xn). Any values are allowed, constant included.
struct UtilityFunction {
  std::vector<Rational> values;

  std::size_t n() const { return values.size() - 1; }
  friend bool operator==(const UtilityFunction&, const UtilityFunction&) = default;
};

/// U(p) = sum_x p(x) u(x).
Rational expected_utility(const UtilityFunction& u, const Lottery& p);

namespace oracle_kind {

struct ExpectedUtility {
  UtilityFunction utility;
};

/// The first differing coordinate in priority order decides; more weight wins.
struct Lexicographic {
  std::vector<std::size_t> priority;
};

/// Indifferent when both lotteries put exactly 1/2 on outcome 0, otherwise
/// lexicographic in ascending index order.
struct HybridExample {};

/// Ranks by the signed distance to a hyperplane: p beats q when
/// orientation * <embed(p) - embed(q), normal> > 0.
struct Represented {
  Hyperplane hyperplane;
  int orientation = 1;
};

/// Test fixture: p beats q when it is larger on more coordinates than it is
/// smaller on. Complete but not transitive.
struct Majority {};

}  // namespace oracle_kind

class PreferenceOracle {
 public:
  using Kind = std::variant<oracle_kind::ExpectedUtility, oracle_kind::Lexicographic, oracle_kind::HybridExample,
                            oracle_kind::Represented, oracle_kind::Majority>;

  static PreferenceOracle expected_utility(UtilityFunction u);
  static PreferenceOracle lexicographic(std::size_t n, std::vector<std::size_t> priority);
  static PreferenceOracle lexicographic(std::size_t n);
  static PreferenceOracle hybrid_example(std::size_t n);
  static PreferenceOracle represented(Hyperplane h, int orientation);
  static PreferenceOracle majority(std::size_t n);

  std::size_t n() const { return n_; }
  const Kind& kind() const { return kind_; }
  std::string_view kind_name() const;
  bool has_solve() const;

  Comparison compare(const Lottery& p, const Lottery& q) const;

  /// For p >= q >= r, a weight alpha in [0, 1] with mix(p, r, alpha) ~ q.
  /// Returns 1 when all three are indifferent.
  Rational solve(const Lottery& p, const Lottery& q, const Lottery& r) const;

 private:
  PreferenceOracle(Kind kind, std::size_t n) : kind_(std::move(kind)), n_(n) {}

  void require_space(const Lottery& p) const;

  Kind kind_;
  std::size_t n_;
};

}  // namespace eurep
