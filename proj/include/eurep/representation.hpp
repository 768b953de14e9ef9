#pragma once

/**
 * Constructive expected-utility machinery.
 *
 *  - elicit: n mutually indifferent lotteries spanning a hyperplane, plus an
 *    optional strict pair, determine a utility up to positive affine
 *    transformation.
 *  - generate_indifferent_points: the converse; from a utility, n indifferent
 *    lotteries spanning a hyperplane, built from the kernel of
 *    [u(x0) .. u(xn); 1 .. 1] around the uniform lottery.
 *  - construct_ip_via_solvability: a spanning indifferent set obtained only
 *    through compare/solve calls on a solvable oracle.
 *  - indifference_certificate: a replayable record showing a lottery in the
 *    affine hull of indifferent points is itself indifferent to them.
 */

#include "eurep/geometry.hpp"
#include "eurep/lottery.hpp"
#include "eurep/preferences.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eurep {

struct StrictPair {
  Lottery better;
  Lottery worse;
};

struct ElicitationInput {
  std::vector<Lottery> indifferent;
  std::optional<StrictPair> strict;
};

/// Gauge: u(x0) = 0 and (u(x1), .., u(xn)) = orientation * hyperplane.normal.
/// An unoriented representation leaves the direction of preference open.
struct Representation {
  UtilityFunction utility;
  Hyperplane hyperplane;
  int orientation = 1;
  bool oriented = false;

  PreferenceOracle oracle() const;
};

Representation elicit(const ElicitationInput& input);

/// Half-space of `query` relative to the level set through `reference`.
Comparison classify(const Representation& rep, const Lottery& reference, const Lottery& query);

struct KernelConstruction {
  RationalMatrix matrix;      // row 0: u(x0..xn), row 1: all ones
  Rational mean_utility;      // sum u / (n+1)
  Lottery base;               // uniform lottery, a particular solution
  std::vector<EmbeddedPoint> basis;  // n-1 kernel vectors of length n+1
  Rational step;              // half the largest step keeping all points in the simplex
};

struct IndifferentPoints {
  std::vector<Lottery> points;
  KernelConstruction construction;
};

IndifferentPoints generate_indifferent_points(const UtilityFunction& u);

std::vector<Lottery> construct_ip_via_solvability(const PreferenceOracle& oracle, const Lottery& p, const Lottery& q,
                                                  const Lottery& r);

/// result = mix(left, right, alpha).
struct MixtureStep {
  Lottery left;
  Lottery right;
  Rational alpha;
  Lottery result;
};

enum class CertificateBranch { convex, reduction };

struct ReductionRecord {
  std::size_t k_star = 0;  // zero-based index of the first most negative coefficient
  Rational lambda_star;
  Lottery mean;
  std::vector<MixtureStep> mean_chain;
  Rational alpha_star;
  Lottery reduced;
  std::vector<Rational> reduced_coefficients;
  std::vector<MixtureStep> reduced_chain;
  // mix(mean, target, alpha_star) == reduced must compare indifferent to
  // mix(reduced, target, alpha_star).
  Lottery independence_left;
  Lottery independence_right;
};

struct IndifferenceCertificate {
  Lottery target;
  std::vector<Lottery> points;
  std::vector<Rational> coefficients;
  CertificateBranch branch = CertificateBranch::convex;
  std::vector<MixtureStep> convex_chain;  // builds target; convex branch only
  std::optional<ReductionRecord> reduction;
};

IndifferenceCertificate indifference_certificate(const Lottery& target, const std::vector<Lottery>& points);

struct ReplayResult {
  bool verified = true;
  std::vector<std::string> failures;
};

/// Re-checks every arithmetic identity exactly and every claimed
/// indifference against the oracle.
ReplayResult replay(const IndifferenceCertificate& cert, const PreferenceOracle& oracle);

std::string_view to_string(CertificateBranch b);

}  // namespace eurep
