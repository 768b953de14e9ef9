#include "eurep/representation.hpp"

#include "eurep/error.hpp"
#include "eurep/grid.hpp"

#include <algorithm>
#include <stdexcept>

namespace eurep {

namespace {

constexpr std::size_t kCandidateDenominatorLimit = 64;

std::vector<EmbeddedPoint> embed_all(const std::vector<Lottery>& lotteries) {
  std::vector<EmbeddedPoint> out;
  out.reserve(lotteries.size());
  for (const auto& l : lotteries) out.push_back(embed(l));
  return out;
}

void require_common_space(const std::vector<Lottery>& lotteries, std::size_t n) {
  for (const auto& l : lotteries) {
    if (l.n() != n) throw Error(ErrorCode::SpaceMismatch, "lotteries over different outcome spaces");
  }
}

bool in_affine_hull(const Lottery& x, const std::vector<EmbeddedPoint>& anchors) {
  return affine_coefficients(embed(x), anchors).has_value();
}

// Sequential mixtures that build sum_k w_k points_k for nonnegative w summing
// to one; each step folds the next supported point into the running mixture.
std::vector<MixtureStep> convex_chain(const std::vector<Lottery>& points, const std::vector<Rational>& w) {
  std::vector<MixtureStep> chain;
  std::optional<Lottery> acc;
  Rational acc_weight;
  for (std::size_t k = 0; k < points.size(); ++k) {
    if (w[k].is_zero()) continue;
    if (!acc) {
      acc = points[k];
      acc_weight = w[k];
      continue;
    }
    acc_weight += w[k];
    const Rational alpha = w[k] / acc_weight;
    Lottery next = mix(points[k], *acc, alpha);
    chain.push_back(MixtureStep{points[k], *acc, alpha, next});
    acc = std::move(next);
  }
  return chain;
}

Lottery combine(const std::vector<Lottery>& points, const std::vector<Rational>& w) {
  const std::size_t size = points.front().size();
  EmbeddedPoint acc{std::vector<Rational>(size)};
  for (std::size_t k = 0; k < points.size(); ++k) {
    for (std::size_t i = 0; i < size; ++i) acc[i] += w[k] * points[k][i];
  }
  return make_lottery(std::move(acc.coords));
}

class Replayer {
 public:
  Replayer(const IndifferenceCertificate& cert, const PreferenceOracle& oracle) : cert_(cert), oracle_(oracle) {}

  ReplayResult run() {
    check_points_and_coefficients();
    if (!result_.verified) return result_;
    if (cert_.branch == CertificateBranch::convex) {
      check_convex();
    } else {
      check_reduction();
    }
    expect_indifferent(cert_.target, "target");
    return result_;
  }

 private:
  void fail(std::string why) {
    result_.verified = false;
    result_.failures.push_back(std::move(why));
  }

  void expect(bool ok, const std::string& what) {
    if (!ok) fail(what);
  }

  void expect_indifferent(const Lottery& x, const std::string& what) {
    const Comparison c = oracle_.compare(x, cert_.points.front());
    if (c != Comparison::indifferent) {
      fail(what + " " + to_string(x) + " compares " + std::string(to_string(c)) + " to the first point");
    }
  }

  bool is_listed(const Lottery& x) const {
    return std::find(cert_.points.begin(), cert_.points.end(), x) != cert_.points.end();
  }

  void check_points_and_coefficients() {
    const auto& pts = cert_.points;
    if (pts.empty() || cert_.coefficients.size() != pts.size()) {
      fail("coefficient count does not match point count");
      return;
    }
    for (const auto& p : pts) {
      if (p.size() != cert_.target.size()) {
        fail("points and target over different outcome spaces");
        return;
      }
    }
    Rational total;
    for (const auto& l : cert_.coefficients) total += l;
    expect(total == Rational(1), "coefficients sum to " + total.to_string());
    expect(combine_unchecked(pts, cert_.coefficients) == embed(cert_.target),
           "coefficients do not reproduce the target");
    for (std::size_t k = 0; k < pts.size(); ++k) expect_indifferent(pts[k], "point " + std::to_string(k));
  }

  static EmbeddedPoint combine_unchecked(const std::vector<Lottery>& pts, const std::vector<Rational>& w) {
    EmbeddedPoint acc{std::vector<Rational>(pts.front().n())};
    for (std::size_t k = 0; k < pts.size(); ++k) acc = acc + w[k] * embed(pts[k]);
    return acc;
  }

  void check_chain(const std::vector<MixtureStep>& chain, const Lottery& end, const std::string& what) {
    if (chain.empty()) {
      expect(is_listed(end), what + ": empty chain must end at a listed point");
      return;
    }
    for (std::size_t i = 0; i < chain.size(); ++i) {
      const auto& s = chain[i];
      const std::string tag = what + " step " + std::to_string(i);
      expect(is_listed(s.left), tag + ": left operand is not a listed point");
      if (i == 0) {
        expect(is_listed(s.right), tag + ": chain does not start at a listed point");
      } else {
        expect(s.right == chain[i - 1].result, tag + ": right operand is not the previous result");
      }
      const bool alpha_ok = s.alpha.sign() >= 0 && s.alpha <= Rational(1);
      expect(alpha_ok, tag + ": weight outside [0, 1]");
      if (alpha_ok && s.left.size() == s.right.size()) {
        expect(mix(s.left, s.right, s.alpha) == s.result, tag + ": mixture arithmetic mismatch");
      }
      expect_indifferent(s.result, tag + " result");
    }
    expect(chain.back().result == end, what + ": chain does not end where claimed");
  }

  void check_convex() {
    for (const auto& l : cert_.coefficients) expect(l.sign() >= 0, "convex branch with negative coefficient");
    expect(!cert_.reduction.has_value(), "convex branch carries a reduction record");
    check_chain(cert_.convex_chain, cert_.target, "convex chain");
  }

  void check_reduction() {
    if (!cert_.reduction) {
      fail("reduction branch without a reduction record");
      return;
    }
    const auto& red = *cert_.reduction;
    const auto& lam = cert_.coefficients;
    const std::size_t m = cert_.points.size();
    const auto min_it = std::min_element(lam.begin(), lam.end());
    expect(min_it->sign() < 0, "reduction branch but no negative coefficient");
    expect(red.k_star == static_cast<std::size_t>(min_it - lam.begin()), "k_star is not the first argmin");
    expect(red.lambda_star == -*min_it, "lambda_star mismatch");
    const Rational mm(static_cast<long>(m));
    const Rational alpha = mm * red.lambda_star / (Rational(1) + mm * red.lambda_star);
    expect(red.alpha_star == alpha, "alpha_star mismatch");
    expect(red.alpha_star.sign() > 0 && red.alpha_star < Rational(1), "alpha_star outside (0, 1)");

    const std::vector<Rational> equal(m, Rational(1) / mm);
    expect(embed(red.mean) == combine_unchecked(cert_.points, equal), "mean is not the equal-weight average");
    check_chain(red.mean_chain, red.mean, "mean chain");

    expect(mix(red.mean, cert_.target, red.alpha_star) == red.reduced, "reduced point mismatch");
    expect(red.reduced != red.mean, "reduced point coincides with the mean");
    if (red.reduced_coefficients.size() != m) {
      fail("reduced coefficient count mismatch");
      return;
    }
    for (std::size_t k = 0; k < m; ++k) {
      const Rational c = red.alpha_star / mm + (Rational(1) - red.alpha_star) * lam[k];
      expect(red.reduced_coefficients[k] == c, "reduced coefficient " + std::to_string(k) + " mismatch");
      expect(c.sign() >= 0, "reduced coefficient " + std::to_string(k) + " negative");
    }
    if (red.k_star < m) expect(red.reduced_coefficients[red.k_star].is_zero(), "reduced coefficient at k_star not zero");
    expect(combine_unchecked(cert_.points, red.reduced_coefficients) == embed(red.reduced),
           "reduced coefficients do not reproduce the reduced point");
    check_chain(red.reduced_chain, red.reduced, "reduced chain");

    expect(red.independence_left == mix(red.mean, cert_.target, red.alpha_star), "independence step left mismatch");
    expect(red.independence_right == mix(red.reduced, cert_.target, red.alpha_star),
           "independence step right mismatch");
    const Comparison c = oracle_.compare(red.independence_left, red.independence_right);
    expect(c == Comparison::indifferent, "independence step compares " + std::string(to_string(c)));
  }

  const IndifferenceCertificate& cert_;
  const PreferenceOracle& oracle_;
  ReplayResult result_;
};

}  // namespace

PreferenceOracle Representation::oracle() const {
  if (!oriented) throw Error(ErrorCode::UnorientedRepresentation, "representation has no preference direction");
  return PreferenceOracle::represented(hyperplane, orientation);
}

Representation elicit(const ElicitationInput& input) {
  if (input.indifferent.empty()) throw Error(ErrorCode::WrongCount, "no indifferent lotteries given");
  const std::size_t n = input.indifferent.front().n();
  require_common_space(input.indifferent, n);
  if (input.indifferent.size() != n) {
    throw Error(ErrorCode::WrongCount, "need " + std::to_string(n) + " indifferent lotteries, got " +
                                           std::to_string(input.indifferent.size()));
  }

  Representation rep{UtilityFunction{}, hyperplane_from_points(embed_all(input.indifferent)), 1, false};
  if (input.strict) {
    if (input.strict->better.n() != n || input.strict->worse.n() != n) {
      throw Error(ErrorCode::SpaceMismatch, "strict pair over a different outcome space");
    }
    const int s = dot(embed(input.strict->better) - embed(input.strict->worse), rep.hyperplane.normal).sign();
    if (s == 0) {
      throw Error(ErrorCode::InconsistentStrictPair,
                  "strict pair lies on one level set of the indifference hyperplane");
    }
    rep.orientation = s;
    rep.oriented = true;
  }
  rep.utility.values.reserve(n + 1);
  rep.utility.values.emplace_back(0);
  for (const auto& c : rep.hyperplane.normal.coords) rep.utility.values.push_back(Rational(rep.orientation) * c);
  return rep;
}

Comparison classify(const Representation& rep, const Lottery& reference, const Lottery& query) {
  if (!rep.oriented) throw Error(ErrorCode::UnorientedRepresentation, "classify needs an oriented representation");
  if (reference.n() != rep.hyperplane.dimension() || query.n() != rep.hyperplane.dimension()) {
    throw Error(ErrorCode::SpaceMismatch, "lottery does not match the representation's outcome space");
  }
  const Hyperplane through_reference{rep.hyperplane.normal, embed(reference)};
  const int s = rep.orientation * static_cast<int>(halfspace_classify(embed(query), through_reference));
  return s > 0 ? Comparison::better : (s < 0 ? Comparison::worse : Comparison::indifferent);
}

IndifferentPoints generate_indifferent_points(const UtilityFunction& u) {
  if (u.values.size() < 2) throw Error(ErrorCode::LengthMismatch, "utility needs at least two values");
  const std::size_t n = u.n();
  const std::size_t cols = n + 1;

  RationalMatrix m(2, cols);
  Rational total;
  for (std::size_t j = 0; j < cols; ++j) {
    m(0, j) = u.values[j];
    m(1, j) = 1;
    total += u.values[j];
  }
  const Rational share(1, static_cast<long>(cols));
  KernelConstruction kc{m, total * share, Lottery::uniform(n), {}, Rational(0)};

  auto kernel = kernel_basis(m);
  kernel.resize(n - 1, EmbeddedPoint{});
  kc.basis = std::move(kernel);

  // Largest step keeping share + step * b_j >= 0 for every entry of every b.
  std::optional<Rational> max_step;
  for (const auto& b : kc.basis) {
    for (const auto& entry : b.coords) {
      if (entry.sign() >= 0) continue;
      const Rational limit = share / -entry;
      if (!max_step || limit < *max_step) max_step = limit;
    }
  }
  if (max_step) kc.step = *max_step / Rational(2);

  std::vector<Lottery> points{kc.base};
  for (const auto& b : kc.basis) {
    std::vector<Rational> w(cols);
    for (std::size_t j = 0; j < cols; ++j) w[j] = share + kc.step * b[j];
    points.push_back(make_lottery(std::move(w)));
  }
  return IndifferentPoints{std::move(points), std::move(kc)};
}

std::vector<Lottery> construct_ip_via_solvability(const PreferenceOracle& oracle, const Lottery& p, const Lottery& q,
                                                  const Lottery& r) {
  if (!oracle.has_solve()) {
    throw Error(ErrorCode::NoSolveCapability, "oracle kind " + std::string(oracle.kind_name()) + " exposes no solve");
  }
  if (oracle.compare(p, q) != Comparison::better || oracle.compare(q, r) != Comparison::better) {
    throw Error(ErrorCode::PreconditionViolated, "construction needs p > q > r");
  }
  const std::size_t n = p.n();

  Lottery anchor = q;
  const auto on_line = affine_coefficients(embed(q), std::vector<EmbeddedPoint>{embed(p), embed(r)});
  if (!on_line || (*on_line)[0].sign() < 0 || (*on_line)[1].sign() < 0) anchor = mix(p, r, oracle.solve(p, q, r));

  std::vector<Lottery> points{anchor};
  std::vector<EmbeddedPoint> spanned{embed(anchor), embed(p), embed(r)};

  const auto extend = [&](const Lottery& s) {
    if (in_affine_hull(s, spanned)) return false;
    Lottery next = s;
    switch (oracle.compare(s, anchor)) {
      case Comparison::indifferent: break;
      case Comparison::better: next = mix(s, r, oracle.solve(s, anchor, r)); break;
      case Comparison::worse: next = mix(p, s, oracle.solve(p, anchor, s)); break;
    }
    spanned.push_back(embed(next));
    points.push_back(std::move(next));
    return true;
  };

  while (points.size() < n) {
    bool extended = false;
    for (std::size_t i = 0; i <= n && !extended; ++i) extended = extend(Lottery::vertex(n, i));
    for (std::size_t k = 2; k <= kCandidateDenominatorLimit && !extended; ++k) {
      for (const auto& s : lotteries_with_denominator(n, k)) {
        if ((extended = extend(s))) break;
      }
    }
    if (!extended) throw std::logic_error("candidate scan exhausted without leaving the spanned affine hull");
  }

  const auto embedded = embed_all(points);
  if (affine_rank(embedded) != n - 1 || affine_coefficients(embed(p), embedded) ||
      affine_coefficients(embed(r), embedded)) {
    throw std::logic_error("constructed indifferent set failed its postcondition");
  }
  return points;
}

IndifferenceCertificate indifference_certificate(const Lottery& target, const std::vector<Lottery>& points) {
  if (points.empty()) throw Error(ErrorCode::EmptyInput, "certificate needs at least one point");
  require_common_space(points, target.n());
  auto lambda = affine_coefficients(embed(target), embed_all(points));
  if (!lambda) throw Error(ErrorCode::NotInAffineHull, to_string(target) + " is not in the affine hull of the points");

  IndifferenceCertificate cert{target, points, *lambda, CertificateBranch::convex, {}, std::nullopt};
  const auto min_it = std::min_element(lambda->begin(), lambda->end());
  if (min_it->sign() >= 0) {
    cert.convex_chain = convex_chain(points, *lambda);
    return cert;
  }

  cert.branch = CertificateBranch::reduction;
  const std::size_t m = points.size();
  const Rational mm(static_cast<long>(m));
  const Rational lambda_star = -*min_it;
  const std::vector<Rational> equal(m, Rational(1) / mm);
  Lottery mean = combine(points, equal);
  const Rational alpha_star = mm * lambda_star / (Rational(1) + mm * lambda_star);
  Lottery reduced = mix(mean, target, alpha_star);
  std::vector<Rational> reduced_coefficients;
  reduced_coefficients.reserve(m);
  for (const auto& l : *lambda) reduced_coefficients.push_back(alpha_star / mm + (Rational(1) - alpha_star) * l);
  auto reduced_chain = convex_chain(points, reduced_coefficients);
  Lottery right = mix(reduced, target, alpha_star);
  cert.reduction = ReductionRecord{static_cast<std::size_t>(min_it - lambda->begin()),
                                   lambda_star,
                                   mean,
                                   convex_chain(points, equal),
                                   alpha_star,
                                   reduced,
                                   std::move(reduced_coefficients),
                                   std::move(reduced_chain),
                                   reduced,
                                   std::move(right)};
  return cert;
}

ReplayResult replay(const IndifferenceCertificate& cert, const PreferenceOracle& oracle) {
  return Replayer(cert, oracle).run();
}

std::string_view to_string(CertificateBranch b) { return b == CertificateBranch::convex ? "convex" : "reduction"; }

}  // namespace eurep
