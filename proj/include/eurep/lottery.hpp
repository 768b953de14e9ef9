#pragma once

// Outcomes, lotteries and the simplex embedding.
//
// A lottery over n+1 outcomes x0..xn is identified with the point
// (p(x1), ..., p(xn)) of Q^n; coordinate 0 is always the one dropped and is
// recovered as 1 - sum of the rest.

#include "eurep/rational.hpp"

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace eurep {

class OutcomeSpace {
 public:
  explicit OutcomeSpace(std::vector<std::string> labels);

  /// Outcomes labelled x0..xn.
  static OutcomeSpace indexed(std::size_t n);

  std::size_t n() const { return labels_.size() - 1; }
  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  friend bool operator==(const OutcomeSpace&, const OutcomeSpace&) = default;

 private:
  std::vector<std::string> labels_;
};

/// A point of Q^n. No simplex constraint; geometry works on general points.
struct EmbeddedPoint {
  std::vector<Rational> coords;

  std::size_t dimension() const { return coords.size(); }
  const Rational& operator[](std::size_t i) const { return coords[i]; }
  Rational& operator[](std::size_t i) { return coords[i]; }

  friend bool operator==(const EmbeddedPoint&, const EmbeddedPoint&) = default;
};

/// A probability vector over n+1 outcomes: weights >= 0 summing to exactly 1.
/// Only constructible through validating factories, so every instance holds
/// the invariant. Lotteries over spaces of equal size are interchangeable.
class Lottery {
 public:
  static Lottery vertex(std::size_t n, std::size_t index);
  static Lottery uniform(std::size_t n);

  std::size_t n() const { return weights_.size() - 1; }
  std::size_t size() const { return weights_.size(); }
  const Rational& operator[](std::size_t i) const { return weights_[i]; }
  std::span<const Rational> weights() const { return weights_; }

  friend bool operator==(const Lottery&, const Lottery&) = default;
  friend auto operator<=>(const Lottery& a, const Lottery& b) { return a.weights_ <=> b.weights_; }

 private:
  explicit Lottery(std::vector<Rational> weights) : weights_(std::move(weights)) {}

  friend Lottery make_lottery(std::vector<Rational> weights, const OutcomeSpace& space);
  friend Lottery mix(const Lottery& p, const Lottery& q, const Rational& alpha);
  friend Lottery unembed(const EmbeddedPoint& v);

  std::vector<Rational> weights_;
};

Lottery make_lottery(std::vector<Rational> weights, const OutcomeSpace& space);
/// Convenience: validates against the indexed space of matching size.
Lottery make_lottery(std::vector<Rational> weights);

/// alpha * p + (1 - alpha) * q.
Lottery mix(const Lottery& p, const Lottery& q, const Rational& alpha);

EmbeddedPoint embed(const Lottery& p);
Lottery unembed(const EmbeddedPoint& v);

std::string to_string(const Lottery& p);
std::string to_string(const EmbeddedPoint& v);
std::ostream& operator<<(std::ostream& os, const Lottery& p);
std::ostream& operator<<(std::ostream& os, const EmbeddedPoint& v);

}  // namespace eurep
