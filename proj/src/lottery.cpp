#include "eurep/lottery.hpp"

#include "eurep/error.hpp"

#include <ostream>
#include <set>
#include <sstream>

namespace eurep {

namespace {

template <class Range>
std::string join(const Range& values) {
  std::ostringstream os;
  os << '(';
  bool first = true;
  for (const auto& v : values) {
    if (!first) os << ", ";
    os << v;
    first = false;
  }
  os << ')';
  return os.str();
}

}  // namespace

OutcomeSpace::OutcomeSpace(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() < 2) {
    throw Error(ErrorCode::LengthMismatch, "an outcome space needs at least two outcomes (n >= 1)");
  }
  const std::set<std::string> distinct(labels_.begin(), labels_.end());
  if (distinct.size() != labels_.size()) throw Error(ErrorCode::InvalidScenario, "outcome labels must be distinct");
}

OutcomeSpace OutcomeSpace::indexed(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) labels.push_back("x" + std::to_string(i));
  return OutcomeSpace(std::move(labels));
}

Lottery Lottery::vertex(std::size_t n, std::size_t index) {
  if (index > n) throw Error(ErrorCode::LengthMismatch, "vertex index beyond outcome count");
  std::vector<Rational> w(n + 1);
  w[index] = 1;
  return Lottery(std::move(w));
}

Lottery Lottery::uniform(std::size_t n) {
  return Lottery(std::vector<Rational>(n + 1, Rational(1, static_cast<long>(n + 1))));
}

Lottery make_lottery(std::vector<Rational> weights, const OutcomeSpace& space) {
  if (weights.size() != space.size()) {
    throw Error(ErrorCode::LengthMismatch, "expected " + std::to_string(space.size()) + " weights, got " +
                                               std::to_string(weights.size()));
  }
  Rational total;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i].sign() < 0) {
      throw Error(ErrorCode::NegativeWeight, "weight " + std::to_string(i) + " is " + weights[i].to_string());
    }
    total += weights[i];
  }
  if (total != Rational(1)) throw Error(ErrorCode::SumNotOne, "weights sum to " + total.to_string());
  return Lottery(std::move(weights));
}

Lottery make_lottery(std::vector<Rational> weights) {
  if (weights.size() < 2) throw Error(ErrorCode::LengthMismatch, "a lottery needs at least two weights");
  const auto space = OutcomeSpace::indexed(weights.size() - 1);
  return make_lottery(std::move(weights), space);
}

Lottery mix(const Lottery& p, const Lottery& q, const Rational& alpha) {
  if (alpha.sign() < 0 || alpha > Rational(1)) {
    throw Error(ErrorCode::AlphaOutOfRange, "mixing weight " + alpha.to_string() + " outside [0, 1]");
  }
  if (p.size() != q.size()) throw Error(ErrorCode::SpaceMismatch, "lotteries over different outcome spaces");
  const Rational beta = Rational(1) - alpha;
  std::vector<Rational> w(p.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = alpha * p[i] + beta * q[i];
  return Lottery(std::move(w));
}

EmbeddedPoint embed(const Lottery& p) {
  const auto w = p.weights();
  return EmbeddedPoint{std::vector<Rational>(w.begin() + 1, w.end())};
}

Lottery unembed(const EmbeddedPoint& v) {
  if (v.dimension() == 0) throw Error(ErrorCode::LengthMismatch, "cannot unembed a zero-dimensional point");
  Rational rest;
  for (const auto& c : v.coords) {
    if (c.sign() < 0) throw Error(ErrorCode::NotInSimplex, "coordinate " + c.to_string() + " is negative");
    rest += c;
  }
  if (rest > Rational(1)) throw Error(ErrorCode::NotInSimplex, "coordinates sum to " + rest.to_string() + " > 1");
  std::vector<Rational> w;
  w.reserve(v.dimension() + 1);
  w.push_back(Rational(1) - rest);
  w.insert(w.end(), v.coords.begin(), v.coords.end());
  return Lottery(std::move(w));
}

std::string to_string(const Lottery& p) { return join(p.weights()); }
std::string to_string(const EmbeddedPoint& v) { return join(v.coords); }
std::ostream& operator<<(std::ostream& os, const Lottery& p) { return os << to_string(p); }
std::ostream& operator<<(std::ostream& os, const EmbeddedPoint& v) { return os << to_string(v); }

}  // namespace eurep
