#include "eurep/rational.hpp"

#include "eurep/error.hpp"

#include <ostream>
#include <utility>

namespace eurep {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::SumNotOne: return "SumNotOne";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::SpaceMismatch: return "SpaceMismatch";
    case ErrorCode::NotInSimplex: return "NotInSimplex";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::WrongCount: return "WrongCount";
    case ErrorCode::NoSolveCapability: return "NoSolveCapability";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::InconsistentStrictPair: return "InconsistentStrictPair";
    case ErrorCode::NotInAffineHull: return "NotInAffineHull";
    case ErrorCode::UnorientedRepresentation: return "UnorientedRepresentation";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidScenario: return "InvalidScenario";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational::Rational(long numerator, long denominator) : Rational(mpz_class(numerator), mpz_class(denominator)) {}

Rational::Rational(const mpz_class& numerator, const mpz_class& denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const auto fail = [&] {
    return Error(ErrorCode::ParseError, "\"" + std::string(text) + "\" is not a canonical rational (a/b or a)");
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num_text = body.substr(0, slash);
  const std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!is_digits(num_text) || !is_digits(den_text)) throw fail();

  mpz_class num(std::string(num_text), 10);
  mpz_class den(std::string(den_text), 10);
  if (den == 0) throw fail();
  if (negative) num = -num;
  Rational r(num, den);
  if (r.to_string() != text) throw fail();
  return r;
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::reciprocal() const {
  if (is_zero()) throw std::domain_error("reciprocal of zero");
  return Rational(mpq_class(value_.get_den(), value_.get_num()));
}

mpz_class Rational::floor() const {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string Rational::to_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw std::domain_error("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational simplest_between(const Rational& lo, const Rational& hi) {
  if (!(lo < hi)) throw std::domain_error("simplest_between needs lo < hi");
  if (lo.sign() < 0 && hi.sign() > 0) return Rational(0);
  if (hi.sign() <= 0) return -simplest_between(-hi, -lo);

  // 0 <= lo < hi from here on; walk the continued fraction expansion.
  const mpz_class whole = lo.floor();
  const Rational base(whole, mpz_class(1));
  if (base + Rational(1) < hi) return base + Rational(1);
  const Rational upper_gap = hi - base;  // in (0, 1]
  const Rational lower_gap = lo - base;  // in [0, 1)
  if (lower_gap.is_zero()) {
    // x - base in (0, upper_gap): the largest unit fraction below upper_gap.
    const mpz_class k = upper_gap.reciprocal().floor() + 1;
    return base + Rational(mpz_class(1), k);
  }
  return base + simplest_between(upper_gap.reciprocal(), lower_gap.reciprocal()).reciprocal();
}

}  // namespace eurep
