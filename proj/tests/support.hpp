#pragma once

#include "eurep/error.hpp"
#include "eurep/lottery.hpp"
#include "eurep/rational.hpp"

#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

namespace eurep::testing {

inline Rational Q(const std::string& s) { return Rational::parse(s); }

inline std::vector<Rational> Qs(const std::string& csv) {
  std::vector<Rational> out;
  std::stringstream in(csv);
  std::string item;
  while (std::getline(in, item, ',')) out.push_back(Q(item));
  return out;
}

inline Lottery L(const std::string& csv) { return make_lottery(Qs(csv)); }
inline EmbeddedPoint P(const std::string& csv) { return EmbeddedPoint{Qs(csv)}; }

// Runs f and returns the code of the eurep::Error it throws.
template <class F>
ErrorCode error_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an eurep::Error");
  return ErrorCode::ParseError;
}

}  // namespace eurep::testing
