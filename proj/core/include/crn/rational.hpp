#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "crn/errors.hpp"

namespace crn {

using Rational = boost::rational<std::int64_t>;

/// Parses "p/q" or a plain integer string.
inline Rational parseRational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rational(std::stoll(s));
    }
    std::int64_t num = std::stoll(s.substr(0, slash));
    std::int64_t den = std::stoll(s.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "bad rational '" + s + "'");
  } catch (const std::out_of_range&) {
    throw Error(ErrorCode::ParseError, "rational out of range '" + s + "'");
  }
}

inline double toDouble(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

inline std::string toString(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

using RationalVec = std::vector<Rational>;

}  // namespace crn
