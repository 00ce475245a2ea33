#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace vrb {

// Exact arithmetic only. cpp_rational keeps lowest terms and a positive
// denominator by construction.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  using Error::Error;
};

struct ValidationError : Error {
  using Error::Error;
};

// Raised when a check's stated hypothesis does not hold for the given input.
struct HypothesisError : Error {
  using Error::Error;
};

// Accepts "p" or "p/q" with optional leading '-'. Rejects zero denominators.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

// Exact square root, or nullopt when r is not the square of a rational.
std::optional<Rational> rational_sqrt(const Rational& r);

Rational binomial(unsigned n, unsigned k);

}  // namespace vrb
