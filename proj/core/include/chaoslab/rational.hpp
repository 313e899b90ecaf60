#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace chaoslab {

// Exact rationals throughout; nothing in the library rounds through floating point.
using Rational = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller-supplied horizon, bound or iterate budget ran out before the
// question could be settled. Callers treat this as "inconclusive", never as a failure.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Outcome of a finite-scale check. inconclusive means a bound or budget ran out.
enum class Verdict { pass, fail, inconclusive };
const char* to_string(Verdict v);

Rational make_rational(std::int64_t num, std::int64_t den = 1);
// num/den in lowest terms. mpq_class(num, den) alone is not canonicalized, and GMP
// compares non-canonical values incorrectly.
Rational ratio(std::uint64_t num, std::uint64_t den);

// 2^(-k)
Rational pow2_neg(unsigned k);

// "num/den" with den printed even when it is 1.
std::string to_string(const Rational& q);

// Parses "num/den" or "num".
Rational parse_rational(const std::string& text);

// Values of the shift metric: 0 or 2^(-exponent).
class Dyadic {
 public:
  static Dyadic zero() { return Dyadic(true, 0); }
  static Dyadic pow2_neg(unsigned exponent) { return Dyadic(false, exponent); }

  bool is_zero() const { return zero_; }
  unsigned exponent() const { return exponent_; }
  Rational value() const;

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  Dyadic(bool zero, unsigned exponent) : zero_(zero), exponent_(zero ? 0 : exponent) {}
  bool zero_;
  unsigned exponent_;
};

std::string to_string(const Dyadic& d);

}  // namespace chaoslab
