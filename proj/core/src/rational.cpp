#include "chaoslab/rational.hpp"

namespace chaoslab {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::inconclusive:
      return "inconclusive";
  }
  return "?";
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  Rational q(mpz_class(std::to_string(num)), mpz_class(std::to_string(den)));
  q.canonicalize();
  return q;
}

Rational ratio(std::uint64_t num, std::uint64_t den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  Rational q(static_cast<unsigned long>(num), static_cast<unsigned long>(den));
  q.canonicalize();
  return q;
}

Rational pow2_neg(unsigned k) {
  mpz_class den = 1;
  mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), k);
  return Rational(mpz_class(1), den);
}

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(text));
    Rational q(mpz_class(text.substr(0, slash)), mpz_class(text.substr(slash + 1)));
    if (q.get_den() == 0) throw InvalidArgument("rational with zero denominator: " + text);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw InvalidArgument("not a rational: '" + text + "'");
  }
}

Rational Dyadic::value() const { return zero_ ? Rational(0) : chaoslab::pow2_neg(exponent_); }

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  if (a.zero_ || b.zero_) return b.zero_ <=> a.zero_;
  // larger exponent means smaller value
  return b.exponent_ <=> a.exponent_;
}

std::string to_string(const Dyadic& d) { return to_string(d.value()); }

}  // namespace chaoslab
