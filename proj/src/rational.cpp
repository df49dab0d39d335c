#include "evcom/rational.hpp"

#include <cctype>

#include "evcom/errors.hpp"

namespace evcom {

namespace {

bool valid_integer(const std::string& s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num = text.substr(0, slash);
  if (!valid_integer(num)) {
    throw InputError("malformed rational \"" + text + "\": expected \"p\" or \"p/q\"");
  }
  mpz_class numerator(num, 10);
  mpz_class denominator(1);
  if (slash != std::string::npos) {
    const std::string den = text.substr(slash + 1);
    if (!valid_integer(den)) {
      throw InputError("malformed rational \"" + text + "\": expected \"p\" or \"p/q\"");
    }
    denominator = mpz_class(den, 10);
    if (denominator == 0) {
      throw InputError("malformed rational \"" + text + "\": zero denominator");
    }
  }
  Rational value(numerator, denominator);
  value.canonicalize();
  return value;
}

std::string format_rational(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational rational_pow(const Rational& base, long exponent) {
  if (exponent == 0) return Rational(1);
  Rational b = exponent > 0 ? base : Rational(1) / base;
  long e = exponent > 0 ? exponent : -exponent;
  Rational acc(1);
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return acc;
}

}  // namespace evcom
