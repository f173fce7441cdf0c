#include "grassdesign/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace grassdesign {

double to_double(const Rational& r) { return r.convert_to<double>(); }

std::string to_fraction_string(const Rational& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

BigInt parse_integer(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty number");
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("sign without digits");
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("invalid digit in '" + s + "'");
  return BigInt(s);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  if (auto slash = text.find('/'); slash != std::string::npos) {
    const BigInt num = parse_integer(text.substr(0, slash));
    const BigInt den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string::npos) {
    const std::string frac = text.substr(dot + 1);
    const BigInt whole = parse_integer(text.substr(0, dot).empty() ||
                                               text.substr(0, dot) == "-" ||
                                               text.substr(0, dot) == "+"
                                           ? text.substr(0, dot) + "0"
                                           : text.substr(0, dot));
    BigInt digits = frac.empty() ? BigInt(0) : parse_integer(frac);
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const bool negative = !text.empty() && text[0] == '-';
    const Rational r(whole, 1);
    const Rational tail(digits, scale);
    return negative ? Rational(r - tail) : Rational(r + tail);
  }
  return Rational(parse_integer(text), 1);
}

BigInt factorial(int n) {
  if (n < 0) throw std::invalid_argument("factorial of negative number");
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

Rational rising_factorial(const Rational& a, int s) {
  Rational result = 1;
  for (int i = 0; i < s; ++i) result *= (a + i);
  return result;
}

}  // namespace grassdesign
