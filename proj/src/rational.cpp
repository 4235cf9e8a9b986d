#include "ars/rational.hpp"

#include <stdexcept>

namespace ars {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0)
    throw std::invalid_argument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

namespace {
bool all_digits(std::string_view s) {
  if (s.empty())
    return false;
  for (char c : s)
    if (c < '0' || c > '9')
      return false;
  return true;
}
} // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw std::invalid_argument("not a rational literal: " + std::string(text));
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0)
    throw std::invalid_argument("zero denominator in: " + std::string(text));
  if (negative)
    n = -n;
  return make_rational(n, d);
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1)
    return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

double to_double(const Rational& q) { return q.get_d(); }

} // namespace ars
