#include "ars/polynomial.hpp"

#include "ars/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ars {

unsigned total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0U); }

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  const unsigned da = total_degree(a);
  const unsigned db = total_degree(b);
  if (da != db)
    return da < db;
  // Lex with x_1 most significant: larger leading exponent is the larger monomial.
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

Polynomial Polynomial::constant(std::size_t dim, const Rational& c) {
  Polynomial p(dim);
  p.add_term(Exponent(dim, 0), c);
  return p;
}

Polynomial Polynomial::variable(std::size_t dim, std::size_t j) {
  Exponent e(dim, 0);
  e.at(j) = 1;
  return monomial(e, Rational(1));
}

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c) {
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && ars::total_degree(terms_.begin()->first) == 0);
}

int Polynomial::total_degree() const {
  if (terms_.empty())
    return -1;
  return static_cast<int>(ars::total_degree(terms_.rbegin()->first));
}

Rational Polynomial::coefficient(const Exponent& e) const {
  const auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != dim_)
    throw DimensionMismatch("monomial exponent length does not match polynomial dimension");
  if (ars::is_zero(c))
    return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (ars::is_zero(it->second))
      terms_.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.dim_ != dim_)
    throw DimensionMismatch("polynomial dimensions differ");
  for (const auto& [e, c] : other.terms_)
    add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.dim_ != dim_)
    throw DimensionMismatch("polynomial dimensions differ");
  for (const auto& [e, c] : other.terms_)
    add_term(e, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (ars::is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coeff] : terms_)
    coeff *= c;
  return *this;
}

Polynomial Polynomial::derivative(std::size_t j) const {
  if (j >= dim_)
    throw DimensionMismatch("derivative index out of range");
  Polynomial out(dim_);
  for (const auto& [e, c] : terms_) {
    if (e[j] == 0)
      continue;
    Exponent d = e;
    --d[j];
    out.add_term(d, c * e[j]);
  }
  return out;
}

namespace {
template <class T>
T power(const T& base, unsigned k) {
  T result(1);
  for (unsigned i = 0; i < k; ++i)
    result *= base;
  return result;
}
} // namespace

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != dim_)
    throw DimensionMismatch("evaluation point has wrong dimension");
  Rational sum(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t j = 0; j < dim_; ++j)
      if (e[j] != 0)
        term *= power(point[j], e[j]);
    sum += term;
  }
  return sum;
}

double Polynomial::evaluate(std::span<const double> point) const {
  if (point.size() != dim_)
    throw DimensionMismatch("evaluation point has wrong dimension");
  double sum = 0.0;
  for (const auto& [e, c] : terms_) {
    double term = c.get_d();
    for (std::size_t j = 0; j < dim_; ++j)
      if (e[j] != 0)
        term *= std::pow(point[j], static_cast<int>(e[j]));
    sum += term;
  }
  return sum;
}

Polynomial Polynomial::shifted(std::span<const Rational> shift) const {
  if (shift.size() != dim_)
    throw DimensionMismatch("shift has wrong dimension");
  std::vector<Polynomial> linear;
  linear.reserve(dim_);
  for (std::size_t j = 0; j < dim_; ++j)
    linear.push_back(variable(dim_, j) + constant(dim_, shift[j]));
  Polynomial out(dim_);
  for (const auto& [e, c] : terms_) {
    Polynomial term = constant(dim_, c);
    for (std::size_t j = 0; j < dim_; ++j)
      if (e[j] != 0)
        term = term * pow(linear[j], e[j]);
    out += term;
  }
  return out;
}

Polynomial Polynomial::scaled(std::span<const Rational> scale) const {
  if (scale.size() != dim_)
    throw DimensionMismatch("scale has wrong dimension");
  Polynomial out(dim_);
  for (const auto& [e, c] : terms_) {
    Rational coeff = c;
    for (std::size_t j = 0; j < dim_; ++j)
      coeff *= power(scale[j], e[j]);
    out.add_term(e, coeff);
  }
  return out;
}

std::string Polynomial::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty())
    return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = sgn(c) < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (first)
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    first = false;

    std::string mono;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (e[j] == 0)
        continue;
      if (!mono.empty())
        mono += ' ';
      mono += names.at(j);
      if (e[j] > 1)
        mono += "^" + std::to_string(e[j]);
    }
    if (mono.empty())
      out += ars::to_string(mag);
    else if (mag == 1)
      out += mono;
    else
      out += ars::to_string(mag) + " " + mono;
  }
  return out;
}

std::string Polynomial::to_string() const { return to_string(default_names(dim_)); }

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
Polynomial operator-(Polynomial a) { return a *= Rational(-1); }
Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.dim() != b.dim())
    throw DimensionMismatch("polynomial dimensions differ");
  Polynomial out(a.dim());
  Exponent e(a.dim());
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) {
      for (std::size_t j = 0; j < e.size(); ++j)
        e[j] = ea[j] + eb[j];
      out.add_term(e, ca * cb);
    }
  return out;
}

Polynomial pow(const Polynomial& p, unsigned k) {
  Polynomial result = Polynomial::constant(p.dim(), Rational(1));
  for (unsigned i = 0; i < k; ++i)
    result = result * p;
  return result;
}

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero())
    throw std::domain_error("division by the zero polynomial");
  if (a.dim() != b.dim())
    throw DimensionMismatch("polynomial dimensions differ");
  const auto& [lead_exp, lead_coeff] = b.leading_term();
  Polynomial remainder = a;
  Polynomial quotient(a.dim());
  while (!remainder.is_zero()) {
    const auto& [re, rc] = remainder.leading_term();
    Exponent q(a.dim());
    for (std::size_t j = 0; j < q.size(); ++j) {
      if (re[j] < lead_exp[j])
        throw std::domain_error("polynomial division is not exact");
      q[j] = re[j] - lead_exp[j];
    }
    const Polynomial step = Polynomial::monomial(q, rc / lead_coeff);
    quotient += step;
    remainder -= step * b;
  }
  return quotient;
}

std::vector<std::string> default_names(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t j = 0; j < dim; ++j)
    names.push_back("x" + std::to_string(j + 1));
  return names;
}

} // namespace ars
