#ifndef ARS_POLYNOMIAL_HPP
#define ARS_POLYNOMIAL_HPP

#include "ars/rational.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace ars {

using Exponent = std::vector<unsigned>;

unsigned total_degree(const Exponent& e);

/// Graded lexicographic order: total degree first, then lexicographic with
/// x_1 most significant.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

/// Sparse multivariate polynomial over Q. Zero coefficients are never stored,
/// so two polynomials are equal iff their term maps are equal.
class Polynomial {
public:
  using TermMap = std::map<Exponent, Rational, GrlexLess>;

  explicit Polynomial(std::size_t dim = 0) : dim_(dim) {}

  static Polynomial constant(std::size_t dim, const Rational& c);
  static Polynomial variable(std::size_t dim, std::size_t j);
  static Polynomial monomial(const Exponent& e, const Rational& c);

  std::size_t dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// -1 for the zero polynomial.
  int total_degree() const;
  /// Highest grlex term; precondition !is_zero().
  const TermMap::value_type& leading_term() const { return *terms_.rbegin(); }

  Rational coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  Polynomial derivative(std::size_t j) const;
  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;
  /// Substitutes x_j -> x_j + shift_j.
  Polynomial shifted(std::span<const Rational> shift) const;
  /// Substitutes x_j -> scale_j * x_j.
  Polynomial scaled(std::span<const Rational> scale) const;

  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

private:
  std::size_t dim_;
  TermMap terms_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(Polynomial a, const Rational& c);
Polynomial operator*(const Rational& c, Polynomial a);
Polynomial pow(const Polynomial& p, unsigned k);

/// Exact quotient a / b. Throws std::domain_error if b does not divide a.
Polynomial divide_exact(const Polynomial& a, const Polynomial& b);

/// Default variable names x1..xn.
std::vector<std::string> default_names(std::size_t dim);

} // namespace ars

#endif
