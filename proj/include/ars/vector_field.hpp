#ifndef ARS_VECTOR_FIELD_HPP
#define ARS_VECTOR_FIELD_HPP

#include "ars/linalg.hpp"
#include "ars/polynomial.hpp"

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ars {

/// Polynomial vector field sum_j components[j] * d/dx_j.
class VectorField {
public:
  explicit VectorField(std::size_t dim = 0) : components_(dim, Polynomial(dim)) {}
  explicit VectorField(std::vector<Polynomial> components);

  /// The coordinate field d/dx_j.
  static VectorField coordinate(std::size_t dim, std::size_t j);

  std::size_t dim() const { return components_.size(); }
  const std::vector<Polynomial>& components() const { return components_; }
  const Polynomial& operator[](std::size_t j) const { return components_[j]; }
  Polynomial& operator[](std::size_t j) { return components_[j]; }

  bool is_zero() const;
  int total_degree() const;

  VectorField& operator+=(const VectorField& other);
  VectorField& operator-=(const VectorField& other);
  VectorField& operator*=(const Rational& c);

  std::string to_string(const std::vector<std::string>& names) const;
  std::string to_string() const;

  friend bool operator==(const VectorField&, const VectorField&) = default;

private:
  std::vector<Polynomial> components_;
};

VectorField operator+(VectorField a, const VectorField& b);
VectorField operator-(VectorField a, const VectorField& b);
VectorField operator*(const Rational& c, VectorField a);
/// Function times field, component-wise.
VectorField operator*(const Polynomial& f, const VectorField& x);

/// Directional derivative X f = sum_j X_j df/dx_j.
Polynomial vf_apply(const VectorField& x, const Polynomial& f);
/// [X, Y]_j = X(Y_j) - Y(X_j).
VectorField lie_bracket(const VectorField& x, const VectorField& y);
RationalVector vf_eval(const VectorField& x, std::span<const Rational> point);
std::vector<double> vf_eval(const VectorField& x, std::span<const double> point);
/// Rank over Q of the fields evaluated at a point.
std::size_t frame_rank_at(std::span<const VectorField> fields, std::span<const Rational> point);

/// Determinant of the square matrix whose j-th column is fields[j], by
/// fraction-free elimination with exact polynomial division.
Polynomial fields_determinant(std::span<const VectorField> fields);

/// Key of one coefficient of a vector field: (component, monomial).
struct FieldKey {
  std::size_t component;
  Exponent exponent;
};

struct FieldKeyLess {
  bool operator()(const FieldKey& a, const FieldKey& b) const;
};

using FieldCoefficients = std::map<FieldKey, Rational, FieldKeyLess>;

FieldCoefficients coefficients(const VectorField& x);

/// Linear span of vector fields over Q, with exact membership and
/// coordinates relative to the inserted (independent) elements.
class VectorFieldSpan {
public:
  /// coordinates() requires track_coordinates; membership-only spans are much cheaper.
  explicit VectorFieldSpan(std::size_t dim, bool track_coordinates = true) : dim_(dim), echelon_(track_coordinates) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return basis_.size(); }
  const std::vector<VectorField>& basis() const { return basis_; }

  /// Appends x to the basis if it is independent of it; returns whether it did.
  bool insert(const VectorField& x);
  bool contains(const VectorField& x) const;
  std::optional<RationalVector> coordinates(const VectorField& x) const;

private:
  std::size_t dim_;
  std::vector<VectorField> basis_;
  SparseEchelon<FieldKey, FieldKeyLess> echelon_;
};

} // namespace ars

#endif
