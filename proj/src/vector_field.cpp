#include "ars/vector_field.hpp"

#include "ars/errors.hpp"

#include <algorithm>

namespace ars {

VectorField::VectorField(std::vector<Polynomial> components) : components_(std::move(components)) {
  for (const auto& p : components_)
    if (p.dim() != components_.size())
      throw DimensionMismatch("vector field component has wrong dimension");
}

VectorField VectorField::coordinate(std::size_t dim, std::size_t j) {
  VectorField x(dim);
  x.components_.at(j) = Polynomial::constant(dim, Rational(1));
  return x;
}

bool VectorField::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

int VectorField::total_degree() const {
  int d = -1;
  for (const auto& p : components_)
    d = std::max(d, p.total_degree());
  return d;
}

VectorField& VectorField::operator+=(const VectorField& other) {
  if (other.dim() != dim())
    throw DimensionMismatch("vector field dimensions differ");
  for (std::size_t j = 0; j < dim(); ++j)
    components_[j] += other.components_[j];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& other) {
  if (other.dim() != dim())
    throw DimensionMismatch("vector field dimensions differ");
  for (std::size_t j = 0; j < dim(); ++j)
    components_[j] -= other.components_[j];
  return *this;
}

VectorField& VectorField::operator*=(const Rational& c) {
  for (auto& p : components_)
    p *= c;
  return *this;
}

std::string VectorField::to_string(const std::vector<std::string>& names) const {
  std::string out;
  for (std::size_t j = 0; j < dim(); ++j) {
    const Polynomial& p = components_[j];
    if (p.is_zero())
      continue;
    std::string coeff;
    if (p == Polynomial::constant(dim(), Rational(1)))
      coeff = "";
    else if (p.terms().size() == 1)
      coeff = p.to_string(names) + " ";
    else
      coeff = "(" + p.to_string(names) + ") ";
    if (!out.empty())
      out += " + ";
    out += coeff + "d/d" + names.at(j);
  }
  return out.empty() ? "0" : out;
}

std::string VectorField::to_string() const { return to_string(default_names(dim())); }

VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
VectorField operator*(const Rational& c, VectorField a) { return a *= c; }

VectorField operator*(const Polynomial& f, const VectorField& x) {
  std::vector<Polynomial> comps;
  comps.reserve(x.dim());
  for (const auto& p : x.components())
    comps.push_back(f * p);
  return VectorField(std::move(comps));
}

Polynomial vf_apply(const VectorField& x, const Polynomial& f) {
  if (x.dim() != f.dim())
    throw DimensionMismatch("vf_apply: field and function dimensions differ");
  Polynomial out(f.dim());
  for (std::size_t j = 0; j < x.dim(); ++j) {
    if (x[j].is_zero())
      continue;
    out += x[j] * f.derivative(j);
  }
  return out;
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  if (x.dim() != y.dim())
    throw DimensionMismatch("lie_bracket: field dimensions differ");
  std::vector<Polynomial> comps;
  comps.reserve(x.dim());
  for (std::size_t j = 0; j < x.dim(); ++j)
    comps.push_back(vf_apply(x, y[j]) - vf_apply(y, x[j]));
  return VectorField(std::move(comps));
}

RationalVector vf_eval(const VectorField& x, std::span<const Rational> point) {
  if (x.dim() != point.size())
    throw DimensionMismatch("vf_eval: point has wrong dimension");
  RationalVector out;
  out.reserve(x.dim());
  for (const auto& p : x.components())
    out.push_back(p.evaluate(point));
  return out;
}

std::vector<double> vf_eval(const VectorField& x, std::span<const double> point) {
  if (x.dim() != point.size())
    throw DimensionMismatch("vf_eval: point has wrong dimension");
  std::vector<double> out;
  out.reserve(x.dim());
  for (const auto& p : x.components())
    out.push_back(p.evaluate(point));
  return out;
}

std::size_t frame_rank_at(std::span<const VectorField> fields, std::span<const Rational> point) {
  std::vector<RationalVector> rows;
  for (const auto& x : fields)
    rows.push_back(vf_eval(x, point));
  if (rows.empty())
    return 0;
  return rank(RationalMatrix::from_rows(rows, point.size()));
}

Polynomial fields_determinant(std::span<const VectorField> fields) {
  const std::size_t n = fields.size();
  for (const auto& x : fields)
    if (x.dim() != n)
      throw DimensionMismatch("determinant needs n fields on R^n");
  if (n == 0)
    return Polynomial::constant(0, Rational(1));
  // m[i][j] = component i of field j.
  std::vector<std::vector<Polynomial>> m(n, std::vector<Polynomial>(n, Polynomial(n)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = fields[j][i];

  Polynomial previous = Polynomial::constant(n, Rational(1));
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k].is_zero())
      ++pivot;
    if (pivot == n)
      return Polynomial(n);
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], previous);
      m[i][k] = Polynomial(n);
    }
    previous = m[k][k];
  }
  Polynomial det = m[n - 1][n - 1];
  if (sign < 0)
    det *= Rational(-1);
  return det;
}

bool FieldKeyLess::operator()(const FieldKey& a, const FieldKey& b) const {
  if (a.component != b.component)
    return a.component > b.component;
  return GrlexLess{}(a.exponent, b.exponent);
}

FieldCoefficients coefficients(const VectorField& x) {
  FieldCoefficients out;
  for (std::size_t j = 0; j < x.dim(); ++j)
    for (const auto& [e, c] : x[j].terms())
      out.emplace(FieldKey{j, e}, c);
  return out;
}

bool VectorFieldSpan::insert(const VectorField& x) {
  if (x.dim() != dim_)
    throw DimensionMismatch("span: field has wrong dimension");
  if (!echelon_.insert(coefficients(x)))
    return false;
  basis_.push_back(x);
  return true;
}

bool VectorFieldSpan::contains(const VectorField& x) const {
  if (x.dim() != dim_)
    throw DimensionMismatch("span: field has wrong dimension");
  return echelon_.contains(coefficients(x));
}

std::optional<RationalVector> VectorFieldSpan::coordinates(const VectorField& x) const {
  if (x.dim() != dim_)
    throw DimensionMismatch("span: field has wrong dimension");
  return echelon_.coordinates(coefficients(x));
}

} // namespace ars
