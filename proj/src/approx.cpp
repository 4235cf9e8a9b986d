#include "ars/approx.hpp"

#include "ars/errors.hpp"

namespace ars {

std::vector<VectorField> ApproximationSet::fields() const {
  std::vector<VectorField> out = hat_fields;
  out.insert(out.end(), tilde_fields.begin(), tilde_fields.end());
  return out;
}

VectorField nilpotent_approx(const VectorField& x, const WeightVector& w) { return homogeneous_component(x, -1, w); }

VectorField order_zero_component(const VectorField& x, const WeightVector& w) {
  return homogeneous_component(x, 0, w);
}

namespace {

std::map<std::size_t, Rational> sparse(const RationalVector& v) {
  std::map<std::size_t, Rational> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i]))
      out.emplace(i, v[i]);
  return out;
}

} // namespace

ApproximationSet build_approximation(const Frame& input, const WeightVector& w, const GrowthOptions& options) {
  const Frame frame = input.centered();
  const std::size_t n = frame.dim();
  if (w.size() != n)
    throw DimensionMismatch("weight vector has wrong length");
  const RationalVector origin(n, Rational(0));
  if (!check_privileged(frame, origin, w, options))
    throw NotPrivileged("coordinates are not privileged for the given weights");

  std::vector<VectorField> hats;
  for (const auto& x : frame.fields())
    hats.push_back(nilpotent_approx(x, w));

  // Step 1.
  std::vector<std::size_t> selected;
  SparseEchelon<std::size_t> values;
  for (std::size_t i = 0; i < n; ++i)
    if (values.insert(sparse(vf_eval(hats[i], origin))))
      selected.push_back(i);

  // Step 2: cancel values at 0, then pick independent nilpotent approximations.
  std::vector<bool> is_selected(n, false);
  for (std::size_t i : selected)
    is_selected[i] = true;
  RationalMatrix adjust = RationalMatrix::identity(n);
  std::vector<VectorField> adjusted = frame.fields();
  std::vector<VectorField> adjusted_hats = hats;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_selected[j])
      continue;
    const auto coords = values.coordinates(sparse(vf_eval(hats[j], origin)));
    if (!coords)
      throw std::logic_error("value at 0 outside the span of the selected fields");
    for (std::size_t r = 0; r < selected.size(); ++r) {
      const Rational& c = (*coords)[r];
      if (is_zero(c))
        continue;
      const std::size_t i = selected[r];
      adjusted[j] -= c * frame[i];
      adjusted_hats[j] -= c * hats[i];
      adjust(j, i) -= c;
    }
  }

  std::vector<std::size_t> independent;
  std::vector<std::size_t> rest;
  VectorFieldSpan span(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (is_selected[j])
      continue;
    if (!adjusted_hats[j].is_zero() && span.insert(adjusted_hats[j]))
      independent.push_back(j);
    else
      rest.push_back(j);
  }

  // Step 3 and assembly.
  ApproximationSet out;
  out.k = static_cast<int>(selected.size());
  out.m = out.k + static_cast<int>(independent.size());
  out.weights = w;
  out.transform = RationalMatrix(n, n);
  std::size_t row = 0;
  const auto emit = [&](std::size_t j) {
    for (std::size_t c = 0; c < n; ++c)
      out.transform(row, c) = adjust(j, c);
    out.source.push_back(j);
    ++row;
  };
  for (std::size_t i : selected) {
    out.hat_fields.push_back(hats[i]);
    emit(i);
  }
  for (std::size_t j : independent) {
    out.hat_fields.push_back(adjusted_hats[j]);
    emit(j);
  }
  for (std::size_t j : rest) {
    out.tilde_fields.push_back(order_zero_component(adjusted[j], w));
    emit(j);
  }
  const auto all = out.fields();
  out.degenerate = fields_determinant(all).is_zero();
  return out;
}

bool check_triangular_complete(const VectorField& x, const WeightVector& w) {
  if (x.dim() != w.size())
    throw DimensionMismatch("weight vector has wrong length");
  for (std::size_t j = 0; j < x.dim(); ++j)
    for (const auto& [e, c] : x[j].terms())
      if (weighted_degree(e, w) > w[j])
        return false;
  return true;
}

} // namespace ars
