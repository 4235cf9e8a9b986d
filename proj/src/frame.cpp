#include "ars/frame.hpp"

#include "ars/errors.hpp"

#include <algorithm>
#include <set>

namespace ars {

Frame::Frame(std::vector<std::string> var_names, std::vector<VectorField> fields, RationalVector base_point)
    : names_(std::move(var_names)), fields_(std::move(fields)), base_(std::move(base_point)) {
  const std::size_t n = names_.size();
  if (std::set<std::string>(names_.begin(), names_.end()).size() != n)
    throw std::invalid_argument("frame variable names must be distinct");
  if (fields_.size() != n)
    throw DimensionMismatch("a frame on R^n needs exactly n fields");
  for (const auto& x : fields_)
    if (x.dim() != n)
      throw DimensionMismatch("frame field has wrong dimension");
  if (base_.empty())
    base_.assign(n, Rational(0));
  if (base_.size() != n)
    throw DimensionMismatch("base point has wrong dimension");
}

namespace {
std::size_t first_dim(const std::vector<VectorField>& fields) { return fields.empty() ? 0 : fields.front().dim(); }
} // namespace

// The names are computed before the fields are moved into the delegated call.
Frame::Frame(std::vector<VectorField> fields) : Frame(std::move(fields), default_names(first_dim(fields))) {}

Frame::Frame(std::vector<VectorField>&& fields, std::vector<std::string>&& names)
    : Frame(std::move(names), std::move(fields)) {}

bool Frame::centered_at_origin() const {
  return std::all_of(base_.begin(), base_.end(), [](const Rational& q) { return is_zero(q); });
}

Frame Frame::centered() const {
  if (centered_at_origin())
    return *this;
  std::vector<VectorField> shifted;
  for (const auto& x : fields_) {
    std::vector<Polynomial> comps;
    for (const auto& p : x.components())
      comps.push_back(p.shifted(base_));
    shifted.emplace_back(std::move(comps));
  }
  return Frame(names_, std::move(shifted));
}

} // namespace ars
