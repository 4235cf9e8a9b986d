#ifndef ARS_FRAME_HPP
#define ARS_FRAME_HPP

#include "ars/vector_field.hpp"

#include <string>
#include <vector>

namespace ars {

/// n polynomial vector fields on R^n, read as an orthonormal frame, together
/// with coordinate names and the base point of the analysis.
class Frame {
public:
  Frame(std::vector<std::string> var_names, std::vector<VectorField> fields, RationalVector base_point = {});
  explicit Frame(std::vector<VectorField> fields);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& var_names() const { return names_; }
  const std::vector<VectorField>& fields() const { return fields_; }
  const VectorField& operator[](std::size_t i) const { return fields_[i]; }
  const RationalVector& base_point() const { return base_; }
  bool centered_at_origin() const;

  /// Same structure in coordinates translated so that the base point is the origin.
  Frame centered() const;

private:
  Frame(std::vector<VectorField>&& fields, std::vector<std::string>&& names);

  std::vector<std::string> names_;
  std::vector<VectorField> fields_;
  RationalVector base_;
};

} // namespace ars

#endif
