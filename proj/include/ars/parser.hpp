#ifndef ARS_PARSER_HPP
#define ARS_PARSER_HPP

#include "ars/frame.hpp"
#include "ars/grading.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ars {

struct FieldDefinition {
  std::string name;
  VectorField field;

  friend bool operator==(const FieldDefinition&, const FieldDefinition&) = default;
};

/// Parsed frame description:
///
///   vars x y z
///   field X1 = d/dx
///   field X2 = x d/dy
///   field X3 = y^2 d/dz
///   weights 1 2 5        # optional, "weights auto" is the default
///   point 0 0 0          # optional base point
struct FrameDocument {
  std::vector<std::string> var_names;
  std::vector<FieldDefinition> fields;
  std::optional<WeightVector> weights;
  std::optional<RationalVector> point;

  Frame frame() const;

  friend bool operator==(const FrameDocument&, const FrameDocument&) = default;
};

/// Throws ParseError with 1-based line and column.
FrameDocument parse_frame(std::string_view text);

/// Canonical text form; parse_frame(print_frame(d)) == d.
std::string print_frame(const FrameDocument& doc);

/// Field expression in the document grammar, e.g. "x d/dz + 1/2 y^2 d/dw".
std::string format_field(const VectorField& x, const std::vector<std::string>& names);

} // namespace ars

#endif
