#ifndef ARS_APPROX_HPP
#define ARS_APPROX_HPP

#include "ars/frame.hpp"
#include "ars/grading.hpp"

#include <vector>

namespace ars {

/// Output of the approximation procedure, in the order
/// hat_1..hat_k, hat_{k+1}..hat_m, tilde_{m+1}..tilde_n.
struct ApproximationSet {
  std::vector<VectorField> hat_fields;
  std::vector<VectorField> tilde_fields;
  int k = 0;
  int m = 0;
  /// Row i expresses output field i (before taking homogeneous parts) as a
  /// constant combination of the original fields.
  RationalMatrix transform;
  /// Original field index each output field is built from.
  std::vector<std::size_t> source;
  bool degenerate = false;
  WeightVector weights;

  std::size_t dim() const { return hat_fields.size() + tilde_fields.size(); }
  std::vector<VectorField> fields() const;
};

/// Order -1 homogeneous component.
VectorField nilpotent_approx(const VectorField& x, const WeightVector& w);
/// Order 0 homogeneous component.
VectorField order_zero_component(const VectorField& x, const WeightVector& w);

/// Runs the three-step selection at the frame's base point (coordinates are
/// translated so that it becomes the origin):
///  1. keep, in input order, the fields whose approximations raise the rank at 0 (k of them);
///  2. subtract from every other field the constant combination of the kept
///     ones cancelling its value at 0, then keep a maximal Q-independent set of
///     the nonzero nilpotent approximations (m - k of them);
///  3. replace the remaining fields by their order-0 components.
/// A degenerate result (approximating fields dependent, i.e. their
/// determinant vanishes identically) is returned with the flag set.
/// Throws RankConditionFailure or NotPrivileged when the preconditions fail.
ApproximationSet build_approximation(const Frame& frame, const WeightVector& w, const GrowthOptions& options = {});

/// Every monomial of component j has weighted degree <= w_j. Such a field has
/// a triangular flow defined for all times.
bool check_triangular_complete(const VectorField& x, const WeightVector& w);

} // namespace ars

#endif
