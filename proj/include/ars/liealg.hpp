#ifndef ARS_LIEALG_HPP
#define ARS_LIEALG_HPP

#include "ars/approx.hpp"
#include "ars/grading.hpp"
#include "ars/linalg.hpp"
#include "ars/vector_field.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ars {

/// Finite-dimensional Lie algebra of polynomial vector fields, given by a
/// basis and its structure constants [b_i, b_j] = sum_k c^k_ij b_k.
class LieBasis {
public:
  /// Throws std::invalid_argument if the elements are dependent or their
  /// brackets leave the span.
  LieBasis(std::size_t dim, std::vector<VectorField> basis);

  std::size_t ambient_dim() const { return dim_; }
  std::size_t size() const { return basis_.size(); }
  const std::vector<VectorField>& basis() const { return basis_; }
  const VectorField& operator[](std::size_t i) const { return basis_[i]; }

  /// Coordinates of [b_i, b_j].
  const RationalVector& structure(std::size_t i, std::size_t j) const { return structure_[i * basis_.size() + j]; }
  /// Bracket of two elements given by coordinates.
  RationalVector bracket(const RationalVector& u, const RationalVector& v) const;

  bool contains(const VectorField& x) const { return span_.contains(x); }
  std::optional<RationalVector> coordinates(const VectorField& x) const { return span_.coordinates(x); }
  VectorField element(const RationalVector& coords) const;

private:
  std::size_t dim_;
  std::vector<VectorField> basis_;
  VectorFieldSpan span_;
  std::vector<RationalVector> structure_;
};

struct ClosureOptions {
  /// Polynomial degree admitted in brackets; negative means unbounded.
  int max_degree = -1;
};

/// Lie algebra generated by the fields, built level by level over
/// right-normed brackets [g_i, w] of generators with the previous level.
/// Throws DegreeBoundExceeded when a bracket exceeds options.max_degree.
LieBasis lie_closure(std::span<const VectorField> generators, const ClosureOptions& options = {});

/// Smallest ideal of the algebra containing the generators.
LieBasis ideal_closure(const LieBasis& algebra, std::span<const VectorField> generators);

/// Nilpotency class: the least s with C^{s+1} = 0 for the lower central
/// series C^1 = L, C^{i+1} = [L, C^i]. 0 for the zero algebra, 1 for abelian.
/// std::nullopt if the series stabilises at a nonzero ideal.
std::optional<int> nilpotent_step(const LieBasis& algebra);
bool is_solvable(const LieBasis& algebra);

/// Matrix of ad(X) on the basis of g: [X, b_j] = sum_i D(i,j) b_i.
/// Throws NotInvariant when some bracket leaves g.
RationalMatrix adjoint_matrix(const VectorField& x, const LieBasis& g);

bool rank_condition_at_zero(const LieBasis& g, std::span<const Rational> point);

/// Homogeneous elements Y_i = d/dx_i + sum_{w_j > w_i} y_j d/dx_j of g, one
/// per coordinate, with Y_i of order -w_i. Throws GradedFrameUnavailable.
std::vector<VectorField> graded_frame(const LieBasis& g, const WeightVector& w);

enum class FieldLabel { invariant, linear, affine };

std::string to_string(FieldLabel label);

struct Classification {
  /// One label per approximating field, in ApproximationSet order.
  std::vector<FieldLabel> labels;
  int k = 0;
  int l = 0;
  int m = 0;
  std::size_t lie_dim = 0;
  std::size_t ideal_dim = 0;
  std::optional<int> g_nilpotent_step;
  bool l_solvable = false;
  /// Field indices reordered so that the hat fields lying in g come right after the first k.
  std::vector<std::size_t> order;
};

/// Labels each approximating field: members of g are invariant; the others
/// act on g as derivations and are linear, or affine when the recorded
/// transform added a combination of the first k fields.
Classification classify_fields(const ApproximationSet& approx, const LieBasis& algebra, const LieBasis& ideal);

} // namespace ars

#endif
