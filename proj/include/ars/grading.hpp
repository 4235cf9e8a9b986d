#ifndef ARS_GRADING_HPP
#define ARS_GRADING_HPP

#include "ars/frame.hpp"
#include "ars/vector_field.hpp"

#include <optional>
#include <vector>

namespace ars {

/// Weights w_1..w_n of privileged coordinates; all positive.
class WeightVector {
public:
  WeightVector() = default;
  explicit WeightVector(std::vector<int> weights);

  std::size_t size() const { return w_.size(); }
  int operator[](std::size_t j) const { return w_[j]; }
  const std::vector<int>& values() const { return w_; }
  /// Largest weight, i.e. the step r.
  int step() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;

private:
  std::vector<int> w_;
};

/// Nonholonomic order or valuation; std::nullopt stands for +infinity.
using Order = std::optional<int>;

int weighted_degree(const Exponent& e, const WeightVector& w);
/// Minimum weighted degree over the monomials of f.
Order weighted_valuation(const Polynomial& f, const WeightVector& w);
/// min_j (weighted_valuation(X_j) - w_j).
Order nonholonomic_order_vf(const VectorField& x, const WeightVector& w);
/// Keeps in component j the monomials of weighted degree w_j + s.
VectorField homogeneous_component(const VectorField& x, int s, const WeightVector& w);
/// Sorted distinct orders of the nonzero homogeneous components of x.
std::vector<int> homogeneous_orders(const VectorField& x, const WeightVector& w);
bool is_homogeneous(const VectorField& x, const WeightVector& w);

struct GrowthVector {
  /// dims[s-1] = dim Delta^s at the base point.
  std::vector<std::size_t> dims;
  int step = 0;

  friend bool operator==(const GrowthVector&, const GrowthVector&) = default;
};

struct GrowthOptions {
  /// 0 selects the default n * (max polynomial degree) + 1; the search cost grows
  /// exponentially with depth.
  int max_bracket_depth = 0;
  /// Brackets whose components exceed this degree abort the computation.
  int max_degree = 64;
};

struct GrowthResult {
  GrowthVector growth;
  WeightVector weights;
};

/// Bracket flag evaluated at p and the weights assigned from it. Weights are
/// matched to coordinates by their nonholonomic orders; when the coordinates
/// are privileged the two agree exactly. Throws RankConditionFailure.
GrowthResult growth_vector(const Frame& frame, std::span<const Rational> p, const GrowthOptions& options = {});
GrowthResult growth_vector(const Frame& frame, const GrowthOptions& options = {});

/// Nonholonomic order at p of each coordinate function x_j - p_j: the least
/// s >= 1 such that some X_{i_1}...X_{i_s}(x_j) is nonzero at p. Searched up
/// to max_length derivations.
std::vector<Order> coordinate_orders(const Frame& frame, std::span<const Rational> p, int max_length);

/// True iff every coordinate has order exactly w_j at p and w is the weight
/// vector of the growth flag at p.
bool check_privileged(const Frame& frame, std::span<const Rational> p, const WeightVector& w,
                      const GrowthOptions& options = {});

} // namespace ars

#endif
