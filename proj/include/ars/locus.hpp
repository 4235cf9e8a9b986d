#ifndef ARS_LOCUS_HPP
#define ARS_LOCUS_HPP

#include "ars/frame.hpp"

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

namespace ars {

/// det of the matrix whose columns are the frame fields; its zero set is the
/// singular locus Z.
Polynomial frame_determinant(const Frame& frame);

/// n minus the rank of the frame at p.
int corank_at(const Frame& frame, std::span<const Rational> p);

/// Whether det has nonzero gradient at p. Throws NotOnZ1 unless corank is 1.
bool det_submersion_check(const Frame& frame, std::span<const Rational> p);

/// Whether the frame at p lies in the kernel of grad det (for corank 1 this
/// means Delta_p = T_p Z_1). Throws NotOnZ1 or DegenerateZ1.
bool tangency_check(const Frame& frame, std::span<const Rational> p);

/// Seeded generator of rational points num/den with |num| <= numerator_range
/// and 1 <= den <= max_denominator. Coordinates set in `fixed` are held constant.
struct PointSampler {
  std::uint64_t seed = 0;
  int numerator_range = 12;
  int max_denominator = 4;
  std::vector<std::optional<Rational>> fixed;
};

struct StratumReport {
  int r = 0;
  std::size_t sample_count = 0;
  /// Random samples with corank r.
  std::size_t hits = 0;
  /// Exact rational points on det = 0 found along random lines, with corank r.
  std::size_t line_hits = 0;
  /// A few of the points found, for inspection.
  std::vector<RationalVector> examples;
  std::optional<int> estimated_codim;
  int predicted_codim = 0;
};

struct Stratification {
  std::vector<StratumReport> strata;
  std::size_t lines = 0;
  /// Real roots of det along lines that are not rational; located in
  /// floating point only and not assigned to a stratum.
  std::size_t approximate_roots = 0;
};

/// Corank histogram over `budget` sampled points plus exact rational roots of
/// det restricted to budget/10 (at least one) random rational lines.
Stratification stratify_samples(const Frame& frame, const PointSampler& sampler, std::size_t budget);

/// Codimension of corank-r matrices in M(rows, cols): (rows-q+r)(cols-q+r), q = min(rows, cols).
int corank_codimension(int rows, int cols, int r);

struct TangencyClass {
  int s = 0;
  bool empty = false; // s^2 > r
  int lower = 0;      // r^2 + r - floor((r - s^2)/(s - 1))
  int upper = 0;      // r^2 + r + floor((r - s^2)/(s + 1))
  bool submanifold = false;
};

struct StratumFormula {
  int r = 0;
  int codim = 0;
  /// Largest dimension of T_p Z_r + Delta_p: min(n, 2n - r^2 - r).
  int max_span = 0;
  /// Dimension count n >= r^2 + r allowing T_p Z_r to be transverse to Delta_p.
  bool transversality_possible = false;
  /// r = 1: codimension of the tangential points inside Z_1.
  std::optional<int> tangential_codim_in_z1;
  /// r >= 2: the s = 1 set is a submanifold once n >= r^2 + r - floor((r-1)/2).
  std::optional<int> s1_threshold;
  bool s1_submanifold = false;
  std::vector<TangencyClass> higher;
};

struct GenericityTable {
  int n = 0;
  int max_corank = 0; // largest R with R^2 <= n
  std::vector<StratumFormula> strata;
};

GenericityTable genericity_codims(int n);

} // namespace ars

#endif
