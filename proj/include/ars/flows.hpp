#ifndef ARS_FLOWS_HPP
#define ARS_FLOWS_HPP

#include "ars/grading.hpp"
#include "ars/vector_field.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace ars {

struct LieSeriesFlow {
  RationalVector endpoint;
  /// Highest power of t included.
  int order = 0;
  /// True when X^s x_j vanished for every coordinate, so the endpoint is exact.
  bool terminated = false;
  /// Largest |t^s/s! X^s x_j (p)| over coordinates for the first omitted s
  /// (0 when terminated).
  double tail_estimate = 0.0;
};

/// Flow of a triangular field by its exponential series
/// x_j(t) = sum_s t^s/s! (X^s x_j)(p). Fields whose monomials all have order
/// <= -1 terminate by s = w_j; others are cut at truncation_order unless
/// the series happens to terminate. Throws NonTriangularField.
LieSeriesFlow lie_series_flow(const VectorField& x, std::span<const Rational> p, const Rational& t,
                              const WeightVector& w, int truncation_order = 40);

/// Dilation delta_lambda: coordinate j scaled by lambda^{w_j}.
RationalVector dilate(std::span<const Rational> p, const Rational& lambda, const WeightVector& w);

enum class FlowMethod { lie_series, rk4 };

struct FlowResult {
  std::vector<double> endpoint;
  FlowMethod method = FlowMethod::rk4;
  int steps = 0;
  /// Escape in finite time: non-finite state, or the magnitude bound crossed
  /// while |f(x)|/|x| exceeds the rate bound.
  bool blowup = false;
  /// Magnitude bound crossed with a bounded growth rate (at most exponential
  /// growth); integration stops there without a blowup.
  bool saturated = false;
  /// Time actually reached (equals t unless integration stopped early).
  double time_reached = 0.0;
};

struct Rk4Options {
  double magnitude_bound = 1e12;
  double rate_bound = 1e6;
};

/// Classical fixed-step fourth-order Runge-Kutta.
FlowResult rk4_flow(const VectorField& x, std::span<const double> p, double t, int steps,
                    const Rk4Options& options = {});

struct ProbeReport {
  int runs = 0;
  int blowups = 0;
  int saturated = 0;
  bool triangular = false;
  std::vector<std::vector<double>> blowup_starts;
};

/// Integrates from `trials` seeded random starts in [-1,1]^n forward and
/// backward over the horizon and counts blowups.
ProbeReport completeness_probe(const VectorField& x, const WeightVector& w, double horizon, int trials,
                               std::uint64_t seed, int steps = 2000, const Rk4Options& options = {});

} // namespace ars

#endif
