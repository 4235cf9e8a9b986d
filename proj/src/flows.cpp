#include "ars/flows.hpp"

#include "ars/approx.hpp"
#include "ars/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace ars {

namespace {

bool strictly_negative_order(const VectorField& x, const WeightVector& w) {
  const auto orders = homogeneous_orders(x, w);
  return orders.empty() || orders.back() <= -1;
}

} // namespace

LieSeriesFlow lie_series_flow(const VectorField& x, std::span<const Rational> p, const Rational& t,
                              const WeightVector& w, int truncation_order) {
  const std::size_t n = x.dim();
  if (p.size() != n || w.size() != n)
    throw DimensionMismatch("lie_series_flow: point or weights have wrong dimension");
  if (!check_triangular_complete(x, w))
    throw NonTriangularField("field is not triangular for these weights; its flow may not be polynomial");
  const bool nilpotent = strictly_negative_order(x, w);

  LieSeriesFlow out;
  out.endpoint.assign(n, Rational(0));
  out.terminated = true;
  for (std::size_t j = 0; j < n; ++j) {
    Polynomial term = Polynomial::variable(n, j);
    Rational factor(1); // t^s / s!
    int s = 0;
    while (!term.is_zero()) {
      if (s > truncation_order) {
        out.terminated = false;
        out.tail_estimate = std::max(out.tail_estimate, std::abs(Rational(factor * term.evaluate(p)).get_d()));
        break;
      }
      out.endpoint[j] += factor * term.evaluate(p);
      out.order = std::max(out.order, s);
      term = vf_apply(x, term);
      ++s;
      factor *= t;
      factor /= s;
      if (nilpotent && s > w[j] && !term.is_zero())
        throw std::logic_error("Lie series of an order -1 triangular field failed to terminate");
    }
  }
  return out;
}

RationalVector dilate(std::span<const Rational> p, const Rational& lambda, const WeightVector& w) {
  RationalVector out(p.begin(), p.end());
  for (std::size_t j = 0; j < out.size(); ++j)
    for (int k = 0; k < w[j]; ++k)
      out[j] *= lambda;
  return out;
}

namespace {

// Double-precision copy of a vector field for fast repeated evaluation.
class CompiledField {
public:
  explicit CompiledField(const VectorField& x) : comps_(x.dim()) {
    for (std::size_t j = 0; j < x.dim(); ++j)
      for (const auto& [e, c] : x[j].terms()) {
        Term t{c.get_d(), {}};
        for (std::size_t v = 0; v < e.size(); ++v)
          if (e[v] != 0)
            t.powers.emplace_back(v, e[v]);
        comps_[j].push_back(std::move(t));
      }
  }

  void eval(const std::vector<double>& x, std::vector<double>& out) const {
    for (std::size_t j = 0; j < comps_.size(); ++j) {
      double sum = 0.0;
      for (const auto& t : comps_[j]) {
        double v = t.coeff;
        for (const auto& [var, pw] : t.powers)
          for (unsigned k = 0; k < pw; ++k)
            v *= x[var];
        sum += v;
      }
      out[j] = sum;
    }
  }

private:
  struct Term {
    double coeff;
    std::vector<std::pair<std::size_t, unsigned>> powers;
  };
  std::vector<std::vector<Term>> comps_;
};

double sup_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v)
    m = std::max(m, std::abs(x));
  return m;
}

bool finite(const std::vector<double>& v) {
  return std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); });
}

FlowResult integrate(const CompiledField& f, std::span<const double> p, double t, int steps,
                     const Rk4Options& options) {
  if (steps < 1)
    throw std::invalid_argument("rk4_flow needs at least one step");
  const std::size_t n = p.size();
  FlowResult out;
  out.method = FlowMethod::rk4;
  out.steps = steps;
  std::vector<double> x(p.begin(), p.end());
  std::vector<double> k1(n), k2(n), k3(n), k4(n), tmp(n);
  const double h = t / steps;
  for (int i = 0; i < steps; ++i) {
    f.eval(x, k1);
    for (std::size_t j = 0; j < n; ++j)
      tmp[j] = x[j] + 0.5 * h * k1[j];
    f.eval(tmp, k2);
    for (std::size_t j = 0; j < n; ++j)
      tmp[j] = x[j] + 0.5 * h * k2[j];
    f.eval(tmp, k3);
    for (std::size_t j = 0; j < n; ++j)
      tmp[j] = x[j] + h * k3[j];
    f.eval(tmp, k4);
    for (std::size_t j = 0; j < n; ++j)
      x[j] += h / 6.0 * (k1[j] + 2.0 * k2[j] + 2.0 * k3[j] + k4[j]);
    out.time_reached = h * (i + 1);
    if (!finite(x)) {
      out.blowup = true;
      break;
    }
    const double size = sup_norm(x);
    if (size > options.magnitude_bound) {
      f.eval(x, k1);
      const double rate = sup_norm(k1) / size;
      if (!std::isfinite(rate) || rate > options.rate_bound)
        out.blowup = true;
      else
        out.saturated = true;
      break;
    }
  }
  out.endpoint = std::move(x);
  return out;
}

} // namespace

FlowResult rk4_flow(const VectorField& x, std::span<const double> p, double t, int steps, const Rk4Options& options) {
  if (p.size() != x.dim())
    throw DimensionMismatch("rk4_flow: point has wrong dimension");
  return integrate(CompiledField(x), p, t, steps, options);
}

ProbeReport completeness_probe(const VectorField& x, const WeightVector& w, double horizon, int trials,
                               std::uint64_t seed, int steps, const Rk4Options& options) {
  if (trials < 1)
    throw std::invalid_argument("completeness_probe needs at least one trial");
  const std::size_t n = x.dim();
  ProbeReport report;
  report.triangular = check_triangular_complete(x, w);
  const CompiledField f(x);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<double> start(n);
    for (auto& s : start)
      s = unit(rng);
    for (double direction : {1.0, -1.0}) {
      const FlowResult r = integrate(f, start, direction * horizon, steps, options);
      ++report.runs;
      if (r.blowup) {
        ++report.blowups;
        report.blowup_starts.push_back(start);
      }
      if (r.saturated)
        ++report.saturated;
    }
  }
  return report;
}

} // namespace ars
