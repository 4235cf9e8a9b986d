#include "ars/grading.hpp"

#include "ars/errors.hpp"

#include <algorithm>
#include <set>

namespace ars {

WeightVector::WeightVector(std::vector<int> weights) : w_(std::move(weights)) {
  for (int x : w_)
    if (x < 1)
      throw std::invalid_argument("weights must be positive integers");
}

int WeightVector::step() const { return w_.empty() ? 0 : *std::max_element(w_.begin(), w_.end()); }

int weighted_degree(const Exponent& e, const WeightVector& w) {
  if (e.size() != w.size())
    throw DimensionMismatch("weight vector has wrong length");
  int d = 0;
  for (std::size_t j = 0; j < e.size(); ++j)
    d += static_cast<int>(e[j]) * w[j];
  return d;
}

Order weighted_valuation(const Polynomial& f, const WeightVector& w) {
  Order best;
  for (const auto& [e, c] : f.terms()) {
    const int d = weighted_degree(e, w);
    if (!best || d < *best)
      best = d;
  }
  return best;
}

Order nonholonomic_order_vf(const VectorField& x, const WeightVector& w) {
  if (x.dim() != w.size())
    throw DimensionMismatch("weight vector has wrong length");
  Order best;
  for (std::size_t j = 0; j < x.dim(); ++j) {
    const Order v = weighted_valuation(x[j], w);
    if (v && (!best || *v - w[j] < *best))
      best = *v - w[j];
  }
  return best;
}

VectorField homogeneous_component(const VectorField& x, int s, const WeightVector& w) {
  if (x.dim() != w.size())
    throw DimensionMismatch("weight vector has wrong length");
  VectorField out(x.dim());
  for (std::size_t j = 0; j < x.dim(); ++j)
    for (const auto& [e, c] : x[j].terms())
      if (weighted_degree(e, w) == w[j] + s)
        out[j].add_term(e, c);
  return out;
}

std::vector<int> homogeneous_orders(const VectorField& x, const WeightVector& w) {
  if (x.dim() != w.size())
    throw DimensionMismatch("weight vector has wrong length");
  std::set<int> orders;
  for (std::size_t j = 0; j < x.dim(); ++j)
    for (const auto& [e, c] : x[j].terms())
      orders.insert(weighted_degree(e, w) - w[j]);
  return {orders.begin(), orders.end()};
}

bool is_homogeneous(const VectorField& x, const WeightVector& w) { return homogeneous_orders(x, w).size() <= 1; }

namespace {

int default_depth(const Frame& frame) {
  int maxdeg = 1;
  for (const auto& x : frame.fields())
    maxdeg = std::max(maxdeg, x.total_degree());
  return static_cast<int>(frame.dim()) * maxdeg + 1;
}

VectorField truncated(const VectorField& x, int order) {
  std::vector<Polynomial> comps;
  for (const auto& c : x.components()) {
    Polynomial t(c.dim());
    for (const auto& [e, q] : c.terms())
      if (total_degree(e) <= static_cast<unsigned>(std::max(order, 0)))
        t.add_term(e, q);
    comps.push_back(std::move(t));
  }
  return VectorField(std::move(comps));
}

RationalVector constant_part(const VectorField& x) {
  RationalVector v;
  for (const auto& c : x.components())
    v.push_back(c.coefficient(Exponent(x.dim(), 0)));
  return v;
}

void check_degree(const VectorField& x, int max_degree) {
  if (x.total_degree() > max_degree)
    throw DegreeBoundExceeded("bracket degree " + std::to_string(x.total_degree()) + " exceeds the cap of " +
                              std::to_string(max_degree));
}

} // namespace

GrowthResult growth_vector(const Frame& frame, std::span<const Rational> p, const GrowthOptions& options) {
  const std::size_t n = frame.dim();
  if (p.size() != n)
    throw DimensionMismatch("growth_vector: point has wrong dimension");
  const int depth = options.max_bracket_depth > 0 ? options.max_bracket_depth : default_depth(frame);

  // Work at the origin of coordinates centred at p. A bracket of length s is
  // bracketed at most depth - s more times, and its value after r further
  // brackets depends only on its r-jet, so each level keeps (depth - s)-jets.
  std::vector<VectorField> generators;
  for (const auto& x : frame.fields()) {
    std::vector<Polynomial> comps;
    for (const auto& c : x.components())
      comps.push_back(c.shifted(p));
    generators.emplace_back(std::move(comps));
  }

  std::vector<VectorField> kept; // jets of every independent bracket so far
  std::vector<RationalVector> values;
  GrowthVector growth;

  const auto admit = [&](std::vector<VectorField> candidates, int order) {
    VectorFieldSpan span(n, false);
    for (const auto& k : kept)
      span.insert(truncated(k, order));
    std::vector<VectorField> fresh;
    for (auto& c : candidates) {
      VectorField jet = truncated(c, order);
      if (!jet.is_zero() && span.insert(jet)) {
        values.push_back(constant_part(jet));
        kept.push_back(jet);
        fresh.push_back(std::move(jet));
      }
    }
    return fresh;
  };

  std::vector<VectorField> level = admit(generators, depth - 1);
  std::size_t current = values.empty() ? 0 : rank(RationalMatrix::from_rows(values, n));
  growth.dims.push_back(current);

  for (int s = 2; current < n; ++s) {
    if (s > depth)
      throw RankConditionFailure("rank condition not reached within bracket depth " + std::to_string(depth) +
                                 " (flag dimension " + std::to_string(current) + " of " + std::to_string(n) + ")");
    // New brackets of length s only need the elements that were new at length s-1.
    std::vector<VectorField> candidates;
    for (const auto& y : level)
      for (const auto& x : generators) {
        VectorField b = lie_bracket(x, y);
        check_degree(b, options.max_degree);
        candidates.push_back(std::move(b));
      }
    level = admit(std::move(candidates), depth - s);
    if (level.empty())
      throw RankConditionFailure("bracket flag stabilizes at dimension " + std::to_string(current) + " < " +
                                 std::to_string(n));
    current = rank(RationalMatrix::from_rows(values, n));
    growth.dims.push_back(current);
  }
  growth.step = static_cast<int>(growth.dims.size());

  std::vector<int> candidate;
  std::size_t previous = 0;
  for (std::size_t s = 0; s < growth.dims.size(); ++s) {
    candidate.insert(candidate.end(), growth.dims[s] - previous, static_cast<int>(s + 1));
    previous = growth.dims[s];
  }

  // Match the candidate multiset to coordinates ordered by their nonholonomic order.
  const auto orders = coordinate_orders(frame, p, growth.step);
  std::vector<std::size_t> idx(n);
  for (std::size_t j = 0; j < n; ++j)
    idx[j] = j;
  const auto key = [&](std::size_t j) { return orders[j] ? *orders[j] : growth.step + 1; };
  std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return key(a) < key(b); });
  std::vector<int> weights(n);
  for (std::size_t r = 0; r < n; ++r)
    weights[idx[r]] = candidate[r];
  return {growth, WeightVector(std::move(weights))};
}

GrowthResult growth_vector(const Frame& frame, const GrowthOptions& options) {
  return growth_vector(frame, frame.base_point(), options);
}

std::vector<Order> coordinate_orders(const Frame& frame, std::span<const Rational> p, int max_length) {
  const std::size_t n = frame.dim();
  if (p.size() != n)
    throw DimensionMismatch("coordinate_orders: point has wrong dimension");
  std::vector<Order> orders(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Polynomial> level{Polynomial::variable(n, j)};
    for (int s = 1; s <= max_length && !level.empty(); ++s) {
      SparseEchelon<Exponent, GrlexLess> span;
      std::vector<Polynomial> next;
      bool nonzero = false;
      for (const auto& f : level)
        for (const auto& x : frame.fields()) {
          Polynomial g = vf_apply(x, f);
          if (span.insert({g.terms().begin(), g.terms().end()})) {
            nonzero = nonzero || !is_zero(g.evaluate(p));
            next.push_back(std::move(g));
          }
        }
      if (nonzero) {
        orders[j] = s;
        break;
      }
      level = std::move(next);
    }
  }
  return orders;
}

bool check_privileged(const Frame& frame, std::span<const Rational> p, const WeightVector& w,
                      const GrowthOptions& options) {
  if (w.size() != frame.dim())
    return false;
  const auto grown = growth_vector(frame, p, options);
  auto expected = grown.weights.values();
  auto given = w.values();
  std::sort(expected.begin(), expected.end());
  std::sort(given.begin(), given.end());
  if (expected != given)
    return false;
  const auto orders = coordinate_orders(frame, p, w.step());
  for (std::size_t j = 0; j < w.size(); ++j)
    if (!orders[j] || *orders[j] != w[j])
      return false;
  return true;
}

} // namespace ars
