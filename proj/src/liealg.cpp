#include "ars/liealg.hpp"

#include "ars/errors.hpp"

#include <algorithm>
#include <map>

namespace ars {

LieBasis::LieBasis(std::size_t dim, std::vector<VectorField> basis) : dim_(dim), basis_(std::move(basis)), span_(dim) {
  for (const auto& b : basis_)
    if (!span_.insert(b))
      throw std::invalid_argument("LieBasis elements are linearly dependent");
  const std::size_t d = basis_.size();
  structure_.resize(d * d);
  for (std::size_t i = 0; i < d; ++i) {
    structure_[i * d + i] = RationalVector(d);
    for (std::size_t j = i + 1; j < d; ++j) {
      auto coords = span_.coordinates(lie_bracket(basis_[i], basis_[j]));
      if (!coords)
        throw std::invalid_argument("LieBasis is not closed under the bracket");
      RationalVector neg = *coords;
      for (auto& c : neg)
        c = -c;
      structure_[i * d + j] = std::move(*coords);
      structure_[j * d + i] = std::move(neg);
    }
  }
}

RationalVector LieBasis::bracket(const RationalVector& u, const RationalVector& v) const {
  const std::size_t d = basis_.size();
  RationalVector out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (is_zero(u[i]))
      continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (is_zero(v[j]))
        continue;
      const Rational f = u[i] * v[j];
      const auto& c = structure(i, j);
      for (std::size_t k = 0; k < d; ++k)
        if (!is_zero(c[k]))
          out[k] += f * c[k];
    }
  }
  return out;
}

VectorField LieBasis::element(const RationalVector& coords) const {
  VectorField out(dim_);
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (!is_zero(coords[i]))
      out += coords[i] * basis_[i];
  return out;
}

namespace {

// Scales x so its largest coefficient key has coefficient 1; keeps printed bases readable.
VectorField monic(VectorField x) {
  const FieldCoefficients c = coefficients(x);
  if (!c.empty())
    x *= Rational(1) / c.rbegin()->second;
  return x;
}

} // namespace

LieBasis lie_closure(std::span<const VectorField> generators, const ClosureOptions& options) {
  if (generators.empty())
    throw std::invalid_argument("lie_closure needs at least one generator");
  const std::size_t n = generators.front().dim();
  VectorFieldSpan span(n, false);
  std::vector<VectorField> gens;
  for (const auto& g : generators) {
    if (g.dim() != n)
      throw DimensionMismatch("generators have different dimensions");
    if (span.insert(g))
      gens.push_back(g);
  }
  std::vector<VectorField> level = gens;
  while (!level.empty()) {
    std::vector<VectorField> next;
    for (const auto& w : level)
      for (const auto& g : gens) {
        VectorField b = monic(lie_bracket(g, w));
        if (options.max_degree >= 0 && b.total_degree() > options.max_degree)
          throw DegreeBoundExceeded("bracket of degree " + std::to_string(b.total_degree()) +
                                    " exceeds the bound " + std::to_string(options.max_degree));
        if (span.insert(b))
          next.push_back(std::move(b));
      }
    level = std::move(next);
  }
  return LieBasis(n, span.basis());
}

LieBasis ideal_closure(const LieBasis& algebra, std::span<const VectorField> generators) {
  const std::size_t n = algebra.ambient_dim();
  VectorFieldSpan span(n, false);
  std::vector<VectorField> pending;
  for (const auto& g : generators) {
    if (!algebra.contains(g))
      throw std::invalid_argument("ideal generator is not in the algebra");
    if (span.insert(g))
      pending.push_back(g);
  }
  while (!pending.empty()) {
    std::vector<VectorField> next;
    for (const auto& g : pending)
      for (const auto& b : algebra.basis()) {
        VectorField c = monic(lie_bracket(b, g));
        if (span.insert(c))
          next.push_back(std::move(c));
      }
    pending = std::move(next);
  }
  return LieBasis(n, span.basis());
}

namespace {

using Subspace = std::vector<RationalVector>;

Subspace bracket_spaces(const LieBasis& algebra, const Subspace& u, const Subspace& v) {
  Subspace rows;
  for (const auto& a : u)
    for (const auto& b : v)
      rows.push_back(algebra.bracket(a, b));
  return row_reduce(std::move(rows), algebra.size());
}

Subspace whole(const LieBasis& algebra) {
  Subspace rows;
  const std::size_t d = algebra.size();
  for (std::size_t i = 0; i < d; ++i) {
    RationalVector e(d);
    e[i] = 1;
    rows.push_back(std::move(e));
  }
  return rows;
}

} // namespace

std::optional<int> nilpotent_step(const LieBasis& algebra) {
  if (algebra.size() == 0)
    return 0;
  const Subspace all = whole(algebra);
  Subspace current = all;
  for (int step = 1;; ++step) {
    Subspace next = bracket_spaces(algebra, all, current);
    if (next.empty())
      return step;
    if (next.size() == current.size())
      return std::nullopt;
    current = std::move(next);
  }
}

bool is_solvable(const LieBasis& algebra) {
  Subspace current = whole(algebra);
  while (!current.empty()) {
    Subspace next = bracket_spaces(algebra, current, current);
    if (next.size() == current.size())
      return false;
    current = std::move(next);
  }
  return true;
}

RationalMatrix adjoint_matrix(const VectorField& x, const LieBasis& g) {
  const std::size_t d = g.size();
  RationalMatrix out(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    const auto coords = g.coordinates(lie_bracket(x, g[j]));
    if (!coords)
      throw NotInvariant("field does not normalise the subalgebra: bracket with basis element " +
                         std::to_string(j) + " leaves its span");
    for (std::size_t i = 0; i < d; ++i)
      out(i, j) = (*coords)[i];
  }
  return out;
}

bool rank_condition_at_zero(const LieBasis& g, std::span<const Rational> point) {
  return frame_rank_at(g.basis(), point) == g.ambient_dim();
}

std::vector<VectorField> graded_frame(const LieBasis& g, const WeightVector& w) {
  const std::size_t n = g.ambient_dim();
  if (w.size() != n)
    throw DimensionMismatch("weight vector has wrong length");

  std::map<int, std::vector<VectorField>> by_order;
  for (const auto& b : g.basis())
    for (int s : homogeneous_orders(b, w)) {
      VectorField part = homogeneous_component(b, s, w);
      if (!g.contains(part))
        throw GradedFrameUnavailable("algebra is not spanned by homogeneous elements");
      by_order[s].push_back(std::move(part));
    }

  const RationalVector origin(n, Rational(0));
  std::vector<std::optional<VectorField>> frame(n);
  std::vector<int> levels = w.values();
  std::sort(levels.begin(), levels.end());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  for (int v : levels) {
    std::vector<std::size_t> coords;
    for (std::size_t j = 0; j < n; ++j)
      if (w[j] == v)
        coords.push_back(j);
    // Reduce the order -v elements by their values on the weight-v coordinates.
    std::vector<std::pair<RationalVector, VectorField>> rows;
    for (const auto& y : by_order[-v]) {
      const RationalVector value = vf_eval(y, origin);
      RationalVector restricted;
      for (std::size_t j : coords)
        restricted.push_back(value[j]);
      rows.emplace_back(std::move(restricted), y);
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < coords.size(); ++c) {
      std::size_t pivot = r;
      while (pivot < rows.size() && is_zero(rows[pivot].first[c]))
        ++pivot;
      if (pivot == rows.size())
        throw GradedFrameUnavailable("no homogeneous element of order " + std::to_string(-v) +
                                     " is transverse at 0 along coordinate " + std::to_string(coords[c] + 1));
      std::swap(rows[pivot], rows[r]);
      const Rational lead = rows[r].first[c];
      for (auto& x : rows[r].first)
        x /= lead;
      rows[r].second *= Rational(1) / lead;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == r || is_zero(rows[i].first[c]))
          continue;
        const Rational f = rows[i].first[c];
        for (std::size_t t = 0; t < coords.size(); ++t)
          rows[i].first[t] -= f * rows[r].first[t];
        rows[i].second -= f * rows[r].second;
      }
      ++r;
    }
    for (std::size_t c = 0; c < coords.size(); ++c)
      frame[coords[c]] = rows[c].second;
  }

  std::vector<VectorField> out;
  for (auto& y : frame)
    out.push_back(std::move(*y));
  return out;
}

std::string to_string(FieldLabel label) {
  switch (label) {
  case FieldLabel::invariant:
    return "invariant";
  case FieldLabel::linear:
    return "linear";
  case FieldLabel::affine:
    return "affine";
  }
  return "unknown";
}

Classification classify_fields(const ApproximationSet& approx, const LieBasis& algebra, const LieBasis& ideal) {
  if (approx.degenerate)
    throw DegenerateApproximation("cannot classify a degenerate approximation");
  const auto fields = approx.fields();
  const auto k = static_cast<std::size_t>(approx.k);
  const auto m = static_cast<std::size_t>(approx.m);

  Classification out;
  out.k = approx.k;
  out.m = approx.m;
  out.lie_dim = algebra.size();
  out.ideal_dim = ideal.size();
  out.g_nilpotent_step = nilpotent_step(ideal);
  out.l_solvable = is_solvable(algebra);

  std::vector<std::size_t> hats_in_g;
  std::vector<std::size_t> hats_outside;
  std::vector<std::size_t> tildes;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (ideal.contains(fields[i])) {
      out.labels.push_back(FieldLabel::invariant);
      if (i >= k && i < m)
        hats_in_g.push_back(i);
      else if (i >= m)
        tildes.push_back(i);
      continue;
    }
    if (i < k)
      throw std::logic_error("a field nonvanishing at the base point lies outside the ideal");
    (void)adjoint_matrix(fields[i], ideal);
    bool affine = false;
    if (i < m && approx.transform.rows() == fields.size())
      for (std::size_t s = 0; s < k; ++s)
        affine = affine || !is_zero(approx.transform(i, approx.source.at(s)));
    out.labels.push_back(affine ? FieldLabel::affine : FieldLabel::linear);
    (i < m ? hats_outside : tildes).push_back(i);
  }
  out.l = approx.k + static_cast<int>(hats_in_g.size());
  for (std::size_t i = 0; i < k; ++i)
    out.order.push_back(i);
  out.order.insert(out.order.end(), hats_in_g.begin(), hats_in_g.end());
  out.order.insert(out.order.end(), hats_outside.begin(), hats_outside.end());
  out.order.insert(out.order.end(), tildes.begin(), tildes.end());
  return out;
}

} // namespace ars
