#include "ars/locus.hpp"

#include "ars/errors.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace ars {

Polynomial frame_determinant(const Frame& frame) { return fields_determinant(frame.fields()); }

int corank_at(const Frame& frame, std::span<const Rational> p) {
  return static_cast<int>(frame.dim()) - static_cast<int>(frame_rank_at(frame.fields(), p));
}

namespace {

RationalVector gradient_at(const Polynomial& f, std::span<const Rational> p) {
  RationalVector g;
  for (std::size_t j = 0; j < f.dim(); ++j)
    g.push_back(f.derivative(j).evaluate(p));
  return g;
}

bool all_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& q) { return is_zero(q); });
}

void require_z1(const Frame& frame, std::span<const Rational> p) {
  if (p.size() != frame.dim())
    throw DimensionMismatch("point has wrong dimension");
  const int r = corank_at(frame, p);
  if (r != 1)
    throw NotOnZ1("point has corank " + std::to_string(r) + ", not 1");
}

} // namespace

bool det_submersion_check(const Frame& frame, std::span<const Rational> p) {
  require_z1(frame, p);
  return !all_zero(gradient_at(frame_determinant(frame), p));
}

bool tangency_check(const Frame& frame, std::span<const Rational> p) {
  require_z1(frame, p);
  const RationalVector grad = gradient_at(frame_determinant(frame), p);
  if (all_zero(grad))
    throw DegenerateZ1("det is not a submersion at the point; Z_1 need not be a manifold there");
  for (const auto& x : frame.fields()) {
    const RationalVector v = vf_eval(x, p);
    Rational dot(0);
    for (std::size_t j = 0; j < v.size(); ++j)
      dot += grad[j] * v[j];
    if (!is_zero(dot))
      return false;
  }
  return true;
}

namespace {

using Univariate = std::vector<Rational>; // coefficient of t^i at index i

Univariate mul(const Univariate& a, const Univariate& b) {
  Univariate out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      out[i + j] += a[i] * b[j];
  return out;
}

Univariate restrict_to_line(const Polynomial& f, const RationalVector& base, const RationalVector& dir) {
  Univariate out{Rational(0)};
  for (const auto& [e, c] : f.terms()) {
    Univariate term{c};
    for (std::size_t j = 0; j < e.size(); ++j)
      for (unsigned k = 0; k < e[j]; ++k)
        term = mul(term, Univariate{base[j], dir[j]});
    if (term.size() > out.size())
      out.resize(term.size());
    for (std::size_t i = 0; i < term.size(); ++i)
      out[i] += term[i];
  }
  while (out.size() > 1 && is_zero(out.back()))
    out.pop_back();
  return out;
}

Rational horner(const Univariate& f, const Rational& t) {
  Rational acc(0);
  for (auto it = f.rbegin(); it != f.rend(); ++it)
    acc = acc * t + *it;
  return acc;
}

double horner(const Univariate& f, double t) {
  double acc = 0.0;
  for (auto it = f.rbegin(); it != f.rend(); ++it)
    acc = acc * t + it->get_d();
  return acc;
}

// Positive divisors of |v|, or nothing if |v| is too large to factor by trial division.
std::optional<std::vector<Integer>> divisors(Integer v) {
  v = abs(v);
  if (v == 0 || v > Integer("1000000000000"))
    return std::nullopt;
  std::vector<Integer> small;
  std::vector<Integer> large;
  for (Integer d = 1; d * d <= v; ++d)
    if (v % d == 0) {
      small.push_back(d);
      if (d * d != v)
        large.push_back(v / d);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Distinct rational roots via the rational root theorem on the integer-scaled polynomial.
std::optional<std::vector<Rational>> rational_roots(Univariate f) {
  std::vector<Rational> roots;
  if (f.size() <= 1)
    return roots;
  std::size_t low = 0;
  while (low < f.size() && is_zero(f[low]))
    ++low;
  if (low > 0) {
    roots.push_back(Rational(0));
    f.erase(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(low));
  }
  if (f.size() <= 1)
    return roots;
  Integer lcm = 1;
  for (const auto& c : f)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den().get_mpz_t());
  const Integer a0 = Rational(f.front() * lcm).get_num();
  const Integer an = Rational(f.back() * lcm).get_num();
  const auto ps = divisors(a0);
  const auto qs = divisors(an);
  if (!ps || !qs)
    return std::nullopt;
  std::set<Rational> found;
  for (const auto& p : *ps)
    for (const auto& q : *qs)
      for (int sign : {1, -1}) {
        const Rational t = make_rational(sign * p, q);
        if (!found.count(t) && is_zero(horner(f, t)))
          found.insert(t);
      }
  roots.insert(roots.end(), found.begin(), found.end());
  return roots;
}

// Sign changes of f on a grid over [-range, range], excluding the known rational roots.
std::size_t approximate_root_count(const Univariate& f, const std::vector<Rational>& exact, double range) {
  constexpr int kGrid = 4000;
  std::size_t count = 0;
  double prev_t = -range;
  double prev = horner(f, prev_t);
  for (int i = 1; i <= kGrid; ++i) {
    const double t = -range + 2.0 * range * i / kGrid;
    const double v = horner(f, t);
    if (prev != 0.0 && v != 0.0 && (prev < 0) != (v < 0)) {
      double lo = prev_t;
      double hi = t;
      for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        if ((horner(f, mid) < 0) == (prev < 0))
          lo = mid;
        else
          hi = mid;
      }
      const double root = 0.5 * (lo + hi);
      const bool known = std::any_of(exact.begin(), exact.end(),
                                     [&](const Rational& q) { return std::abs(q.get_d() - root) < 1e-9; });
      if (!known)
        ++count;
    }
    prev = v;
    prev_t = t;
  }
  return count;
}

RationalVector draw(const PointSampler& sampler, std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-sampler.numerator_range, sampler.numerator_range);
  std::uniform_int_distribution<int> den(1, std::max(1, sampler.max_denominator));
  RationalVector p(n);
  for (std::size_t j = 0; j < n; ++j) {
    const int a = num(rng);
    const int b = den(rng);
    if (j < sampler.fixed.size() && sampler.fixed[j])
      p[j] = *sampler.fixed[j];
    else
      p[j] = make_rational(a, b);
  }
  return p;
}

} // namespace

Stratification stratify_samples(const Frame& frame, const PointSampler& sampler, std::size_t budget) {
  if (budget < 1)
    throw std::invalid_argument("stratify_samples needs a positive budget");
  const std::size_t n = frame.dim();
  std::mt19937_64 rng(sampler.seed);
  std::vector<StratumReport> strata(n + 1);
  for (std::size_t r = 0; r <= n; ++r) {
    strata[r].r = static_cast<int>(r);
    strata[r].predicted_codim = static_cast<int>(r * r);
    strata[r].sample_count = budget;
  }
  constexpr std::size_t kExamples = 4;

  for (std::size_t i = 0; i < budget; ++i) {
    const RationalVector p = draw(sampler, n, rng);
    auto& s = strata[static_cast<std::size_t>(corank_at(frame, p))];
    ++s.hits;
    if (s.examples.size() < kExamples)
      s.examples.push_back(p);
  }

  Stratification out;
  const Polynomial det = frame_determinant(frame);
  const std::size_t lines = std::max<std::size_t>(1, budget / 10);
  out.lines = lines;
  PointSampler direction = sampler;
  for (auto& f : direction.fixed)
    if (f)
      f = Rational(0);
  for (std::size_t i = 0; i < lines; ++i) {
    const RationalVector base = draw(sampler, n, rng);
    const RationalVector dir = draw(direction, n, rng);
    const Univariate restricted = restrict_to_line(det, base, dir);
    if (restricted.size() <= 1)
      continue; // det constant along the line, possibly identically zero
    const auto roots = rational_roots(restricted);
    const std::vector<Rational> exact = roots ? *roots : std::vector<Rational>{};
    for (const auto& t : exact) {
      RationalVector p(n);
      for (std::size_t j = 0; j < n; ++j)
        p[j] = base[j] + t * dir[j];
      auto& s = strata[static_cast<std::size_t>(corank_at(frame, p))];
      ++s.line_hits;
      if (s.examples.size() < kExamples)
        s.examples.push_back(p);
    }
    out.approximate_roots += approximate_root_count(restricted, exact, 4.0 * sampler.numerator_range);
  }

  for (auto& s : strata) {
    if (s.r == 0 && s.hits > 0)
      s.estimated_codim = 0;
    else if (s.r == 1 && s.line_hits > 0)
      s.estimated_codim = 1;
  }
  strata.erase(std::remove_if(strata.begin(), strata.end(),
                              [](const StratumReport& s) { return s.r > 0 && s.hits == 0 && s.line_hits == 0; }),
               strata.end());
  out.strata = std::move(strata);
  return out;
}

int corank_codimension(int rows, int cols, int r) {
  const int q = std::min(rows, cols);
  return (rows - q + r) * (cols - q + r);
}

namespace {
int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}
} // namespace

GenericityTable genericity_codims(int n) {
  if (n < 2)
    throw std::invalid_argument("genericity_codims needs n >= 2");
  GenericityTable table;
  table.n = n;
  while ((table.max_corank + 1) * (table.max_corank + 1) <= n)
    ++table.max_corank;
  for (int r = 1; r <= table.max_corank; ++r) {
    StratumFormula f;
    f.r = r;
    f.codim = corank_codimension(n, n, r);
    f.max_span = std::min(n, 2 * n - r * r - r);
    f.transversality_possible = n >= r * r + r;
    if (r == 1) {
      f.tangential_codim_in_z1 = n - 1;
    } else {
      f.s1_threshold = r * r + r - floor_div(r - 1, 2);
      f.s1_submanifold = n >= *f.s1_threshold;
      for (int s = 2; s <= f.max_span; ++s) {
        TangencyClass c;
        c.s = s;
        c.empty = s * s > r;
        if (!c.empty) {
          c.lower = r * r + r - floor_div(r - s * s, s - 1);
          c.upper = r * r + r + floor_div(r - s * s, s + 1);
          c.submanifold = c.lower <= n && n <= c.upper;
        }
        f.higher.push_back(c);
      }
    }
    table.strata.push_back(std::move(f));
  }
  return table;
}

} // namespace ars
