// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fail.
#include "ars/analyze.hpp"
#include "ars/approx.hpp"
#include "ars/errors.hpp"
#include "ars/flows.hpp"
#include "ars/liealg.hpp"
#include "ars/locus.hpp"
#include "cli_runner.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "random_frames.hpp"

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>

using namespace ars;
using oracle::field;

namespace {

class Checks {
public:
  void expect(bool ok, const std::string& what) {
    if (!ok)
      failures_.push_back(what);
  }
  template <class Fn>
  void no_throw(const std::string& what, Fn&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      failures_.push_back(what + " threw: " + e.what());
    }
  }
  const std::vector<std::string>& failures() const { return failures_; }

private:
  std::vector<std::string> failures_;
};

bool same_span(const LieBasis& a, const std::vector<VectorField>& b) {
  if (a.size() != b.size())
    return false;
  for (const auto& x : b)
    if (!a.contains(x))
      return false;
  return true;
}

bool plus_or_minus(const Polynomial& p, const Polynomial& q) { return p == q || p == -q; }


const RationalVector& origin(std::size_t n) {
  static std::map<std::size_t, RationalVector> cache;
  auto [it, fresh] = cache.try_emplace(n, RationalVector(n, Rational(0)));
  return it->second;
}

// 1. First example.
void criterion1(Checks& c) {
  const Frame f = fixtures::frame("e1.ars");
  const auto& v = fixtures::e1_vars;
  const auto g = growth_vector(f);
  c.expect(g.weights == WeightVector({1, 2, 5}), "weights (1,2,5)");
  const WeightVector w({1, 2, 5});
  c.expect(check_privileged(f, origin(3), w), "privileged for (1,2,5)");
  for (std::size_t i = 0; i < 3; ++i)
    c.expect(nilpotent_approx(f[i], w) == f[i], "nilpotent approximation of X" + std::to_string(i + 1));
  const LieBasis l = lie_closure(f.fields());
  const std::vector<VectorField> nine{field(v, "d/dx"),   field(v, "x d/dy"), field(v, "y^2 d/dz"),
                                      field(v, "d/dy"),   field(v, "y d/dz"), field(v, "x d/dz"),
                                      field(v, "d/dz"),   field(v, "x y d/dz"), field(v, "x^2 d/dz")};
  c.expect(l.size() == 9 && same_span(l, nine), "closure of dimension 9 spanned by the listed fields");
  c.expect(oracle::brute_force_closure(f.fields()).size() == 9, "brute-force closure has dimension 9");
  const std::vector<VectorField> gens{f[0]};
  const LieBasis ideal = ideal_closure(l, gens);
  c.expect(same_span(ideal, {nine[0], nine[3], nine[4], nine[5], nine[6]}), "g = span{X1,X4,X5,X6,X7}");
  c.expect(oracle::brute_force_closure(gens, l.basis()).size() == 5, "brute-force ideal has dimension 5");
  c.expect(nonholonomic_order_vf(nine[7], w) == -2, "order of x y d/dz is -2");
  c.expect(nonholonomic_order_vf(nine[8], w) == -3, "order of x^2 d/dz is -3");
  const auto a = build_approximation(f, w);
  const auto cls = classify_fields(a, lie_closure(a.fields()), ideal_closure(lie_closure(a.fields()), gens));
  c.expect(cls.labels == std::vector<FieldLabel>{FieldLabel::invariant, FieldLabel::linear, FieldLabel::linear},
           "labels invariant, linear, linear");
  c.expect(plus_or_minus(frame_determinant(f), oracle::polynomial(v, "x y^2")), "determinant = +-x y^2");
}

// 2. Second example.
void criterion2(Checks& c) {
  const Frame f = fixtures::frame("e2.ars");
  const auto& v = fixtures::e2_vars;
  c.expect(growth_vector(f).weights == WeightVector({1, 1, 2, 2}), "weights (1,1,2,2)");
  const auto a = build_approximation(f, WeightVector({1, 1, 2, 2}));
  c.expect(a.k == 2, "k = 2");
  c.expect(lie_bracket(f[1], f[3]) == f[2], "[X2,X4] = X3");
  const LieBasis l = lie_closure(f.fields());
  const std::vector<VectorField> gens{f[0], f[1]};
  const LieBasis g = ideal_closure(l, gens);
  c.expect(g.contains(f[2]), "X3 in g");
  const std::vector<VectorField> basis{field(v, "d/dx"), field(v, "d/dy + x d/dz"), field(v, "y d/dw"),
                                       field(v, "d/dz"), field(v, "d/dw")};
  c.expect(g.size() == 5 && same_span(g, basis), "g = span{dx, dy + x dz, y dw, dz, dw}");
  const auto brute = oracle::brute_force_closure(gens, l.basis());
  bool agree = brute.size() == 5;
  for (const auto& b : basis)
    agree = agree && oracle::in_span(brute, b);
  c.expect(agree, "brute-force ideal closure agrees");
  c.expect(is_solvable(l), "L solvable");
  c.expect(plus_or_minus(frame_determinant(f), oracle::polynomial(v, "x y")), "determinant = +-x y");
}

// 3. Third example.
void criterion3(Checks& c) {
  const Frame f = fixtures::frame("e3.ars");
  const auto& v = fixtures::e3_vars;
  const WeightVector w({1, 1, 2, 1, 2});
  c.expect(growth_vector(f).weights == w, "weights (1,1,2,1,2)");
  const VectorField chi10 = lie_bracket(f[3], f[4]);
  c.expect(chi10 == field(v, "x d/dx - y d/dy"), "[X4,X5] = x dx - y dy");
  c.expect(lie_bracket(chi10, f[3]) == Rational(2) * f[3], "[chi10,X4] = 2 X4");
  c.expect(lie_bracket(chi10, f[4]) == Rational(-2) * f[4], "[chi10,X5] = -2 X5");
  const LieBasis l = lie_closure(f.fields());
  c.expect(!is_solvable(l), "L not solvable");
  const auto a = build_approximation(f, w);
  const LieBasis la = lie_closure(a.fields());
  const std::vector<VectorField> gens(a.hat_fields.begin(), a.hat_fields.begin() + a.k);
  const LieBasis g = ideal_closure(la, gens);
  c.expect(nilpotent_step(g).has_value(), "g nilpotent");
  c.expect(rank_condition_at_zero(g, origin(5)), "g full rank at 0");
  const Polynomial oracle_det = oracle::cofactor_determinant(f.fields());
  c.expect(frame_determinant(f) == oracle_det, "library determinant equals cofactor expansion");
  c.expect(plus_or_minus(oracle_det, oracle::polynomial(v, "1/2 x y^2 w")), "determinant = +-1/2 x y^2 w");
  oracle::FieldGenerator gen(3);
  int bad = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto p = gen.real_point(5, -2.0, 2.0);
    const double exact = oracle_det.evaluate(std::span<const double>(p));
    const double numeric = oracle::numeric_frame_determinant(f.fields(), p);
    if (std::abs(exact - numeric) > 1e-9 * std::max(std::abs(exact), std::abs(numeric)))
      ++bad;
  }
  c.expect(bad == 0, std::to_string(bad) + " of 10^4 numeric evaluations disagree beyond 1e-9");
}

// 4. Property suite.
void criterion4(Checks& c) {
  constexpr int kCases = 200;
  oracle::FieldGenerator gen(41);
  int jacobi = 0, additive = 0, recon = 0;
  for (int i = 0; i < kCases; ++i) {
    const std::size_t n = gen.dim();
    const VectorField a = gen.vector_field(n, 3), b = gen.vector_field(n, 3), d = gen.vector_field(n, 3);
    jacobi += (lie_bracket(a, lie_bracket(b, d)) + lie_bracket(b, lie_bracket(d, a)) + lie_bracket(d, lie_bracket(a, b)))
                  .is_zero();
    const WeightVector w(gen.weights(n));
    const int s1 = std::uniform_int_distribution<int>(-3, 1)(gen.rng());
    const int s2 = std::uniform_int_distribution<int>(-3, 1)(gen.rng());
    const VectorField h1 = gen.homogeneous_field(w.values(), s1), h2 = gen.homogeneous_field(w.values(), s2);
    const VectorField br = lie_bracket(h1, h2);
    additive += br.is_zero() || (is_homogeneous(br, w) && nonholonomic_order_vf(br, w) == s1 + s2);
    VectorField sum(n);
    for (int s = -w.step(); s <= 3 * w.step(); ++s)
      sum += homogeneous_component(a, s, w);
    recon += sum == a;
  }
  c.expect(jacobi == kCases, "Jacobi identity " + std::to_string(jacobi) + "/200");
  c.expect(additive == kCases, "order additivity " + std::to_string(additive) + "/200");
  c.expect(recon == kCases, "homogeneous reconstruction " + std::to_string(recon) + "/200");

  const auto cases = oracle::valid_cases(77, kCases);
  c.expect(static_cast<int>(cases.size()) == kCases, "generated " + std::to_string(cases.size()) + " valid frames");
  int invariant = 0, bounded = 0, complete = 0;
  std::uint64_t seed = 1;
  for (const auto& vc : cases) {
    const auto fields = vc.approx.fields();
    const LieBasis l = lie_closure(fields, ClosureOptions{vc.frame.w.step()});
    const std::vector<VectorField> gens(fields.begin(), fields.begin() + vc.approx.k);
    const LieBasis g = ideal_closure(l, gens);
    bool inv = true;
    for (const auto& b : l.basis())
      for (const auto& y : g.basis())
        inv = inv && g.contains(lie_bracket(b, y));
    invariant += inv;
    const auto step = nilpotent_step(g);
    bounded += step && *step <= vc.frame.w.step();
    bool ok = true;
    for (const auto& x : fields)
      ok = ok && check_triangular_complete(x, vc.frame.w) &&
           completeness_probe(x, vc.frame.w, 1e3, 2, seed++, 1000).blowups == 0;
    complete += ok;
  }
  c.expect(invariant == kCases, "ad-invariance of g " + std::to_string(invariant) + "/200");
  c.expect(bounded == kCases, "nilpotent step <= max weight " + std::to_string(bounded) + "/200");
  c.expect(complete == kCases, "triangular and no blowups " + std::to_string(complete) + "/200");
  c.expect(completeness_probe(field({"x"}, "x^2 d/dx"), WeightVector({1}), 1e3, 8, 7).blowups > 0,
           "x^2 d/dx blows up");
}

// 5. Flows.
void criterion5(Checks& c) {
  double worst = 0.0;
  oracle::FieldGenerator gen(5);
  for (const char* name : {"e1.ars", "e2.ars", "e3.ars"}) {
    const Frame f = fixtures::frame(name);
    const WeightVector w = growth_vector(f).weights;
    for (const auto& x : f.fields())
      for (int trial = 0; trial < 10; ++trial) {
        RationalVector p;
        std::vector<double> pd;
        for (std::size_t j = 0; j < f.dim(); ++j) {
          p.push_back(gen.coefficient());
          pd.push_back(to_double(p.back()));
        }
        const Rational t = make_rational(std::uniform_int_distribution<int>(-8, 8)(gen.rng()), 8);
        const auto exact = lie_series_flow(x, p, t, w).endpoint;
        const auto numeric = rk4_flow(x, pd, to_double(t), 1000).endpoint;
        for (std::size_t j = 0; j < f.dim(); ++j)
          worst = std::max(worst, std::abs(to_double(exact[j]) - numeric[j]));
      }
  }
  c.expect(worst <= 1e-6, "sup-norm gap " + std::to_string(worst));

  int identities = 0, total = 0;
  for (const char* name : {"e1.ars", "e2.ars", "e3.ars"}) {
    const Frame f = fixtures::frame(name);
    const WeightVector w = growth_vector(f).weights;
    for (const auto& x : build_approximation(f, w).hat_fields) {
      const RationalVector p = gen.rational_point(f.dim());
      const Rational t1 = gen.coefficient(), t2 = gen.coefficient(), lambda(5, 3);
      const auto two_steps = lie_series_flow(x, lie_series_flow(x, p, t1, w).endpoint, t2, w).endpoint;
      const auto one_step = lie_series_flow(x, p, t1 + t2, w).endpoint;
      const auto dilated = lie_series_flow(x, dilate(p, lambda, w), lambda * t1, w).endpoint;
      const auto expected = dilate(lie_series_flow(x, p, t1, w).endpoint, lambda, w);
      ++total;
      identities += two_steps == one_step && dilated == expected;
    }
  }
  c.expect(identities == total, "group law and dilation " + std::to_string(identities) + "/" + std::to_string(total));
}

// 6. Genericity arithmetic and tangency.
void criterion6(Checks& c) {
  const auto t2 = genericity_codims(2);
  c.expect(t2.strata.size() == 1 && t2.strata[0].codim == 1, "codim Z1 = 1 for n = 2");
  c.expect(genericity_codims(3).strata.at(0).codim == 1, "codim Z1 = 1 for n = 3");
  nlohmann::ordered_json all = nlohmann::ordered_json::array();
  for (int n = 2; n <= 12; ++n)
    all.push_back(to_json(genericity_codims(n)));
  c.expect(all == nlohmann::ordered_json::parse(fixtures::read("../golden/codims.json")), "golden table n = 2..12");
  const std::vector<std::string> xy{"x", "y"};
  const Frame f({field(xy, "d/dx"), field(xy, "y d/dy - x^2 d/dy")});
  c.expect(tangency_check(f, std::vector<Rational>{0, 0}), "tangential at 0");
  bool off = false;
  try {
    tangency_check(f, std::vector<Rational>{1, 0});
  } catch (const NotOnZ1&) {
    off = true;
  }
  c.expect(off, "NotOnZ1 off the locus");
}

// 7. Front end.
void criterion7(Checks& c) {
  for (const char* name : {"e1.ars", "e2.ars", "e3.ars"}) {
    const std::string args = "analyze " + cli::fixture(name) + " --json -";
    const auto a = cli::run(args), b = cli::run(args);
    c.expect(a.status == 0 && !a.out.empty(), std::string(name) + " analyzes");
    c.expect(a.out == b.out, std::string(name) + " JSON byte-identical");
    c.no_throw(std::string(name) + " JSON round trip", [&] {
      const Report r = report_from_json(nlohmann::ordered_json::parse(a.out));
      c.expect(to_json(r).dump(2) + "\n" == a.out, std::string(name) + " JSON round trip");
    });
  }
  const std::pair<const char*, int> bad[] = {
      {"bad/undeclared.ars", 2}, {"bad/rank.ars", 3}, {"bad/weights.ars", 4}, {"bad/degenerate.ars", 5}};
  for (const auto& [file, code] : bad) {
    const int got = cli::run("analyze " + cli::fixture(file)).status;
    c.expect(got == code, std::string(file) + " exits " + std::to_string(got) + ", expected " + std::to_string(code));
  }
}

} // namespace

int main() {
  const std::pair<const char*, std::function<void(Checks&)>> criteria[] = {
      {"first example: weights, closure, ideal, orders, labels, determinant", criterion1},
      {"second example: weights, k, bracket identity, ideal, solvability, determinant", criterion2},
      {"third example: weights, sl2 triple, non-solvability, nilpotent ideal, determinant", criterion3},
      {"property suite (200 seeded cases each)", criterion4},
      {"flow oracle agreement and exact flow identities", criterion5},
      {"genericity arithmetic and tangency", criterion6},
      {"front end: parse, analyze, stable JSON, exit codes", criterion7},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [title, run] : criteria) {
    ++index;
    Checks checks;
    const auto start = std::chrono::steady_clock::now();
    checks.no_throw("criterion", [&] { run(checks); });
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = checks.failures().empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << index << ": " << title << " (" << secs << " s)";
    for (const auto& f : checks.failures())
      std::cout << "\n      - " << f;
    std::cout << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
