#include "ars/approx.hpp"
#include "ars/errors.hpp"
#include "ars/liealg.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace ars;
using oracle::field;

namespace {

VectorField e1(const std::string& expr) { return field(fixtures::e1_vars, expr); }
VectorField e2(const std::string& expr) { return field(fixtures::e2_vars, expr); }
VectorField e3(const std::string& expr) { return field(fixtures::e3_vars, expr); }

bool same_span(const LieBasis& a, const std::vector<VectorField>& b) {
  if (a.size() != b.size())
    return false;
  for (const auto& x : b)
    if (!a.contains(x))
      return false;
  return true;
}

} // namespace

TEST(LieBasis, StructureConstantsAreAntisymmetric) {
  const LieBasis g(3, {e1("d/dx"), e1("x d/dz"), e1("d/dz")});
  EXPECT_EQ(g.structure(0, 1), (RationalVector{0, 0, 1}));
  EXPECT_EQ(g.structure(1, 0), (RationalVector{0, 0, -1}));
  EXPECT_EQ(g.bracket({1, 0, 0}, {0, 2, 0}), (RationalVector{0, 0, 2}));
  EXPECT_THROW(LieBasis(3, {e1("d/dx"), e1("x d/dz")}), std::invalid_argument);
  EXPECT_THROW(LieBasis(3, {e1("d/dx"), e1("2 d/dx")}), std::invalid_argument);
}

TEST(Closure, ExampleOneHasNineFields) {
  const auto f = fixtures::frame("e1.ars").fields();
  const LieBasis l = lie_closure(f);
  const std::vector<VectorField> listed{e1("d/dx"),     e1("x d/dy"), e1("y^2 d/dz"), e1("d/dy"),  e1("y d/dz"),
                                        e1("x d/dz"),   e1("d/dz"),   e1("x y d/dz"), e1("x^2 d/dz")};
  EXPECT_TRUE(same_span(l, listed));
  EXPECT_EQ(oracle::brute_force_closure(f).size(), 9u);
}

TEST(Closure, ExampleOneIdeal) {
  const auto f = fixtures::frame("e1.ars").fields();
  const LieBasis l = lie_closure(f);
  const std::vector<VectorField> gens{f[0]};
  const LieBasis g = ideal_closure(l, gens);
  EXPECT_TRUE(same_span(g, {e1("d/dx"), e1("d/dy"), e1("y d/dz"), e1("x d/dz"), e1("d/dz")}));
  EXPECT_EQ(nilpotent_step(g), 2);
  EXPECT_TRUE(is_solvable(l));
  EXPECT_FALSE(g.contains(e1("x y d/dz")));
}

TEST(Closure, DegreeBound) {
  const auto f = fixtures::frame("e1.ars").fields();
  EXPECT_THROW(lie_closure(f, ClosureOptions{1}), DegreeBoundExceeded);
  EXPECT_EQ(lie_closure(f, ClosureOptions{2}).size(), 9u);
}

TEST(Closure, ExampleTwoOriginalFields) {
  const auto f = fixtures::frame("e2.ars").fields();
  EXPECT_EQ(lie_bracket(f[1], f[3]), f[2]);
  const LieBasis l = lie_closure(f);
  EXPECT_EQ(l.size(), 6u);
  const std::vector<VectorField> gens{f[0], f[1]};
  const LieBasis g = ideal_closure(l, gens);
  EXPECT_TRUE(g.contains(f[2]));
  EXPECT_TRUE(same_span(g, {e2("d/dx"), e2("d/dy + x d/dz"), e2("y d/dw"), e2("d/dz"), e2("d/dw")}));
  EXPECT_EQ(oracle::brute_force_closure(gens, l.basis()).size(), 5u);
  EXPECT_TRUE(is_solvable(l));
  EXPECT_TRUE(nilpotent_step(g).has_value());
}

TEST(Closure, ExampleThreeSl2) {
  const auto f = fixtures::frame("e3.ars").fields();
  const VectorField chi10 = lie_bracket(f[3], f[4]);
  EXPECT_EQ(chi10, e3("x d/dx - y d/dy"));
  EXPECT_EQ(lie_bracket(chi10, f[3]), Rational(2) * f[3]);
  EXPECT_EQ(lie_bracket(chi10, f[4]), Rational(-2) * f[4]);
  const LieBasis l = lie_closure(f);
  EXPECT_FALSE(is_solvable(l));
  EXPECT_EQ(nilpotent_step(l), std::nullopt);
}

TEST(Nilpotency, SmallAlgebras) {
  EXPECT_EQ(nilpotent_step(LieBasis(1, {})), 0);
  EXPECT_EQ(nilpotent_step(LieBasis(2, {field({"x", "y"}, "d/dx"), field({"x", "y"}, "d/dy")})), 1);
  // Affine algebra of the line: solvable, not nilpotent.
  const LieBasis aff(1, {field({"x"}, "d/dx"), field({"x"}, "x d/dx")});
  EXPECT_EQ(nilpotent_step(aff), std::nullopt);
  EXPECT_TRUE(is_solvable(aff));
}

TEST(Adjoint, MatrixAndFailure) {
  const LieBasis g(3, {e1("d/dx"), e1("d/dy"), e1("y d/dz"), e1("x d/dz"), e1("d/dz")});
  const RationalMatrix d = adjoint_matrix(e1("x d/dy"), g);
  // [x d/dy, d/dx] = -d/dy; [x d/dy, y d/dz] = x d/dz.
  EXPECT_EQ(d(1, 0), -1);
  EXPECT_EQ(d(3, 2), 1);
  EXPECT_THROW(adjoint_matrix(e1("x^3 d/dx"), g), NotInvariant);
}

TEST(GradedFrame, ExampleOne) {
  const LieBasis g(3, {e1("d/dx"), e1("d/dy"), e1("y d/dz"), e1("x d/dz"), e1("d/dz")});
  const auto y = graded_frame(g, WeightVector({1, 2, 5}));
  ASSERT_EQ(y.size(), 3u);
  EXPECT_EQ(y[0], e1("d/dx"));
  EXPECT_EQ(y[1], e1("d/dy"));
  EXPECT_EQ(y[2], e1("d/dz"));
  EXPECT_TRUE(rank_condition_at_zero(g, std::vector<Rational>(3, Rational(0))));
}

TEST(Classify, ExampleOne) {
  const Frame f = fixtures::frame("e1.ars");
  const auto a = build_approximation(f, WeightVector({1, 2, 5}));
  const LieBasis l = lie_closure(a.fields());
  const std::vector<VectorField> gens(a.hat_fields.begin(), a.hat_fields.begin() + a.k);
  const LieBasis g = ideal_closure(l, gens);
  const Classification c = classify_fields(a, l, g);
  EXPECT_EQ(c.labels, (std::vector<FieldLabel>{FieldLabel::invariant, FieldLabel::linear, FieldLabel::linear}));
  EXPECT_EQ(c.lie_dim, 9u);
  EXPECT_EQ(c.ideal_dim, 5u);
  EXPECT_EQ(c.l, 1);
}

TEST(Classify, ExampleTwoWithPaperSplit) {
  // The split stated for this example: three order -1 fields and X4 treated as the order-0 field.
  const auto f = fixtures::frame("e2.ars").fields();
  ApproximationSet a;
  a.hat_fields = {f[0], f[1], f[2]};
  a.tilde_fields = {f[3]};
  a.k = 2;
  a.m = 3;
  a.transform = RationalMatrix::identity(4);
  a.source = {0, 1, 2, 3};
  a.weights = WeightVector({1, 1, 2, 2});
  const LieBasis l = lie_closure(a.fields());
  const std::vector<VectorField> gens{f[0], f[1]};
  const LieBasis g = ideal_closure(l, gens);
  const Classification c = classify_fields(a, l, g);
  EXPECT_EQ(c.labels[2], FieldLabel::invariant);
  EXPECT_EQ(c.labels[3], FieldLabel::linear);
  EXPECT_EQ(c.l, 3);
  EXPECT_EQ(c.ideal_dim, 5u);
  EXPECT_TRUE(c.l_solvable);
}

TEST(Classify, AffineField) {
  // X2 = d/dx + x d/dy is adjusted to x d/dy using X1, so it is linear plus invariant.
  const std::vector<std::string> v{"x", "y"};
  const Frame f({field(v, "d/dx"), field(v, "d/dx + x d/dy")});
  const auto a = build_approximation(f, WeightVector({1, 2}));
  const LieBasis l = lie_closure(a.fields());
  const std::vector<VectorField> gens{a.hat_fields[0]};
  const LieBasis g = ideal_closure(l, gens);
  const Classification c = classify_fields(a, l, g);
  EXPECT_EQ(c.labels, (std::vector<FieldLabel>{FieldLabel::invariant, FieldLabel::affine}));
}

TEST(Classify, RefusesDegenerate) {
  ApproximationSet a;
  a.degenerate = true;
  const LieBasis l(1, {field({"x"}, "d/dx")});
  EXPECT_THROW(classify_fields(a, l, l), DegenerateApproximation);
}
