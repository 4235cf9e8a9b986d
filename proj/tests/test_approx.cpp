#include "ars/approx.hpp"
#include "ars/errors.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace ars;
using oracle::field;

TEST(Components, NilpotentAndOrderZero) {
  const WeightVector w4({1, 1, 2, 2});
  const VectorField x4 = field(fixtures::e2_vars, "x d/dz + 1/2 y^2 d/dw");
  EXPECT_EQ(nilpotent_approx(x4, w4), field(fixtures::e2_vars, "x d/dz"));
  EXPECT_EQ(order_zero_component(x4, w4), field(fixtures::e2_vars, "1/2 y^2 d/dw"));
  const WeightVector w3({1, 2, 5});
  EXPECT_EQ(nilpotent_approx(field(fixtures::e1_vars, "y^2 d/dz"), w3), field(fixtures::e1_vars, "y^2 d/dz"));
  EXPECT_EQ(nilpotent_approx(field(fixtures::e1_vars, "x y d/dz"), w3), VectorField(3));
  EXPECT_EQ(order_zero_component(field(fixtures::e1_vars, "d/dx"), w3), VectorField(3));
  const VectorField x4_e3 = field(fixtures::e3_vars, "x d/dy + 1/2 x^2 d/dz");
  EXPECT_EQ(order_zero_component(x4_e3, WeightVector({1, 1, 2, 1, 2})), x4_e3);
}

TEST(Build, ExampleOne) {
  const Frame f = fixtures::frame("e1.ars");
  const auto a = build_approximation(f, WeightVector({1, 2, 5}));
  EXPECT_EQ(a.k, 1); // only d/dx is nonzero at the origin
  EXPECT_EQ(a.m, 3);
  EXPECT_FALSE(a.degenerate);
  EXPECT_EQ(a.hat_fields, f.fields());
  EXPECT_TRUE(a.tilde_fields.empty());
  EXPECT_EQ(a.transform, RationalMatrix::identity(3));
}

TEST(Build, ExampleTwo) {
  const auto a = build_approximation(fixtures::frame("e2.ars"), WeightVector({1, 1, 2, 2}));
  EXPECT_EQ(a.k, 2);
  ASSERT_GE(a.hat_fields.size(), 3u);
  EXPECT_EQ(a.hat_fields[2], field(fixtures::e2_vars, "y d/dw"));
  // X4 has a nonzero order -1 part x d/dz, independent of the other hats.
  EXPECT_EQ(a.m, 4);
  EXPECT_EQ(a.hat_fields[3], field(fixtures::e2_vars, "x d/dz"));
  EXPECT_FALSE(a.degenerate);
}

TEST(Build, ExampleThree) {
  const auto a = build_approximation(fixtures::frame("e3.ars"), WeightVector({1, 1, 2, 1, 2}));
  EXPECT_EQ(a.k, 3);
  EXPECT_EQ(a.m, 3);
  ASSERT_EQ(a.tilde_fields.size(), 2u);
  EXPECT_EQ(a.tilde_fields[0], field(fixtures::e3_vars, "x d/dy + 1/2 x^2 d/dz"));
  EXPECT_EQ(a.tilde_fields[1], field(fixtures::e3_vars, "y d/dx + 1/2 y^2 d/dz"));
  EXPECT_FALSE(a.degenerate);
}

TEST(Build, AdjustsValuesAtOrigin) {
  // X2 = d/dx + x d/dy has value d/dx at 0; it is replaced by X2 - X1.
  const std::vector<std::string> v{"x", "y"};
  const Frame f({field(v, "d/dx"), field(v, "d/dx + x d/dy")});
  const auto a = build_approximation(f, WeightVector({1, 2}));
  EXPECT_EQ(a.k, 1);
  EXPECT_EQ(a.m, 2);
  EXPECT_EQ(a.hat_fields[1], field(v, "x d/dy"));
  EXPECT_EQ(a.transform, RationalMatrix::from_rows({{1, 0}, {-1, 1}}, 2));
}

TEST(Build, DegenerateIsFlagged) {
  const std::vector<std::string> v{"x", "y", "z"};
  const Frame f({field(v, "d/dx"), field(v, "x d/dy + y d/dz"), field(v, "x y^5 d/dz")});
  const auto a = build_approximation(f, WeightVector({1, 2, 3}));
  EXPECT_TRUE(a.degenerate);
  EXPECT_EQ(a.k, 1);
  EXPECT_EQ(a.m, 2);
}

TEST(Build, RequiresPrivilegedWeights) {
  EXPECT_THROW(build_approximation(fixtures::frame("e1.ars"), WeightVector({1, 1, 1})), NotPrivileged);
}

TEST(Build, IdempotentOnApproximatedFrame) {
  const Frame f = fixtures::frame("e3.ars");
  const WeightVector w({1, 1, 2, 1, 2});
  const auto a = build_approximation(f, w);
  const Frame again(f.var_names(), a.fields());
  const auto b = build_approximation(again, w);
  EXPECT_EQ(b.fields(), a.fields());
  EXPECT_EQ(b.transform, RationalMatrix::identity(5));
}

TEST(Triangular, Completeness) {
  EXPECT_TRUE(check_triangular_complete(field(fixtures::e2_vars, "1/2 y^2 d/dw"), WeightVector({1, 1, 2, 2})));
  EXPECT_FALSE(check_triangular_complete(field({"x"}, "x^2 d/dx"), WeightVector({1})));
  EXPECT_TRUE(check_triangular_complete(field(fixtures::e1_vars, "y^2 d/dz"), WeightVector({1, 2, 5})));
}

TEST(Build, TransformPreservesPointwiseSpan) {
  // Rows of the transform applied to the original frame span the same subspace
  // as the original frame at every point.
  const std::vector<std::string> v{"x", "y", "z"};
  const Frame f({field(v, "d/dx"), field(v, "2 d/dx + x d/dy"), field(v, "-d/dx + y^2 d/dz")});
  const auto a = build_approximation(f, WeightVector({1, 2, 5}));
  EXPECT_NE(determinant(a.transform), 0);
  std::vector<VectorField> transformed;
  for (std::size_t i = 0; i < 3; ++i) {
    VectorField t(3);
    for (std::size_t j = 0; j < 3; ++j)
      t += a.transform(i, j) * f[j];
    transformed.push_back(t);
  }
  oracle::FieldGenerator gen(4);
  for (int trial = 0; trial < 50; ++trial) {
    const auto p = gen.rational_point(3);
    std::vector<VectorField> both = f.fields();
    both.insert(both.end(), transformed.begin(), transformed.end());
    EXPECT_EQ(frame_rank_at(transformed, p), frame_rank_at(f.fields(), p));
    EXPECT_EQ(frame_rank_at(both, p), frame_rank_at(f.fields(), p));
  }
  EXPECT_EQ(a.hat_fields[1], field(v, "x d/dy"));
  EXPECT_EQ(a.hat_fields[2], field(v, "y^2 d/dz"));
}
