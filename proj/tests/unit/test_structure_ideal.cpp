#include <gtest/gtest.h>

#include "schemegb/structure_ideal.hpp"
#include "test_support.hpp"

using namespace schemegb;
using namespace schemegb::testing;

namespace {

std::vector<Scheme> corpus() {
  return {load("ex1.json"), load("ex2.json"), load("k3.json"), hamming_scheme(3, 2), orbit_scheme(13, 5),
          orbit_scheme(5, 4)};
}

}  // namespace

TEST(StructureBasis, EightThreeGenerators) {
  const StructureBasis sb = structure_basis(load("ex2.json"));
  const auto order = sb.basis.order();
  const std::vector<MPoly> expected{
      poly(4, {{1, {0, 2, 0, 0}}, {-4, {0, 0, 1, 0}}, {-4, {0, 0, 0, 1}}, {-4, {0, 0, 0, 0}}}),
      poly(4, {{1, {0, 0, 0, 2}}, {-1, {0, 0, 0, 0}}}),
      poly(4, {{1, {1, 0, 0, 0}}, {-1, {0, 0, 0, 0}}}),
      poly(4, {{1, {0, 1, 1, 0}}, {-2, {0, 1, 0, 0}}}),
      poly(4, {{1, {0, 1, 0, 1}}, {-1, {0, 1, 0, 0}}}),
      poly(4, {{1, {0, 0, 2, 0}}, {-2, {0, 0, 0, 1}}, {-2, {0, 0, 0, 0}}}),
      poly(4, {{1, {0, 0, 1, 1}}, {-1, {0, 0, 1, 0}}}),
  };
  EXPECT_EQ(canonical(sb.basis.generators(), order), canonical(expected, order));
}

TEST(StructureBasis, NineTwoMatchesAfterSwappingLabels) {
  const StructureBasis sb = structure_basis(relabel(load("ex1.json"), {0, 2, 1}));
  const auto order = sb.basis.order();
  const std::vector<MPoly> expected{
      poly(3, {{1, {0, 0, 2}}, {-6, {0, 0, 0}}, {-6, {0, 1, 0}}, {-3, {0, 0, 1}}}),
      poly(3, {{1, {1, 0, 0}}, {-1, {0, 0, 0}}}),
      poly(3, {{1, {0, 2, 0}}, {-1, {0, 1, 0}}, {-2, {0, 0, 0}}}),
      poly(3, {{1, {0, 1, 1}}, {-2, {0, 0, 1}}}),
  };
  EXPECT_EQ(canonical(sb.basis.generators(), order), canonical(expected, order));
}

TEST(StructureBasis, GroebnerWithLinearNormalSet) {
  for (const Scheme& s : corpus()) {
    const StructureBasis sb = structure_basis(s);
    const auto n = sb.nvars();
    EXPECT_EQ(sb.basis.size(), 1 + n * (n - 1) / 2);
    EXPECT_TRUE(is_groebner(sb.basis).is_groebner);
    EXPECT_EQ(normal_set(sb.basis).size(), n);
    EXPECT_EQ(sb.normal_set.size(), n);
  }
}

TEST(StructureBasis, MatricesCommuteAndMatchIntersectionMatrices) {
  for (const Scheme& s : corpus()) {
    const StructureBasis sb = structure_basis(s);
    const auto im = intersection_matrices(s);
    for (std::size_t i = 0; i < sb.nvars(); ++i) {
      EXPECT_EQ(sb.matrices[i], im[i]);
      for (std::size_t j = 0; j < i; ++j) EXPECT_EQ(sb.matrices[i] * sb.matrices[j], sb.matrices[j] * sb.matrices[i]);
    }
  }
}

TEST(StructureBasis, ValencyPointIsOnTheVariety) {
  for (const Scheme& s : corpus()) {
    const StructureBasis sb = structure_basis(s);
    for (const MPoly& g : sb.basis.generators()) EXPECT_EQ(g.evaluate(valency_point(s)), Rational(0));
  }
}

TEST(StructureBasis, Radical) {
  for (const Scheme& s : corpus()) EXPECT_TRUE(verify_radical(structure_basis(s)));
}

TEST(IdempotentEquations, ZeroAndOneAreSolutions) {
  const Scheme s = load("ex2.json");
  const auto eqs = idempotent_equations(s);
  ASSERT_EQ(eqs.size(), 4u);
  std::vector<Rational> zero(4, Rational(0));
  // The idempotent for the valency eigenspace is J / v.
  std::vector<Rational> jv(4, Rational(1, 8));
  for (const MPoly& e : eqs) {
    EXPECT_EQ(e.evaluate(zero), Rational(0));
    EXPECT_EQ(e.evaluate(jv), Rational(0));
  }
}

TEST(StructureBasis, TrivialScheme) {
  const Scheme s = scheme_from_relations(RelationPartition{1, {0}});
  const StructureBasis sb = structure_basis(s);
  EXPECT_EQ(sb.nvars(), 1u);
  EXPECT_EQ(sb.basis.size(), 1u);
}

TEST(IdempotentEquations, CompleteGraph) {
  const auto eqs = idempotent_equations(load("k3.json"));
  ASSERT_EQ(eqs.size(), 2u);
  EXPECT_EQ(eqs[0], poly(2, {{1, {2, 0}}, {2, {0, 2}}, {-1, {1, 0}}}));
  EXPECT_EQ(eqs[1], poly(2, {{2, {1, 1}}, {1, {0, 2}}, {-1, {0, 1}}}));
}
