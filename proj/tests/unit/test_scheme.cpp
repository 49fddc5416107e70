#include <gtest/gtest.h>

#include "schemegb/errors.hpp"
#include "schemegb/scheme.hpp"
#include "test_support.hpp"

using namespace schemegb;
using namespace schemegb::testing;

TEST(Orbits, NineTwo) {
  const auto orbits = multiplicative_orbits(9, 2);
  ASSERT_EQ(orbits.size(), 3u);
  EXPECT_EQ(orbits[0], (std::vector<int>{0}));
  EXPECT_EQ(orbits[1], (std::vector<int>{1, 2, 4, 5, 7, 8}));
  EXPECT_EQ(orbits[2], (std::vector<int>{3, 6}));
}

TEST(Orbits, EightThree) {
  const auto orbits = multiplicative_orbits(8, 3);
  ASSERT_EQ(orbits.size(), 4u);
  EXPECT_EQ(orbits[1], (std::vector<int>{1, 3, 5, 7}));
  EXPECT_EQ(orbits[2], (std::vector<int>{2, 6}));
  EXPECT_EQ(orbits[3], (std::vector<int>{4}));
}

TEST(OrbitScheme, Valencies) {
  const Scheme s = orbit_scheme(8, 3);
  EXPECT_EQ(s.d, 3);
  EXPECT_EQ(s.v, 8);
  EXPECT_EQ(s.valencies, (std::vector<std::int64_t>{1, 4, 2, 1}));
  EXPECT_EQ(s.tensor(1, 1, 0), 4);
  EXPECT_EQ(s.tensor(1, 1, 2), 4);
  EXPECT_EQ(s.tensor(2, 2, 3), 2);
}

TEST(OrbitScheme, RejectsBadRadix) {
  EXPECT_THROW(orbit_scheme(9, 3), InvalidRadix);
  EXPECT_THROW(orbit_scheme(9, 9), InvalidRadix);
  EXPECT_THROW(orbit_scheme(9, 1), InvalidRadix);
}

TEST(Relations, CompleteGraph) {
  const Scheme s = load("k3.json");
  EXPECT_EQ(s.d, 1);
  EXPECT_EQ(s.valencies, (std::vector<std::int64_t>{1, 2}));
  EXPECT_EQ(s.tensor(1, 1, 1), 1);
}

TEST(Relations, Hamming) {
  const Scheme s = hamming_scheme(3, 2);
  EXPECT_EQ(s.d, 3);
  EXPECT_EQ(s.valencies, (std::vector<std::int64_t>{1, 3, 3, 1}));
  EXPECT_EQ(s.tensor(1, 1, 2), 2);
}

TEST(Relations, RejectsNonSymmetric) {
  RelationPartition rp{3, {0, 1, 2, 2, 0, 1, 1, 2, 0}};
  EXPECT_THROW(scheme_from_relations(rp), NotSymmetric);
}

TEST(Relations, RejectsNonConstantIntersectionNumbers) {
  // Path 0-1-2 with distance labels: vertex 1 has two neighbours, the ends one.
  RelationPartition rp{3, {0, 1, 2, 1, 0, 1, 2, 1, 0}};
  EXPECT_THROW(scheme_from_relations(rp), NotConstantIntersectionNumber);
}

TEST(Relations, RejectsMissingLabels) {
  RelationPartition rp{2, {0, 2, 2, 0}};
  EXPECT_THROW(scheme_from_relations(rp), NotAPartition);
  RelationPartition diag{2, {0, 1, 1, 1}};
  EXPECT_THROW(scheme_from_relations(diag), SchemeError);
}

TEST(Tensor, RoundTripsAndValidates) {
  const Scheme s = orbit_scheme(9, 2);
  const Scheme t = scheme_from_tensor(s.d, s.tensor.flat());
  EXPECT_EQ(t.tensor, s.tensor);
  EXPECT_EQ(t.valencies, s.valencies);
  auto bad = s.tensor.flat();
  bad[(1 * 3 + 1) * 3 + 2] += 1;
  EXPECT_THROW(scheme_from_tensor(s.d, bad), SchemeError);
}

TEST(IntersectionMatrices, CommuteAndMultiply) {
  const Scheme s = orbit_scheme(8, 3);
  const auto m = intersection_matrices(s);
  ASSERT_EQ(m.size(), 4u);
  EXPECT_EQ(m[0], QMatrix::identity(4));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) EXPECT_EQ(m[i] * m[j], m[j] * m[i]);
  // Column 0 of M^i is e_i.
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t k = 0; k < m.size(); ++k) EXPECT_EQ(m[i](k, 0), Rational(k == i ? 1 : 0));
}

TEST(Relabel, PermutesTensor) {
  const Scheme s = orbit_scheme(9, 2);
  const Scheme r = relabel(s, {0, 2, 1});
  EXPECT_EQ(r.valencies, (std::vector<std::int64_t>{1, 2, 6}));
  EXPECT_EQ(r.tensor(2, 2, 1), s.tensor(1, 1, 2));
  EXPECT_EQ(relabel(r, {0, 2, 1}).tensor, s.tensor);
  EXPECT_THROW(relabel(s, {1, 0, 2}), DimensionMismatch);
}
