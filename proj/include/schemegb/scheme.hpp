#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "schemegb/exactmath.hpp"

namespace schemegb {

// A v x v grid of relation labels; labels(x, y) = i iff (x, y) is in R_i.
struct RelationPartition {
  int v = 0;
  std::vector<int> labels;  // row-major

  int operator()(int x, int y) const { return labels[static_cast<std::size_t>(x * v + y)]; }
};

// Intersection numbers p_ij^k for i, j, k in 0..d.
class IntersectionTensor {
 public:
  IntersectionTensor() = default;
  explicit IntersectionTensor(int d);
  IntersectionTensor(int d, std::vector<std::int64_t> flat);

  int classes() const { return d_; }
  std::int64_t operator()(int i, int j, int k) const { return p_[index(i, j, k)]; }
  std::int64_t& operator()(int i, int j, int k) { return p_[index(i, j, k)]; }
  // Row-major (i, j, k) layout.
  const std::vector<std::int64_t>& flat() const { return p_; }

  friend bool operator==(const IntersectionTensor&, const IntersectionTensor&) = default;

 private:
  std::size_t index(int i, int j, int k) const {
    const auto n = static_cast<std::size_t>(d_ + 1);
    return (static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)) * n + static_cast<std::size_t>(k);
  }
  int d_ = 0;
  std::vector<std::int64_t> p_{1};
};

// A validated commutative symmetric association scheme with d classes on v points.
struct Scheme {
  int d = 0;
  std::int64_t v = 1;
  IntersectionTensor tensor;
  std::vector<std::int64_t> valencies{1};
  bool symmetric = true;
  std::optional<RelationPartition> source;
};

// Verifies the association scheme axioms by brute-force counting over all
// triples. Throws NotAPartition, NotSymmetric, NotConstantIntersectionNumber
// or NotCommutative.
Scheme scheme_from_relations(const RelationPartition& rp);

// Validates a tensor given directly (identity, symmetry, commutativity,
// row sums, associativity). Throws SchemeError subclasses.
Scheme scheme_from_tensor(int d, std::vector<std::int64_t> flat);

// Orbits of <r, -1> <= Z_m^* acting on Z_m by multiplication: orbit 0 is {0},
// the others are sorted by their least positive member.
std::vector<std::vector<int>> multiplicative_orbits(int m, int r);

// The 2-orbit scheme x R_k y <=> x - y in O_k. Throws InvalidRadix unless
// 1 < r < m and gcd(r, m) = 1.
Scheme orbit_scheme(int m, int r);

// M^i with (M^i)(k, j) = p_ij^k, so column j holds the coordinates of
// x_i * x_j. M^0 is the identity.
std::vector<QMatrix> intersection_matrices(const Scheme& s);

// Renames class i to perm[i]; perm must fix 0.
Scheme relabel(const Scheme& s, const std::vector<int>& perm);

}  // namespace schemegb
