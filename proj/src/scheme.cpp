#include "schemegb/scheme.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "schemegb/errors.hpp"

namespace schemegb {

IntersectionTensor::IntersectionTensor(int d)
    : d_(d), p_(static_cast<std::size_t>((d + 1) * (d + 1) * (d + 1)), 0) {}

IntersectionTensor::IntersectionTensor(int d, std::vector<std::int64_t> flat)
    : d_(d), p_(std::move(flat)) {
  const auto n = static_cast<std::size_t>(d + 1);
  if (d < 0 || p_.size() != n * n * n)
    throw SchemeError("tensor for d=" + std::to_string(d) + " needs " + std::to_string(n * n * n) +
                      " entries, got " + std::to_string(p_.size()));
}

namespace {

void check_commutative(const IntersectionTensor& t) {
  const int d = t.classes();
  for (int i = 0; i <= d; ++i)
    for (int j = i + 1; j <= d; ++j)
      for (int k = 0; k <= d; ++k)
        if (t(i, j, k) != t(j, i, k))
          throw NotCommutative("p_" + std::to_string(i) + std::to_string(j) + "^" + std::to_string(k) +
                               " != p_" + std::to_string(j) + std::to_string(i) + "^" + std::to_string(k));
}

std::string pair_string(int x, int y) {
  return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

}  // namespace

Scheme scheme_from_relations(const RelationPartition& rp) {
  const int v = rp.v;
  if (v < 1 || rp.labels.size() != static_cast<std::size_t>(v) * static_cast<std::size_t>(v))
    throw NotAPartition("relation labels must form a nonempty square grid");
  int d = 0;
  for (int x = 0; x < v; ++x)
    for (int y = 0; y < v; ++y) {
      const int l = rp(x, y);
      if (l < 0) throw NotAPartition("negative label at " + pair_string(x, y));
      if ((x == y) != (l == 0))
        throw NotAPartition("R_0 must be exactly the diagonal; label " + std::to_string(l) + " at " +
                            pair_string(x, y));
      d = std::max(d, l);
    }
  std::vector<bool> seen(static_cast<std::size_t>(d + 1), false);
  for (int l : rp.labels) seen[static_cast<std::size_t>(l)] = true;
  for (int i = 0; i <= d; ++i)
    if (!seen[static_cast<std::size_t>(i)]) throw NotAPartition("class " + std::to_string(i) + " is empty");
  for (int x = 0; x < v; ++x)
    for (int y = x + 1; y < v; ++y)
      if (rp(x, y) != rp(y, x))
        throw NotSymmetric("R_" + std::to_string(rp(x, y)) + " is not symmetric at " + pair_string(x, y));

  const auto n = static_cast<std::size_t>(d + 1);
  std::vector<std::int64_t> counts(n * n, 0);
  std::vector<std::vector<std::int64_t>> reference(n);
  std::vector<std::pair<int, int>> reference_pair(n);
  std::vector<std::size_t> touched;
  touched.reserve(static_cast<std::size_t>(v));
  for (int x = 0; x < v; ++x)
    for (int y = 0; y < v; ++y) {
      const auto k = static_cast<std::size_t>(rp(x, y));
      touched.clear();
      for (int z = 0; z < v; ++z) {
        const std::size_t cell = static_cast<std::size_t>(rp(x, z)) * n + static_cast<std::size_t>(rp(z, y));
        if (counts[cell]++ == 0) touched.push_back(cell);
      }
      if (reference[k].empty()) {
        reference[k] = counts;
        reference_pair[k] = {x, y};
      } else {
        // Both count vectors sum to v, so agreement on the touched cells suffices.
        for (std::size_t cell : touched)
          if (counts[cell] != reference[k][cell]) {
            const int i = static_cast<int>(cell / n);
            const int j = static_cast<int>(cell % n);
            std::ostringstream w;
            w << pair_string(reference_pair[k].first, reference_pair[k].second) << " has "
              << reference[k][cell] << " but " << pair_string(x, y) << " has " << counts[cell];
            throw NotConstantIntersectionNumber(i, j, static_cast<int>(k), w.str());
          }
      }
      for (std::size_t cell : touched) counts[cell] = 0;
    }

  IntersectionTensor t(d);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j)
      for (int k = 0; k <= d; ++k)
        t(i, j, k) = reference[static_cast<std::size_t>(k)][static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)];
  check_commutative(t);

  Scheme s;
  s.d = d;
  s.v = v;
  s.tensor = std::move(t);
  s.valencies.assign(n, 0);
  for (int i = 0; i <= d; ++i) s.valencies[static_cast<std::size_t>(i)] = s.tensor(i, i, 0);
  s.source = rp;
  return s;
}

Scheme scheme_from_tensor(int d, std::vector<std::int64_t> flat) {
  if (d < 0) throw SchemeError("class count must be non-negative");
  IntersectionTensor t(d, std::move(flat));
  for (std::int64_t x : t.flat())
    if (x < 0) throw SchemeError("intersection numbers must be non-negative");
  for (int j = 0; j <= d; ++j)
    for (int k = 0; k <= d; ++k)
      if (t(0, j, k) != (j == k ? 1 : 0))
        throw SchemeError("p_0" + std::to_string(j) + "^" + std::to_string(k) + " must be " +
                          std::to_string(j == k ? 1 : 0));
  check_commutative(t);
  std::vector<std::int64_t> valencies(static_cast<std::size_t>(d + 1));
  for (int i = 0; i <= d; ++i) {
    valencies[static_cast<std::size_t>(i)] = t(i, i, 0);
    if (t(i, i, 0) < 1) throw SchemeError("valency k_" + std::to_string(i) + " must be positive");
    for (int j = 0; j <= d; ++j)
      if (j != i && t(i, j, 0) != 0)
        throw NotSymmetric("p_" + std::to_string(i) + std::to_string(j) + "^0 must vanish for a symmetric scheme");
  }
  for (int i = 0; i <= d; ++i)
    for (int k = 0; k <= d; ++k) {
      std::int64_t row = 0;
      for (int j = 0; j <= d; ++j) row += t(i, j, k);
      if (row != valencies[static_cast<std::size_t>(i)])
        throw SchemeError("sum_j p_" + std::to_string(i) + "j^" + std::to_string(k) + " must equal k_" +
                          std::to_string(i));
    }
  // (D_i D_j) D_l = D_i (D_j D_l)
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j)
      for (int l = 0; l <= d; ++l)
        for (int u = 0; u <= d; ++u) {
          std::int64_t lhs = 0;
          std::int64_t rhs = 0;
          for (int m = 0; m <= d; ++m) {
            lhs += t(i, j, m) * t(m, l, u);
            rhs += t(j, l, m) * t(i, m, u);
          }
          if (lhs != rhs)
            throw SchemeError("intersection numbers are not associative at (" + std::to_string(i) + "," +
                              std::to_string(j) + "," + std::to_string(l) + ")");
        }
  Scheme s;
  s.d = d;
  s.v = std::accumulate(valencies.begin(), valencies.end(), std::int64_t{0});
  s.tensor = std::move(t);
  s.valencies = std::move(valencies);
  return s;
}

std::vector<std::vector<int>> multiplicative_orbits(int m, int r) {
  if (m < 3 || r <= 1 || r >= m || std::gcd(r, m) != 1)
    throw InvalidRadix("radix " + std::to_string(r) + " is invalid for m=" + std::to_string(m) +
                       " (need 1 < r < m and gcd(r, m) = 1)");
  std::vector<int> group{1};
  std::vector<bool> in_group(static_cast<std::size_t>(m), false);
  in_group[1] = true;
  for (std::size_t i = 0; i < group.size(); ++i)
    for (int g : {r, m - 1}) {
      const int h = static_cast<int>(static_cast<std::int64_t>(group[i]) * g % m);
      if (!in_group[static_cast<std::size_t>(h)]) {
        in_group[static_cast<std::size_t>(h)] = true;
        group.push_back(h);
      }
    }
  std::vector<std::vector<int>> orbits{{0}};
  std::vector<bool> placed(static_cast<std::size_t>(m), false);
  placed[0] = true;
  for (int x = 1; x < m; ++x) {
    if (placed[static_cast<std::size_t>(x)]) continue;
    std::vector<int> orbit;
    for (int h : group) {
      const int y = static_cast<int>(static_cast<std::int64_t>(h) * x % m);
      if (!placed[static_cast<std::size_t>(y)]) {
        placed[static_cast<std::size_t>(y)] = true;
        orbit.push_back(y);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

Scheme orbit_scheme(int m, int r) {
  const auto orbits = multiplicative_orbits(m, r);
  std::vector<int> cls(static_cast<std::size_t>(m));
  for (std::size_t k = 0; k < orbits.size(); ++k)
    for (int x : orbits[k]) cls[static_cast<std::size_t>(x)] = static_cast<int>(k);
  RelationPartition rp;
  rp.v = m;
  rp.labels.resize(static_cast<std::size_t>(m) * static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      rp.labels[static_cast<std::size_t>(x * m + y)] = cls[static_cast<std::size_t>(((x - y) % m + m) % m)];
  return scheme_from_relations(rp);
}

std::vector<QMatrix> intersection_matrices(const Scheme& s) {
  const int d = s.d;
  const auto n = static_cast<std::size_t>(d + 1);
  std::vector<QMatrix> out;
  out.reserve(n);
  for (int i = 0; i <= d; ++i) {
    QMatrix m(n, n);
    for (int j = 0; j <= d; ++j)
      for (int k = 0; k <= d; ++k)
        m(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) = static_cast<long>(s.tensor(i, j, k));
    out.push_back(std::move(m));
  }
  return out;
}

Scheme relabel(const Scheme& s, const std::vector<int>& perm) {
  const int d = s.d;
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  if (static_cast<int>(perm.size()) != d + 1 || perm[0] != 0)
    throw DimensionMismatch("relabeling must be a permutation of 0..d fixing 0");
  for (int i = 0; i <= d; ++i)
    if (sorted[static_cast<std::size_t>(i)] != i)
      throw DimensionMismatch("relabeling must be a permutation of 0..d fixing 0");
  auto p = [&](int i) { return perm[static_cast<std::size_t>(i)]; };
  Scheme out = s;
  for (int i = 0; i <= d; ++i) {
    out.valencies[static_cast<std::size_t>(p(i))] = s.valencies[static_cast<std::size_t>(i)];
    for (int j = 0; j <= d; ++j)
      for (int k = 0; k <= d; ++k) out.tensor(p(i), p(j), p(k)) = s.tensor(i, j, k);
  }
  if (out.source)
    for (int& l : out.source->labels) l = p(l);
  return out;
}

}  // namespace schemegb
