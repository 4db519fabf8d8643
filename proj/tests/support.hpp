#pragma once

// Enumerators, seeded generators and brute-force oracles shared by the
// unit and acceptance suites. Nothing here calls into the code under test
// except the Relation container itself.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "porder/relation.hpp"
#include "porder/topology.hpp"

namespace porder::testing {

inline constexpr std::uint64_t kDefaultSeed = 20260101;

using Matrix = std::vector<std::vector<bool>>;

inline Matrix to_matrix(const Relation& r) {
  Matrix m(r.size(), std::vector<bool>(r.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < r.size(); ++j) m[i][j] = r.contains(i, j);
  }
  return m;
}

inline Relation from_matrix(const GroundPtr& g, const Matrix& m) {
  Relation r(g);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m[i][j]) r.insert(i, j);
    }
  }
  return r;
}

inline bool matrix_transitive(const Matrix& m) {
  const std::size_t n = m.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (m[i][j] && m[j][k] && !m[i][k]) return false;
  return true;
}

// Closure by repeated boolean squaring of (R | I), then removing the
// diagonal entries that R itself does not reach through a cycle.
inline Matrix closure_by_squaring(const Matrix& r) {
  const std::size_t n = r.size();
  Matrix paths = r;  // paths of length >= 1
  while (true) {
    Matrix next = paths;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k)
        if (paths[i][k])
          for (std::size_t j = 0; j < n; ++j)
            if (paths[k][j]) next[i][j] = true;
    if (next == paths) return paths;
    paths = std::move(next);
  }
}

// Every relation on n elements, indexed by the n*n bits of code.
inline Relation relation_from_code(const GroundPtr& g, std::uint64_t code) {
  const std::size_t n = g->size();
  Relation r(g);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((code >> (i * n + j)) & 1U) r.insert(i, j);
  return r;
}

// All strict partial orders on g: each unordered pair is unrelated or
// oriented one way, and the result must be transitive.
inline std::vector<Relation> all_strict_partial_orders(const GroundPtr& g) {
  const std::size_t n = g->size();
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::size_t total = 1;
  for (std::size_t s = 0; s < slots.size(); ++s) total *= 3;
  std::vector<Relation> out;
  for (std::size_t code = 0; code < total; ++code) {
    Matrix m(n, std::vector<bool>(n));
    std::size_t c = code;
    for (auto [i, j] : slots) {
      if (c % 3 == 1) m[i][j] = true;
      if (c % 3 == 2) m[j][i] = true;
      c /= 3;
    }
    if (matrix_transitive(m)) out.push_back(from_matrix(g, m));
  }
  return out;
}

inline std::vector<Relation> all_posets(const GroundPtr& g) {
  std::vector<Relation> out;
  for (const auto& q : all_strict_partial_orders(g)) out.push_back(q | Relation::identity(g));
  return out;
}

// Finite topologies correspond to preorders: U_x = {y : x <= y}.
inline std::vector<FiniteTopology> all_topologies(const GroundPtr& g) {
  const std::size_t n = g->size();
  const std::size_t off = n * n - n;
  std::vector<FiniteTopology> out;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << off); ++code) {
    Matrix m(n, std::vector<bool>(n));
    std::size_t b = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i == j) {
          m[i][j] = true;
        } else {
          m[i][j] = (code >> b) & 1U;
          ++b;
        }
      }
    if (!matrix_transitive(m)) continue;
    std::vector<Mask> nbhd(n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (m[i][j]) nbhd[i] |= bit(j);
    out.push_back(FiniteTopology::from_min_neighborhoods(g, nbhd));
  }
  return out;
}

inline Relation random_relation(const GroundPtr& g, std::mt19937_64& rng, double density = 0.5) {
  std::bernoulli_distribution coin(density);
  Relation r(g);
  for (std::size_t i = 0; i < g->size(); ++i)
    for (std::size_t j = 0; j < g->size(); ++j)
      if (coin(rng)) r.insert(i, j);
  return r;
}

// Strict part of a random total preorder: asymmetric and negatively
// transitive.
inline Relation random_strict_weak_order(const GroundPtr& g, std::mt19937_64& rng) {
  const std::size_t n = g->size();
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::size_t> level(n);
  for (auto& l : level) l = pick(rng);
  Relation q(g);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (level[i] > level[j]) q.insert(i, j);
  return q;
}

inline FiniteTopology random_topology(const GroundPtr& g, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::size_t> count(0, g->size() + 1);
  std::uniform_int_distribution<Mask> subset(0, g->all());
  std::vector<Mask> gens(count(rng));
  for (auto& s : gens) s = subset(rng);
  return FiniteTopology::generated_by(g, gens);
}

// Standard example S_k: a_i below b_j iff i != j. Elements a0..a{k-1},
// b0..b{k-1}; the weak partial order.
inline Relation standard_example(std::size_t k) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < k; ++i) labels.push_back("a" + std::to_string(i));
  for (std::size_t i = 0; i < k; ++i) labels.push_back("b" + std::to_string(i));
  auto g = GroundSet::make(labels);
  Relation p = Relation::identity(g);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j) p.insert(k + j, i);  // b_j above a_i
  return p;
}

inline Relation chain(const GroundPtr& g) {
  Relation p(g);
  for (std::size_t i = 0; i < g->size(); ++i)
    for (std::size_t j = i; j < g->size(); ++j) p.insert(i, j);
  return p;
}

}  // namespace porder::testing
