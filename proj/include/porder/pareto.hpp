#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "porder/embedding.hpp"
#include "porder/realizer.hpp"
#include "porder/relation.hpp"

namespace porder {

// u dominates w: u >= w componentwise with at least one strict coordinate.
bool pareto_dominates(std::span<const double> u, std::span<const double> w);

// Rank utilities of a realizer of q with the diagonal added. No continuity
// is claimed.
MultiUtility build_pareto_representation(const Relation& q);

// q = {(x,y) : v(x) >= v(y) for all v, v(x) > v(y) for some v}.
bool verify_pareto_embedding(const Relation& q, const MultiUtility& v);

struct DecompositionFailure {
  std::size_t x;
  std::size_t y;
  // 1: (x,y) in q; 2: (y,x) in q; 3: x and y incomparable in q.
  int proof_case;
};

struct DecompositionReport {
  bool holds() const { return failures.empty(); }
  std::vector<DecompositionFailure> failures;
};

// Checks q == (union of strict parts) & (intersection of weak parts) pair by
// pair and classifies every pair where the identity breaks.
DecompositionReport decomposition_check(const Relation& q, const Realizer& r);

// Finitely many real functions tabulated on a common grid of sample points.
struct SampledFamily {
  std::vector<double> points;
  std::vector<std::vector<double>> columns;
};

enum class FailedSide { StrictUnion, WeakIntersection };

std::string_view to_string(FailedSide side);

struct ProbeViolation {
  double x;
  double y;
  std::size_t x_index;
  std::size_t y_index;
  FailedSide failed_side;
  // true: the family admits a pair outside the semiorder strict part;
  // false: the family misses a pair inside it.
  bool spurious;
};

// Looks for a sampled pair where the Pareto identity for the strict
// semiorder x > y + eps fails. Pairs are scanned by Euclidean distance from
// (eps, 0), ties broken by grid index, and the first violation is returned.
std::optional<ProbeViolation> continuous_pareto_probe(const SampledFamily& family, double eps);

}  // namespace porder
