#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "porder/relation.hpp"
#include "porder/topology.hpp"

namespace porder {

// A linear order given as a ranking of element indices, highest first.
class LinearOrder {
 public:
  LinearOrder(GroundPtr ground, std::vector<std::size_t> ranking);

  const GroundPtr& ground() const { return ground_; }
  const std::vector<std::size_t>& ranking() const { return ranking_; }
  // (x, y) is in the weak relation iff x is ranked at or above y.
  const Relation& weak() const { return weak_; }
  Relation strict() const;
  // Number of elements ranked strictly below x.
  std::size_t rank_of(std::size_t x) const { return rank_[x]; }

  bool operator==(const LinearOrder& other) const { return ranking_ == other.ranking_; }

 private:
  GroundPtr ground_;
  std::vector<std::size_t> ranking_;
  std::vector<std::size_t> rank_;
  Relation weak_;
};

struct Realizer {
  std::vector<LinearOrder> orders;
  Relation target;
};

using OrderedPair = std::pair<std::size_t, std::size_t>;

// Extends the partial order p by the forced pair, then ranks by repeatedly
// taking a maximal remaining element, smallest index first.
LinearOrder linear_extension(const Relation& p, std::optional<OrderedPair> forced = std::nullopt);

// One extension per incomparable ordered pair, in index order, with
// duplicates dropped. The result covers every incomparable pair.
Realizer build_realizer(const Relation& p);

bool verify_realizer(const Relation& p, const Realizer& r);

// Intersection of the weak relations of the orders.
Relation intersect_orders(const std::vector<LinearOrder>& orders, const GroundPtr& ground);

// All linear extensions of p in lexicographic order of their rankings.
std::vector<LinearOrder> all_linear_extensions(const Relation& p);

struct SearchBudget {
  std::size_t max_k = 4;
  std::size_t max_n = 8;
};

struct DimensionResult {
  std::size_t dimension;
  std::vector<LinearOrder> witness;
};

// Smallest number of linear extensions intersecting to p. Subsets of the
// lexicographically enumerated extensions are tried in colex order per size
// and the first hit is the witness.
DimensionResult order_dimension(const Relation& p, SearchBudget budget = {});

// As order_dimension, restricted to extensions whose strict part is open in
// the product topology. Empty when no realizer by open orders exists at all.
std::optional<DimensionResult> open_order_dimension(const Relation& p, const FiniteTopology& t,
                                                    SearchBudget budget = {});

}  // namespace porder
