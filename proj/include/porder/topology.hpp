#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "porder/relation.hpp"

namespace porder {

// A topology on a finite ground set. Finite spaces are fully described by
// the minimal open neighbourhood U_x of each point; the open family is kept
// as well for reporting.
class FiniteTopology {
 public:
  // Smallest topology containing the generators.
  static FiniteTopology generated_by(GroundPtr ground, std::span<const Mask> generators);
  static FiniteTopology discrete(GroundPtr ground);
  static FiniteTopology indiscrete(GroundPtr ground);
  // Topology whose minimal neighbourhoods are given directly. Each U_x must
  // contain x and U_y must be contained in U_x whenever y is in U_x.
  static FiniteTopology from_min_neighborhoods(GroundPtr ground, std::vector<Mask> min_nbhd);

  const GroundPtr& ground() const { return ground_; }
  // Sorted by (cardinality, sorted element list).
  const std::vector<Mask>& opens() const { return opens_; }
  Mask min_nbhd(std::size_t x) const { return min_nbhd_[x]; }
  const std::vector<Mask>& min_nbhds() const { return min_nbhd_; }
  bool is_open(Mask s) const;
  bool is_discrete() const;

 private:
  FiniteTopology(GroundPtr ground, std::vector<Mask> min_nbhd);

  GroundPtr ground_;
  std::vector<Mask> opens_;
  std::vector<Mask> min_nbhd_;
};

// Closure and interior in the product topology on X x X, using U_x x U_y as
// the minimal neighbourhood of (x, y).
Relation closure_in_product(const Relation& s, const FiniteTopology& t);
Relation interior_in_product(const Relation& s, const FiniteTopology& t);

struct TopologyReport {
  bool is_closed;
  bool is_open;
  Relation closure;
  Relation interior;
};

TopologyReport relation_topology_report(const Relation& s, const FiniteTopology& t);

// A real-valued map on a finite space is continuous iff it is constant on
// every minimal neighbourhood.
bool is_continuous_map(std::span<const double> values, const FiniteTopology& t);

}  // namespace porder
