#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "porder/relation.hpp"
#include "porder/topology.hpp"

namespace porder {

enum class Semantics { Existential, Pareto };

// A finite family of real utilities on the ground set; columns[j][x] is
// v_j(x).
struct MultiUtility {
  GroundPtr ground;
  std::vector<std::vector<double>> columns;
  Semantics semantics = Semantics::Existential;
  bool continuity_checked = false;

  std::size_t k() const { return columns.size(); }
};

// Rank utility of a complete, transitive relation that is closed in the
// product topology: v(x) counts the indifference classes strictly below x.
std::vector<double> debreu_utility(const Relation& p, const FiniteTopology& t);

// Continuous existential multi-utility for a complete, negatively transitive,
// closed weak relation p. Columns come from the interiors of the strict parts
// of a realizer of the strict relation.
MultiUtility build_multi_embedding(const Relation& p, const FiniteTopology& t);

// (x,y) in p iff some v has v(x) >= v(y), and (x,y) in polar(p) iff every v
// has v(x) > v(y).
bool verify_existential_embedding(const Relation& p, const MultiUtility& v);

struct HasseDiagram {
  std::vector<std::array<double, 2>> points;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

// Covering pairs of a strict relation: (x,y) in q with no z between them.
std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(const Relation& q);

// Projects each utility vector onto the plane spanned by the identity line
// and the direction e_1 - mean. This is one admissible choice of plane; any
// plane through the identity line would do.
HasseDiagram hasse_projection(const MultiUtility& v, const Relation& q);

}  // namespace porder
