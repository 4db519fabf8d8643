#pragma once

#include <string>

#include "json.hpp"
#include "porder/embedding.hpp"
#include "porder/pareto.hpp"
#include "porder/realizer.hpp"
#include "porder/relation.hpp"
#include "porder/semiorder.hpp"
#include "porder/topology.hpp"

namespace porder::io {

using Json = nlohmann::ordered_json;

enum class RelationKind { Weak, Strict };

// A relation file stores either P ("weak") or Q ("strict"); the other form
// is derived with polar().
struct LoadedRelation {
  GroundPtr ground;
  RelationKind kind;
  Relation weak;
  Relation strict;
};

// All parse errors are Error(InvalidInput) naming the offending field.
LoadedRelation parse_relation(const Json& doc);
// Missing "opens_generators" means the discrete topology.
FiniteTopology parse_topology(const Json& doc, const GroundPtr& ground);

struct ProbeInput {
  double epsilon;
  GridSpec grid;
  SampledFamily family;
};

ProbeInput parse_probe(const Json& doc);

Json pairs_to_json(const Relation& r);
Json to_json(const PropertyReport& p);
Json to_json(const TopologyReport& t);
Json orders_to_json(const std::vector<LinearOrder>& orders);
Json to_json(const MultiUtility& v);
Json to_json(const HasseDiagram& h, const GroundSet& ground);
Json to_json(const DecompositionReport& d, const GroundSet& ground);
Json to_json(const ProbeViolation& v);

Json read_json_file(const std::string& path);

}  // namespace porder::io
