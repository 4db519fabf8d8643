#include "porder/io.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include "porder/error.hpp"

namespace porder::io {
namespace {

[[noreturn]] void bad_field(const std::string& field, const std::string& why) {
  throw Error(ErrorKind::InvalidInput, "field '" + field + "': " + why);
}

std::size_t lookup(const GroundSet& ground, const Json& label, const std::string& field) {
  if (!label.is_string()) bad_field(field, "element labels must be strings");
  auto idx = ground.index_of(label.get<std::string>());
  if (!idx) bad_field(field, "unknown element '" + label.get<std::string>() + "'");
  return *idx;
}

double number(const Json& j, const std::string& field) {
  if (!j.is_number()) bad_field(field, "expected a number");
  return j.get<double>();
}

std::vector<double> evaluate_table(const Json& table, const std::vector<double>& points,
                                   double step, const std::string& field) {
  if (!table.is_object()) bad_field(field, "table must map sample points to values");
  std::vector<double> values(points.size());
  std::vector<bool> seen(points.size(), false);
  for (const auto& [key, value] : table.items()) {
    double at = 0.0;
    try {
      std::size_t used = 0;
      at = std::stod(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      bad_field(field, "table key '" + key + "' is not a number");
    }
    const double pos = (at - points.front()) / step;
    const auto i = static_cast<long long>(std::llround(pos));
    if (i < 0 || static_cast<std::size_t>(i) >= points.size() ||
        std::abs(pos - static_cast<double>(i)) > 1e-6) {
      bad_field(field, "table key '" + key + "' is not a grid point");
    }
    values[static_cast<std::size_t>(i)] = number(value, field + "." + key);
    seen[static_cast<std::size_t>(i)] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    if (!seen[i]) bad_field(field, "table misses grid point " + std::to_string(points[i]));
  }
  return values;
}

}  // namespace

LoadedRelation parse_relation(const Json& doc) {
  if (!doc.is_object()) bad_field("<root>", "expected an object");
  if (!doc.contains("elements") || !doc["elements"].is_array()) {
    bad_field("elements", "expected an array of labels");
  }
  std::vector<std::string> labels;
  for (const auto& e : doc["elements"]) {
    if (!e.is_string()) bad_field("elements", "labels must be strings");
    labels.push_back(e.get<std::string>());
  }
  GroundPtr ground;
  try {
    ground = GroundSet::make(std::move(labels));
  } catch (const Error& e) {
    bad_field("elements", e.what());
  }

  RelationKind kind = RelationKind::Weak;
  if (doc.contains("kind")) {
    const auto& k = doc["kind"];
    if (k == "weak") {
      kind = RelationKind::Weak;
    } else if (k == "strict") {
      kind = RelationKind::Strict;
    } else {
      bad_field("kind", "expected \"weak\" or \"strict\"");
    }
  }

  Relation stored(ground);
  if (doc.contains("pairs")) {
    if (!doc["pairs"].is_array()) bad_field("pairs", "expected an array of [x, y] pairs");
    for (std::size_t i = 0; i < doc["pairs"].size(); ++i) {
      const auto& pair = doc["pairs"][i];
      const std::string field = "pairs[" + std::to_string(i) + "]";
      if (!pair.is_array() || pair.size() != 2) bad_field(field, "expected [x, y]");
      stored.insert(lookup(*ground, pair[0], field), lookup(*ground, pair[1], field));
    }
  }
  Relation other = polar(stored);
  if (kind == RelationKind::Weak) return {ground, kind, std::move(stored), std::move(other)};
  return {ground, kind, std::move(other), std::move(stored)};
}

FiniteTopology parse_topology(const Json& doc, const GroundPtr& ground) {
  if (doc.is_null() || !doc.contains("opens_generators")) return FiniteTopology::discrete(ground);
  const auto& gens = doc["opens_generators"];
  if (!gens.is_array()) bad_field("opens_generators", "expected an array of element lists");
  std::vector<Mask> masks;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const std::string field = "opens_generators[" + std::to_string(i) + "]";
    if (!gens[i].is_array()) bad_field(field, "expected an array of labels");
    Mask m = 0;
    for (const auto& label : gens[i]) m |= bit(lookup(*ground, label, field));
    masks.push_back(m);
  }
  return FiniteTopology::generated_by(ground, masks);
}

ProbeInput parse_probe(const Json& doc) {
  if (!doc.is_object()) bad_field("<root>", "expected an object");
  if (!doc.contains("epsilon")) bad_field("epsilon", "missing");
  ProbeInput in{number(doc["epsilon"], "epsilon"), GridSpec{}, SampledFamily{}};
  if (!(in.epsilon > 0.0)) bad_field("epsilon", "must be positive");
  if (doc.contains("grid")) {
    const auto& g = doc["grid"];
    if (!g.is_object()) bad_field("grid", "expected {min, max, step}");
    for (const char* key : {"min", "max", "step"}) {
      if (!g.contains(key)) bad_field(std::string("grid.") + key, "missing");
    }
    in.grid = GridSpec{number(g["min"], "grid.min"), number(g["max"], "grid.max"),
                       number(g["step"], "grid.step")};
    if (!(in.grid.step > 0.0) || !(in.grid.max >= in.grid.min)) {
      bad_field("grid", "needs step > 0 and max >= min");
    }
  }
  in.family.points = in.grid.points();
  if (!doc.contains("family") || !doc["family"].is_array()) {
    bad_field("family", "expected an array of {\"alpha\": a} or {\"table\": {...}} entries");
  }
  const auto& family = doc["family"];
  for (std::size_t i = 0; i < family.size(); ++i) {
    const std::string field = "family[" + std::to_string(i) + "]";
    const auto& member = family[i];
    std::vector<double> column;
    if (member.contains("alpha")) {
      const double alpha = number(member["alpha"], field + ".alpha");
      for (double x : in.family.points) column.push_back(v_alpha(x, alpha, in.epsilon));
    } else if (member.contains("table")) {
      column = evaluate_table(member["table"], in.family.points, in.grid.step, field + ".table");
    } else {
      bad_field(field, "expected an \"alpha\" or \"table\" entry");
    }
    in.family.columns.push_back(std::move(column));
  }
  return in;
}

Json pairs_to_json(const Relation& r) {
  Json out = Json::array();
  for (auto [x, y] : r.pairs()) {
    out.push_back({r.ground()->label(x), r.ground()->label(y)});
  }
  return out;
}

Json to_json(const PropertyReport& p) {
  return Json{{"reflexive", p.reflexive},
              {"asymmetric", p.asymmetric},
              {"antisymmetric", p.antisymmetric},
              {"transitive", p.transitive},
              {"negatively_transitive", p.negatively_transitive},
              {"complete", p.complete},
              {"partial_order", p.partial_order},
              {"linear_order", p.linear_order}};
}

Json to_json(const TopologyReport& t) {
  return Json{{"is_closed", t.is_closed},
              {"is_open", t.is_open},
              {"closure", pairs_to_json(t.closure)},
              {"interior", pairs_to_json(t.interior)}};
}

Json orders_to_json(const std::vector<LinearOrder>& orders) {
  Json list = Json::array();
  for (const auto& o : orders) {
    Json ranking = Json::array();
    for (std::size_t x : o.ranking()) ranking.push_back(o.ground()->label(x));
    list.push_back(std::move(ranking));
  }
  return Json{{"orders", std::move(list)}};
}

Json to_json(const MultiUtility& v) {
  Json columns = Json::object();
  for (std::size_t j = 0; j < v.columns.size(); ++j) {
    Json column = Json::object();
    for (std::size_t x = 0; x < v.columns[j].size(); ++x) {
      column[v.ground->label(x)] = v.columns[j][x];
    }
    columns["v" + std::to_string(j)] = std::move(column);
  }
  return Json{{"semantics", v.semantics == Semantics::Existential ? "existential" : "pareto"},
              {"continuity_checked", v.continuity_checked},
              {"columns", std::move(columns)}};
}

Json to_json(const HasseDiagram& h, const GroundSet& ground) {
  Json points = Json::object();
  for (std::size_t x = 0; x < h.points.size(); ++x) {
    points[ground.label(x)] = {h.points[x][0], h.points[x][1]};
  }
  Json edges = Json::array();
  for (auto [x, y] : h.edges) edges.push_back({ground.label(x), ground.label(y)});
  return Json{{"points", std::move(points)}, {"edges", std::move(edges)}};
}

Json to_json(const DecompositionReport& d, const GroundSet& ground) {
  Json failures = Json::array();
  for (const auto& f : d.failures) {
    failures.push_back(
        Json{{"x", ground.label(f.x)}, {"y", ground.label(f.y)}, {"case", f.proof_case}});
  }
  return Json{{"holds", d.holds()}, {"failures", std::move(failures)}};
}

Json to_json(const ProbeViolation& v) {
  return Json{{"x", v.x},
              {"y", v.y},
              {"failed_side", std::string(to_string(v.failed_side))},
              {"spurious", v.spurious}};
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::InvalidInput, "'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace porder::io
