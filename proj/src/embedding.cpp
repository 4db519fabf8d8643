#include "porder/embedding.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "porder/error.hpp"
#include "porder/realizer.hpp"

namespace porder {
namespace {

bool is_constant(const std::vector<double>& column) {
  return std::all_of(column.begin(), column.end(),
                     [&](double x) { return x == column.front(); });
}

void require_semantics(const MultiUtility& v, Semantics expected) {
  if (v.semantics != expected) {
    throw Error(ErrorKind::InvalidInput, "multi-utility carries the wrong semantics tag");
  }
  for (const auto& column : v.columns) {
    if (column.size() != v.ground->size()) {
      throw Error(ErrorKind::LengthMismatch, "utility column length differs from ground set size");
    }
  }
}

}  // namespace

std::vector<double> debreu_utility(const Relation& p, const FiniteTopology& t) {
  const PropertyReport props = properties(p);
  if (!props.complete || !props.transitive) {
    throw Error(ErrorKind::NotCompleteTransitive,
                std::string("relation is not ") + (!props.complete ? "complete" : "transitive"));
  }
  if (!relation_topology_report(p, t).is_closed) {
    throw Error(ErrorKind::NotContinuous, "relation is not closed in the product topology");
  }
  const std::size_t n = p.size();
  // Class representative: the smallest index indifferent to x.
  const Relation reverse = dual(p);
  std::vector<std::size_t> rep(n);
  for (std::size_t x = 0; x < n; ++x) {
    rep[x] = static_cast<std::size_t>(std::countr_zero(p.row(x) & reverse.row(x)));
  }
  std::vector<double> v(n);
  for (std::size_t x = 0; x < n; ++x) {
    Mask below_classes = 0;
    for (std::size_t y = 0; y < n; ++y) {
      if (p.contains(x, y) && !p.contains(y, x)) below_classes |= bit(rep[y]);
    }
    v[x] = static_cast<double>(std::popcount(below_classes));
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (p.contains(x, y) != (v[x] >= v[y])) {
        throw Error(ErrorKind::InternalContractViolation, "rank utility does not represent P");
      }
    }
  }
  if (!is_continuous_map(v, t)) {
    throw Error(ErrorKind::InternalContractViolation, "rank utility is not continuous");
  }
  return v;
}

MultiUtility build_multi_embedding(const Relation& p, const FiniteTopology& t) {
  const PropertyReport props = properties(p);
  if (!props.complete) {
    throw Error(ErrorKind::NotCompleteNegativelyTransitive, "relation is not complete");
  }
  if (!props.negatively_transitive) {
    throw Error(ErrorKind::NotCompleteNegativelyTransitive,
                "relation is not negatively transitive");
  }
  if (!relation_topology_report(p, t).is_closed) {
    throw Error(ErrorKind::NotContinuous, "relation is not closed in the product topology");
  }

  const GroundPtr& ground = p.ground();
  // Complete and transitive: one utility already represents P.
  if (props.transitive) {
    MultiUtility single{ground, {debreu_utility(p, t)}, Semantics::Existential, true};
    if (!verify_existential_embedding(p, single)) {
      throw Error(ErrorKind::InternalContractViolation, "embedding does not reproduce P");
    }
    return single;
  }

  const Relation q = polar(p);
  const Realizer realizer = build_realizer(q | Relation::identity(ground));

  std::vector<Relation> interiors;
  Relation meet = Relation::full(ground);
  for (const auto& order : realizer.orders) {
    interiors.push_back(interior_in_product(order.strict(), t));
    meet = meet & interiors.back();
  }
  if (!(meet == q)) {
    throw Error(ErrorKind::InternalContractViolation,
                "strict relation differs from the intersection of interiors");
  }

  MultiUtility out{ground, {}, Semantics::Existential, true};
  std::vector<double> constant;
  for (const auto& interior : interiors) {
    const PropertyReport ip = properties(interior);
    if (!ip.asymmetric || !ip.negatively_transitive) {
      throw Error(ErrorKind::InteriorNotNegativelyTransitive,
                  "interior of a realizer member is not a strict weak order");
    }
    std::vector<double> column = debreu_utility(polar(interior), t);
    if (is_constant(column)) {
      constant = std::move(column);
      continue;
    }
    if (std::find(out.columns.begin(), out.columns.end(), column) == out.columns.end()) {
      out.columns.push_back(std::move(column));
    }
  }
  if (out.columns.empty()) out.columns.push_back(std::move(constant));

  // Single greedy pass dropping columns the remaining family does not need.
  for (std::size_t j = 0; j < out.columns.size() && out.columns.size() > 1;) {
    MultiUtility trial = out;
    trial.columns.erase(trial.columns.begin() + static_cast<std::ptrdiff_t>(j));
    if (verify_existential_embedding(p, trial)) {
      out = std::move(trial);
    } else {
      ++j;
    }
  }
  if (!verify_existential_embedding(p, out)) {
    throw Error(ErrorKind::InternalContractViolation, "embedding does not reproduce P");
  }
  return out;
}

bool verify_existential_embedding(const Relation& p, const MultiUtility& v) {
  require_semantics(v, Semantics::Existential);
  if (v.ground != p.ground()) {
    throw Error(ErrorKind::GroundSetMismatch, "utility family and relation use different ground sets");
  }
  if (v.columns.empty()) return false;
  const Relation q = polar(p);
  const std::size_t n = p.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      bool some_weak = false;
      bool all_strict = true;
      for (const auto& column : v.columns) {
        some_weak |= column[x] >= column[y];
        all_strict &= column[x] > column[y];
      }
      if (some_weak != p.contains(x, y) || all_strict != q.contains(x, y)) return false;
    }
  }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(const Relation& q) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t x = 0; x < q.size(); ++x) {
    for (std::size_t y = 0; y < q.size(); ++y) {
      if (x == y || !q.contains(x, y)) continue;
      bool covered = true;
      for (std::size_t z = 0; z < q.size() && covered; ++z) {
        if (z != x && z != y && q.contains(x, z) && q.contains(z, y)) covered = false;
      }
      if (covered) edges.emplace_back(x, y);
    }
  }
  return edges;
}

HasseDiagram hasse_projection(const MultiUtility& v, const Relation& q) {
  if (!verify_existential_embedding(polar(q), v)) {
    throw Error(ErrorKind::VerificationFailure,
                "utility family does not embed the strict relation");
  }
  const auto k = static_cast<double>(v.k());
  HasseDiagram out;
  for (std::size_t x = 0; x < q.size(); ++x) {
    double sum = 0.0;
    for (const auto& column : v.columns) sum += column[x];
    out.points.push_back({sum / std::sqrt(k), v.columns.front()[x] - sum / k});
  }
  out.edges = covering_pairs(q);
  return out;
}

}  // namespace porder
