#include "porder/pareto.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

#include "porder/error.hpp"

namespace porder {

bool pareto_dominates(std::span<const double> u, std::span<const double> w) {
  if (u.size() != w.size()) {
    throw Error(ErrorKind::LengthMismatch, "tuples have different lengths");
  }
  bool strict = false;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] < w[i]) return false;
    strict |= u[i] > w[i];
  }
  return strict;
}

MultiUtility build_pareto_representation(const Relation& q) {
  const PropertyReport props = properties(q);
  if (!props.asymmetric || !props.transitive) {
    throw Error(ErrorKind::NotStrictPartialOrder,
                std::string("relation is not ") + (!props.asymmetric ? "asymmetric" : "transitive"));
  }
  const Realizer realizer = build_realizer(q | Relation::identity(q.ground()));
  MultiUtility out{q.ground(), {}, Semantics::Pareto, false};
  for (const auto& order : realizer.orders) {
    std::vector<double> column(q.size());
    for (std::size_t x = 0; x < q.size(); ++x) column[x] = static_cast<double>(order.rank_of(x));
    out.columns.push_back(std::move(column));
  }
  if (!verify_pareto_embedding(q, out)) {
    throw Error(ErrorKind::InternalContractViolation, "Pareto representation does not reproduce Q");
  }
  return out;
}

bool verify_pareto_embedding(const Relation& q, const MultiUtility& v) {
  if (v.semantics != Semantics::Pareto) {
    throw Error(ErrorKind::InvalidInput, "multi-utility carries the wrong semantics tag");
  }
  if (v.ground != q.ground()) {
    throw Error(ErrorKind::GroundSetMismatch, "utility family and relation use different ground sets");
  }
  if (v.columns.empty()) return false;
  const std::size_t n = q.size();
  std::vector<double> u(v.k());
  std::vector<double> w(v.k());
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t j = 0; j < v.k(); ++j) {
        u[j] = v.columns[j].at(x);
        w[j] = v.columns[j].at(y);
      }
      if (pareto_dominates(u, w) != q.contains(x, y)) return false;
    }
  }
  return true;
}

DecompositionReport decomposition_check(const Relation& q, const Realizer& r) {
  Relation strict_union = Relation::empty(q.ground());
  Relation weak_meet = Relation::full(q.ground());
  for (const auto& order : r.orders) {
    if (order.ground() != q.ground()) {
      throw Error(ErrorKind::GroundSetMismatch, "realizer and relation use different ground sets");
    }
    strict_union = strict_union | order.strict();
    weak_meet = weak_meet & order.weak();
  }
  const Relation rhs = strict_union & weak_meet;
  DecompositionReport report;
  for (std::size_t x = 0; x < q.size(); ++x) {
    for (std::size_t y = 0; y < q.size(); ++y) {
      if (rhs.contains(x, y) == q.contains(x, y)) continue;
      const int proof_case = q.contains(x, y) ? 1 : q.contains(y, x) ? 2 : 3;
      report.failures.push_back({x, y, proof_case});
    }
  }
  return report;
}

std::string_view to_string(FailedSide side) {
  return side == FailedSide::StrictUnion ? "strict_union" : "weak_intersection";
}

std::optional<ProbeViolation> continuous_pareto_probe(const SampledFamily& family, double eps) {
  if (family.columns.empty()) throw Error(ErrorKind::EmptyFamily, "probe needs at least one function");
  if (!(eps > 0.0)) throw Error(ErrorKind::NonpositiveEpsilon, "epsilon must be positive");
  const std::size_t m = family.points.size();
  for (const auto& column : family.columns) {
    if (column.size() != m) {
      throw Error(ErrorKind::LengthMismatch, "sampled column length differs from grid size");
    }
  }

  struct Candidate {
    double distance;
    std::size_t i;
    std::size_t j;
  };
  std::vector<Candidate> order;
  order.reserve(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      order.push_back({std::hypot(family.points[i] - eps, family.points[j]), i, j});
    }
  }
  std::sort(order.begin(), order.end(), [](const Candidate& a, const Candidate& b) {
    return std::tie(a.distance, a.i, a.j) < std::tie(b.distance, b.i, b.j);
  });

  for (const auto& c : order) {
    const double x = family.points[c.i];
    const double y = family.points[c.j];
    bool some_strict = false;
    bool all_weak = true;
    for (const auto& column : family.columns) {
      some_strict |= column[c.i] > column[c.j];
      all_weak &= column[c.i] >= column[c.j];
    }
    const bool in_q = x > y + eps;
    const bool represented = some_strict && all_weak;
    if (in_q == represented) continue;
    FailedSide side;
    if (in_q) {
      side = some_strict ? FailedSide::WeakIntersection : FailedSide::StrictUnion;
    } else {
      // Both sides admit the pair; the strict union is the side that should
      // have excluded a pair on or inside the threshold.
      side = FailedSide::StrictUnion;
    }
    return ProbeViolation{x, y, c.i, c.j, side, !in_q};
  }
  return std::nullopt;
}

}  // namespace porder
