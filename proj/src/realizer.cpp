#include "porder/realizer.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "porder/error.hpp"

namespace porder {

LinearOrder::LinearOrder(GroundPtr ground, std::vector<std::size_t> ranking)
    : ground_(std::move(ground)),
      ranking_(std::move(ranking)),
      rank_(ground_->size()),
      weak_(ground_) {
  const std::size_t n = ground_->size();
  if (ranking_.size() != n) {
    throw Error(ErrorKind::InvalidInput, "ranking must list every element exactly once");
  }
  Mask seen = 0;
  Mask below = ground_->all();
  std::vector<Mask> rows(n);
  for (std::size_t pos = 0; pos < n; ++pos) {
    const std::size_t x = ranking_[pos];
    if (x >= n || (seen & bit(x))) {
      throw Error(ErrorKind::InvalidInput, "ranking must list every element exactly once");
    }
    seen |= bit(x);
    rank_[x] = n - 1 - pos;
    rows[x] = below;
    below &= ~bit(x);
  }
  weak_ = Relation(ground_, std::move(rows));
}

Relation LinearOrder::strict() const { return weak_ - Relation::identity(ground_); }

namespace {

Relation strict_of(const Relation& weak) { return weak - Relation::identity(weak.ground()); }

void require_partial_order(const Relation& p) {
  const PropertyReport props = properties(p);
  if (!props.partial_order) {
    std::string why = !props.reflexive       ? "not reflexive"
                      : !props.antisymmetric ? "not antisymmetric"
                                             : "not transitive";
    throw Error(ErrorKind::NotPartialOrder, "relation is " + why);
  }
}

void extensions_rec(const Relation& strict, Mask remaining, std::vector<std::size_t>& prefix,
                    std::vector<LinearOrder>& out) {
  if (!remaining) {
    out.emplace_back(strict.ground(), prefix);
    return;
  }
  for (Mask m = remaining; m; m &= m - 1) {
    const auto x = static_cast<std::size_t>(std::countr_zero(m));
    // x may come next iff no remaining element sits strictly above it.
    bool maximal = true;
    for (Mask r = remaining & ~bit(x); r; r &= r - 1) {
      if (strict.contains(std::countr_zero(r), x)) {
        maximal = false;
        break;
      }
    }
    if (!maximal) continue;
    prefix.push_back(x);
    extensions_rec(strict, remaining & ~bit(x), prefix, out);
    prefix.pop_back();
  }
}

bool equals_rows(const std::vector<Mask>& a, const Relation& b) { return a == b.rows(); }

// Calls visit(indices) for every k-subset of {0..m-1} in colex order until
// visit returns true.
template <typename Visit>
bool for_each_colex_subset(std::size_t m, std::size_t k, Visit&& visit) {
  if (k > m) return false;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (visit(idx)) return true;
    // Advance: find the lowest position that can be incremented.
    std::size_t i = 0;
    while (i < k && idx[i] + 1 == (i + 1 < k ? idx[i + 1] : m)) ++i;
    if (i == k) return false;
    ++idx[i];
    for (std::size_t j = 0; j < i; ++j) idx[j] = j;
  }
}

std::optional<DimensionResult> search_realizer(const Relation& p,
                                               const std::vector<LinearOrder>& candidates,
                                               SearchBudget budget) {
  const std::size_t n = p.size();
  // No realizer at all if even every candidate together is too coarse.
  std::vector<Mask> all_rows(n, p.ground()->all());
  for (const auto& o : candidates) {
    for (std::size_t i = 0; i < n; ++i) all_rows[i] &= o.weak().row(i);
  }
  if (!equals_rows(all_rows, p)) return std::nullopt;

  for (std::size_t k = 1; k <= budget.max_k; ++k) {
    std::vector<std::size_t> hit;
    std::vector<Mask> rows(n);
    const bool found = for_each_colex_subset(candidates.size(), k, [&](const auto& idx) {
      std::fill(rows.begin(), rows.end(), p.ground()->all());
      for (std::size_t c : idx) {
        for (std::size_t i = 0; i < n; ++i) rows[i] &= candidates[c].weak().row(i);
      }
      if (!equals_rows(rows, p)) return false;
      hit = idx;
      return true;
    });
    if (found) {
      DimensionResult result{k, {}};
      for (std::size_t c : hit) result.witness.push_back(candidates[c]);
      return result;
    }
  }
  throw Error(ErrorKind::SearchBudgetExceeded,
              "no realizer with at most " + std::to_string(budget.max_k) + " orders");
}

void require_size_budget(const Relation& p, SearchBudget budget) {
  if (p.size() > budget.max_n) {
    throw Error(ErrorKind::SearchBudgetExceeded,
                "ground set has " + std::to_string(p.size()) + " elements; budget allows " +
                    std::to_string(budget.max_n));
  }
}

}  // namespace

LinearOrder linear_extension(const Relation& p, std::optional<OrderedPair> forced) {
  Relation r = p | Relation::identity(p.ground());
  if (forced) {
    if (forced->first >= p.size() || forced->second >= p.size()) {
      throw Error(ErrorKind::InvalidInput, "forced pair index out of range");
    }
    r.insert(forced->first, forced->second);
  }
  r = transitive_closure(r);
  if (!properties(r).antisymmetric) {
    throw Error(ErrorKind::AcyclicityViolation,
                "forcing the pair creates a cycle in the partial order");
  }
  const Relation strict = strict_of(r);
  const std::size_t n = p.size();
  std::vector<std::size_t> ranking;
  ranking.reserve(n);
  Mask remaining = p.ground()->all();
  while (remaining) {
    for (Mask m = remaining; m; m &= m - 1) {
      const auto x = static_cast<std::size_t>(std::countr_zero(m));
      bool maximal = true;
      for (Mask rest = remaining & ~bit(x); rest; rest &= rest - 1) {
        if (strict.contains(std::countr_zero(rest), x)) {
          maximal = false;
          break;
        }
      }
      if (maximal) {
        ranking.push_back(x);
        remaining &= ~bit(x);
        break;
      }
    }
  }
  return LinearOrder(p.ground(), std::move(ranking));
}

Realizer build_realizer(const Relation& p) {
  require_partial_order(p);
  Realizer out{{}, p};
  const std::size_t n = p.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y || !incomparable(p, x, y)) continue;
      LinearOrder ext = linear_extension(p, OrderedPair{x, y});
      if (std::find(out.orders.begin(), out.orders.end(), ext) == out.orders.end()) {
        out.orders.push_back(std::move(ext));
      }
    }
  }
  if (out.orders.empty()) out.orders.push_back(linear_extension(p));
  return out;
}

Relation intersect_orders(const std::vector<LinearOrder>& orders, const GroundPtr& ground) {
  Relation acc = Relation::full(ground);
  for (const auto& o : orders) acc = acc & o.weak();
  return acc;
}

bool verify_realizer(const Relation& p, const Realizer& r) {
  for (const auto& o : r.orders) {
    if (o.ground() != p.ground()) {
      throw Error(ErrorKind::GroundSetMismatch, "realizer and relation use different ground sets");
    }
  }
  if (r.orders.empty()) return false;
  if (!(intersect_orders(r.orders, p.ground()) == p)) return false;
  for (std::size_t x = 0; x < p.size(); ++x) {
    for (std::size_t y = 0; y < p.size(); ++y) {
      if (x == y || !incomparable(p, x, y)) continue;
      const bool covered = std::any_of(r.orders.begin(), r.orders.end(),
                                       [&](const LinearOrder& o) { return o.weak().contains(x, y); });
      if (!covered) return false;
    }
  }
  return true;
}

std::vector<LinearOrder> all_linear_extensions(const Relation& p) {
  require_partial_order(p);
  std::vector<LinearOrder> out;
  std::vector<std::size_t> prefix;
  extensions_rec(strict_of(p), p.ground()->all(), prefix, out);
  return out;
}

DimensionResult order_dimension(const Relation& p, SearchBudget budget) {
  require_size_budget(p, budget);
  const auto extensions = all_linear_extensions(p);
  auto result = search_realizer(p, extensions, budget);
  if (!result) {
    throw Error(ErrorKind::InternalContractViolation,
                "linear extensions of a partial order failed to realize it");
  }
  return std::move(*result);
}

std::optional<DimensionResult> open_order_dimension(const Relation& p, const FiniteTopology& t,
                                                    SearchBudget budget) {
  require_size_budget(p, budget);
  std::vector<LinearOrder> open_extensions;
  for (auto& ext : all_linear_extensions(p)) {
    const Relation strict = ext.strict();
    if (interior_in_product(strict, t) == strict) open_extensions.push_back(std::move(ext));
  }
  return search_realizer(p, open_extensions, budget);
}

}  // namespace porder
