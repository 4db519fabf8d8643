#include "porder/relation.hpp"

#include <bit>
#include <string>

#include "porder/error.hpp"

namespace porder {

GroundSet::GroundSet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) index_.emplace(labels_[i], i);
}

std::shared_ptr<const GroundSet> GroundSet::make(std::vector<std::string> labels) {
  if (labels.empty()) {
    throw Error(ErrorKind::InvalidInput, "ground set must be nonempty");
  }
  if (labels.size() > kMaxElements) {
    throw Error(ErrorKind::InvalidInput,
                "ground set has " + std::to_string(labels.size()) +
                    " elements; at most 64 are supported");
  }
  std::unordered_map<std::string, std::size_t> seen;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!seen.emplace(labels[i], i).second) {
      throw Error(ErrorKind::InvalidInput, "duplicate element label '" + labels[i] + "'");
    }
  }
  return std::shared_ptr<const GroundSet>(new GroundSet(std::move(labels)));
}

std::shared_ptr<const GroundSet> GroundSet::indexed(std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return make(std::move(labels));
}

std::optional<std::size_t> GroundSet::index_of(const std::string& label) const {
  auto it = index_.find(label);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Relation::Relation(GroundPtr ground)
    : ground_(std::move(ground)), rows_(ground_->size(), 0) {}

Relation::Relation(GroundPtr ground, std::vector<Mask> rows)
    : ground_(std::move(ground)), rows_(std::move(rows)) {
  if (rows_.size() != ground_->size()) {
    throw Error(ErrorKind::InvalidInput, "row count does not match ground set size");
  }
  const Mask all = ground_->all();
  for (Mask& r : rows_) r &= all;
}

Relation Relation::identity(GroundPtr ground) {
  Relation r(std::move(ground));
  for (std::size_t i = 0; i < r.size(); ++i) r.insert(i, i);
  return r;
}

Relation Relation::full(GroundPtr ground) {
  Relation r(std::move(ground));
  for (Mask& row : r.rows_) row = r.ground_->all();
  return r;
}

Relation Relation::from_pairs(
    GroundPtr ground, const std::vector<std::pair<std::size_t, std::size_t>>& pairs) {
  Relation r(std::move(ground));
  for (auto [i, j] : pairs) {
    if (i >= r.size() || j >= r.size()) {
      throw Error(ErrorKind::InvalidInput, "pair index out of range");
    }
    r.insert(i, j);
  }
  return r;
}

std::size_t Relation::pair_count() const {
  std::size_t c = 0;
  for (Mask r : rows_) c += std::popcount(r);
  return c;
}

std::vector<std::pair<std::size_t, std::size_t>> Relation::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (contains(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

bool Relation::operator==(const Relation& other) const {
  require_same_ground(*this, other);
  return rows_ == other.rows_;
}

void require_same_ground(const Relation& a, const Relation& b) {
  if (a.ground() != b.ground()) {
    throw Error(ErrorKind::GroundSetMismatch,
                "relations are defined over different ground sets");
  }
}

Relation operator&(const Relation& a, const Relation& b) {
  require_same_ground(a, b);
  Relation out(a.ground_);
  for (std::size_t i = 0; i < a.size(); ++i) out.rows_[i] = a.rows_[i] & b.rows_[i];
  return out;
}

Relation operator|(const Relation& a, const Relation& b) {
  require_same_ground(a, b);
  Relation out(a.ground_);
  for (std::size_t i = 0; i < a.size(); ++i) out.rows_[i] = a.rows_[i] | b.rows_[i];
  return out;
}

Relation operator-(const Relation& a, const Relation& b) {
  require_same_ground(a, b);
  Relation out(a.ground_);
  for (std::size_t i = 0; i < a.size(); ++i) out.rows_[i] = a.rows_[i] & ~b.rows_[i];
  return out;
}

bool is_subset(const Relation& a, const Relation& b) {
  require_same_ground(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.row(i) & ~b.row(i)) return false;
  }
  return true;
}

Relation dual(const Relation& r) {
  Relation out(r.ground());
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (r.contains(i, j)) out.insert(j, i);
    }
  }
  return out;
}

Relation complement(const Relation& r) {
  std::vector<Mask> rows(r.rows());
  for (Mask& row : rows) row = ~row;
  return Relation(r.ground(), std::move(rows));
}

Relation polar(const Relation& r) { return complement(dual(r)); }

Relation transitive_closure(const Relation& r) {
  // Warshall over bit rows.
  std::vector<Mask> rows(r.rows());
  const std::size_t n = rows.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if ((rows[i] >> k) & 1U) rows[i] |= rows[k];
    }
  }
  return Relation(r.ground(), std::move(rows));
}

bool is_transitive(const Relation& r) {
  for (std::size_t i = 0; i < r.size(); ++i) {
    Mask reach = 0;
    for (Mask m = r.row(i); m; m &= m - 1) reach |= r.row(std::countr_zero(m));
    if (reach & ~r.row(i)) return false;
  }
  return true;
}

PropertyReport properties(const Relation& r) {
  const std::size_t n = r.size();
  PropertyReport p;
  p.reflexive = true;
  p.asymmetric = true;
  p.antisymmetric = true;
  p.complete = true;
  for (std::size_t i = 0; i < n; ++i) {
    if (!r.contains(i, i)) p.reflexive = false;
    for (std::size_t j = 0; j < n; ++j) {
      const bool fwd = r.contains(i, j);
      const bool bwd = r.contains(j, i);
      if (fwd && bwd) {
        p.asymmetric = false;
        if (i != j) p.antisymmetric = false;
      }
      if (!fwd && !bwd) p.complete = false;
    }
  }
  p.transitive = is_transitive(r);
  p.negatively_transitive = is_transitive(complement(r));
  p.partial_order = p.reflexive && p.antisymmetric && p.transitive;
  p.linear_order = p.partial_order && p.complete;
  return p;
}

}  // namespace porder
