#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace porder {

// Row and subset masks: bit j of a mask stands for element j.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxElements = 64;

inline Mask bit(std::size_t i) { return Mask{1} << i; }

// A finite, indexed set of labelled elements. Relations refer to their
// ground set by shared pointer and are only combined when the pointers match.
class GroundSet {
 public:
  static std::shared_ptr<const GroundSet> make(std::vector<std::string> labels);
  // Labels "0", "1", ... ; convenient for enumeration tests.
  static std::shared_ptr<const GroundSet> indexed(std::size_t n);

  std::size_t size() const { return labels_.size(); }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<std::size_t> index_of(const std::string& label) const;
  Mask all() const {
    return size() == kMaxElements ? ~Mask{0} : bit(size()) - 1;
  }

 private:
  explicit GroundSet(std::vector<std::string> labels);

  std::vector<std::string> labels_;
  std::unordered_map<std::string, std::size_t> index_;
};

using GroundPtr = std::shared_ptr<const GroundSet>;

// Binary relation on a ground set, stored as one bit row per element:
// bit j of row i is set iff (x_i, x_j) is in the relation.
class Relation {
 public:
  explicit Relation(GroundPtr ground);
  Relation(GroundPtr ground, std::vector<Mask> rows);

  static Relation empty(GroundPtr ground) { return Relation(std::move(ground)); }
  static Relation identity(GroundPtr ground);
  static Relation full(GroundPtr ground);
  static Relation from_pairs(
      GroundPtr ground,
      const std::vector<std::pair<std::size_t, std::size_t>>& pairs);

  const GroundPtr& ground() const { return ground_; }
  std::size_t size() const { return rows_.size(); }

  bool contains(std::size_t i, std::size_t j) const {
    return (rows_[i] >> j) & 1U;
  }
  void insert(std::size_t i, std::size_t j) { rows_[i] |= bit(j); }
  void erase(std::size_t i, std::size_t j) { rows_[i] &= ~bit(j); }

  Mask row(std::size_t i) const { return rows_[i]; }
  const std::vector<Mask>& rows() const { return rows_; }
  std::size_t pair_count() const;
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;

  bool operator==(const Relation& other) const;

  friend Relation operator&(const Relation& a, const Relation& b);
  friend Relation operator|(const Relation& a, const Relation& b);
  // Set difference a \ b.
  friend Relation operator-(const Relation& a, const Relation& b);

 private:
  GroundPtr ground_;
  std::vector<Mask> rows_;
};

// Throws GroundSetMismatch unless both relations live on the same ground set.
void require_same_ground(const Relation& a, const Relation& b);

bool is_subset(const Relation& a, const Relation& b);

// R* : reflection across the diagonal.
Relation dual(const Relation& r);
Relation complement(const Relation& r);
// (R*)^c ; maps a weak relation to its strict part and back.
Relation polar(const Relation& r);
Relation transitive_closure(const Relation& r);

struct PropertyReport {
  bool reflexive = false;
  bool asymmetric = false;
  bool antisymmetric = false;
  bool transitive = false;
  // The complement of the relation is transitive.
  bool negatively_transitive = false;
  bool complete = false;
  bool partial_order = false;
  bool linear_order = false;
};

PropertyReport properties(const Relation& r);

bool is_transitive(const Relation& r);

// x and y are incomparable: neither (x,y) nor (y,x) is in r.
inline bool incomparable(const Relation& r, std::size_t x, std::size_t y) {
  return !r.contains(x, y) && !r.contains(y, x);
}

}  // namespace porder
