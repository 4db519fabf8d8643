#include "porder/topology.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "porder/error.hpp"

namespace porder {
namespace {

void require_topology_ground(const Relation& s, const FiniteTopology& t) {
  if (s.ground() != t.ground()) {
    throw Error(ErrorKind::GroundSetMismatch,
                "relation and topology are defined over different ground sets");
  }
}

// Lexicographic comparison of the sorted element lists of two masks.
bool element_list_less(Mask a, Mask b) {
  while (a && b) {
    const int ea = std::countr_zero(a);
    const int eb = std::countr_zero(b);
    if (ea != eb) return ea < eb;
    a &= a - 1;
    b &= b - 1;
  }
  return !a && b;
}

}  // namespace

FiniteTopology::FiniteTopology(GroundPtr ground, std::vector<Mask> min_nbhd)
    : ground_(std::move(ground)), min_nbhd_(std::move(min_nbhd)) {
  // Every open set is a union of minimal neighbourhoods; close {}, X and the
  // U_x under pairwise union and intersection until nothing new appears.
  std::set<Mask> family{0, ground_->all()};
  family.insert(min_nbhd_.begin(), min_nbhd_.end());
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Mask> current(family.begin(), family.end());
    for (std::size_t i = 0; i < current.size(); ++i) {
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        grew |= family.insert(current[i] | current[j]).second;
        grew |= family.insert(current[i] & current[j]).second;
      }
    }
  }
  opens_.assign(family.begin(), family.end());
  std::sort(opens_.begin(), opens_.end(), [](Mask a, Mask b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return element_list_less(a, b);
  });
}

FiniteTopology FiniteTopology::generated_by(GroundPtr ground,
                                            std::span<const Mask> generators) {
  const Mask all = ground->all();
  for (Mask g : generators) {
    if (g & ~all) {
      throw Error(ErrorKind::InvalidInput, "generator is not a subset of the ground set");
    }
  }
  std::vector<Mask> nbhd(ground->size(), all);
  for (std::size_t x = 0; x < nbhd.size(); ++x) {
    for (Mask g : generators) {
      if (g & bit(x)) nbhd[x] &= g;
    }
  }
  return FiniteTopology(std::move(ground), std::move(nbhd));
}

FiniteTopology FiniteTopology::discrete(GroundPtr ground) {
  std::vector<Mask> nbhd(ground->size());
  for (std::size_t x = 0; x < nbhd.size(); ++x) nbhd[x] = bit(x);
  return FiniteTopology(std::move(ground), std::move(nbhd));
}

FiniteTopology FiniteTopology::indiscrete(GroundPtr ground) {
  std::vector<Mask> nbhd(ground->size(), ground->all());
  return FiniteTopology(std::move(ground), std::move(nbhd));
}

FiniteTopology FiniteTopology::from_min_neighborhoods(GroundPtr ground,
                                                      std::vector<Mask> min_nbhd) {
  if (min_nbhd.size() != ground->size()) {
    throw Error(ErrorKind::InvalidInput, "one minimal neighbourhood per element required");
  }
  for (std::size_t x = 0; x < min_nbhd.size(); ++x) {
    if (!(min_nbhd[x] & bit(x)) || (min_nbhd[x] & ~ground->all())) {
      throw Error(ErrorKind::InvalidInput, "minimal neighbourhood must contain its point");
    }
    for (Mask m = min_nbhd[x]; m; m &= m - 1) {
      const auto y = static_cast<std::size_t>(std::countr_zero(m));
      if (min_nbhd[y] & ~min_nbhd[x]) {
        throw Error(ErrorKind::InvalidInput, "minimal neighbourhoods are not nested");
      }
    }
  }
  return FiniteTopology(std::move(ground), std::move(min_nbhd));
}

bool FiniteTopology::is_open(Mask s) const {
  return std::binary_search(opens_.begin(), opens_.end(), s, [](Mask a, Mask b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return element_list_less(a, b);
  });
}

bool FiniteTopology::is_discrete() const {
  for (std::size_t x = 0; x < min_nbhd_.size(); ++x) {
    if (min_nbhd_[x] != bit(x)) return false;
  }
  return true;
}

Relation closure_in_product(const Relation& s, const FiniteTopology& t) {
  require_topology_ground(s, t);
  const std::size_t n = s.size();
  // For each x, the set of y reachable from some point of U_x.
  Relation out(s.ground());
  for (std::size_t x = 0; x < n; ++x) {
    Mask hit = 0;
    for (Mask m = t.min_nbhd(x); m; m &= m - 1) hit |= s.row(std::countr_zero(m));
    for (std::size_t y = 0; y < n; ++y) {
      if (t.min_nbhd(y) & hit) out.insert(x, y);
    }
  }
  return out;
}

Relation interior_in_product(const Relation& s, const FiniteTopology& t) {
  return complement(closure_in_product(complement(s), t));
}

TopologyReport relation_topology_report(const Relation& s, const FiniteTopology& t) {
  Relation cl = closure_in_product(s, t);
  Relation in = interior_in_product(s, t);
  const bool closed = cl == s;
  const bool open = in == s;
  return TopologyReport{closed, open, std::move(cl), std::move(in)};
}

bool is_continuous_map(std::span<const double> values, const FiniteTopology& t) {
  if (values.size() != t.ground()->size()) {
    throw Error(ErrorKind::LengthMismatch, "utility column length differs from ground set size");
  }
  for (std::size_t x = 0; x < values.size(); ++x) {
    for (Mask m = t.min_nbhd(x); m; m &= m - 1) {
      if (values[std::countr_zero(m)] != values[x]) return false;
    }
  }
  return true;
}

}  // namespace porder
