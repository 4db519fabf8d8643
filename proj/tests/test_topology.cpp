#include "doctest.h"
#include "porder/error.hpp"
#include "porder/topology.hpp"
#include "support.hpp"

using namespace porder;
using namespace porder::testing;

namespace {

// Sierpinski space on {a, b} with opens {}, {a}, {a, b}.
struct Sierpinski {
  GroundPtr g = GroundSet::make({"a", "b"});
  FiniteTopology t = [this] {
    const Mask gens[] = {bit(0)};
    return FiniteTopology::generated_by(g, gens);
  }();
};

// Closure straight from the definition: (x,y) is in cl S iff every open
// product box around it meets S. Uses the full open family, not U_x.
Relation closure_by_opens(const Relation& s, const FiniteTopology& t) {
  Relation out(s.ground());
  for (std::size_t x = 0; x < s.size(); ++x)
    for (std::size_t y = 0; y < s.size(); ++y) {
      bool every = true;
      for (Mask u : t.opens()) {
        if (!(u & bit(x))) continue;
        for (Mask v : t.opens()) {
          if (!(v & bit(y))) continue;
          bool meets = false;
          for (std::size_t i = 0; i < s.size(); ++i)
            if ((u & bit(i)) && (s.row(i) & v)) meets = true;
          every = every && meets;
        }
      }
      if (every) out.insert(x, y);
    }
  return out;
}

}  // namespace

TEST_CASE("build_topology") {
  auto g = GroundSet::make({"a", "b", "c"});
  SUBCASE("singletons give the discrete topology") {
    const Mask gens[] = {bit(0), bit(1), bit(2)};
    const auto t = FiniteTopology::generated_by(g, gens);
    CHECK(t.is_discrete());
    CHECK(t.opens().size() == 8);
    for (std::size_t x = 0; x < 3; ++x) CHECK(t.min_nbhd(x) == bit(x));
  }
  SUBCASE("no generators give the indiscrete topology") {
    const auto t = FiniteTopology::generated_by(g, {});
    CHECK(t.opens() == std::vector<Mask>{0, g->all()});
  }
  SUBCASE("Sierpinski") {
    Sierpinski s;
    CHECK(s.t.opens() == std::vector<Mask>{0, bit(0), bit(0) | bit(1)});
    CHECK(s.t.min_nbhd(0) == bit(0));
    CHECK(s.t.min_nbhd(1) == (bit(0) | bit(1)));
  }
  SUBCASE("generator outside the ground set") {
    const Mask gens[] = {bit(5)};
    CHECK_THROWS_AS(FiniteTopology::generated_by(g, gens), Error);
  }
  SUBCASE("opens are closed under union and intersection and contain each U_x") {
    std::mt19937_64 rng(kDefaultSeed);
    auto g5 = GroundSet::indexed(5);
    for (int trial = 0; trial < 100; ++trial) {
      const auto t = random_topology(g5, rng);
      for (Mask a : t.opens()) {
        for (Mask b : t.opens()) {
          REQUIRE(t.is_open(a | b));
          REQUIRE(t.is_open(a & b));
        }
      }
      for (std::size_t x = 0; x < 5; ++x) {
        Mask meet = g5->all();
        for (Mask u : t.opens())
          if (u & bit(x)) meet &= u;
        REQUIRE(meet == t.min_nbhd(x));
        REQUIRE(t.is_open(t.min_nbhd(x)));
      }
    }
  }
}

TEST_CASE("closure and interior in the product topology") {
  Sierpinski s;
  CHECK(closure_in_product(Relation::from_pairs(s.g, {{0, 0}}), s.t) == Relation::full(s.g));
  CHECK(interior_in_product(Relation::from_pairs(s.g, {{0, 1}}), s.t) == Relation::empty(s.g));

  std::mt19937_64 rng(kDefaultSeed + 1);
  SUBCASE("discrete topology is the identity for both operators") {
    auto g = GroundSet::indexed(5);
    const auto t = FiniteTopology::discrete(g);
    for (int trial = 0; trial < 50; ++trial) {
      const Relation r = random_relation(g, rng);
      CHECK(closure_in_product(r, t) == r);
      CHECK(interior_in_product(r, t) == r);
    }
  }
  SUBCASE("minimal-neighbourhood formula agrees with the open-family definition") {
    for (std::size_t n = 1; n <= 4; ++n) {
      auto g = GroundSet::indexed(n);
      for (int trial = 0; trial < 50; ++trial) {
        const auto t = random_topology(g, rng);
        const Relation r = random_relation(g, rng, 0.3);
        REQUIRE(closure_in_product(r, t) == closure_by_opens(r, t));
      }
    }
  }
  SUBCASE("closure is extensive, monotone and idempotent; interior is its dual") {
    for (int trial = 0; trial < 200; ++trial) {
      auto g = GroundSet::indexed(1 + trial % 5);
      const auto t = random_topology(g, rng);
      const Relation a = random_relation(g, rng, 0.3);
      const Relation b = a | random_relation(g, rng, 0.3);
      const Relation cl = closure_in_product(a, t);
      REQUIRE(is_subset(a, cl));
      REQUIRE(is_subset(cl, closure_in_product(b, t)));
      REQUIRE(closure_in_product(cl, t) == cl);
      const Relation in = interior_in_product(a, t);
      REQUIRE(is_subset(in, a));
      REQUIRE(in == complement(closure_in_product(complement(a), t)));
    }
  }
  SUBCASE("interior identity, exhaustive on n <= 2 relations over all topologies on n <= 3") {
    for (std::size_t n = 1; n <= 3; ++n) {
      auto g = GroundSet::indexed(n);
      const auto tops = all_topologies(g);
      const std::uint64_t limit = n <= 2 ? (std::uint64_t{1} << (n * n)) : 512;
      for (const auto& t : tops)
        for (std::uint64_t code = 0; code < limit; ++code) {
          const Relation r = relation_from_code(g, code);
          REQUIRE(interior_in_product(r, t) ==
                  complement(closure_in_product(complement(r), t)));
          REQUIRE(closure_in_product(r, t) == closure_by_opens(r, t));
        }
    }
  }
}

TEST_CASE("relation_topology_report") {
  Sierpinski s;
  const Relation p = Relation::from_pairs(s.g, {{0, 0}, {1, 1}, {0, 1}});
  const TopologyReport rep = relation_topology_report(p, s.t);
  CHECK_FALSE(rep.is_closed);
  CHECK(rep.closure == Relation::full(s.g));

  const TopologyReport whole = relation_topology_report(Relation::full(s.g), s.t);
  CHECK(whole.is_closed);
  CHECK(whole.is_open);

  std::mt19937_64 rng(kDefaultSeed + 2);
  auto g = GroundSet::indexed(4);
  const auto discrete = FiniteTopology::discrete(g);
  for (int trial = 0; trial < 20; ++trial) {
    const auto rep2 = relation_topology_report(random_relation(g, rng), discrete);
    CHECK(rep2.is_closed);
    CHECK(rep2.is_open);
  }
  // A closed weak relation has an open strict part.
  for (int trial = 0; trial < 300; ++trial) {
    const auto t = random_topology(g, rng);
    const Relation w = random_relation(g, rng, 0.7);
    if (relation_topology_report(w, t).is_closed) {
      REQUIRE(relation_topology_report(polar(w), t).is_open);
    }
  }
}

TEST_CASE("is_continuous_map") {
  Sierpinski s;
  const std::vector<double> step{0.0, 1.0};
  const std::vector<double> flat{2.0, 2.0};
  CHECK_FALSE(is_continuous_map(step, s.t));
  CHECK(is_continuous_map(flat, s.t));
  CHECK(is_continuous_map(step, FiniteTopology::discrete(s.g)));

  auto g3 = GroundSet::indexed(3);
  const auto indiscrete = FiniteTopology::indiscrete(g3);
  CHECK(is_continuous_map(std::vector<double>{4, 4, 4}, indiscrete));
  CHECK_FALSE(is_continuous_map(std::vector<double>{4, 4, 5}, indiscrete));
  CHECK_THROWS_AS(is_continuous_map(std::vector<double>{1}, indiscrete), Error);
}

TEST_CASE("interior preserves strict weak orders under the discrete topology") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto g = GroundSet::indexed(n);
    const auto t = FiniteTopology::discrete(g);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << (n * n)); ++code) {
      const Relation q = relation_from_code(g, code);
      const auto p = properties(q);
      if (!p.asymmetric || !p.negatively_transitive) continue;
      const auto pi = properties(interior_in_product(q, t));
      REQUIRE(pi.asymmetric);
      REQUIRE(pi.negatively_transitive);
    }
  }
}

TEST_CASE("interior can break negative transitivity in a non-discrete space") {
  // Linear order y2 > z > x > y1 with U_y1 = {y1, y2}; every other point is
  // isolated. The interior drops (z, y1) and (x, y1) but keeps (z, x),
  // so its complement contains (z, y1) and (y1, x) but not (z, x).
  auto g = GroundSet::make({"x", "y1", "y2", "z"});
  const auto t = FiniteTopology::from_min_neighborhoods(
      g, {bit(0), bit(1) | bit(2), bit(2), bit(3)});
  const std::vector<std::size_t> level{1, 0, 3, 2};
  Relation q(g);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (level[i] > level[j]) q.insert(i, j);
  REQUIRE(properties(q).asymmetric);
  REQUIRE(properties(q).negatively_transitive);
  const Relation in = interior_in_product(q, t);
  CHECK(in.contains(3, 0));
  CHECK_FALSE(in.contains(3, 1));
  CHECK_FALSE(in.contains(0, 1));
  CHECK(properties(in).asymmetric);
  CHECK_FALSE(properties(in).negatively_transitive);
}
