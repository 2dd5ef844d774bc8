#include <doctest.h>

#include "oracles.hpp"
#include "turanforge/errors.hpp"

using namespace turanforge;

namespace {

bool inhabited(const ReducedHypergraph& a, const std::vector<int>& j, const InhabitedTriple& w) {
  for (std::size_t x = 0; x < j.size(); ++x)
    for (std::size_t y = x + 1; y < j.size(); ++y)
      for (std::size_t z = y + 1; z < j.size(); ++z)
        if (!a.has_edge(j[x], j[y], j[z], w.q.at(j[x], j[y]), w.r.at(j[x], j[z]), w.s.at(j[y], j[z]))) return false;
  return true;
}

bool avoids_naive(const Transversal& t, const CherrySet& c) {
  for (const auto& [tr, m] : c.slots()) {
    const CherryClasses cc = cherry_classes(tr, c.orientation());
    if (!t.contains(cc.first.lo, cc.first.hi) || !t.contains(cc.second.lo, cc.second.hi)) continue;
    if (m.test(static_cast<std::size_t>(t.at(cc.first.lo, cc.first.hi)),
               static_cast<std::size_t>(t.at(cc.second.lo, cc.second.hi))))
      return false;
  }
  return true;
}

} // namespace

TEST_CASE("builder and storage") {
  ReducedHypergraph::Builder b({7, 2, 5}, 3);
  CHECK(b.indices() == std::vector<int>{2, 5, 7});
  b.add_edge(7, 2, 5, 0, 1, 2); // a in P^{72}, b in P^{75}, c in P^{25}
  const ReducedHypergraph a = b.build();
  CHECK(a.has_edge(2, 5, 7, 2, 0, 1));
  CHECK(a.has_edge(5, 7, 2, 1, 2, 0));
  CHECK(a.edge_count() == 1);
  CHECK(a.edges({2, 5, 7}) == std::vector<std::array<int, 3>>{{2, 0, 1}});
  CHECK_THROWS_AS(ReducedHypergraph::Builder({1, 1, 2}, 2), ArgumentError);
  CHECK_THROWS_AS(b.add_edge(2, 5, 7, 3, 0, 0), ArgumentError);
  CHECK_THROWS_AS(a.has_edge(2, 5, 9, 0, 0, 0), ArgumentError);
  CHECK(a.to_builder().build() == a);
  // Tables agree with each other in every orientation.
  oracle::Gen g(8);
  const ReducedHypergraph r = oracle::random_reduced({0, 1, 2, 3}, {2, 3, 4, 5, 3, 2}, 0.4, g);
  for (const Triple& t : r.triples())
    for (Orientation o : kOrientations) {
      const CherryClasses cc = cherry_classes(t, o);
      for (int x = 0; x < r.class_size(cc.first); ++x)
        for (int y = 0; y < r.class_size(cc.second); ++y)
          CHECK(r.cherry_neighbours(t, o, x, y).count() == static_cast<std::size_t>(oracle::codegree(r, t, o, x, y)));
    }
}

TEST_CASE("codegree") {
  const ReducedHypergraph full = complete_reduced({0, 1, 2}, 4);
  CHECK(codegree(full, {ClassKey::of(0, 1), 2}, {ClassKey::of(1, 2), 3}).count == 4);
  const Codegree c = codegree(full, {ClassKey::of(0, 1), 2}, {ClassKey::of(0, 2), 3});
  CHECK(c.target == ClassKey::of(1, 2));
  const ReducedHypergraph empty = ReducedHypergraph::Builder({0, 1, 2}, 4).build();
  CHECK(codegree(empty, {ClassKey::of(0, 1), 0}, {ClassKey::of(1, 2), 0}).count == 0);
  CHECK_THROWS_AS(codegree(full, {ClassKey::of(0, 1), 0}, {ClassKey::of(0, 1), 1}), ArgumentError);
}

TEST_CASE("codegree density") {
  CHECK(min_ee_density(complete_reduced({0, 1, 2, 3}, 3)).value == Rational(1));
  const CodegreeMinimum m = min_ee_density(mod3_reduced({0, 1, 2, 3, 4, 5}, 3));
  CHECK(m.value == Rational(1, 3));
  for (const Rational& r : m.per_orientation) CHECK(r == Rational(1, 3));
  auto b = complete_reduced({0, 1, 2}, 2).to_builder();
  b.remove_edge(0, 1, 2, 1, 0, 1);
  const CodegreeMinimum one = min_ee_density(b.build());
  CHECK(one.value == Rational(1, 2));
  CHECK(one.has_witness);
  oracle::Gen g(5);
  for (int rep = 0; rep < 30; ++rep) {
    const ReducedHypergraph r = oracle::random_reduced({0, 2, 3, 9}, {2, 3, 2, 4, 3, 2}, 0.6, g);
    const CodegreeMinimum mm = min_ee_density(r);
    CHECK(mm.value == oracle::min_ee_density(r));
    if (mm.has_witness)
      CHECK(Rational(oracle::codegree(r, mm.triple, mm.orientation, mm.x, mm.y),
                     r.class_size(cherry_classes(mm.triple, mm.orientation).third)) == mm.value);
  }
}

TEST_CASE("vvv density") {
  CHECK(vvv_min_density(complete_reduced({0, 1, 2, 3}, 2)) == Rational(1));
  CHECK(vvv_min_density(mod3_reduced({0, 1, 2, 3}, 6)) == Rational(1, 3));
  CHECK(vvv_min_density(ReducedHypergraph::Builder({0, 1, 2}, 2).build()) == Rational(0));
  oracle::Gen g(6);
  for (int rep = 0; rep < 20; ++rep) {
    const ReducedHypergraph r = oracle::random_reduced({0, 1, 2, 3, 4}, 3, 0.5, g);
    CHECK(vvv_min_density(r) == oracle::constituent_density_min(r));
  }
  const ReducedHypergraph r = oracle::random_reduced({0, 1, 2, 3, 4, 5}, 2, 0.5, g);
  const std::vector<int> k{0, 1}, l{2, 3}, m{4, 5};
  Rational want(1);
  for (int x : k)
    for (int y : l)
      for (int z : m) want = std::min(want, Rational(static_cast<std::int64_t>(r.edge_count({x, y, z})), 8));
  CHECK(vvv_min_density(r, k, l, m) == want);
}

TEST_CASE("clique supports") {
  SUBCASE("complete") {
    const auto res = supports_clique(complete_reduced({0, 1, 2, 3, 4}, 2), 5);
    REQUIRE(res.found());
    CHECK(res.witness->indices == std::vector<int>{0, 1, 2, 3, 4});
    for (const auto& [k, v] : res.witness->transversal.entries()) CHECK(v == 0);
  }
  SUBCASE("mod3 absent") {
    CHECK(supports_clique(mod3_reduced({0, 1, 2, 3, 4}, 3), 5).status == SearchStatus::Absent);
    CHECK(supports_clique(mod3_reduced({0, 1, 2, 3, 4, 5}, 3), 5).status == SearchStatus::Absent);
    CHECK(supports_clique(mod3_reduced({0, 1, 2, 3}, 3), 4).found());
  }
  SUBCASE("nonmono pentagon") {
    const ReducedHypergraph a = nonmono_complete({0, 1, 2, 3, 4});
    const auto res = supports_clique(a, 5);
    REQUIRE(res.found());
    CHECK(is_clique_support(a, *res.witness));
    // Some pentagon is blue (1) and its complement red (0).
    int blue = 0;
    for (const auto& [k, v] : res.witness->transversal.entries()) blue += v;
    CHECK(blue == 5);
  }
  SUBCASE("budget") {
    const auto res = supports_clique(mod3_reduced({0, 1, 2, 3, 4, 5}, 3), 5, 10);
    CHECK(res.status == SearchStatus::BudgetExhausted);
  }
  SUBCASE("random against the enumeration oracle") {
    oracle::Gen g(12);
    for (int rep = 0; rep < 25; ++rep) {
      const ReducedHypergraph r = oracle::random_reduced({0, 1, 2, 3, 4}, 2, 0.8, g);
      const auto res = supports_clique(r, 4);
      CHECK(res.found() == oracle::supports(r, 4));
      if (res.found()) {
        CHECK(is_clique_support(r, *res.witness));
        CHECK(oracle::all_aligned_edges(r, res.witness->indices, res.witness->transversal));
      }
    }
  }
  CHECK_THROWS_AS(supports_clique(complete_reduced({0, 1, 2}, 2), 2), ArgumentError);
}

TEST_CASE("wickedness") {
  const ReducedHypergraph m = mod3_reduced({0, 1, 2, 3, 4}, 3);
  CHECK(is_wicked(m, Rational(0)).wicked == Tristate::True);
  CHECK(is_wicked(m, Rational(1, 100)).wicked == Tristate::False);
  CHECK(is_wicked(complete_reduced({0, 1, 2, 3, 4}, 2), Rational(1, 10)).wicked == Tristate::False);
  CHECK(is_wicked(ReducedHypergraph::Builder({0, 1, 2, 3, 4}, 2).build(), Rational(0)).wicked == Tristate::False);
  CHECK(is_wicked(mod3_reduced({0, 1, 2, 3, 4, 5}, 3), Rational(0), 5).wicked == Tristate::Indeterminate);
}

TEST_CASE("inhabited triples") {
  SUBCASE("J form") {
    const std::vector<int> j4{0, 1, 2, 3};
    const auto c = find_inhabited_triple(complete_reduced(j4, 2), j4);
    REQUIRE(c.found());
    CHECK(inhabited(complete_reduced(j4, 2), j4, *c.witness));
    const std::vector<int> j3{0, 1, 2};
    const ReducedHypergraph m = mod3_reduced(j3, 3);
    const auto d = find_inhabited_triple(m, j3);
    REQUIRE(d.found());
    CHECK(inhabited(m, j3, *d.witness));
    CHECK(find_inhabited_triple(ReducedHypergraph::Builder(j4, 2).build(), j4).status == SearchStatus::Absent);
    CHECK_THROWS_AS(find_inhabited_triple(m, std::vector<int>{0, 1}), ArgumentError);
  }
  SUBCASE("partite form") {
    const ReducedHypergraph m = mod3_reduced({0, 1, 2, 3, 4, 5}, 3);
    const std::vector<int> k{0, 1}, l{2, 3}, mm{4, 5};
    const auto c = find_inhabited_triple(m, k, l, mm);
    REQUIRE(c.found());
    for (int x : k)
      for (int y : l)
        for (int z : mm) CHECK(m.has_edge(x, y, z, c.witness->q.at(x, y), c.witness->r.at(x, z), c.witness->s.at(y, z)));
    CHECK_THROWS_AS(find_inhabited_triple(m, k, k, mm), ArgumentError);
  }
  SUBCASE("avoidance honoured, random instances") {
    oracle::Gen g(31);
    const std::vector<int> j{0, 1, 2, 3};
    int found = 0;
    for (int rep = 0; rep < 30; ++rep) {
      const ReducedHypergraph r = oracle::random_reduced(j, 3, 0.7, g);
      std::vector<CherrySet> avoid{CherrySet(Orientation::Left), CherrySet(Orientation::Right)};
      std::bernoulli_distribution coin(0.2);
      for (CherrySet& cs : avoid)
        for (const Triple& t : r.triples())
          for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y)
              if (coin(g)) cs.insert(r, t, x, y);
      const auto res = find_inhabited_triple(r, j, avoid);
      CHECK(res.status != SearchStatus::BudgetExhausted);
      if (!res.found()) continue;
      ++found;
      CHECK(inhabited(r, j, *res.witness));
      for (const CherrySet& cs : avoid) {
        CHECK(avoids(res.witness->q, cs));
        CHECK(avoids(res.witness->r, cs));
        CHECK(avoids(res.witness->s, cs));
      }
    }
    CHECK(found > 0);
  }
}

TEST_CASE("cherry avoidance") {
  oracle::Gen g(17);
  const std::vector<int> j{0, 1, 2, 3, 4};
  const ReducedHypergraph a = complete_reduced(j, 4);
  std::vector<ClassKey> cls = a.classes();
  const Transversal t = oracle::random_transversal(a, cls, g);
  CHECK(avoids(t, CherrySet()));
  CherrySet one(Orientation::Middle);
  const Triple tr{1, 2, 4};
  const CherryClasses cc = cherry_classes(tr, Orientation::Middle);
  one.insert(a, tr, t.at(cc.first.lo, cc.first.hi), t.at(cc.second.lo, cc.second.hi));
  CHECK_FALSE(avoids(t, one));
  std::bernoulli_distribution coin(0.05);
  for (int rep = 0; rep < 100; ++rep) {
    const Transversal tt = oracle::random_transversal(a, cls, g);
    CherrySet c(kOrientations[static_cast<std::size_t>(rep % 3)]);
    for (const Triple& x : a.triples())
      for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q)
          if (coin(g)) c.insert(a, x, p, q);
    CHECK(avoids(tt, c) == avoids_naive(tt, c));
  }
  CherrySet bad;
  bad.set_slot({0, 1, 2}, BitMatrix(3, 3));
  CHECK_THROWS_AS(bad.check_against(a), ArgumentError);
}

TEST_CASE("bicolourings and tau2") {
  const ReducedHypergraph m = mod3_reduced({0, 1, 2, 3, 4}, 3);
  CHECK_FALSE(validate_bicolouring(m, Bicolouring(m)));
  Bicolouring phi(m, Colour::Blue);
  for (const ClassKey& k : m.classes()) phi.set(k.lo, k.hi, 0, Colour::Red);
  CHECK_FALSE(validate_bicolouring(m, phi));
  CHECK_FALSE(oracle::valid_bicolouring(m, phi));
  CHECK(m.has_edge(0, 1, 2, 1, 1, 2));

  const ReducedHypergraph n = nonmono_complete({0, 1, 2, 3, 4});
  const Bicolouring nc = nonmono_colouring(n);
  CHECK(validate_bicolouring(n, nc));
  CHECK(tau2(n, nc) == Rational(1, 2));
  CHECK(tau2(n, nc.swapped()) == Rational(1, 2));
  CHECK(nc.swapped().swapped() == nc);
  CHECK(nc.members(ClassKey::of(0, 1), Colour::Blue).count() == 1);

  oracle::Gen g(44);
  for (int rep = 0; rep < 40; ++rep) {
    const ReducedHypergraph r = oracle::random_reduced({0, 1, 2, 3}, 4, 0.7, g);
    Bicolouring c(r);
    std::bernoulli_distribution coin(0.5);
    for (const ClassKey& k : r.classes())
      for (int v = 0; v < 4; ++v) c.set(k.lo, k.hi, v, coin(g) ? Colour::Blue : Colour::Red);
    CHECK(validate_bicolouring(r, c) == oracle::valid_bicolouring(r, c));
    CHECK(tau2(r, c) == oracle::tau2(r, c));
  }
}
