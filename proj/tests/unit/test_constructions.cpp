#include <doctest.h>

#include "oracles.hpp"
#include "turanforge/errors.hpp"

using namespace turanforge;

TEST_CASE("pair maps") {
  PairMap m(4, 3);
  m.set(2, 1, 2);
  CHECK(m.at(1, 2) == 2);
  CHECK(m.at(2, 1) == 2);
  CHECK_THROWS_AS(m.set(0, 1, 3), ArgumentError);
  CHECK_THROWS_AS(m.at(0, 0), ArgumentError);
  CHECK(random_pairmap(30, 3, 5) == random_pairmap(30, 3, 5));
  CHECK_FALSE(random_pairmap(30, 3, 5) == random_pairmap(30, 3, 6));
  const PairMap one = random_pairmap(2, 2, 1);
  CHECK(one.values().size() == 1);
  CHECK(one.at(0, 1) <= 1);
  const PairMap big = random_pairmap(100, 3, 2024);
  std::array<int, 3> hist{};
  for (auto v : big.values()) ++hist[v];
  for (int h : hist) CHECK(std::abs(h - 1650) <= 83);
}

TEST_CASE("psi hypergraph") {
  CHECK(psi_hypergraph(PairMap(6, 3)).edge_count() == 0);
  PairMap p(3, 3);
  p.set(0, 1, 1);
  const Hypergraph3 h = psi_hypergraph(p);
  CHECK(h.edge_count() == 1);
  CHECK(h.has_edge(0, 1, 2));
  CHECK_THROWS_AS(psi_hypergraph(PairMap(4, 2)), ArgumentError);
  CHECK(psi_hypergraph(PairMap(2, 3)).edge_count() == 0);
  const PairMap q = random_pairmap(9, 3, 77);
  const Hypergraph3 hq = psi_hypergraph(q);
  for (const auto& t : oracle::subsets(9, 3)) CHECK(hq.has_edge(t[0], t[1], t[2]) == oracle::psi_edge(q, t[0], t[1], t[2]));
  // Sampled psi at n = 7: every 5-subset misses a triple.
  for (std::uint64_t s = 0; s < 50; ++s) CHECK_FALSE(oracle::first_clique(psi_hypergraph(random_pairmap(7, 3, s)), 5));
}

TEST_CASE("ramsey hypergraph") {
  CHECK(ramsey_hypergraph(PairMap(6, 2)).edge_count() == 0);
  PairMap p(3, 2);
  p.set(1, 2, 1);
  CHECK(ramsey_hypergraph(p).edge_count() == 1);
  for (std::uint64_t s = 0; s < 200; ++s) {
    const PairMap phi = random_pairmap(6, 2, s);
    const Hypergraph3 h = ramsey_hypergraph(phi);
    CHECK_FALSE(oracle::is_clique(h, {0, 1, 2, 3, 4, 5}));
    for (const auto& t : oracle::subsets(6, 3)) {
      const bool mono = phi.at(t[0], t[1]) == phi.at(t[0], t[2]) && phi.at(t[0], t[1]) == phi.at(t[1], t[2]);
      CHECK(h.has_edge(t[0], t[1], t[2]) == !mono);
    }
  }
}

TEST_CASE("mod-3 reduced construction") {
  const ReducedHypergraph a = mod3_reduced({0, 1, 2, 3, 4}, 3);
  CHECK(oracle::min_ee_density(a) == Rational(1, 3));
  CHECK_FALSE(oracle::supports(a, 5));
  const ReducedHypergraph t = mod3_reduced({0, 1, 2}, 3);
  CHECK(t.edge_count() == 9);
  CHECK(mod3_reduced({0, 1, 2}, 6).edge_count() == 9 * 8);
  CHECK_THROWS_AS(mod3_reduced({0, 1, 2}, 4), ArgumentError);
  // Edge rule on the block labels.
  const ReducedHypergraph b = mod3_reduced({2, 5, 9}, 6);
  for (int x = 0; x < 6; ++x)
    for (int y = 0; y < 6; ++y)
      for (int z = 0; z < 6; ++z)
        CHECK(b.has_edge(2, 5, 9, x, y, z) == ((mod3_block(x, 6) + mod3_block(y, 6) + mod3_block(z, 6)) % 3 == 1));
  const LabelledReduced lr = mod3_reduced_labelled({0, 1, 2, 3}, 5, 99);
  for (const Triple& tr : lr.graph.triples())
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y)
        for (int z = 0; z < 5; ++z) {
          const int s = lr.labels.at({tr.a, tr.b})[x] + lr.labels.at({tr.a, tr.c})[y] + lr.labels.at({tr.b, tr.c})[z];
          CHECK(lr.graph.has_edge(tr.a, tr.b, tr.c, x, y, z) == (s % 3 == 1));
        }
}

TEST_CASE("random preimages") {
  const ReducedHypergraph a = mod3_reduced({0, 1, 2, 3, 4}, 3);
  SUBCASE("homomorphism and class sizes") {
    const Preimage p = random_preimage(a, 4, 8);
    for (const ClassKey& k : p.graph.classes()) CHECK(p.graph.class_size(k) == 4);
    for (const Triple& t : p.graph.triples()) {
      for (const auto& e : p.graph.edges(t))
        CHECK(a.has_edge(t.a, t.b, t.c, p.h.at({t.a, t.b})[e[0]], p.h.at({t.a, t.c})[e[1]], p.h.at({t.b, t.c})[e[2]]));
      // And every triple of preimages of an edge is an edge.
      for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
          for (int z = 0; z < 4; ++z) {
            const bool src = a.has_edge(t.a, t.b, t.c, p.h.at({t.a, t.b})[x], p.h.at({t.a, t.c})[y], p.h.at({t.b, t.c})[z]);
            CHECK(p.graph.has_edge(t.a, t.b, t.c, x, y, z) == src);
          }
    }
    CHECK(supports_clique(p.graph, 5).status == SearchStatus::Absent);
  }
  SUBCASE("ell = 1 picks one vertex per class") {
    const Preimage p = random_preimage(a, 1, 3);
    for (const Triple& t : p.graph.triples())
      CHECK(p.graph.edge_count(t) ==
            static_cast<std::size_t>(a.has_edge(t.a, t.b, t.c, p.h.at({t.a, t.b})[0], p.h.at({t.a, t.c})[0], p.h.at({t.b, t.c})[0])));
  }
  SUBCASE("densities concentrate") {
    oracle::Gen g(4);
    const ReducedHypergraph src = oracle::random_reduced({0, 1, 2, 3}, 3, 0.5, g);
    const Preimage p = random_preimage(src, 200, 12);
    for (const Triple& t : src.triples()) {
      const double ds = static_cast<double>(src.edge_count(t)) / 27.0;
      const double dp = static_cast<double>(p.graph.edge_count(t)) / 8e6;
      CHECK(std::abs(ds - dp) < 0.05);
    }
  }
  SUBCASE("many preimages of a K5-free A stay K5-free") {
    for (std::uint64_t s = 0; s < 10; ++s) CHECK_FALSE(supports_clique(random_preimage(a, 3, s).graph, 5).found());
  }
  CHECK_THROWS_AS(random_preimage(a, 0, 1), ArgumentError);
  CHECK_THROWS_AS(random_preimage(ReducedHypergraph::Builder({0, 1, 2}, 0).build(), 2, 1), ArgumentError);
}

TEST_CASE("non-monochromatic complete instance") {
  const ReducedHypergraph a = nonmono_complete({0, 1, 2, 3, 4});
  const Bicolouring phi = nonmono_colouring(a);
  CHECK(oracle::valid_bicolouring(a, phi));
  for (const Triple& t : a.triples())
    for (int x = 0; x < 2; ++x)
      for (int y = 0; y < 2; ++y)
        for (int z = 0; z < 2; ++z) CHECK(a.has_edge(t.a, t.b, t.c, x, y, z) == !(x == y && y == z));
  CHECK(complete_reduced({0, 1, 2}, 2).edge_count() == 8);
}
