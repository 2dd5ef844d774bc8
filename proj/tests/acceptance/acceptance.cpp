// Acceptance battery: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "oracles.hpp"
#include "turanforge/embed.hpp"
#include "turanforge/parallel.hpp"
#include "turanforge/rng.hpp"

using namespace turanforge;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

unsigned workers() {
  const unsigned env = resolve_threads(0);
  if (env > 1) return env;
  return std::max(1U, std::thread::hardware_concurrency());
}

std::string secs(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

// ---------------------------------------------------------------- 1
Outcome exhaustive_psi() {
  constexpr std::size_t kMaps = 59049;
  std::atomic<std::size_t> lib_hits{0}, naive_hits{0};
  const std::vector<int> all{0, 1, 2, 3, 4};
  parallel_for(kMaps, workers(), [&](std::size_t code) {
    PairMap m(5, 3);
    std::size_t c = code;
    for (int x = 0; x < 5; ++x)
      for (int y = x + 1; y < 5; ++y) {
        m.set(x, y, static_cast<int>(c % 3));
        c /= 3;
      }
    const Hypergraph3 h = psi_hypergraph(m);
    if (contains_clique(h, 5).found()) ++lib_hits;
    if (oracle::is_clique(h, all)) ++naive_hits;
  });
  return {lib_hits == 0 && naive_hits == 0,
          std::to_string(lib_hits.load()) + " violations / 59049 maps (naive check: " + std::to_string(naive_hits.load()) +
              ")"};
}

// ---------------------------------------------------------------- 2
Outcome sampled_psi() {
  std::vector<SearchResult<std::vector<int>>> res(20);
  parallel_for(20, workers(), [&](std::size_t i) {
    res[i] = contains_clique(psi_hypergraph(random_pairmap(50, 3, i + 1)), 5);
  });
  std::size_t found = 0;
  std::uint64_t nodes = 0;
  for (const auto& r : res) {
    found += r.found() ? 1 : 0;
    nodes += r.nodes;
  }
  return {found == 0, std::to_string(found) + " of 20 seeds contain K5, " + std::to_string(nodes) + " search nodes"};
}

// ---------------------------------------------------------------- 3
Outcome ee_identity() {
  oracle::Gen g(2024);
  std::uniform_int_distribution<int> order(1, 8);
  std::uniform_real_distribution<double> dens(0.0, 1.0);
  int bad = 0;
  for (int rep = 0; rep < 100; ++rep) {
    const int n = order(g);
    const Hypergraph3 h = oracle::random_h3(n, dens(g), g);
    const PairSet full = PairSet::full(n);
    const std::int64_t six_e = 6 * static_cast<std::int64_t>(h.edge_count());
    const std::int64_t cube = static_cast<std::int64_t>(n) * n * n;
    if (e_ee(h, full, full) != six_e || oracle::e_ee(h, full, full) != six_e) ++bad;
    if (k_ee(full, full) != cube || oracle::k_ee(full, full, false) != cube) ++bad;
  }
  return {bad == 0, std::to_string(bad) + " mismatches over 100 hypergraphs"};
}

// ---------------------------------------------------------------- 4
Outcome link_quasirandom() {
  const Rational d(1, 3);
  Rational worst(0);
  std::size_t refuted = 0;
  QuasirandomOptions s;
  s.samples = 10'000;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    s.seed = seed;
    const Hypergraph3 h = psi_hypergraph(random_pairmap(200, 3, seed));
    for (const SubsetCertificate& c : certify_link_quasirandom(h, d, Rational(1, 20), s, workers())) {
      worst = std::max(worst, c.deviation);
      if (c.verdict == turanforge::Verdict::Refuted || c.deviation >= c.threshold) ++refuted;
    }
  }
  std::size_t uncertified = 0;
  QuasirandomOptions ex;
  ex.method = Method::Exhaustive;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    const Hypergraph3 h = psi_hypergraph(random_pairmap(16, 3, seed));
    for (const SubsetCertificate& c : certify_link_quasirandom(h, d, Rational(1, 10), ex, workers()))
      if (c.verdict != turanforge::Verdict::Certified) ++uncertified;
  }
  std::ostringstream os;
  os << "n=200: " << refuted << " refuted links of 1000, max |e(X)-d|X|^2/2| = " << to_string(worst) << " ("
     << to_double(worst) << "), raw |2e(X)-d|X|^2| = " << to_double(worst * 2) << ", threshold 2000; n=16 exhaustive: "
     << uncertified << " uncertified links of 48";
  return {refuted == 0 && uncertified == 0, os.str()};
}

// ---------------------------------------------------------------- 5
Outcome mod3_lower_bound() {
  const auto t0 = std::chrono::steady_clock::now();
  const ReducedHypergraph a = mod3_reduced({0, 1, 2, 3, 4, 5}, 3);
  const Rational lib = min_ee_density(a).value;
  const Rational naive = oracle::min_ee_density(a);
  const auto bf = brute_force_k5_support(a);
  const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool ok = lib == Rational(1, 3) && naive == lib && bf.status == SearchStatus::Absent && t < 5.0;
  return {ok, "min_ee_density " + to_string(lib) + " (naive " + to_string(naive) + "), brute force " +
                  std::string(name(bf.status)) + " after " + std::to_string(bf.nodes) + " nodes, " + secs(t)};
}

// ---------------------------------------------------------------- 6
Outcome ramsey_k6() {
  const auto t0 = std::chrono::steady_clock::now();
  constexpr std::size_t kColourings = 1U << 15;
  std::atomic<std::size_t> lib_hits{0}, naive_hits{0};
  const std::vector<int> all{0, 1, 2, 3, 4, 5};
  parallel_for(kColourings, workers(), [&](std::size_t code) {
    PairMap m(6, 2);
    int bit = 0;
    for (int x = 0; x < 6; ++x)
      for (int y = x + 1; y < 6; ++y) m.set(x, y, static_cast<int>(code >> bit++ & 1U));
    const Hypergraph3 h = ramsey_hypergraph(m);
    if (contains_clique(h, 6).found()) ++lib_hits;
    if (oracle::is_clique(h, all)) ++naive_hits;
  });
  const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return {lib_hits == 0 && naive_hits == 0 && t < 10.0,
          std::to_string(lib_hits.load()) + " violations / 32768 colourings (naive: " + std::to_string(naive_hits.load()) +
              "), " + secs(t)};
}

// ---------------------------------------------------------------- 7
Outcome exceptional_bound() {
  oracle::Gen g(77);
  std::uniform_int_distribution<int> size(1, 6);
  std::uniform_real_distribution<double> dens(0.05, 0.95);
  std::uniform_int_distribution<int> num(1, 12);
  const std::vector<int> j{0, 1, 2, 3};
  std::size_t violations = 0, mismatches = 0, cherries = 0;
  for (int rep = 0; rep < 1000; ++rep) {
    std::vector<int> sizes(6);
    for (int& s : sizes) s = size(g);
    const ReducedHypergraph a = oracle::random_reduced(j, sizes, dens(g), g);
    const VertexFamily phi = oracle::random_family(a, j, dens(g), g, true);
    const Rational eps(num(g), 12);
    for (Orientation o : kOrientations) {
      const CherrySet c = exceptional_cherries(a, phi, j, eps, o);
      for (const Triple& t : a.triples()) {
        const auto count = static_cast<std::int64_t>(c.size(t));
        cherries += c.size(t);
        if (count != oracle::exceptional_count(a, phi, t, o, eps)) ++mismatches;
        const auto third = static_cast<std::int64_t>(a.class_size(cherry_classes(t, o).third));
        if (eps * Rational(third * count) > Rational(oracle::induced_edges(a, phi, t))) ++violations;
      }
    }
  }
  return {violations == 0 && mismatches == 0,
          std::to_string(violations) + " violations over 1000 instances x 3 orientations x 4 triples (" +
              std::to_string(cherries) + " exceptional cherries, " + std::to_string(mismatches) + " count mismatches)"};
}

// ---------------------------------------------------------------- 8
Outcome qlink_width() {
  oracle::Gen g(88);
  std::uniform_int_distribution<int> size(2, 5);
  std::uniform_real_distribution<double> dens(0.6, 0.97);
  const std::vector<int> idx{0, 1, 2, 3, 4}, k{0, 1, 2}, l{3, 4};
  std::vector<ClassKey> cross;
  for (int x : k)
    for (int y : l) cross.push_back(ClassKey::of(x, y));
  int instances = 0, attempts = 0, violations = 0, families = 0;
  Rational min_margin(1);
  while (instances < 200) {
    ++attempts;
    std::vector<int> sizes(10);
    for (int& s : sizes) s = size(g);
    const ReducedHypergraph a = oracle::random_reduced(idx, sizes, dens(g), g);
    const Rational d = oracle::min_ee_density(a);
    if (d == Rational(0)) continue;
    ++instances;
    for (int rep = 0; rep < 5; ++rep) {
      const Transversal q = oracle::random_transversal(a, cross, g);
      for (int ell : l) {
        const VertexFamily lam = q_link(a, q, k, l, k, ell);
        ++families;
        Rational w(1);
        for (const auto& [key, set] : lam.sets())
          w = std::min(w, Rational(static_cast<std::int64_t>(set.count()), a.class_size(key)));
        if (w < d || hole_width(a, lam, k) != w) ++violations;
        min_margin = std::min(min_margin, w - d);
      }
    }
  }
  return {violations == 0, std::to_string(violations) + " violations over " + std::to_string(families) +
                               " q-link families in 200 dense instances (" + std::to_string(attempts) +
                               " drawn), min width - d = " + to_string(min_margin)};
}

// ---------------------------------------------------------------- 9

struct Coloured {
  ReducedHypergraph a;
  Bicolouring phi;
};

// 5..7 blue of 12 per class, all non-monochromatic triples, then greedy random
// thinning that never lets a monochromatic cherry drop below `floor` neighbours.
Coloured thinned_instance(oracle::Gen& g, int floor, double drop) {
  const std::vector<int> idx{0, 1, 2, 3, 4};
  constexpr int kSize = 12;
  ReducedHypergraph::Builder b(idx, kSize);
  const ReducedHypergraph shape = b.build();
  Bicolouring phi(shape);
  std::uniform_int_distribution<int> blues(5, 7);
  for (const ClassKey& c : shape.classes()) {
    std::vector<int> v(kSize);
    for (int i = 0; i < kSize; ++i) v[static_cast<std::size_t>(i)] = i;
    std::shuffle(v.begin(), v.end(), g);
    const int nb = blues(g);
    for (int i = 0; i < nb; ++i) phi.set(c.lo, c.hi, v[static_cast<std::size_t>(i)], Colour::Blue);
  }
  std::bernoulli_distribution coin(drop);
  for (const Triple& t : shape.triples()) {
    const ClassKey ij = ClassKey::of(t.a, t.b), ik = ClassKey::of(t.a, t.c), jk = ClassKey::of(t.b, t.c);
    std::vector<std::array<int, 3>> edges;
    for (int x = 0; x < kSize; ++x)
      for (int y = 0; y < kSize; ++y)
        for (int z = 0; z < kSize; ++z)
          if (!(phi.at(ij, x) == phi.at(ik, y) && phi.at(ik, y) == phi.at(jk, z))) edges.push_back({x, y, z});
    for (const auto& e : edges) b.add_edge(t.a, t.b, t.c, e[0], e[1], e[2]);
    // Codegree counters of the three cherry orientations.
    std::vector<int> left(kSize * kSize), middle(kSize * kSize), right(kSize * kSize);
    for (const auto& e : edges) {
      ++left[static_cast<std::size_t>(e[0] * kSize + e[1])];
      ++middle[static_cast<std::size_t>(e[0] * kSize + e[2])];
      ++right[static_cast<std::size_t>(e[1] * kSize + e[2])];
    }
    std::shuffle(edges.begin(), edges.end(), g);
    for (const auto& e : edges) {
      if (!coin(g)) continue;
      const auto l = static_cast<std::size_t>(e[0] * kSize + e[1]);
      const auto m = static_cast<std::size_t>(e[0] * kSize + e[2]);
      const auto r = static_cast<std::size_t>(e[1] * kSize + e[2]);
      const bool lm = phi.at(ij, e[0]) == phi.at(ik, e[1]);
      const bool mm = phi.at(ij, e[0]) == phi.at(jk, e[2]);
      const bool rm = phi.at(ik, e[1]) == phi.at(jk, e[2]);
      if ((lm && left[l] <= floor) || (mm && middle[m] <= floor) || (rm && right[r] <= floor)) continue;
      --left[l];
      --middle[m];
      --right[r];
      b.remove_edge(t.a, t.b, t.c, e[0], e[1], e[2]);
    }
  }
  return {b.build(), phi};
}

Outcome bicoloured_embedding() {
  const auto t0 = std::chrono::steady_clock::now();
  const ReducedHypergraph n = nonmono_complete({0, 1, 2, 3, 4});
  const Bicolouring np = nonmono_colouring(n);
  const EmbedResult base = embed_k5_bicoloured(n, np);
  const bool part_a = base.status == EmbedStatus::Found && base.trace.backtracks == 0 && base.tau2 == Rational(1, 2) &&
                      validate_embedding(n, np, *base.witness) &&
                      oracle::all_aligned_edges(n, base.witness->support().indices, base.witness->support().transversal);

  const Rational target = Rational(1, 3) + Rational(1, 20);
  // Smallest codegree count c with c/12 >= 23/60.
  const int floor = 5;
  struct Row {
    EmbedStatus status;
    bool valid = true;
    bool oracle_found = false;
    bool contradiction = false;
    std::uint64_t backtracks = 0;
  };
  oracle::Gen g(909);
  std::vector<Coloured> instances;
  int rejected = 0;
  std::uniform_real_distribution<double> drop(0.3, 1.0);
  while (instances.size() < 100) {
    Coloured c = thinned_instance(g, floor, drop(g));
    if (oracle::tau2(c.a, c.phi) < target || !oracle::valid_bicolouring(c.a, c.phi)) {
      ++rejected;
      continue;
    }
    instances.push_back(std::move(c));
  }
  std::vector<Row> rows(instances.size());
  parallel_for(instances.size(), workers(), [&](std::size_t i) {
    const Coloured& c = instances[i];
    EmbedOptions o;
    o.eps = Rational(1, 20);
    const EmbedResult r = embed_k5_bicoloured(c.a, c.phi, o);
    Row& row = rows[i];
    row.status = r.status;
    row.backtracks = r.trace.backtracks;
    if (r.witness) {
      const CliqueSupport s = r.witness->support();
      row.valid = validate_embedding(c.a, c.phi, *r.witness) && oracle::all_aligned_edges(c.a, s.indices, s.transversal);
    }
    const auto bf = brute_force_k5_support(c.a, &c.phi);
    row.oracle_found = bf.found();
    row.contradiction = (r.status == EmbedStatus::Found && bf.status == SearchStatus::Absent) ||
                        (r.status == EmbedStatus::Absent && bf.found());
  });
  int found = 0, absent = 0, budget = 0, invalid = 0, contradictions = 0, oracle_found = 0;
  std::uint64_t backtracks = 0;
  for (const Row& r : rows) {
    found += r.status == EmbedStatus::Found;
    absent += r.status == EmbedStatus::Absent;
    budget += r.status == EmbedStatus::BudgetExhausted || r.status == EmbedStatus::HypothesisFailed;
    invalid += !r.valid;
    contradictions += r.contradiction;
    oracle_found += r.oracle_found;
    backtracks += r.backtracks;
  }
  const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::ostringstream os;
  os << "(a) " << (part_a ? "greedy, 0 backtracks, tau2 1/2" : "failed") << "; (b) " << found << " found, " << absent
     << " absent, " << budget << " other of 100 (" << rejected << " rejected draws), oracle found " << oracle_found
     << ", " << invalid << " invalid witnesses, " << contradictions << " contradictions, " << backtracks
     << " backtracks total, " << secs(t);
  return {part_a && invalid == 0 && contradictions == 0 && t < 300.0, os.str()};
}

// ---------------------------------------------------------------- 10
Outcome oracle_equivalence() {
  oracle::Gen g(1010);
  std::uniform_int_distribution<int> nidx(5, 6);
  std::uniform_int_distribution<int> size(1, 4);
  std::uniform_real_distribution<double> dens(0.3, 0.9);
  int agree = 0, found = 0;
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<int> idx(static_cast<std::size_t>(nidx(g)));
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    std::vector<int> sizes(idx.size() * (idx.size() - 1) / 2);
    for (int& s : sizes) s = size(g);
    const ReducedHypergraph a = oracle::random_reduced(idx, sizes, dens(g), g);
    const auto s = supports_clique(a, 5);
    const auto b = brute_force_k5_support(a);
    const bool same = s.status == b.status && (!s.found() || (is_clique_support(a, *s.witness) &&
                                                               is_clique_support(a, *b.witness)));
    agree += same;
    found += s.found();
  }
  return {agree == 50, std::to_string(agree) + "/50 agree (" + std::to_string(found) + " supporting K5)"};
}

const std::vector<std::pair<std::string, std::function<Outcome()>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Outcome()>>> all{
      {"exhaustive K5-freeness of psi on n=5", exhaustive_psi},
      {"sampled K5-freeness of psi on n=50", sampled_psi},
      {"e_ee(VxV, VxV) = 6|E| and k_ee = n^3", ee_identity},
      {"link quasirandomness of psi", link_quasirandom},
      {"mod-3 reduced lower-bound instance", mod3_lower_bound},
      {"Ramsey construction is K6-free", ramsey_k6},
      {"exceptional-cherry counting bound", exceptional_bound},
      {"q-link width at least the codegree density", qlink_width},
      {"bicoloured K5 embedding", bicoloured_embedding},
      {"supports_clique agrees with brute force", oracle_equivalence},
  };
  return all;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app("turanforge acceptance criteria");
  int only = 0;
  app.add_option("--only", only, "Run a single criterion (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);
  bool all_pass = true;
  for (std::size_t i = 0; i < criteria().size(); ++i) {
    if (only && static_cast<int>(i) + 1 != only) continue;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome v;
    try {
      v = criteria()[i].second();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double t = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all_pass = all_pass && v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria()[i].first << ": " << v.detail << " ["
              << secs(t) << "]" << std::endl;
  }
  return all_pass ? 0 : 1;
}
