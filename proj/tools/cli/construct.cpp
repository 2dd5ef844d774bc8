#include <cmath>
#include <sstream>

#include "common.hpp"
#include "turanforge/constructions.hpp"
#include "turanforge/errors.hpp"
#include "turanforge/parallel.hpp"
#include "turanforge/rng.hpp"
#include "turanforge/text_io.hpp"

namespace turanforge::cli {
namespace {

std::vector<int> index_range(int size) {
  if (size < 0) throw ArgumentError("--index-size must be non-negative");
  std::vector<int> v(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) v[static_cast<std::size_t>(i)] = i;
  return v;
}

struct MapOptions {
  int n = 5;
  int r = 3;
  std::uint64_t seed = 0;
  std::uint64_t count = 1;
  bool all = false;
  std::string emit = "pm";
};

void add_map_options(Command& c, MapOptions& o, bool alphabet) {
  c.app->add_option("--n", o.n, "Vertex count")->capture_default_str();
  if (alphabet) c.app->add_option("--r", o.r, "Number of colours")->capture_default_str();
  c.app->add_option("--seed", o.seed, "Seed; map i uses derive_seed(seed, i)")->capture_default_str();
  c.app->add_option("--count", o.count, "Number of random maps")->capture_default_str();
  c.app->add_flag("--all", o.all, "Enumerate every map instead of sampling");
  c.app->add_option("--emit", o.emit, "pm: the pair map, h3: the hypergraph")
      ->check(CLI::IsMember({"pm", "h3"}))
      ->capture_default_str();
}

// Streams the requested maps (all of them in base-r counting order, or seeded samples).
void for_each_map(const MapOptions& o, const std::function<void(const PairMap&)>& f) {
  if (o.n < 1) throw ArgumentError("--n must be at least 1");
  if (!o.all) {
    for (std::uint64_t i = 0; i < o.count; ++i) f(random_pairmap(o.n, o.r, derive_seed(o.seed, i)));
    return;
  }
  const auto pairs = static_cast<std::size_t>(binomial(o.n, 2));
  if (static_cast<double>(pairs) * std::log2(static_cast<double>(o.r)) > 31)
    throw CapabilityError("--all: " + std::to_string(o.r) + "^" + std::to_string(pairs) + " maps is too many");
  PairMap m(o.n, o.r);
  std::vector<int> digits(pairs, 0);
  std::vector<std::pair<int, int>> order;
  for (int x = 0; x < o.n; ++x)
    for (int y = x + 1; y < o.n; ++y) order.emplace_back(x, y);
  while (true) {
    f(m);
    std::size_t t = 0;
    for (; t < pairs; ++t) {
      digits[t] = (digits[t] + 1) % o.r;
      m.set(order[t].first, order[t].second, digits[t]);
      if (digits[t] != 0) break;
    }
    if (t == pairs) return;
  }
}

} // namespace

void add_construct(CLI::App& app, Registry& reg) {
  CLI::App* group = app.add_subcommand("construct", "Build explicit constructions");
  group->require_subcommand(1);

  {
    auto o = std::make_shared<MapOptions>();
    Command& c = reg.add(*group, "psi", "Maps psi: V^(2) -> Z/3 (edges: psi sums to 1 mod 3)", false);
    add_map_options(c, *o, false);
    c.handler = [o](Io& io, Command& cmd) {
      std::ostringstream os;
      for_each_map(*o, [&](const PairMap& m) { o->emit == "pm" ? write_pm(os, m) : write_h3(os, psi_hypergraph(m)); });
      cmd.write(io, os.str());
      return kOk;
    };
  }
  {
    auto o = std::make_shared<MapOptions>();
    o->r = 2;
    o->n = 6;
    Command& c = reg.add(*group, "ramsey", "Colourings phi: V^(2) -> [r] (edges: non-monochromatic triangles)", false);
    add_map_options(c, *o, true);
    c.handler = [o](Io& io, Command& cmd) {
      std::ostringstream os;
      for_each_map(*o, [&](const PairMap& m) { o->emit == "pm" ? write_pm(os, m) : write_h3(os, ramsey_hypergraph(m)); });
      cmd.write(io, os.str());
      return kOk;
    };
  }
  {
    struct Opt {
      int index_size = 5;
      std::vector<int> indices;
      int class_size = 3;
      std::optional<std::uint64_t> seed;
    };
    auto o = std::make_shared<Opt>();
    Command& c = reg.add(*group, "mod3", "Reduced mod-3 construction with block families block0..block2", false);
    c.app->add_option("--index-size", o->index_size, "Indices 0..size-1")->capture_default_str();
    c.app->add_option("--indices", o->indices, "Explicit index labels")->delimiter(',');
    c.app->add_option("--class-size", o->class_size, "Vertices per class")->capture_default_str();
    c.app->add_option("--seed", o->seed, "Random i.i.d. labels instead of equal blocks");
    c.handler = [o](Io& io, Command& cmd) {
      const auto indices = o->indices.empty() ? index_range(o->index_size) : o->indices;
      LabelledReduced lr = mod3_reduced_labelled(indices, o->class_size, o->seed);
      RhDocument doc;
      doc.graph = std::move(lr.graph);
      for (int label = 0; label < 3; ++label) {
        NamedFamily nf;
        nf.domain = doc.graph.indices();
        for (const auto& [k, labels] : lr.labels) {
          Bitset b(labels.size());
          for (std::size_t v = 0; v < labels.size(); ++v)
            if (labels[v] == label) b.set(v);
          nf.family.set(k.lo, k.hi, std::move(b));
        }
        doc.families.emplace("block" + std::to_string(label), std::move(nf));
      }
      cmd.write(io, to_json(doc).dump(1) + "\n");
      return kOk;
    };
  }
  {
    struct Opt {
      int ell = 2;
      std::uint64_t seed = 0;
    };
    auto o = std::make_shared<Opt>();
    Command& c = reg.add(*group, "preimage", "Random preimage A_h with classes of size ell", true);
    c.app->add_option("--ell", o->ell, "New class size")->capture_default_str();
    c.app->add_option("--seed", o->seed, "Seed")->capture_default_str();
    c.handler = [o](Io& io, Command& cmd) {
      const RhDocument src = cmd.load_rh(io);
      Preimage pre = random_preimage(src.graph, o->ell, o->seed);
      RhDocument doc;
      doc.graph = std::move(pre.graph);
      if (src.colouring) {
        Bicolouring phi(doc.graph);
        for (const auto& [k, h] : pre.h)
          for (std::size_t v = 0; v < h.size(); ++v) phi.set(k.lo, k.hi, static_cast<int>(v), src.colouring->at(k, h[v]));
        doc.colouring = std::move(phi);
      }
      Json j = to_json(doc);
      Json hom = Json::array();
      for (const auto& [k, h] : pre.h) hom.push_back({{"pair", {k.lo, k.hi}}, {"image", h}});
      j["homomorphism"] = std::move(hom);
      cmd.write(io, j.dump(1) + "\n");
      return kOk;
    };
  }
  {
    struct Opt {
      int index_size = 5;
      int class_size = 2;
      std::uint64_t seed = 0;
    };
    auto o = std::make_shared<Opt>();
    Command& c = reg.add(*group, "nonmono", "All non-monochromatic triples of a bicoloured complete A", false);
    c.app->add_option("--index-size", o->index_size, "Indices 0..size-1")->capture_default_str();
    c.app->add_option("--class-size", o->class_size, "2 gives classes {red, blue}; larger sizes colour at random")
        ->capture_default_str();
    c.app->add_option("--seed", o->seed, "Seed for random colourings")->capture_default_str();
    c.handler = [o](Io& io, Command& cmd) {
      const auto indices = index_range(o->index_size);
      RhDocument doc;
      if (o->class_size == 2) {
        doc.graph = nonmono_complete(indices);
        doc.colouring = nonmono_colouring(doc.graph);
      } else {
        if (o->class_size < 2) throw ArgumentError("--class-size must be at least 2");
        const ReducedHypergraph base = complete_reduced(indices, o->class_size);
        Bicolouring phi(base);
        Rng rng(o->seed);
        for (const ClassKey& k : base.classes()) {
          // Both colours present: vertex 0 red, vertex 1 blue, the rest fair coins.
          phi.set(k.lo, k.hi, 1, Colour::Blue);
          for (int v = 2; v < o->class_size; ++v) phi.set(k.lo, k.hi, v, rng.chance(1, 2) ? Colour::Blue : Colour::Red);
        }
        doc.graph = nonmono_reduced(indices, phi);
        doc.colouring = std::move(phi);
      }
      cmd.write(io, to_json(doc).dump(1) + "\n");
      return kOk;
    };
  }
  {
    struct Opt {
      int index_size = 5;
      int class_size = 2;
    };
    auto o = std::make_shared<Opt>();
    Command& c = reg.add(*group, "complete", "Complete reduced hypergraph", false);
    c.app->add_option("--index-size", o->index_size, "Indices 0..size-1")->capture_default_str();
    c.app->add_option("--class-size", o->class_size, "Vertices per class")->capture_default_str();
    c.handler = [o](Io& io, Command& cmd) {
      RhDocument doc;
      doc.graph = complete_reduced(index_range(o->index_size), o->class_size);
      cmd.write(io, to_json(doc).dump(1) + "\n");
      return kOk;
    };
  }
}

void add_check(CLI::App& app, Registry& reg) {
  CLI::App* group = app.add_subcommand("check", "Exhaustive or sampled clique-freeness checks");
  group->require_subcommand(1);
  struct Opt {
    std::string construction = "psi";
    int ell = 0;
    std::uint64_t sample = 0;
    int n = 50;
    std::uint64_t seed = 0;
  };
  auto o = std::make_shared<Opt>();
  Command& c = reg.add(*group, "k5free", "Reads PM v1 maps (or samples them) and searches each hypergraph for a clique", true);
  c.app->add_option("--construction", o->construction, "psi or ramsey")
      ->check(CLI::IsMember({"psi", "ramsey"}))
      ->capture_default_str();
  c.app->add_option("--ell", o->ell, "Clique size (0: 5 for psi, 6 for ramsey)")->capture_default_str();
  c.app->add_option("--sample", o->sample, "Sample this many random maps instead of reading input")->capture_default_str();
  c.app->add_option("--n", o->n, "Vertex count for --sample")->capture_default_str();
  c.app->add_option("--seed", o->seed, "Seed for --sample; map i uses derive_seed(seed, i)")->capture_default_str();
  c.handler = [o](Io& io, Command& cmd) {
    std::vector<PairMap> maps;
    if (o->sample > 0) {
      const int r = o->construction == "psi" ? 3 : 2;
      for (std::uint64_t i = 0; i < o->sample; ++i) maps.push_back(random_pairmap(o->n, r, derive_seed(o->seed, i)));
    } else {
      PMReader reader(cmd.input(io));
      while (auto m = reader.next()) maps.push_back(std::move(*m));
    }
    const int ell = o->ell > 0 ? o->ell : (o->construction == "psi" ? 5 : 6);
    std::vector<std::optional<std::vector<int>>> hits(maps.size());
    std::vector<std::uint64_t> nodes(maps.size(), 0);
    parallel_for(maps.size(), cmd.threads(), [&](std::size_t i) {
      const Hypergraph3 h = o->construction == "psi" ? psi_hypergraph(maps[i]) : ramsey_hypergraph(maps[i]);
      if (h.order() < ell) return;
      auto res = contains_clique(h, ell);
      nodes[i] = res.nodes;
      if (res.found()) hits[i] = res.witness;
    });
    std::size_t violations = 0;
    std::uint64_t total_nodes = 0;
    Json first = nullptr;
    for (std::size_t i = 0; i < maps.size(); ++i) {
      total_nodes += nodes[i];
      if (!hits[i]) continue;
      if (violations++ == 0) first = {{"map", i}, {"clique", *hits[i]}};
    }
    Json result{{"construction", o->construction},
                {"ell", ell},
                {"maps", maps.size()},
                {"violations", violations},
                {"summary", std::to_string(violations) + " violations / " + std::to_string(maps.size()) + " maps"},
                {"search_nodes", total_nodes},
                {"first_violation", first}};
    return cmd.emit(io, std::move(result), violations ? kRefuted : kOk);
  };
}

} // namespace turanforge::cli
