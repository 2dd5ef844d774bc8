#include <fstream>

#include "common.hpp"
#include "turanforge/constructions.hpp"
#include "turanforge/embed.hpp"
#include "turanforge/errors.hpp"
#include "turanforge/rng.hpp"

namespace turanforge::cli {

void add_embed(CLI::App& app, Registry& reg) {
  CLI::App* group = app.add_subcommand("embed", "Constructive clique embeddings");
  group->require_subcommand(1);
  struct Opt {
    std::string eps = "1/10";
    std::string xi;
    std::uint64_t budget = 10'000'000;
    bool oracle = false;
    bool no_check = false;
    std::string selection = "maximizer";
  };
  auto o = std::make_shared<Opt>();
  Command& c = reg.add(*group, "k5", "Bicoloured K5 embedding (needs a colouring block)", true);
  c.app->add_option("--eps", o->eps, "Hypothesis tau2 >= 1/3 + eps")->capture_default_str();
  c.app->add_option("--xi", o->xi, "Bucket half-width (default min(eps/4, 1/24))");
  c.app->add_option("--budget", o->budget, "Search node budget")->capture_default_str();
  c.app->add_flag("--oracle", o->oracle, "Cross-check with the brute-force K5 support search");
  c.app->add_flag("--no-hypothesis-check", o->no_check, "Search even when tau2 < 1/3 + eps");
  c.app->add_option("--selection", o->selection, "maximizer or class-order")
      ->check(CLI::IsMember({"maximizer", "class-order"}))
      ->capture_default_str();
  c.handler = [o](Io& io, Command& cmd) {
    const RhDocument doc = cmd.load_rh(io);
    if (!doc.colouring) throw ArgumentError("input has no \"colouring\" block");
    EmbedOptions eo;
    eo.eps = rational_arg(o->eps, "--eps");
    if (!o->xi.empty()) eo.xi = rational_arg(o->xi, "--xi");
    eo.budget = o->budget;
    eo.check_hypothesis = !o->no_check;
    eo.selection = o->selection == "maximizer" ? Selection::Maximizer : Selection::ClassOrder;
    const EmbedResult res = embed_k5_bicoloured(doc.graph, *doc.colouring, eo);
    Json result = to_json(res, doc.graph);
    if (res.witness) result["validated"] = validate_embedding(doc.graph, *doc.colouring, *res.witness);
    if (o->oracle) {
      const auto bf = brute_force_k5_support(doc.graph, &*doc.colouring);
      const bool contradiction = res.status == EmbedStatus::Found && bf.status == SearchStatus::Absent;
      result["oracle"] = {{"status", name(bf.status)}, {"nodes", bf.nodes}, {"contradiction", contradiction}};
    }
    int code = kOk;
    if (res.status == EmbedStatus::Absent) code = kRefuted;
    if (res.status == EmbedStatus::BudgetExhausted) code = kBudget;
    return cmd.emit(io, std::move(result), code);
  };
}

void add_search(CLI::App& app, Registry& reg) {
  CLI::App* group = app.add_subcommand("search", "Heuristic searches");
  group->require_subcommand(1);
  struct Opt {
    int index_size = 5;
    int class_size = 3;
    std::string eps = "1/10";
    std::uint64_t budget = 1'000'000;
    std::uint64_t iterations = 2000;
    std::uint64_t seed = 0;
    std::string save;
  };
  auto o = std::make_shared<Opt>();
  Command& c = reg.add(*group, "wicked",
                       "HEURISTIC local search maximizing min ee-density among A that support no K5", false);
  c.app->add_option("--index-size", o->index_size, "|I|")->capture_default_str();
  c.app->add_option("--class-size", o->class_size, "Vertices per class")->capture_default_str();
  c.app->add_option("--eps", o->eps, "Wickedness margin")->capture_default_str();
  c.app->add_option("--budget", o->budget, "Node budget of each K5 support check")->capture_default_str();
  c.app->add_option("--iterations", o->iterations, "Proposed edge additions")->capture_default_str();
  c.app->add_option("--seed", o->seed, "Seed")->capture_default_str();
  c.app->add_option("--save", o->save, "Write the best instance as RH v1");
  c.handler = [o](Io& io, Command& cmd) {
    if (o->index_size < 5) throw ArgumentError("--index-size must be at least 5");
    const Rational eps = rational_arg(o->eps, "--eps");
    std::vector<int> indices(static_cast<std::size_t>(o->index_size));
    for (int i = 0; i < o->index_size; ++i) indices[static_cast<std::size_t>(i)] = i;
    Rng rng(o->seed);
    // Start from the mod-3 construction: K5-free at density exactly 1/3.
    ReducedHypergraph a = o->class_size % 3 == 0
                              ? mod3_reduced(indices, o->class_size)
                              : mod3_reduced_labelled(indices, o->class_size, derive_seed(o->seed, 1)).graph;
    if (supports_clique(a, 5, o->budget).status != SearchStatus::Absent) a = ReducedHypergraph::Builder(indices, o->class_size).build();
    Rational density = min_ee_density(a).value;
    const auto triples = a.triples();
    std::uint64_t accepted = 0, rejected_k5 = 0, rejected_budget = 0, rejected_density = 0;
    for (std::uint64_t it = 0; it < o->iterations; ++it) {
      const Triple& t = triples[rng.below(triples.size())];
      const auto s = static_cast<std::uint64_t>(o->class_size);
      const int x = static_cast<int>(rng.below(s)), y = static_cast<int>(rng.below(s)), z = static_cast<int>(rng.below(s));
      if (a.has_edge(t.a, t.b, t.c, x, y, z)) continue;
      auto b = a.to_builder();
      b.add_edge(t.a, t.b, t.c, x, y, z);
      ReducedHypergraph next = b.build();
      const Rational d = min_ee_density(next).value;
      if (d < density) {
        ++rejected_density;
        continue;
      }
      const auto sup = supports_clique(next, 5, o->budget);
      if (sup.status == SearchStatus::Found) {
        ++rejected_k5;
        continue;
      }
      if (sup.status == SearchStatus::BudgetExhausted) {
        ++rejected_budget;
        continue;
      }
      a = std::move(next);
      density = d;
      ++accepted;
    }
    const WickedReport w = is_wicked(a, eps, o->budget);
    if (!o->save.empty()) {
      std::ofstream f(o->save);
      if (!f) throw ArgumentError("cannot write " + o->save);
      RhDocument doc;
      doc.graph = a;
      write_rh(f, doc);
    }
    Json result{{"heuristic", true},
                {"note", "randomized local search; not finding a wicked instance is evidence, not proof"},
                {"best_min_ee_density", rational_json(density)},
                {"edges", a.edge_count()},
                {"wicked", w.wicked == Tristate::True ? "true" : (w.wicked == Tristate::False ? "false" : "indeterminate")},
                {"accepted", accepted},
                {"rejected_density", rejected_density},
                {"rejected_k5", rejected_k5},
                {"rejected_budget", rejected_budget}};
    return cmd.emit(io, std::move(result));
  };
}

} // namespace turanforge::cli
