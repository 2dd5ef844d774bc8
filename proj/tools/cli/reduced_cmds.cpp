#include "common.hpp"
#include "turanforge/errors.hpp"
#include "turanforge/holes.hpp"
#include "turanforge/reduced.hpp"

namespace turanforge::cli {
namespace {

int budget_code(SearchStatus s) { return s == SearchStatus::BudgetExhausted ? kBudget : kOk; }

const Bicolouring& need_colouring(const RhDocument& doc) {
  if (!doc.colouring) throw ArgumentError("input has no \"colouring\" block");
  return *doc.colouring;
}

} // namespace

void add_reduced(CLI::App& app, Registry& reg) {
  CLI::App* group = app.add_subcommand("reduced", "Reduced-hypergraph measurements on RH v1 input");
  group->require_subcommand(1);
  {
    auto d = std::make_shared<std::string>();
    Command& c = reg.add(*group, "density", "Minimum codegree density (ee-density) with argmin", true);
    c.app->add_option("--d", *d, "Also report whether A is (d, ee)-dense");
    c.handler = [d](Io& io, Command& cmd) {
      const RhDocument doc = cmd.load_rh(io);
      const CodegreeMinimum m = min_ee_density(doc.graph);
      Json per = Json::object();
      for (Orientation o : kOrientations) per[std::string(name(o))] = rational_json(m.per_orientation[static_cast<std::size_t>(o)]);
      Json result{{"min_ee_density", rational_json(m.value)}, {"per_orientation", std::move(per)}};
      if (m.has_witness)
        result["argmin"] = {{"triple", {m.triple.a, m.triple.b, m.triple.c}},
                            {"orientation", name(m.orientation)},
                            {"cherry", {m.x, m.y}}};
      if (!d->empty()) result["dense"] = m.value >= rational_arg(*d, "--d");
      return cmd.emit(io, std::move(result));
    };
  }
  {
    struct Opt {
      std::vector<int> k, l, m;
    };
    auto o = std::make_shared<Opt>();
    Command& c = reg.add(*group, "vvv", "Minimum constituent density, optionally over K x L x M", true);
    c.app->add_option("--K", o->k, "First part")->delimiter(',');
    c.app->add_option("--L", o->l, "Second part")->delimiter(',');
    c.app->add_option("--M", o->m, "Third part")->delimiter(',');
    c.handler = [o](Io& io, Command& cmd) {
      const RhDocument doc = cmd.load_rh(io);
      const bool partite = !o->k.empty() || !o->l.empty() || !o->m.empty();
      const Rational v = partite ? vvv_min_density(doc.graph, o->k, o->l, o->m) : vvv_min_density(doc.graph);
      return cmd.emit(io, {{"vvv_min_density", rational_json(v)}, {"tripartite", partite}});
    };
  }
  {
    struct Opt {
      int ell = 5;
      std::uint64_t budget = kUnlimited;
    };
    auto o = std::make_shared<Opt>();
    Command& c = reg.add(*group, "supports", "Does A support K_ell? Lexicographically first witness", true);
    c.app->add_option("--ell", o->ell, "Clique size")->capture_default_str();
    c.app->add_option("--budget", o->budget, "Search node budget");
    c.handler = [o](Io& io, Command& cmd) {
      const RhDocument doc = cmd.load_rh(io);
      const auto res = supports_clique(doc.graph, o->ell, o->budget);
      Json result{{"status", name(res.status)}, {"nodes", res.nodes}};
      result["witness"] = res.witness ? to_json(*res.witness) : Json(nullptr);
      if (res.witness) result["validated"] = is_clique_support(doc.graph, *res.witness);
      return cmd.emit(io, std::move(result), budget_code(res.status));
    };
  }
  {
    auto eps = std::make_shared<std::string>();
    Command& c = reg.add(*group, "tau2", "Bicolouring validity and minimum monochromatic codegree density", true);
    c.app->add_option("--eps", *eps, "Also report whether tau2 >= 1/3 + eps");
    c.handler = [eps](Io& io, Command& cmd) {
      const RhDocument doc = cmd.load_rh(io);
      const Bicolouring& phi = need_colouring(doc);
      const Rational t = tau2(doc.graph, phi);
      Json result{{"valid", validate_bicolouring(doc.graph, phi)}, {"tau2", rational_json(t)}};
      if (!eps->empty()) result["hypothesis"] = t >= Rational(1, 3) + rational_arg(*eps, "--eps");
      return cmd.emit(io, std::move(result));
    };
  }
  {
    struct Opt {
      std::vector<int> j, k, l, m;
      std::string avoid;
      std::string eps = "1/10";
      std::uint64_t budget = kUnlimited;
    };
    auto o = std::make_shared<Opt>();
    Command& c = reg.add(*group, "inhabited", "Inhabited triple (Q, R, S) on J or on K x L x M", true);
    c.app->add_option("--J", o->j, "Index set for the J-form")->delimiter(',');
    c.app->add_option("--K", o->k, "Partite form: K")->delimiter(',');
    c.app->add_option("--L", o->l, "Partite form: L")->delimiter(',');
    c.app->add_option("--M", o->m, "Partite form: M")->delimiter(',');
    c.app->add_option("--avoid", o->avoid, "Family name: avoid its eps-exceptional left and right cherries");
    c.app->add_option("--eps", o->eps, "Exceptionality threshold for --avoid")->capture_default_str();
    c.app->add_option("--budget", o->budget, "Search node budget");
    c.handler = [o](Io& io, Command& cmd) {
      const RhDocument doc = cmd.load_rh(io);
      const bool partite = !o->k.empty() || !o->l.empty() || !o->m.empty();
      if (partite == !o->j.empty()) throw ArgumentError("give either --J or all of --K --L --M");
      std::vector<CherrySet> avoid;
      if (!o->avoid.empty()) {
        const auto it = doc.families.find(o->avoid);
        if (it == doc.families.end()) throw ArgumentError("no family named " + o->avoid);
        const Rational eps = rational_arg(o->eps, "--eps");
        for (Orientation orient : {Orientation::Left, Orientation::Right})
          avoid.push_back(exceptional_cherries(doc.graph, it->second.family, it->second.domain, eps, orient));
      }
      const auto res = partite ? find_inhabited_triple(doc.graph, o->k, o->l, o->m, avoid, o->budget)
                               : find_inhabited_triple(doc.graph, o->j, avoid, o->budget);
      Json result{{"status", name(res.status)}, {"nodes", res.nodes}, {"avoided_sets", avoid.size()}};
      if (res.witness) {
        bool ok = true;
        for (const CherrySet& cs : avoid)
          ok = ok && avoids(res.witness->q, cs) && avoids(res.witness->r, cs) && avoids(res.witness->s, cs);
        result["witness"] = {{"Q", to_json(res.witness->q)}, {"R", to_json(res.witness->r)}, {"S", to_json(res.witness->s)}};
        result["avoids"] = ok;
      } else {
        result["witness"] = nullptr;
      }
      return cmd.emit(io, std::move(result), budget_code(res.status));
    };
  }
}

} // namespace turanforge::cli
