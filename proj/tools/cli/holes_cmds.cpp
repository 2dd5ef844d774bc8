#include "common.hpp"
#include "turanforge/errors.hpp"
#include "turanforge/holes.hpp"

namespace turanforge::cli {
namespace {

const NamedFamily& family(const RhDocument& doc, const std::string& name) {
  const auto it = doc.families.find(name);
  if (it == doc.families.end()) throw ArgumentError("no family named \"" + name + "\"");
  return it->second;
}

const Transversal& transversal(const RhDocument& doc, const std::string& name) {
  const auto it = doc.transversals.find(name);
  if (it == doc.transversals.end()) throw ArgumentError("no transversal named \"" + name + "\"");
  return it->second;
}

std::vector<Orientation> orientations(const std::string& which) {
  if (which == "all") return {kOrientations.begin(), kOrientations.end()};
  if (which == "left") return {Orientation::Left};
  if (which == "middle") return {Orientation::Middle};
  return {Orientation::Right};
}

std::vector<int> same_domain(const NamedFamily& a, const NamedFamily& b) {
  std::vector<int> x = a.domain, y = b.domain;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  if (x != y) throw ArgumentError("families have different domains");
  return x;
}

} // namespace

void add_holes(CLI::App& app, Registry& reg) {
  CLI::App* group = app.add_subcommand("holes", "Holes, cherries, links and their relations on RH v1 input");
  group->require_subcommand(1);
  {
    auto phi = std::make_shared<std::string>("Phi");
    Command& c = reg.add(*group, "mu", "Smallest mu for which the family is a mu-hole", true);
    c.app->add_option("--phi", *phi, "Family name")->capture_default_str();
    c.handler = [phi](Io& io, Command& cmd) {
      const RhDocument doc = cmd.load_rh(io);
      const NamedFamily& f = family(doc, *phi);
      return cmd.emit(io, {{"mu", rational_json(hole_mu(doc.graph, f.family, f.domain))}});
    };
  }
  {
    auto phi = std::make_shared<std::string>("Phi");
    Command& c = reg.add(*group, "width", "Width: the minimum ratio |Phi^ij| / |P^ij|", true);
    c.app->add_option("--phi", *phi, "Family name")->capture_default_str();
    c.handler = [phi](Io& io, Command& cmd) {
      const RhDocument doc = cmd.load_rh(io);
      const NamedFamily& f = family(doc, *phi);
      return cmd.emit(io, {{"width", rational_json(hole_width(doc.graph, f.family, f.domain))}});
    };
  }
  {
    struct Opt {
      std::string phi = "Phi";
      std::string eps = "1/10";
      std::string orientation = "all";
    };
    auto o = std::make_shared<Opt>();
    Command& c = reg.add(*group, "exceptional", "eps-exceptional cherries and the counting bound per triple", true);
    c.app->add_option("--phi", o->phi, "Family name")->capture_default_str();
    c.app->add_option("--eps", o->eps, "Threshold")->capture_default_str();
    c.app->add_option("--orientation", o->orientation, "left, middle, right or all")
        ->check(CLI::IsMember({"left", "middle", "right", "all"}))
        ->capture_default_str();
    c.handler = [o](Io& io, Command& cmd) {
      const RhDocument doc = cmd.load_rh(io);
      const NamedFamily& f = family(doc, o->phi);
      const Rational eps = rational_arg(o->eps, "--eps");
      Json sets = Json::array();
      bool bound = true;
      for (Orientation orient : orientations(o->orientation)) {
        const CherrySet cs = exceptional_cherries(doc.graph, f.family, f.domain, eps, orient);
        // eps |P^third| |C^ijk| <= e(Phi^ij, Phi^ik, Phi^jk)
        for (const auto& [t, m] : cs.slots()) {
          const ClassKey third = cherry_classes(t, orient).third;
          const Rational lhs = eps * doc.graph.class_size(third) * static_cast<std::int64_t>(cs.size(t));
          bound = bound && lhs <= static_cast<std::int64_t>(induced_edges(doc.graph, f.family, t));
        }
        sets.push_back(to_json(cs));
      }
      return cmd.emit(io, {{"bound_holds", bound}, {"sets", std::move(sets)}});
    };
  }
  {
    struct Opt {
      std::string phi = "Phi";
      std::string psi = "Psi";
      std::string gamma = "1/4";
    };
    auto o = std::make_shared<Opt>();
    Command& c = reg.add(*group, "bad", "gamma-bad cherries of two families in all orientations", true);
    c.app->add_option("--phi", o->phi, "First family")->capture_default_str();
    c.app->add_option("--psi", o->psi, "Second family")->capture_default_str();
    c.app->add_option("--gamma", o->gamma, "Threshold")->capture_default_str();
    c.handler = [o](Io& io, Command& cmd) {
      const RhDocument doc = cmd.load_rh(io);
      const NamedFamily& f = family(doc, o->phi);
      const NamedFamily& g = family(doc, o->psi);
      const auto j = same_domain(f, g);
      const BadCherries bad = bad_cherries(doc.graph, f.family, g.family, j, rational_arg(o->gamma, "--gamma"));
      return cmd.emit(io, {{"B", to_json(bad.left)}, {"C", to_json(bad.middle)}, {"D", to_json(bad.right)}});
    };
  }
  {
    struct Opt {
      std::string phi, psi, q, r;
      std::vector<int> k, l, m;
      int ell = 0, m_index = 0;
      std::string delta = "1/10";
    };
    auto o = std::make_shared<Opt>();
    Command& c = reg.add(*group, "relation",
                         "delta-intersecting / delta-disjoint / neither, for two holes (--phi --psi) or two links (--q --r)",
                         true);
    c.app->add_option("--phi", o->phi, "First hole");
    c.app->add_option("--psi", o->psi, "Second hole");
    c.app->add_option("--q", o->q, "Transversal Q on K x L");
    c.app->add_option("--r", o->r, "Transversal R on K x M");
    c.app->add_option("--K", o->k, "K")->delimiter(',');
    c.app->add_option("--L", o->l, "L")->delimiter(',');
    c.app->add_option("--M", o->m, "M")->delimiter(',');
    c.app->add_option("--l", o->ell, "Index l in L");
    c.app->add_option("--m", o->m_index, "Index m in M");
    c.app->add_option("--delta", o->delta, "Threshold")->capture_default_str();
    c.handler = [o](Io& io, Command& cmd) {
      const RhDocument doc = cmd.load_rh(io);
      const Rational delta = rational_arg(o->delta, "--delta");
      if (!o->phi.empty() || !o->psi.empty()) {
        const NamedFamily& f = family(doc, o->phi);
        const NamedFamily& g = family(doc, o->psi);
        const auto j = same_domain(f, g);
        return cmd.emit(io, {{"kind", "holes"}, {"relation", name(holes_relation(doc.graph, f.family, g.family, j, delta))}});
      }
      if (o->q.empty() || o->r.empty()) throw ArgumentError("give --phi/--psi or --q/--r");
      const Relation rel = links_relation(doc.graph, transversal(doc, o->q), transversal(doc, o->r), o->k, o->l, o->m,
                                          o->ell, o->m_index, delta);
      return cmd.emit(io, {{"kind", "links"}, {"relation", name(rel)}});
    };
  }
  {
    struct Opt {
      std::string q = "Q";
      std::vector<int> k, l, kstar;
      int ell = 0;
    };
    auto o = std::make_shared<Opt>();
    Command& c = reg.add(*group, "qlink", "Q-link family of l on K*, with its width and mu", true);
    c.app->add_option("--q", o->q, "Transversal name")->capture_default_str();
    c.app->add_option("--K", o->k, "K")->delimiter(',')->required();
    c.app->add_option("--L", o->l, "L")->delimiter(',')->required();
    c.app->add_option("--kstar", o->kstar, "K* (defaults to K)")->delimiter(',');
    c.app->add_option("--l", o->ell, "Index l in L")->required();
    c.handler = [o](Io& io, Command& cmd) {
      const RhDocument doc = cmd.load_rh(io);
      const std::vector<int> kstar = o->kstar.empty() ? o->k : o->kstar;
      const VertexFamily link = q_link(doc.graph, transversal(doc, o->q), o->k, o->l, kstar, o->ell);
      Json result{{"family", to_json(link)}, {"width", rational_json(hole_width(doc.graph, link, kstar))}};
      bool nonempty = true;
      for (const auto& [k, b] : link.sets()) nonempty = nonempty && b.any();
      result["mu"] = nonempty ? rational_json(hole_mu(doc.graph, link, kstar)) : Json(nullptr);
      const Rational dmin = min_ee_density(doc.graph).value;
      result["min_ee_density"] = rational_json(dmin);
      result["width_at_least_density"] = hole_width(doc.graph, link, kstar) >= dmin;
      return cmd.emit(io, std::move(result));
    };
  }
}

} // namespace turanforge::cli
