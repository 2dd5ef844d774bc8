#include "common.hpp"
#include "turanforge/errors.hpp"
#include "turanforge/quasirandom.hpp"

namespace turanforge::cli {

void add_measure(CLI::App& app, Registry& reg) {
  CLI::App* group = app.add_subcommand("measure", "Quasirandomness and ee-density measurements on H3 v1 input");
  group->require_subcommand(1);
  {
    struct Opt {
      std::string mode = "sampling";
      std::string d = "1/3";
      std::string delta = "1/20";
      std::uint64_t samples = 10'000;
      std::uint64_t seed = 0;
    };
    auto o = std::make_shared<Opt>();
    Command& c = reg.add(*group, "links", "(delta, d)-quasirandomness of every link graph", true);
    c.app->add_option("--mode", o->mode, "exhaustive, spectral or sampling")
        ->check(CLI::IsMember({"exhaustive", "spectral", "sampling"}))
        ->capture_default_str();
    c.app->add_option("--d", o->d, "Target density")->capture_default_str();
    c.app->add_option("--delta", o->delta, "Tolerance: |e(X) - d|X|^2/2| <= delta n^2")->capture_default_str();
    c.app->add_option("--samples", o->samples, "Random subsets per vertex (sampling)")->capture_default_str();
    c.app->add_option("--seed", o->seed, "Seed; vertex x uses derive_seed(seed, x)")->capture_default_str();
    c.handler = [o](Io& io, Command& cmd) {
      const Hypergraph3 h = cmd.load_h3(io);
      QuasirandomOptions qo;
      qo.method = o->mode == "exhaustive" ? Method::Exhaustive : (o->mode == "spectral" ? Method::Spectral : Method::Sampling);
      qo.samples = o->samples;
      qo.seed = o->seed;
      const auto certs = certify_link_quasirandom(h, rational_arg(o->d, "--d"), rational_arg(o->delta, "--delta"), qo,
                                                  cmd.threads());
      std::size_t counts[3] = {0, 0, 0};
      Rational worst(0);
      int worst_vertex = -1;
      double worst_spectral = 0;
      Json vertices = Json::array();
      for (std::size_t x = 0; x < certs.size(); ++x) {
        const auto& cert = certs[x];
        ++counts[static_cast<int>(cert.verdict)];
        if (worst_vertex < 0 || cert.deviation > worst) {
          worst = cert.deviation;
          worst_vertex = static_cast<int>(x);
        }
        if (cert.spectral_bound) worst_spectral = std::max(worst_spectral, *cert.spectral_bound);
        Json v = to_json(cert);
        v["vertex"] = x;
        vertices.push_back(std::move(v));
      }
      const Rational threshold = certs.empty() ? Rational(0) : certs.front().threshold;
      Json result{{"n", h.order()},
                  {"edges", h.edge_count()},
                  {"method", o->mode},
                  {"threshold", rational_json(threshold)},
                  {"certified", counts[static_cast<int>(Verdict::Certified)]},
                  {"refuted", counts[static_cast<int>(Verdict::Refuted)]},
                  {"passed_budget", counts[static_cast<int>(Verdict::PassedBudget)]},
                  {"max_deviation", rational_json(worst)},
                  {"max_deviation_vertex", worst_vertex}};
      if (qo.method == Method::Spectral) result["max_spectral_bound"] = worst_spectral;
      result["vertices"] = std::move(vertices);
      return cmd.emit(io, std::move(result), counts[static_cast<int>(Verdict::Refuted)] ? kRefuted : kOk);
    };
  }
  {
    struct Opt {
      std::string d = "1/3";
      std::string eta = "1/50";
      std::uint64_t budget = 10'000;
      std::uint64_t seed = 0;
      std::string coordinates = "all";
    };
    auto o = std::make_shared<Opt>();
    Command& c = reg.add(*group, "eedensity", "Adversarial search for e_ee(P,Q) < d k_ee(P,Q) - eta n^3", true);
    c.app->add_option("--d", o->d, "Target density")->capture_default_str();
    c.app->add_option("--eta", o->eta, "Slack, in units of n^3")->capture_default_str();
    c.app->add_option("--budget", o->budget, "Candidate pairs (P,Q) to evaluate")->capture_default_str();
    c.app->add_option("--seed", o->seed, "Seed")->capture_default_str();
    c.app->add_option("--coordinates", o->coordinates, "all: every aligned pair counts in k_ee; distinct: x,y,z distinct")
        ->check(CLI::IsMember({"all", "distinct"}))
        ->capture_default_str();
    c.handler = [o](Io& io, Command& cmd) {
      const Hypergraph3 h = cmd.load_h3(io);
      EeOptions eo;
      eo.budget = o->budget;
      eo.seed = o->seed;
      eo.coordinates = o->coordinates == "all" ? Coordinates::All : Coordinates::Distinct;
      const auto cert = ee_density_adversary(h, rational_arg(o->d, "--d"), rational_arg(o->eta, "--eta"), eo);
      Json result{{"n", h.order()}, {"edges", h.edge_count()}};
      const Json cj = to_json(cert);
      for (const auto& [k, v] : cj.items()) result[k] = v;
      return cmd.emit(io, std::move(result), cert.verdict == Verdict::Refuted ? kRefuted : kOk);
    };
  }
}

} // namespace turanforge::cli
