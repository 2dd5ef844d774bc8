#include <fstream>
#include <sstream>

#include "common.hpp"
#include "turanforge/errors.hpp"
#include "turanforge/parallel.hpp"

namespace turanforge::cli {
namespace {

struct Check {
  std::string name;
  std::vector<std::vector<std::string>> pipe; // stages whose stdout feeds the next
  std::vector<std::string> args;
};

std::vector<Check> default_battery() {
  using V = std::vector<std::string>;
  return {
      {"psi maps on 5 vertices are K5-free", {V{"construct", "psi", "--n", "5", "--all"}}, V{"check", "k5free"}},
      {"2-colourings of K6 give K6-free hypergraphs",
       {V{"construct", "ramsey", "--n", "6", "--r", "2", "--all"}},
       V{"check", "k5free", "--construction", "ramsey"}},
      {"mod-3 reduced hypergraph has ee-density 1/3",
       {V{"construct", "mod3", "--index-size", "6", "--class-size", "3"}},
       V{"reduced", "density"}},
      {"mod-3 reduced hypergraph supports no K5",
       {V{"construct", "mod3", "--index-size", "6", "--class-size", "3"}},
       V{"reduced", "supports", "--ell", "5"}},
      {"bicoloured K5 embedding on the non-monochromatic instance",
       {V{"construct", "nonmono", "--index-size", "5"}},
       V{"embed", "k5", "--eps", "1/10", "--oracle"}},
      {"psi links on 16 vertices are (1/10, 1/3)-quasirandom",
       {V{"construct", "psi", "--n", "16", "--seed", "1", "--emit", "h3"}},
       V{"measure", "links", "--mode", "exhaustive", "--delta", "1/10"}},
  };
}

std::vector<Check> load_checks(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ArgumentError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what());
  }
  if (!j.contains("checks") || !j["checks"].is_array()) throw ParseError("$.checks: expected an array");
  std::vector<Check> out;
  for (const Json& c : j["checks"]) {
    Check chk;
    try {
      chk.name = c.value("name", std::string{});
      chk.args = c.at("args").get<std::vector<std::string>>();
      if (c.contains("pipe")) chk.pipe = c["pipe"].get<std::vector<std::vector<std::string>>>();
    } catch (const Json::exception& e) {
      throw ParseError(std::string("$.checks: ") + e.what());
    }
    out.push_back(std::move(chk));
  }
  return out;
}

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run_check(const Check& c) {
  std::string feed;
  for (const auto& stage : c.pipe) {
    std::istringstream in(feed);
    std::ostringstream out, err;
    const int code = run(stage, in, out, err);
    if (code != kOk) return {code, out.str(), err.str()};
    feed = out.str();
  }
  std::vector<std::string> args = c.args;
  args.insert(args.end(), {"--format", "json"});
  std::istringstream in(feed);
  std::ostringstream out, err;
  const int code = run(args, in, out, err);
  return {code, out.str(), err.str()};
}

} // namespace

void add_report(CLI::App& app, Registry& reg) {
  auto config = std::make_shared<std::string>();
  Command& c = reg.add(app, "report", "Runs a battery of checks (built-in or from --config) into one report", false);
  c.app->add_option("--config", *config,
                    "JSON {\"checks\": [{\"name\", \"args\": [...], \"pipe\": [[...], ...]}]}");
  c.handler = [config](Io& io, Command& cmd) {
    const std::vector<Check> checks = config->empty() ? default_battery() : load_checks(*config);
    std::vector<Outcome> outcomes(checks.size());
    parallel_for(checks.size(), cmd.threads(), [&](std::size_t i) { outcomes[i] = run_check(checks[i]); });
    Json list = Json::array();
    std::size_t ok = 0, refuted = 0, failed = 0;
    int code = kOk;
    for (std::size_t i = 0; i < checks.size(); ++i) {
      const Outcome& r = outcomes[i];
      Json entry{{"name", checks[i].name}, {"args", checks[i].args}, {"exit_code", r.code}};
      Json parsed = Json::parse(r.out, nullptr, false);
      entry["result"] = parsed.is_discarded() ? Json(nullptr) : parsed;
      if (!r.err.empty()) entry["stderr"] = r.err;
      if (r.code == kOk) ++ok;
      else if (r.code == kRefuted) ++refuted;
      else ++failed;
      if (code == kOk && r.code != kOk) code = r.code;
      list.push_back(std::move(entry));
    }
    Json result{{"summary", {{"checks", checks.size()}, {"ok", ok}, {"refuted", refuted}, {"failed", failed}}},
                {"checks", std::move(list)}};
    return cmd.emit(io, std::move(result), code);
  };
}

} // namespace turanforge::cli
