#include "common.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "turanforge/errors.hpp"
#include "turanforge/parallel.hpp"
#include "turanforge/text_io.hpp"

namespace turanforge::cli {

unsigned Command::threads() const { return resolve_threads(common.threads); }

std::istream& Command::input(Io& io) {
  if (common.in == "-") return io.in;
  file_ = std::make_unique<std::ifstream>(common.in);
  if (!*file_) throw ArgumentError("cannot open " + common.in);
  return *file_;
}

RhDocument Command::load_rh(Io& io) { return read_rh(input(io)); }

Hypergraph3 Command::load_h3(Io& io) { return read_h3(input(io)); }

void Command::write(Io& io, const std::string& text) const {
  if (common.out == "-") {
    io.out << text;
    return;
  }
  std::ofstream f(common.out);
  if (!f) throw ArgumentError("cannot write " + common.out);
  f << text;
}

int Command::emit(Io& io, Json result, int code) {
  Json report;
  report["command"] = path;
  report["config"] = config_echo(*app);
  for (auto& [k, v] : result.items()) report[k] = std::move(v);
  if (common.timing) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    report["timing_ms"] = ms;
  }
  write(io, render(report, common.format));
  return code;
}

Command& Registry::add(CLI::App& parent, const std::string& name, const std::string& description, bool reads_input) {
  auto cmd = std::make_unique<Command>();
  cmd->path = parent.get_parent() ? parent.get_name() + " " + name : name;
  cmd->app = parent.add_subcommand(name, description);
  Common& c = cmd->common;
  cmd->app->add_option("--format", c.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "markdown", "text"}))
      ->capture_default_str();
  cmd->app->add_option("--threads", c.threads, "Worker threads (0: $TURANFORGE_THREADS, else 1)")->capture_default_str();
  cmd->app->add_flag("--timing", c.timing, "Add wall-clock timing to the output");
  if (reads_input) cmd->app->add_option("--in", c.in, "Input file ('-' for stdin)")->capture_default_str();
  cmd->app->add_option("--out", c.out, "Output file ('-' for stdout)")->capture_default_str();
  commands_.push_back(std::move(cmd));
  return *commands_.back();
}

Command* Registry::selected() {
  for (auto& c : commands_)
    if (c->app->parsed()) return c.get();
  return nullptr;
}

Rational rational_arg(const std::string& text, const std::string& flag) {
  try {
    return parse_rational(text);
  } catch (const ArgumentError& e) {
    throw ArgumentError(flag + ": " + e.what());
  }
}

Json config_echo(const CLI::App& app) {
  Json cfg = Json::object();
  for (const CLI::Option* opt : app.get_options()) {
    const std::string name = opt->get_single_name();
    if (name == "help" || name == "timing" || name == "out" || name == "format" || name == "threads") continue;
    if (opt->get_expected_max() == 0) { // flag
      cfg[name] = opt->count() > 0;
      continue;
    }
    if (opt->count() > 0) {
      const auto& res = opt->results();
      std::string joined;
      for (std::size_t i = 0; i < res.size(); ++i) joined += (i ? "," : "") + res[i];
      cfg[name] = joined;
    } else if (!opt->get_default_str().empty()) {
      cfg[name] = opt->get_default_str();
    }
  }
  return cfg;
}

namespace {

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (j.is_array()) {
    bool scalar = true;
    for (const auto& v : j) scalar = scalar && !v.is_structured();
    if (scalar) {
      std::string s;
      for (std::size_t i = 0; i < j.size(); ++i) s += (i ? " " : "") + (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
      rows.emplace_back(prefix, s);
    } else {
      for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "." + std::to_string(i), rows);
    }
  } else if (j.is_string()) {
    rows.emplace_back(prefix, j.get<std::string>());
  } else {
    rows.emplace_back(prefix, j.dump());
  }
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

} // namespace

std::string render(const Json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(report, "", rows);
  std::ostringstream os;
  if (format == "csv") {
    os << "key,value\n";
    for (const auto& [k, v] : rows) os << csv_field(k) << ',' << csv_field(v) << '\n';
  } else if (format == "markdown") {
    os << "| key | value |\n|---|---|\n";
    for (const auto& [k, v] : rows) os << "| " << k << " | " << v << " |\n";
  } else {
    for (const auto& [k, v] : rows) os << k << ": " << v << '\n';
  }
  return os.str();
}

} // namespace turanforge::cli
