#pragma once

#include <chrono>
#include <functional>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli.hpp"
#include "turanforge/hypergraph.hpp"
#include "turanforge/json_io.hpp"
#include "turanforge/rational.hpp"

namespace turanforge::cli {

struct Io {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
};

struct Common {
  std::string format = "json";
  int threads = 0;
  bool timing = false;
  std::string in = "-";
  std::string out = "-";
};

struct Command {
  std::string path; // e.g. "reduced density"
  CLI::App* app = nullptr;
  Common common;
  std::function<int(Io&, Command&)> handler;
  std::chrono::steady_clock::time_point started;

  unsigned threads() const;
  /// The input stream named by --in ("-" is stdin).
  std::istream& input(Io& io);
  RhDocument load_rh(Io& io);
  Hypergraph3 load_h3(Io& io);
  /// Writes `text` to --out or stdout.
  void write(Io& io, const std::string& text) const;
  /// Adds command, config echo and optional timing, renders in --format and writes.
  int emit(Io& io, Json result, int code = kOk);

private:
  std::unique_ptr<std::istream> file_;
};

class Registry {
public:
  /// Leaf subcommand with the shared flags; `reads_input` adds --in.
  Command& add(CLI::App& parent, const std::string& name, const std::string& description, bool reads_input);
  Command* selected();

private:
  std::vector<std::unique_ptr<Command>> commands_;
};

/// Parses an exact rational flag value; ArgumentError names the flag.
Rational rational_arg(const std::string& text, const std::string& flag);
/// Every option of `app` with its given or default value.
Json config_echo(const CLI::App& app);
/// "json", "csv", "markdown" or "text".
std::string render(const Json& report, const std::string& format);

void add_construct(CLI::App& app, Registry& reg);
void add_check(CLI::App& app, Registry& reg);
void add_measure(CLI::App& app, Registry& reg);
void add_reduced(CLI::App& app, Registry& reg);
void add_holes(CLI::App& app, Registry& reg);
void add_embed(CLI::App& app, Registry& reg);
void add_search(CLI::App& app, Registry& reg);
void add_report(CLI::App& app, Registry& reg);

} // namespace turanforge::cli
