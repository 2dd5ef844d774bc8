#include "cli.hpp"

#include <sstream>

#include "common.hpp"
#include "turanforge/errors.hpp"

namespace turanforge::cli {

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"turanforge: K5 Turan-density constructions, reduced hypergraphs and embeddings"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "turanforge 0.1.0");
  Registry reg;
  add_construct(app, reg);
  add_check(app, reg);
  add_measure(app, reg);
  add_reduced(app, reg);
  add_holes(app, reg);
  add_embed(app, reg);
  add_search(app, reg);
  add_report(app, reg);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  Command* cmd = reg.selected();
  if (!cmd) {
    err << app.help();
    return kUsage;
  }
  Io io{in, out, err};
  cmd->started = std::chrono::steady_clock::now();
  try {
    return cmd->handler(io, *cmd);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const CapabilityError& e) {
    err << "capability error: " << e.what() << '\n';
    return kCapability;
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
    return kUsage;
  } catch (const ArgumentError& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kUsage;
  }
}

} // namespace turanforge::cli
