#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "turanforge/constructions.hpp"
#include "turanforge/hypergraph.hpp"

namespace turanforge {

// "H3 v1": a line `n m`, then m lines `i j k` with i < j < k.
// "PM v1": a line `n r`, then C(n,2) lines `i j v` with i < j.
// Blank lines and text after `#` are ignored. A stream may hold several
// documents back to back. Parse errors carry the 1-based line in the stream.

void write_h3(std::ostream& out, const Hypergraph3& h);
void write_pm(std::ostream& out, const PairMap& m);

class H3Reader {
public:
  explicit H3Reader(std::istream& in) : in_(in) {}
  /// Next document, or nullopt at end of stream.
  std::optional<Hypergraph3> next();
  /// Lines consumed so far.
  std::size_t line() const noexcept { return line_; }

private:
  std::istream& in_;
  std::size_t line_ = 0;
};

class PMReader {
public:
  explicit PMReader(std::istream& in) : in_(in) {}
  std::optional<PairMap> next();
  std::size_t line() const noexcept { return line_; }

private:
  std::istream& in_;
  std::size_t line_ = 0;
};

/// Exactly one document; trailing documents are a parse error.
Hypergraph3 read_h3(std::istream& in);
PairMap read_pm(std::istream& in);

} // namespace turanforge
