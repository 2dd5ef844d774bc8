#include "turanforge/text_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include "turanforge/errors.hpp"

namespace turanforge {
namespace {

// Reads the next non-blank, comment-stripped line and splits it into integers.
bool next_record(std::istream& in, std::size_t& line, std::vector<long long>& fields) {
  std::string text;
  while (std::getline(in, text)) {
    ++line;
    if (auto hash = text.find('#'); hash != std::string::npos) text.resize(hash);
    fields.clear();
    std::string_view rest(text);
    while (true) {
      const auto start = rest.find_first_not_of(" \t\r");
      if (start == std::string_view::npos) break;
      rest.remove_prefix(start);
      const auto end = std::min(rest.find_first_of(" \t\r"), rest.size());
      const std::string_view tok = rest.substr(0, end);
      long long value = 0;
      const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError(line, "expected an integer, got '" + std::string(tok) + "'");
      fields.push_back(value);
      rest.remove_prefix(end);
    }
    if (!fields.empty()) return true;
  }
  return false;
}

void expect_fields(const std::vector<long long>& f, std::size_t count, std::size_t line, const char* what) {
  if (f.size() != count)
    throw ParseError(line, std::string("expected ") + what + " (" + std::to_string(count) + " integers), got " +
                               std::to_string(f.size()));
}

} // namespace

void write_h3(std::ostream& out, const Hypergraph3& h) {
  out << h.order() << ' ' << h.edge_count() << '\n';
  for (const Triple& t : h.edges()) out << t.a << ' ' << t.b << ' ' << t.c << '\n';
}

void write_pm(std::ostream& out, const PairMap& m) {
  out << m.order() << ' ' << m.alphabet() << '\n';
  const auto& v = m.values();
  std::size_t i = 0;
  for (int x = 0; x < m.order(); ++x)
    for (int y = x + 1; y < m.order(); ++y) out << x << ' ' << y << ' ' << static_cast<int>(v[i++]) << '\n';
}

std::optional<Hypergraph3> H3Reader::next() {
  std::vector<long long> f;
  if (!next_record(in_, line_, f)) return std::nullopt;
  expect_fields(f, 2, line_, "header `n m`");
  if (f[0] < 0 || f[0] > 1'000'000) throw ParseError(line_, "vertex count out of range");
  if (f[1] < 0) throw ParseError(line_, "negative edge count");
  const int n = static_cast<int>(f[0]);
  const long long m = f[1];
  if (m > binomial(n, 3)) throw ParseError(line_, "more edges than triples");
  std::vector<Triple> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long e = 0; e < m; ++e) {
    if (!next_record(in_, line_, f)) throw ParseError(line_, "unexpected end of input: missing edges");
    expect_fields(f, 3, line_, "edge `i j k`");
    if (!(0 <= f[0] && f[0] < f[1] && f[1] < f[2] && f[2] < n))
      throw ParseError(line_, "edge must satisfy 0 <= i < j < k < n");
    const Triple t{static_cast<int>(f[0]), static_cast<int>(f[1]), static_cast<int>(f[2])};
    edges.push_back(t);
  }
  Hypergraph3 h(n, edges);
  if (h.edge_count() != edges.size()) throw ParseError(line_, "edge list repeats an edge");
  return h;
}

std::optional<PairMap> PMReader::next() {
  std::vector<long long> f;
  if (!next_record(in_, line_, f)) return std::nullopt;
  expect_fields(f, 2, line_, "header `n r`");
  if (f[0] < 0 || f[0] > 100'000) throw ParseError(line_, "vertex count out of range");
  if (f[1] < 1 || f[1] > 255) throw ParseError(line_, "alphabet size must lie in 1..255");
  const int n = static_cast<int>(f[0]);
  PairMap m(n, static_cast<int>(f[1]));
  std::vector<bool> seen(static_cast<std::size_t>(binomial(n, 2)), false);
  for (std::size_t p = 0; p < seen.size(); ++p) {
    if (!next_record(in_, line_, f)) throw ParseError(line_, "unexpected end of input: missing pair values");
    expect_fields(f, 3, line_, "pair value `i j v`");
    if (!(0 <= f[0] && f[0] < f[1] && f[1] < n)) throw ParseError(line_, "pair must satisfy 0 <= i < j < n");
    if (f[2] < 0 || f[2] >= m.alphabet()) throw ParseError(line_, "value outside the alphabet");
    const auto idx = pair_index(static_cast<int>(f[0]), static_cast<int>(f[1]), n);
    if (seen[idx]) throw ParseError(line_, "pair given twice");
    seen[idx] = true;
    m.set(static_cast<int>(f[0]), static_cast<int>(f[1]), static_cast<int>(f[2]));
  }
  return m;
}

Hypergraph3 read_h3(std::istream& in) {
  H3Reader r(in);
  auto h = r.next();
  if (!h) throw ParseError(1, "empty input");
  std::vector<long long> f;
  std::size_t line = r.line();
  if (next_record(in, line, f)) throw ParseError(line, "trailing data after the document");
  return *h;
}

PairMap read_pm(std::istream& in) {
  PMReader r(in);
  auto m = r.next();
  if (!m) throw ParseError(1, "empty input");
  std::vector<long long> f;
  std::size_t line = r.line();
  if (next_record(in, line, f)) throw ParseError(line, "trailing data after the document");
  return *m;
}

} // namespace turanforge
