#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "turanforge/embed.hpp"
#include "turanforge/holes.hpp"
#include "turanforge/quasirandom.hpp"
#include "turanforge/reduced.hpp"

namespace turanforge {

using Json = nlohmann::ordered_json;

struct NamedFamily {
  std::vector<int> domain;
  VertexFamily family;
};

/// Contents of an "RH v1" file:
///   {"format": "RH v1", "indices": [...],
///    "classes": [{"pair": [i, j], "size": s}, ...]   (or "class_size": s for all),
///    "edges": [{"triple": [i, j, k], "list": [[a, b, c], ...]}, ...],
///    "colouring": [{"pair": [i, j], "colours": "rbb..."}, ...],
///    "families": {"Phi": {"domain": [...], "sets": [{"pair": [i, j], "members": [...]}]}},
///    "transversals": {"Q": [{"pair": [i, j], "vertex": v}, ...]}}
/// In an edge [a, b, c] of triple i<j<k, a is in P^ij, b in P^ik, c in P^jk.
struct RhDocument {
  ReducedHypergraph graph;
  std::optional<Bicolouring> colouring;
  std::map<std::string, NamedFamily> families;
  std::map<std::string, Transversal> transversals;
};

/// Throws ParseError on malformed JSON (with its line) or malformed content.
RhDocument read_rh(std::istream& in);
RhDocument rh_from_json(const Json& j);
Json to_json(const RhDocument& doc);
void write_rh(std::ostream& out, const RhDocument& doc);

/// {"exact": "p/q", "value": double}
Json rational_json(const Rational& r);
Json to_json(const Transversal& t);
Json to_json(const CliqueSupport& s);
Json to_json(const CherrySet& c);
Json to_json(const VertexFamily& f);
Json to_json(const SubsetCertificate& c);
Json to_json(const EeCertificate& c);
Json to_json(const EmbedResult& r, const ReducedHypergraph& a);

} // namespace turanforge
