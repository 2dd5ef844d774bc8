#include "turanforge/json_io.hpp"

#include <algorithm>
#include <istream>
#include <iterator>
#include <ostream>
#include <set>

#include "turanforge/errors.hpp"

namespace turanforge {
namespace {

Json pair_json(const ClassKey& k) { return Json::array({k.lo, k.hi}); }

// Structural accessors; every failure names the JSON path.
const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw ParseError(path + ": expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(path + ": missing \"" + key + "\"");
  return *it;
}

int as_int(const Json& j, const std::string& path) {
  if (!j.is_number_integer()) throw ParseError(path + ": expected an integer");
  return j.get<int>();
}

std::vector<int> int_list(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ParseError(path + ": expected an array");
  std::vector<int> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(as_int(j[i], path + "[" + std::to_string(i) + "]"));
  return out;
}

ClassKey pair_of(const Json& j, const std::string& path) {
  const auto v = int_list(j, path);
  if (v.size() != 2 || v[0] == v[1]) throw ParseError(path + ": expected two distinct indices");
  return ClassKey::of(v[0], v[1]);
}

// Library errors raised while assembling the document become parse errors.
template <class F>
auto guarded(const std::string& path, F&& f) {
  try {
    return f();
  } catch (const ArgumentError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const std::out_of_range& e) {
    throw ParseError(path + ": " + e.what());
  }
}

} // namespace

RhDocument rh_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("$: expected an object");
  if (const auto it = j.find("format"); it != j.end() && *it != "RH v1")
    throw ParseError("$.format: expected \"RH v1\"");
  const std::vector<int> indices = int_list(field(j, "indices", "$"), "$.indices");

  std::map<ClassKey, int> sizes;
  if (j.contains("classes")) {
    const Json& cls = j["classes"];
    if (!cls.is_array()) throw ParseError("$.classes: expected an array");
    for (std::size_t i = 0; i < cls.size(); ++i) {
      const std::string path = "$.classes[" + std::to_string(i) + "]";
      const ClassKey k = pair_of(field(cls[i], "pair", path), path + ".pair");
      const int s = as_int(field(cls[i], "size", path), path + ".size");
      if (s < 0) throw ParseError(path + ".size: negative");
      if (!sizes.emplace(k, s).second) throw ParseError(path + ": class listed twice");
    }
  }
  if (j.contains("class_size")) {
    const int s = as_int(j["class_size"], "$.class_size");
    if (s < 0) throw ParseError("$.class_size: negative");
    for (std::size_t x = 0; x < indices.size(); ++x)
      for (std::size_t y = x + 1; y < indices.size(); ++y) sizes.emplace(ClassKey::of(indices[x], indices[y]), s);
  }
  ReducedHypergraph::Builder builder = guarded("$", [&] { return ReducedHypergraph::Builder(indices, sizes); });

  if (j.contains("edges")) {
    const Json& edges = j["edges"];
    if (!edges.is_array()) throw ParseError("$.edges: expected an array");
    std::set<Triple> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string path = "$.edges[" + std::to_string(i) + "]";
      const auto t = int_list(field(edges[i], "triple", path), path + ".triple");
      if (t.size() != 3 || !(t[0] < t[1] && t[1] < t[2])) throw ParseError(path + ".triple: expected i < j < k");
      if (!seen.insert({t[0], t[1], t[2]}).second) throw ParseError(path + ": triple listed twice");
      const Json& list = field(edges[i], "list", path);
      if (!list.is_array()) throw ParseError(path + ".list: expected an array");
      for (std::size_t e = 0; e < list.size(); ++e) {
        const std::string epath = path + ".list[" + std::to_string(e) + "]";
        const auto v = int_list(list[e], epath);
        if (v.size() != 3) throw ParseError(epath + ": expected [a, b, c]");
        guarded(epath, [&] {
          if (builder.has_edge(t[0], t[1], t[2], v[0], v[1], v[2])) throw ParseError(epath + ": repeated edge");
          builder.add_edge(t[0], t[1], t[2], v[0], v[1], v[2]);
          return 0;
        });
      }
    }
  }

  RhDocument doc;
  doc.graph = builder.build();
  const ReducedHypergraph& a = doc.graph;

  if (j.contains("colouring") && !j["colouring"].is_null()) {
    const Json& col = j["colouring"];
    if (!col.is_array()) throw ParseError("$.colouring: expected an array");
    Bicolouring phi(a);
    std::set<ClassKey> seen;
    for (std::size_t i = 0; i < col.size(); ++i) {
      const std::string path = "$.colouring[" + std::to_string(i) + "]";
      const ClassKey k = pair_of(field(col[i], "pair", path), path + ".pair");
      const Json& c = field(col[i], "colours", path);
      if (!c.is_string()) throw ParseError(path + ".colours: expected a string of r/b");
      const auto s = c.get<std::string>();
      const int size = guarded(path, [&] { return a.class_size(k); });
      if (static_cast<int>(s.size()) != size)
        throw ParseError(path + ".colours: length " + std::to_string(s.size()) + " != class size " + std::to_string(size));
      for (int v = 0; v < size; ++v) {
        const char ch = s[static_cast<std::size_t>(v)];
        if (ch != 'r' && ch != 'b') throw ParseError(path + ".colours: expected only 'r' and 'b'");
        phi.set(k.lo, k.hi, v, ch == 'b' ? Colour::Blue : Colour::Red);
      }
      seen.insert(k);
    }
    if (seen.size() != a.classes().size()) throw ParseError("$.colouring: every class needs a colour string");
    doc.colouring = std::move(phi);
  }

  if (j.contains("families")) {
    const Json& fams = j["families"];
    if (!fams.is_object()) throw ParseError("$.families: expected an object");
    for (const auto& [name, body] : fams.items()) {
      const std::string path = "$.families." + name;
      NamedFamily nf;
      nf.domain = int_list(field(body, "domain", path), path + ".domain");
      for (int x : nf.domain)
        if (!a.has_index(x)) throw ParseError(path + ".domain: unknown index " + std::to_string(x));
      const Json& sets = field(body, "sets", path);
      if (!sets.is_array()) throw ParseError(path + ".sets: expected an array");
      for (std::size_t i = 0; i < sets.size(); ++i) {
        const std::string spath = path + ".sets[" + std::to_string(i) + "]";
        const ClassKey k = pair_of(field(sets[i], "pair", spath), spath + ".pair");
        const int size = guarded(spath, [&] { return a.class_size(k); });
        Bitset members(static_cast<std::size_t>(size));
        for (int v : int_list(field(sets[i], "members", spath), spath + ".members")) {
          if (v < 0 || v >= size) throw ParseError(spath + ".members: vertex " + std::to_string(v) + " out of range");
          members.set(static_cast<std::size_t>(v));
        }
        if (nf.family.contains(k.lo, k.hi)) throw ParseError(spath + ": pair listed twice");
        nf.family.set(k.lo, k.hi, std::move(members));
      }
      doc.families.emplace(name, std::move(nf));
    }
  }

  if (j.contains("transversals")) {
    const Json& ts = j["transversals"];
    if (!ts.is_object()) throw ParseError("$.transversals: expected an object");
    for (const auto& [name, body] : ts.items()) {
      const std::string path = "$.transversals." + name;
      if (!body.is_array()) throw ParseError(path + ": expected an array");
      Transversal t;
      for (std::size_t i = 0; i < body.size(); ++i) {
        const std::string epath = path + "[" + std::to_string(i) + "]";
        const ClassKey k = pair_of(field(body[i], "pair", epath), epath + ".pair");
        const int v = as_int(field(body[i], "vertex", epath), epath + ".vertex");
        const int size = guarded(epath, [&] { return a.class_size(k); });
        if (v < 0 || v >= size) throw ParseError(epath + ".vertex: out of range");
        if (t.contains(k.lo, k.hi)) throw ParseError(epath + ": pair listed twice");
        t.set(k.lo, k.hi, v);
      }
      doc.transversals.emplace(name, std::move(t));
    }
  }
  return doc;
}

RhDocument read_rh(std::istream& in) {
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    const auto upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n'));
    throw ParseError(line, e.what());
  }
  return rh_from_json(j);
}

Json to_json(const RhDocument& doc) {
  const ReducedHypergraph& a = doc.graph;
  Json j;
  j["format"] = "RH v1";
  j["indices"] = a.indices();
  Json classes = Json::array();
  for (const ClassKey& k : a.classes()) classes.push_back({{"pair", pair_json(k)}, {"size", a.class_size(k)}});
  j["classes"] = std::move(classes);
  Json edges = Json::array();
  for (const Triple& t : a.triples()) {
    Json list = Json::array();
    for (const auto& e : a.edges(t)) list.push_back(e);
    edges.push_back({{"triple", {t.a, t.b, t.c}}, {"list", std::move(list)}});
  }
  j["edges"] = std::move(edges);
  if (doc.colouring) {
    Json col = Json::array();
    for (const auto& [k, cs] : doc.colouring->classes()) {
      std::string s;
      for (Colour c : cs) s += c == Colour::Blue ? 'b' : 'r';
      col.push_back({{"pair", pair_json(k)}, {"colours", s}});
    }
    j["colouring"] = std::move(col);
  }
  if (!doc.families.empty()) {
    Json fams = Json::object();
    for (const auto& [name, nf] : doc.families) fams[name] = {{"domain", nf.domain}, {"sets", to_json(nf.family)}};
    j["families"] = std::move(fams);
  }
  if (!doc.transversals.empty()) {
    Json ts = Json::object();
    for (const auto& [name, t] : doc.transversals) ts[name] = to_json(t);
    j["transversals"] = std::move(ts);
  }
  return j;
}

void write_rh(std::ostream& out, const RhDocument& doc) { out << to_json(doc).dump(1) << '\n'; }

Json rational_json(const Rational& r) { return {{"exact", to_string(r)}, {"value", to_double(r)}}; }

Json to_json(const Transversal& t) {
  Json out = Json::array();
  for (const auto& [k, v] : t.entries()) out.push_back({{"pair", pair_json(k)}, {"vertex", v}});
  return out;
}

Json to_json(const CliqueSupport& s) { return {{"indices", s.indices}, {"transversal", to_json(s.transversal)}}; }

Json to_json(const CherrySet& c) {
  Json slots = Json::array();
  for (const auto& [t, m] : c.slots()) {
    Json pairs = Json::array();
    for (std::size_t x = 0; x < m.rows(); ++x) m.row(x).for_each([&](std::size_t y) { pairs.push_back({x, y}); });
    slots.push_back({{"triple", {t.a, t.b, t.c}}, {"count", pairs.size()}, {"cherries", std::move(pairs)}});
  }
  return {{"orientation", name(c.orientation())}, {"total", c.size()}, {"triples", std::move(slots)}};
}

Json to_json(const VertexFamily& f) {
  Json sets = Json::array();
  for (const auto& [k, b] : f.sets()) sets.push_back({{"pair", pair_json(k)}, {"members", b.to_indices()}});
  return sets;
}

Json to_json(const SubsetCertificate& c) {
  Json j{{"verdict", name(c.verdict)},
         {"method", name(c.method)},
         {"deviation", rational_json(c.deviation)},
         {"threshold", rational_json(c.threshold)},
         {"evaluated", c.evaluated}};
  j["witness"] = c.witness ? Json(*c.witness) : Json(nullptr);
  j["spectral_bound"] = c.spectral_bound ? Json(*c.spectral_bound) : Json(nullptr);
  return j;
}

Json to_json(const EeCertificate& c) {
  Json j{{"verdict", name(c.verdict)},
         {"method", name(c.method)},
         {"e_ee", c.e},
         {"k_ee", c.k},
         {"lower_deviation", rational_json(c.lower_deviation)},
         {"upper_deviation", rational_json(c.upper_deviation)},
         {"candidates", c.candidates}};
  if (c.witness) {
    const auto dump = [](const PairSet& p) {
      Json out = Json::array();
      for (const auto& [x, y] : p.pairs()) out.push_back({x, y});
      return out;
    };
    j["witness"] = {{"P", dump(c.witness->first)}, {"Q", dump(c.witness->second)}};
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

Json to_json(const EmbedResult& r, const ReducedHypergraph& a) {
  const EmbedTrace& t = r.trace;
  Json j{{"status", name(r.status)}, {"tau2", rational_json(r.tau2)}, {"xi", rational_json(r.xi)}};
  j["trace"] = {{"subsets_tried", t.subsets_tried},
                {"labellings_tried", t.labellings_tried},
                {"backtracks", t.backtracks},
                {"nodes", t.nodes},
                {"beta", rational_json(t.beta)},
                {"rho", rational_json(t.rho)},
                {"spread", rational_json(t.spread)},
                {"aligned", t.aligned},
                {"margin_holds", t.margin_holds},
                {"swapped", t.swapped},
                {"r14_score", t.r14_score},
                {"b34_score", t.b34_score},
                {"r24_score", t.r24_score},
                {"pair_score", t.pair_score},
                {"g1", t.g1},
                {"g2", t.g2},
                {"g_candidates", t.candidates}};
  if (!r.witness) {
    j["witness"] = nullptr;
    return j;
  }
  const EmbeddingWitness& w = *r.witness;
  Json vertices = Json::array();
  for (int p = 1; p <= 5; ++p)
    for (int q = p + 1; q <= 5; ++q) {
      const bool cycle = q - p == 1 || q - p == 4;
      const Colour c = cycle ? w.blue_role : opposite(w.blue_role);
      vertices.push_back({{"name", std::string(cycle ? "b" : "r") + std::to_string(p) + std::to_string(q)},
                          {"pair", pair_json(w.key(p, q))},
                          {"vertex", w.vertex(p, q)},
                          {"colour", c == Colour::Blue ? "blue" : "red"}});
    }
  Json edges = Json::array();
  std::size_t valid = 0;
  for (int p = 1; p <= 5; ++p)
    for (int q = p + 1; q <= 5; ++q)
      for (int s = q + 1; s <= 5; ++s) {
        const int i = w.labels[static_cast<std::size_t>(p - 1)];
        const int jj = w.labels[static_cast<std::size_t>(q - 1)];
        const int k = w.labels[static_cast<std::size_t>(s - 1)];
        const int x = w.vertex(p, q), y = w.vertex(p, s), z = w.vertex(q, s);
        const bool ok = a.has_edge(i, jj, k, x, y, z);
        valid += ok;
        edges.push_back({{"labels", {p, q, s}}, {"indices", {i, jj, k}}, {"vertices", {x, y, z}}, {"edge", ok}});
      }
  j["witness"] = {{"labels", w.labels},
                  {"blue_role", w.blue_role == Colour::Blue ? "blue" : "red"},
                  {"vertices", std::move(vertices)},
                  {"edges", std::move(edges)},
                  {"validated_edges", valid}};
  return j;
}

} // namespace turanforge
