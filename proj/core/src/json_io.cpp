#include "legtri/json_io.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace legtri {

namespace {

using nlohmann::json;

int int_field(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw std::invalid_argument(std::string(what) + ": expected an integer");
  return j.get<int>();
}

std::pair<int, int> int_pair(const json& j, const char* what) {
  if (!j.is_array() || j.size() != 2)
    throw std::invalid_argument(std::string(what) +
                                ": expected a [tail, head] pair");
  return {int_field(j[0], what), int_field(j[1], what)};
}

std::vector<int> int_list(const json& j, const char* what) {
  if (!j.is_array())
    throw std::invalid_argument(std::string(what) +
                                ": expected an integer array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const json& x : j) out.push_back(int_field(x, what));
  return out;
}

}  // namespace

json json_of(const Arrow& a) { return json::array({a.tail, a.head}); }

json json_of(const BDiagonal& d) {
  if (d.kind() == BDiagonal::Kind::Diameter)
    return {{"kind", "diameter"}, {"i", d.diameter_label()}};
  return {{"kind", "pair"}, {"u", d.u()}, {"v", d.v()}};
}

json json_of(const CircularArc& arc) {
  return {{"start", arc.start}, {"len", arc.length}, {"mod", arc.circumference}};
}

json json_of(const ArcPair& pair) {
  return {{"inner", json_of(pair.inner)}, {"outer", json_of(pair.outer)}};
}

json json_of(const LatticeFace& f) { return {{"I", f.I}, {"J", f.J}}; }

json json_of(const ArrowSet& s) {
  json out = json::array();
  for (const Arrow& a : s) out.push_back(json_of(a));
  return out;
}

json json_of(const SimplicialComplex& c) {
  json facets = json::array();
  for (const ArrowSet& f : c.facets) facets.push_back(json_of(f));
  return {{"n", c.n}, {"facets", facets}};
}

json json_of(const Digraph& g) {
  json arrows = json::array();
  for (const auto& [t, h] : g.arrows) arrows.push_back(json::array({t, h}));
  return {{"nodes", g.nodes}, {"arrows", arrows}};
}

json json_of(const std::vector<IndexedLetter>& m) {
  json out = json::array();
  for (const IndexedLetter& x : m)
    out.push_back({{"letter", std::string(1, x.letter)}, {"index", x.index}});
  return out;
}

json json_of(const PullOrder& order) {
  json out = json::array();
  for (const Arrow& a : order.sequence()) out.push_back(json_of(a));
  return out;
}

json json_of(const BigInt& value) {
  static const BigInt lo = std::numeric_limits<std::int64_t>::min();
  static const BigInt hi = std::numeric_limits<std::int64_t>::max();
  if (value >= lo && value <= hi) return value.convert_to<std::int64_t>();
  return value.str();
}

json json_of(const FaceVector& f) {
  json entries = json::array();
  for (const BigInt& e : f.entries) entries.push_back(json_of(e));
  return {{"n", f.n}, {"f", entries}};
}

Arrow arrow_from_json(const json& j, int n) {
  const auto [t, h] = int_pair(j, "arrow");
  return Arrow(n, t, h);
}

BDiagonal bdiagonal_from_json(const json& j, int n) {
  if (!j.is_object() || !j.contains("kind"))
    throw std::invalid_argument("b-diagonal: expected {\"kind\": ...}");
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "diameter")
    return BDiagonal::diameter(n, int_field(j.at("i"), "b-diagonal i"));
  if (kind == "pair")
    return BDiagonal::symmetric_pair(n, int_field(j.at("u"), "b-diagonal u"),
                                     int_field(j.at("v"), "b-diagonal v"));
  throw std::invalid_argument("b-diagonal: unknown kind \"" + kind + "\"");
}

ArrowSet arrowset_from_json(const json& j, int n) {
  if (!j.is_array())
    throw std::invalid_argument("face: expected an array of [tail, head]");
  ArrowSet out;
  out.reserve(j.size());
  for (const json& x : j) out.push_back(arrow_from_json(x, n));
  return out;
}

Digraph digraph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("nodes") || !j.contains("arrows"))
    throw std::invalid_argument(
        "digraph: expected {\"nodes\": [...], \"arrows\": [...]}");
  std::vector<int> nodes = int_list(j.at("nodes"), "digraph nodes");
  std::vector<std::pair<int, int>> arrows;
  if (!j.at("arrows").is_array())
    throw std::invalid_argument("digraph arrows: expected an array");
  for (const json& x : j.at("arrows"))
    arrows.push_back(int_pair(x, "digraph arrow"));
  return Digraph(std::move(nodes), std::move(arrows));
}

std::vector<IndexedLetter> multiset_from_json(const json& j) {
  if (!j.is_array())
    throw std::invalid_argument("multiset: expected an array");
  std::vector<IndexedLetter> out;
  for (const json& x : j) {
    if (!x.is_object() || !x.contains("letter") || !x.contains("index"))
      throw std::invalid_argument(
          "multiset: expected {\"letter\": ..., \"index\": ...}");
    const std::string letter = x.at("letter").get<std::string>();
    if (letter.size() != 1 ||
        (letter[0] != 'U' && letter[0] != 'D' && letter[0] != 'H'))
      throw std::invalid_argument("multiset: letter must be U, D, or H");
    out.push_back({letter[0], int_field(x.at("index"), "multiset index")});
  }
  return out;
}

PullOrder order_from_json(const json& j, int n) {
  if (!j.is_array())
    throw std::invalid_argument("order: expected an array of [tail, head]");
  std::vector<Arrow> seq;
  seq.reserve(j.size());
  for (const json& x : j) seq.push_back(arrow_from_json(x, n));
  return PullOrder(n, std::move(seq));
}

}  // namespace legtri
