#pragma once

#include <vector>

#include <nlohmann/json.hpp>

#include "legtri/arrows.hpp"
#include "legtri/delannoy.hpp"
#include "legtri/legendre.hpp"
#include "legtri/pulling.hpp"
#include "legtri/simion.hpp"

namespace legtri {

// Serialized forms:
//   Arrow                [tail, head]
//   BDiagonal            {"kind":"diameter","i":k} | {"kind":"pair","u":u,"v":v}
//   CircularArc          {"start":s,"len":L,"mod":m}
//   ArcPair              {"inner":arc,"outer":arc}
//   LatticeFace          {"I":[...],"J":[...]}
//   face / arrow set     [[t,h],...]
//   SimplicialComplex    {"n":n,"facets":[[[t,h],...],...]}
//   Digraph              {"nodes":[...],"arrows":[[t,h],...]}
//   indexed multiset     [{"letter":"D","index":3},...]
//   PullOrder            [[t,h],...] in pull sequence
// Exact integers are emitted as JSON numbers when they fit in 64 bits and
// as decimal strings otherwise.

nlohmann::json json_of(const Arrow& a);
nlohmann::json json_of(const BDiagonal& d);
nlohmann::json json_of(const CircularArc& arc);
nlohmann::json json_of(const ArcPair& pair);
nlohmann::json json_of(const LatticeFace& f);
nlohmann::json json_of(const ArrowSet& s);
nlohmann::json json_of(const SimplicialComplex& c);
nlohmann::json json_of(const Digraph& g);
nlohmann::json json_of(const std::vector<IndexedLetter>& m);
nlohmann::json json_of(const PullOrder& order);
nlohmann::json json_of(const BigInt& value);
nlohmann::json json_of(const FaceVector& f);

// Parsers throw std::invalid_argument describing the malformed field.
Arrow arrow_from_json(const nlohmann::json& j, int n);
BDiagonal bdiagonal_from_json(const nlohmann::json& j, int n);
ArrowSet arrowset_from_json(const nlohmann::json& j, int n);
Digraph digraph_from_json(const nlohmann::json& j);
std::vector<IndexedLetter> multiset_from_json(const nlohmann::json& j);
PullOrder order_from_json(const nlohmann::json& j, int n);

}  // namespace legtri
