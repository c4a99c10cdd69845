#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "legtri/arrows.hpp"

namespace legtri {

enum class OrderScheme { Lex, RevlexBackwardFirst, SimionCanonical };

/**
 * A pull order: a total order on all n(n+1) arrows, least-pulled first.
 * Construction validates that the sequence is a permutation of the full
 * arrow set.
 */
class PullOrder {
 public:
  PullOrder(int n, std::vector<Arrow> sequence);

  int n() const { return n_; }
  const std::vector<Arrow>& sequence() const { return seq_; }
  int rank(const Arrow& a) const;

 private:
  int n_;
  std::vector<Arrow> seq_;
  std::vector<int> rank_;
};

// Stock orders.  Lex sorts by (tail, head).  SimionCanonical places all
// backward arrows before all forward ones and sorts each class by span
// length with lexicographic tie-break, which satisfies the nesting
// conditions below.  RevlexBackwardFirst also splits by direction but sorts
// each class by (head, tail), which deliberately violates them for n >= 2;
// it serves as a control order.
PullOrder make_order(int n, OrderScheme scheme);
PullOrder make_order(int n, const std::vector<Arrow>& explicit_sequence);

// Seeded, reproducible orders: a uniform shuffle, and a uniformly chosen
// linear extension of the constraints checked by is_valid_simion_order.
PullOrder random_order(int n, std::uint64_t seed);
PullOrder random_simion_order(int n, std::uint64_t seed);

// True iff (1) every backward arrow precedes every forward arrow, and
// (2, 3) within each direction class, an arrow whose span is contained in
// another's comes first.
bool is_valid_simion_order(const PullOrder& order);

/**
 * An abstract simplicial complex on arrow vertices, stored by its facets.
 * Canonical form: every facet sorted, facets sorted lexicographically.
 */
struct SimplicialComplex {
  int n;
  std::vector<std::vector<Arrow>> facets;

  bool operator==(const SimplicialComplex&) const = default;
};

// The pulling triangulation of the boundary complex of P_n in the given
// order: triangulate recursively by coning the least vertex v over the
// triangulated facets (not containing v) of the maximal faces containing v,
// plus the triangulation of the complex with v removed.  The result is pure
// of dimension n-1.
SimplicialComplex pull_triangulate(int n, const PullOrder& order);

// Downward closure of the facets, without the empty face, sorted.
std::vector<std::vector<Arrow>> all_faces(const SimplicialComplex& c);

// counts[j] = number of faces with j vertices (counts[0] = 1 for the empty
// face), up to the largest facet size.
std::vector<long long> face_counts(const SimplicialComplex& c);

// All inclusion-minimal non-faces over the complex's own vertex set.  The
// complex is flag iff every minimal non-face has exactly two vertices.
std::vector<std::vector<Arrow>> minimal_nonfaces(const SimplicialComplex& c);

// The diagonal of the square face {x1,x2} x {y1,y2} picked by a pulling
// triangulation: the one through the order-minimal vertex of the square.
// Returned with the lexicographically smaller arrow first.
std::pair<Arrow, Arrow> square_diagonal(int x1, int x2, int y1, int y2,
                                        const PullOrder& order);

}  // namespace legtri
