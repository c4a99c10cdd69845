#pragma once

#include <algorithm>
#include <compare>
#include <vector>

#include "legtri/errors.hpp"

namespace legtri {

/**
 * A vertex of the Legendre polytope P_n: the lattice point e_head - e_tail,
 * drawn as an arrow between two distinct nodes of {1, ..., n+1}.
 *
 * Arrows with tail > head are called backward, the others forward.  The n
 * field pins the ambient polytope; mixing arrows with different n in one
 * operation is a domain error.
 */
struct Arrow {
  int n;
  int tail;
  int head;

  Arrow(int n_, int tail_, int head_);

  bool backward() const { return tail > head; }
  bool forward() const { return tail < head; }

  // Closed span [lo, hi] on the node line, ignoring direction.
  int span_lo() const { return std::min(tail, head); }
  int span_hi() const { return std::max(tail, head); }

  auto operator<=>(const Arrow&) const = default;
};

// All n(n+1) arrows on {1, ..., n+1}, sorted by (tail, head).
std::vector<Arrow> all_arrows(int n);

/**
 * Closed arc on the circle R/mZ, starting at `start` and sweeping `length`
 * units in the increasing direction.  Point representatives live in the
 * fundamental domain (0, m]; lengths here are always in [1, m-1], so an arc
 * never covers the whole circle.
 */
struct CircularArc {
  int circumference;
  int start;
  int length;

  CircularArc(int circumference_, int start_, int length_);

  auto operator<=>(const CircularArc&) const = default;
};

/**
 * A vertex of the type-B associahedron: a B-diagonal of a centrally
 * symmetric (2n+2)-gon whose vertices are labeled 1, ..., 2n+2 in cyclic
 * order (label i+n+1 is antipodal to label i).
 *
 * Either a diameter {i, i+n+1}, or an antipodal pair of noncrossing
 * non-diameter diagonals {{a,b},{a+n+1,b+n+1}}.  The canonical form of a
 * pair keeps the representative diagonal whose first label is the smallest
 * one in 1..n+1, so equality is structural.
 */
class BDiagonal {
 public:
  enum class Kind { Diameter, SymmetricPair };

  // The diameter {i, i+n+1}, for 1 <= i <= n+1.
  static BDiagonal diameter(int n, int i);

  // The pair {{a,b},{a+n+1,b+n+1}} from any single representative diagonal
  // {a,b}.  Rejects degenerate pairs: equal or adjacent labels (not a
  // diagonal of the polygon) and antipodal labels (use diameter()).
  static BDiagonal symmetric_pair(int n, int a, int b);

  int n() const { return n_; }
  Kind kind() const { return kind_; }

  // Diameter label i in 1..n+1; only valid for Kind::Diameter.
  int diameter_label() const;

  // Canonical representative labels; only valid for Kind::SymmetricPair.
  // u is in 1..n+1, v in 1..2n+2, and {u, v} is one of the two diagonals.
  int u() const;
  int v() const;

  auto operator<=>(const BDiagonal&) const = default;

 private:
  BDiagonal(int n, Kind kind, int a, int b)
      : n_(n), kind_(kind), a_(a), b_(b) {}

  int n_;
  Kind kind_;
  int a_;
  int b_;
};

// All n(n+1) B-diagonals, sorted canonically.
std::vector<BDiagonal> all_bdiagonals(int n);

/**
 * The pair of centrally symmetric arcs cut off by a B-diagonal on the
 * (2n+2)-circle.  Canonically `inner` is the arc whose start lies in
 * 1..n+1; `outer` is its antipodal copy.  Both have equal length <= n.
 */
struct ArcPair {
  int n;
  CircularArc inner;
  CircularArc outer;

  auto operator<=>(const ArcPair&) const = default;
};

// Collapse of the (2n+2)-circle onto the (n+1)-circle that identifies
// antipodal points: x stays put if x <= n+1 and loses n+1 otherwise.
// The argument must lie in the fundamental domain (0, 2n+2].
int pi(int x, int n);

// Arc representation: the B-diagonal {{u,v},{u+n+1,v+n+1}} cuts the circle
// into the arcs [u, v-1] and [u+n+1, v+n], with the representative (u, v)
// oriented so that the arcs have length at most n.
ArcPair arc_of_bdiagonal(const BDiagonal& d);

// Arrow representation: if [s, s+L] is the arc of d starting in 1..n+1,
// the arrow is (pi(s+L), s).  Bijective between B-diagonals and arrows.
Arrow arrow_of_bdiagonal(const BDiagonal& d);

// Inverse of arrow_of_bdiagonal.
BDiagonal bdiagonal_of_arrow(const Arrow& a);

// Image of the arc of an arrow's B-diagonal on the small circle R/(n+1)Z:
// starts at the head and sweeps (tail - head) mod (n+1) units.  Backward
// arrows give the plain interval [head, tail]; forward arrows wrap.
CircularArc image_arc(const Arrow& a);

// Noncrossing test for the underlying B-diagonals: true iff the two image
// arcs are disjoint or one weakly contains the other.  Requires distinct
// arrows with equal n.
bool arrows_compatible(const Arrow& a, const Arrow& b);

// Same predicate decided by direction case analysis on spans instead of
// arcs; kept as an independent implementation for cross-checking.
bool arrows_compatible_by_cases(const Arrow& a, const Arrow& b);

}  // namespace legtri
