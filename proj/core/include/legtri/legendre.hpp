#pragma once

#include <optional>
#include <vector>

#include "legtri/arrows.hpp"

namespace legtri {

using IntegerVector = std::vector<long long>;

/**
 * A nonempty proper face of the Legendre polytope P_n, encoded by the pair
 * of disjoint nonempty node sets (I, J): the face is the convex hull of all
 * vertices e_j - e_i with i in I, j in J.  Its dimension is |I| + |J| - 2,
 * and it is a facet exactly when I and J partition {1, ..., n+1}.
 */
struct LatticeFace {
  int n;
  std::vector<int> I;  // tail nodes, sorted ascending
  std::vector<int> J;  // head nodes, sorted ascending

  LatticeFace(int n_, std::vector<int> I_, std::vector<int> J_);

  int dim() const { return static_cast<int>(I.size() + J.size()) - 2; }
  bool is_facet() const {
    return I.size() + J.size() == static_cast<size_t>(n) + 1;
  }
  bool contains_arrow(const Arrow& a) const;
  bool contains_face(const LatticeFace& other) const;

  // The vertex set I x J as arrows, sorted by (tail, head).
  std::vector<Arrow> vertex_arrows() const;

  auto operator<=>(const LatticeFace&) const = default;
};

// Coordinates of the vertex e_head - e_tail in R^{n+1}.
IntegerVector vertex_coordinates(const Arrow& a);

// All nonempty proper faces of P_n, optionally restricted to one dimension.
// Guarded at n <= 7 unless unsafe_scale is set.
std::vector<LatticeFace> enumerate_lattice_faces(int n,
                                         std::optional<int> dim = std::nullopt,
                                         bool unsafe_scale = false);

// The codimension-one faces of f within f's own face lattice: drop one node
// from I (if |I| >= 2) or one node from J (if |J| >= 2).
std::vector<LatticeFace> face_facets(const LatticeFace& f);

// The 2^{n-1} facets of P_n whose vertex set contains the given arrow.
std::vector<LatticeFace> maximal_faces_containing(const Arrow& a);

// True iff the arrows, read as undirected edges with multiplicity, form a
// forest.  For arrow sets lying in a common face this is equivalent to the
// vertex set being affinely independent, i.e. spanning a simplex.
bool is_simplex_set(const std::vector<Arrow>& s);

// Normalized volume of the simplex spanned by n+1 affinely independent
// points of the hyperplane x_1 + ... + x_{n+1} = 0, measured in the lattice
// generated by the differences e_i - e_{i+1}.  Degenerate point sets give 0;
// anything but exactly n+1 zero-sum points of equal length is a domain error.
long long simplex_normalized_volume(const std::vector<IntegerVector>& points);

// Exhaustively checks that every square submatrix of the (n+1) x n(n+1)
// vertex coordinate matrix has determinant in {-1, 0, 1}.  Guarded at
// n <= 3 unless unsafe_scale is set; the scan is exponential in n.
bool incidence_is_totally_unimodular(int n, bool unsafe_scale = false);

}  // namespace legtri
