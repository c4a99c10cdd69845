#pragma once

#include <optional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "legtri/arrows.hpp"

namespace legtri {

using BigInt = boost::multiprecision::cpp_int;

// A face of the type-B associahedron is a set of pairwise compatible
// arrows; faces are kept as sorted vectors of distinct arrows.
using ArrowSet = std::vector<Arrow>;

// True iff the arrows are pairwise compatible (empty and singleton sets are
// faces).  Mixed ambient n or repeated arrows are invalid input.
bool is_face(const ArrowSet& s);

// All faces, optionally restricted to one dimension (a face of dimension d
// has d+1 arrows; dim = -1 selects the empty face).  Sorted, deterministic.
// Guarded at n <= 7 unless unsafe_scale is set.
std::vector<ArrowSet> enumerate_faces(int n,
                                      std::optional<int> dim = std::nullopt,
                                      bool unsafe_scale = false);

// Facets are the faces with n arrows.
bool is_facet(const ArrowSet& s);

// Independent facet characterization used to cross-check is_facet: exactly
// one diameter arrow; backward arrows nest no forward arrow; a type-1 facet
// has no forward arrows; forward arrows pairwise nest; no head of one arrow
// is the tail of another; no two arrows cross.  Requires |s| = n.
bool satisfies_facet_conditions(const ArrowSet& s);

// The unique k such that the diameter arrow of the facet is (k-1, k), with
// (n+1, 1) counting as k = 1.  Rejects non-facets; a facet with zero or
// several diameter arrows would be an invariant violation.
int facet_type(const ArrowSet& s);

/**
 * Face count vector of an (n-1)-dimensional complex.  entries[j] holds
 * f_{j-1}, the number of faces with j vertices, for j = 0..n; entries[0] is
 * always 1 for the empty face.
 */
struct FaceVector {
  int n;
  std::vector<BigInt> entries;

  bool operator==(const FaceVector&) const = default;
};

enum class CountMode { Formula, Enumerated };
enum class HMode { Formula, FromF };

// f_{j-1} = C(n+j, j) C(n, j).  Enumerated mode counts faces directly and
// is guarded like enumerate_faces.
FaceVector f_vector(int n, CountMode mode, bool unsafe_scale = false);

// h_i = C(n, i)^2, or the f-to-h transform of f_vector(n, Formula).
std::vector<BigInt> h_vector(int n, HMode mode);

// Standard f-to-h transform for an (n-1)-dimensional simplicial complex:
// h_j = sum_i (-1)^{j-i} C(n-i, j-i) f_{i-1}.
std::vector<BigInt> h_from_f(const FaceVector& f);

}  // namespace legtri
