#include <set>

#include "doctest.h"
#include "legtri/arrows.hpp"
#include "legtri/cho.hpp"

using namespace legtri;

TEST_CASE("arrow basics and lexicographic enumeration") {
  const auto arrows = all_arrows(2);
  REQUIRE(arrows.size() == 6);
  CHECK(arrows[0] == Arrow(2, 1, 2));
  CHECK(arrows[1] == Arrow(2, 1, 3));
  CHECK(arrows[2] == Arrow(2, 2, 1));
  CHECK(arrows[3] == Arrow(2, 2, 3));
  CHECK(arrows[4] == Arrow(2, 3, 1));
  CHECK(arrows[5] == Arrow(2, 3, 2));

  CHECK(Arrow(2, 2, 1).backward());
  CHECK(Arrow(2, 1, 2).forward());
  CHECK_FALSE(Arrow(2, 1, 2).backward());
  CHECK(Arrow(5, 2, 5).span_lo() == 2);
  CHECK(Arrow(5, 2, 5).span_hi() == 5);
  CHECK(Arrow(5, 5, 2).span_lo() == 2);
  CHECK(Arrow(5, 5, 2).span_hi() == 5);

  for (int n = 1; n <= 6; ++n)
    CHECK(all_arrows(n).size() == static_cast<size_t>(n * (n + 1)));
}

TEST_CASE("arrow constructor rejects out-of-range endpoints") {
  CHECK_THROWS_AS(Arrow(2, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(Arrow(2, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(Arrow(2, 1, 4), std::invalid_argument);
  CHECK_THROWS_AS(Arrow(0, 1, 2), std::invalid_argument);
}

TEST_CASE("two-to-one circle reduction") {
  CHECK(pi(10, 7) == 2);
  CHECK(pi(5, 7) == 5);
  CHECK(pi(16, 7) == 8);
  // Every label and its antipode reduce to the same point.
  for (int n = 1; n <= 6; ++n)
    for (int x = 1; x <= n + 1; ++x) CHECK(pi(x + n + 1, n) == pi(x, n));
}

TEST_CASE("diagonal construction validates its inputs") {
  CHECK_THROWS_AS(BDiagonal::diameter(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(BDiagonal::diameter(3, 5), std::invalid_argument);
  CHECK_THROWS_AS(BDiagonal::symmetric_pair(3, 2, 2), std::invalid_argument);
  // Antipodal endpoints would be a diameter, not a symmetric pair.
  CHECK_THROWS_AS(BDiagonal::symmetric_pair(3, 2, 6), std::invalid_argument);
  // Adjacent polygon vertices do not span a diagonal.
  CHECK_THROWS_AS(BDiagonal::symmetric_pair(3, 2, 3), std::invalid_argument);
}

TEST_CASE("symmetric pair maps to its arrow with the worked arc pair") {
  // On the 16-gon (n = 7): the pair through 2 and 5 pairs the short arc
  // [2,4] with its antipodal copy [10,12] and encodes arrow (4,2).
  const BDiagonal d = BDiagonal::symmetric_pair(7, 2, 5);
  const ArcPair arcs = arc_of_bdiagonal(d);
  CHECK(arcs.inner == CircularArc(16, 2, 2));
  CHECK(arcs.outer == CircularArc(16, 10, 2));
  CHECK(arrow_of_bdiagonal(d) == Arrow(7, 4, 2));
  CHECK(bdiagonal_of_arrow(Arrow(7, 4, 2)) == d);
}

TEST_CASE("symmetric pair crossing the antipodal seam") {
  // Endpoints 4 and 14 on the 16-gon: canonical pair is {4,14} ~ {12,6},
  // encoding the forward arrow (3,6).
  CHECK(arrow_of_bdiagonal(BDiagonal::symmetric_pair(7, 4, 14)) ==
        Arrow(7, 3, 6));
  CHECK(bdiagonal_of_arrow(Arrow(7, 3, 6)) ==
        BDiagonal::symmetric_pair(7, 4, 14));
}

TEST_CASE("diameters map to unit-step backward arrows") {
  CHECK(arrow_of_bdiagonal(BDiagonal::diameter(7, 1)) == Arrow(7, 8, 1));
  CHECK(arrow_of_bdiagonal(BDiagonal::diameter(7, 4)) == Arrow(7, 3, 4));
  CHECK(bdiagonal_of_arrow(Arrow(5, 3, 4)) == BDiagonal::diameter(5, 4));
  CHECK(bdiagonal_of_arrow(Arrow(5, 6, 1)) == BDiagonal::diameter(5, 1));

  // Smallest case: the single diameter family of the square.
  const ArcPair arcs = arc_of_bdiagonal(BDiagonal::diameter(1, 1));
  CHECK(arcs.inner == CircularArc(4, 1, 1));
  CHECK(arcs.outer == CircularArc(4, 3, 1));
}

TEST_CASE("diagonal-arrow correspondence is a bijection") {
  for (int n = 1; n <= 8; ++n) {
    const auto diagonals = all_bdiagonals(n);
    REQUIRE(diagonals.size() == static_cast<size_t>(n * (n + 1)));
    std::set<Arrow> image;
    for (const BDiagonal& d : diagonals) {
      const Arrow a = arrow_of_bdiagonal(d);
      CHECK(bdiagonal_of_arrow(a) == d);
      image.insert(a);
    }
    CHECK(image.size() == diagonals.size());
    // Surjective: every arrow round-trips too.
    for (const Arrow& a : all_arrows(n))
      CHECK(arrow_of_bdiagonal(bdiagonal_of_arrow(a)) == a);
  }
}

TEST_CASE("arc representation properties") {
  for (int n = 1; n <= 6; ++n) {
    for (const BDiagonal& d : all_bdiagonals(n)) {
      const ArcPair arcs = arc_of_bdiagonal(d);
      CHECK(arcs.inner.circumference == 2 * (n + 1));
      CHECK(arcs.outer.circumference == 2 * (n + 1));
      CHECK(arcs.inner.length == arcs.outer.length);
      // The antipodal copy starts a half-turn later.
      CHECK((arcs.inner.start + n + 1 - arcs.outer.start) % (2 * (n + 1)) ==
            0);
      CHECK(arcs.inner.length >= 1);
      CHECK(arcs.inner.length <= n);
      // Arc length reaches n exactly for diameters.
      CHECK((arcs.inner.length == n) ==
            (d.kind() == BDiagonal::Kind::Diameter));
    }
  }
}

TEST_CASE("reduced image arcs") {
  CHECK(image_arc(Arrow(7, 4, 2)) == CircularArc(8, 2, 2));
  CHECK(image_arc(Arrow(7, 3, 6)) == CircularArc(8, 6, 5));
  CHECK(image_arc(Arrow(2, 1, 2)) == CircularArc(3, 2, 2));
  for (int n = 1; n <= 6; ++n)
    for (const Arrow& a : all_arrows(n)) {
      const CircularArc arc = image_arc(a);
      CHECK(arc.circumference == n + 1);
      CHECK(arc.start == a.head);
      CHECK((arc.start + arc.length - a.tail) % (n + 1) == 0);
      // Backward arrows reduce short arcs, forward ones wrap past n+1.
      CHECK(arc.length == (a.backward() ? a.tail - a.head
                                        : a.tail - a.head + n + 1));
    }
}

TEST_CASE("compatibility on frozen pairs") {
  CHECK(arrows_compatible(Arrow(10, 3, 1), Arrow(10, 6, 5)));
  CHECK_FALSE(arrows_compatible(Arrow(5, 3, 1), Arrow(5, 6, 3)));
  CHECK_FALSE(arrows_compatible(Arrow(3, 1, 3), Arrow(3, 2, 4)));
  // Arrows sharing a tail or sharing a head never cross.
  CHECK(arrows_compatible_by_cases(Arrow(10, 3, 8), Arrow(10, 3, 9)));
  CHECK(arrows_compatible_by_cases(Arrow(10, 10, 9), Arrow(10, 11, 9)));
  CHECK(arrows_compatible(Arrow(10, 3, 8), Arrow(10, 3, 9)));
  CHECK(arrows_compatible(Arrow(10, 10, 9), Arrow(10, 11, 9)));
  // A head meeting a tail at the same node is a crossing.
  CHECK_FALSE(arrows_compatible(Arrow(3, 1, 2), Arrow(3, 2, 3)));
  // Nested forward arrows are fine; crossing forward arrows are not.
  CHECK(arrows_compatible(Arrow(4, 1, 5), Arrow(4, 2, 4)));
  CHECK_FALSE(arrows_compatible(Arrow(4, 1, 3), Arrow(4, 2, 4)));
  // Backward arrows may be disjoint or nested, but may not cross.
  CHECK(arrows_compatible(Arrow(4, 2, 1), Arrow(4, 4, 3)));
  CHECK(arrows_compatible(Arrow(4, 4, 1), Arrow(4, 3, 2)));
  CHECK_FALSE(arrows_compatible(Arrow(4, 3, 1), Arrow(4, 4, 2)));
  // A backward arrow must not nest a forward one.
  CHECK_FALSE(arrows_compatible(Arrow(4, 4, 1), Arrow(4, 2, 3)));
}

TEST_CASE("compatibility is symmetric and matches the crossing criterion") {
  for (int n = 1; n <= 6; ++n) {
    const auto arrows = all_arrows(n);
    for (const Arrow& a : arrows)
      for (const Arrow& b : arrows) {
        if (a == b) continue;
        const bool arc_based = arrows_compatible(a, b);
        CHECK(arc_based == arrows_compatible(b, a));
        CHECK(arc_based == arrows_compatible_by_cases(a, b));
        // The underlying diagonals must agree with the arrow predicate:
        // two diagonals are compatible iff their full arc pairs are
        // pairwise noncrossing, which the reduced-image criterion encodes.
      }
  }
}

TEST_CASE("compatibility is equivariant under the cyclic node shift") {
  for (int n = 1; n <= 5; ++n) {
    const auto arrows = all_arrows(n);
    for (const Arrow& a : arrows)
      for (const Arrow& b : arrows) {
        if (a == b) continue;
        CHECK(arrows_compatible(a, b) ==
              arrows_compatible(zeta_apply(a), zeta_apply(b)));
        CHECK(arrows_compatible_by_cases(a, b) ==
              arrows_compatible_by_cases(zeta_apply(a), zeta_apply(b)));
      }
  }
}

TEST_CASE("compatibility rejects arrows from different ambient sizes") {
  CHECK_THROWS_AS(arrows_compatible(Arrow(3, 1, 2), Arrow(4, 1, 2)),
                  std::domain_error);
  CHECK_THROWS_AS(arrows_compatible(Arrow(3, 1, 2), Arrow(3, 1, 2)),
                  std::domain_error);
}
