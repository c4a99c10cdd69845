#pragma once

#include <string>
#include <vector>

#include "legtri/arrows.hpp"
#include "legtri/simion.hpp"

namespace legtri {

// The cyclic shift of order n+1 acting on arrows: both endpoints are
// incremented by `power` modulo n+1, with representatives kept in 1..n+1.
// Negative powers are accepted.
Arrow zeta_apply(const Arrow& a, long long power = 1);

// Arrow-wise shift of a face; the result is re-sorted.
ArrowSet zeta_apply(const ArrowSet& f, long long power = 1);

/**
 * True iff the face lies in the k-th rotated copy of the positive-root cone,
 * i.e. every arrow of the face becomes backward after shifting by 1-k.
 * Requires 1 <= k <= n+1; the empty face lies in every copy.
 */
bool is_in_positive_component(const ArrowSet& f, int k);

/**
 * Result of checking that the facet complex splits into n+1 rotation
 * classes: type-k facets all lie in the k-th positive component, the shift
 * maps the type-k class bijectively onto the type-(k mod (n+1))+1 class, and
 * all classes have size C(2n,n)/(n+1).
 */
struct DecompositionReport {
  int n = 0;
  long long facet_count = 0;
  long long expected_class_size = 0;
  std::vector<long long> facets_per_type;  // [k-1] = number of type-k facets
  std::vector<int> type_image;             // [k-1] = type of the shifted class
  bool types_in_components = false;
  bool shift_permutes_types = false;
  bool class_sizes_match = false;
  bool pass = false;
  std::vector<std::string> failures;       // counterexample descriptions
};

// Exhaustive check over all facets; guarded at n <= 6 unless unsafe_scale.
DecompositionReport verify_decomposition(int n, bool unsafe_scale = false);

}  // namespace legtri
