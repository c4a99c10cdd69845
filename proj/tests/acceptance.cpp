// Release gate: every criterion below must print PASS.  Each check is
// self-contained and exact; the binary exits nonzero if any line fails.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "legtri/arrows.hpp"
#include "legtri/cho.hpp"
#include "legtri/delannoy.hpp"
#include "legtri/legendre.hpp"
#include "legtri/numbers.hpp"
#include "legtri/pulling.hpp"
#include "legtri/simion.hpp"

using namespace legtri;

namespace {

int failures = 0;

void report(int index, const std::string& what, bool ok, double ms) {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << index << ": "
            << what << "  (" << static_cast<long long>(ms) << " ms)\n";
  if (!ok) ++failures;
}

template <typename Fn>
void criterion(int index, const std::string& what, Fn&& body) {
  const auto start = std::chrono::steady_clock::now();
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    std::cout << "      exception: " << e.what() << "\n";
    ok = false;
  }
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  report(index, what, ok, ms);
}

std::set<ArrowSet> facet_set(const std::vector<ArrowSet>& v) {
  return std::set<ArrowSet>(v.begin(), v.end());
}

std::vector<int> default_nodes(int n) {
  std::vector<int> nodes(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) nodes[static_cast<size_t>(i)] = i + 1;
  return nodes;
}

bool check_f_vectors() {
  for (int n = 1; n <= 6; ++n)
    if (!(f_vector(n, CountMode::Enumerated) == f_vector(n, CountMode::Formula)))
      return false;
  return f_vector(3, CountMode::Enumerated).entries ==
         std::vector<BigInt>{1, 12, 30, 20};
}

bool check_canonical_triangulations() {
  for (int n = 1; n <= 5; ++n) {
    const auto expected = facet_set(enumerate_faces(n, n - 1));
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const PullOrder order = random_simion_order(n, seed);
      if (!is_valid_simion_order(order)) return false;
      const SimplicialComplex tri = pull_triangulate(n, order);
      if (facet_set(tri.facets) != expected) return false;
    }
    const SimplicialComplex canonical =
        pull_triangulate(n, make_order(n, OrderScheme::SimionCanonical));
    if (facet_set(canonical.facets) != expected) return false;
  }
  return true;
}

bool check_flagness() {
  for (int n = 1; n <= 4; ++n) {
    const FaceVector formula = f_vector(n, CountMode::Formula);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const SimplicialComplex tri = pull_triangulate(n, random_order(n, seed));
      for (const ArrowSet& nonface : minimal_nonfaces(tri))
        if (nonface.size() != 2) return false;
      const std::vector<long long> counts = face_counts(tri);
      if (counts.size() != formula.entries.size()) return false;
      for (size_t j = 0; j < counts.size(); ++j)
        if (BigInt(counts[j]) != formula.entries[j]) return false;
    }
  }
  return true;
}

bool check_path_bijection() {
  const std::vector<long long> totals{3, 13, 63, 321, 1683};
  for (int n = 1; n <= 5; ++n) {
    const std::vector<int> nodes = default_nodes(n);
    const std::vector<ArrowSet> faces = enumerate_faces(n);
    std::set<std::string> words;
    std::map<size_t, long long> per_k;
    for (const ArrowSet& face : faces) {
      std::vector<std::pair<int, int>> arrows;
      for (const Arrow& a : face) arrows.emplace_back(a.tail, a.head);
      const Digraph g(nodes, arrows);
      const std::string w = dp(g);
      if (!is_balanced_word(w) || word_length(w) != 2 * n) return false;
      if (!(dp_inverse(w, nodes) == g)) return false;
      if (static_cast<size_t>(std::count(w.begin(), w.end(), 'U')) !=
          face.size())
        return false;
      words.insert(w);
      per_k[face.size()]++;
    }
    if (words.size() != faces.size()) return false;
    if (static_cast<long long>(words.size()) !=
        totals[static_cast<size_t>(n) - 1])
      return false;
    const std::vector<std::string> all = all_balanced_words(n);
    if (words != std::set<std::string>(all.begin(), all.end())) return false;
    for (size_t k = 0; k <= static_cast<size_t>(n); ++k)
      if (BigInt(per_k[k]) !=
          binomial(n + static_cast<int>(k), static_cast<int>(k)) *
              binomial(n, static_cast<int>(k)))
        return false;
    for (const std::string& w : all)
      if (dp(dp_inverse(w, nodes)) != w) return false;
  }
  return true;
}

bool check_worked_example() {
  const Digraph g({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11},
                  {{3, 1}, {6, 5}, {10, 9}, {11, 9}, {3, 8}, {3, 9}, {4, 5},
                   {4, 7}});
  const std::string word = "UHDDDUDUDUHUDUUDUD";
  if (dp(g) != word) return false;
  if (!(dp_inverse(word, g.nodes) == g)) return false;
  const std::vector<std::pair<int, int>> folded{{3, 1},  {6, 5},  {7, 5},
                                                {9, 8},  {10, 9}, {11, 9}};
  if (fold_forward_arrows(g) != folded) return false;
  const std::vector<IndexedLetter> expected{
      {'U', 1}, {'H', 2}, {'D', 3}, {'D', 3}, {'D', 4},  {'U', 5},
      {'D', 6}, {'U', 6}, {'D', 7}, {'U', 7}, {'H', 7},  {'U', 8},
      {'D', 9}, {'U', 9}, {'U', 9}, {'D', 10}, {'U', 10}, {'D', 11}};
  if (!(multiset_of_digraph(g) == expected)) return false;
  if (word_of_multiset(expected) != word) return false;
  return arrow_of_bdiagonal(BDiagonal::symmetric_pair(7, 2, 5)) ==
         Arrow(7, 4, 2);
}

bool check_facet_characterization() {
  for (int n = 1; n <= 6; ++n) {
    const std::vector<ArrowSet> facets = enumerate_faces(n, n - 1);
    if (BigInt(facets.size()) != binomial(2 * n, n)) return false;
    for (const ArrowSet& f : facets) {
      int diameters = 0;
      for (const Arrow& a : f)
        if (bdiagonal_of_arrow(a).kind() == BDiagonal::Kind::Diameter)
          ++diameters;
      if (diameters != 1) return false;
      if (!satisfies_facet_conditions(f)) return false;
      const int type = facet_type(f);
      if (type < 1 || type > n + 1) return false;
    }
  }
  return true;
}

bool check_cyclic_decomposition() {
  for (int n = 1; n <= 5; ++n) {
    const std::vector<ArrowSet> facets = enumerate_faces(n, n - 1);
    const BigInt class_size = binomial(2 * n, n) / (n + 1);
    std::map<int, std::set<ArrowSet>> by_type;
    for (const ArrowSet& f : facets) {
      const int k = facet_type(f);
      if (!is_in_positive_component(f, k)) return false;
      by_type[k].insert(f);
    }
    if (by_type.size() != static_cast<size_t>(n) + 1) return false;
    for (const auto& [k, cls] : by_type) {
      if (BigInt(cls.size()) != class_size) return false;
      std::set<ArrowSet> image;
      for (const ArrowSet& f : cls) image.insert(zeta_apply(f));
      if (image != by_type[(k % (n + 1)) + 1]) return false;
    }
    if (!verify_decomposition(n).pass) return false;
  }
  return true;
}

bool check_unimodularity() {
  for (int n = 1; n <= 5; ++n) {
    const SimplicialComplex tri =
        pull_triangulate(n, make_order(n, OrderScheme::SimionCanonical));
    for (const ArrowSet& f : tri.facets) {
      std::vector<IntegerVector> points{IntegerVector(static_cast<size_t>(n) + 1, 0)};
      for (const Arrow& a : f) points.push_back(vertex_coordinates(a));
      if (simplex_normalized_volume(points) != 1) return false;
    }
  }
  for (int n = 1; n <= 3; ++n)
    if (!incidence_is_totally_unimodular(n)) return false;
  return true;
}

bool check_h_vectors() {
  for (int n = 1; n <= 6; ++n) {
    const std::vector<BigInt> h =
        h_from_f(f_vector(n, CountMode::Enumerated));
    for (int i = 0; i <= n; ++i)
      if (h[static_cast<size_t>(i)] != binomial(n, i) * binomial(n, i))
        return false;
  }
  return h_from_f(f_vector(3, CountMode::Enumerated)) ==
         std::vector<BigInt>{1, 9, 9, 1};
}

bool check_predicate_equivalence() {
  for (int n = 1; n <= 8; ++n) {
    const std::vector<Arrow> arrows = all_arrows(n);
    for (const Arrow& a : arrows)
      for (const Arrow& b : arrows) {
        if (a == b) continue;
        const bool via_arcs = arrows_compatible(a, b);
        if (via_arcs != arrows_compatible_by_cases(a, b)) return false;
        const Arrow sa = zeta_apply(a), sb = zeta_apply(b);
        if (via_arcs != arrows_compatible(sa, sb)) return false;
        if (via_arcs != arrows_compatible_by_cases(sa, sb)) return false;
      }
  }
  return true;
}

}  // namespace

int main() {
  criterion(1, "enumerated face counts match the product formula (n <= 6)",
            check_f_vectors);
  criterion(2,
            "canonical pulling orders reproduce the noncrossing complex "
            "(n <= 5, 20 seeds each)",
            check_canonical_triangulations);
  criterion(3,
            "every pulling triangulation is flag with the same face counts "
            "(n <= 4, 20 seeds each)",
            check_flagness);
  criterion(4,
            "digraph encoding is a bijection onto balanced words with exact "
            "class sizes (n <= 5)",
            check_path_bijection);
  criterion(5, "worked example: encoding, multiset, fold, and diagonal map",
            check_worked_example);
  criterion(6,
            "facets: unique diameter arrow, six conditions, count C(2n,n) "
            "(n <= 6)",
            check_facet_characterization);
  criterion(7,
            "cyclic decomposition: membership, type shift, Catalan classes "
            "(n <= 5)",
            check_cyclic_decomposition);
  criterion(8,
            "all facet simplices are unimodular (n <= 5); coordinate matrix "
            "is totally unimodular (n <= 3)",
            check_unimodularity);
  criterion(9, "f-to-h transform gives the squared binomials (n <= 6)",
            check_h_vectors);
  criterion(10,
            "compatibility predicates agree and are shift-equivariant "
            "(n <= 8)",
            check_predicate_equivalence);

  if (failures) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
