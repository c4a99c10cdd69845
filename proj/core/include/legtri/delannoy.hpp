#pragma once

#include <string>
#include <utility>
#include <vector>

#include "legtri/simion.hpp"

namespace legtri {

/**
 * A digraph on an arbitrary finite set of positive integer nodes.  Nodes and
 * arrows are stored sorted and distinct; every arrow endpoint must be a
 * node.  Whether the arrow set is *valid* (pairwise compatible under the
 * order-isomorphism onto 1..|V|) is a separate predicate, not a type
 * invariant, so invalid digraphs can be represented and rejected by the
 * operations that require validity.
 */
struct Digraph {
  std::vector<int> nodes;
  std::vector<std::pair<int, int>> arrows;

  Digraph(std::vector<int> nodes, std::vector<std::pair<int, int>> arrows);

  bool operator==(const Digraph&) const = default;

  int min_node() const { return nodes.front(); }
  int max_node() const { return nodes.back(); }
};

// Compresses the node set onto 1..|V| and tests pairwise arrow
// compatibility with ambient n = |V| - 1.  A single isolated node is valid.
bool is_valid_digraph(const Digraph& g);

// --- Words over {U, D, H} ---------------------------------------------

// Throws std::invalid_argument naming the first offending position if the
// word contains a character outside {U, D, H}.
void validate_word(const std::string& word);

// U and D count 1, H counts 2.
int word_length(const std::string& word);

// #U = #D.
bool is_balanced_word(const std::string& word);

// Balanced and no prefix has more D than U.
bool is_schroeder_word(const std::string& word);

// All balanced words of length 2n, sorted; the count is the n-th central
// Delannoy number.
std::vector<std::string> all_balanced_words(int n);

// --- The encoding maps -------------------------------------------------

// Schroeder encoding of a backward-only valid digraph; the output has length
// 2(|V|-1) and one U per arrow.  Forward arrows are a domain error; an
// invalid digraph is an invalid argument.
std::string sp(const Digraph& g);

// Inverse of sp over the given node set; the word must be a Schroeder word
// of length 2(|nodes|-1).
Digraph sp_inverse(const std::string& word, const std::vector<int>& nodes);

/**
 * The twist: removes the least node v, which must carry the forward arrow
 * (v, w) to the greatest node w; every other forward arrow (v, z) is
 * replaced by the backward arrow (w, z).  Drops exactly one arrow.
 */
Digraph tw(const Digraph& g);

// Inverse of the twist: adds a node v below all nodes of g, the forward
// arrow (v, w) to the greatest node w, and replaces each arrow (w, z) of g
// by the forward arrow (v, z).
Digraph tw_inverse(const Digraph& g, int v);

// Full encoding of a valid digraph into a balanced word of length 2(|V|-1)
// with one U per arrow: Schroeder encoding if no forward arrows; otherwise
// split at the outermost forward arrow (x, y) into
// sp(left) D dp(tw(middle)) U sp(right).
std::string dp(const Digraph& g);

// Inverse of dp over the given node set; the word must be balanced of
// length 2(|nodes|-1).
Digraph dp_inverse(const std::string& word, const std::vector<int>& nodes);

// --- The non-recursive construction ------------------------------------

/**
 * A letter with a positive index, ordered D_x < U_x < H_x < D_{x+1}.
 */
struct IndexedLetter {
  char letter;  // 'U', 'D', or 'H'
  int index;

  bool operator==(const IndexedLetter&) const = default;
};

bool operator<(const IndexedLetter& a, const IndexedLetter& b);

/**
 * The indexed-letter multiset whose sorted readout equals dp(g), built in
 * three passes: one H per weak-component maximum below the greatest node;
 * per forward-arrow tail x, a D_x and a U_w for the greatest head w, folding
 * the remaining forward arrows at x into backward arrows at w; then per
 * backward head y of the folded graph, a U_y with a D_x for every tail x
 * and a U_x for every non-greatest tail.  Output is sorted.
 */
std::vector<IndexedLetter> multiset_of_digraph(const Digraph& g);

// The backward arrow set after the forward-folding pass alone, sorted.
std::vector<std::pair<int, int>> fold_forward_arrows(const Digraph& g);

// Sorts (stably) by the index order above and strips the indices.
std::string word_of_multiset(std::vector<IndexedLetter> m);

// --- Counting ----------------------------------------------------------

// Balanced words of length 2n with exactly k ups: C(n+k, k) C(n, k).
BigInt count_paths(int n, int k);

// Central Delannoy number: all balanced words of length 2n.
BigInt count_paths(int n);

}  // namespace legtri
