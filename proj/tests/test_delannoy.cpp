#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"
#include "legtri/delannoy.hpp"
#include "legtri/errors.hpp"
#include "legtri/simion.hpp"

using namespace legtri;

namespace {

// All valid digraphs on the node set {1, ..., n+1}, via the noncrossing
// complex: its faces are exactly the valid digraphs on that node set.
std::vector<Digraph> valid_digraphs(int n) {
  std::vector<Digraph> out;
  for (const ArrowSet& face : enumerate_faces(n)) {
    std::vector<int> nodes(static_cast<size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) nodes[static_cast<size_t>(i)] = i + 1;
    std::vector<std::pair<int, int>> arrows;
    for (const Arrow& a : face) arrows.emplace_back(a.tail, a.head);
    out.emplace_back(nodes, arrows);
  }
  return out;
}

const Digraph& worked_example() {
  static const Digraph g({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11},
                         {{3, 1},
                          {6, 5},
                          {10, 9},
                          {11, 9},
                          {3, 8},
                          {3, 9},
                          {4, 5},
                          {4, 7}});
  return g;
}

}  // namespace

TEST_CASE("digraph construction validates its input") {
  CHECK_THROWS_AS(Digraph({}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Digraph({1, 1}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Digraph({0, 1}, {}), std::invalid_argument);
  CHECK_THROWS_AS(Digraph({1, 2}, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(Digraph({1, 2}, {{1, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(Digraph({1, 2}, {{1, 2}, {1, 2}}), std::invalid_argument);

  const Digraph g({5, 2, 9}, {{9, 2}});
  CHECK(g.nodes == std::vector<int>{2, 5, 9});
  CHECK(g.min_node() == 2);
  CHECK(g.max_node() == 9);
}

TEST_CASE("validity rules on arbitrary node sets") {
  CHECK(is_valid_digraph(worked_example()));
  CHECK(is_valid_digraph(Digraph({4}, {})));
  CHECK_FALSE(is_valid_digraph(Digraph({1, 2, 3, 4},
                                       {{1, 3}, {2, 4}})));  // crossing
  // Forward arrows must nest.
  CHECK_FALSE(is_valid_digraph(Digraph({1, 2, 3, 4}, {{1, 3}, {2, 4}})));
  CHECK(is_valid_digraph(Digraph({1, 2, 3, 4}, {{1, 4}, {2, 3}})));
  // A backward arrow may not nest a forward arrow.
  CHECK_FALSE(is_valid_digraph(Digraph({1, 2, 3, 4}, {{4, 1}, {2, 3}})));
  CHECK(is_valid_digraph(Digraph({1, 2, 3, 4}, {{2, 1}, {4, 3}})));
  // No head may coincide with a tail.
  CHECK_FALSE(is_valid_digraph(Digraph({1, 2, 3}, {{1, 3}, {3, 2}})));

  // Validity only depends on the relative order of the labels.
  CHECK(is_valid_digraph(Digraph({10, 20, 30, 40}, {{10, 40}, {20, 30}})));
  CHECK_FALSE(is_valid_digraph(Digraph({10, 20, 30, 40}, {{10, 30}, {20, 40}})));
  std::vector<int> nodes;
  std::vector<std::pair<int, int>> arrows;
  for (int v : worked_example().nodes) nodes.push_back(7 * v + 100);
  for (auto [t, h] : worked_example().arrows)
    arrows.emplace_back(7 * t + 100, 7 * h + 100);
  CHECK(is_valid_digraph(Digraph(nodes, arrows)));
}

TEST_CASE("cross-module agreement on which arrow sets are valid") {
  const int n = 3;
  const auto arrows = all_arrows(n);
  const size_t total = size_t{1} << arrows.size();
  std::vector<int> nodes{1, 2, 3, 4};
  for (size_t mask = 0; mask < total; ++mask) {
    ArrowSet face;
    std::vector<std::pair<int, int>> pairs;
    for (size_t i = 0; i < arrows.size(); ++i)
      if (mask & (size_t{1} << i)) {
        face.push_back(arrows[i]);
        pairs.emplace_back(arrows[i].tail, arrows[i].head);
      }
    CHECK(is_face(face) == is_valid_digraph(Digraph(nodes, pairs)));
  }
}

TEST_CASE("word utilities") {
  CHECK(word_length("UHD") == 4);
  CHECK(word_length("") == 0);
  CHECK(word_length("HH") == 4);
  CHECK_THROWS_AS(word_length("UXD"), std::invalid_argument);
  CHECK_THROWS_AS(word_length("uhd"), std::invalid_argument);

  CHECK(is_balanced_word("DU"));
  CHECK(is_balanced_word("H"));
  CHECK_FALSE(is_balanced_word("UUD"));
  CHECK(is_schroeder_word("UHD"));
  CHECK(is_schroeder_word(""));
  CHECK_FALSE(is_schroeder_word("DU"));
  CHECK_FALSE(is_schroeder_word("UDDU"));
}

TEST_CASE("balanced word enumeration") {
  CHECK(all_balanced_words(0) == std::vector<std::string>{""});
  CHECK(all_balanced_words(1) == std::vector<std::string>{"DU", "H", "UD"});
  CHECK(all_balanced_words(2).size() == 13);
  CHECK(all_balanced_words(3).size() == 63);
  const auto words = all_balanced_words(3);
  CHECK(std::is_sorted(words.begin(), words.end()));
  std::map<size_t, long long> by_rises;
  for (const std::string& w : words) {
    CHECK(is_balanced_word(w));
    CHECK(word_length(w) == 6);
    by_rises[static_cast<size_t>(std::count(w.begin(), w.end(), 'U'))]++;
  }
  // Words with k rises: C(n+k,k) C(n,k).
  CHECK(by_rises[0] == 1);
  CHECK(by_rises[1] == 12);
  CHECK(by_rises[2] == 30);
  CHECK(by_rises[3] == 20);
}

TEST_CASE("path counting formulas") {
  CHECK(count_paths(3, 2) == 30);
  CHECK(count_paths(3) == 63);
  CHECK(count_paths(7, 0) == 1);
  CHECK(count_paths(0) == 1);
  CHECK(count_paths(1) == 3);
  CHECK(count_paths(2) == 13);
  CHECK(count_paths(4) == 321);
  CHECK(count_paths(5) == 1683);
  CHECK_THROWS_AS(count_paths(-1), std::domain_error);
  CHECK_THROWS_AS(count_paths(3, 4), std::domain_error);
}

TEST_CASE("recursive encoding of backward-only digraphs") {
  CHECK(sp(Digraph({1, 2, 3}, {{3, 1}})) == "UHD");
  CHECK(sp(Digraph({1}, {})) == "");
  CHECK(sp(Digraph({1, 2, 3, 4}, {})) == "HHH");
  CHECK(sp(Digraph({2, 5, 9}, {{9, 2}})) == "UHD");
  CHECK_THROWS_AS(sp(Digraph({1, 2}, {{1, 2}})), std::domain_error);
  // Crossing backward arrows are not a valid digraph.
  CHECK_THROWS_AS(sp(Digraph({1, 2, 3, 4}, {{3, 1}, {4, 2}})),
                  std::invalid_argument);

  // sp is a bijection from backward-only valid digraphs on {1..n+1} onto
  // Schroeder words of length 2n.
  for (int n = 1; n <= 4; ++n) {
    std::set<std::string> words;
    long long backward_only = 0;
    for (const Digraph& g : valid_digraphs(n)) {
      bool all_backward = true;
      for (auto [t, h] : g.arrows) all_backward = all_backward && t > h;
      if (!all_backward) continue;
      ++backward_only;
      const std::string w = sp(g);
      CHECK(is_schroeder_word(w));
      CHECK(word_length(w) == 2 * n);
      CHECK(sp_inverse(w, g.nodes) == g);
      words.insert(w);
    }
    CHECK(static_cast<long long>(words.size()) == backward_only);
    // Completeness: every Schroeder word decodes.
    long long schroeder = 0;
    for (const std::string& w : all_balanced_words(n))
      if (is_schroeder_word(w)) {
        ++schroeder;
        std::vector<int> nodes(static_cast<size_t>(n) + 1);
        for (int i = 0; i <= n; ++i) nodes[static_cast<size_t>(i)] = i + 1;
        const Digraph g = sp_inverse(w, nodes);
        CHECK(sp(g) == w);
      }
    CHECK(schroeder == static_cast<long long>(words.size()));
  }

  CHECK_THROWS_AS(sp_inverse("DU", {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(sp_inverse("UD", {1, 2, 3}), std::invalid_argument);
}

TEST_CASE("twisting away the least node") {
  const Digraph g({1, 2, 3, 4, 5}, {{1, 5}, {1, 4}, {3, 2}});
  const Digraph twisted({2, 3, 4, 5}, {{3, 2}, {5, 4}});
  CHECK(tw(g) == twisted);
  CHECK(tw_inverse(twisted, 1) == g);
  CHECK(tw(Digraph({1, 2}, {{1, 2}})) == Digraph({2}, {}));

  // Twisting needs the full-span forward arrow.
  CHECK_THROWS_AS(tw(Digraph({1, 2, 3}, {{1, 2}})), std::domain_error);
  CHECK_THROWS_AS(tw_inverse(Digraph({2, 3}, {}), 5), std::domain_error);

  // Arrows into the removed maximum that do not leave the least node are
  // preserved verbatim, not dropped.
  const Digraph small({2, 3}, {{2, 3}});
  CHECK(tw_inverse(small, 1) == Digraph({1, 2, 3}, {{1, 3}, {2, 3}}));
  CHECK(tw(Digraph({1, 2, 3}, {{1, 3}, {2, 3}})) == small);

  // tw and tw_inverse are mutually inverse wherever defined.
  for (int n = 1; n <= 4; ++n)
    for (const Digraph& g2 : valid_digraphs(n)) {
      const bool twistable =
          std::find(g2.arrows.begin(), g2.arrows.end(),
                    std::make_pair(g2.min_node(), g2.max_node())) !=
          g2.arrows.end();
      if (!twistable) continue;
      const Digraph t = tw(g2);
      CHECK(is_valid_digraph(t));
      CHECK(tw_inverse(t, g2.min_node()) == g2);
    }
}

TEST_CASE("full encoding on chevrons and the worked example") {
  CHECK(dp(Digraph({1, 2}, {{1, 2}})) == "DU");
  CHECK(dp(Digraph({1, 2}, {{2, 1}})) == "UD");
  CHECK(dp(Digraph({1, 2}, {})) == "H");
  CHECK(dp_inverse("DU", {1, 2}) == Digraph({1, 2}, {{1, 2}}));
  CHECK(dp_inverse("UD", {1, 2}) == Digraph({1, 2}, {{2, 1}}));

  CHECK(dp(worked_example()) == "UHDDDUDUDUHUDUUDUD");
  CHECK(dp_inverse("UHDDDUDUDUHUDUUDUD", worked_example().nodes) ==
        worked_example());

  // The encoding only depends on relative node order.
  std::vector<int> nodes;
  std::vector<std::pair<int, int>> arrows;
  for (int v : worked_example().nodes) nodes.push_back(3 * v);
  for (auto [t, h] : worked_example().arrows) arrows.emplace_back(3 * t, 3 * h);
  CHECK(dp(Digraph(nodes, arrows)) == "UHDDDUDUDUHUDUUDUD");
}

TEST_CASE("encoding errors") {
  CHECK_THROWS_AS(dp_inverse("UUD", {1, 2}), std::invalid_argument);
  CHECK_THROWS_AS(dp_inverse("UD", {1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(dp_inverse("UQ", {1, 2}), std::invalid_argument);
}

TEST_CASE("encoding is a bijection onto balanced words") {
  for (int n = 1; n <= 4; ++n) {
    std::set<std::string> seen;
    const auto digraphs = valid_digraphs(n);
    for (const Digraph& g : digraphs) {
      const std::string w = dp(g);
      CHECK(is_balanced_word(w));
      CHECK(word_length(w) == 2 * n);
      CHECK(dp_inverse(w, g.nodes) == g);
      seen.insert(w);
    }
    CHECK(seen.size() == digraphs.size());
    const auto words = all_balanced_words(n);
    CHECK(seen == std::set<std::string>(words.begin(), words.end()));
    for (const std::string& w : words) {
      std::vector<int> nodes(static_cast<size_t>(n) + 1);
      for (int i = 0; i <= n; ++i) nodes[static_cast<size_t>(i)] = i + 1;
      CHECK(dp(dp_inverse(w, nodes)) == w);
    }
  }
}

TEST_CASE("indexed letters sort by index with falls before rises") {
  CHECK(IndexedLetter{'D', 1} < IndexedLetter{'U', 1});
  CHECK(IndexedLetter{'U', 1} < IndexedLetter{'H', 1});
  CHECK(IndexedLetter{'H', 1} < IndexedLetter{'D', 2});
  CHECK_FALSE(IndexedLetter{'D', 2} < IndexedLetter{'H', 1});
}

TEST_CASE("non-recursive construction of the encoding") {
  const std::vector<std::pair<int, int>> folded{{3, 1},  {6, 5}, {7, 5},
                                                {9, 8},  {10, 9}, {11, 9}};
  CHECK(fold_forward_arrows(worked_example()) == folded);

  const std::vector<IndexedLetter> expected{
      {'U', 1}, {'H', 2}, {'D', 3}, {'D', 3}, {'D', 4}, {'U', 5},
      {'D', 6}, {'U', 6}, {'D', 7}, {'U', 7}, {'H', 7}, {'U', 8},
      {'D', 9}, {'U', 9}, {'U', 9}, {'D', 10}, {'U', 10}, {'D', 11}};
  CHECK(multiset_of_digraph(worked_example()) == expected);
  CHECK(word_of_multiset(expected) == "UHDDDUDUDUHUDUUDUD");

  CHECK(multiset_of_digraph(Digraph({1, 2, 3, 4}, {})) ==
        std::vector<IndexedLetter>{{'H', 1}, {'H', 2}, {'H', 3}});

  CHECK_THROWS_AS(word_of_multiset({{'X', 1}}), std::invalid_argument);
  CHECK_THROWS_AS(word_of_multiset({{'U', 0}}), std::invalid_argument);

  // Agreement with the recursive definition on every valid digraph.
  for (int n = 1; n <= 4; ++n)
    for (const Digraph& g : valid_digraphs(n))
      CHECK(word_of_multiset(multiset_of_digraph(g)) == dp(g));
}
