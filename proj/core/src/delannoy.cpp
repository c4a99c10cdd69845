#include "legtri/delannoy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

#include "legtri/arrows.hpp"
#include "legtri/errors.hpp"
#include "legtri/numbers.hpp"

namespace legtri {

namespace {

using ArrowPair = std::pair<int, int>;
using ArrowPairs = std::vector<ArrowPair>;

// Arrows with both endpoints satisfying the predicate.
template <typename Pred>
ArrowPairs restrict_arrows(const ArrowPairs& arrows, Pred keep) {
  ArrowPairs out;
  for (const ArrowPair& a : arrows)
    if (keep(a.first) && keep(a.second)) out.push_back(a);
  return out;
}

template <typename Pred>
std::vector<int> restrict_nodes(const std::vector<int>& nodes, Pred keep) {
  std::vector<int> out;
  for (int v : nodes)
    if (keep(v)) out.push_back(v);
  return out;
}

int letter_height(char c) { return c == 'U' ? 1 : c == 'D' ? -1 : 0; }

// sp recursion on an already-validated backward-only digraph.
std::string sp_impl(const std::vector<int>& nodes, const ArrowPairs& arrows) {
  if (nodes.size() == 1) return "";
  const int v = nodes.front();
  int w = 0;
  for (const ArrowPair& a : arrows)
    if (a.second == v && (w == 0 || a.first < w)) w = a.first;
  if (w == 0) {
    // v is isolated: a backward arrow cannot have the least node as a tail.
    const auto rest = [v](int u) { return u != v; };
    return "H" + sp_impl(restrict_nodes(nodes, rest),
                         restrict_arrows(arrows, rest));
  }
  const auto inside = [v, w](int u) { return v < u && u <= w; };
  const auto outside = [v, w](int u) { return u <= v || u > w; };
  return "U" + sp_impl(restrict_nodes(nodes, inside),
                       restrict_arrows(arrows, inside)) +
         "D" + sp_impl(restrict_nodes(nodes, outside),
                       restrict_arrows(arrows, outside));
}

// Splits a Schroeder word U beta D gamma at the D matching the leading U;
// returns the index of that D.
size_t matching_down(std::string_view word) {
  int height = 1;
  for (size_t i = 1; i < word.size(); ++i) {
    height += letter_height(word[i]);
    if (height == 0) return i;
  }
  throw std::invalid_argument("word: unmatched U");
}

ArrowPairs sp_inverse_impl(std::string_view word, const std::vector<int>& nodes) {
  if (word.empty()) return {};
  if (word.front() == 'H')
    return sp_inverse_impl(word.substr(1),
                           std::vector<int>(nodes.begin() + 1, nodes.end()));
  const size_t close = matching_down(word);
  const std::string_view beta = word.substr(1, close - 1);
  const std::string_view gamma = word.substr(close + 1);
  const int p = word_length(std::string(beta)) / 2;

  const std::vector<int> in(nodes.begin() + 1, nodes.begin() + p + 2);
  std::vector<int> out{nodes.front()};
  out.insert(out.end(), nodes.begin() + p + 2, nodes.end());

  ArrowPairs arrows = sp_inverse_impl(beta, in);
  const ArrowPairs rest = sp_inverse_impl(gamma, out);
  arrows.insert(arrows.end(), rest.begin(), rest.end());
  arrows.emplace_back(nodes[p + 1], nodes.front());
  return arrows;
}

std::string dp_impl(const Digraph& g);

// dp recursion step for a valid digraph with at least one forward arrow.
std::string dp_split(const Digraph& g) {
  // Forward spans weakly nest pairwise, so the longest one contains all.
  ArrowPair outer{0, 0};
  for (const ArrowPair& a : g.arrows)
    if (a.first < a.second &&
        a.second - a.first > outer.second - outer.first)
      outer = a;
  const int x = outer.first, y = outer.second;

  const auto left = [x](int u) { return u <= x; };
  const auto mid = [x, y](int u) { return x <= u && u <= y; };
  const auto right = [y](int u) { return u >= y; };

  const Digraph middle(restrict_nodes(g.nodes, mid),
                       restrict_arrows(g.arrows, mid));
  return sp_impl(restrict_nodes(g.nodes, left),
                 restrict_arrows(g.arrows, left)) +
         "D" + dp_impl(tw(middle)) + "U" +
         sp_impl(restrict_nodes(g.nodes, right),
                 restrict_arrows(g.arrows, right));
}

std::string dp_impl(const Digraph& g) {
  const bool any_forward =
      std::any_of(g.arrows.begin(), g.arrows.end(),
                  [](const ArrowPair& a) { return a.first < a.second; });
  return any_forward ? dp_split(g) : sp_impl(g.nodes, g.arrows);
}

ArrowPairs dp_inverse_impl(std::string_view word, const std::vector<int>& nodes);

// Balanced but non-Schroeder word: factor as beta D gamma U delta with beta,
// delta Schroeder and gamma balanced.
ArrowPairs dp_inverse_split(std::string_view word, const std::vector<int>& nodes) {
  size_t p1 = 0;
  for (int height = 0;; ++p1) {
    height += letter_height(word[p1]);
    if (height < 0) break;
  }
  size_t p2 = word.size();
  for (int height = 0; p2-- > 0;) {
    height += letter_height(word[p2]);
    if (height == 1) break;
  }

  const std::string_view beta = word.substr(0, p1);
  const std::string_view gamma = word.substr(p1 + 1, p2 - p1 - 1);
  const std::string_view delta = word.substr(p2 + 1);
  const int p = word_length(std::string(beta)) / 2;
  const int q = word_length(std::string(gamma)) / 2;

  const std::vector<int> left(nodes.begin(), nodes.begin() + p + 1);
  const std::vector<int> mid(nodes.begin() + p + 1, nodes.begin() + p + q + 2);
  const std::vector<int> right(nodes.begin() + p + q + 1, nodes.end());

  ArrowPairs arrows = sp_inverse_impl(beta, left);
  const Digraph middle =
      tw_inverse(Digraph(mid, dp_inverse_impl(gamma, mid)), nodes[p]);
  arrows.insert(arrows.end(), middle.arrows.begin(), middle.arrows.end());
  const ArrowPairs rest = sp_inverse_impl(delta, right);
  arrows.insert(arrows.end(), rest.begin(), rest.end());
  return arrows;
}

ArrowPairs dp_inverse_impl(std::string_view word, const std::vector<int>& nodes) {
  int height = 0;
  bool schroeder = true;
  for (char c : word) {
    height += letter_height(c);
    if (height < 0) schroeder = false;
  }
  return schroeder ? sp_inverse_impl(word, nodes)
                   : dp_inverse_split(word, nodes);
}

void require_valid(const Digraph& g, const std::string& who) {
  if (!is_valid_digraph(g))
    throw std::invalid_argument(who + ": invalid digraph");
}

}  // namespace

Digraph::Digraph(std::vector<int> nodes_in, ArrowPairs arrows_in)
    : nodes(std::move(nodes_in)), arrows(std::move(arrows_in)) {
  if (nodes.empty())
    throw std::invalid_argument("Digraph: node set must be nonempty");
  std::sort(nodes.begin(), nodes.end());
  if (nodes.front() < 1)
    throw std::invalid_argument("Digraph: nodes must be positive");
  if (std::adjacent_find(nodes.begin(), nodes.end()) != nodes.end())
    throw std::invalid_argument("Digraph: repeated node");
  std::sort(arrows.begin(), arrows.end());
  if (std::adjacent_find(arrows.begin(), arrows.end()) != arrows.end())
    throw std::invalid_argument("Digraph: repeated arrow");
  for (const ArrowPair& a : arrows) {
    if (a.first == a.second)
      throw std::invalid_argument("Digraph: arrow endpoints must differ");
    if (!std::binary_search(nodes.begin(), nodes.end(), a.first) ||
        !std::binary_search(nodes.begin(), nodes.end(), a.second))
      throw std::invalid_argument("Digraph: arrow endpoint is not a node");
  }
}

bool is_valid_digraph(const Digraph& g) {
  if (g.nodes.size() == 1) return g.arrows.empty();
  const int n = static_cast<int>(g.nodes.size()) - 1;
  std::map<int, int> position;
  for (size_t i = 0; i < g.nodes.size(); ++i)
    position[g.nodes[i]] = static_cast<int>(i) + 1;
  std::vector<Arrow> compressed;
  compressed.reserve(g.arrows.size());
  for (const ArrowPair& a : g.arrows)
    compressed.emplace_back(n, position[a.first], position[a.second]);
  for (size_t i = 0; i < compressed.size(); ++i)
    for (size_t j = i + 1; j < compressed.size(); ++j)
      if (!arrows_compatible(compressed[i], compressed[j])) return false;
  return true;
}

void validate_word(const std::string& word) {
  for (size_t i = 0; i < word.size(); ++i)
    if (word[i] != 'U' && word[i] != 'D' && word[i] != 'H')
      throw std::invalid_argument(
          "word: invalid character '" + std::string(1, word[i]) +
          "' at position " + std::to_string(i) + " (expected U, D, or H)");
}

int word_length(const std::string& word) {
  validate_word(word);
  int length = 0;
  for (char c : word) length += (c == 'H') ? 2 : 1;
  return length;
}

bool is_balanced_word(const std::string& word) {
  validate_word(word);
  return std::count(word.begin(), word.end(), 'U') ==
         std::count(word.begin(), word.end(), 'D');
}

bool is_schroeder_word(const std::string& word) {
  validate_word(word);
  int height = 0;
  for (char c : word) {
    height += letter_height(c);
    if (height < 0) return false;
  }
  return height == 0;
}

std::vector<std::string> all_balanced_words(int n) {
  if (n < 0) throw std::domain_error("all_balanced_words: n must be >= 0");
  std::vector<std::string> out;
  std::string word;
  const auto emit = [&](auto&& self, int remaining, int height) -> void {
    if (remaining < std::abs(height)) return;
    if (remaining == 0) {
      out.push_back(word);
      return;
    }
    for (char c : {'D', 'H', 'U'}) {
      const int cost = (c == 'H') ? 2 : 1;
      if (cost > remaining) continue;
      word.push_back(c);
      self(self, remaining - cost, height + letter_height(c));
      word.pop_back();
    }
  };
  emit(emit, 2 * n, 0);
  return out;
}

std::string sp(const Digraph& g) {
  for (const ArrowPair& a : g.arrows)
    if (a.first < a.second)
      throw std::domain_error("sp: forward arrow present");
  require_valid(g, "sp");
  return sp_impl(g.nodes, g.arrows);
}

Digraph sp_inverse(const std::string& word, const std::vector<int>& nodes) {
  const Digraph shell(nodes, {});
  if (!is_schroeder_word(word))
    throw std::invalid_argument("sp_inverse: not a Schroeder word");
  if (word_length(word) != 2 * (static_cast<int>(shell.nodes.size()) - 1))
    throw std::invalid_argument(
        "sp_inverse: word length " + std::to_string(word_length(word)) +
        " does not match " + std::to_string(shell.nodes.size()) + " nodes");
  return Digraph(shell.nodes, sp_inverse_impl(word, shell.nodes));
}

Digraph tw(const Digraph& g) {
  require_valid(g, "tw");
  const int v = g.min_node(), w = g.max_node();
  if (v == w ||
      !std::binary_search(g.arrows.begin(), g.arrows.end(), ArrowPair{v, w}))
    throw std::domain_error(
        "tw: the forward arrow from the least to the greatest node is "
        "required");
  std::vector<int> nodes(g.nodes.begin() + 1, g.nodes.end());
  ArrowPairs arrows;
  for (const ArrowPair& a : g.arrows) {
    if (a.first != v) {
      arrows.push_back(a);
    } else if (a.second != w) {
      arrows.emplace_back(w, a.second);
    }
  }
  return Digraph(std::move(nodes), std::move(arrows));
}

Digraph tw_inverse(const Digraph& g, int v) {
  require_valid(g, "tw_inverse");
  if (v < 1 || v >= g.min_node())
    throw std::domain_error("tw_inverse: v must lie below every node");
  const int w = g.max_node();
  std::vector<int> nodes{v};
  nodes.insert(nodes.end(), g.nodes.begin(), g.nodes.end());
  ArrowPairs arrows{{v, w}};
  for (const ArrowPair& a : g.arrows) {
    if (a.first == w)
      arrows.emplace_back(v, a.second);
    else
      arrows.push_back(a);
  }
  return Digraph(std::move(nodes), std::move(arrows));
}

std::string dp(const Digraph& g) {
  require_valid(g, "dp");
  return dp_impl(g);
}

Digraph dp_inverse(const std::string& word, const std::vector<int>& nodes) {
  const Digraph shell(nodes, {});
  if (!is_balanced_word(word))
    throw std::invalid_argument("dp_inverse: word is not balanced");
  if (word_length(word) != 2 * (static_cast<int>(shell.nodes.size()) - 1))
    throw std::invalid_argument(
        "dp_inverse: word length " + std::to_string(word_length(word)) +
        " does not match " + std::to_string(shell.nodes.size()) + " nodes");
  Digraph result(shell.nodes, dp_inverse_impl(word, shell.nodes));
  if (!is_valid_digraph(result))
    throw InvariantViolation("dp_inverse: decoded digraph is not valid");
  return result;
}

bool operator<(const IndexedLetter& a, const IndexedLetter& b) {
  const auto rank = [](char c) { return c == 'D' ? 0 : c == 'U' ? 1 : 2; };
  if (a.index != b.index) return a.index < b.index;
  return rank(a.letter) < rank(b.letter);
}

namespace {

// Folding pass shared by fold_forward_arrows and multiset_of_digraph:
// returns the all-backward arrow set, appending the D_x/U_w letters.
ArrowPairs fold_impl(const Digraph& g, std::vector<IndexedLetter>* letters) {
  std::map<int, std::vector<int>> heads_of;  // forward tail -> heads
  ArrowPairs folded;
  for (const ArrowPair& a : g.arrows) {
    if (a.first < a.second)
      heads_of[a.first].push_back(a.second);
    else
      folded.push_back(a);
  }
  for (const auto& [x, heads] : heads_of) {
    const int w = *std::max_element(heads.begin(), heads.end());
    if (letters) {
      letters->push_back({'D', x});
      letters->push_back({'U', w});
    }
    for (int z : heads)
      if (z != w) folded.emplace_back(w, z);
  }
  std::sort(folded.begin(), folded.end());
  return folded;
}

}  // namespace

std::vector<IndexedLetter> multiset_of_digraph(const Digraph& g) {
  require_valid(g, "multiset_of_digraph");
  std::vector<IndexedLetter> m;

  // Weak-component maxima, except the greatest node overall.
  std::map<int, int> parent;
  for (int v : g.nodes) parent[v] = v;
  const auto find = [&parent](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  for (const ArrowPair& a : g.arrows) parent[find(a.first)] = find(a.second);
  std::map<int, int> component_max;
  for (int v : g.nodes) {
    int& top = component_max[find(v)];
    top = std::max(top, v);
  }
  for (const auto& [root, top] : component_max)
    if (top != g.max_node()) m.push_back({'H', top});

  const ArrowPairs folded = fold_impl(g, &m);

  std::map<int, std::vector<int>> tails_of;  // backward head -> tails
  for (const ArrowPair& a : folded) tails_of[a.second].push_back(a.first);
  for (const auto& [y, tails] : tails_of) {
    m.push_back({'U', y});
    const int top = *std::max_element(tails.begin(), tails.end());
    for (int x : tails) {
      m.push_back({'D', x});
      if (x != top) m.push_back({'U', x});
    }
  }
  std::sort(m.begin(), m.end());
  return m;
}

ArrowPairs fold_forward_arrows(const Digraph& g) {
  require_valid(g, "fold_forward_arrows");
  return fold_impl(g, nullptr);
}

std::string word_of_multiset(std::vector<IndexedLetter> m) {
  for (const IndexedLetter& x : m) {
    if (x.letter != 'U' && x.letter != 'D' && x.letter != 'H')
      throw std::invalid_argument("word_of_multiset: invalid letter");
    if (x.index < 1)
      throw std::invalid_argument("word_of_multiset: index must be positive");
  }
  std::stable_sort(m.begin(), m.end());
  std::string word;
  word.reserve(m.size());
  for (const IndexedLetter& x : m) word.push_back(x.letter);
  return word;
}

BigInt count_paths(int n, int k) {
  if (n < 0) throw std::domain_error("count_paths: n must be >= 0");
  if (k < 0 || k > n) throw std::domain_error("count_paths: k out of range");
  return binomial(n + k, k) * binomial(n, k);
}

BigInt count_paths(int n) {
  if (n < 0) throw std::domain_error("count_paths: n must be >= 0");
  BigInt total = 0;
  for (int k = 0; k <= n; ++k) total += count_paths(n, k);
  return total;
}

}  // namespace legtri
