#include "legtri/pulling.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace legtri {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

int arrow_id(int n, const Arrow& a) { return (a.tail - 1) * (n + 1) + a.head - 1; }

Arrow arrow_from_id(int n, int id) {
  return Arrow(n, id / (n + 1) + 1, id % (n + 1) + 1);
}

// A face (I, J) of P_n as node bitmasks (bit v-1 stands for node v).
struct MaskFace {
  unsigned I = 0;
  unsigned J = 0;

  bool operator==(const MaskFace&) const = default;
  int dim() const { return std::popcount(I) + std::popcount(J) - 2; }
  bool contains(const MaskFace& o) const {
    return (o.I & ~I) == 0 && (o.J & ~J) == 0;
  }
};

using Simplex = std::vector<int>;  // sorted arrow ids

// Drops every simplex that is a subset of another; also dedupes.
std::vector<Simplex> prune_dominated(std::set<Simplex> in) {
  std::vector<Simplex> items(in.begin(), in.end());
  std::stable_sort(items.begin(), items.end(),
                   [](const Simplex& a, const Simplex& b) {
                     return a.size() > b.size();
                   });
  std::vector<Simplex> kept;
  for (const Simplex& s : items) {
    bool dominated = false;
    for (const Simplex& k : kept)
      if (k.size() > s.size() &&
          std::includes(k.begin(), k.end(), s.begin(), s.end())) {
        dominated = true;
        break;
      }
    if (!dominated) kept.push_back(s);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

class PullEngine {
 public:
  PullEngine(int n, const PullOrder& order) : n_(n) {
    rank_.resize((n + 1) * (n + 1), -1);
    for (const Arrow& a : order.sequence())
      rank_[arrow_id(n, a)] = order.rank(a);
  }

  // Pulling triangulation of the complex of all faces of one face.
  const std::vector<Simplex>& tri_face(const MaskFace& f) {
    const std::uint64_t key =
        (static_cast<std::uint64_t>(f.I) << 32) | f.J;
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    std::vector<Simplex> result;
    if (f.dim() == 0) {
      result.push_back({face_vertex_ids(f).front()});
    } else {
      const int v = least_vertex_of({f});
      std::set<Simplex> acc;
      for (const MaskFace& sub : shrink(f, v))
        for (const Simplex& g : tri_face(sub)) cone(acc, v, g);
      for (const Simplex& s : delta(shrink(f, v))) acc.insert(s);
      result = prune_dominated(std::move(acc));
    }
    return memo_.emplace(key, std::move(result)).first->second;
  }

  // Pulling triangulation of a complex given by its maximal faces.
  std::vector<Simplex> delta(const std::vector<MaskFace>& complex) {
    std::vector<int> vertices;
    for (const MaskFace& f : complex)
      for (int id : face_vertex_ids(f)) vertices.push_back(id);
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()),
                   vertices.end());
    if (vertices.size() == 1) return {{vertices.front()}};

    const int v = *std::min_element(
        vertices.begin(), vertices.end(),
        [&](int a, int b) { return rank_[a] < rank_[b]; });
    const MaskFace vf = vertex_face(v);

    std::set<Simplex> acc;
    std::vector<MaskFace> rest;
    for (const MaskFace& f : complex) {
      if (!f.contains(vf)) {
        rest.push_back(f);
        continue;
      }
      if (f.dim() == 0) {
        acc.insert({v});
        continue;
      }
      for (const MaskFace& sub : shrink(f, v)) {
        for (const Simplex& g : tri_face(sub)) cone(acc, v, g);
        rest.push_back(sub);
      }
    }
    for (const Simplex& s : delta_of_antichain(std::move(rest)))
      acc.insert(s);
    return prune_dominated(std::move(acc));
  }

 private:
  // The <=2 facets of f that avoid the vertex v (arrow id).
  std::vector<MaskFace> shrink(const MaskFace& f, int v) const {
    const MaskFace vf = vertex_face(v);
    std::vector<MaskFace> out;
    if (std::popcount(f.I) >= 2) out.push_back({f.I & ~vf.I, f.J});
    if (std::popcount(f.J) >= 2) out.push_back({f.I, f.J & ~vf.J});
    return out;
  }

  std::vector<Simplex> delta_of_antichain(std::vector<MaskFace> faces) {
    // Keep only maximal faces; then recurse.
    std::sort(faces.begin(), faces.end(), [](const MaskFace& a, const MaskFace& b) {
      return a.dim() > b.dim();
    });
    std::vector<MaskFace> maximal;
    for (const MaskFace& f : faces) {
      bool inside = false;
      for (const MaskFace& m : maximal)
        if (m.contains(f)) {
          inside = true;
          break;
        }
      if (!inside) maximal.push_back(f);
    }
    if (maximal.empty()) return {};
    return delta(maximal);
  }

  MaskFace vertex_face(int id) const {
    const Arrow a = arrow_from_id(n_, id);
    return MaskFace{1u << (a.tail - 1), 1u << (a.head - 1)};
  }

  std::vector<int> face_vertex_ids(const MaskFace& f) const {
    std::vector<int> out;
    for (int t = 1; t <= n_ + 1; ++t) {
      if (!((f.I >> (t - 1)) & 1u)) continue;
      for (int h = 1; h <= n_ + 1; ++h)
        if ((f.J >> (h - 1)) & 1u)
          out.push_back((t - 1) * (n_ + 1) + h - 1);
    }
    return out;
  }

  int least_vertex_of(const std::vector<MaskFace>& faces) const {
    int best = -1;
    for (const MaskFace& f : faces)
      for (int id : face_vertex_ids(f))
        if (best < 0 || rank_[id] < rank_[best]) best = id;
    return best;
  }

  static void cone(std::set<Simplex>& acc, int v, const Simplex& g) {
    Simplex s = g;
    s.insert(std::lower_bound(s.begin(), s.end(), v), v);
    acc.insert(std::move(s));
  }

  int n_;
  std::vector<int> rank_;
  std::unordered_map<std::uint64_t, std::vector<Simplex>> memo_;
};

}  // namespace

PullOrder::PullOrder(int n, std::vector<Arrow> sequence)
    : n_(n), seq_(std::move(sequence)) {
  require(n >= 1, "PullOrder: n must be positive");
  require(seq_.size() == static_cast<size_t>(n) * (n + 1),
          "PullOrder: sequence must list all n(n+1) arrows");
  rank_.assign((n + 1) * (n + 1), -1);
  for (size_t r = 0; r < seq_.size(); ++r) {
    const Arrow& a = seq_[r];
    require(a.n == n, "PullOrder: arrow with mismatched n");
    const int id = arrow_id(n, a);
    require(rank_[id] < 0, "PullOrder: repeated arrow");
    rank_[id] = static_cast<int>(r);
  }
}

int PullOrder::rank(const Arrow& a) const {
  if (a.n != n_) throw std::domain_error("PullOrder::rank: mismatched n");
  return rank_[arrow_id(n_, a)];
}

namespace {

int span_length(const Arrow& a) { return a.span_hi() - a.span_lo(); }

std::vector<Arrow> direction_class(int n, bool backward) {
  std::vector<Arrow> out;
  for (const Arrow& a : all_arrows(n))
    if (a.backward() == backward) out.push_back(a);
  return out;
}

}  // namespace

PullOrder make_order(int n, OrderScheme scheme) {
  require(n >= 1, "make_order: n must be positive");
  std::vector<Arrow> seq;
  switch (scheme) {
    case OrderScheme::Lex:
      seq = all_arrows(n);
      break;
    case OrderScheme::SimionCanonical:
      for (bool backward : {true, false}) {
        std::vector<Arrow> part = direction_class(n, backward);
        std::sort(part.begin(), part.end(), [](const Arrow& a, const Arrow& b) {
          if (span_length(a) != span_length(b))
            return span_length(a) < span_length(b);
          return a < b;
        });
        seq.insert(seq.end(), part.begin(), part.end());
      }
      break;
    case OrderScheme::RevlexBackwardFirst:
      for (bool backward : {true, false}) {
        std::vector<Arrow> part = direction_class(n, backward);
        std::sort(part.begin(), part.end(), [](const Arrow& a, const Arrow& b) {
          if (a.head != b.head) return a.head < b.head;
          return a.tail < b.tail;
        });
        seq.insert(seq.end(), part.begin(), part.end());
      }
      break;
  }
  return PullOrder(n, std::move(seq));
}

PullOrder make_order(int n, const std::vector<Arrow>& explicit_sequence) {
  return PullOrder(n, explicit_sequence);
}

PullOrder random_order(int n, std::uint64_t seed) {
  std::vector<Arrow> seq = all_arrows(n);
  std::mt19937_64 gen(seed);
  for (size_t i = seq.size(); i > 1; --i)
    std::swap(seq[i - 1], seq[gen() % i]);
  return PullOrder(n, std::move(seq));
}

PullOrder random_simion_order(int n, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::vector<Arrow> seq;
  for (bool backward : {true, false}) {
    std::vector<Arrow> remaining = direction_class(n, backward);
    // Repeatedly emit a uniformly random remaining arrow whose span contains
    // no other remaining arrow's span.
    while (!remaining.empty()) {
      std::vector<size_t> minimal;
      for (size_t i = 0; i < remaining.size(); ++i) {
        bool is_min = true;
        for (size_t j = 0; j < remaining.size() && is_min; ++j)
          if (j != i && remaining[j].span_lo() >= remaining[i].span_lo() &&
              remaining[j].span_hi() <= remaining[i].span_hi())
            is_min = false;
        if (is_min) minimal.push_back(i);
      }
      const size_t pick = minimal[gen() % minimal.size()];
      seq.push_back(remaining[pick]);
      remaining.erase(remaining.begin() + pick);
    }
  }
  return PullOrder(n, std::move(seq));
}

bool is_valid_simion_order(const PullOrder& order) {
  const std::vector<Arrow>& seq = order.sequence();
  for (const Arrow& a : seq)
    for (const Arrow& b : seq) {
      if (a == b) continue;
      if (a.backward() && b.forward() && order.rank(a) > order.rank(b))
        return false;
      if (a.backward() == b.backward() && a.span_lo() >= b.span_lo() &&
          a.span_hi() <= b.span_hi() && order.rank(a) > order.rank(b))
        return false;
    }
  return true;
}

SimplicialComplex pull_triangulate(int n, const PullOrder& order) {
  require(n >= 1, "pull_triangulate: n must be positive");
  require(order.n() == n, "pull_triangulate: order built for a different n");

  PullEngine engine(n, order);
  const unsigned full = (1u << (n + 1)) - 1u;
  std::vector<MaskFace> boundary;
  for (unsigned mi = 1; mi < full; ++mi)
    boundary.push_back(MaskFace{mi, full & ~mi});

  std::vector<std::vector<Arrow>> facets;
  for (const Simplex& s : engine.delta(boundary)) {
    std::vector<Arrow> facet;
    facet.reserve(s.size());
    for (int id : s) facet.push_back(arrow_from_id(n, id));
    facets.push_back(std::move(facet));
  }
  std::sort(facets.begin(), facets.end());
  return SimplicialComplex{n, std::move(facets)};
}

std::vector<std::vector<Arrow>> all_faces(const SimplicialComplex& c) {
  std::set<std::vector<Arrow>> faces;
  for (const std::vector<Arrow>& facet : c.facets) {
    const size_t sz = facet.size();
    for (unsigned mask = 1; mask < (1u << sz); ++mask) {
      std::vector<Arrow> f;
      for (size_t k = 0; k < sz; ++k)
        if ((mask >> k) & 1u) f.push_back(facet[k]);
      faces.insert(std::move(f));
    }
  }
  return std::vector<std::vector<Arrow>>(faces.begin(), faces.end());
}

std::vector<long long> face_counts(const SimplicialComplex& c) {
  size_t maxsize = 0;
  for (const auto& f : c.facets) maxsize = std::max(maxsize, f.size());
  std::vector<long long> counts(maxsize + 1, 0);
  counts[0] = 1;
  for (const std::vector<Arrow>& f : all_faces(c)) ++counts[f.size()];
  return counts;
}

std::vector<std::vector<Arrow>> minimal_nonfaces(const SimplicialComplex& c) {
  const std::vector<std::vector<Arrow>> closure = all_faces(c);
  std::set<std::vector<Arrow>> faces(closure.begin(), closure.end());
  faces.insert({});

  std::vector<Arrow> ground;
  for (const auto& f : c.facets) ground.insert(ground.end(), f.begin(), f.end());
  std::sort(ground.begin(), ground.end());
  ground.erase(std::unique(ground.begin(), ground.end()), ground.end());

  size_t maxsize = 0;
  for (const auto& f : c.facets) maxsize = std::max(maxsize, f.size());

  std::set<std::vector<Arrow>> out;
  // A minimal non-face S has every proper subset a face; in particular
  // S minus its largest vertex is a face, so extending faces by a larger
  // vertex visits every candidate.
  for (const std::vector<Arrow>& f : faces) {
    if (f.size() > maxsize) continue;
    for (const Arrow& v : ground) {
      if (!f.empty() && !(f.back() < v)) continue;
      std::vector<Arrow> s = f;
      s.push_back(v);
      if (faces.count(s)) continue;
      bool all_subsets_faces = true;
      for (size_t drop = 0; drop + 1 < s.size() && all_subsets_faces; ++drop) {
        std::vector<Arrow> sub = s;
        sub.erase(sub.begin() + drop);
        if (!faces.count(sub)) all_subsets_faces = false;
      }
      if (all_subsets_faces) out.insert(std::move(s));
    }
  }
  return std::vector<std::vector<Arrow>>(out.begin(), out.end());
}

std::pair<Arrow, Arrow> square_diagonal(int x1, int x2, int y1, int y2,
                                        const PullOrder& order) {
  const int n = order.n();
  require(x1 != x2 && y1 != y2, "square_diagonal: nodes must be distinct");
  std::vector<int> nodes{x1, x2, y1, y2};
  std::sort(nodes.begin(), nodes.end());
  require(std::adjacent_find(nodes.begin(), nodes.end()) == nodes.end(),
          "square_diagonal: nodes must be distinct");
  const Arrow a11(n, x1, y1), a12(n, x1, y2), a21(n, x2, y1), a22(n, x2, y2);
  const Arrow* least = &a11;
  for (const Arrow* cand : {&a12, &a21, &a22})
    if (order.rank(*cand) < order.rank(*least)) least = cand;
  if (least == &a11 || least == &a22)
    return {std::min(a11, a22), std::max(a11, a22)};
  return {std::min(a12, a21), std::max(a12, a21)};
}

}  // namespace legtri
