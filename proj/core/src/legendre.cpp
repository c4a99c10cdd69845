#include "legtri/legendre.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <string>

namespace legtri {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

std::vector<int> mask_to_nodes(unsigned mask) {
  std::vector<int> out;
  for (int v = 1; mask != 0; ++v, mask >>= 1)
    if (mask & 1u) out.push_back(v);
  return out;
}

// Exact determinant of a small integer matrix (Bareiss fraction-free
// elimination; all divisions below are exact).
long long int_det(std::vector<std::vector<long long>> m) {
  const int sz = static_cast<int>(m.size());
  if (sz == 0) return 1;
  long long sign = 1;
  long long prev = 1;
  for (int k = 0; k + 1 < sz; ++k) {
    if (m[k][k] == 0) {
      int pivot = -1;
      for (int r = k + 1; r < sz; ++r)
        if (m[r][k] != 0) {
          pivot = r;
          break;
        }
      if (pivot < 0) return 0;
      std::swap(m[k], m[pivot]);
      sign = -sign;
    }
    for (int i = k + 1; i < sz; ++i)
      for (int j = k + 1; j < sz; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[sz - 1][sz - 1];
}

}  // namespace

LatticeFace::LatticeFace(int n_, std::vector<int> I_, std::vector<int> J_)
    : n(n_), I(std::move(I_)), J(std::move(J_)) {
  require(n >= 1, "LatticeFace: n must be positive");
  require(!I.empty() && !J.empty(), "LatticeFace: I and J must be nonempty");
  std::sort(I.begin(), I.end());
  std::sort(J.begin(), J.end());
  require(std::adjacent_find(I.begin(), I.end()) == I.end() &&
              std::adjacent_find(J.begin(), J.end()) == J.end(),
          "LatticeFace: repeated node");
  require(I.front() >= 1 && I.back() <= n + 1 && J.front() >= 1 &&
              J.back() <= n + 1,
          "LatticeFace: node out of range 1..n+1");
  std::vector<int> common;
  std::set_intersection(I.begin(), I.end(), J.begin(), J.end(),
                        std::back_inserter(common));
  require(common.empty(), "LatticeFace: I and J must be disjoint");
}

bool LatticeFace::contains_arrow(const Arrow& a) const {
  return a.n == n && std::binary_search(I.begin(), I.end(), a.tail) &&
         std::binary_search(J.begin(), J.end(), a.head);
}

bool LatticeFace::contains_face(const LatticeFace& other) const {
  return n == other.n &&
         std::includes(I.begin(), I.end(), other.I.begin(), other.I.end()) &&
         std::includes(J.begin(), J.end(), other.J.begin(), other.J.end());
}

std::vector<Arrow> LatticeFace::vertex_arrows() const {
  std::vector<Arrow> out;
  out.reserve(I.size() * J.size());
  for (int t : I)
    for (int h : J) out.emplace_back(n, t, h);
  std::sort(out.begin(), out.end());
  return out;
}

IntegerVector vertex_coordinates(const Arrow& a) {
  IntegerVector x(a.n + 1, 0);
  x[a.head - 1] = 1;
  x[a.tail - 1] = -1;
  return x;
}

std::vector<LatticeFace> enumerate_lattice_faces(int n, std::optional<int> dim,
                                         bool unsafe_scale) {
  require(n >= 1, "enumerate_lattice_faces: n must be positive");
  if (dim && (*dim < 0 || *dim > n - 1))
    throw std::domain_error("enumerate_lattice_faces: dim outside 0..n-1");
  if (n > 7 && !unsafe_scale)
    throw UnsupportedScaleError(
        "enumerate_lattice_faces: guarded at n <= 7; pass unsafe_scale to override");
  const unsigned full = (1u << (n + 1)) - 1u;
  std::vector<LatticeFace> out;
  for (unsigned mi = 1; mi <= full; ++mi) {
    const unsigned rest = full & ~mi;
    // Nonempty submasks of the complement, descending.
    for (unsigned mj = rest; mj != 0; mj = (mj - 1) & rest) {
      if (dim && std::popcount(mi) + std::popcount(mj) != *dim + 2) continue;
      out.emplace_back(n, mask_to_nodes(mi), mask_to_nodes(mj));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticeFace> face_facets(const LatticeFace& f) {
  if (f.dim() == 0)
    throw std::domain_error("face_facets: a vertex has no proper faces");
  std::vector<LatticeFace> out;
  if (f.I.size() >= 2) {
    for (size_t k = 0; k < f.I.size(); ++k) {
      std::vector<int> I2 = f.I;
      I2.erase(I2.begin() + k);
      out.emplace_back(f.n, std::move(I2), f.J);
    }
  }
  if (f.J.size() >= 2) {
    for (size_t k = 0; k < f.J.size(); ++k) {
      std::vector<int> J2 = f.J;
      J2.erase(J2.begin() + k);
      out.emplace_back(f.n, f.I, std::move(J2));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LatticeFace> maximal_faces_containing(const Arrow& a) {
  const int n = a.n;
  std::vector<int> others;
  for (int v = 1; v <= n + 1; ++v)
    if (v != a.tail && v != a.head) others.push_back(v);
  std::vector<LatticeFace> out;
  const unsigned count = 1u << others.size();
  for (unsigned mask = 0; mask < count; ++mask) {
    std::vector<int> I{a.tail}, J{a.head};
    for (size_t k = 0; k < others.size(); ++k)
      ((mask >> k) & 1u ? J : I).push_back(others[k]);
    out.emplace_back(n, std::move(I), std::move(J));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_simplex_set(const std::vector<Arrow>& s) {
  if (s.empty()) return true;
  const int n = s.front().n;
  for (const Arrow& a : s)
    require(a.n == n, "is_simplex_set: mixed ambient n");
  // Union-find; an arrow joining two already-connected nodes closes a cycle.
  std::vector<int> parent(n + 2);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Arrow& a : s) {
    const int rt = find(a.tail), rh = find(a.head);
    if (rt == rh) return false;
    parent[rt] = rh;
  }
  return true;
}

long long simplex_normalized_volume(const std::vector<IntegerVector>& points) {
  if (points.empty())
    throw std::domain_error("simplex_normalized_volume: no points");
  const size_t width = points.front().size();
  if (width < 2 || points.size() != width)
    throw std::domain_error(
        "simplex_normalized_volume: need exactly n+1 points of length n+1");
  for (const IntegerVector& p : points) {
    if (p.size() != width)
      throw std::domain_error("simplex_normalized_volume: ragged point set");
    if (std::accumulate(p.begin(), p.end(), 0LL) != 0)
      throw std::domain_error(
          "simplex_normalized_volume: point off the zero-sum hyperplane");
  }
  // Difference vectors from the first point, rewritten in the lattice basis
  // f_i = e_i - e_{i+1}; the basis coordinates are the partial sums.
  const size_t sz = width - 1;
  std::vector<std::vector<long long>> m(sz, std::vector<long long>(sz));
  for (size_t k = 0; k < sz; ++k) {
    long long acc = 0;
    for (size_t j = 0; j < sz; ++j) {
      acc += points[k + 1][j] - points[0][j];
      m[k][j] = acc;
    }
  }
  return std::llabs(int_det(std::move(m)));
}

namespace {

// Visits all size-k index subsets of 0..total-1.
template <typename F>
void for_each_combination(int total, int k, F&& visit) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    visit(idx);
    int pos = k - 1;
    while (pos >= 0 && idx[pos] == total - k + pos) --pos;
    if (pos < 0) return;
    ++idx[pos];
    for (int q = pos + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
  }
}

}  // namespace

bool incidence_is_totally_unimodular(int n, bool unsafe_scale) {
  require(n >= 1, "incidence_is_totally_unimodular: n must be positive");
  if (n > 3 && !unsafe_scale)
    throw UnsupportedScaleError(
        "incidence_is_totally_unimodular: guarded at n <= 3; pass "
        "unsafe_scale to override");
  const std::vector<Arrow> arrows = all_arrows(n);
  const int rows = n + 1;
  const int cols = static_cast<int>(arrows.size());
  std::vector<IntegerVector> column(cols);
  for (int c = 0; c < cols; ++c) column[c] = vertex_coordinates(arrows[c]);

  bool ok = true;
  for (int k = 1; k <= rows && ok; ++k) {
    for_each_combination(rows, k, [&](const std::vector<int>& ri) {
      if (!ok) return;
      for_each_combination(cols, k, [&](const std::vector<int>& ci) {
        if (!ok) return;
        std::vector<std::vector<long long>> m(k, std::vector<long long>(k));
        for (int r = 0; r < k; ++r)
          for (int c = 0; c < k; ++c) m[r][c] = column[ci[c]][ri[r]];
        const long long d = int_det(std::move(m));
        if (d < -1 || d > 1) ok = false;
      });
    });
  }
  return ok;
}

}  // namespace legtri
