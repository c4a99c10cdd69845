#include "legtri/arrows.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace legtri {

namespace {

// Representative of x modulo m in the fundamental domain (0, m].
int norm_label(int x, int m) {
  int r = x % m;
  if (r <= 0) r += m;
  return r;
}

// Distance from `from` to `to` walking in the increasing direction, in [0, m).
int offset(int from, int to, int m) {
  int d = (to - from) % m;
  if (d < 0) d += m;
  return d;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

}  // namespace

Arrow::Arrow(int n_, int tail_, int head_) : n(n_), tail(tail_), head(head_) {
  require(n >= 1, "Arrow: n must be positive");
  require(1 <= tail && tail <= n + 1, "Arrow: tail out of range 1..n+1");
  require(1 <= head && head <= n + 1, "Arrow: head out of range 1..n+1");
  require(tail != head, "Arrow: tail and head must differ");
}

std::vector<Arrow> all_arrows(int n) {
  require(n >= 1, "all_arrows: n must be positive");
  std::vector<Arrow> out;
  out.reserve(n * (n + 1));
  for (int t = 1; t <= n + 1; ++t)
    for (int h = 1; h <= n + 1; ++h)
      if (t != h) out.emplace_back(n, t, h);
  return out;
}

CircularArc::CircularArc(int circumference_, int start_, int length_)
    : circumference(circumference_), start(start_), length(length_) {
  require(circumference >= 2, "CircularArc: circumference must be at least 2");
  require(1 <= start && start <= circumference,
          "CircularArc: start outside the fundamental domain (0, m]");
  require(1 <= length && length < circumference,
          "CircularArc: length must lie in [1, m-1]");
}

BDiagonal BDiagonal::diameter(int n, int i) {
  require(n >= 1, "BDiagonal: n must be positive");
  require(1 <= i && i <= n + 1, "BDiagonal: diameter label out of range 1..n+1");
  return BDiagonal(n, Kind::Diameter, i, i + n + 1);
}

BDiagonal BDiagonal::symmetric_pair(int n, int a, int b) {
  require(n >= 1, "BDiagonal: n must be positive");
  const int m = 2 * n + 2;
  a = norm_label(a, m);
  b = norm_label(b, m);
  const int d = offset(a, b, m);
  require(d != 0, "BDiagonal: pair labels must differ");
  require(d != 1 && d != m - 1, "BDiagonal: adjacent labels span an edge, not a diagonal");
  require(d != n + 1, "BDiagonal: antipodal labels form a diameter");

  // Candidate ordered representatives (first label, mate) from {a,b} and its
  // antipodal copy; exactly one of each pair of labels lands in 1..n+1 or
  // both do, and the first labels of distinct candidates never tie.
  int best_u = 0, best_v = 0;
  auto consider = [&](int x, int y) {
    if (x <= n + 1 && (best_u == 0 || x < best_u)) {
      best_u = x;
      best_v = y;
    }
  };
  consider(a, b);
  consider(b, a);
  consider(norm_label(a + n + 1, m), norm_label(b + n + 1, m));
  consider(norm_label(b + n + 1, m), norm_label(a + n + 1, m));
  return BDiagonal(n, Kind::SymmetricPair, best_u, best_v);
}

int BDiagonal::diameter_label() const {
  if (kind_ != Kind::Diameter)
    throw std::logic_error("BDiagonal: not a diameter");
  return a_;
}

int BDiagonal::u() const {
  if (kind_ != Kind::SymmetricPair)
    throw std::logic_error("BDiagonal: not a symmetric pair");
  return a_;
}

int BDiagonal::v() const {
  if (kind_ != Kind::SymmetricPair)
    throw std::logic_error("BDiagonal: not a symmetric pair");
  return b_;
}

std::vector<BDiagonal> all_bdiagonals(int n) {
  require(n >= 1, "all_bdiagonals: n must be positive");
  std::set<BDiagonal> out;
  for (int i = 1; i <= n + 1; ++i) out.insert(BDiagonal::diameter(n, i));
  const int m = 2 * n + 2;
  for (int a = 1; a <= m; ++a) {
    for (int b = a + 1; b <= m; ++b) {
      const int d = offset(a, b, m);
      if (d == 1 || d == m - 1 || d == n + 1) continue;
      out.insert(BDiagonal::symmetric_pair(n, a, b));
    }
  }
  return std::vector<BDiagonal>(out.begin(), out.end());
}

int pi(int x, int n) {
  if (n < 1) throw std::domain_error("pi: n must be positive");
  if (x < 1 || x > 2 * n + 2)
    throw std::domain_error("pi: point outside the fundamental domain (0, 2n+2]");
  return x <= n + 1 ? x : x - (n + 1);
}

ArcPair arc_of_bdiagonal(const BDiagonal& d) {
  const int n = d.n();
  const int m = 2 * n + 2;
  int s, len;
  if (d.kind() == BDiagonal::Kind::Diameter) {
    s = d.diameter_label();
    len = n;
  } else {
    // Orient the representative {u, v} so the cut-off arc [s, s+len] is the
    // short one; the other orientation has length 2n - len >= n+1.
    int u = d.u(), v = d.v();
    len = offset(u, v - 1, m);
    s = u;
    if (len > n) {
      len = offset(v, u - 1, m);
      s = v;
    }
  }
  CircularArc first(m, s, len);
  CircularArc second(m, norm_label(s + n + 1, m), len);
  if (first.start <= n + 1) return ArcPair{n, first, second};
  return ArcPair{n, second, first};
}

Arrow arrow_of_bdiagonal(const BDiagonal& d) {
  const ArcPair arcs = arc_of_bdiagonal(d);
  const int m = 2 * d.n() + 2;
  const int end = norm_label(arcs.inner.start + arcs.inner.length, m);
  return Arrow(d.n(), pi(end, d.n()), arcs.inner.start);
}

BDiagonal bdiagonal_of_arrow(const Arrow& a) {
  const int n = a.n;
  if (a.forward()) {
    if (a.head == a.tail + 1) return BDiagonal::diameter(n, a.head);
    // (t, h) with h > t+1 comes from the pair {{h, t+1+n+1}, {h+n+1, t+1}}.
    return BDiagonal::symmetric_pair(n, a.head, a.tail + n + 2);
  }
  if (a.tail == n + 1) {
    if (a.head == 1) return BDiagonal::diameter(n, 1);
    return BDiagonal::symmetric_pair(n, 1, a.head + n + 1);
  }
  return BDiagonal::symmetric_pair(n, a.head, a.tail + 1);
}

CircularArc image_arc(const Arrow& a) {
  const int m = a.n + 1;
  return CircularArc(m, a.head, offset(a.head, a.tail, m));
}

namespace {

void check_pair(const Arrow& a, const Arrow& b) {
  if (a.n != b.n)
    throw std::domain_error("arrows_compatible: mismatched ambient n");
  if (a == b) throw std::domain_error("arrows_compatible: arrows must differ");
}

}  // namespace

bool arrows_compatible(const Arrow& a, const Arrow& b) {
  check_pair(a, b);
  const CircularArc A = image_arc(a);
  const CircularArc B = image_arc(b);
  const int m = a.n + 1;
  const int ab = offset(A.start, B.start, m);
  const int ba = offset(B.start, A.start, m);
  const bool b_in_a = ab + B.length <= A.length;
  const bool a_in_b = ba + A.length <= B.length;
  const bool disjoint = ab > A.length && ba > B.length;
  return b_in_a || a_in_b || disjoint;
}

bool arrows_compatible_by_cases(const Arrow& a, const Arrow& b) {
  check_pair(a, b);
  if (a.head == b.tail || b.head == a.tail) return false;
  if (a.tail == b.tail || a.head == b.head) return true;

  // All four endpoints are distinct from here on.
  const int alo = a.span_lo(), ahi = a.span_hi();
  const int blo = b.span_lo(), bhi = b.span_hi();
  auto inside = [](int x, int lo, int hi) { return lo < x && x < hi; };
  auto outside = [](int x, int lo, int hi) { return x < lo || hi < x; };
  const bool cross = (inside(blo, alo, ahi) && outside(bhi, alo, ahi)) ||
                     (inside(bhi, alo, ahi) && outside(blo, alo, ahi));
  const bool a_nests_b = alo < blo && bhi < ahi;
  const bool b_nests_a = blo < alo && ahi < bhi;

  if (a.backward() && b.backward()) return !cross;
  if (a.forward() && b.forward()) return a_nests_b || b_nests_a;
  const bool backward_nests_forward = a.backward() ? a_nests_b : b_nests_a;
  return !(backward_nests_forward || cross);
}

}  // namespace legtri
