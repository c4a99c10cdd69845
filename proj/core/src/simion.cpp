#include "legtri/simion.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "legtri/numbers.hpp"

namespace legtri {

namespace {

// Sorted copy; rejects repeats and mixed ambient n.
ArrowSet canonical_face(const ArrowSet& s) {
  ArrowSet t = s;
  std::sort(t.begin(), t.end());
  if (std::adjacent_find(t.begin(), t.end()) != t.end())
    throw std::invalid_argument("face: repeated arrow");
  for (const Arrow& a : t)
    if (a.n != t.front().n)
      throw std::invalid_argument("face: mixed ambient n");
  return t;
}

bool weakly_nested(const Arrow& a, const Arrow& b) {
  return (a.span_lo() <= b.span_lo() && b.span_hi() <= a.span_hi()) ||
         (b.span_lo() <= a.span_lo() && a.span_hi() <= b.span_hi());
}

bool strictly_nests(const Arrow& outer, const Arrow& inner) {
  return outer.span_lo() < inner.span_lo() &&
         inner.span_hi() < outer.span_hi();
}

bool spans_cross(const Arrow& a, const Arrow& b) {
  auto inside = [](int x, int lo, int hi) { return lo < x && x < hi; };
  auto outside = [](int x, int lo, int hi) { return x < lo || hi < x; };
  const int lo = a.span_lo(), hi = a.span_hi();
  return (inside(b.span_lo(), lo, hi) && outside(b.span_hi(), lo, hi)) ||
         (inside(b.span_hi(), lo, hi) && outside(b.span_lo(), lo, hi));
}

// Type of a diameter arrow, or 0 if the arrow is not a diameter.
int diameter_type(const Arrow& a) {
  if (a.tail == a.n + 1 && a.head == 1) return 1;
  if (a.head == a.tail + 1) return a.head;
  return 0;
}

}  // namespace

bool is_face(const ArrowSet& s) {
  const ArrowSet t = canonical_face(s);
  for (size_t i = 0; i < t.size(); ++i)
    for (size_t j = i + 1; j < t.size(); ++j)
      if (!arrows_compatible(t[i], t[j])) return false;
  return true;
}

std::vector<ArrowSet> enumerate_faces(int n, std::optional<int> dim,
                                      bool unsafe_scale) {
  if (n < 1) throw std::invalid_argument("enumerate_faces: n must be positive");
  if (dim && (*dim < -1 || *dim > n - 1))
    throw std::domain_error("enumerate_faces: dim outside -1..n-1");
  if (n > 7 && !unsafe_scale)
    throw UnsupportedScaleError(
        "enumerate_faces: guarded at n <= 7; pass unsafe_scale to override");

  const std::vector<Arrow> arrows = all_arrows(n);
  const size_t sz = arrows.size();
  std::vector<std::vector<bool>> compat(sz, std::vector<bool>(sz, false));
  for (size_t i = 0; i < sz; ++i)
    for (size_t j = i + 1; j < sz; ++j)
      compat[i][j] = compat[j][i] = arrows_compatible(arrows[i], arrows[j]);

  std::vector<ArrowSet> out;
  std::vector<size_t> current;
  auto record = [&]() {
    if (dim && static_cast<int>(current.size()) != *dim + 1) return;
    ArrowSet face;
    face.reserve(current.size());
    for (size_t idx : current) face.push_back(arrows[idx]);
    out.push_back(std::move(face));
  };
  auto extend = [&](auto&& self, size_t start) -> void {
    record();
    if (dim && static_cast<int>(current.size()) == *dim + 1) return;
    for (size_t i = start; i < sz; ++i) {
      bool ok = true;
      for (size_t idx : current)
        if (!compat[idx][i]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      current.push_back(i);
      self(self, i + 1);
      current.pop_back();
    }
  };
  extend(extend, 0);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_facet(const ArrowSet& s) {
  if (s.empty()) return false;
  if (s.size() != static_cast<size_t>(s.front().n)) return false;
  return is_face(s);
}

bool satisfies_facet_conditions(const ArrowSet& s) {
  if (s.empty()) return false;
  const ArrowSet t = canonical_face(s);
  const int n = t.front().n;
  if (t.size() != static_cast<size_t>(n)) return false;

  int type = 0, type_count = 0;
  for (const Arrow& a : t)
    if (const int k = diameter_type(a)) {
      type = k;
      ++type_count;
    }
  if (type_count != 1) return false;

  for (const Arrow& a : t)
    for (const Arrow& b : t) {
      if (a == b) continue;
      if (a.head == b.tail) return false;
      if (a.backward() && b.forward() && strictly_nests(a, b)) return false;
      if (a.forward() && b.forward() && !weakly_nested(a, b)) return false;
      if (spans_cross(a, b)) return false;
    }
  if (type == 1)
    for (const Arrow& a : t)
      if (a.forward()) return false;
  return true;
}

int facet_type(const ArrowSet& s) {
  if (!is_facet(s))
    throw std::invalid_argument("facet_type: input is not a facet");
  int type = 0, type_count = 0;
  for (const Arrow& a : s)
    if (const int k = diameter_type(a)) {
      type = k;
      ++type_count;
    }
  if (type_count != 1)
    throw InvariantViolation(
        "facet_type: facet without a unique diameter arrow");
  return type;
}

FaceVector f_vector(int n, CountMode mode, bool unsafe_scale) {
  if (n < 1) throw std::invalid_argument("f_vector: n must be positive");
  FaceVector fv{n, std::vector<BigInt>(n + 1)};
  if (mode == CountMode::Formula) {
    for (int j = 0; j <= n; ++j)
      fv.entries[j] = binomial(n + j, j) * binomial(n, j);
  } else {
    for (const ArrowSet& f : enumerate_faces(n, std::nullopt, unsafe_scale))
      fv.entries[f.size()] += 1;
  }
  return fv;
}

std::vector<BigInt> h_from_f(const FaceVector& f) {
  const int n = f.n;
  std::vector<BigInt> h(n + 1);
  for (int j = 0; j <= n; ++j) {
    BigInt acc = 0;
    for (int i = 0; i <= j; ++i) {
      const BigInt term = binomial(n - i, j - i) * f.entries[i];
      if ((j - i) % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    h[j] = acc;
  }
  return h;
}

std::vector<BigInt> h_vector(int n, HMode mode) {
  if (n < 1) throw std::invalid_argument("h_vector: n must be positive");
  if (mode == HMode::FromF) return h_from_f(f_vector(n, CountMode::Formula));
  std::vector<BigInt> h(n + 1);
  for (int i = 0; i <= n; ++i) {
    const BigInt b = binomial(n, i);
    h[i] = b * b;
  }
  return h;
}

}  // namespace legtri
