#include "legtri/cho.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "legtri/errors.hpp"
#include "legtri/numbers.hpp"

namespace legtri {

namespace {

int shifted(int label, long long power, int m) {
  const long long s = ((power % m) + m) % m;
  return static_cast<int>((label - 1 + s) % m) + 1;
}

std::string describe(const ArrowSet& f) {
  std::ostringstream out;
  out << "{";
  for (size_t i = 0; i < f.size(); ++i) {
    if (i) out << ", ";
    out << "(" << f[i].tail << "," << f[i].head << ")";
  }
  out << "}";
  return out.str();
}

}  // namespace

Arrow zeta_apply(const Arrow& a, long long power) {
  const int m = a.n + 1;
  return Arrow(a.n, shifted(a.tail, power, m), shifted(a.head, power, m));
}

ArrowSet zeta_apply(const ArrowSet& f, long long power) {
  ArrowSet out;
  out.reserve(f.size());
  for (const Arrow& a : f) out.push_back(zeta_apply(a, power));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_in_positive_component(const ArrowSet& f, int k) {
  if (f.empty()) return true;
  const int n = f.front().n;
  if (k < 1 || k > n + 1)
    throw std::domain_error("is_in_positive_component: k out of range");
  for (const Arrow& a : f) {
    if (a.n != n)
      throw std::invalid_argument(
          "is_in_positive_component: mixed ambient n");
    if (!zeta_apply(a, 1 - k).backward()) return false;
  }
  return true;
}

DecompositionReport verify_decomposition(int n, bool unsafe_scale) {
  if (n < 1) throw std::domain_error("verify_decomposition: n must be positive");
  if (n > 6 && !unsafe_scale)
    throw UnsupportedScaleError(
        "verify_decomposition: facet checks are guarded at n <= 6; "
        "pass unsafe_scale to override");

  DecompositionReport report;
  report.n = n;

  const std::vector<ArrowSet> facets = enumerate_faces(n, n - 1, unsafe_scale);
  report.facet_count = static_cast<long long>(facets.size());
  report.expected_class_size =
      (binomial(2 * n, n) / (n + 1)).convert_to<long long>();

  std::vector<std::set<ArrowSet>> by_type(n + 1);
  for (const ArrowSet& f : facets) by_type[facet_type(f) - 1].insert(f);

  report.facets_per_type.assign(n + 1, 0);
  report.type_image.assign(n + 1, -1);
  report.types_in_components = true;
  report.shift_permutes_types = true;
  report.class_sizes_match = true;

  for (int k = 1; k <= n + 1; ++k) {
    const std::set<ArrowSet>& cls = by_type[k - 1];
    report.facets_per_type[k - 1] = static_cast<long long>(cls.size());

    if (static_cast<long long>(cls.size()) != report.expected_class_size) {
      report.class_sizes_match = false;
      std::ostringstream msg;
      msg << "type " << k << " has " << cls.size() << " facets, expected "
          << report.expected_class_size;
      report.failures.push_back(msg.str());
    }

    for (const ArrowSet& f : cls)
      if (!is_in_positive_component(f, k)) {
        report.types_in_components = false;
        report.failures.push_back("type-" + std::to_string(k) + " facet " +
                                  describe(f) +
                                  " is outside its positive component");
      }

    const int target = k % (n + 1) + 1;
    std::set<ArrowSet> image;
    for (const ArrowSet& f : cls) image.insert(zeta_apply(f, 1));
    if (image == by_type[target - 1]) {
      report.type_image[k - 1] = target;
    } else {
      report.shift_permutes_types = false;
      std::ostringstream msg;
      msg << "shifted type-" << k << " class does not equal the type-"
          << target << " class";
      for (const ArrowSet& g : image)
        if (!by_type[target - 1].count(g)) {
          msg << "; e.g. image facet " << describe(g);
          break;
        }
      report.failures.push_back(msg.str());
    }
  }

  report.pass = report.types_in_components && report.shift_permutes_types &&
                report.class_sizes_match;
  return report;
}

}  // namespace legtri
