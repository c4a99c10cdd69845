// Command-line front end: enumeration, triangulation, path encoding, and
// the combined verification suite, as reproducible JSON/CSV/text reports.
//
// Exit codes: 0 all requested checks passed; 1 a check failed; 2 usage or
// input validation error; 3 scale gate exceeded (rerun with --unsafe-scale).

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "legtri/arrows.hpp"
#include "legtri/cho.hpp"
#include "legtri/delannoy.hpp"
#include "legtri/errors.hpp"
#include "legtri/json_io.hpp"
#include "legtri/legendre.hpp"
#include "legtri/numbers.hpp"
#include "legtri/pulling.hpp"
#include "legtri/simion.hpp"

namespace {

using nlohmann::json;
using namespace legtri;

constexpr int kEnumerationGate = 7;
constexpr int kTriangulationGate = 5;
constexpr int kDecompositionGate = 6;
constexpr int kBijectionGate = 5;

struct Options {
  int n = 1;
  std::optional<int> dim;
  std::string order = "simion";
  std::uint64_t seed = 0;
  std::string format = "json";
  bool unsafe_scale = false;
  std::string input;  // path, or "-" / empty for stdin where input is read
  std::string word;
  int power = 1;
};

class Timer {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

void gate(int n, int limit, bool unsafe_scale, const std::string& what) {
  if (n > limit && !unsafe_scale)
    throw UnsupportedScaleError(what + " is guarded at n <= " +
                                std::to_string(limit) +
                                "; pass --unsafe-scale to override");
}

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path.empty() || path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open input file: " + path);
    buffer << in.rdbuf();
  }
  return buffer.str();
}

json parse_json_input(const std::string& path) {
  try {
    return json::parse(read_input(path));
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("input is not valid JSON: ") +
                                e.what());
  }
}

PullOrder resolve_order(int n, const std::string& scheme, std::uint64_t seed) {
  if (scheme == "lex") return make_order(n, OrderScheme::Lex);
  if (scheme == "simion") return make_order(n, OrderScheme::SimionCanonical);
  if (scheme == "revlex") return make_order(n, OrderScheme::RevlexBackwardFirst);
  if (scheme == "random") return random_order(n, seed);
  if (scheme == "random-simion") return random_simion_order(n, seed);
  if (scheme.rfind("file:", 0) == 0)
    return order_from_json(parse_json_input(scheme.substr(5)), n);
  throw std::invalid_argument(
      "unknown order scheme \"" + scheme +
      "\" (expected lex, simion, revlex, random, random-simion, or file:PATH)");
}

json config_json(const Options& opt, bool with_order = false) {
  json config{{"n", opt.n},
              {"seed", opt.seed},
              {"format", opt.format},
              {"unsafe_scale", opt.unsafe_scale}};
  if (opt.dim) config["dim"] = *opt.dim;
  if (with_order) config["order"] = opt.order;
  return config;
}

int emit_report(const std::string& command, const Options& opt,
                const json& config, const json& payload, bool pass,
                const Timer& timer) {
  if (opt.format == "json") {
    json report{{"command", command},
                {"config", config},
                {"payload", payload},
                {"pass", pass},
                {"timing_ms", timer.ms()}};
    std::cout << report.dump(2) << "\n";
  } else if (opt.format == "text") {
    std::cout << command << " (n=" << opt.n << "): "
              << (pass ? "pass" : "FAIL") << "\n"
              << payload.dump(2) << "\n";
  }
  return pass ? 0 : 1;
}

std::string arrows_compact(const ArrowSet& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ";";
    out += std::to_string(s[i].tail) + ">" + std::to_string(s[i].head);
  }
  return out;
}

std::string diagonal_compact(const BDiagonal& d) {
  if (d.kind() == BDiagonal::Kind::Diameter)
    return "d" + std::to_string(d.diameter_label());
  return "p" + std::to_string(d.u()) + ":" + std::to_string(d.v());
}

json face_line(const ArrowSet& face, std::optional<int> type) {
  json diagonals = json::array();
  for (const Arrow& a : face) diagonals.push_back(json_of(bdiagonal_of_arrow(a)));
  json line{{"arrows", json_of(face)}, {"diagonals", diagonals}};
  if (type) line["type"] = *type;
  return line;
}

int cmd_fvector(const Options& opt) {
  Timer timer;
  const FaceVector formula = f_vector(opt.n, CountMode::Formula);
  const FaceVector enumerated =
      f_vector(opt.n, CountMode::Enumerated, opt.unsafe_scale);
  const std::vector<BigInt> h_formula = h_vector(opt.n, HMode::Formula);
  const std::vector<BigInt> h_enumerated = h_from_f(enumerated);
  const bool f_agree = formula == enumerated;
  const bool h_agree = h_formula == h_enumerated;

  if (opt.format == "csv") {
    std::cout << "j,f_formula,f_enumerated,h_formula,h_from_enumerated\n";
    for (int j = 0; j <= opt.n; ++j)
      std::cout << j << "," << formula.entries[j] << ","
                << enumerated.entries[j] << "," << h_formula[j] << ","
                << h_enumerated[j] << "\n";
    return (f_agree && h_agree) ? 0 : 1;
  }

  json f_formula_json = json::array(), f_enum_json = json::array(),
       h_formula_json = json::array(), h_enum_json = json::array();
  for (int j = 0; j <= opt.n; ++j) {
    f_formula_json.push_back(json_of(formula.entries[j]));
    f_enum_json.push_back(json_of(enumerated.entries[j]));
    h_formula_json.push_back(json_of(h_formula[j]));
    h_enum_json.push_back(json_of(h_enumerated[j]));
  }
  const json payload{{"f_formula", f_formula_json},
                     {"f_enumerated", f_enum_json},
                     {"h_formula", h_formula_json},
                     {"h_from_enumerated", h_enum_json},
                     {"f_agree", f_agree},
                     {"h_agree", h_agree},
                     {"facet_count", json_of(formula.entries[opt.n])}};
  return emit_report("fvector", opt, config_json(opt), payload,
                     f_agree && h_agree, timer);
}

int stream_faces(const Options& opt, bool facets_only) {
  gate(opt.n, kEnumerationGate, opt.unsafe_scale, "enumeration");
  std::optional<int> dim = opt.dim;
  if (facets_only) dim = opt.n - 1;
  const std::vector<ArrowSet> faces =
      enumerate_faces(opt.n, dim, opt.unsafe_scale);
  if (opt.format == "csv") std::cout << "arrows,diagonals,type\n";
  for (const ArrowSet& face : faces) {
    std::optional<int> type;
    if (facets_only) type = facet_type(face);
    if (opt.format == "json") {
      std::cout << face_line(face, type).dump() << "\n";
    } else if (opt.format == "csv") {
      std::string diagonals;
      for (size_t i = 0; i < face.size(); ++i) {
        if (i) diagonals += ";";
        diagonals += diagonal_compact(bdiagonal_of_arrow(face[i]));
      }
      std::cout << arrows_compact(face) << "," << diagonals << ","
                << (type ? std::to_string(*type) : "") << "\n";
    } else {
      std::cout << arrows_compact(face);
      if (type) std::cout << " type=" << *type;
      std::cout << "\n";
    }
  }
  return 0;
}

int cmd_triangulate(const Options& opt) {
  Timer timer;
  gate(opt.n, kTriangulationGate, opt.unsafe_scale, "triangulation");
  const PullOrder order = resolve_order(opt.n, opt.order, opt.seed);
  const bool simion_valid = is_valid_simion_order(order);
  const SimplicialComplex tri = pull_triangulate(opt.n, order);

  json payload{{"order", json_of(order)},
               {"order_is_simion_valid", simion_valid},
               {"facet_count", tri.facets.size()},
               {"complex", json_of(tri)}};
  bool pass = true;
  if (simion_valid) {
    const std::vector<ArrowSet> expected =
        enumerate_faces(opt.n, opt.n - 1, opt.unsafe_scale);
    const bool equal =
        std::set<ArrowSet>(tri.facets.begin(), tri.facets.end()) ==
        std::set<ArrowSet>(expected.begin(), expected.end());
    payload["equals_noncrossing_complex"] = equal;
    pass = equal;
  } else {
    payload["equals_noncrossing_complex"] = nullptr;
  }

  if (opt.format == "csv") {
    std::cout << "facet\n";
    for (const ArrowSet& f : tri.facets)
      std::cout << arrows_compact(f) << "\n";
    return pass ? 0 : 1;
  }
  return emit_report("triangulate", opt, config_json(opt, true), payload, pass,
                     timer);
}

int cmd_delannoy(const Options& opt, const std::string& mode) {
  Timer timer;
  json payload;
  bool pass = true;
  if (mode == "encode") {
    const Digraph g = digraph_from_json(parse_json_input(opt.input));
    const std::string recursive = dp(g);
    const std::vector<IndexedLetter> m = multiset_of_digraph(g);
    const std::string via_multiset = word_of_multiset(m);
    const bool agree = recursive == via_multiset;
    const bool roundtrip = dp_inverse(recursive, g.nodes) == g;
    payload = {{"input", json_of(g)},
               {"word", recursive},
               {"word_via_multiset", via_multiset},
               {"multiset", json_of(m)},
               {"methods_agree", agree},
               {"roundtrip_ok", roundtrip}};
    pass = agree && roundtrip;
    if (opt.format == "text" || opt.format == "csv") {
      std::cout << recursive << "\n";
      return pass ? 0 : 1;
    }
  } else {
    std::string word = opt.word;
    if (word.empty()) {
      word = read_input(opt.input);
      while (!word.empty() && (word.back() == '\n' || word.back() == '\r'))
        word.pop_back();
    }
    const int length = word_length(word);
    if (length % 2 != 0)
      throw std::invalid_argument("word has odd length " +
                                  std::to_string(length));
    std::vector<int> nodes(length / 2 + 1);
    for (size_t i = 0; i < nodes.size(); ++i) nodes[i] = static_cast<int>(i) + 1;
    const Digraph g = dp_inverse(word, nodes);
    const bool roundtrip = dp(g) == word;
    payload = {{"word", word},
               {"nodes", g.nodes},
               {"digraph", json_of(g)},
               {"roundtrip_ok", roundtrip}};
    pass = roundtrip;
    if (opt.format == "text" || opt.format == "csv") {
      std::cout << json_of(g).dump() << "\n";
      return pass ? 0 : 1;
    }
  }
  Options echo = opt;
  echo.format = "json";
  return emit_report("delannoy " + mode, echo, config_json(opt), payload, pass,
                     timer);
}

int cmd_rotate(const Options& opt) {
  Timer timer;
  const ArrowSet face = arrowset_from_json(parse_json_input(opt.input), opt.n);
  const ArrowSet image = zeta_apply(face, opt.power);
  const json payload{{"n", opt.n},
                     {"power", opt.power},
                     {"input", json_of(face)},
                     {"image", json_of(image)},
                     {"input_is_face", is_face(face)},
                     {"image_is_face", is_face(image)}};
  if (opt.format == "text" || opt.format == "csv") {
    std::cout << json_of(image).dump() << "\n";
    return 0;
  }
  return emit_report("rotate", opt, config_json(opt), payload, true, timer);
}

// ---- verify ------------------------------------------------------------

struct CheckOutcome {
  std::string name;
  std::string status;  // "pass", "fail", "skip"
  std::string detail;
};

class Verifier {
 public:
  explicit Verifier(const Options& opt) : opt_(opt) {}

  template <typename Fn>
  void run(const std::string& name, int scale_limit, Fn&& body) {
    if (opt_.n > scale_limit && !opt_.unsafe_scale) {
      outcomes_.push_back({name, "skip",
                           "guarded at n <= " + std::to_string(scale_limit)});
      return;
    }
    std::string detail;
    bool ok = false;
    try {
      ok = body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    outcomes_.push_back({name, ok ? "pass" : "fail", detail});
  }

  const std::vector<CheckOutcome>& outcomes() const { return outcomes_; }

  int failed() const {
    int count = 0;
    for (const CheckOutcome& c : outcomes_)
      if (c.status == "fail") ++count;
    return count;
  }

 private:
  Options opt_;
  std::vector<CheckOutcome> outcomes_;
};

int cmd_verify(const Options& opt) {
  Timer timer;
  const int n = opt.n;
  Verifier verifier(opt);

  verifier.run("bdiagonal_arrow_bijection", 99, [&](std::string& detail) {
    std::set<Arrow> seen;
    for (const BDiagonal& d : all_bdiagonals(n)) {
      const Arrow a = arrow_of_bdiagonal(d);
      if (!(bdiagonal_of_arrow(a) == d)) {
        detail = "roundtrip failed";
        return false;
      }
      seen.insert(a);
    }
    if (static_cast<int>(seen.size()) != n * (n + 1)) {
      detail = "arrow image not complete";
      return false;
    }
    detail = std::to_string(seen.size()) + " diagonals";
    return true;
  });

  verifier.run("predicate_equivalence", 99, [&](std::string& detail) {
    const std::vector<Arrow> arrows = all_arrows(n);
    for (const Arrow& a : arrows)
      for (const Arrow& b : arrows) {
        if (a == b) continue;
        if (arrows_compatible(a, b) != arrows_compatible_by_cases(a, b)) {
          detail = "disagreement at (" + std::to_string(a.tail) + "," +
                   std::to_string(a.head) + ") vs (" + std::to_string(b.tail) +
                   "," + std::to_string(b.head) + ")";
          return false;
        }
      }
    detail = std::to_string(arrows.size() * (arrows.size() - 1)) + " pairs";
    return true;
  });

  verifier.run("rotation_equivariance", 99, [&](std::string& detail) {
    const std::vector<Arrow> arrows = all_arrows(n);
    for (const Arrow& a : arrows)
      for (const Arrow& b : arrows) {
        if (a == b) continue;
        if (arrows_compatible(a, b) !=
            arrows_compatible(zeta_apply(a), zeta_apply(b))) {
          detail = "shift broke compatibility";
          return false;
        }
      }
    return true;
  });

  verifier.run("f_h_agreement", kEnumerationGate, [&](std::string& detail) {
    const FaceVector enumerated =
        f_vector(n, CountMode::Enumerated, opt.unsafe_scale);
    if (!(enumerated == f_vector(n, CountMode::Formula))) {
      detail = "f-vector mismatch";
      return false;
    }
    if (h_from_f(enumerated) != h_vector(n, HMode::Formula)) {
      detail = "h-vector mismatch";
      return false;
    }
    return true;
  });

  verifier.run("facet_characterization", kEnumerationGate,
               [&](std::string& detail) {
    const std::vector<ArrowSet> facets =
        enumerate_faces(n, n - 1, opt.unsafe_scale);
    if (binomial(2 * n, n) != BigInt(facets.size())) {
      detail = "facet count != C(2n,n)";
      return false;
    }
    for (const ArrowSet& f : facets) {
      if (!satisfies_facet_conditions(f)) {
        detail = "facet fails the characterization conditions";
        return false;
      }
      facet_type(f);  // throws unless exactly one diameter arrow
    }
    detail = std::to_string(facets.size()) + " facets";
    return true;
  });

  verifier.run("triangulation_equality", kTriangulationGate,
               [&](std::string& detail) {
    const PullOrder order = resolve_order(n, opt.order, opt.seed);
    const SimplicialComplex tri = pull_triangulate(n, order);
    const std::vector<ArrowSet> expected =
        enumerate_faces(n, n - 1, opt.unsafe_scale);
    detail = std::string("order ") +
             (is_valid_simion_order(order) ? "is" : "is NOT") +
             " in canonical position";
    return std::set<ArrowSet>(tri.facets.begin(), tri.facets.end()) ==
           std::set<ArrowSet>(expected.begin(), expected.end());
  });

  verifier.run("flagness_and_face_counts", kTriangulationGate,
               [&](std::string& detail) {
    const SimplicialComplex tri =
        pull_triangulate(n, resolve_order(n, opt.order, opt.seed));
    for (const ArrowSet& nonface : minimal_nonfaces(tri))
      if (nonface.size() != 2) {
        detail = "minimal nonface of size " + std::to_string(nonface.size());
        return false;
      }
    const std::vector<long long> counts = face_counts(tri);
    const FaceVector formula = f_vector(n, CountMode::Formula);
    for (int j = 0; j <= n; ++j)
      if (BigInt(j < static_cast<int>(counts.size()) ? counts[j] : 0) !=
          formula.entries[j]) {
        detail = "face count mismatch at dimension " + std::to_string(j - 1);
        return false;
      }
    return true;
  });

  verifier.run("cyclic_decomposition", kDecompositionGate,
               [&](std::string& detail) {
    const DecompositionReport report = verify_decomposition(n, opt.unsafe_scale);
    if (!report.pass && !report.failures.empty()) detail = report.failures[0];
    return report.pass;
  });

  verifier.run("unimodular_volumes", kTriangulationGate,
               [&](std::string& detail) {
    const SimplicialComplex tri =
        pull_triangulate(n, make_order(n, OrderScheme::SimionCanonical));
    for (const ArrowSet& f : tri.facets) {
      std::vector<IntegerVector> points{IntegerVector(n + 1, 0)};
      for (const Arrow& a : f) points.push_back(vertex_coordinates(a));
      if (simplex_normalized_volume(points) != 1) {
        detail = "non-unimodular simplex " + arrows_compact(f);
        return false;
      }
    }
    detail = std::to_string(tri.facets.size()) + " simplices";
    return true;
  });

  verifier.run("total_unimodularity", 3, [&](std::string& detail) {
    return incidence_is_totally_unimodular(n, opt.unsafe_scale);
  });

  verifier.run("path_bijection", kBijectionGate, [&](std::string& detail) {
    std::vector<int> nodes(n + 1);
    for (int i = 0; i <= n; ++i) nodes[i] = i + 1;
    std::set<std::string> words;
    const std::vector<ArrowSet> faces = enumerate_faces(n, std::nullopt,
                                                        opt.unsafe_scale);
    for (const ArrowSet& face : faces) {
      std::vector<std::pair<int, int>> arrows;
      for (const Arrow& a : face) arrows.emplace_back(a.tail, a.head);
      const Digraph g(nodes, arrows);
      const std::string word = dp(g);
      if (word != word_of_multiset(multiset_of_digraph(g))) {
        detail = "recursive and multiset encodings disagree";
        return false;
      }
      if (!(dp_inverse(word, nodes) == g)) {
        detail = "decode(encode) is not the identity";
        return false;
      }
      words.insert(word);
    }
    if (words.size() != faces.size()) {
      detail = "encoding is not injective";
      return false;
    }
    const std::vector<std::string> all = all_balanced_words(n);
    if (words != std::set<std::string>(all.begin(), all.end())) {
      detail = "image is not all balanced words";
      return false;
    }
    detail = std::to_string(words.size()) + " words";
    return true;
  });

  json checks = json::array();
  for (const CheckOutcome& c : verifier.outcomes()) {
    json entry{{"name", c.name}, {"status", c.status}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    checks.push_back(entry);
  }
  const int failed = verifier.failed();
  const json payload{{"checks", checks}, {"failed", failed}};

  if (opt.format == "csv") {
    std::cout << "check,status,detail\n";
    for (const CheckOutcome& c : verifier.outcomes())
      std::cout << c.name << "," << c.status << ",\"" << c.detail << "\"\n";
    return failed == 0 ? 0 : 1;
  }
  if (opt.format == "text") {
    for (const CheckOutcome& c : verifier.outcomes())
      std::cout << (c.status == "pass" ? "  ok " : c.status == "skip"
                        ? "skip "
                        : "FAIL ")
                << c.name << (c.detail.empty() ? "" : "  (" + c.detail + ")")
                << "\n";
    std::cout << (failed ? "FAILED" : "passed") << "\n";
    return failed == 0 ? 0 : 1;
  }
  return emit_report("verify", opt, config_json(opt, true), payload,
                     failed == 0, timer);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact combinatorics of noncrossing arrow complexes: "
               "enumeration, pulling triangulation, and path bijections"};
  app.require_subcommand(1);

  Options opt;
  std::string delannoy_mode;

  const auto add_common = [&](CLI::App* cmd, bool with_order) {
    cmd->add_option("--n", opt.n, "ambient parameter (nodes 1..n+1)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--seed", opt.seed, "seed for randomized orders");
    cmd->add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_flag("--unsafe-scale", opt.unsafe_scale,
                  "override the documented scale gates");
    if (with_order)
      cmd->add_option("--order", opt.order,
                      "pull order: lex, simion, revlex, random, "
                      "random-simion, or file:PATH");
  };

  CLI::App* fvector = app.add_subcommand(
      "fvector", "formula vs enumerated face and h vectors");
  add_common(fvector, false);

  CLI::App* faces =
      app.add_subcommand("faces", "stream all noncrossing faces, one per line");
  add_common(faces, false);
  faces->add_option("--dim", opt.dim, "restrict to one dimension (-1..n-1)");

  CLI::App* facets =
      app.add_subcommand("facets", "stream all facets with their types");
  add_common(facets, false);

  CLI::App* triangulate = app.add_subcommand(
      "triangulate", "pulling triangulation of the boundary complex");
  add_common(triangulate, true);

  CLI::App* delannoy = app.add_subcommand(
      "delannoy", "encode digraphs as balanced words and back");
  delannoy->add_option("mode", delannoy_mode, "encode or decode")
      ->required()
      ->check(CLI::IsMember({"encode", "decode"}));
  add_common(delannoy, false);
  delannoy->add_option("--input", opt.input,
                       "input file (JSON digraph or word); default stdin");
  delannoy->add_option("--word", opt.word, "word to decode");

  CLI::App* rotate = app.add_subcommand(
      "rotate", "apply the cyclic node shift to a face");
  add_common(rotate, false);
  rotate->add_option("--power", opt.power, "how many single-step shifts");
  rotate->add_option("--input", opt.input,
                     "face as a JSON array of [tail, head]; default stdin");

  CLI::App* verify =
      app.add_subcommand("verify", "run the full invariant suite");
  add_common(verify, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (fvector->parsed()) return cmd_fvector(opt);
    if (faces->parsed()) return stream_faces(opt, false);
    if (facets->parsed()) return stream_faces(opt, true);
    if (triangulate->parsed()) return cmd_triangulate(opt);
    if (delannoy->parsed()) return cmd_delannoy(opt, delannoy_mode);
    if (rotate->parsed()) return cmd_rotate(opt);
    if (verify->parsed()) return cmd_verify(opt);
  } catch (const UnsupportedScaleError& e) {
    std::cerr << "scale gate: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
