// Acceptance checks 1-10. Prints one PASS/FAIL line per criterion and exits
// non-zero if any fails.
//
//   acceptance HK_BINARY GOLDEN_DIR

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "hkmon/catalog.hpp"
#include "hkmon/cycle_monoid.hpp"
#include "hkmon/graph.hpp"
#include "hkmon/matrix_type.hpp"
#include "hkmon/rewrite.hpp"
#include "oracles.hpp"

using namespace hkmon;

namespace {
  // Collects failure messages for one criterion.
  struct Check {
    std::vector<std::string> failures;

    void operator()(bool ok, std::string const& what) {
      if (!ok && failures.size() < 5) {
        failures.push_back(what);
      }
    }
  };

  word_type random_word(std::size_t n, std::size_t max_len, std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<letter_type> letter(1, n);
    word_type                                  w(len(rng));
    for (auto& a : w) {
      a = letter(rng);
    }
    return w;
  }

  void add_cycle(std::vector<arrow_type>& arrows, std::size_t first, std::size_t k) {
    for (std::size_t i = 0; i < k; ++i) {
      arrows.emplace_back(first + i, first + (i + 1) % k);
    }
  }

  RationalMatrix matrix(std::vector<std::vector<Rational>> const& rows) {
    std::vector<Rational> entries;
    for (auto const& r : rows) {
      entries.insert(entries.end(), r.begin(), r.end());
    }
    return RationalMatrix(rows.size(), rows.front().size(), entries);
  }

  std::vector<Rational> as_rational(oracle::Poly const& p) {
    return std::vector<Rational>(p.begin(), p.end());
  }

  ////////////////////////////////////////////////////////////////////////
  // 1. Idempotent counts
  ////////////////////////////////////////////////////////////////////////

  void idempotent_counts(Check& check) {
    for (std::size_t n = 1; n <= 6; ++n) {
      auto const     g = OrientedGraph::path(n);
      auto const     e = idempotents_acyclic(g);
      EqualityOracle eq(g);
      check(e.size() == std::size_t(1) << n, "path " + std::to_string(n) + " count");
      std::set<word_type> distinct(e.begin(), e.end());
      check(distinct.size() == e.size(), "path " + std::to_string(n) + " repeats");
      for (auto const& w : e) {
        check(eq.are_equal(concat(w, w), w).is_equal(),
              "path " + std::to_string(n) + ": " + to_label(w) + " not idempotent");
      }
    }
    for (std::size_t n = 3; n <= 8; ++n) {
      check(all_idempotents(n).size() == (std::size_t(1) << n) - 1,
            "C_" + std::to_string(n) + " count");
    }
    std::set<word_type> c3;
    for (auto const& e : all_idempotents(3)) {
      c3.insert(e.word);
    }
    check(c3 == std::set<word_type>{{}, {1}, {2}, {3}, {1, 2}, {2, 3}, {3, 1}},
          "C_3 idempotent list");
  }

  ////////////////////////////////////////////////////////////////////////
  // 2. f-map homomorphism and relation preservation
  ////////////////////////////////////////////////////////////////////////

  void fmap_homomorphism(Check& check) {
    std::mt19937                                 rng(2026);
    std::uniform_int_distribution<std::int64_t> coord(-10000, 10000);
    for (std::size_t n = 3; n <= 5; ++n) {
      for (int trial = 0; trial < 1000; ++trial) {
        auto u = random_word(n, 10, rng);
        auto v = random_word(n, 10, rng);
        check(f_map(concat(u, v), n) == f_map(u, n).compose(f_map(v, n)),
              "f(uv) != f(u) f(v) for " + to_label(u) + ", " + to_label(v));
        std::vector<std::int64_t> m(n);
        for (auto& x : m) {
          x = coord(rng);
        }
        check(f_map(u, n)(m) == oracle::apply_word(u, m),
              "f(" + to_label(u) + ") disagrees with direct evaluation");
      }
      for (auto const& [l, r] : oracle::relation_pairs(OrientedGraph::cycle(n))) {
        check(f_map(l, n) == f_map(r, n), "relation " + to_label(l) + " = " + to_label(r));
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // 3. Support of words with separated letters
  ////////////////////////////////////////////////////////////////////////

  void support_formula(Check& check) {
    std::size_t cases = 0;
    for (std::size_t n = 3; n <= 5; ++n) {
      for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
        word_type w;
        for (letter_type a = 1; a <= n; ++a) {
          if (mask & (1U << (a - 1))) {
            w.push_back(a);
          }
        }
        do {
          if (!has_separated_letters(w, n)) {
            continue;
          }
          vertex_set complement;
          for (vertex_type v = 1; v <= n; ++v) {
            if (std::find(w.begin(), w.end(), v) == w.end()) {
              complement.push_back(v);
            }
          }
          check(support(f_map(w, n)) == complement, "supp f(" + to_label(w) + ")");
          ++cases;
        } while (std::next_permutation(w.begin(), w.end()));
      }
    }
    check(cases > 0, "no words satisfy the hypothesis");
  }

  ////////////////////////////////////////////////////////////////////////
  // 4. Ideal levels of idempotents
  ////////////////////////////////////////////////////////////////////////

  void idempotent_levels(Check& check) {
    for (std::size_t n = 3; n <= 8; ++n) {
      for (auto const& e : all_idempotents(n)) {
        if (e.subset.size() < 2) {
          continue;
        }
        auto level = classify_level(e.word, n);
        check(level.level == static_cast<int>(e.subset.size()) - 2,
              "C_" + std::to_string(n) + ": level of " + to_label(e.word));
      }
      for (letter_type i = 1; i <= n; ++i) {
        check(classify_level({i}, n).is_top(), "x_" + std::to_string(i) + " not top");
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // 5. Sandwich data
  ////////////////////////////////////////////////////////////////////////

  void sandwich_data(Check& check) {
    auto const m1 = c3_data(BuiltinData::m1);
    auto const m0 = c3_data(BuiltinData::m0);
    for (Rational l : {Rational(1), Rational(-1), Rational(2), Rational(-2),
                       Rational(1, 3), Rational(5), Rational(7)}) {
      check(evaluate_sandwich(m1, l) == matrix({{1, 1, 1}, {1, 1, l}, {1, l, l}}),
            "Pbar_1(" + to_string(l) + ")");
      check(evaluate_sandwich(m0, l) == matrix({{1, 1, 0}, {1, 0, l}, {0, l, l}}),
            "Pbar_0(" + to_string(l) + ")");
    }
    check(rank(evaluate_sandwich(m1, 1)) == 1, "rank Pbar_1(1)");
    check(rank(evaluate_sandwich(m0, -1)) == 2, "rank Pbar_0(-1)");
    for (Rational l : {Rational(2), Rational(-2), Rational(1, 3), Rational(5)}) {
      check(rank(evaluate_sandwich(m1, l)) == 3, "rank Pbar_1(" + to_string(l) + ")");
      check(rank(evaluate_sandwich(m0, l)) == 3, "rank Pbar_0(" + to_string(l) + ")");
    }
    // -(lambda - 1)^2 and -lambda (lambda + 1)
    check(sandwich_determinant(m1) == as_rational(oracle::sandwich_determinant(m1)),
          "det P_1 against cofactor expansion");
    check(sandwich_determinant(m0) == as_rational(oracle::sandwich_determinant(m0)),
          "det P_0 against cofactor expansion");
    check(sandwich_determinant(m1) == std::vector<Rational>{-1, 2, -1}, "det P_1");
    check(sandwich_determinant(m0) == std::vector<Rational>{0, -1, -1}, "det P_0");
  }

  ////////////////////////////////////////////////////////////////////////
  // 6. Representations
  ////////////////////////////////////////////////////////////////////////

  void representations(Check& check) {
    std::vector<std::pair<BuiltinData, Rational>> cases{
        {BuiltinData::m0, -1},
        {BuiltinData::m0, 2},
        {BuiltinData::m0, Rational(1, 3)},
        {BuiltinData::m1, 1},
        {BuiltinData::m1, 2},
        {BuiltinData::m1, 7}};
    for (auto const& [which, lambda] : cases) {
      auto const  d    = c3_data(which);
      std::string name = std::string(which == BuiltinData::m0 ? "M0" : "M1")
                         + " at lambda = " + to_string(lambda);
      auto const rep = build_rep(d, lambda);
      check(verify_homomorphism(rep, d, 5), name + ": homomorphism");
      auto const  ext = extend_rep(rep, d);
      auto const& e   = ext.idempotent();
      check(rep.image(MatrixTypeElement::make(1, 1, 1)) == lambda * e,
            name + ": psi(s; 1, 1) != lambda e");
      check(e * e == e, name + ": e not idempotent");
      check(rank(e) == 1, name + ": rank e != 1");
      check(verify_extension(ext, d, -3, 3), name + ": extension");
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // 7. Infiniteness witness
  ////////////////////////////////////////////////////////////////////////

  void infiniteness(Check& check) {
    for (std::size_t n = 3; n <= 5; ++n) {
      for (std::size_t i = 0; i <= n - 2; ++i) {
        check(infiniteness_witness(n, i, 50),
              "n = " + std::to_string(n) + ", i = " + std::to_string(i));
        // independent: powers evaluated coordinate-wise at a fixed point
        std::set<std::vector<std::int64_t>> images;
        std::vector<std::int64_t>           m(n);
        for (std::size_t k = 0; k < n; ++k) {
          m[k] = 17 * k;
        }
        auto const s = snqi_word(n, i);
        auto       x = m;
        for (int k = 1; k <= 50; ++k) {
          x = oracle::apply_word(s, x);
          images.insert(x);
        }
        check(images.size() == 50, "direct powers repeat for n = " + std::to_string(n));
      }
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // 8. PI criterion
  ////////////////////////////////////////////////////////////////////////

  void pi_suite(Check& check) {
    struct Case {
      std::string   name;
      OrientedGraph g;
      bool          expected;
    };
    std::vector<Case> cases;
    auto              with = [](std::size_t n, std::vector<arrow_type> arrows,
                   std::function<void(std::vector<arrow_type>&)> f) {
      f(arrows);
      return OrientedGraph(n, arrows);
    };
    cases.push_back({"C_3", OrientedGraph::cycle(3), true});
    cases.push_back({"C_5", OrientedGraph::cycle(5), true});
    cases.push_back({"C_3 + C_3", with(6, {}, [](auto& a) {
                                    add_cycle(a, 1, 3);
                                    add_cycle(a, 4, 3);
                                  }),
                     true});
    cases.push_back({"C_3 + C_4", with(7, {}, [](auto& a) {
                                    add_cycle(a, 1, 3);
                                    add_cycle(a, 4, 4);
                                  }),
                     true});
    cases.push_back({"C_3 with an outgoing path",
                     with(5, {{3, 4}, {4, 5}}, [](auto& a) { add_cycle(a, 1, 3); }),
                     true});
    cases.push_back({"C_3 with an incoming path",
                     with(5, {{5, 4}, {4, 1}}, [](auto& a) { add_cycle(a, 1, 3); }),
                     true});
    cases.push_back({"two cycles into a common sink",
                     with(7, {{3, 7}, {6, 7}},
                          [](auto& a) {
                            add_cycle(a, 1, 3);
                            add_cycle(a, 4, 3);
                          }),
                     true});
    cases.push_back({"acyclic diamond",
                     OrientedGraph(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}}), true});
    cases.push_back({"C_3 -> C_3 by one arrow", with(6, {{3, 4}}, [](auto& a) {
                                                  add_cycle(a, 1, 3);
                                                  add_cycle(a, 4, 3);
                                                }),
                     false});
    cases.push_back({"C_3 -> C_3 through a vertex",
                     with(7, {{3, 7}, {7, 4}},
                          [](auto& a) {
                            add_cycle(a, 1, 3);
                            add_cycle(a, 4, 3);
                          }),
                     false});
    cases.push_back({"theta graph",
                     OrientedGraph(5, {{1, 2}, {2, 3}, {3, 1}, {2, 4}, {4, 5}, {5, 1}}),
                     false});
    cases.push_back({"C_4 with a chord",
                     with(4, {{1, 3}}, [](auto& a) { add_cycle(a, 1, 4); }), false});
    check(cases.size() == 12, "suite size");
    for (auto const& c : cases) {
      check(is_pi(c.g) == c.expected, c.name);
      check(oracle::is_pi(c.g) == c.expected, c.name + " (oracle)");
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // 9. Catalog
  ////////////////////////////////////////////////////////////////////////

  void catalog_check(Check& check) {
    auto const report = catalog(OrientedGraph::cycle(3));
    check(report.pi, "C_3 is PI");
    check(report.components.size() == 1, "C_3 has one component");
    if (report.components.size() != 1) {
      return;
    }
    auto const&              ds = report.components[0].descriptors;
    std::size_t              one_dim = 0;
    std::vector<std::string> rules;
    for (auto const& d : ds) {
      if (std::holds_alternative<IdempotentInduced>(d)) {
        ++one_dim;
      } else {
        rules.push_back(std::get<MatrixTypeFamily>(d).dimension_rule());
      }
    }
    check(one_dim == 7, "7 one-dimensional descriptors");
    check(rules
              == std::vector<std::string>{
                  "dim 3 for lambda not in {0, -1}; dim 2 at lambda = -1",
                  "dim 3 for lambda not in {0, 1}; dim 1 at lambda = 1"},
          "family annotations");

    // product rule: (2^j - 1) per j-cycle, 2 per singleton
    auto const  g = OrientedGraph(4, {{1, 2}, {2, 3}, {3, 1}});
    std::size_t expected = 1;
    for (auto const& scc : strongly_connected_components(g)) {
      expected *= scc.size() == 1 ? 2 : (std::size_t(1) << scc.size()) - 1;
    }
    check(expected == 14, "product rule");
    check(catalog(g).one_dim_total == expected, "C_3 + singleton count");
  }

  ////////////////////////////////////////////////////////////////////////
  // 10. Determinism of the CLI golden tests
  ////////////////////////////////////////////////////////////////////////

  std::string quote(std::string const& s) {
    std::string out = "'";
    for (char c : s) {
      out += c == '\'' ? std::string("'\\''") : std::string(1, c);
    }
    return out + "'";
  }

  std::pair<std::string, int> run(std::string const& command) {
    std::string out;
    FILE*       pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) {
      return {"", -1};
    }
    std::array<char, 4096> buffer;
    std::size_t            got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
      out.append(buffer.data(), got);
    }
    int status = pclose(pipe);
    return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
  }

  std::string slurp(std::filesystem::path const& p) {
    std::ifstream      in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  void golden(Check& check, std::string const& hk, std::string const& dir) {
    namespace fs = std::filesystem;
    std::vector<fs::path> cases;
    for (auto const& entry : fs::directory_iterator(dir)) {
      if (entry.path().extension() == ".args") {
        cases.push_back(entry.path());
      }
    }
    std::sort(cases.begin(), cases.end());
    check(!cases.empty(), "no golden cases in " + dir);
    for (auto const& c : cases) {
      std::ifstream in(c);
      std::string   command = quote(hk), arg;
      while (std::getline(in, arg)) {
        command += " " + quote(arg);
      }
      command += " 2>/dev/null";
      auto        stem     = c.stem().string();
      auto        out_path = fs::path(c).replace_extension(".out");
      auto        code_path = fs::path(c).replace_extension(".code");
      int         expected_code = fs::exists(code_path) ? std::stoi(slurp(code_path)) : 0;
      auto const  first         = run(command);
      auto const  second        = run(command);
      check(first == second, stem + ": differs between runs");
      check(first.first == slurp(out_path), stem + ": output differs from golden file");
      check(first.second == expected_code, stem + ": exit code");
    }
  }
}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: acceptance HK_BINARY GOLDEN_DIR\n";
    return 2;
  }
  std::string const hk = argv[1], dir = argv[2];

  std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria{
      {"idempotent counts", idempotent_counts},
      {"f-map homomorphism and relation preservation", fmap_homomorphism},
      {"support formula for separated letters", support_formula},
      {"ideal levels of idempotents", idempotent_levels},
      {"sandwich data, ranks and determinants", sandwich_data},
      {"representations and their extension", representations},
      {"infiniteness witness", infiniteness},
      {"PI criterion suite", pi_suite},
      {"catalog", catalog_check},
      {"CLI golden determinism", [&](Check& c) { golden(c, hk, dir); }}};

  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Check check;
    try {
      criteria[k].second(check);
    } catch (std::exception const& e) {
      check.failures.push_back(std::string("exception: ") + e.what());
    }
    bool ok = check.failures.empty();
    all     = all && ok;
    std::cout << (ok ? "PASS" : "FAIL") << "  " << k + 1 << ". " << criteria[k].first
              << '\n';
    for (auto const& f : check.failures) {
      std::cout << "        " << f << '\n';
    }
  }
  return all ? 0 : 1;
}
