#include "hkmon/cli.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "hkmon/catalog.hpp"
#include "hkmon/cycle_monoid.hpp"
#include "hkmon/graph.hpp"
#include "hkmon/matrix_type.hpp"
#include "hkmon/rational.hpp"
#include "hkmon/rewrite.hpp"
#include "hkmon/word.hpp"

namespace hkmon::cli {

  namespace {
    using json = nlohmann::ordered_json;

    class UsageError : public std::runtime_error {
     public:
      using std::runtime_error::runtime_error;
    };

    struct Options {
      std::vector<std::string> positionals;
      std::optional<std::size_t> cycle;
      std::optional<std::size_t> path;
      std::string                graph_file;
      std::size_t                budget = default_budget;
      std::string                lambda;
      std::string                data_file;
      std::string                builtin;
      std::size_t                kmax = 5;
      long                       lo   = -3;
      long                       hi   = 3;
      std::vector<std::string>   sandwiches;
      bool                       json_output = false;
    };

    ////////////////////////////////////////////////////////////////////////
    // Input helpers
    ////////////////////////////////////////////////////////////////////////

    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw UsageError("cannot open input file '" + path + "'");
      }
      std::ostringstream buffer;
      buffer << in.rdbuf();
      return buffer.str();
    }

    OrientedGraph load_graph(std::string const& path) {
      auto text = read_file(path);
      try {
        return parse_graph(text);
      } catch (ParseError const& e) {
        throw DomainError(path + ": " + e.what());
      }
    }

    // The graph comes from --cycle, --path, --graph or else the first
    // positional argument, which is then consumed.
    OrientedGraph graph_from(Options& o) {
      int sources = o.cycle.has_value() + o.path.has_value() + !o.graph_file.empty();
      if (sources > 1) {
        throw UsageError("give at most one of --cycle, --path, --graph");
      }
      if (o.cycle) {
        return OrientedGraph::cycle(*o.cycle);
      }
      if (o.path) {
        return OrientedGraph::path(*o.path);
      }
      if (!o.graph_file.empty()) {
        return load_graph(o.graph_file);
      }
      if (o.positionals.empty()) {
        throw UsageError("no graph given (use a graph file, --cycle n or --path n)");
      }
      auto file = o.positionals.front();
      o.positionals.erase(o.positionals.begin());
      return load_graph(file);
    }

    // Words containing `x` are labels (`x1x2`, `1` is then the identity);
    // otherwise space separated generator indices with `e` for the identity.
    word_type word_from(std::string const& text, OrientedGraph const& g) {
      auto w = text.find('x') != std::string::npos ? parse_label(text)
                                                   : parse_word(text);
      validate_word(w, g.size());
      return w;
    }

    std::vector<word_type> words_from(Options const&       o,
                                      OrientedGraph const& g,
                                      std::size_t          count) {
      if (o.positionals.size() != count) {
        throw UsageError("expected " + std::to_string(count) + " word argument"
                         + (count == 1 ? "" : "s") + ", got "
                         + std::to_string(o.positionals.size()));
      }
      std::vector<word_type> out;
      for (auto const& p : o.positionals) {
        out.push_back(word_from(p, g));
      }
      return out;
    }

    void no_positionals(Options const& o) {
      if (!o.positionals.empty()) {
        throw UsageError("unexpected argument '" + o.positionals.front() + "'");
      }
    }

    std::size_t standard_cycle_size(OrientedGraph const& g) {
      if (!is_standard_cycle(g)) {
        throw DomainError("this command needs the cycle 1 -> 2 -> ... -> n -> 1 "
                          "(use --cycle n)");
      }
      return g.size();
    }

    Rational lambda_from(Options const& o) {
      if (o.lambda.empty()) {
        throw UsageError("--lambda p/q is required");
      }
      Rational lambda;
      try {
        lambda = parse_rational(o.lambda);
      } catch (DomainError const& e) {
        throw UsageError(std::string("--lambda: ") + e.what());
      }
      if (lambda == 0) {
        throw UsageError("--lambda 0 is not allowed: at lambda = 0 the "
                         "representation degenerates to the zero map");
      }
      return lambda;
    }

    MatrixTypeData data_from(Options const& o) {
      if (!o.builtin.empty() && !o.data_file.empty()) {
        throw UsageError("give only one of --builtin and --data");
      }
      if (o.builtin == "M0" || o.builtin == "m0") {
        return c3_data(BuiltinData::m0);
      }
      if (o.builtin == "M1" || o.builtin == "m1") {
        return c3_data(BuiltinData::m1);
      }
      if (!o.builtin.empty()) {
        throw UsageError("--builtin must be M0 or M1");
      }
      if (o.data_file.empty()) {
        throw UsageError("sandwich data required (--builtin M0|M1 or --data FILE)");
      }
      auto text = read_file(o.data_file);
      try {
        return parse_sandwich(text);
      } catch (ParseError const& e) {
        throw DomainError(o.data_file + ": " + e.what());
      }
    }

    // LEN:LEVEL:FILE
    SandwichCatalog sandwiches_from(Options const& o) {
      SandwichCatalog out;
      for (auto const& arg : o.sandwiches) {
        auto first  = arg.find(':');
        auto second = first == std::string::npos ? first : arg.find(':', first + 1);
        if (second == std::string::npos) {
          throw UsageError("--sandwich expects LEN:LEVEL:FILE, got '" + arg + "'");
        }
        std::size_t len = 0, level = 0;
        try {
          len   = std::stoul(arg.substr(0, first));
          level = std::stoul(arg.substr(first + 1, second - first - 1));
        } catch (std::exception const&) {
          throw UsageError("--sandwich expects LEN:LEVEL:FILE, got '" + arg + "'");
        }
        auto path = arg.substr(second + 1);
        auto text = read_file(path);
        try {
          auto d = parse_sandwich(text);
          check_cycle_level_size(d, len, level);
          out.insert_or_assign({len, level}, std::move(d));
        } catch (ParseError const& e) {
          throw DomainError(path + ": " + e.what());
        }
      }
      return out;
    }

    ////////////////////////////////////////////////////////////////////////
    // Output helpers
    ////////////////////////////////////////////////////////////////////////

    json arrows_json(OrientedGraph const& g) {
      auto out = json::array();
      for (auto [i, j] : g.arrows()) {
        out.push_back({i, j});
      }
      return out;
    }

    json words_json(std::vector<word_type> const& ws) {
      auto out = json::array();
      for (auto const& w : ws) {
        out.push_back(to_label(w));
      }
      return out;
    }

    void print_matrix(std::ostream& out, RationalMatrix const& m, char const* indent) {
      for (auto const& row : m.to_strings()) {
        out << indent;
        for (std::size_t c = 0; c < row.size(); ++c) {
          out << (c ? " " : "") << row[c];
        }
        out << '\n';
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // Subcommands
    ////////////////////////////////////////////////////////////////////////

    int cmd_pi_check(Options& o, std::ostream& out) {
      auto g = graph_from(o);
      no_positionals(o);
      bool pi = is_pi(g);
      if (o.json_output) {
        out << json{{"pi", pi}}.dump(2) << '\n';
      } else {
        out << "PI: " << (pi ? "yes" : "no") << '\n';
      }
      return success;
    }

    int cmd_core(Options& o, std::ostream& out) {
      auto g = graph_from(o);
      no_positionals(o);
      auto core = cyclic_core(g);
      if (o.json_output) {
        out << json{{"vertices", core.size()}, {"arrows", arrows_json(core)}}.dump(2)
            << '\n';
      } else {
        out << to_edge_list(core);
      }
      return success;
    }

    int cmd_components(Options& o, std::ostream& out) {
      auto g = graph_from(o);
      no_positionals(o);
      auto comps = components(g);
      if (o.json_output) {
        auto arr = json::array();
        for (auto const& c : comps) {
          arr.push_back({{"vertices", c.vertices}, {"kind", c.kind.to_string()}});
        }
        out << arr.dump(2) << '\n';
        return success;
      }
      for (auto const& c : comps) {
        out << c.kind.to_string() << ":";
        for (auto v : c.vertices) {
          out << ' ' << v;
        }
        out << '\n';
      }
      return success;
    }

    int cmd_idempotents(Options& o, std::ostream& out) {
      auto g = graph_from(o);
      no_positionals(o);
      std::vector<word_type> words;
      if (is_acyclic(g)) {
        words = idempotents_acyclic(g);
      } else if (is_standard_cycle(g)) {
        for (auto const& idem : all_idempotents(g.size())) {
          words.push_back(idem.word);
        }
      } else {
        throw DomainError("idempotents are listed for acyclic graphs and for "
                          "the cycle 1 -> 2 -> ... -> n -> 1 only");
      }
      if (o.json_output) {
        out << json{{"count", words.size()}, {"idempotents", words_json(words)}}.dump(2)
            << '\n';
      } else {
        for (auto const& w : words) {
          out << to_label(w) << '\n';
        }
      }
      return success;
    }

    int cmd_normalize(Options& o, std::ostream& out) {
      auto       g  = graph_from(o);
      auto const w  = words_from(o, g, 1).front();
      auto const nf = normalize(w, g, o.budget);
      if (o.json_output) {
        out << json{{"input", to_label(w)},
                    {"normal_form", to_label(nf.word)},
                    {"complete", nf.complete}}
                   .dump(2)
            << '\n';
      } else {
        out << to_label(nf.word) << (nf.complete ? "" : "  (budget exhausted)")
            << '\n';
      }
      return success;
    }

    int cmd_equal(Options& o, std::ostream& out) {
      auto       g  = graph_from(o);
      auto const ws = words_from(o, g, 2);
      EqualityOracle oracle(g, o.budget);
      auto const     verdict = oracle.are_equal(ws[0], ws[1]);
      json           j;
      std::string    text;
      if (verdict.is_equal()) {
        j["verdict"] = "equal";
        j["chain"]   = words_json(verdict.chain());
        text         = "equal\n";
        for (auto const& w : verdict.chain()) {
          text += "  " + to_label(w) + "\n";
        }
      } else if (verdict.is_distinct()) {
        j["verdict"] = "distinct";
        if (auto const* a = std::get_if<AffineWitness>(&verdict.witness())) {
          j["witness"] = {{"kind", "f-map"},
                          {"left", a->left.to_string()},
                          {"right", a->right.to_string()}};
          text = "distinct\n  f-map " + a->left.to_string() + "\n  f-map "
                 + a->right.to_string() + "\n";
        } else {
          auto const& e = std::get<EnumerationWitness>(verdict.witness());
          j["witness"]  = {{"kind", "enumeration"},
                           {"left", to_label(e.left)},
                           {"right", to_label(e.right)}};
          text = "distinct\n  canonical " + to_label(e.left) + "\n  canonical "
                 + to_label(e.right) + "\n";
        }
      } else {
        j["verdict"] = "unknown";
        text         = "unknown (budget " + std::to_string(o.budget) + ")\n";
      }
      out << (o.json_output ? j.dump(2) + "\n" : text);
      return success;
    }

    int cmd_fmap(Options& o, std::ostream& out) {
      auto       g = graph_from(o);
      auto const n = standard_cycle_size(g);
      auto const w = words_from(o, g, 1).front();
      auto const f = f_map(w, n);
      if (o.json_output) {
        out << json{{"word", to_label(w)},
                    {"source", f.source()},
                    {"offset", f.offset()}}
                   .dump(2)
            << '\n';
      } else {
        out << f.to_string() << '\n';
      }
      return success;
    }

    int cmd_support(Options& o, std::ostream& out) {
      auto       g    = graph_from(o);
      auto const n    = standard_cycle_size(g);
      auto const w    = words_from(o, g, 1).front();
      auto const supp = support(f_map(w, n));
      if (o.json_output) {
        out << json{{"word", to_label(w)}, {"support", supp}}.dump(2) << '\n';
      } else {
        out << "{";
        for (std::size_t k = 0; k < supp.size(); ++k) {
          out << (k ? ", " : "") << supp[k];
        }
        out << "}\n";
      }
      return success;
    }

    int cmd_classify(Options& o, std::ostream& out) {
      auto       g     = graph_from(o);
      auto const n     = standard_cycle_size(g);
      auto const w     = words_from(o, g, 1).front();
      auto const level = classify_level(w, n);
      if (o.json_output) {
        out << json{{"word", to_label(w)},
                    {"level", level.to_string()},
                    {"support_size", level.support_size}}
                   .dump(2)
            << '\n';
      } else {
        out << level.to_string() << '\n';
      }
      return success;
    }

    int cmd_phi(Options& o, std::ostream& out) {
      auto           g  = graph_from(o);
      auto const     ws = words_from(o, g, 2);
      EqualityOracle oracle(g, o.budget);
      auto const     value = one_dim_rep(ws[0], oracle, ws[1]);
      if (o.json_output) {
        out << json{{"idempotent", to_label(ws[0])},
                    {"probe", to_label(ws[1])},
                    {"value", to_string(value)}}
                   .dump(2)
            << '\n';
      } else {
        out << to_string(value) << '\n';
      }
      return success;
    }

    int cmd_sandwich(Options& o, std::ostream& out) {
      no_positionals(o);
      auto const d   = data_from(o);
      auto const det = sandwich_determinant(d);
      std::optional<Rational> lambda;
      if (!o.lambda.empty()) {
        lambda = lambda_from(o);
      }
      if (o.json_output) {
        json entries = json::array();
        for (std::size_t b = 1; b <= d.size(); ++b) {
          json row = json::array();
          for (std::size_t a = 1; a <= d.size(); ++a) {
            row.push_back(d.entry(b, a).to_string());
          }
          entries.push_back(std::move(row));
        }
        json j{{"size", d.size()},
               {"rows", words_json(d.row_labels())},
               {"cols", words_json(d.col_labels())},
               {"entries", std::move(entries)},
               {"determinant", polynomial_to_string(det)}};
        if (lambda) {
          auto m          = evaluate_sandwich(d, *lambda);
          j["lambda"]     = to_string(*lambda);
          j["evaluated"]  = m.to_strings();
          j["rank"]       = rank(m);
        }
        out << j.dump(2) << '\n';
        return success;
      }
      out << to_text(d) << "det = " << polynomial_to_string(det) << '\n';
      if (lambda) {
        auto m = evaluate_sandwich(d, *lambda);
        out << "at lambda = " << to_string(*lambda) << ":\n";
        print_matrix(out, m, "  ");
        out << "rank = " << rank(m) << '\n';
      }
      return success;
    }

    int cmd_rep(Options& o, std::ostream& out) {
      no_positionals(o);
      auto const d   = data_from(o);
      auto const rep = build_rep(d, lambda_from(o));
      if (o.json_output) {
        out << to_json(rep, d).dump(2) << '\n';
        return success;
      }
      out << "lambda = " << to_string(rep.lambda()) << "\ndim = " << rep.dimension()
          << '\n';
      for (std::size_t a = 1; a <= d.size(); ++a) {
        for (std::size_t b = 1; b <= d.size(); ++b) {
          auto const x = MatrixTypeElement::make(1, a, b);
          out << x.to_string() << " ->\n";
          print_matrix(out, rep.image(x), "  ");
        }
      }
      return success;
    }

    int cmd_verify(Options& o, std::ostream& out) {
      no_positionals(o);
      if (o.kmax == 0) {
        throw UsageError("--kmax must be at least 1");
      }
      auto const d   = data_from(o);
      auto const rep = build_rep(d, lambda_from(o));
      bool const ok  = verify_homomorphism(rep, d, o.kmax);
      if (o.json_output) {
        out << json{{"lambda", to_string(rep.lambda())},
                    {"dim", rep.dimension()},
                    {"kmax", o.kmax},
                    {"homomorphism", ok}}
                   .dump(2)
            << '\n';
      } else {
        out << "homomorphism (kmax " << o.kmax << ", dim " << rep.dimension()
            << "): " << (ok ? "ok" : "FAILED") << '\n';
      }
      return ok ? success : domain_error;
    }

    int cmd_extend(Options& o, std::ostream& out) {
      no_positionals(o);
      if (o.lo > o.hi) {
        throw UsageError("--from must not exceed --to");
      }
      auto const d   = data_from(o);
      auto const ext = extend_rep(build_rep(d, lambda_from(o)), d);
      bool const ok  = verify_extension(ext, d, o.lo, o.hi);
      if (o.json_output) {
        out << json{{"lambda", to_string(ext.lambda())},
                    {"idempotent", ext.idempotent().to_strings()},
                    {"range", {o.lo, o.hi}},
                    {"multiplicative", ok}}
                   .dump(2)
            << '\n';
      } else {
        out << "e =\n";
        print_matrix(out, ext.idempotent(), "  ");
        out << "multiplicative for exponents " << o.lo << ".." << o.hi << ": "
            << (ok ? "ok" : "FAILED") << '\n';
      }
      return ok ? success : domain_error;
    }

    int cmd_catalog(Options& o, std::ostream& out) {
      auto g    = graph_from(o);
      no_positionals(o);
      auto report = catalog(g, sandwiches_from(o));
      out << (o.json_output ? to_json(report).dump(2) + "\n" : to_text(report));
      return success;
    }

    struct Command {
      char const*                          name;
      char const*                          description;
      std::function<int(Options&, std::ostream&)> run;
      bool                                 graph;
      bool                                 data;
      char const*                          positional_help;
    };

    std::vector<Command> const& commands() {
      static std::vector<Command> const all = {
          {"pi-check", "Decide whether the algebra of the graph is PI", cmd_pi_check,
           true, false, "GRAPH"},
          {"core", "Print the cyclic core (arrows lying on directed cycles)",
           cmd_core, true, false, "GRAPH"},
          {"components", "Weakly connected components and their kinds",
           cmd_components, true, false, "GRAPH"},
          {"idempotents", "List the idempotents (acyclic graphs and C_n)",
           cmd_idempotents, true, false, "GRAPH"},
          {"normalize", "Shortlex least word reachable by relations",
           cmd_normalize, true, false, "[GRAPH] WORD"},
          {"equal", "Decide equality of two words (equal/distinct/unknown)",
           cmd_equal, true, false, "[GRAPH] U V"},
          {"fmap", "The affine map f(w) of a word of C_n", cmd_fmap, true, false,
           "WORD"},
          {"support", "Support of f(w)", cmd_support, true, false, "WORD"},
          {"classify", "Ideal level certified by the support of f(w)",
           cmd_classify, true, false, "WORD"},
          {"phi", "Value of the one-dimensional representation phi_e at a word",
           cmd_phi, true, false, "[GRAPH] E WORD"},
          {"sandwich", "Show sandwich data, its determinant and Pbar(lambda)",
           cmd_sandwich, false, true, ""},
          {"rep", "The representation psi_lambda", cmd_rep, false, true, ""},
          {"verify", "Check psi_lambda is multiplicative up to exponent kmax",
           cmd_verify, false, true, ""},
          {"extend", "Extend psi_lambda to integer exponents and check it",
           cmd_extend, false, true, ""},
          {"catalog", "Irreducible representation catalog of a PI graph",
           cmd_catalog, true, false, "GRAPH"},
      };
      return all;
    }
  }  // namespace

  int run(std::vector<std::string> const& args,
          std::ostream&                   out,
          std::ostream&                   err) {
    CLI::App app{"Hecke-Kiselman monoids: words, ideals and representations", "hk"};
    app.require_subcommand(1, 1);
    Options                            o;
    std::map<CLI::App*, Command const*> lookup;
    for (auto const& c : commands()) {
      auto* sub = app.add_subcommand(c.name, c.description);
      sub->add_flag("--json", o.json_output, "JSON output");
      sub->add_option("args", o.positionals, c.positional_help);
      if (c.graph) {
        sub->add_option("--cycle", o.cycle, "Use the oriented cycle C_n");
        sub->add_option("--path", o.path, "Use the path 1 -> 2 -> ... -> n");
        sub->add_option("--graph", o.graph_file, "Graph file");
        sub->add_option("--budget", o.budget, "Saturation budget (words visited)");
      }
      if (c.data) {
        sub->add_option("--builtin", o.builtin, "Built-in C_3 data: M0 or M1");
        sub->add_option("--data", o.data_file, "Sandwich data file");
        sub->add_option("--lambda", o.lambda, "Nonzero rational p/q");
      }
      if (std::string(c.name) == "verify") {
        sub->add_option("--kmax", o.kmax, "Largest exponent checked")
            ->capture_default_str();
      }
      if (std::string(c.name) == "extend") {
        sub->add_option("--from", o.lo, "Least exponent checked")->capture_default_str();
        sub->add_option("--to", o.hi, "Largest exponent checked")->capture_default_str();
      }
      if (std::string(c.name) == "catalog") {
        sub->add_option("--sandwich", o.sandwiches,
                        "Sandwich data LEN:LEVEL:FILE for level LEVEL of C_LEN");
      }
      lookup[sub] = &c;
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
      app.parse(reversed);
    } catch (CLI::ParseError const& e) {
      auto code = app.exit(e, out, err);
      return code == 0 ? success : usage_error;
    }

    auto* sub = app.get_subcommands().front();
    try {
      if (o.budget == 0) {
        throw UsageError("--budget must be positive");
      }
      return lookup.at(sub)->run(o, out);
    } catch (UsageError const& e) {
      err << "hk " << sub->get_name() << ": usage error: " << e.what() << '\n';
      return usage_error;
    } catch (DomainError const& e) {
      err << "hk " << sub->get_name() << ": " << e.what() << '\n';
      return domain_error;
    } catch (std::exception const& e) {
      err << "hk " << sub->get_name() << ": error: " << e.what() << '\n';
      return domain_error;
    }
  }

}  // namespace hkmon::cli
