#include "hkmon/catalog.hpp"

#include <algorithm>
#include <limits>

namespace hkmon {

  std::string to_string(OneDimValue v) {
    switch (v) {
      case OneDimValue::zero:
        return "0";
      case OneDimValue::one:
        return "1";
      default:
        return "unknown";
    }
  }

  OneDimValue one_dim_rep(word_type const&      e,
                          EqualityOracle const& oracle,
                          word_type const&      probe) {
    auto const n = oracle.graph().size();
    validate_word(e, n);
    validate_word(probe, n);
    auto const square = oracle.are_equal(concat(e, e), e);
    if (!square.is_equal()) {
      throw DomainError("'" + to_label(e) + "' is not "
                        + (square.is_distinct() ? "an idempotent"
                                                : "provably idempotent")
                        + " (e e = e " + square.to_string() + ")");
    }
    auto const verdict = oracle.are_equal(concat(e, probe), e);
    if (verdict.is_equal()) {
      return OneDimValue::one;
    }
    if (verdict.is_distinct()) {
      return OneDimValue::zero;
    }
    return OneDimValue::unknown;
  }

  OneDimValue one_dim_rep(word_type const&     e,
                          OrientedGraph const& g,
                          word_type const&     probe,
                          std::size_t          budget) {
    return one_dim_rep(e, EqualityOracle(g, budget), probe);
  }

  std::string MatrixTypeFamily::dimension_rule() const {
    if (data_needed) {
      return "rank of user-supplied Pbar_" + std::to_string(level)
             + "(lambda)";
    }
    std::string out = "dim " + std::to_string(generic_dim)
                      + " for lambda not in {0";
    for (auto const& [lambda, dim] : exceptional) {
      out += ", " + to_string(lambda);
    }
    out += "}";
    for (auto const& [lambda, dim] : exceptional) {
      out += "; dim " + std::to_string(dim) + " at lambda = " + to_string(lambda);
    }
    if (!exceptional_complete) {
      out += "; rank also drops at the irrational roots of "
             + polynomial_to_string(determinant);
    }
    return out;
  }

  std::size_t one_dim_count(std::vector<RepDescriptor> const& descriptors) {
    return std::count_if(descriptors.begin(), descriptors.end(),
                         [](RepDescriptor const& d) {
                           return std::holds_alternative<IdempotentInduced>(d);
                         });
  }

  SandwichCatalog builtin_sandwiches() {
    return {{{3, 0}, c3_data(BuiltinData::m0)},
            {{3, 1}, c3_data(BuiltinData::m1)}};
  }

  namespace {
    word_type relabel(word_type const& w, std::vector<vertex_type> const& order) {
      word_type out;
      out.reserve(w.size());
      for (auto x : w) {
        out.push_back(static_cast<letter_type>(order[x - 1]));
      }
      return out;
    }

    MatrixTypeFamily family(std::size_t                     j,
                            std::size_t                     level,
                            std::vector<vertex_type> const& order,
                            SandwichCatalog const&          data) {
      MatrixTypeFamily f;
      f.level = level;
      f.size  = 1;
      for (std::size_t k = 1; k <= level + 1; ++k) {
        f.size = f.size * (j - k + 1) / k;
      }
      f.generator = relabel(snqi_word(j, level), order);
      auto it     = data.find({j, level});
      if (it == data.end()) {
        return f;
      }
      auto const& d = it->second;
      check_cycle_level_size(d, j, level);
      f.data_needed = false;
      f.determinant = sandwich_determinant(d);
      if (f.determinant.empty()) {
        throw DomainError("sandwich matrix for level " + std::to_string(level)
                          + " of C_" + std::to_string(j)
                          + " is singular over K[s]");
      }
      f.generic_dim = d.size();
      auto roots    = nonzero_rational_roots(f.determinant);
      for (auto const& r : roots.roots) {
        f.exceptional.emplace_back(r, rank(evaluate_sandwich(d, r)));
      }
      f.exceptional_complete = roots.complete;
      return f;
    }
  }  // namespace

  std::vector<RepDescriptor>
  component_descriptors(ComponentKind const&            kind,
                        std::vector<vertex_type> const& vertices,
                        SandwichCatalog const&          data) {
    std::vector<RepDescriptor> out;
    switch (kind.tag()) {
      case ComponentKind::Tag::singleton:
        if (vertices.size() != 1) {
          throw DomainError("a singleton component has exactly one vertex");
        }
        out.emplace_back(IdempotentInduced{{}, std::nullopt});
        out.emplace_back(IdempotentInduced{
            {static_cast<letter_type>(vertices.front())}, std::nullopt});
        return out;
      case ComponentKind::Tag::cycle: {
        auto const j = kind.length();
        if (vertices.size() != j) {
          throw DomainError("cycle component vertex list has the wrong length");
        }
        for (auto const& idem : all_idempotents(j)) {
          out.emplace_back(IdempotentInduced{relabel(idem.word, vertices),
                                             classify_level(idem.word, j)});
        }
        for (std::size_t level = 0; level + 2 <= j; ++level) {
          out.emplace_back(family(j, level, vertices, data));
        }
        return out;
      }
      default:
        throw DomainError("component of kind " + kind.to_string()
                          + " has no catalog (the graph is not PI)");
    }
  }

  CatalogReport catalog(OrientedGraph const& g, SandwichCatalog const& data) {
    CatalogReport report{g, is_pi(g), std::nullopt, {}, 0};
    if (!report.pi) {
      return report;
    }
    auto merged = builtin_sandwiches();
    for (auto const& [key, d] : data) {
      merged.insert_or_assign(key, d);
    }
    report.theta_prime  = cyclic_core(g);
    report.one_dim_total = 1;
    for (auto const& comp : components(*report.theta_prime)) {
      std::vector<vertex_type> order = comp.vertices;
      if (comp.kind.tag() == ComponentKind::Tag::cycle) {
        auto pos = cycle_positions(report.theta_prime->induced(comp.vertices));
        for (std::size_t k = 0; k < comp.vertices.size(); ++k) {
          order[(*pos)[k] - 1] = comp.vertices[k];
        }
      }
      auto descriptors = component_descriptors(comp.kind, order, merged);
      report.one_dim_total *= one_dim_count(descriptors);
      report.components.push_back({comp, std::move(order), std::move(descriptors)});
    }
    return report;
  }

  namespace {
    nlohmann::ordered_json arrows_json(OrientedGraph const& g) {
      auto out = nlohmann::ordered_json::array();
      for (auto [i, j] : g.arrows()) {
        out.push_back({i, j});
      }
      return out;
    }

    nlohmann::ordered_json descriptor_json(RepDescriptor const& d) {
      nlohmann::ordered_json out;
      if (auto const* idem = std::get_if<IdempotentInduced>(&d)) {
        out["type"]       = "idempotent";
        out["idempotent"] = to_label(idem->idempotent);
        out["level"] = idem->level ? idem->level->to_string() : std::string("-");
        out["dim"]   = 1;
        return out;
      }
      auto const& f      = std::get<MatrixTypeFamily>(d);
      out["type"]        = "matrix-type";
      out["level"]       = f.level;
      out["size"]        = f.size;
      out["generator"]   = to_label(f.generator);
      out["data_needed"] = f.data_needed;
      if (!f.data_needed) {
        out["determinant"] = polynomial_to_string(f.determinant);
        out["generic_dim"] = f.generic_dim;
        auto& ex = out["exceptional"] = nlohmann::ordered_json::array();
        for (auto const& [lambda, dim] : f.exceptional) {
          ex.push_back({{"lambda", to_string(lambda)}, {"dim", dim}});
        }
        out["exceptional_complete"] = f.exceptional_complete;
      }
      out["dimension_rule"] = f.dimension_rule();
      return out;
    }

    nlohmann::ordered_json integer_json(Integer const& x) {
      if (x <= Integer(std::numeric_limits<std::uint64_t>::max())) {
        return static_cast<std::uint64_t>(x);
      }
      return x.str();
    }

    constexpr char const* structure_note
        = "tensor-product of per-component choices";
    constexpr char const* prime_note
        = "minimal primes J_i: chains J_i < P below each maximal ideal P "
          "(symbolic only)";
  }  // namespace

  nlohmann::ordered_json to_json(CatalogReport const& report) {
    nlohmann::ordered_json out;
    out["schema"] = 1;
    out["graph"]  = {{"vertices", report.graph.size()},
                     {"arrows", arrows_json(report.graph)}};
    out["pi"]     = report.pi;
    if (!report.pi) {
      return out;
    }
    out["theta_prime"] = arrows_json(*report.theta_prime);
    auto& comps = out["components"] = nlohmann::ordered_json::array();
    for (auto const& c : report.components) {
      nlohmann::ordered_json item;
      item["vertices"] = c.order;
      item["kind"]     = c.component.kind.to_string();
      auto& ds = item["descriptors"] = nlohmann::ordered_json::array();
      for (auto const& d : c.descriptors) {
        ds.push_back(descriptor_json(d));
      }
      comps.push_back(std::move(item));
    }
    out["maximal_ideal_structure"] = structure_note;
    out["one_dim_count"]           = integer_json(report.one_dim_total);
    out["prime_chain"]             = prime_note;
    return out;
  }

  std::string to_text(CatalogReport const& report) {
    std::string out = "PI: " + std::string(report.pi ? "yes" : "no") + "\n";
    if (!report.pi) {
      return out;
    }
    out += "theta': " + std::to_string(report.theta_prime->arrows().size())
           + " arrows\n";
    for (auto [i, j] : report.theta_prime->arrows()) {
      out += "  " + std::to_string(i) + " -> " + std::to_string(j) + "\n";
    }
    for (std::size_t k = 0; k < report.components.size(); ++k) {
      auto const& c = report.components[k];
      out += "component " + std::to_string(k + 1) + ": "
             + c.component.kind.to_string() + " on";
      for (auto v : c.order) {
        out += " " + std::to_string(v);
      }
      out += "\n";
      for (auto const& d : c.descriptors) {
        if (auto const* idem = std::get_if<IdempotentInduced>(&d)) {
          out += "  phi_e  e = " + to_label(idem->idempotent);
          if (idem->level) {
            out += "  level " + idem->level->to_string();
          }
          out += "  dim 1\n";
        } else {
          auto const& f = std::get<MatrixTypeFamily>(d);
          out += "  psi_lambda  level " + std::to_string(f.level) + "  s = "
                 + to_label(f.generator) + "  size " + std::to_string(f.size)
                 + "\n";
          if (!f.data_needed) {
            out += "    det = " + polynomial_to_string(f.determinant) + "\n";
          }
          out += "    " + f.dimension_rule()
                 + (f.data_needed ? "  [data needed]" : "") + "\n";
        }
      }
    }
    out += "maximal ideals: " + std::string(structure_note) + "\n";
    out += "one-dimensional maximal ideals: " + report.one_dim_total.str() + "\n";
    out += std::string(prime_note) + "\n";
    return out;
  }

}  // namespace hkmon
