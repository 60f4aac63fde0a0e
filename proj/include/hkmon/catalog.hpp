// Irreducible representations of PI Hecke-Kiselman algebras: the
// one-dimensional representations induced by idempotents, the families
// psi_lambda attached to the semigroups of matrix type inside each cycle, and
// the per-component description of maximal ideals.

#ifndef HKMON_CATALOG_HPP_
#define HKMON_CATALOG_HPP_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"

#include "hkmon/cycle_monoid.hpp"
#include "hkmon/graph.hpp"
#include "hkmon/matrix_type.hpp"
#include "hkmon/rewrite.hpp"
#include "hkmon/word.hpp"

namespace hkmon {

  enum class OneDimValue : std::uint8_t { zero, one, unknown };

  //! `0`, `1` or `unknown`.
  std::string to_string(OneDimValue v);

  //! phi_e(probe) for the one-dimensional representation induced by the
  //! idempotent e: 1 when e probe = e is proved by a relation chain, 0 when
  //! e probe and e are certified distinct (the monoid is J-trivial, so then
  //! e probe lies strictly below e and phi_e vanishes on it), unknown
  //! otherwise. Throws DomainError unless e e = e can be proved.
  OneDimValue one_dim_rep(word_type const&      e,
                          EqualityOracle const& oracle,
                          word_type const&      probe);

  OneDimValue one_dim_rep(word_type const&     e,
                          OrientedGraph const& g,
                          word_type const&     probe,
                          std::size_t          budget = default_budget);

  //! A one-dimensional representation phi_e. `level` is the ideal level of
  //! e in its cycle component (absent for singleton components).
  struct IdempotentInduced {
    word_type                 idempotent;
    std::optional<IdealLevel> level;
  };

  //! The family psi_lambda, lambda != 0, of representations induced from
  //! the semigroup of matrix type at `level` of a cycle component.
  struct MatrixTypeFamily {
    std::size_t level;
    //! |A_i| = |B_i| = binomial(j, level + 1).
    std::size_t size;
    //! The generator s = x_j q_level of the cyclic semigroup.
    word_type generator;
    //! Everything below is populated only when sandwich data is known.
    bool                                            data_needed = true;
    std::vector<Rational>                           determinant;
    std::size_t                                     generic_dim = 0;
    std::vector<std::pair<Rational, std::size_t>>   exceptional;
    bool                                            exceptional_complete = true;

    //! E.g. `dim 3 for lambda not in {0, 1}; dim 1 at lambda = 1`.
    std::string dimension_rule() const;
  };

  using RepDescriptor = std::variant<IdempotentInduced, MatrixTypeFamily>;

  //! Number of IdempotentInduced entries.
  std::size_t one_dim_count(std::vector<RepDescriptor> const& descriptors);

  //! Sandwich data per (cycle length, level).
  using SandwichCatalog = std::map<std::pair<std::size_t, std::size_t>,
                                   MatrixTypeData>;

  //! The built-in data for C_3: level 0 -> M_0, level 1 -> M_1.
  SandwichCatalog builtin_sandwiches();

  //! Descriptors of a component with the given vertices (in cycle order for
  //! cycles, starting at the least vertex). Words are in the original vertex
  //! labels. Singleton -> phi_1 and phi_x; cycle(j) -> the 2^j - 1
  //! idempotents of C_j followed by one family per level 0..j-2. Throws
  //! DomainError for kind other, or when supplied data has the wrong size.
  std::vector<RepDescriptor>
  component_descriptors(ComponentKind const&            kind,
                        std::vector<vertex_type> const& vertices,
                        SandwichCatalog const&          data);

  struct CatalogComponent {
    Component                  component;
    //! Vertices in cycle order (or the single vertex).
    std::vector<vertex_type>   order;
    std::vector<RepDescriptor> descriptors;
  };

  struct CatalogReport {
    OrientedGraph                 graph;
    bool                          pi = false;
    std::optional<OrientedGraph>  theta_prime;
    std::vector<CatalogComponent> components;
    //! Product over components of their one-dimensional descriptor counts.
    Integer one_dim_total = 0;
  };

  //! The catalog for g; components and descriptors only when g is PI.
  //! `data` supplements the built-in C_3 data (user entries take priority).
  CatalogReport catalog(OrientedGraph const&   g,
                        SandwichCatalog const& data = {});

  nlohmann::ordered_json to_json(CatalogReport const& report);

  std::string to_text(CatalogReport const& report);

}  // namespace hkmon

#endif  // HKMON_CATALOG_HPP_
