// Word-level machinery for an arbitrary Hecke-Kiselman monoid HK_G: the
// defining relations, bounded saturation (normal forms and equality chains),
// and exhaustive enumeration of finite monoids.

#ifndef HKMON_REWRITE_HPP_
#define HKMON_REWRITE_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hkmon/cycle_monoid.hpp"
#include "hkmon/graph.hpp"
#include "hkmon/word.hpp"

namespace hkmon {

  //! Visited-word limit for one saturation query.
  inline constexpr std::size_t default_budget = 200'000;

  //! Element limit used when an equality query falls back to enumerating a
  //! finite monoid.
  inline constexpr std::size_t default_enumeration_cap = 20'000;

  struct Rule {
    enum class Kind : std::uint8_t { idempotency, commutation, collapse };

    word_type lhs;
    word_type rhs;
    Kind      kind;

    bool operator==(Rule const&) const = default;
  };

  //! The defining relations of HK_G, each oriented towards its shortlex
  //! smaller side:
  //!   x_i x_i = x_i                         for every vertex,
  //!   x_j x_i = x_i x_j  (i < j)            for unconnected i, j,
  //!   x_i x_j x_i = x_i x_j, x_j x_i x_j = x_i x_j   for every arrow i -> j.
  class RelationSet {
   public:
    explicit RelationSet(OrientedGraph const& g);

    std::vector<Rule> const& rules() const noexcept {
      return _rules;
    }

    std::size_t count(Rule::Kind kind) const noexcept;

    std::size_t size() const noexcept {
      return _rules.size();
    }

    std::size_t generators() const noexcept {
      return _n;
    }

    //! True iff `to` arises from `from` by replacing one occurrence of one
    //! side of a relation by the other side.
    bool is_single_step(word_type const& from, word_type const& to) const;

    //! True iff consecutive words of `chain` are single steps apart.
    bool replays(std::vector<word_type> const& chain) const;

   private:
    std::size_t       _n;
    std::vector<Rule> _rules;
  };

  inline RelationSet relations(OrientedGraph const& g) {
    return RelationSet(g);
  }

  struct NormalForm {
    word_type   word;
    bool        complete = true;  // false if the budget ran out
    std::size_t visited  = 0;
  };

  //! Shortlex least word reachable from w through relation applications
  //! whose intermediate words never exceed |w| letters.
  NormalForm normalize(word_type const&     w,
                       OrientedGraph const& g,
                       std::size_t          budget = default_budget);

  //! Separating certificate: f-maps of the two words disagree (cycle graphs).
  struct AffineWitness {
    AffineMap left;
    AffineMap right;
  };

  //! Separating certificate: the words reach different elements of a fully
  //! enumerated and verified finite monoid.
  struct EnumerationWitness {
    word_type left;
    word_type right;
  };

  class EqualityVerdict {
   public:
    enum class Tag : std::uint8_t { equal, distinct, unknown };

    static EqualityVerdict equal(std::vector<word_type> chain) {
      EqualityVerdict v(Tag::equal);
      v._chain = std::move(chain);
      return v;
    }

    static EqualityVerdict
    distinct(std::variant<AffineWitness, EnumerationWitness> witness) {
      EqualityVerdict v(Tag::distinct);
      v._witness = std::move(witness);
      return v;
    }

    static EqualityVerdict unknown() {
      return EqualityVerdict(Tag::unknown);
    }

    Tag tag() const noexcept {
      return _tag;
    }

    bool is_equal() const noexcept {
      return _tag == Tag::equal;
    }

    bool is_distinct() const noexcept {
      return _tag == Tag::distinct;
    }

    bool is_unknown() const noexcept {
      return _tag == Tag::unknown;
    }

    //! For equal verdicts: u = chain.front(), ..., chain.back() = v.
    std::vector<word_type> const& chain() const noexcept {
      return _chain;
    }

    //! For distinct verdicts.
    std::variant<AffineWitness, EnumerationWitness> const& witness() const {
      return *_witness;
    }

    std::string to_string() const;

   private:
    explicit EqualityVerdict(Tag tag) : _tag(tag) {}

    Tag                                                            _tag;
    std::vector<word_type>                                         _chain;
    std::optional<std::variant<AffineWitness, EnumerationWitness>> _witness;
  };

  //! A finite monoid HK_G listed by canonical words, with its right Cayley
  //! graph. `verified` holds when the generator actions on the element list
  //! satisfy every defining relation and each element is reached from the
  //! identity by its own word; in that case the list is exactly HK_G with no
  //! repetitions.
  class MonoidEnumeration {
   public:
    std::vector<word_type> const& elements() const noexcept {
      return _elements;
    }

    std::size_t size() const noexcept {
      return _elements.size();
    }

    bool verified() const noexcept {
      return _verified;
    }

    //! Index of s * w.
    std::size_t act(std::size_t s, word_type const& w) const;

    //! Index of the element represented by w.
    std::size_t find(word_type const& w) const {
      return act(0, w);
    }

    //! Index of the product of two elements.
    std::size_t multiply(std::size_t s, std::size_t t) const {
      return act(s, _elements[t]);
    }

    bool is_idempotent(std::size_t s) const {
      return multiply(s, s) == s;
    }

    //! Relation chain from w to the canonical word of find(w).
    std::vector<word_type> chain_to_canonical(word_type const& w) const;

   private:
    friend MonoidEnumeration enumerate_monoid(OrientedGraph const&,
                                              std::size_t,
                                              std::size_t);

    std::size_t                                      _n = 0;
    std::vector<word_type>                           _elements;
    std::vector<std::vector<std::size_t>>            _right;
    std::vector<std::vector<std::vector<word_type>>> _chains;
    bool                                             _verified = false;
  };

  //! Thrown when enumeration exceeds its element cap.
  class CapExceeded : public DomainError {
   public:
    CapExceeded(std::size_t cap, std::vector<word_type> partial)
        : DomainError("monoid has more than " + std::to_string(cap)
                      + " elements (enumeration stopped)"),
          _partial(std::move(partial)) {}

    std::vector<word_type> const& partial() const noexcept {
      return _partial;
    }

   private:
    std::vector<word_type> _partial;
  };

  //! Closure of the identity under right multiplication by generators,
  //! normalizing each product. Throws CapExceeded past `cap` elements.
  MonoidEnumeration enumerate_monoid(OrientedGraph const& g,
                                     std::size_t          cap,
                                     std::size_t budget = default_budget);

  //! The 2^n idempotents e_X of an acyclic HK_G: for each vertex set X (in
  //! bitmask order), the product of its generators in topological order.
  std::vector<word_type> idempotents_acyclic(OrientedGraph const& g);

  //! Equality queries against one graph. Builds the monoid enumeration of an
  //! acyclic graph lazily, at most once per oracle.
  class EqualityOracle {
   public:
    explicit EqualityOracle(OrientedGraph       g,
                            std::size_t         budget = default_budget,
                            std::size_t cap = default_enumeration_cap);

    //! Equal when a relation chain joins u and v (found by saturating both
    //! words up to max(|u|, |v|) letters, or through a verified enumeration);
    //! Distinct when an invariant separates them; Unknown otherwise.
    EqualityVerdict are_equal(word_type const& u, word_type const& v) const;

    OrientedGraph const& graph() const noexcept {
      return _graph;
    }

    RelationSet const& relation_set() const noexcept {
      return _relations;
    }

    //! The verified enumeration when g is acyclic and small enough.
    MonoidEnumeration const* enumeration() const;

   private:
    std::optional<std::vector<word_type>> meet(word_type const& u,
                                               word_type const& v,
                                               std::size_t      maxlen,
                                               std::size_t      budget) const;

    OrientedGraph                                   _graph;
    RelationSet                                     _relations;
    std::size_t                                     _budget;
    std::size_t                                     _cap;
    std::optional<std::vector<vertex_type>>         _cycle;
    mutable bool                                    _enumeration_tried = false;
    mutable std::unique_ptr<MonoidEnumeration>      _enumeration;
  };

  EqualityVerdict are_equal(word_type const&     u,
                            word_type const&     v,
                            OrientedGraph const& g,
                            std::size_t          budget = default_budget);

}  // namespace hkmon

#endif  // HKMON_REWRITE_HPP_
