// Oriented graphs presenting Hecke-Kiselman monoids, and the graph-level
// analysis used everywhere else: strongly connected components, the PI
// criterion, the cyclic core, and acyclic full subgraphs.

#ifndef HKMON_GRAPH_HPP_
#define HKMON_GRAPH_HPP_

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace hkmon {

  using vertex_type = std::size_t;
  using arrow_type  = std::pair<vertex_type, vertex_type>;
  using vertex_set  = std::vector<vertex_type>;

  //! A finite simple oriented graph on the vertices 1..n.
  //!
  //! There are no loops and at most one arrow between any two vertices, so
  //! i -> j and j -> i never coexist. Arrows are kept sorted.
  class OrientedGraph {
   public:
    OrientedGraph() = default;

    //! Throws DomainError on a loop, a repeated arrow, an arrow in both
    //! directions, or an endpoint outside 1..n.
    OrientedGraph(std::size_t n, std::vector<arrow_type> arrows);

    //! The oriented cycle 1 -> 2 -> ... -> n -> 1 (n >= 3).
    static OrientedGraph cycle(std::size_t n);

    //! The path 1 -> 2 -> ... -> n.
    static OrientedGraph path(std::size_t n);

    std::size_t size() const noexcept {
      return _n;
    }

    std::vector<arrow_type> const& arrows() const noexcept {
      return _arrows;
    }

    bool has_arrow(vertex_type i, vertex_type j) const noexcept;

    //! True if there is an arrow between i and j in either direction.
    bool connected(vertex_type i, vertex_type j) const noexcept {
      return has_arrow(i, j) || has_arrow(j, i);
    }

    std::vector<vertex_type> const& out_neighbours(vertex_type v) const {
      return _out[v - 1];
    }

    std::vector<vertex_type> const& in_neighbours(vertex_type v) const {
      return _in[v - 1];
    }

    //! Induced subgraph on `vertices` (sorted), relabelled 1..k in order.
    OrientedGraph induced(vertex_set const& vertices) const;

    bool operator==(OrientedGraph const&) const = default;

   private:
    std::size_t                           _n = 0;
    std::vector<arrow_type>               _arrows;
    std::vector<std::vector<vertex_type>> _out;
    std::vector<std::vector<vertex_type>> _in;
  };

  //! Parse the edge-list format: first line the vertex count, then one
  //! `u -> v` per line. Blank lines and lines starting with `#` are skipped.
  //! Throws ParseError naming the offending line.
  OrientedGraph parse_graph(std::string_view text);

  //! Inverse of parse_graph; arrows in sorted order, LF line endings.
  std::string to_edge_list(OrientedGraph const& g);

  //! Strongly connected components, each sorted, ordered by least vertex.
  std::vector<vertex_set> strongly_connected_components(OrientedGraph const& g);

  //! True iff every vertex of g lies on no directed cycle.
  bool is_acyclic(OrientedGraph const& g);

  //! A topological order of an acyclic graph; ties broken by least index.
  //! Throws DomainError if g has a directed cycle.
  std::vector<vertex_type> topological_order(OrientedGraph const& g);

  //! Whether the Hecke-Kiselman algebra of g satisfies a polynomial
  //! identity: every strongly connected component is a single vertex or a
  //! chordless oriented cycle, and no directed path joins two distinct
  //! non-trivial components.
  bool is_pi(OrientedGraph const& g);

  //! The subgraph keeping only the arrows lying on some directed cycle,
  //! i.e. those whose endpoints share a strongly connected component.
  OrientedGraph cyclic_core(OrientedGraph const& g);

  class ComponentKind {
   public:
    enum class Tag : std::uint8_t { singleton, cycle, other };

    static ComponentKind singleton() noexcept {
      return ComponentKind(Tag::singleton, 1);
    }

    static ComponentKind cycle(std::size_t length) noexcept {
      return ComponentKind(Tag::cycle, length);
    }

    static ComponentKind other(std::size_t vertices) noexcept {
      return ComponentKind(Tag::other, vertices);
    }

    Tag tag() const noexcept {
      return _tag;
    }

    //! Vertex count of the component (the cycle length for cycles).
    std::size_t length() const noexcept {
      return _length;
    }

    //! `singleton`, `cycle(j)` or `other`.
    std::string to_string() const;

    bool operator==(ComponentKind const&) const = default;

   private:
    ComponentKind(Tag tag, std::size_t length) : _tag(tag), _length(length) {}

    Tag         _tag;
    std::size_t _length;
  };

  struct Component {
    vertex_set    vertices;
    ComponentKind kind;
  };

  //! Weakly connected components ordered by least vertex, each classified.
  //! A component is a cycle when every vertex has in- and out-degree one
  //! inside it.
  std::vector<Component> components(OrientedGraph const& g);

  //! If g is a single oriented cycle through all its vertices, returns
  //! `pos` with pos[v - 1] the position of v on the cycle that starts at
  //! vertex 1, so that every arrow goes from position k to k + 1 (mod n).
  std::optional<std::vector<vertex_type>>
  cycle_positions(OrientedGraph const& g);

  //! True iff g is literally 1 -> 2 -> ... -> n -> 1.
  bool is_standard_cycle(OrientedGraph const& g);

  //! Lazy sequence of the vertex sets X such that the full subgraph of g on
  //! X has no directed cycle. Subsets are visited as a binary counter over
  //! the bitmask (vertex v is bit v - 1), so the empty set comes first.
  class AcyclicSubsets {
   public:
    class iterator {
     public:
      using iterator_category = std::input_iterator_tag;
      using value_type        = vertex_set;
      using difference_type   = std::ptrdiff_t;
      using pointer           = vertex_set const*;
      using reference         = vertex_set const&;

      iterator() = default;

      reference operator*() const {
        return _current;
      }

      pointer operator->() const {
        return &_current;
      }

      iterator& operator++();

      iterator operator++(int) {
        auto copy = *this;
        ++*this;
        return copy;
      }

      bool operator==(iterator const& that) const noexcept {
        return _mask == that._mask;
      }

     private:
      friend class AcyclicSubsets;
      iterator(OrientedGraph const* g, std::uint64_t mask, std::uint64_t end);

      void settle();

      OrientedGraph const* _graph = nullptr;
      std::uint64_t        _mask  = 0;
      std::uint64_t        _end   = 0;
      vertex_set           _current;
    };

    //! g must outlive the range; at most 63 vertices.
    explicit AcyclicSubsets(OrientedGraph const& g);

    iterator begin() const;
    iterator end() const;

   private:
    OrientedGraph const* _graph;
    std::uint64_t        _end;
  };

  inline AcyclicSubsets acyclic_full_subgraphs(OrientedGraph const& g) {
    return AcyclicSubsets(g);
  }

  //! True iff the full subgraph of g on `mask` has no directed cycle.
  bool induced_is_acyclic(OrientedGraph const& g, std::uint64_t mask);

}  // namespace hkmon

#endif  // HKMON_GRAPH_HPP_
