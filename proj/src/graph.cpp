#include "hkmon/graph.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

#include "hkmon/word.hpp"

namespace hkmon {

  ////////////////////////////////////////////////////////////////////////
  // OrientedGraph
  ////////////////////////////////////////////////////////////////////////

  OrientedGraph::OrientedGraph(std::size_t n, std::vector<arrow_type> arrows)
      : _n(n), _arrows(std::move(arrows)), _out(n), _in(n) {
    std::sort(_arrows.begin(), _arrows.end());
    for (std::size_t k = 0; k < _arrows.size(); ++k) {
      auto [i, j] = _arrows[k];
      if (i == 0 || j == 0 || i > n || j > n) {
        throw DomainError("arrow " + std::to_string(i) + " -> "
                          + std::to_string(j) + " has an endpoint outside 1.."
                          + std::to_string(n));
      }
      if (i == j) {
        throw DomainError("self-loop at vertex " + std::to_string(i));
      }
      if (k > 0 && _arrows[k - 1] == _arrows[k]) {
        throw DomainError("duplicate arrow " + std::to_string(i) + " -> "
                          + std::to_string(j));
      }
    }
    for (auto [i, j] : _arrows) {
      if (std::binary_search(_arrows.begin(), _arrows.end(), arrow_type{j, i})) {
        throw DomainError("double arrow between " + std::to_string(std::min(i, j))
                          + " and " + std::to_string(std::max(i, j)));
      }
      _out[i - 1].push_back(j);
      _in[j - 1].push_back(i);
    }
    for (auto& v : _in) {
      std::sort(v.begin(), v.end());
    }
  }

  OrientedGraph OrientedGraph::cycle(std::size_t n) {
    if (n < 3) {
      throw DomainError("an oriented cycle needs at least 3 vertices");
    }
    std::vector<arrow_type> arrows;
    for (vertex_type i = 1; i <= n; ++i) {
      arrows.emplace_back(i, i == n ? 1 : i + 1);
    }
    return OrientedGraph(n, std::move(arrows));
  }

  OrientedGraph OrientedGraph::path(std::size_t n) {
    std::vector<arrow_type> arrows;
    for (vertex_type i = 1; i < n; ++i) {
      arrows.emplace_back(i, i + 1);
    }
    return OrientedGraph(n, std::move(arrows));
  }

  bool OrientedGraph::has_arrow(vertex_type i, vertex_type j) const noexcept {
    return std::binary_search(_arrows.begin(), _arrows.end(), arrow_type{i, j});
  }

  OrientedGraph OrientedGraph::induced(vertex_set const& vertices) const {
    std::vector<vertex_type> relabel(_n + 1, 0);
    for (std::size_t k = 0; k < vertices.size(); ++k) {
      relabel[vertices[k]] = k + 1;
    }
    std::vector<arrow_type> arrows;
    for (auto [i, j] : _arrows) {
      if (relabel[i] != 0 && relabel[j] != 0) {
        arrows.emplace_back(relabel[i], relabel[j]);
      }
    }
    return OrientedGraph(vertices.size(), std::move(arrows));
  }

  ////////////////////////////////////////////////////////////////////////
  // Edge-list text format
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::string_view trim(std::string_view s) {
      auto is_space = [](char c) {
        return c == ' ' || c == '\t' || c == '\r' || c == '\n';
      };
      while (!s.empty() && is_space(s.front())) {
        s.remove_prefix(1);
      }
      while (!s.empty() && is_space(s.back())) {
        s.remove_suffix(1);
      }
      return s;
    }

    std::optional<std::size_t> parse_count(std::string_view s) {
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        return std::nullopt;
      }
      return value;
    }
  }  // namespace

  OrientedGraph parse_graph(std::string_view text) {
    if (text.substr(0, 3) == "\xEF\xBB\xBF") {
      text.remove_prefix(3);
    }
    std::optional<std::size_t>                      declared;
    std::vector<std::pair<arrow_type, std::size_t>> arrows;  // with line no.
    std::size_t                                     line_no = 0;
    bool                                            first   = true;

    while (!text.empty()) {
      auto eol  = text.find('\n');
      auto line = trim(text.substr(0, eol));
      text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
      ++line_no;
      if (line.empty() || line.front() == '#') {
        continue;
      }
      auto arrow = line.find("->");
      if (first && arrow == std::string_view::npos) {
        first    = false;
        declared = parse_count(line);
        if (!declared) {
          throw ParseError(line_no, "expected a vertex count, got '"
                                        + std::string(line) + "'");
        }
        continue;
      }
      first = false;
      if (arrow == std::string_view::npos) {
        throw ParseError(line_no, "expected 'u -> v', got '" + std::string(line)
                                      + "'");
      }
      auto u = parse_count(trim(line.substr(0, arrow)));
      auto v = parse_count(trim(line.substr(arrow + 2)));
      if (!u || !v || *u == 0 || *v == 0) {
        throw ParseError(line_no, "malformed arrow '" + std::string(line) + "'");
      }
      if (declared && (*u > *declared || *v > *declared)) {
        throw ParseError(line_no, "vertex out of range 1.."
                                      + std::to_string(*declared));
      }
      if (*u == *v) {
        throw ParseError(line_no, "self-loop at vertex " + std::to_string(*u));
      }
      for (auto const& [a, at] : arrows) {
        if (a == arrow_type{*u, *v}) {
          throw ParseError(line_no, "duplicate arrow (first on line "
                                        + std::to_string(at) + ")");
        }
        if (a == arrow_type{*v, *u}) {
          throw ParseError(line_no,
                           "double arrow: " + std::to_string(*v) + " -> "
                               + std::to_string(*u) + " already on line "
                               + std::to_string(at)
                               + " (the graph must be simple)");
        }
      }
      arrows.emplace_back(arrow_type{*u, *v}, line_no);
    }

    std::size_t n = declared.value_or(0);
    if (!declared) {
      for (auto const& [a, at] : arrows) {
        n = std::max({n, a.first, a.second});
      }
    }
    std::vector<arrow_type> plain;
    plain.reserve(arrows.size());
    for (auto const& [a, at] : arrows) {
      plain.push_back(a);
    }
    return OrientedGraph(n, std::move(plain));
  }

  std::string to_edge_list(OrientedGraph const& g) {
    std::string out = std::to_string(g.size()) + "\n";
    for (auto [i, j] : g.arrows()) {
      out += std::to_string(i) + " -> " + std::to_string(j) + "\n";
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Strongly connected components (Tarjan)
  ////////////////////////////////////////////////////////////////////////

  std::vector<vertex_set> strongly_connected_components(OrientedGraph const& g) {
    std::size_t const        n = g.size();
    std::vector<std::size_t> index(n + 1, 0), low(n + 1, 0);
    std::vector<bool>        on_stack(n + 1, false);
    std::vector<vertex_type> stack;
    std::vector<vertex_set>  result;
    std::size_t              counter = 0;

    std::function<void(vertex_type)> visit = [&](vertex_type v) {
      index[v] = low[v] = ++counter;
      stack.push_back(v);
      on_stack[v] = true;
      for (auto w : g.out_neighbours(v)) {
        if (index[w] == 0) {
          visit(w);
          low[v] = std::min(low[v], low[w]);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
      }
      if (low[v] == index[v]) {
        vertex_set scc;
        vertex_type w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          scc.push_back(w);
        } while (w != v);
        std::sort(scc.begin(), scc.end());
        result.push_back(std::move(scc));
      }
    };

    for (vertex_type v = 1; v <= n; ++v) {
      if (index[v] == 0) {
        visit(v);
      }
    }
    std::sort(result.begin(), result.end(),
              [](auto const& a, auto const& b) { return a.front() < b.front(); });
    return result;
  }

  std::vector<vertex_type> topological_order(OrientedGraph const& g) {
    std::size_t const        n = g.size();
    std::vector<std::size_t> indegree(n + 1, 0);
    for (auto [i, j] : g.arrows()) {
      ++indegree[j];
    }
    std::priority_queue<vertex_type, std::vector<vertex_type>, std::greater<>>
        ready;
    for (vertex_type v = 1; v <= n; ++v) {
      if (indegree[v] == 0) {
        ready.push(v);
      }
    }
    std::vector<vertex_type> order;
    while (!ready.empty()) {
      auto v = ready.top();
      ready.pop();
      order.push_back(v);
      for (auto w : g.out_neighbours(v)) {
        if (--indegree[w] == 0) {
          ready.push(w);
        }
      }
    }
    if (order.size() != n) {
      throw DomainError("graph contains a directed cycle");
    }
    return order;
  }

  bool is_acyclic(OrientedGraph const& g) {
    return induced_is_acyclic(g, g.size() >= 64 ? ~std::uint64_t(0)
                                                : (std::uint64_t(1) << g.size()) - 1);
  }

  bool induced_is_acyclic(OrientedGraph const& g, std::uint64_t mask) {
    std::size_t const        n = g.size();
    auto                     in_mask = [mask](vertex_type v) {
      return (mask >> (v - 1)) & 1U;
    };
    std::vector<std::size_t> indegree(n + 1, 0);
    std::size_t              members = 0;
    for (vertex_type v = 1; v <= n; ++v) {
      members += in_mask(v);
    }
    for (auto [i, j] : g.arrows()) {
      if (in_mask(i) && in_mask(j)) {
        ++indegree[j];
      }
    }
    std::vector<vertex_type> ready;
    for (vertex_type v = 1; v <= n; ++v) {
      if (in_mask(v) && indegree[v] == 0) {
        ready.push_back(v);
      }
    }
    std::size_t removed = 0;
    while (!ready.empty()) {
      auto v = ready.back();
      ready.pop_back();
      ++removed;
      for (auto w : g.out_neighbours(v)) {
        if (in_mask(w) && --indegree[w] == 0) {
          ready.push_back(w);
        }
      }
    }
    return removed == members;
  }

  ////////////////////////////////////////////////////////////////////////
  // PI criterion and the cyclic core
  ////////////////////////////////////////////////////////////////////////

  namespace {
    // Every vertex of `scc` has exactly one in- and one out-neighbour in it.
    bool is_chordless_cycle(OrientedGraph const& g, vertex_set const& scc) {
      auto member = [&scc](vertex_type v) {
        return std::binary_search(scc.begin(), scc.end(), v);
      };
      for (auto v : scc) {
        auto const& out = g.out_neighbours(v);
        auto const& in  = g.in_neighbours(v);
        if (std::count_if(out.begin(), out.end(), member) != 1
            || std::count_if(in.begin(), in.end(), member) != 1) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  bool is_pi(OrientedGraph const& g) {
    auto const               sccs = strongly_connected_components(g);
    std::vector<std::size_t> scc_of(g.size() + 1);
    for (std::size_t c = 0; c < sccs.size(); ++c) {
      for (auto v : sccs[c]) {
        scc_of[v] = c;
      }
    }
    std::vector<bool> cyclic(sccs.size(), false);
    for (std::size_t c = 0; c < sccs.size(); ++c) {
      if (sccs[c].size() > 1) {
        if (!is_chordless_cycle(g, sccs[c])) {
          return false;
        }
        cyclic[c] = true;
      }
    }
    // From each cyclic component, search the graph for another one.
    for (std::size_t c = 0; c < sccs.size(); ++c) {
      if (!cyclic[c]) {
        continue;
      }
      std::vector<bool>        seen(g.size() + 1, false);
      std::vector<vertex_type> todo(sccs[c].begin(), sccs[c].end());
      for (auto v : todo) {
        seen[v] = true;
      }
      while (!todo.empty()) {
        auto v = todo.back();
        todo.pop_back();
        for (auto w : g.out_neighbours(v)) {
          if (seen[w]) {
            continue;
          }
          if (cyclic[scc_of[w]] && scc_of[w] != c) {
            return false;
          }
          seen[w] = true;
          todo.push_back(w);
        }
      }
    }
    return true;
  }

  OrientedGraph cyclic_core(OrientedGraph const& g) {
    auto const               sccs = strongly_connected_components(g);
    std::vector<std::size_t> scc_of(g.size() + 1);
    for (std::size_t c = 0; c < sccs.size(); ++c) {
      for (auto v : sccs[c]) {
        scc_of[v] = c;
      }
    }
    std::vector<arrow_type> kept;
    for (auto a : g.arrows()) {
      if (scc_of[a.first] == scc_of[a.second]) {
        kept.push_back(a);
      }
    }
    return OrientedGraph(g.size(), std::move(kept));
  }

  std::string ComponentKind::to_string() const {
    switch (_tag) {
      case Tag::singleton:
        return "singleton";
      case Tag::cycle:
        return "cycle(" + std::to_string(_length) + ")";
      default:
        return "other";
    }
  }

  std::vector<Component> components(OrientedGraph const& g) {
    std::size_t const        n = g.size();
    std::vector<std::size_t> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t v) {
      return parent[v] == v ? v : parent[v] = find(parent[v]);
    };
    for (auto [i, j] : g.arrows()) {
      auto a = find(i), b = find(j);
      if (a != b) {
        parent[std::max(a, b)] = std::min(a, b);
      }
    }
    std::vector<Component> result;
    std::vector<std::size_t> slot(n + 1, SIZE_MAX);
    for (vertex_type v = 1; v <= n; ++v) {
      auto root = find(v);
      if (slot[root] == SIZE_MAX) {
        slot[root] = result.size();
        result.push_back({{}, ComponentKind::singleton()});
      }
      result[slot[root]].vertices.push_back(v);
    }
    for (auto& c : result) {
      if (c.vertices.size() == 1) {
        continue;
      }
      c.kind = is_chordless_cycle(g, c.vertices)
                   ? ComponentKind::cycle(c.vertices.size())
                   : ComponentKind::other(c.vertices.size());
    }
    return result;
  }

  std::optional<std::vector<vertex_type>>
  cycle_positions(OrientedGraph const& g) {
    std::size_t const n = g.size();
    if (n < 3 || g.arrows().size() != n) {
      return std::nullopt;
    }
    std::vector<vertex_type> pos(n, 0);
    vertex_type              v = 1;
    for (std::size_t k = 1; k <= n; ++k) {
      if (pos[v - 1] != 0 || g.out_neighbours(v).size() != 1) {
        return std::nullopt;
      }
      pos[v - 1] = k;
      v          = g.out_neighbours(v).front();
    }
    if (v != 1) {
      return std::nullopt;
    }
    return pos;
  }

  bool is_standard_cycle(OrientedGraph const& g) {
    return g.size() >= 3 && g == OrientedGraph::cycle(g.size());
  }

  ////////////////////////////////////////////////////////////////////////
  // AcyclicSubsets
  ////////////////////////////////////////////////////////////////////////

  AcyclicSubsets::AcyclicSubsets(OrientedGraph const& g) : _graph(&g) {
    if (g.size() > 63) {
      throw DomainError("subset enumeration supports at most 63 vertices");
    }
    _end = std::uint64_t(1) << g.size();
  }

  AcyclicSubsets::iterator AcyclicSubsets::begin() const {
    return iterator(_graph, 0, _end);
  }

  AcyclicSubsets::iterator AcyclicSubsets::end() const {
    return iterator(_graph, _end, _end);
  }

  AcyclicSubsets::iterator::iterator(OrientedGraph const* g,
                                     std::uint64_t        mask,
                                     std::uint64_t        end)
      : _graph(g), _mask(mask), _end(end) {
    settle();
  }

  AcyclicSubsets::iterator& AcyclicSubsets::iterator::operator++() {
    ++_mask;
    settle();
    return *this;
  }

  void AcyclicSubsets::iterator::settle() {
    while (_mask < _end && !induced_is_acyclic(*_graph, _mask)) {
      ++_mask;
    }
    _current.clear();
    if (_mask < _end) {
      for (vertex_type v = 1; v <= _graph->size(); ++v) {
        if ((_mask >> (v - 1)) & 1U) {
          _current.push_back(v);
        }
      }
    }
  }

}  // namespace hkmon
