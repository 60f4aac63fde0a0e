#include "hkmon/rewrite.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>

namespace hkmon {

  namespace {

    // Saturation works on byte strings: one char per letter.
    using code_type = std::string;

    code_type encode(word_type const& w) {
      code_type out(w.size(), '\0');
      for (std::size_t k = 0; k < w.size(); ++k) {
        if (w[k] == 0 || w[k] > 255) {
          throw DomainError("rewriting supports generator indices 1..255");
        }
        out[k] = static_cast<char>(w[k]);
      }
      return out;
    }

    word_type decode(code_type const& c) {
      word_type w(c.size());
      for (std::size_t k = 0; k < c.size(); ++k) {
        w[k] = static_cast<unsigned char>(c[k]);
      }
      return w;
    }

    bool shortlex_less_code(code_type const& a, code_type const& b) {
      if (a.size() != b.size()) {
        return a.size() < b.size();
      }
      return std::lexicographical_compare(
          a.begin(), a.end(), b.begin(), b.end(), [](char x, char y) {
            return static_cast<unsigned char>(x) < static_cast<unsigned char>(y);
          });
    }

    struct Rewrite {
      code_type from;
      code_type to;
    };

    struct SaturationResult {
      std::vector<code_type>                     nodes;
      std::vector<std::size_t>                   parent;  // SIZE_MAX at root
      std::unordered_map<code_type, std::size_t> index;
      bool                                       complete = true;
      std::optional<std::size_t>                 hit;

      std::vector<code_type> path_to(std::size_t k) const {
        std::vector<code_type> out;
        for (; k != SIZE_MAX; k = parent[k]) {
          out.push_back(nodes[k]);
        }
        std::reverse(out.begin(), out.end());
        return out;
      }

      std::size_t least() const {
        std::size_t best = 0;
        for (std::size_t k = 1; k < nodes.size(); ++k) {
          if (shortlex_less_code(nodes[k], nodes[best])) {
            best = k;
          }
        }
        return best;
      }
    };

    class Saturator {
     public:
      explicit Saturator(RelationSet const& rels) : _by_first(256) {
        for (auto const& r : rels.rules()) {
          auto lhs = encode(r.lhs), rhs = encode(r.rhs);
          add(lhs, rhs);
          add(rhs, lhs);
        }
      }

      // Every single-step rewrite of w, in position-then-rule order.
      template <typename F>
      void neighbours(code_type const& w, std::size_t maxlen, F&& emit) const {
        for (std::size_t pos = 0; pos < w.size(); ++pos) {
          for (auto const& rw :
               _by_first[static_cast<unsigned char>(w[pos])]) {
            if (w.size() - rw.from.size() + rw.to.size() > maxlen
                || w.compare(pos, rw.from.size(), rw.from) != 0) {
              continue;
            }
            code_type next;
            next.reserve(w.size() - rw.from.size() + rw.to.size());
            next.append(w, 0, pos);
            next.append(rw.to);
            next.append(w, pos + rw.from.size(), code_type::npos);
            emit(next);
          }
        }
      }

      // Breadth-first closure of `start` under single steps that keep words
      // at most `maxlen` long. Stops at the first node satisfying `target`.
      SaturationResult
      run(code_type const&                             start,
          std::size_t                                  maxlen,
          std::size_t                                  budget,
          std::function<bool(code_type const&)> const& target = {}) const {
        SaturationResult r;
        auto             add = [&](code_type const& w, std::size_t parent) {
          r.index.emplace(w, r.nodes.size());
          r.nodes.push_back(w);
          r.parent.push_back(parent);
          if (target && target(w)) {
            r.hit = r.nodes.size() - 1;
          }
        };
        add(start, SIZE_MAX);
        std::size_t head = 0;
        while (head < r.nodes.size() && !r.hit) {
          if (r.nodes.size() >= budget) {
            r.complete = false;
            break;
          }
          auto const current = head++;
          auto const word    = r.nodes[current];
          neighbours(word, maxlen, [&](code_type const& next) {
            if (r.hit || r.index.count(next) != 0) {
              return;
            }
            add(next, current);
          });
        }
        return r;
      }

     private:
      void add(code_type const& from, code_type const& to) {
        _by_first[static_cast<unsigned char>(from.front())].push_back(
            {from, to});
      }

      std::vector<std::vector<Rewrite>> _by_first;
    };

    std::vector<word_type> decode_all(std::vector<code_type> const& codes) {
      std::vector<word_type> out;
      out.reserve(codes.size());
      for (auto const& c : codes) {
        out.push_back(decode(c));
      }
      return out;
    }

  }  // namespace

  ////////////////////////////////////////////////////////////////////////
  // RelationSet
  ////////////////////////////////////////////////////////////////////////

  RelationSet::RelationSet(OrientedGraph const& g) : _n(g.size()) {
    if (_n > 255) {
      throw DomainError("rewriting supports at most 255 generators");
    }
    using L = letter_type;
    for (vertex_type i = 1; i <= _n; ++i) {
      _rules.push_back({{L(i), L(i)}, {L(i)}, Rule::Kind::idempotency});
    }
    for (vertex_type i = 1; i <= _n; ++i) {
      for (vertex_type j = i + 1; j <= _n; ++j) {
        if (!g.connected(i, j)) {
          _rules.push_back({{L(j), L(i)}, {L(i), L(j)}, Rule::Kind::commutation});
        }
      }
    }
    for (auto [i, j] : g.arrows()) {
      _rules.push_back({{L(i), L(j), L(i)}, {L(i), L(j)}, Rule::Kind::collapse});
      _rules.push_back({{L(j), L(i), L(j)}, {L(i), L(j)}, Rule::Kind::collapse});
    }
  }

  std::size_t RelationSet::count(Rule::Kind kind) const noexcept {
    return std::count_if(_rules.begin(), _rules.end(),
                         [kind](Rule const& r) { return r.kind == kind; });
  }

  bool RelationSet::is_single_step(word_type const& from,
                                   word_type const& to) const {
    Saturator const s(*this);
    auto const      target = encode(to);
    bool            found  = false;
    s.neighbours(encode(from), SIZE_MAX, [&](code_type const& next) {
      found = found || next == target;
    });
    return found;
  }

  bool RelationSet::replays(std::vector<word_type> const& chain) const {
    for (std::size_t k = 1; k < chain.size(); ++k) {
      if (!is_single_step(chain[k - 1], chain[k])) {
        return false;
      }
    }
    return !chain.empty();
  }

  ////////////////////////////////////////////////////////////////////////
  // normalize
  ////////////////////////////////////////////////////////////////////////

  NormalForm normalize(word_type const&     w,
                       OrientedGraph const& g,
                       std::size_t          budget) {
    if (budget == 0) {
      throw DomainError("budget must be at least 1");
    }
    validate_word(w, g.size());
    RelationSet const rels(g);
    auto const        r = Saturator(rels).run(encode(w), w.size(), budget);
    return {decode(r.nodes[r.least()]), r.complete, r.nodes.size()};
  }

  ////////////////////////////////////////////////////////////////////////
  // EqualityVerdict
  ////////////////////////////////////////////////////////////////////////

  std::string EqualityVerdict::to_string() const {
    switch (_tag) {
      case Tag::equal:
        return "equal (chain of " + std::to_string(_chain.size() - 1)
               + " steps)";
      case Tag::distinct:
        if (auto const* a = std::get_if<AffineWitness>(&*_witness)) {
          return "distinct (f-maps " + a->left.to_string()
                 + " != " + a->right.to_string() + ")";
        } else {
          auto const& e = std::get<EnumerationWitness>(*_witness);
          return "distinct (canonical forms " + hkmon::to_string(e.left)
                 + " != " + hkmon::to_string(e.right) + ")";
        }
      default:
        return "unknown (budget exhausted)";
    }
  }

  ////////////////////////////////////////////////////////////////////////
  // MonoidEnumeration
  ////////////////////////////////////////////////////////////////////////

  std::size_t MonoidEnumeration::act(std::size_t s, word_type const& w) const {
    for (auto a : w) {
      if (a == 0 || a > _n) {
        throw DomainError("letter " + std::to_string(a) + " out of range");
      }
      s = _right[s][a - 1];
    }
    return s;
  }

  std::vector<word_type>
  MonoidEnumeration::chain_to_canonical(word_type const& w) const {
    std::vector<word_type> chain{w};
    std::size_t            s = 0;
    for (std::size_t k = 0; k < w.size(); ++k) {
      word_type const suffix(w.begin() + k + 1, w.end());
      auto const&     step = _chains[s][w[k] - 1];
      for (std::size_t j = 1; j < step.size(); ++j) {
        chain.push_back(concat(step[j], suffix));
      }
      s = _right[s][w[k] - 1];
    }
    return chain;
  }

  namespace {
    using chain_type = std::vector<word_type>;

    // `tail` starts at the word where `head` ends.
    void extend(chain_type& head, chain_type const& tail) {
      head.insert(head.end(), tail.begin() + 1, tail.end());
    }

    chain_type reversed(chain_type c) {
      std::reverse(c.begin(), c.end());
      return c;
    }

    chain_type with_suffix(chain_type c, word_type const& suffix) {
      for (auto& w : c) {
        w.insert(w.end(), suffix.begin(), suffix.end());
      }
      return c;
    }

    chain_type with_prefix(chain_type c, word_type const& prefix) {
      for (auto& w : c) {
        w.insert(w.begin(), prefix.begin(), prefix.end());
      }
      return c;
    }

    // Consequences of the defining relations that shorten words:
    //   x_i u x_i = x_i u  if i -> y or y is not adjacent to i for all y in u,
    //   x_i u x_i = u x_i  if y -> i or y is not adjacent to i for all y in u.
    // Their proofs need intermediate words longer than either side, which
    // length bounded saturation cannot reach. Each use is expanded into
    // single steps of the defining relations.
    class DerivedReducer {
     public:
      explicit DerivedReducer(OrientedGraph const& g) : _g(g) {}

      // A chain from w to a word to which neither identity applies.
      chain_type reduce(word_type const& w) const {
        chain_type c{w};
        while (step(c)) {
        }
        return c;
      }

     private:
      enum class Side { keep_left, keep_right };

      // x_i u x_i -> x_i u
      chain_type keep_left(letter_type i, word_type const& u) const {
        if (u.empty()) {
          return {{i, i}, {i}};
        }
        word_type const u1(u.begin(), u.end() - 1);
        letter_type const y = u.back();
        chain_type        c;
        if (!_g.connected(i, y)) {
          c = {concat(concat({i}, u1), {y, i}), concat(concat({i}, u1), {i, y})};
        } else {
          c = with_suffix(reversed(keep_left(i, u1)), {y, i});
          c.push_back(concat(concat({i}, u1), {i, y}));
        }
        extend(c, with_suffix(keep_left(i, u1), {y}));
        return c;
      }

      // x_i u x_i -> u x_i
      chain_type keep_right(letter_type i, word_type const& u) const {
        if (u.empty()) {
          return {{i, i}, {i}};
        }
        word_type const u1(u.begin() + 1, u.end());
        letter_type const y = u.front();
        chain_type        c;
        if (!_g.connected(i, y)) {
          c = {concat({i, y}, concat(u1, {i})), concat({y, i}, concat(u1, {i}))};
        } else {
          c = with_prefix(reversed(keep_right(i, u1)), {i, y});
          c.push_back(concat({y, i}, concat(u1, {i})));
        }
        extend(c, with_prefix(keep_right(i, u1), {y}));
        return c;
      }

      std::optional<Side> applies(letter_type i, word_type const& u) const {
        bool out = true, in = true;
        for (auto y : u) {
          out = out && !_g.has_arrow(y, i);
          in  = in && !_g.has_arrow(i, y);
        }
        if (out) {
          return Side::keep_left;
        } else if (in) {
          return Side::keep_right;
        }
        return std::nullopt;
      }

      bool step(chain_type& c) const {
        auto const w = c.back();
        for (std::size_t p = 0; p < w.size(); ++p) {
          auto const q = std::find(w.begin() + p + 1, w.end(), w[p]);
          if (q == w.end()) {
            continue;
          }
          word_type const u(w.begin() + p + 1, q);
          auto const      side = applies(w[p], u);
          if (!side) {
            continue;
          }
          word_type const prefix(w.begin(), w.begin() + p);
          word_type const suffix(q + 1, w.end());
          auto local = *side == Side::keep_left ? keep_left(w[p], u)
                                                : keep_right(w[p], u);
          extend(c, with_suffix(with_prefix(std::move(local), prefix), suffix));
          return true;
        }
        return false;
      }

      OrientedGraph const& _g;
    };

    // Right Cayley graph under construction, with a union-find of elements
    // known to coincide in the monoid. Every edge and every merge carries a
    // relation chain between the words involved.
    struct CayleyDraft {
      std::size_t                           n = 0;
      std::vector<word_type>                words;
      std::vector<std::vector<std::size_t>> right;
      std::vector<std::vector<chain_type>>  steps;  // words[s] a -> words[right]
      std::vector<std::size_t>              parent;
      std::vector<chain_type>               link;  // words[x] -> words[parent]

      std::size_t find(std::size_t x) const {
        while (parent[x] != x) {
          x = parent[x];
        }
        return x;
      }

      chain_type to_root(std::size_t x) const {
        chain_type c{words[x]};
        for (; parent[x] != x; x = parent[x]) {
          extend(c, link[x]);
        }
        return c;
      }

      std::size_t act(std::size_t s, word_type const& w) const {
        s = find(s);
        for (auto a : w) {
          s = find(right[s][a - 1]);
        }
        return s;
      }

      chain_type to_canonical(word_type const& w) const {
        chain_type  c{w};
        std::size_t s = find(0);
        for (std::size_t k = 0; k < w.size(); ++k) {
          word_type const suffix(w.begin() + k + 1, w.end());
          auto const      t = right[s][w[k] - 1];
          extend(c, with_suffix(steps[s][w[k] - 1], suffix));
          extend(c, with_suffix(to_root(t), suffix));
          s = find(t);
        }
        return c;
      }

      // Identify x and y given a chain from words[x] to words[y], then close
      // under right multiplication. The shortlex smaller word stays root.
      void merge(std::size_t x, std::size_t y, chain_type c) {
        struct Pending {
          std::size_t x, y;
          chain_type  c;
        };
        std::vector<Pending> todo;
        todo.push_back({x, y, std::move(c)});
        while (!todo.empty()) {
          auto p = std::move(todo.back());
          todo.pop_back();
          auto const rx = find(p.x), ry = find(p.y);
          if (rx == ry) {
            continue;
          }
          auto full = reversed(to_root(p.x));
          extend(full, p.c);
          extend(full, to_root(p.y));
          if (shortlex_less(words[ry], words[rx])) {
            parent[rx] = ry;
            link[rx]   = full;
          } else {
            parent[ry] = rx;
            link[ry]   = reversed(full);
          }
          for (letter_type a = 1; a <= n; ++a) {
            auto d = reversed(steps[rx][a - 1]);
            extend(d, with_suffix(full, {a}));
            extend(d, steps[ry][a - 1]);
            todo.push_back({right[rx][a - 1], right[ry][a - 1], std::move(d)});
          }
        }
      }

      // One sweep over the live elements; true if anything was merged.
      bool close_under(RelationSet const& rels) {
        bool changed = false;
        for (std::size_t s = 0; s < words.size(); ++s) {
          if (find(s) != s) {
            continue;
          }
          auto const w = words[s];
          if (auto t = act(0, w); t != s) {
            merge(s, t, to_canonical(w));
            changed = true;
            continue;
          }
          for (auto const& rule : rels.rules()) {
            auto const ul = concat(w, rule.lhs), ur = concat(w, rule.rhs);
            auto const tl = act(0, ul), tr = act(0, ur);
            if (tl != tr) {
              auto c = reversed(to_canonical(ul));
              c.push_back(ur);
              extend(c, to_canonical(ur));
              merge(tl, tr, std::move(c));
              changed = true;
            }
          }
        }
        return changed;
      }
    };
  }  // namespace

  MonoidEnumeration enumerate_monoid(OrientedGraph const& g,
                                     std::size_t          cap,
                                     std::size_t          budget) {
    if (budget == 0) {
      throw DomainError("budget must be at least 1");
    }
    std::size_t const n = g.size();
    RelationSet const rels(g);
    Saturator const      sat(rels);
    DerivedReducer const reducer(g);

    // Breadth-first closure of the identity, normalizing each product.
    CayleyDraft                                draft;
    std::unordered_map<code_type, std::size_t> known;
    draft.n = n;
    draft.words.push_back({});
    known.emplace(code_type{}, 0);
    auto const in_known = [&known](code_type const& c) {
      return known.count(c) != 0;
    };

    for (std::size_t s = 0; s < draft.words.size(); ++s) {
      draft.right.emplace_back(n);
      draft.steps.emplace_back(n);
      for (letter_type a = 1; a <= n; ++a) {
        auto       prefix = reducer.reduce(concat(draft.words[s], {a}));
        auto const w      = encode(prefix.back());
        auto&      slot   = draft.right[s][a - 1];
        auto&      step   = draft.steps[s][a - 1];
        if (auto it = known.find(w); it != known.end()) {
          slot = it->second;
          step = std::move(prefix);
          continue;
        }
        auto const r = sat.run(w, w.size(), budget, in_known);
        if (r.hit) {
          slot = known.at(r.nodes[*r.hit]);
          extend(prefix, decode_all(r.path_to(*r.hit)));
          step = std::move(prefix);
          continue;
        }
        auto const best = r.least();
        slot            = draft.words.size();
        known.emplace(r.nodes[best], slot);
        draft.words.push_back(decode(r.nodes[best]));
        extend(prefix, decode_all(r.path_to(best)));
        step = std::move(prefix);
        if (draft.words.size() > cap) {
          throw CapExceeded(cap, draft.words);
        }
      }
    }

    // Saturation is length bounded and may miss coincidences; merge elements
    // until the generator actions satisfy every relation.
    draft.parent.resize(draft.words.size());
    std::iota(draft.parent.begin(), draft.parent.end(), 0);
    draft.link.resize(draft.words.size());
    while (draft.close_under(rels)) {
    }

    // Renumber the live elements reachable from the identity.
    std::vector<std::size_t> order{draft.find(0)};
    std::vector<std::size_t> renumber(draft.words.size(), SIZE_MAX);
    renumber[order.front()] = 0;
    for (std::size_t k = 0; k < order.size(); ++k) {
      for (letter_type a = 1; a <= n; ++a) {
        auto const t = draft.find(draft.right[order[k]][a - 1]);
        if (renumber[t] == SIZE_MAX) {
          renumber[t] = order.size();
          order.push_back(t);
        }
      }
    }

    MonoidEnumeration result;
    result._n = n;
    for (auto s : order) {
      result._elements.push_back(draft.words[s]);
      result._right.emplace_back(n);
      result._chains.emplace_back(n);
      for (letter_type a = 1; a <= n; ++a) {
        auto const t                 = draft.right[s][a - 1];
        result._right.back()[a - 1]  = renumber[draft.find(t)];
        auto chain                   = draft.steps[s][a - 1];
        extend(chain, draft.to_root(t));
        result._chains.back()[a - 1] = std::move(chain);
      }
    }

    bool ok = true;
    for (std::size_t s = 0; s < result.size() && ok; ++s) {
      ok = result.find(result._elements[s]) == s;
      for (auto const& rule : rels.rules()) {
        ok = ok && result.act(s, rule.lhs) == result.act(s, rule.rhs);
      }
    }
    result._verified = ok;
    return result;
  }

  std::vector<word_type> idempotents_acyclic(OrientedGraph const& g) {
    if (g.size() > 30) {
      throw DomainError("idempotents_acyclic supports at most 30 vertices");
    }
    auto const             order = topological_order(g);
    std::vector<word_type> result;
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << g.size()); ++mask) {
      word_type w;
      for (auto v : order) {
        if ((mask >> (v - 1)) & 1U) {
          w.push_back(static_cast<letter_type>(v));
        }
      }
      result.push_back(std::move(w));
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // EqualityOracle
  ////////////////////////////////////////////////////////////////////////

  EqualityOracle::EqualityOracle(OrientedGraph g,
                                 std::size_t   budget,
                                 std::size_t   cap)
      : _graph(std::move(g)),
        _relations(_graph),
        _budget(budget),
        _cap(cap),
        _cycle(cycle_positions(_graph)) {
    if (budget == 0) {
      throw DomainError("budget must be at least 1");
    }
  }

  MonoidEnumeration const* EqualityOracle::enumeration() const {
    if (!_enumeration_tried) {
      _enumeration_tried = true;
      if (is_acyclic(_graph)) {
        try {
          auto e = enumerate_monoid(_graph, _cap, _budget);
          if (e.verified()) {
            _enumeration = std::make_unique<MonoidEnumeration>(std::move(e));
          }
        } catch (CapExceeded const&) {
        }
      }
    }
    return _enumeration.get();
  }

  EqualityVerdict EqualityOracle::are_equal(word_type const& u,
                                            word_type const& v) const {
    validate_word(u, _graph.size());
    validate_word(v, _graph.size());
    if (u == v) {
      return EqualityVerdict::equal({u});
    }

    if (_cycle) {
      auto relabel = [this](word_type w) {
        for (auto& a : w) {
          a = static_cast<letter_type>((*_cycle)[a - 1]);
        }
        return w;
      };
      auto fu = f_map(relabel(u), _graph.size());
      auto fv = f_map(relabel(v), _graph.size());
      if (fu != fv) {
        return EqualityVerdict::distinct(AffineWitness{fu, fv});
      }
    }

    if (auto const* e = enumeration()) {
      auto const su = e->find(u), sv = e->find(v);
      if (su != sv) {
        return EqualityVerdict::distinct(
            EnumerationWitness{e->elements()[su], e->elements()[sv]});
      }
      auto chain = e->chain_to_canonical(u);
      auto back  = e->chain_to_canonical(v);
      chain.insert(chain.end(), back.rbegin() + 1, back.rend());
      return EqualityVerdict::equal(std::move(chain));
    }

    auto const maxlen = std::max(u.size(), v.size());
    auto const half   = std::max<std::size_t>(1, _budget / 2);
    if (auto chain = meet(u, v, maxlen, half)) {
      return EqualityVerdict::equal(std::move(*chain));
    }
    // Again from the reduced words, which saturate in a different class.
    DerivedReducer const reducer(_graph);
    auto                 ru = reducer.reduce(u), rv = reducer.reduce(v);
    if (ru.back() == rv.back() || ru.size() > 1 || rv.size() > 1) {
      if (auto chain = meet(ru.back(), rv.back(), maxlen, (half + 1) / 2)) {
        extend(ru, *chain);
        extend(ru, reversed(rv));
        return EqualityVerdict::equal(std::move(ru));
      }
    }
    return EqualityVerdict::unknown();
  }

  // Meet in the middle: saturate u, then saturate v until it touches the
  // class of u.
  std::optional<std::vector<word_type>>
  EqualityOracle::meet(word_type const& u,
                       word_type const& v,
                       std::size_t      maxlen,
                       std::size_t      budget) const {
    if (u == v) {
      return std::vector<word_type>{u};
    }
    Saturator const sat(_relations);
    auto const      cu = encode(u), cv = encode(v);
    auto const      from_u
        = sat.run(cu, maxlen, budget, [&cv](code_type const& w) { return w == cv; });
    if (from_u.hit) {
      return decode_all(from_u.path_to(*from_u.hit));
    }
    auto const from_v = sat.run(cv, maxlen, budget, [&from_u](code_type const& w) {
      return from_u.index.count(w) != 0;
    });
    if (from_v.hit) {
      auto const& node  = from_v.nodes[*from_v.hit];
      auto        chain = decode_all(from_u.path_to(from_u.index.at(node)));
      auto        back  = decode_all(from_v.path_to(*from_v.hit));
      chain.insert(chain.end(), back.rbegin() + 1, back.rend());
      return chain;
    }
    return std::nullopt;
  }

  EqualityVerdict are_equal(word_type const&     u,
                            word_type const&     v,
                            OrientedGraph const& g,
                            std::size_t          budget) {
    return EqualityOracle(g, budget).are_equal(u, v);
  }

}  // namespace hkmon
