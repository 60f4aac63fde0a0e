// Independent reference computations used to check the library. Nothing
// here calls into the code under test except for plain data types.

#ifndef HKMON_TESTS_ORACLES_HPP_
#define HKMON_TESTS_ORACLES_HPP_

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "hkmon/graph.hpp"
#include "hkmon/matrix_type.hpp"
#include "hkmon/word.hpp"

namespace oracle {

  using hkmon::arrow_type;
  using hkmon::OrientedGraph;
  using hkmon::word_type;

  //! Applies x_i to a point of Z^n coordinatewise: coordinate i takes the
  //! value of coordinate i + 1, or m_1 + 1 when i = n.
  inline std::vector<std::int64_t> apply_generator(std::size_t               i,
                                                   std::vector<std::int64_t> m) {
    auto const n = m.size();
    m[i - 1]     = i == n ? m[0] + 1 : m[i];
    return m;
  }

  //! f(w)(m), applying the rightmost letter first.
  inline std::vector<std::int64_t> apply_word(word_type const&          w,
                                              std::vector<std::int64_t> m) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      m = apply_generator(*it, std::move(m));
    }
    return m;
  }

  //! Defining relation pairs of HK_G written out directly from the graph.
  inline std::vector<std::pair<word_type, word_type>>
  relation_pairs(OrientedGraph const& g) {
    std::vector<std::pair<word_type, word_type>> out;
    auto const                                   n = g.size();
    for (std::uint32_t i = 1; i <= n; ++i) {
      out.push_back({{i, i}, {i}});
      for (std::uint32_t j = 1; j <= n; ++j) {
        if (i == j) {
          continue;
        }
        bool arrow = false, reverse = false;
        for (auto [a, b] : g.arrows()) {
          arrow   = arrow || (a == i && b == j);
          reverse = reverse || (a == j && b == i);
        }
        if (!arrow && !reverse && i < j) {
          out.push_back({{i, j}, {j, i}});
        }
        if (arrow) {
          out.push_back({{i, j, i}, {i, j}});
          out.push_back({{j, i, j}, {i, j}});
        }
      }
    }
    return out;
  }

  //! True iff `to` is obtained from `from` by one relation application in
  //! either direction.
  inline bool single_step(OrientedGraph const& g,
                          word_type const&     from,
                          word_type const&     to) {
    for (auto const& [l, r] : relation_pairs(g)) {
      for (auto const& [a, b] : {std::pair{l, r}, std::pair{r, l}}) {
        if (from.size() < a.size()) {
          continue;
        }
        for (std::size_t p = 0; p + a.size() <= from.size(); ++p) {
          if (!std::equal(a.begin(), a.end(), from.begin() + p)) {
            continue;
          }
          word_type w(from.begin(), from.begin() + p);
          w.insert(w.end(), b.begin(), b.end());
          w.insert(w.end(), from.begin() + p + a.size(), from.end());
          if (w == to) {
            return true;
          }
        }
      }
    }
    return false;
  }

  //! reach[i][j] iff there is a directed path (possibly empty) from i to j.
  inline std::vector<std::vector<bool>> reachability(OrientedGraph const& g) {
    auto const                     n = g.size();
    std::vector<std::vector<bool>> r(n + 1, std::vector<bool>(n + 1, false));
    for (std::size_t v = 1; v <= n; ++v) {
      r[v][v] = true;
    }
    for (auto [a, b] : g.arrows()) {
      r[a][b] = true;
    }
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t i = 1; i <= n; ++i) {
        for (std::size_t j = 1; j <= n; ++j) {
          if (r[i][k] && r[k][j]) {
            r[i][j] = true;
          }
        }
      }
    }
    return r;
  }

  //! Arrows lying on some directed cycle: a -> b with b reaching a.
  inline std::vector<arrow_type> cyclic_arrows(OrientedGraph const& g) {
    auto const              r = reachability(g);
    std::vector<arrow_type> out;
    for (auto [a, b] : g.arrows()) {
      if (r[b][a]) {
        out.emplace_back(a, b);
      }
    }
    return out;
  }

  //! All simple directed cycles, each as its set of arrows.
  inline std::set<std::set<arrow_type>> simple_cycles(OrientedGraph const& g) {
    std::set<std::set<arrow_type>> out;
    auto const                     n = g.size();
    std::vector<std::size_t>       path;
    std::vector<bool>              on(n + 1, false);
    std::function<void(std::size_t)> dfs = [&](std::size_t v) {
      for (auto w : g.out_neighbours(v)) {
        if (w == path.front()) {
          std::set<arrow_type> arrows;
          for (std::size_t k = 0; k < path.size(); ++k) {
            arrows.emplace(path[k], path[(k + 1) % path.size()]);
          }
          out.insert(std::move(arrows));
        } else if (!on[w] && w > path.front()) {
          on[w] = true;
          path.push_back(w);
          dfs(w);
          path.pop_back();
          on[w] = false;
        }
      }
    };
    for (std::size_t s = 1; s <= n; ++s) {
      path = {s};
      on[s] = true;
      dfs(s);
      on[s] = false;
    }
    return out;
  }

  //! PI straight from the definition: no two distinct cyclic subgraphs with
  //! an oriented path (possibly of length zero) from one to the other.
  inline bool is_pi(OrientedGraph const& g) {
    auto const                               r = reachability(g);
    std::vector<std::set<std::size_t>>       vertex_sets;
    for (auto const& c : simple_cycles(g)) {
      std::set<std::size_t> vs;
      for (auto [a, b] : c) {
        vs.insert(a);
      }
      vertex_sets.push_back(std::move(vs));
    }
    for (std::size_t x = 0; x < vertex_sets.size(); ++x) {
      for (std::size_t y = 0; y < vertex_sets.size(); ++y) {
        if (x == y) {
          continue;
        }
        for (auto u : vertex_sets[x]) {
          for (auto v : vertex_sets[y]) {
            if (r[u][v]) {
              return false;
            }
          }
        }
      }
    }
    return true;
  }

  //! A random simple oriented graph: each unordered pair carries an arrow
  //! with probability p, oriented uniformly.
  inline OrientedGraph random_graph(std::size_t n, double p, std::mt19937& rng) {
    std::bernoulli_distribution edge(p), flip(0.5);
    std::vector<arrow_type>     arrows;
    for (std::size_t i = 1; i <= n; ++i) {
      for (std::size_t j = i + 1; j <= n; ++j) {
        if (edge(rng)) {
          arrows.push_back(flip(rng) ? arrow_type{i, j} : arrow_type{j, i});
        }
      }
    }
    return OrientedGraph(n, std::move(arrows));
  }

  //! Integer polynomials, coefficients from degree 0 up.
  using Poly = std::vector<long long>;

  inline Poly add(Poly a, Poly const& b) {
    a.resize(std::max(a.size(), b.size()), 0);
    for (std::size_t k = 0; k < b.size(); ++k) {
      a[k] += b[k];
    }
    return a;
  }

  inline Poly mul(Poly const& a, Poly const& b) {
    if (a.empty() || b.empty()) {
      return {};
    }
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        out[i + j] += a[i] * b[j];
      }
    }
    return out;
  }

  inline Poly trimmed(Poly p) {
    while (!p.empty() && p.back() == 0) {
      p.pop_back();
    }
    return p;
  }

  //! det P(lambda) by cofactor expansion along the first row.
  inline Poly cofactor_determinant(std::vector<std::vector<Poly>> const& m) {
    auto const n = m.size();
    if (n == 0) {
      return {1};
    }
    Poly det;
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<std::vector<Poly>> minor;
      for (std::size_t r = 1; r < n; ++r) {
        std::vector<Poly> row;
        for (std::size_t k = 0; k < n; ++k) {
          if (k != c) {
            row.push_back(m[r][k]);
          }
        }
        minor.push_back(std::move(row));
      }
      auto term = mul(m[0][c], cofactor_determinant(minor));
      if (c % 2 == 1) {
        for (auto& x : term) {
          x = -x;
        }
      }
      det = add(det, term);
    }
    return trimmed(det);
  }

  inline Poly sandwich_determinant(hkmon::MatrixTypeData const& d) {
    std::vector<std::vector<Poly>> m(d.size());
    for (std::size_t b = 1; b <= d.size(); ++b) {
      for (std::size_t a = 1; a <= d.size(); ++a) {
        auto const& e = d.entry(b, a);
        Poly        p;
        if (!e.is_theta()) {
          p.assign(e.exponent() + 1, 0);
          p.back() = 1;
        }
        m[b - 1].push_back(p);
      }
    }
    return cofactor_determinant(m);
  }

}  // namespace oracle

#endif  // HKMON_TESTS_ORACLES_HPP_
