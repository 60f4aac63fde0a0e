#include "hkmon/cycle_monoid.hpp"

#include <algorithm>
#include <set>

namespace hkmon {

  AffineMap::AffineMap(std::vector<std::size_t> source,
                       std::vector<offset_type> offset)
      : _source(std::move(source)), _offset(std::move(offset)) {
    if (_source.size() != _offset.size()) {
      throw DomainError("affine map: source and offset sizes differ");
    }
    for (auto s : _source) {
      if (s == 0 || s > _source.size()) {
        throw DomainError("affine map: source index out of range");
      }
    }
  }

  AffineMap AffineMap::identity(std::size_t n) {
    std::vector<std::size_t> source(n);
    for (std::size_t k = 0; k < n; ++k) {
      source[k] = k + 1;
    }
    return AffineMap(std::move(source), std::vector<offset_type>(n, 0));
  }

  AffineMap AffineMap::generator(std::size_t n, letter_type i) {
    if (i == 0 || i > n) {
      throw DomainError("generator x_" + std::to_string(i) + " not in C_"
                        + std::to_string(n));
    }
    auto result = identity(n);
    if (i == n) {
      result._source[n - 1] = 1;
      result._offset[n - 1] = 1;
    } else {
      result._source[i - 1] = i + 1;
    }
    return result;
  }

  AffineMap AffineMap::compose(AffineMap const& inner) const {
    if (inner.dimension() != dimension()) {
      throw DomainError("affine map: dimension mismatch");
    }
    AffineMap result = *this;
    for (std::size_t k = 0; k < _source.size(); ++k) {
      auto const via     = _source[k] - 1;
      result._source[k]  = inner._source[via];
      result._offset[k] += inner._offset[via];
    }
    return result;
  }

  std::vector<AffineMap::offset_type>
  AffineMap::operator()(std::span<offset_type const> m) const {
    if (m.size() != dimension()) {
      throw DomainError("affine map: argument has wrong dimension");
    }
    std::vector<offset_type> out(dimension());
    for (std::size_t k = 0; k < out.size(); ++k) {
      out[k] = m[_source[k] - 1] + _offset[k];
    }
    return out;
  }

  std::string AffineMap::to_string() const {
    std::string out = "[src=(";
    for (std::size_t k = 0; k < _source.size(); ++k) {
      out += (k ? "," : "") + std::to_string(_source[k]);
    }
    out += "); off=(";
    for (std::size_t k = 0; k < _offset.size(); ++k) {
      out += (k ? "," : "") + std::to_string(_offset[k]);
    }
    return out + ")]";
  }

  AffineMap f_map(word_type const& w, std::size_t n) {
    validate_word(w, n);
    auto result = AffineMap::identity(n);
    for (auto a : w) {
      result = result.compose(AffineMap::generator(n, a));
    }
    return result;
  }

  vertex_set support(AffineMap const& a) {
    std::set<vertex_type> s(a.source().begin(), a.source().end());
    return {s.begin(), s.end()};
  }

  std::string IdealLevel::to_string() const {
    return level ? std::to_string(*level) : std::string("top");
  }

  IdealLevel classify_level(word_type const& w, std::size_t n) {
    if (n < 3) {
      throw DomainError("C_n needs n >= 3");
    }
    auto const  supp = support(f_map(w, n)).size();
    IdealLevel  result;
    result.support_size = supp;
    if (supp + 2 <= n) {
      result.level = static_cast<int>(n - 2 - supp);
    }
    return result;
  }

  word_type snqi_word(std::size_t n, std::size_t i) {
    if (n < 3) {
      throw DomainError("C_n needs n >= 3");
    }
    if (i > n - 2) {
      throw DomainError("level " + std::to_string(i) + " outside 0.."
                        + std::to_string(n - 2));
    }
    word_type w{static_cast<letter_type>(n)};
    for (std::size_t k = 1; k <= i; ++k) {
      w.push_back(static_cast<letter_type>(k));
    }
    for (std::size_t k = n - 1; k >= i + 1; --k) {
      w.push_back(static_cast<letter_type>(k));
    }
    return w;
  }

  SubsetIdempotent idempotent_for_subset(std::size_t n, vertex_set X) {
    std::sort(X.begin(), X.end());
    X.erase(std::unique(X.begin(), X.end()), X.end());
    for (auto v : X) {
      if (v == 0 || v > n) {
        throw DomainError("vertex " + std::to_string(v) + " outside 1.."
                          + std::to_string(n));
      }
    }
    if (X.size() == n) {
      throw DomainError("the full vertex set carries no idempotent in C_"
                        + std::to_string(n));
    }
    SubsetIdempotent result{X, {}};
    bool const wraps = !X.empty() && X.front() == 1 && X.back() == n;
    if (!wraps) {
      result.word.assign(X.begin(), X.end());
      return result;
    }
    std::size_t k = 0;
    while (k < X.size() && X[k] == k + 1) {
      ++k;
    }
    result.word.assign(X.begin() + k, X.end());
    for (std::size_t j = 1; j <= k; ++j) {
      result.word.push_back(static_cast<letter_type>(j));
    }
    return result;
  }

  std::vector<SubsetIdempotent> all_idempotents(std::size_t n) {
    if (n < 3 || n > 30) {
      throw DomainError("all_idempotents supports 3 <= n <= 30");
    }
    std::vector<SubsetIdempotent> result;
    std::uint64_t const           full = (std::uint64_t(1) << n) - 1;
    result.reserve(full);
    for (std::uint64_t mask = 0; mask < full; ++mask) {
      vertex_set X;
      for (std::size_t v = 1; v <= n; ++v) {
        if ((mask >> (v - 1)) & 1U) {
          X.push_back(v);
        }
      }
      result.push_back(idempotent_for_subset(n, std::move(X)));
    }
    return result;
  }

  bool infiniteness_witness(std::size_t n, std::size_t i, std::size_t kmax) {
    if (kmax < 2) {
      throw DomainError("kmax must be at least 2");
    }
    auto const          s = f_map(snqi_word(n, i), n);
    std::set<AffineMap> seen;
    auto                current = s;
    for (std::size_t k = 1; k <= kmax; ++k) {
      if (!seen.insert(current).second) {
        return false;
      }
      current = current.compose(s);
    }
    return true;
  }

  bool has_separated_letters(word_type const& w, std::size_t n) {
    auto const m = static_cast<long>(n);
    for (std::size_t j = 0; j < w.size(); ++j) {
      for (std::size_t l = j + 1; l < w.size(); ++l) {
        long const d = static_cast<long>(w[l]) - static_cast<long>(w[j]);
        if (!((0 < d && d < m - 1) || -d >= 2)) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace hkmon
