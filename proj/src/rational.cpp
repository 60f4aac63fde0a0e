#include "hkmon/rational.hpp"

#include <utility>

#include "hkmon/word.hpp"

namespace hkmon {

  std::string to_string(Rational const& x) {
    auto const num = boost::multiprecision::numerator(x);
    auto const den = boost::multiprecision::denominator(x);
    if (den == 1) {
      return num.str();
    }
    return num.str() + "/" + den.str();
  }

  namespace {
    Integer parse_integer(std::string_view s, std::string_view whole) {
      bool negative = false;
      if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
      }
      if (s.empty()) {
        throw DomainError("invalid rational '" + std::string(whole) + "'");
      }
      Integer value = 0;
      for (char c : s) {
        if (c < '0' || c > '9') {
          throw DomainError("invalid rational '" + std::string(whole)
                            + "' (use p/q or an integer)");
        }
        value = value * 10 + (c - '0');
      }
      return negative ? Integer(-value) : value;
    }
  }  // namespace

  Rational parse_rational(std::string_view text) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
      return Rational(parse_integer(text, text));
    }
    auto num = parse_integer(text.substr(0, slash), text);
    auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
      throw DomainError("invalid rational '" + std::string(text) + "'");
    }
    auto den = parse_integer(den_text, text);
    if (den == 0) {
      throw DomainError("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
  }

  Rational pow(Rational const& x, long k) {
    if (k < 0) {
      if (x == 0) {
        throw DomainError("negative power of zero");
      }
      return pow(1 / x, -k);
    }
    Rational result = 1, base = x;
    for (; k > 0; k >>= 1) {
      if (k & 1) {
        result *= base;
      }
      base *= base;
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // RationalMatrix
  ////////////////////////////////////////////////////////////////////////

  RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
      : _rows(rows), _cols(cols), _entries(rows * cols) {}

  RationalMatrix::RationalMatrix(std::size_t           rows,
                                 std::size_t           cols,
                                 std::vector<Rational> entries)
      : _rows(rows), _cols(cols), _entries(std::move(entries)) {
    if (_entries.size() != rows * cols) {
      throw DomainError("matrix entry count does not match its shape");
    }
  }

  RationalMatrix RationalMatrix::identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t k = 0; k < n; ++k) {
      m(k, k) = 1;
    }
    return m;
  }

  RationalMatrix RationalMatrix::unit(std::size_t     rows,
                                      std::size_t     cols,
                                      std::size_t     r,
                                      std::size_t     c,
                                      Rational const& value) {
    RationalMatrix m(rows, cols);
    m(r, c) = value;
    return m;
  }

  RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix t(_cols, _rows);
    for (std::size_t r = 0; r < _rows; ++r) {
      for (std::size_t c = 0; c < _cols; ++c) {
        t(c, r) = (*this)(r, c);
      }
    }
    return t;
  }

  RationalMatrix RationalMatrix::row(std::size_t r) const {
    RationalMatrix out(1, _cols);
    for (std::size_t c = 0; c < _cols; ++c) {
      out(0, c) = (*this)(r, c);
    }
    return out;
  }

  RationalMatrix RationalMatrix::col(std::size_t c) const {
    RationalMatrix out(_rows, 1);
    for (std::size_t r = 0; r < _rows; ++r) {
      out(r, 0) = (*this)(r, c);
    }
    return out;
  }

  bool RationalMatrix::is_zero() const {
    for (auto const& x : _entries) {
      if (x != 0) {
        return false;
      }
    }
    return true;
  }

  Rational RationalMatrix::trace() const {
    Rational t = 0;
    for (std::size_t k = 0; k < std::min(_rows, _cols); ++k) {
      t += (*this)(k, k);
    }
    return t;
  }

  RationalMatrix operator*(RationalMatrix const& a, RationalMatrix const& b) {
    if (a._cols != b._rows) {
      throw DomainError("matrix product: shapes do not match");
    }
    RationalMatrix out(a._rows, b._cols);
    for (std::size_t r = 0; r < a._rows; ++r) {
      for (std::size_t k = 0; k < a._cols; ++k) {
        auto const& x = a(r, k);
        if (x == 0) {
          continue;
        }
        for (std::size_t c = 0; c < b._cols; ++c) {
          out(r, c) += x * b(k, c);
        }
      }
    }
    return out;
  }

  RationalMatrix operator+(RationalMatrix const& a, RationalMatrix const& b) {
    if (a._rows != b._rows || a._cols != b._cols) {
      throw DomainError("matrix sum: shapes do not match");
    }
    RationalMatrix out = a;
    for (std::size_t k = 0; k < out._entries.size(); ++k) {
      out._entries[k] += b._entries[k];
    }
    return out;
  }

  RationalMatrix operator*(Rational const& s, RationalMatrix m) {
    for (auto& x : m._entries) {
      x *= s;
    }
    return m;
  }

  std::vector<std::vector<std::string>> RationalMatrix::to_strings() const {
    std::vector<std::vector<std::string>> out(_rows);
    for (std::size_t r = 0; r < _rows; ++r) {
      for (std::size_t c = 0; c < _cols; ++c) {
        out[r].push_back(hkmon::to_string((*this)(r, c)));
      }
    }
    return out;
  }

  std::string RationalMatrix::to_string() const {
    std::string out;
    for (auto const& line : to_strings()) {
      for (std::size_t c = 0; c < line.size(); ++c) {
        out += (c ? " " : "") + line[c];
      }
      out += '\n';
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Elimination
  ////////////////////////////////////////////////////////////////////////

  EchelonForm echelon(RationalMatrix m) {
    std::vector<std::size_t> pivots;
    std::size_t              lead = 0;
    for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
      std::size_t r = lead;
      while (r < m.rows() && m(r, c) == 0) {
        ++r;
      }
      if (r == m.rows()) {
        continue;
      }
      if (r != lead) {
        for (std::size_t k = 0; k < m.cols(); ++k) {
          std::swap(m(r, k), m(lead, k));
        }
      }
      Rational const inv = 1 / m(lead, c);
      for (std::size_t k = 0; k < m.cols(); ++k) {
        m(lead, k) *= inv;
      }
      for (std::size_t other = 0; other < m.rows(); ++other) {
        if (other == lead || m(other, c) == 0) {
          continue;
        }
        Rational const factor = m(other, c);
        for (std::size_t k = 0; k < m.cols(); ++k) {
          m(other, k) -= factor * m(lead, k);
        }
      }
      pivots.push_back(c);
      ++lead;
    }
    return {std::move(m), std::move(pivots)};
  }

  std::size_t rank(RationalMatrix const& m) {
    return echelon(m).pivots.size();
  }

  Rational determinant(RationalMatrix const& m) {
    if (m.rows() != m.cols()) {
      throw DomainError("determinant of a non-square matrix");
    }
    RationalMatrix a   = m;
    Rational       det = 1;
    std::size_t const n = a.rows();
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t r = c;
      while (r < n && a(r, c) == 0) {
        ++r;
      }
      if (r == n) {
        return 0;
      }
      if (r != c) {
        for (std::size_t k = 0; k < n; ++k) {
          std::swap(a(r, k), a(c, k));
        }
        det = -det;
      }
      det *= a(c, c);
      for (std::size_t below = c + 1; below < n; ++below) {
        if (a(below, c) == 0) {
          continue;
        }
        Rational const factor = a(below, c) / a(c, c);
        for (std::size_t k = c; k < n; ++k) {
          a(below, k) -= factor * a(c, k);
        }
      }
    }
    return det;
  }

  Factorization full_rank_factorization(RationalMatrix const& m) {
    // Eliminating on the transpose picks the first independent rows of m:
    // m^T = m^T[:, J] R  gives  m = R^T m[J, :].
    auto const        e = echelon(m.transpose());
    std::size_t const r = e.pivots.size();
    RationalMatrix    left(m.rows(), r), right(r, m.cols());
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        right(k, c) = m(e.pivots[k], c);
      }
      for (std::size_t i = 0; i < m.rows(); ++i) {
        left(i, k) = e.reduced(k, i);
      }
    }
    return {std::move(left), std::move(right)};
  }

}  // namespace hkmon
