// Exact rational scalars and dense matrices over them.

#ifndef HKMON_RATIONAL_HPP_
#define HKMON_RATIONAL_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace hkmon {

  using Integer  = boost::multiprecision::cpp_int;
  using Rational = boost::multiprecision::cpp_rational;

  //! `p/q` in lowest terms, or `p` when the denominator is 1.
  std::string to_string(Rational const& x);

  //! Accepts `p`, `-p`, `p/q`; no decimal points or exponents.
  //! Throws DomainError on anything else or a zero denominator.
  Rational parse_rational(std::string_view text);

  //! x^k for any integer k; x must be nonzero when k < 0.
  Rational pow(Rational const& x, long k);

  class RationalMatrix {
   public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols);
    RationalMatrix(std::size_t                        rows,
                   std::size_t                        cols,
                   std::vector<Rational>              entries);

    static RationalMatrix identity(std::size_t n);

    //! The rows x cols matrix with a single entry `value` at (r, c).
    static RationalMatrix
    unit(std::size_t rows, std::size_t cols, std::size_t r, std::size_t c,
         Rational const& value = 1);

    std::size_t rows() const noexcept {
      return _rows;
    }

    std::size_t cols() const noexcept {
      return _cols;
    }

    //! 0-based access.
    Rational& operator()(std::size_t r, std::size_t c) {
      return _entries[r * _cols + c];
    }

    Rational const& operator()(std::size_t r, std::size_t c) const {
      return _entries[r * _cols + c];
    }

    RationalMatrix transpose() const;
    RationalMatrix row(std::size_t r) const;
    RationalMatrix col(std::size_t c) const;

    bool is_zero() const;

    Rational trace() const;

    friend RationalMatrix operator*(RationalMatrix const& a,
                                    RationalMatrix const& b);
    friend RationalMatrix operator+(RationalMatrix const& a,
                                    RationalMatrix const& b);
    friend RationalMatrix operator*(Rational const& s, RationalMatrix m);

    bool operator==(RationalMatrix const&) const = default;

    //! One row per line, entries separated by single spaces.
    std::string to_string() const;

    //! Rows of fraction strings.
    std::vector<std::vector<std::string>> to_strings() const;

   private:
    std::size_t           _rows = 0;
    std::size_t           _cols = 0;
    std::vector<Rational> _entries;
  };

  //! Reduced row echelon form and the pivot columns, pivots chosen as the
  //! leftmost nonzero column at each stage.
  struct EchelonForm {
    RationalMatrix           reduced;
    std::vector<std::size_t> pivots;
  };

  EchelonForm echelon(RationalMatrix m);

  std::size_t rank(RationalMatrix const& m);

  Rational determinant(RationalMatrix const& m);

  //! m = left * right with left of full column rank r and right of full row
  //! rank r = rank(m). `right` consists of the first linearly independent
  //! rows of m (in the given order), so an invertible m factors as I * m.
  struct Factorization {
    RationalMatrix left;
    RationalMatrix right;
  };

  Factorization full_rank_factorization(RationalMatrix const& m);

}  // namespace hkmon

#endif  // HKMON_RATIONAL_HPP_
