// Semigroups of matrix type M^0(S, A, B; P) over the cyclic semigroup S
// generated by s, their sandwich matrices, and the irreducible
// representations psi_lambda obtained by specializing s to a nonzero scalar.

#ifndef HKMON_MATRIX_TYPE_HPP_
#define HKMON_MATRIX_TYPE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "hkmon/rational.hpp"
#include "hkmon/word.hpp"

namespace hkmon {

  //! An entry of a sandwich matrix: the zero theta, or s^k with k >= 0
  //! (s^0 is the adjoined identity, written `1`).
  class SandwichEntry {
   public:
    static SandwichEntry theta() noexcept {
      return SandwichEntry();
    }

    static SandwichEntry power(std::uint32_t k) noexcept {
      SandwichEntry e;
      e._exponent = k;
      return e;
    }

    bool is_theta() const noexcept {
      return !_exponent.has_value();
    }

    bool is_one() const noexcept {
      return _exponent == 0U;
    }

    //! Only for non-theta entries.
    std::uint32_t exponent() const {
      return _exponent.value();
    }

    //! `theta`, `1`, `s` or `s^k`.
    std::string to_string() const;

    //! Accepts `theta`, `1`, `s`, `s^k`.
    static SandwichEntry parse(std::string_view token);

    bool operator==(SandwichEntry const&) const = default;

   private:
    SandwichEntry() = default;
    std::optional<std::uint32_t> _exponent;
  };

  //! The data (A, B, P) of a semigroup of matrix type. P is indexed B x A:
  //! entry(b, a) is p_{b,a}. Indices are 1-based throughout.
  class MatrixTypeData {
   public:
    //! Throws DomainError unless the matrix is square with label lists of
    //! matching length and at least one entry equal to 1.
    MatrixTypeData(std::vector<word_type>     row_labels,
                   std::vector<word_type>     col_labels,
                   std::vector<SandwichEntry> entries);

    std::size_t size() const noexcept {
      return _row_labels.size();
    }

    SandwichEntry const& entry(std::size_t b, std::size_t a) const {
      return _entries[(b - 1) * size() + (a - 1)];
    }

    //! Labels of B (rows).
    std::vector<word_type> const& row_labels() const noexcept {
      return _row_labels;
    }

    //! Labels of A (columns).
    std::vector<word_type> const& col_labels() const noexcept {
      return _col_labels;
    }

    bool is_symmetric() const;

    //! A copy whose rows and columns are permuted so that p_{1,1} = 1: the
    //! first entry equal to 1 in row-major order is swapped to the corner.
    MatrixTypeData normalized() const;

    //! Largest exponent in each row (theta counts as 0).
    std::vector<std::uint32_t> row_degrees() const;

    bool operator==(MatrixTypeData const&) const = default;

   private:
    std::vector<word_type>     _row_labels;
    std::vector<word_type>     _col_labels;
    std::vector<SandwichEntry> _entries;
  };

  //! The two semigroups of matrix type inside C_3.
  enum class BuiltinData : std::uint8_t { m0, m1 };

  //! M_1: s = x3 x1 x2, A = {1, x2, x1x2}, B = {1, x3, x3x1},
  //!   P = [[1,1,1],[1,1,s],[1,s,s]].
  //! M_0: s = x3 x2 x1, A = {1, x1, x2x1}, B = {1, x3, x3x2},
  //!   P = [[1,1,theta],[1,theta,s],[theta,s,s]].
  MatrixTypeData c3_data(BuiltinData which);

  //! The generator s of the cyclic semigroup for the built-in data.
  word_type c3_generator(BuiltinData which);

  //! Text format: `size N`, a line of row labels, a line of column labels,
  //! then N lines of N entries. Labels use the `x1x2` form, `1` for the
  //! identity. Lines starting with `#` are ignored. The result is
  //! normalized so that p_{1,1} = 1.
  MatrixTypeData parse_sandwich(std::string_view text);

  //! Reads and parses a file; throws DomainError if it cannot be opened.
  MatrixTypeData load_data(std::string const& path);

  //! Inverse of parse_sandwich for normalized data.
  std::string to_text(MatrixTypeData const& d);

  //! Throws DomainError unless size = binomial(n, i + 1), the size of the
  //! level-i sandwich matrix of C_n.
  void check_cycle_level_size(MatrixTypeData const& d,
                              std::size_t           n,
                              std::size_t           i);

  //! theta, or (s^k; a, b) with k >= 1, a indexing A and b indexing B.
  class MatrixTypeElement {
   public:
    static MatrixTypeElement theta() noexcept {
      return MatrixTypeElement();
    }

    static MatrixTypeElement make(std::uint64_t k, std::size_t a, std::size_t b);

    bool is_theta() const noexcept {
      return _k == 0;
    }

    std::uint64_t exponent() const noexcept {
      return _k;
    }

    std::size_t row() const noexcept {
      return _a;
    }

    std::size_t col() const noexcept {
      return _b;
    }

    //! `theta` or `(s^k; a, b)`.
    std::string to_string() const;

    bool operator==(MatrixTypeElement const&) const = default;

   private:
    MatrixTypeElement() = default;
    std::uint64_t _k = 0;
    std::size_t   _a = 0;
    std::size_t   _b = 0;
  };

  //! (s^n; a, b)(s^m; a', b') = (s^{n + m + k}; a, b') if p_{b,a'} = s^k,
  //! and theta if p_{b,a'} = theta.
  MatrixTypeElement multiply(MatrixTypeElement const& x,
                             MatrixTypeElement const& y,
                             MatrixTypeData const&    d);

  //! P with s^k replaced by lambda^k and theta by 0. Throws DomainError for
  //! lambda = 0 (every representation degenerates to the zero map there).
  RationalMatrix evaluate_sandwich(MatrixTypeData const& d,
                                   Rational const&       lambda);

  //! The representation psi_lambda into r x r matrices, r = rank of the
  //! evaluated sandwich matrix Pbar. With Pbar = C D a full-rank
  //! factorization, (s^k; a, b) maps to lambda^k D E_{a,b} C.
  class Representation {
   public:
    Representation(Rational lambda, Factorization factors);

    Rational const& lambda() const noexcept {
      return _lambda;
    }

    std::size_t dimension() const noexcept {
      return _factors.left.cols();
    }

    //! C (size x r) and D (r x size) with C D = Pbar.
    Factorization const& factors() const noexcept {
      return _factors;
    }

    RationalMatrix image(MatrixTypeElement const& x) const;

   private:
    Rational      _lambda;
    Factorization _factors;
  };

  Representation build_rep(MatrixTypeData const& d, Rational const& lambda);

  //! Exhaustively checks image(x) image(y) = image(x y) over theta and all
  //! (s^k; a, b) with 1 <= k <= kmax.
  bool verify_homomorphism(Representation const& rep,
                           MatrixTypeData const& d,
                           std::size_t           kmax);

  //! The extension of a representation to all integer exponents:
  //!   (s^p; a, b) |-> rep(s; a, 1) lambda^{p-2} e rep(s; 1, b),
  //! where rep(s; 1, 1) = lambda e.
  class ExtendedRepresentation {
   public:
    Rational const& lambda() const noexcept {
      return _lambda;
    }

    //! The rank one idempotent e.
    RationalMatrix const& idempotent() const noexcept {
      return _idempotent;
    }

    RationalMatrix image(long p, std::size_t a, std::size_t b) const;

   private:
    friend ExtendedRepresentation extend_rep(Representation const&,
                                             MatrixTypeData const&);
    Rational                    _lambda;
    RationalMatrix              _idempotent;
    std::vector<RationalMatrix> _from_row;  // rep(s; a, 1)
    std::vector<RationalMatrix> _to_col;    // rep(s; 1, b)
  };

  //! Throws DomainError if p_{1,1} != 1 or if lambda^{-1} rep(s; 1, 1) is not
  //! an idempotent of rank one.
  ExtendedRepresentation extend_rep(Representation const& rep,
                                    MatrixTypeData const& d);

  //! Checks ext(p; a, b) ext(q; a', b') = ext(p + q + k; a, b') when
  //! p_{b,a'} = s^k and = 0 when it is theta, for p, q in [lo, hi].
  bool verify_extension(ExtendedRepresentation const& ext,
                        MatrixTypeData const&         d,
                        long                          lo,
                        long                          hi);

  //! det P(lambda) as a polynomial in lambda, coefficients from degree 0 up,
  //! without trailing zeros (empty for the zero polynomial).
  std::vector<Rational> sandwich_determinant(MatrixTypeData const& d);

  //! Human-readable polynomial in `lambda`, e.g. `-lambda^2 + 2*lambda - 1`.
  std::string polynomial_to_string(std::vector<Rational> const& coeffs);

  //! Distinct nonzero rational roots, increasing. Also reports whether they
  //! exhaust the nonzero roots counted with multiplicity over an algebraic
  //! closure.
  struct RationalRoots {
    std::vector<Rational> roots;
    bool                  complete = true;
  };

  RationalRoots nonzero_rational_roots(std::vector<Rational> const& coeffs);

  //! {lambda, dim, generators: [{element, matrix}]} for the generators
  //! (s; a, b) of the semigroup, matrices as rows of fraction strings.
  nlohmann::ordered_json to_json(Representation const& rep,
                                 MatrixTypeData const& d);

}  // namespace hkmon

#endif  // HKMON_MATRIX_TYPE_HPP_
