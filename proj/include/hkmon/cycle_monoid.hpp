// The Hecke-Kiselman monoid C_n of the oriented cycle 1 -> 2 -> ... -> n -> 1:
// its integral representation by affine maps of Z^n, supports, ideal levels,
// the distinguished words x_n q_i and the idempotents e_X.

#ifndef HKMON_CYCLE_MONOID_HPP_
#define HKMON_CYCLE_MONOID_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hkmon/graph.hpp"
#include "hkmon/word.hpp"

namespace hkmon {

  //! A map Z^n -> Z^n of the form m |-> (m_{s_1} + c_1, ..., m_{s_n} + c_n).
  //!
  //! Every generator of C_n acts by such a map and the shape is closed under
  //! composition, so products are computed exactly in O(n).
  class AffineMap {
   public:
    using offset_type = std::int64_t;

    AffineMap() = default;

    //! `source` holds 1-based input coordinates.
    AffineMap(std::vector<std::size_t> source, std::vector<offset_type> offset);

    static AffineMap identity(std::size_t n);

    //! Image of the generator x_i of C_n: coordinate i is overwritten with
    //! m_{i+1} for i < n, and coordinate n with m_1 + 1.
    static AffineMap generator(std::size_t n, letter_type i);

    std::size_t dimension() const noexcept {
      return _source.size();
    }

    std::vector<std::size_t> const& source() const noexcept {
      return _source;
    }

    std::vector<offset_type> const& offset() const noexcept {
      return _offset;
    }

    //! (*this) o inner, i.e. apply `inner` first.
    AffineMap compose(AffineMap const& inner) const;

    std::vector<offset_type> operator()(std::span<offset_type const> m) const;

    //! `[src=(s1,...,sn); off=(c1,...,cn)]`
    std::string to_string() const;

    bool operator==(AffineMap const&) const = default;
    auto operator<=>(AffineMap const&) const = default;

   private:
    std::vector<std::size_t> _source;
    std::vector<offset_type> _offset;
  };

  //! f(w) = f(x_{i_1}) o ... o f(x_{i_k}); the identity for the empty word.
  AffineMap f_map(word_type const& w, std::size_t n);

  //! The input coordinates the map depends on, sorted.
  vertex_set support(AffineMap const& a);

  //! Ideal level certified by the support size of f(w).
  //!
  //! A value i means w lies in Q_i (words whose image depends on at most
  //! n - i - 2 coordinates), which is contained in the ideal I_i. Nothing is
  //! claimed about deeper ideals. `top` means no Q_i with i >= 0 contains w.
  struct IdealLevel {
    std::optional<int> level;
    std::size_t        support_size = 0;

    bool is_top() const noexcept {
      return !level.has_value();
    }

    std::string to_string() const;

    bool operator==(IdealLevel const&) const = default;
  };

  IdealLevel classify_level(word_type const& w, std::size_t n);

  //! x_n x_1 ... x_i x_{n-1} ... x_{i+1}, for n >= 3 and 0 <= i <= n - 2.
  word_type snqi_word(std::size_t n, std::size_t i);

  struct SubsetIdempotent {
    vertex_set subset;
    word_type  word;
  };

  //! The idempotent e_X for a proper subset X of {1..n} (sorted):
  //!   X empty          -> the identity,
  //!   {1, n} not in X  -> x_{i_1} ... x_{i_j} increasing,
  //!   {1, n} in X      -> x_{i_1} ... x_{i_s} x_1 ... x_k where 1..k is the
  //!                       initial run of X and i_1 < ... < i_s = n the rest.
  SubsetIdempotent idempotent_for_subset(std::size_t n, vertex_set X);

  //! All 2^n - 1 idempotents of C_n, in bitmask order of X.
  std::vector<SubsetIdempotent> all_idempotents(std::size_t n);

  //! True iff f((x_n q_i)^k), k = 1..kmax, are pairwise distinct.
  bool infiniteness_witness(std::size_t n, std::size_t i, std::size_t kmax);

  //! For all positions j < l: 0 < i_l - i_j < n - 1 or i_j - i_l >= 2.
  //! Words with this property have support equal to the complement of
  //! their letters.
  bool has_separated_letters(word_type const& w, std::size_t n);

}  // namespace hkmon

#endif  // HKMON_CYCLE_MONOID_HPP_
