// Words over the generators x_1, ..., x_n of a Hecke-Kiselman monoid.

#ifndef HKMON_WORD_HPP_
#define HKMON_WORD_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hkmon {

  //! Index of a generator; generators are numbered from 1.
  using letter_type = std::uint32_t;

  //! A word in the generators. The empty word is the identity.
  using word_type = std::vector<letter_type>;

  //! Raised when an input violates a documented precondition.
  class DomainError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  //! Raised by the text parsers; carries the 1-based offending line.
  class ParseError : public DomainError {
   public:
    ParseError(std::size_t line, std::string const& what)
        : DomainError("line " + std::to_string(line) + ": " + what),
          _line(line) {}

    std::size_t line() const noexcept {
      return _line;
    }

   private:
    std::size_t _line;
  };

  //! Shortlex order: shorter words first, then lexicographic on indices.
  bool shortlex_less(word_type const& u, word_type const& v) noexcept;

  //! Concatenation u v.
  word_type concat(word_type const& u, word_type const& v);

  //! w^k (k >= 0).
  word_type power(word_type const& w, std::size_t k);

  //! Space separated indices, `e` for the empty word.
  std::string to_string(word_type const& w);

  //! Compact `x1x2` form used for sandwich labels, `1` for the empty word.
  std::string to_label(word_type const& w);

  //! Inverse of to_string. Accepts `e` or an empty string for the identity.
  word_type parse_word(std::string_view text);

  //! Inverse of to_label.
  word_type parse_label(std::string_view text);

  //! Throws DomainError unless every letter lies in 1..n.
  void validate_word(word_type const& w, std::size_t n);

}  // namespace hkmon

#endif  // HKMON_WORD_HPP_
