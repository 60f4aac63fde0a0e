#include "hkmon/word.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace hkmon {

  namespace {
    letter_type parse_letter(std::string_view tok) {
      letter_type value = 0;
      auto const* first = tok.data();
      auto const* last  = tok.data() + tok.size();
      auto [ptr, ec]    = std::from_chars(first, last, value);
      if (tok.empty() || ec != std::errc() || ptr != last || value == 0) {
        throw DomainError("invalid generator index '" + std::string(tok)
                          + "'");
      }
      return value;
    }
  }  // namespace

  bool shortlex_less(word_type const& u, word_type const& v) noexcept {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return std::lexicographical_compare(u.begin(), u.end(), v.begin(), v.end());
  }

  word_type concat(word_type const& u, word_type const& v) {
    word_type result;
    result.reserve(u.size() + v.size());
    result.insert(result.end(), u.begin(), u.end());
    result.insert(result.end(), v.begin(), v.end());
    return result;
  }

  word_type power(word_type const& w, std::size_t k) {
    word_type result;
    result.reserve(w.size() * k);
    for (std::size_t i = 0; i < k; ++i) {
      result.insert(result.end(), w.begin(), w.end());
    }
    return result;
  }

  std::string to_string(word_type const& w) {
    if (w.empty()) {
      return "e";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ' ';
      }
      out += std::to_string(w[i]);
    }
    return out;
  }

  std::string to_label(word_type const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string out;
    for (auto a : w) {
      out += 'x';
      out += std::to_string(a);
    }
    return out;
  }

  word_type parse_word(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string        tok;
    word_type          w;
    bool               saw_identity = false;
    while (in >> tok) {
      if (tok == "e") {
        saw_identity = true;
        continue;
      }
      w.push_back(parse_letter(tok));
    }
    if (saw_identity && !w.empty()) {
      throw DomainError("'e' cannot be combined with other letters");
    }
    return w;
  }

  word_type parse_label(std::string_view text) {
    if (text == "1" || text == "e") {
      return {};
    }
    word_type   w;
    std::size_t pos = 0;
    while (pos < text.size()) {
      if (text[pos] != 'x') {
        throw DomainError("invalid label '" + std::string(text) + "'");
      }
      std::size_t end = pos + 1;
      while (end < text.size() && text[end] >= '0' && text[end] <= '9') {
        ++end;
      }
      w.push_back(parse_letter(text.substr(pos + 1, end - pos - 1)));
      pos = end;
    }
    if (w.empty()) {
      throw DomainError("empty label");
    }
    return w;
  }

  void validate_word(word_type const& w, std::size_t n) {
    for (auto a : w) {
      if (a == 0 || a > n) {
        throw DomainError("letter " + std::to_string(a) + " out of range 1.."
                          + std::to_string(n));
      }
    }
  }

}  // namespace hkmon
