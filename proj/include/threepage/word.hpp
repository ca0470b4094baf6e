#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace threepage {

// Letter kinds of the 15-letter alphabet {a_i, b_i, c_i, d_i, x_i}, i in Z3.
enum class Kind : std::uint8_t { A = 0, B, C, D, X };

// Page index arithmetic is mod 3.
inline int pageAdd(int p, int d) { return ((p + d) % 3 + 3) % 3; }

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

struct Letter {
  std::uint8_t code = 0;  // kind * 3 + page, 0..14

  static Letter make(Kind k, int page) {
    return Letter{static_cast<std::uint8_t>(static_cast<int>(k) * 3 + pageAdd(page, 0))};
  }
  Kind kind() const { return static_cast<Kind>(code / 3); }
  int page() const { return code % 3; }
  char kindChar() const { return "abcdx"[code / 3]; }
  std::string str() const { return std::string{kindChar(), static_cast<char>('0' + page())}; }

  friend auto operator<=>(const Letter&, const Letter&) = default;
};

// A word over the alphabet; the empty word is the unit and prints as "1".
// Words are immutable values in spirit: every operation returns a new word.
// Internally one byte per letter so substring search and hashing are cheap.
class Word {
public:
  Word() = default;
  explicit Word(const std::vector<Letter>& ls) {
    data_.reserve(ls.size());
    for (Letter l : ls) data_.push_back(static_cast<char>(l.code));
  }

  static Word parse(std::string_view text);  // throws ParseError with byte offset
  std::string str() const;

  bool empty() const { return data_.empty(); }
  std::size_t size() const { return data_.size(); }
  Letter at(std::size_t i) const { return Letter{static_cast<std::uint8_t>(data_[i])}; }

  Word& push(Letter l) {
    data_.push_back(static_cast<char>(l.code));
    return *this;
  }
  Word& append(const Word& o) {
    data_ += o.data_;
    return *this;
  }
  friend Word operator+(Word a, const Word& b) {
    a.data_ += b.data_;
    return a;
  }

  Word sub(std::size_t pos, std::size_t len) const {
    Word w;
    w.data_ = data_.substr(pos, len);
    return w;
  }
  // Replace [pos, pos+len) by `with`.
  Word replaced(std::size_t pos, std::size_t len, const Word& with) const {
    Word w;
    w.data_ = data_.substr(0, pos) + with.data_ + data_.substr(pos + len);
    return w;
  }
  bool matchesAt(std::size_t pos, const Word& pattern) const {
    return pos + pattern.size() <= size() &&
           data_.compare(pos, pattern.size(), pattern.data_) == 0;
  }
  // Start positions of all occurrences; an empty pattern matches every gap.
  std::vector<std::size_t> occurrences(const Word& pattern) const;

  int countX() const;

  static Word repeated(Letter l, int n) {
    Word w;
    w.data_.assign(static_cast<std::size_t>(n), static_cast<char>(l.code));
    return w;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.data_ <=> b.data_;
  }

  const std::string& raw() const { return data_; }

private:
  std::string data_;
};

// Single-letter word helper.
inline Word lw(Kind k, int page) {
  Word w;
  w.push(Letter::make(k, page));
  return w;
}

}  // namespace threepage

template <>
struct std::hash<threepage::Word> {
  std::size_t operator()(const threepage::Word& w) const noexcept {
    return std::hash<std::string>{}(w.raw());
  }
};
