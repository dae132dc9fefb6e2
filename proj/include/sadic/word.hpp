#ifndef SADIC_WORD_HPP
#define SADIC_WORD_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

#include "sadic/alphabet.hpp"

namespace sadic {

// Finite word over integer symbols. Value type; lexicographic order follows
// the numeric order of the symbols.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Sym> symbols) : symbols_(std::move(symbols)) {}
  Word(std::initializer_list<Sym> symbols) : symbols_(symbols) {}

  // Each character must be a decimal digit; "011" -> [0,1,1]. Intended for
  // small test alphabets.
  static Word from_digits(const std::string& digits);

  std::size_t size() const { return symbols_.size(); }
  bool empty() const { return symbols_.empty(); }
  Sym operator[](std::size_t i) const { return symbols_[i]; }
  const std::vector<Sym>& symbols() const { return symbols_; }

  std::vector<Sym>::const_iterator begin() const { return symbols_.begin(); }
  std::vector<Sym>::const_iterator end() const { return symbols_.end(); }

  // Factor of length len starting at pos; [pos, pos+len] must lie in range.
  Word sub(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return sub(0, len); }
  Word suffix(std::size_t len) const { return sub(size() - len, len); }

  Word operator+(const Word& rhs) const;
  Word repeat(std::size_t k) const;
  void append(Sym a) { symbols_.push_back(a); }
  void append(const Word& w);

  bool operator==(const Word& rhs) const { return symbols_ == rhs.symbols_; }
  bool operator!=(const Word& rhs) const { return symbols_ != rhs.symbols_; }
  bool operator<(const Word& rhs) const { return symbols_ < rhs.symbols_; }

  // Digits for symbols in [0,10), otherwise bracketed decimal ids.
  std::string str() const;

 private:
  std::vector<Sym> symbols_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

// Bi-infinite periodic point t^Z restricted to index window [lo, hi).
// Position i carries base[i mod |base|] (mathematical mod, so negative
// indices wrap). The window may be empty (lo == hi).
struct PowerWindow {
  Word base;
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::int64_t length() const { return hi - lo; }
  Sym at(std::int64_t i) const;
  // Concrete word carried by the window. Throws resource_error if the window
  // is longer than cap symbols.
  Word materialize(std::int64_t cap = std::int64_t{1} << 20) const;
};

}  // namespace sadic

template <>
struct std::hash<sadic::Word> {
  std::size_t operator()(const sadic::Word& w) const noexcept {
    // FNV-1a over the symbol bytes.
    std::size_t h = 1469598103934665603ull;
    for (sadic::Sym a : w.symbols()) {
      for (int shift = 0; shift < 32; shift += 8) {
        h ^= static_cast<std::size_t>((a >> shift) & 0xff);
        h *= 1099511628211ull;
      }
    }
    return h;
  }
};

#endif
