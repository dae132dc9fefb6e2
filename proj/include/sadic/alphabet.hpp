#ifndef SADIC_ALPHABET_HPP
#define SADIC_ALPHABET_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace sadic {

using Sym = std::int32_t;

// Finite ordered alphabet. Symbols are small non-negative integers; the order
// in which they are listed is the total order used for lexicographic
// comparisons and canonical output. Glyphs are display metadata only and play
// no role in equality.
class Alphabet {
 public:
  Alphabet(std::vector<Sym> symbols, std::vector<std::string> glyphs = {});

  // {0, 1, ..., k-1} with decimal glyphs.
  static Alphabet of_size(int k);

  std::size_t size() const { return symbols_.size(); }
  Sym symbol(std::size_t index) const { return symbols_[index]; }
  const std::vector<Sym>& symbols() const { return symbols_; }

  bool contains(Sym a) const;
  // Position of a in the order; throws std::invalid_argument if absent.
  std::size_t index_of(Sym a) const;

  const std::string& glyph(Sym a) const;
  // Symbol whose glyph equals the token, or -1.
  Sym symbol_for_glyph(const std::string& token) const;

  // Extensional equality on the ordered id list; glyphs ignored.
  bool operator==(const Alphabet& other) const {
    return symbols_ == other.symbols_;
  }
  bool operator!=(const Alphabet& other) const { return !(*this == other); }

 private:
  std::vector<Sym> symbols_;
  std::vector<std::string> glyphs_;
  // Dense id -> position table (-1 for absent); ids are small by contract.
  std::vector<std::int32_t> position_;
};

}  // namespace sadic

#endif
