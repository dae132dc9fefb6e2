#include "sadic/alphabet.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace sadic {

Alphabet::Alphabet(std::vector<Sym> symbols, std::vector<std::string> glyphs)
    : symbols_(std::move(symbols)), glyphs_(std::move(glyphs)) {
  if (symbols_.empty()) throw std::invalid_argument("alphabet: empty");
  std::unordered_set<Sym> seen;
  for (Sym a : symbols_) {
    if (a < 0) throw std::invalid_argument("alphabet: negative symbol id");
    if (!seen.insert(a).second)
      throw std::invalid_argument("alphabet: duplicate symbol id");
  }
  if (glyphs_.empty()) {
    glyphs_.reserve(symbols_.size());
    for (Sym a : symbols_) glyphs_.push_back(std::to_string(a));
  } else if (glyphs_.size() != symbols_.size()) {
    throw std::invalid_argument("alphabet: glyph count mismatch");
  }
  Sym max_id = *std::max_element(symbols_.begin(), symbols_.end());
  position_.assign(static_cast<std::size_t>(max_id) + 1, -1);
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    position_[static_cast<std::size_t>(symbols_[i])] =
        static_cast<std::int32_t>(i);
}

Alphabet Alphabet::of_size(int k) {
  if (k <= 0) throw std::invalid_argument("alphabet: size must be positive");
  std::vector<Sym> symbols(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) symbols[static_cast<std::size_t>(i)] = i;
  return Alphabet(std::move(symbols));
}

bool Alphabet::contains(Sym a) const {
  return a >= 0 && static_cast<std::size_t>(a) < position_.size() &&
         position_[static_cast<std::size_t>(a)] >= 0;
}

std::size_t Alphabet::index_of(Sym a) const {
  if (!contains(a))
    throw std::invalid_argument("alphabet: unknown symbol " +
                                std::to_string(a));
  return static_cast<std::size_t>(position_[static_cast<std::size_t>(a)]);
}

const std::string& Alphabet::glyph(Sym a) const {
  return glyphs_[index_of(a)];
}

Sym Alphabet::symbol_for_glyph(const std::string& token) const {
  for (std::size_t i = 0; i < glyphs_.size(); ++i)
    if (glyphs_[i] == token) return symbols_[i];
  return -1;
}

}  // namespace sadic
