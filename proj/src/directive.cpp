#include "sadic/directive.hpp"

#include <stdexcept>
#include <string>

namespace sadic {

DirectiveSequence::DirectiveSequence(std::vector<Morphism> levels, Tail tail,
                                     std::size_t tail_period,
                                     bool primitive_hint)
    : levels_(std::move(levels)),
      tail_(tail),
      tail_period_(tail == Tail::finite ? 0 : tail_period),
      primitive_hint_(primitive_hint) {
  if (levels_.empty())
    throw std::invalid_argument("directive sequence: no levels");
  for (std::size_t i = 0; i + 1 < levels_.size(); ++i)
    if (levels_[i].source() != levels_[i + 1].target())
      throw std::invalid_argument(
          "directive sequence: alphabet mismatch between levels " +
          std::to_string(i) + " and " + std::to_string(i + 1));
  if (tail_ == Tail::repeat) {
    if (tail_period_ < 1 || tail_period_ > levels_.size())
      throw std::invalid_argument("directive sequence: bad tail period");
    if (levels_.back().source() != levels_[tail_base()].target())
      throw std::invalid_argument(
          "directive sequence: repeated block does not chain with itself");
  }
}

DirectiveSequence DirectiveSequence::stationary(const Morphism& m,
                                                bool primitive_hint) {
  return DirectiveSequence({m}, Tail::repeat, 1, primitive_hint);
}

bool DirectiveSequence::has_level(std::size_t n) const {
  return tail_ == Tail::repeat || n < levels_.size();
}

const Morphism& DirectiveSequence::level(std::size_t n) const {
  if (n < levels_.size()) return levels_[n];
  if (tail_ == Tail::finite)
    throw std::invalid_argument("directive sequence: level " +
                                std::to_string(n) + " beyond finite end");
  std::size_t base = tail_base();
  return levels_[base + (n - base) % tail_period_];
}

const Alphabet& DirectiveSequence::alphabet_at(std::size_t n) const {
  if (n == 0) return levels_[0].target();
  if (has_level(n)) return level(n).target();
  return level(n - 1).source();
}

Morphism DirectiveSequence::block(std::size_t n, std::size_t m) const {
  if (n > m) throw std::invalid_argument("block: n > m");
  if (n == m) return Morphism::identity(alphabet_at(n));
  Morphism result = level(m - 1);
  for (std::size_t i = m - 1; i > n; --i) result = compose(level(i - 1), result);
  return result;
}

}  // namespace sadic
