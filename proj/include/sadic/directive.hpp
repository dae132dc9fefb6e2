#ifndef SADIC_DIRECTIVE_HPP
#define SADIC_DIRECTIVE_HPP

#include <cstddef>
#include <vector>

#include "sadic/morphism.hpp"

namespace sadic {

// Directive sequence tau_0, tau_1, ... with tau_n mapping the level-(n+1)
// alphabet into words over the level-n alphabet. The explicitly listed levels
// are either followed by repeating the last tail_period of them forever
// (tail = repeat) or by nothing (tail = finite, for diagnostics only).
class DirectiveSequence {
 public:
  enum class Tail { repeat, finite };

  DirectiveSequence(std::vector<Morphism> levels, Tail tail = Tail::repeat,
                    std::size_t tail_period = 1, bool primitive_hint = false);

  // Single endomorphism repeated forever.
  static DirectiveSequence stationary(const Morphism& m,
                                      bool primitive_hint = false);

  std::size_t explicit_levels() const { return levels_.size(); }
  Tail tail() const { return tail_; }
  std::size_t tail_period() const { return tail_period_; }
  bool primitive_hint() const { return primitive_hint_; }

  // Whether tau_n exists (always for repeat tails).
  bool has_level(std::size_t n) const;
  const Morphism& level(std::size_t n) const;

  // Alphabet A_n: the target of tau_n, equivalently the source of tau_{n-1}.
  const Alphabet& alphabet_at(std::size_t n) const;

  // tau_[n,m) = tau_n o tau_{n+1} o ... o tau_{m-1}; identity when n = m.
  Morphism block(std::size_t n, std::size_t m) const;

  // Index of the first level of the repeated block.
  std::size_t tail_base() const { return levels_.size() - tail_period_; }

 private:
  std::vector<Morphism> levels_;
  Tail tail_;
  std::size_t tail_period_;
  bool primitive_hint_;
};

}  // namespace sadic

#endif
