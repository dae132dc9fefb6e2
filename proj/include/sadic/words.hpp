#ifndef SADIC_WORDS_HPP
#define SADIC_WORDS_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sadic/alphabet.hpp"
#include "sadic/word.hpp"

namespace sadic {

// Plain factor scan; empty pattern always occurs.
bool occurs_in(const Word& pattern, const Word& text);

// pattern occurs in the infinite power base^inf (equivalently in base^Z).
bool occurs_in_power(const Word& pattern, const Word& base);

// w shifted left by i positions (cyclically); i may be any integer.
Word rotation(const Word& w, std::int64_t i);

// Shortest prefix u with w = u^k, k >= 1.
Word root(const Word& w);

bool is_primitive(const Word& w);

// Least p >= 1 with w[i] = w[i+p] wherever both sides are defined. Equals the
// least p such that w occurs in a power of some length-p word.
std::size_t period(const Word& w);

// w occurs in u^(ceil(|w|/|u|)+1).
bool is_periodic_by(const Word& w, const Word& u);

bool are_conjugate(const Word& u, const Word& v);

// Requires w to be a prefix of both u^inf and v^inf. When
// |w| >= |u| + |v| - 1 the common root of u and v is forced and returned;
// below that threshold the common root is returned when one exists by direct
// comparison, otherwise nullopt (the bound is sharp).
std::optional<Word> fine_wilf(const Word& u, const Word& v, const Word& w);

// S^i t^Z = t^Z  <=>  i = 0 mod |root(t)|.
bool shift_fixes_power(const Word& t, std::int64_t i);

// If the windows t^Z_[i,i+len) and s^Z_[j,j+len) agree and
// len >= |s| + |t| - 1, the shifted points S^i t^Z and S^j s^Z are equal;
// the returned witness is their common primitive base aligned at the origin.
// Below the threshold the conclusion is checked directly. Differing windows
// give nullopt.
std::optional<Word> power_window_sync(const Word& t, const Word& s,
                                      std::int64_t i, std::int64_t j,
                                      std::int64_t len);

// Requires uv to occur in t^inf and vw in s^inf. When |v| >= |t| + |s| - 1
// the overlap forces uvw to occur in both powers (asserted); otherwise the
// direct occurrence check decides.
bool overlap_synchronize(const Word& u, const Word& v, const Word& w,
                         const Word& t, const Word& s);

struct LocalToGlobal {
  // Window start position -> base whose power contains that window.
  std::vector<std::pair<std::size_t, Word>> assignment;
  std::size_t period;        // per(u)
  std::size_t period_bound;  // max base length; period <= period_bound
};

// Every factor of u of length twice the longest base must occur in the power
// of some base (hypothesis_error naming the offending factor otherwise); the
// period of u is then bounded by the longest base length and u occurs in the
// power of every assigned base.
LocalToGlobal global_period_from_local(const Word& u,
                                       const std::vector<Word>& bases);

// If per(u) <= k, nullopt. Otherwise (requires |u| >= 2k) some factor of
// length exactly 2k already has period > k; the first such factor and its
// position are returned.
std::optional<std::pair<std::size_t, Word>> aperiodicity_witness(const Word& u,
                                                                 std::size_t k);

// One representative per rotation class of primitive words of each length in
// [1, maxlen]: the lexicographically least rotation. Output sorted by length
// then lexicographically.
std::vector<Word> primitive_representatives(const Alphabet& alphabet,
                                            std::size_t maxlen);

}  // namespace sadic

#endif
