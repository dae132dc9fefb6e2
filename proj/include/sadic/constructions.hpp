#ifndef SADIC_CONSTRUCTIONS_HPP
#define SADIC_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sadic/alphabet.hpp"
#include "sadic/coding.hpp"
#include "sadic/directive.hpp"
#include "sadic/language.hpp"
#include "sadic/morphism.hpp"
#include "sadic/word.hpp"

namespace sadic {

// Scale separator: with d0 = M*d and L = max(lengths), scans the bands
// (L/d0^(l+1), L/d0^l] for l in [1, #lengths+1], takes the least empty one
// and returns eps = floor(d*L / d0^(l*+1)). Every input length is then
// either > M*eps or <= eps/d; both facts are asserted before returning.
std::uint64_t gap_epsilon(const std::vector<std::uint64_t>& lengths,
                          std::uint64_t d, std::uint64_t M = 10'000);

// w = v u u' v' with the periodic-or-periodicity-free middle: tag A pins
// u u' (99*eps on each side of the junction) to the centered window of s^Z
// for a primitive s of length <= eps; tag B pins |u| = |u'| = 500*eps with
// no such window inside u u'. Both tags require |v| and |v'| to be at least
// floor((n - 1000*eps)/2); tag B fixes |v| to exactly that value.
struct Decomposition {
  enum class Tag { A, B };
  Word v, u, u_prime, v_prime;
  Tag tag = Tag::A;
  std::size_t eps = 0;
};

// Among all valid decompositions, minimizes |v u|; ties prefer tag A, then
// the lexicographically least u.
Decomposition decompose_special(const Word& w, std::size_t eps,
                                const Alphabet& alphabet);

// Parameters of the linear-complexity family: level n uses block counts
// ell[n] and exponents p[n][j-1] in [8^j * k[n], 2 * 8^j * k[n]) for
// j = 1..ell[n].
struct NegativeFamilyParams {
  std::vector<std::size_t> ell;
  std::vector<std::vector<std::uint64_t>> p;
  std::vector<std::uint64_t> k;

  // Stationary instance with ell = 1, k = 1, p = (8) at every level.
  static NegativeFamilyParams minimal(std::size_t levels);
  void validate() const;  // throws invalid_argument on any range violation
};

// tau_n(a) = a^p1 abar^p1 a^p2 abar^p2 ... over {0,1}.
Morphism negative_tau(const NegativeFamilyParams& params, std::size_t n);

// The family as a directive sequence (levels from params, last one
// repeating); all images are positive so languages come out exact.
DirectiveSequence negative_family_dirseq(const NegativeFamilyParams& params);

struct NegativeFamilyReport {
  std::size_t k_max = 0;
  std::size_t depth = 0;
  double max_ratio = 0.0;   // max over k <= k_max of p(k)/k
  std::size_t worst_k = 0;  // the k attaining max_ratio
  std::vector<std::size_t> image_lengths;  // |tau_[0,n)|, n = 1..depth
  // Reading radius of (X^(n), tau_[0,n)) for n = 0..depth-1, capped at the
  // composed image length; empty optional when no radius within the cap.
  std::vector<std::optional<std::size_t>> radii;
  std::vector<std::size_t> radius_caps;    // |tau_[0,n)|, n = 0..depth-1
  std::vector<std::size_t> spacer_counts;  // verified 1 0^p 1 words per row
  bool complexity_linear = false;  // p(k) <= 1024 k for all k <= k_max
  bool lengths_symmetric = false;  // images are letter swaps of each other
  bool recognizable = false;       // radius <= |tau_[0,n)| for n < depth
  bool spacers_present = false;    // 1 0^p 1 legal at its level
  std::string failure;             // counterexample note for a failed item

  bool all() const {
    return complexity_linear && lengths_symmetric && recognizable &&
           spacers_present;
  }
};

// Checks the four family properties up to the given composition depth and
// complexity horizon; failures are recorded in the report (with a
// counterexample window where one exists) instead of thrown.
NegativeFamilyReport negative_family_check(const NegativeFamilyParams& params,
                                           std::size_t depth,
                                           std::size_t k_max);

// Like negative_family_check, but throws verification_error on the first
// failing item.
NegativeFamilyReport negative_family_verify(const NegativeFamilyParams& params,
                                            std::size_t depth,
                                            std::size_t k_max);

// Tuples (p_0..p_{l-1}) with p_j * n0 in [8^j * n, 2 * 8^j * n), in
// lexicographic order.
std::vector<std::vector<std::uint64_t>> enumerate_P(std::uint64_t n,
                                                    std::uint64_t n0,
                                                    std::size_t l);

// Whether some E inside [n/d, d*n) with #E <= d writes every p_j * n0 as a
// non-negative integer combination of E. Micro scale only: d <= 3 and the
// candidate interval at most 64 integers wide.
bool is_in_K(const std::vector<std::uint64_t>& tuple, std::uint64_t n,
             std::uint64_t n0, std::uint64_t d);

// First P-tuple outside K, if any.
std::optional<std::vector<std::uint64_t>> sample_P_minus_K(std::uint64_t n,
                                                           std::uint64_t n0,
                                                           std::uint64_t d,
                                                           std::size_t l);

// Dyadic cover of w at granularity ell: at every scale i with 2^i * ell <
// |w| and phase j in [0,7], w is tiled into pieces whose cumulative lengths
// are floor((8k+j)|w| / 2^(i+3)); V consists of all prefixes and suffixes of
// length >= ell of the pieces. Guarantees, asserted before returning:
// (1) at most 32|w|/ell distinct members per length, (2) every member has
// length in [ell, |w|], (3) every factor of w of length >= 64*ell splits
// into two members.
struct CoverSet {
  Word w;
  std::size_t ell = 0;
  std::size_t level_count = 0;  // number of scales i actually used
  // boundaries[i*8+j]: piece limits at scale i, phase j (first 0, last |w|)
  std::vector<std::vector<std::size_t>> boundaries;
  // distinct members per length (index = length; 0 below ell)
  std::vector<std::size_t> counts_by_length;

  std::size_t min_length() const;  // <V>; SIZE_MAX when V is empty
  std::size_t max_length() const;  // |V|; 0 when V is empty
  std::size_t total_distinct() const;

  // Materializes V, sorted by length then lexicographically.
  std::vector<Word> words(std::size_t max_total_symbols = 1u << 26) const;
};

CoverSet cfpz_cover(const Word& w, std::size_t ell);

// p_X(<W>) against the two-block cover bound |W| * #(root W)^2. The cover
// certificate — every legal word of length <W> is a factor of some u.v
// with u, v in W — is checked first. (Windows of the shortest block
// length cross at most one block boundary, so two blocks suffice.)
struct PowerCoverBound {
  std::size_t bound = 0;
  std::size_t actual = 0;
  bool pass = false;
};

PowerCoverBound power_cover_px_bound(const LanguageProvider& lang,
                                     const std::vector<Word>& W);

// p(l+1) - p(l) against 256 #A #(root W)^2 |W|^2 / l^2 (compared exactly in
// integers; bound reported as a double).
struct DifferenceBound {
  double bound = 0.0;
  std::size_t actual = 0;
  bool pass = false;
};

DifferenceBound first_difference_bound(const LanguageProvider& lang,
                                       const std::vector<Word>& W,
                                       std::size_t l);

// Occurrences of prefixes of y at mutually close positions of x force a
// common period: returns w such that every x_[p_i, p_j) is a power of w and
// every x_[p_i, p_j + min(l_i, l_j)) is a prefix of w^inf (both asserted).
// A single position degenerates to the root of its window.
Word synchronize_occurrences(const Word& x, const Word& y,
                             const std::vector<std::size_t>& positions,
                             const std::vector<std::size_t>& lengths);

}  // namespace sadic

#endif
