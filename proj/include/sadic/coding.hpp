#ifndef SADIC_CODING_HPP
#define SADIC_CODING_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sadic/directive.hpp"
#include "sadic/language.hpp"
#include "sadic/morphism.hpp"
#include "sadic/word.hpp"

namespace sadic {

// Sorted legal words of the requested length.
using LanguageProvider = std::function<std::vector<Word>(std::size_t)>;

LanguageProvider subshift_language_provider(const DirectiveSequence& ds,
                                            std::size_t level,
                                            const LanguageOptions& opts = {});

// Language of the images: factors of m(v) over legal upper words v.
LanguageProvider image_language_provider(const Morphism& m,
                                         LanguageProvider upper);

// One way of reading a window of x as x = S^k sigma(y): the anchor k into the
// image of the first window letter, plus the upper window itself.
struct Factorization {
  Morphism sigma;
  std::int64_t k = 0;  // 0 <= k < |sigma(window[0])|
  Word window;

  Factorization(Morphism sigma_, std::int64_t k_, Word window_);

  // c_j = -k + |sigma(window_[0,j))|, defined for j in [0, |window|];
  // strictly increasing with c_0 = -k <= 0 < c_1.
  std::int64_t cut(std::size_t j) const;
};

// Finite union of cylinders {x : x_[-|before|, |after|) = before.after}.
struct ClopenSet {
  struct Cylinder {
    Word before;
    Word after;
  };
  std::vector<Cylinder> cylinders;

  explicit ClopenSet(std::vector<Cylinder> cylinders_);
  // Cylinders pinning only the window starting at the current position.
  static ClopenSet from_words(const std::vector<Word>& words);

  std::size_t radius() const;        // max over cylinders of max side
  std::size_t margin_before() const; // symbols needed left of a position
  std::size_t margin_after() const;  // symbols needed right of a position

  // Positions of w where membership is decidable and holds. Only positions in
  // [margin_before, |w| - margin_after] are decidable at all.
  std::vector<std::size_t> occurrences(const Word& w) const;
};

struct Coding {
  Morphism sigma;          // upper alphabet -> lower alphabet
  LanguageProvider upper;  // language of the upper subshift
  std::optional<std::size_t> reco_radius;  // set once verified
};

// All readings (k, y0) of the window w = x_[-d, d): y0 is the upper letter
// whose image covers position 0 and k the offset of position 0 inside it.
// Found by exhausting legal upper words wide enough to cover the window.
std::vector<std::pair<std::int64_t, Sym>> window_factorizations(
    const Coding& coding, const Word& w, std::size_t d);

// Least d <= d_max for which every legal 2d-window has exactly one reading;
// single-valuedness is monotone in d, so a binary search applies.
std::optional<std::size_t> recognizability_radius(const Coding& coding,
                                                  std::size_t d_max);

struct CompositionReport {
  std::optional<std::size_t> inner_radius;     // (Z, inner) coding of Y
  std::optional<std::size_t> outer_radius;     // (Y, outer) coding of X
  std::optional<std::size_t> composed_radius;  // (Z, outer o inner) of X
  bool consistent = false;  // observations match the equivalence
  bool decided = false;     // false when d_max truncated one side
  std::string note;
};

// Checks that the composed coding is recognizable exactly when both layers
// are, to the extent decidable within d_max.
CompositionReport composition_recognizability_check(
    const Morphism& inner, const Morphism& outer,
    const LanguageProvider& z_language, std::size_t d_max);

// Words read between consecutive occurrences of U, collected over legal
// words of growing length until the set stabilizes.
std::vector<Word> return_words(const LanguageProvider& x_language,
                               const ClopenSet& U, std::size_t scan_length);

// Coding of the level subshift by the return words of U: fresh letters map
// to the return words, the upper language is read off the cut sequences of
// scanned legal words, and the recognizability radius (at most syndetic
// bound + cylinder radius) is verified before returning.
Coding clopen_coding(const DirectiveSequence& ds, std::size_t level,
                     const ClopenSet& U, const LanguageOptions& opts = {});

struct SpecialCodingReport {
  std::size_t n = 0;               // right-special word length
  std::size_t d = 0;               // max(ceil(p(n)/n), p(n+1)-p(n), #A)
  std::size_t alphabet_size = 0;   // #A
  std::size_t rs_count = 0;        // #RS_n
  std::size_t return_count = 0;    // #C, the coding alphabet size
  std::size_t syndetic_bound = 0;  // max return-word length
  std::size_t radius = 0;          // verified recognizability radius
  bool letters_bound = false;      // #C <= d^3
  bool image_bound = false;        // |tau(a)| <= (d+1) n
  bool radius_bound = false;       // radius <= (d+2) n
  bool cuts_match = false;         // cuts = right-special window positions
  bool syndetic_certified = false; // syndetic bound <= p(n) + n
  bool return_count_bound = false; // #C <= #A * #RS_n

  bool all() const {
    return letters_bound && image_bound && radius_bound && cuts_match &&
           syndetic_certified && return_count_bound;
  }
};

// Coding by the cylinders of right-special words of length n, with the full
// bound report.
std::pair<Coding, SpecialCodingReport> special_coding(
    const DirectiveSequence& ds, std::size_t level, std::size_t n,
    const LanguageOptions& opts = {});

}  // namespace sadic

#endif
