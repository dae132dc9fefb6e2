#ifndef SADIC_MORPHISM_HPP
#define SADIC_MORPHISM_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "sadic/alphabet.hpp"
#include "sadic/word.hpp"

namespace sadic {

// Non-erasing morphism between free monoids: each source letter maps to a
// nonempty word over the target alphabet. Immutable value.
class Morphism {
 public:
  // images are indexed by the source alphabet's order.
  Morphism(Alphabet source, Alphabet target, std::vector<Word> images);

  static Morphism identity(const Alphabet& a);

  const Alphabet& source() const { return source_; }
  const Alphabet& target() const { return target_; }
  const Word& image(Sym a) const { return images_[source_.index_of(a)]; }
  const std::vector<Word>& images() const { return images_; }

  Word apply(const Word& w) const;

  // Images of the two halves concatenated; .second marks where the image of
  // the left half ends (the center of the two-sided expansion).
  std::pair<Word, std::size_t> apply_two_sided(const Word& left,
                                               const Word& right) const;

  std::size_t max_image_length() const;  // written |sigma|
  std::size_t min_image_length() const;  // written <sigma>

  // Every image contains every target letter.
  bool positive() const;
  // All images share one first letter and one last letter.
  bool proper() const;
  // The letter -> image map is injective.
  bool injective_on_letters() const;

  bool operator==(const Morphism& rhs) const {
    return source_ == rhs.source_ && target_ == rhs.target_ &&
           images_ == rhs.images_;
  }
  bool operator!=(const Morphism& rhs) const { return !(*this == rhs); }

 private:
  Alphabet source_;
  Alphabet target_;
  std::vector<Word> images_;
};

// outer after inner; inner's target must equal outer's source.
Morphism compose(const Morphism& outer, const Morphism& inner);

}  // namespace sadic

#endif
