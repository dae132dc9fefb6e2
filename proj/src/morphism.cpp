#include "sadic/morphism.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sadic {

Morphism::Morphism(Alphabet source, Alphabet target, std::vector<Word> images)
    : source_(std::move(source)),
      target_(std::move(target)),
      images_(std::move(images)) {
  if (images_.size() != source_.size())
    throw std::invalid_argument("morphism: one image per source letter");
  for (const Word& im : images_) {
    if (im.empty()) throw std::invalid_argument("morphism: empty image");
    for (Sym b : im)
      if (!target_.contains(b))
        throw std::invalid_argument("morphism: image letter " +
                                    std::to_string(b) +
                                    " outside target alphabet");
  }
}

Morphism Morphism::identity(const Alphabet& a) {
  std::vector<Word> images;
  images.reserve(a.size());
  for (Sym s : a.symbols()) images.push_back(Word{s});
  return Morphism(a, a, std::move(images));
}

Word Morphism::apply(const Word& w) const {
  std::size_t total = 0;
  for (Sym a : w) total += images_[source_.index_of(a)].size();
  std::vector<Sym> out;
  out.reserve(total);
  for (Sym a : w) {
    const Word& im = images_[source_.index_of(a)];
    out.insert(out.end(), im.begin(), im.end());
  }
  return Word(std::move(out));
}

std::pair<Word, std::size_t> Morphism::apply_two_sided(
    const Word& left, const Word& right) const {
  Word l = apply(left);
  std::size_t center = l.size();
  l.append(apply(right));
  return {std::move(l), center};
}

std::size_t Morphism::max_image_length() const {
  std::size_t m = 0;
  for (const Word& im : images_) m = std::max(m, im.size());
  return m;
}

std::size_t Morphism::min_image_length() const {
  std::size_t m = images_.front().size();
  for (const Word& im : images_) m = std::min(m, im.size());
  return m;
}

bool Morphism::positive() const {
  for (const Word& im : images_) {
    for (Sym b : target_.symbols()) {
      bool found = false;
      for (Sym c : im)
        if (c == b) {
          found = true;
          break;
        }
      if (!found) return false;
    }
  }
  return true;
}

bool Morphism::proper() const {
  Sym first = images_.front()[0];
  Sym last = images_.front()[images_.front().size() - 1];
  for (const Word& im : images_)
    if (im[0] != first || im[im.size() - 1] != last) return false;
  return true;
}

bool Morphism::injective_on_letters() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] == images_[j]) return false;
  return true;
}

Morphism compose(const Morphism& outer, const Morphism& inner) {
  if (inner.target() != outer.source())
    throw std::invalid_argument("compose: alphabet mismatch");
  std::vector<Word> images;
  images.reserve(inner.source().size());
  for (const Word& im : inner.images()) images.push_back(outer.apply(im));
  return Morphism(inner.source(), outer.target(), std::move(images));
}

}  // namespace sadic
