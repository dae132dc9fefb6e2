#ifndef SADIC_FACTOR_INDEX_HPP
#define SADIC_FACTOR_INDEX_HPP

#include <cstdint>
#include <vector>

#include "sadic/word.hpp"

namespace sadic::detail {

// Suffix array over the concatenation of several words, each terminated by a
// sentinel unique to that word so no factor can cross a boundary and no two
// suffixes can agree on or beyond a sentinel. Lets distinct factors be
// counted or identified per length in O(N) after O(N log N) construction,
// without materializing factor sets.
class SuffixArrayIndex {
 public:
  explicit SuffixArrayIndex(const std::vector<Word>& words);

  std::size_t buffer_size() const { return buffer_.size(); }

  // Symbols from position pos to the end of its word; 0 on a sentinel.
  std::int32_t valid_length(std::size_t pos) const { return valid_[pos]; }

  // Absolute buffer position of offset within the given word.
  std::size_t position(std::size_t word_index, std::size_t offset) const {
    return starts_[word_index] + offset;
  }

  // counts[l-1] = number of distinct factors of length l, l in [1, max_length].
  std::vector<std::size_t> distinct_factor_counts(std::size_t max_length) const;

  // ids[pos] for positions with valid_length >= length: equal ids iff equal
  // length-`length` factors; -1 where the factor does not fit. Ids are dense
  // in [0, #classes) and ordered by the factors' lexicographic order.
  std::vector<std::int64_t> factor_class_ids(std::size_t length) const;

 private:
  std::vector<std::int32_t> buffer_;
  std::vector<std::int32_t> sa_;
  std::vector<std::int32_t> rank_;
  std::vector<std::int32_t> lcp_;  // lcp_[i] between sa_[i-1] and sa_[i]
  std::vector<std::int32_t> valid_;
  std::vector<std::size_t> starts_;
};

}  // namespace sadic::detail

#endif
