#include "factor_index.hpp"

#include <algorithm>
#include <stdexcept>

namespace sadic::detail {

namespace {

// Doubling construction with radix passes; keys at each round are
// (rank[i], rank[i+k]) pairs compressed to dense ranks.
std::vector<std::int32_t> build_suffix_array(
    const std::vector<std::int32_t>& s) {
  std::int32_t n = static_cast<std::int32_t>(s.size());
  std::vector<std::int32_t> sa(n), rank(n), tmp(n), cnt;
  std::int32_t max_value = 0;
  for (std::int32_t v : s) max_value = std::max(max_value, v);

  // Initial ranks = symbol values (already non-negative and dense enough).
  cnt.assign(static_cast<std::size_t>(max_value) + 2, 0);
  for (std::int32_t i = 0; i < n; ++i) ++cnt[static_cast<std::size_t>(s[i])];
  for (std::size_t i = 1; i < cnt.size(); ++i) cnt[i] += cnt[i - 1];
  for (std::int32_t i = n - 1; i >= 0; --i)
    sa[static_cast<std::size_t>(--cnt[static_cast<std::size_t>(s[i])])] = i;
  rank[sa[0]] = 0;
  for (std::int32_t i = 1; i < n; ++i)
    rank[sa[i]] = rank[sa[i - 1]] + (s[sa[i]] != s[sa[i - 1]] ? 1 : 0);

  std::vector<std::int32_t> sa2(n);
  for (std::int32_t k = 1; k < n; k <<= 1) {
    if (rank[sa[n - 1]] == n - 1) break;
    // Sort by second key: suffixes with i + k >= n come first, the rest in
    // the order of sa shifted left by k.
    std::int32_t idx = 0;
    for (std::int32_t i = n - k; i < n; ++i) sa2[idx++] = i;
    for (std::int32_t i = 0; i < n; ++i)
      if (sa[i] >= k) sa2[idx++] = sa[i] - k;
    // Stable counting sort by first key.
    std::int32_t classes = rank[sa[n - 1]] + 1;
    cnt.assign(static_cast<std::size_t>(classes) + 1, 0);
    for (std::int32_t i = 0; i < n; ++i) ++cnt[static_cast<std::size_t>(rank[i])];
    for (std::size_t i = 1; i < cnt.size(); ++i) cnt[i] += cnt[i - 1];
    for (std::int32_t i = n - 1; i >= 0; --i)
      sa[static_cast<std::size_t>(--cnt[static_cast<std::size_t>(rank[sa2[i]])])] =
          sa2[i];
    // Recompute ranks.
    tmp[sa[0]] = 0;
    for (std::int32_t i = 1; i < n; ++i) {
      std::int32_t a = sa[i - 1], b = sa[i];
      bool same = rank[a] == rank[b] && a + k < n && b + k < n &&
                  rank[a + k] == rank[b + k];
      tmp[b] = tmp[a] + (same ? 0 : 1);
    }
    rank = tmp;
  }
  return sa;
}

}  // namespace

SuffixArrayIndex::SuffixArrayIndex(const std::vector<Word>& words) {
  std::size_t total = 0;
  for (const Word& w : words) total += w.size() + 1;
  if (total == 0) throw std::invalid_argument("suffix array: no input");
  buffer_.reserve(total);
  valid_.assign(total, 0);
  starts_.reserve(words.size());
  // Sentinel for word i is value i; real symbols are shifted past the
  // sentinel range. Sentinel values are mutually distinct, so no two
  // different suffixes can ever match across one.
  std::int32_t shift = static_cast<std::int32_t>(words.size());
  for (std::size_t wi = 0; wi < words.size(); ++wi) {
    starts_.push_back(buffer_.size());
    const Word& w = words[wi];
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (w[i] < 0)
        throw std::invalid_argument("suffix array: negative symbol");
      valid_[buffer_.size()] = static_cast<std::int32_t>(w.size() - i);
      buffer_.push_back(w[i] + shift);
    }
    buffer_.push_back(static_cast<std::int32_t>(wi));
  }

  sa_ = build_suffix_array(buffer_);
  std::int32_t n = static_cast<std::int32_t>(buffer_.size());
  rank_.assign(n, 0);
  for (std::int32_t i = 0; i < n; ++i) rank_[sa_[i]] = i;

  // Kasai.
  lcp_.assign(n, 0);
  std::int32_t h = 0;
  for (std::int32_t pos = 0; pos < n; ++pos) {
    if (rank_[pos] == 0) {
      h = 0;
      continue;
    }
    std::int32_t prev = sa_[rank_[pos] - 1];
    if (h > 0) --h;
    while (pos + h < n && prev + h < n && buffer_[pos + h] == buffer_[prev + h])
      ++h;
    lcp_[rank_[pos]] = h;
  }
}

std::vector<std::size_t> SuffixArrayIndex::distinct_factor_counts(
    std::size_t max_length) const {
  // #distinct factors of length l = #suffixes long enough to carry one minus
  // #adjacent suffix pairs agreeing on at least l symbols (each such pair
  // merges one duplicate; runs of equal factors are contiguous in the SA).
  std::vector<std::size_t> have(max_length + 2, 0), dup(max_length + 2, 0);
  for (std::int32_t v : valid_)
    ++have[std::min<std::size_t>(static_cast<std::size_t>(v), max_length)];
  for (std::int32_t l : lcp_)
    ++dup[std::min<std::size_t>(static_cast<std::size_t>(l), max_length)];
  // Suffix sums: have[l] = #positions with valid >= l, dup likewise.
  for (std::size_t l = max_length; l >= 1; --l) {
    have[l] += have[l + 1];
    dup[l] += dup[l + 1];
  }
  std::vector<std::size_t> counts(max_length);
  for (std::size_t l = 1; l <= max_length; ++l) counts[l - 1] = have[l] - dup[l];
  return counts;
}

std::vector<std::int64_t> SuffixArrayIndex::factor_class_ids(
    std::size_t length) const {
  std::vector<std::int64_t> ids(buffer_.size(), -1);
  std::int64_t next_id = -1;
  bool run_open = false;
  std::int32_t run_min_lcp = 0;
  for (std::size_t r = 0; r < sa_.size(); ++r) {
    std::int32_t pos = sa_[r];
    if (run_open) run_min_lcp = std::min(run_min_lcp, lcp_[r]);
    if (static_cast<std::size_t>(valid_[pos]) < length) continue;
    if (!run_open || run_min_lcp < static_cast<std::int32_t>(length)) ++next_id;
    ids[pos] = next_id;
    run_open = true;
    run_min_lcp = lcp_.empty() ? 0 : static_cast<std::int32_t>(buffer_.size());
  }
  return ids;
}

}  // namespace sadic::detail
