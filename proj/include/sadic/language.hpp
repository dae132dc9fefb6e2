#ifndef SADIC_LANGUAGE_HPP
#define SADIC_LANGUAGE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sadic/directive.hpp"
#include "sadic/word.hpp"

namespace sadic {

struct LanguageOptions {
  std::size_t max_depth = 64;            // levels explored below the query level
  std::size_t max_symbols = 10'000'000;  // cumulative expanded symbols
};

// exact: certified equal to the factor set of the generated subshift;
// lower_approximation: a sound subset (finite tails, or uncertified
// recurrence without a primitivity hint).
enum class LangStatus { exact, lower_approximation };

struct LanguageResult {
  std::vector<Word> words;  // sorted lexicographically
  LangStatus status = LangStatus::exact;
  std::size_t depth = 0;  // level whose image factors realized the set

  bool contains(const Word& w) const;
};

// All length-`length` factors of the level-`level` subshift generated by the
// directive sequence: factors of tau_[level,m)(a) over recurrent letters a,
// deepened until two consecutive depths agree and every image block is at
// least twice the requested length.
LanguageResult language(const DirectiveSequence& ds, std::size_t level,
                        std::size_t length, const LanguageOptions& opts = {});

struct ComplexityTable {
  std::size_t level = 0;
  std::vector<std::size_t> values;  // values[i] = p(i+1)
  LangStatus status = LangStatus::exact;
  std::size_t depth = 0;

  std::size_t max_length() const { return values.size(); }
  std::size_t at(std::size_t n) const;  // p(n), 1-based
  // p(n+1) - p(n); may be negative only for approximate tables.
  std::int64_t delta(std::size_t n) const;
};

// p(1..max_length) in one pass; factor multiplicities are counted through a
// suffix array over the level images, so no per-length factor sets are
// materialized.
ComplexityTable complexity(const DirectiveSequence& ds, std::size_t level,
                           std::size_t max_length,
                           const LanguageOptions& opts = {});

// Words w of the given length with at least two distinct right extensions
// wa, wb in the language. The classical two-sided bound
// (p(n+1) - p(n)) / #A <= #RS_n <= p(n+1) - p(n) is asserted.
std::vector<Word> right_special(const DirectiveSequence& ds, std::size_t level,
                                std::size_t length,
                                const LanguageOptions& opts = {});

// Maximal powers of v in the level-0 language: v^k (k <= k_max) such that
// u v^k w is legal for some |u| = |w| = |v| with u != v != w.
std::vector<Word> power_set(const DirectiveSequence& ds, const Word& v,
                            std::size_t k_max, const LanguageOptions& opts = {});

// Largest #power_set(v) over legal bases v with |v| <= max_base_len; a lower
// bound for the power complexity of the subshift.
std::size_t pcom_estimate(const DirectiveSequence& ds,
                          std::size_t max_base_len, std::size_t k_max,
                          const LanguageOptions& opts = {});

// Smallest m in [n, 2n) with p(m+1) - p(m) <= 2d; requires the table to
// cover [n, 2n] with p(2n) - p(n) <= 2dn, which forces existence (the
// average growth over the range is then at most 2d).
std::size_t find_low_growth_length(const ComplexityTable& table, std::size_t n,
                                   std::size_t d);

struct SparseLowGrowth {
  std::size_t m;       // p(m) <= 3dm and p(m+1) - p(m) <= 2d
  std::size_t anchor;  // the k >= 2*n_min with p(k) <= dk that seeded the scan
};

// Halving scan: anchor at the first k >= 2*n_min with p(k) <= dk, then pick
// m in [k/2, k) with small growth. nullopt when no anchor qualifies.
std::optional<SparseLowGrowth> find_sparse_low_growth(
    const ComplexityTable& table, std::size_t d, std::size_t n_min);

// Telescope consecutive levels into blocks, cutting each block as soon as
// its min image length reaches min_growth; the level-0 language is
// unchanged. Eventually periodic input yields eventually periodic output.
DirectiveSequence contract(const DirectiveSequence& ds, std::size_t min_growth,
                           const LanguageOptions& opts = {});

struct GrowthReport {
  struct Level {
    std::size_t min_len = 0;  // <tau_[0,n)>, saturating
    std::size_t max_len = 0;  // |tau_[0,n)|, saturating
    bool positive = false;    // tau_[0,n) positive
  };
  std::vector<Level> levels;  // entry n describes tau_[0,n)
  // Every level admits a deeper block with a positive composition; decided
  // exactly on repeat tails by cycle detection, always false on finite tails.
  bool primitivity_certified = false;
};

GrowthReport growth_report(const DirectiveSequence& ds, std::size_t depth);

}  // namespace sadic

#endif
