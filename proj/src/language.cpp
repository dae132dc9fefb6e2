#include "sadic/language.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "factor_index.hpp"
#include "sadic/errors.hpp"

namespace sadic {

namespace {

std::vector<Sym> sorted_symbols(const Alphabet& a) {
  std::vector<Sym> s = a.symbols();
  std::sort(s.begin(), s.end());
  return s;
}

// Letters occurring in tau(b) for b in the given set; sorted.
std::vector<Sym> occurring_letters(const Morphism& tau,
                                   const std::vector<Sym>& deeper) {
  std::set<Sym> out;
  for (Sym b : deeper)
    for (Sym c : tau.image(b)) out.insert(c);
  return {out.begin(), out.end()};
}

// Recurrent letters per level. On a repeat tail the mask at the tail base is
// the greatest fixpoint of the one-period occurrence map, propagated downward
// so the mask at each level is exactly the set of letters used by the level
// above it; that makes the per-depth factor sets nested as depth grows.
// Finite tails have no deeper levels to certify against, so all letters stay.
class RecurrenceMasks {
 public:
  explicit RecurrenceMasks(const DirectiveSequence& ds) : ds_(&ds) {
    if (ds.tail() == DirectiveSequence::Tail::finite) return;
    std::size_t base = ds.tail_base();
    std::size_t p = ds.tail_period();
    std::vector<Sym> fix = sorted_symbols(ds.alphabet_at(base));
    for (;;) {
      std::vector<Sym> next = fix;
      for (std::size_t j = p; j-- > 0;)
        next = occurring_letters(ds.level(base + j), next);
      if (next == fix) break;
      fix = std::move(next);
    }
    tail_.assign(p, {});
    std::vector<Sym> cur = fix;  // mask at level base + p equals the fixpoint
    for (std::size_t j = p; j-- > 0;) {
      cur = occurring_letters(ds.level(base + j), cur);
      tail_[j] = cur;
    }
    below_.assign(base, {});
    cur = tail_.empty() ? fix : tail_[0];
    for (std::size_t j = base; j-- > 0;) {
      cur = occurring_letters(ds.level(j), cur);
      below_[j] = cur;
    }
  }

  std::vector<Sym> at(std::size_t level) const {
    if (ds_->tail() == DirectiveSequence::Tail::finite)
      return sorted_symbols(ds_->alphabet_at(level));
    std::size_t base = ds_->tail_base();
    if (level < base) return below_[level];
    return tail_[(level - base) % ds_->tail_period()];
  }

  // True when every letter at every level strictly below the query is
  // recurrent, i.e. nothing was excluded that could shadow factors.
  bool certifies_all_recurrent(std::size_t level) const {
    if (ds_->tail() == DirectiveSequence::Tail::finite) return false;
    std::size_t base = ds_->tail_base();
    for (std::size_t m = level + 1; m < base; ++m)
      if (below_[m].size() != ds_->alphabet_at(m).size()) return false;
    for (std::size_t j = 0; j < ds_->tail_period(); ++j)
      if (tail_[j].size() != ds_->alphabet_at(base + j).size()) return false;
    return true;
  }

 private:
  const DirectiveSequence* ds_;
  std::vector<std::vector<Sym>> below_;  // masks for levels [0, base)
  std::vector<std::vector<Sym>> tail_;   // masks per residue in [0, p)
};

struct Expansion {
  std::size_t depth = 0;
  std::vector<Sym> letters;  // sorted mask at this level
  std::vector<Word> words;   // expansion per letter, aligned with letters
  std::size_t min_len = 0;
  std::size_t max_len = 0;
  std::size_t total = 0;

  void recompute_stats() {
    min_len = words.empty() ? 0 : words.front().size();
    max_len = 0;
    total = 0;
    for (const Word& w : words) {
      min_len = std::min(min_len, w.size());
      max_len = std::max(max_len, w.size());
      total += w.size();
    }
  }
};

Expansion initial_expansion(std::size_t level, const RecurrenceMasks& masks) {
  Expansion e;
  e.depth = level;
  e.letters = masks.at(level);
  e.words.reserve(e.letters.size());
  for (Sym a : e.letters) e.words.push_back(Word{a});
  e.recompute_stats();
  return e;
}

Expansion deepen(const DirectiveSequence& ds, const RecurrenceMasks& masks,
                 const Expansion& cur) {
  const Morphism& tau = ds.level(cur.depth);
  Expansion next;
  next.depth = cur.depth + 1;
  next.letters = masks.at(next.depth);
  Sym max_id = 0;
  for (Sym a : cur.letters) max_id = std::max(max_id, a);
  std::vector<std::int32_t> where(static_cast<std::size_t>(max_id) + 1, -1);
  for (std::size_t i = 0; i < cur.letters.size(); ++i)
    where[static_cast<std::size_t>(cur.letters[i])] =
        static_cast<std::int32_t>(i);
  next.words.reserve(next.letters.size());
  for (Sym b : next.letters) {
    const Word& im = tau.image(b);
    std::size_t len = 0;
    for (Sym c : im) {
      if (c < 0 || static_cast<std::size_t>(c) >= where.size() ||
          where[static_cast<std::size_t>(c)] < 0)
        throw verification_error(
            "language: image letter escapes the recurrent mask");
      len += cur.words[static_cast<std::size_t>(
                           where[static_cast<std::size_t>(c)])]
                 .size();
    }
    std::vector<Sym> buf;
    buf.reserve(len);
    for (Sym c : im) {
      const Word& piece =
          cur.words[static_cast<std::size_t>(where[static_cast<std::size_t>(c)])];
      buf.insert(buf.end(), piece.begin(), piece.end());
    }
    next.words.push_back(Word(std::move(buf)));
  }
  next.recompute_stats();
  return next;
}

std::vector<Word> collect_factors(const std::vector<Word>& words,
                                  std::size_t len) {
  std::vector<Word> out;
  for (const Word& w : words)
    if (w.size() >= len)
      for (std::size_t pos = 0; pos + len <= w.size(); ++pos)
        out.push_back(w.sub(pos, len));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

LangStatus initial_status(const DirectiveSequence& ds,
                          const RecurrenceMasks& masks, std::size_t level) {
  if (ds.tail() == DirectiveSequence::Tail::finite)
    return LangStatus::lower_approximation;
  if (ds.primitive_hint()) return LangStatus::exact;
  return masks.certifies_all_recurrent(level)
             ? LangStatus::exact
             : LangStatus::lower_approximation;
}

[[noreturn]] void throw_stall(const LanguageOptions& opts,
                              const Expansion& cur) {
  throw resource_error(
      "language: no stabilization after " + std::to_string(opts.max_depth) +
      " levels (min image length " + std::to_string(cur.min_len) +
      "); the sequence may not be everywhere growing");
}

}  // namespace

bool LanguageResult::contains(const Word& w) const {
  return std::binary_search(words.begin(), words.end(), w);
}

LanguageResult language(const DirectiveSequence& ds, std::size_t level,
                        std::size_t length, const LanguageOptions& opts) {
  if (length < 1)
    throw std::invalid_argument("language: length must be positive");
  bool finite = ds.tail() == DirectiveSequence::Tail::finite;
  if (finite && level > ds.explicit_levels())
    throw std::invalid_argument("language: level beyond finite end");
  RecurrenceMasks masks(ds);
  LangStatus status = initial_status(ds, masks, level);
  Expansion cur = initial_expansion(level, masks);
  std::size_t cumulative = cur.total;
  std::vector<Word> prev;
  bool has_prev = false;
  std::size_t prev_min = 0;
  for (;;) {
    std::vector<Word> set = collect_factors(cur.words, length);
    if (finite && cur.depth == ds.explicit_levels())
      return {std::move(set), LangStatus::lower_approximation, cur.depth};
    if (!finite && has_prev && set == prev && prev_min >= 2 * length)
      return {std::move(set), status, cur.depth - 1};
    if (cur.depth - level >= opts.max_depth) throw_stall(opts, cur);
    prev = std::move(set);
    has_prev = true;
    prev_min = cur.min_len;
    Expansion next = deepen(ds, masks, cur);
    cumulative += next.total;
    if (cumulative > opts.max_symbols)
      throw resource_error("language: expansion budget of " +
                           std::to_string(opts.max_symbols) +
                           " symbols exceeded");
    cur = std::move(next);
  }
}

std::size_t ComplexityTable::at(std::size_t n) const {
  if (n < 1 || n > values.size())
    throw std::invalid_argument("complexity table: length out of range");
  return values[n - 1];
}

std::int64_t ComplexityTable::delta(std::size_t n) const {
  return static_cast<std::int64_t>(at(n + 1)) -
         static_cast<std::int64_t>(at(n));
}

ComplexityTable complexity(const DirectiveSequence& ds, std::size_t level,
                           std::size_t max_length,
                           const LanguageOptions& opts) {
  if (max_length < 1)
    throw std::invalid_argument("complexity: max_length must be positive");
  bool finite = ds.tail() == DirectiveSequence::Tail::finite;
  if (finite && level > ds.explicit_levels())
    throw std::invalid_argument("complexity: level beyond finite end");
  RecurrenceMasks masks(ds);
  LangStatus status = initial_status(ds, masks, level);
  Expansion cur = initial_expansion(level, masks);
  std::size_t cumulative = cur.total;
  std::vector<std::size_t> prev;
  bool has_prev = false;
  std::size_t prev_min = 0;
  for (;;) {
    std::vector<std::size_t> counts =
        detail::SuffixArrayIndex(cur.words).distinct_factor_counts(max_length);
    if (finite && cur.depth == ds.explicit_levels())
      return {level, std::move(counts), LangStatus::lower_approximation,
              cur.depth};
    if (!finite && has_prev && counts == prev && prev_min >= 2 * max_length)
      return {level, std::move(counts), status, cur.depth - 1};
    if (cur.depth - level >= opts.max_depth) throw_stall(opts, cur);
    prev = std::move(counts);
    has_prev = true;
    prev_min = cur.min_len;
    Expansion next = deepen(ds, masks, cur);
    cumulative += next.total;
    if (cumulative > opts.max_symbols)
      throw resource_error("complexity: expansion budget of " +
                           std::to_string(opts.max_symbols) +
                           " symbols exceeded");
    cur = std::move(next);
  }
}

std::vector<Word> right_special(const DirectiveSequence& ds, std::size_t level,
                                std::size_t length,
                                const LanguageOptions& opts) {
  LanguageResult ext = language(ds, level, length + 1, opts);
  LanguageResult at = language(ds, level, length, opts);
  std::vector<Word> rs;
  std::size_t i = 0;
  while (i < ext.words.size()) {
    Word prefix = ext.words[i].prefix(length);
    std::set<Sym> lasts;
    std::size_t j = i;
    while (j < ext.words.size() && ext.words[j].prefix(length) == prefix) {
      lasts.insert(ext.words[j][length]);
      ++j;
    }
    if (lasts.size() >= 2) rs.push_back(prefix);
    i = j;
  }
  if (ext.status == LangStatus::exact && at.status == LangStatus::exact) {
    std::size_t growth = ext.words.size() - at.words.size();
    std::size_t k = ds.alphabet_at(level).size();
    if (rs.size() > growth || rs.size() * k < growth)
      throw verification_error(
          "right_special: count escapes the complexity-growth bounds");
  }
  return rs;
}

std::vector<Word> power_set(const DirectiveSequence& ds, const Word& v,
                            std::size_t k_max, const LanguageOptions& opts) {
  if (v.empty()) throw std::invalid_argument("power_set: empty base");
  std::vector<Word> out;
  for (std::size_t k = 1; k <= k_max; ++k) {
    std::size_t len = (k + 2) * v.size();
    LanguageResult lang = language(ds, 0, len, opts);
    Word target = v.repeat(k);
    for (const Word& w : lang.words) {
      if (w.sub(v.size(), k * v.size()) == target && w.prefix(v.size()) != v &&
          w.suffix(v.size()) != v) {
        out.push_back(target);
        break;
      }
    }
  }
  return out;
}

std::size_t pcom_estimate(const DirectiveSequence& ds,
                          std::size_t max_base_len, std::size_t k_max,
                          const LanguageOptions& opts) {
  if (max_base_len < 1)
    throw std::invalid_argument("pcom_estimate: max_base_len must be positive");
  std::size_t best = 0;
  for (std::size_t blen = 1; blen <= max_base_len; ++blen) {
    LanguageResult bases = language(ds, 0, blen, opts);
    for (const Word& v : bases.words)
      best = std::max(best, power_set(ds, v, k_max, opts).size());
  }
  return best;
}

std::size_t find_low_growth_length(const ComplexityTable& table, std::size_t n,
                                   std::size_t d) {
  if (n < 1 || d < 1)
    throw std::invalid_argument("find_low_growth_length: n, d must be positive");
  if (table.max_length() < 2 * n)
    throw std::invalid_argument(
        "find_low_growth_length: table does not cover [n, 2n]");
  // p(2n) - p(n) <= 2dn makes the average growth over [n, 2n) at most 2d,
  // which is all the scan below needs to succeed.
  if (table.at(2 * n) > table.at(n) + 2 * d * n)
    throw std::invalid_argument(
        "find_low_growth_length: growth over [n, 2n] exceeds 2dn");
  for (std::size_t m = n; m < 2 * n; ++m)
    if (table.delta(m) <= static_cast<std::int64_t>(2 * d)) return m;
  throw verification_error(
      "find_low_growth_length: no small-growth length despite the linear "
      "bound");
}

std::optional<SparseLowGrowth> find_sparse_low_growth(
    const ComplexityTable& table, std::size_t d, std::size_t n_min) {
  if (d < 1 || n_min < 1)
    throw std::invalid_argument(
        "find_sparse_low_growth: d, n_min must be positive");
  for (std::size_t k = 2 * n_min; k <= table.max_length(); ++k) {
    if (table.at(k) > d * k) continue;
    for (std::size_t m = std::max(n_min, k / 2); m < k; ++m)
      if (table.delta(m) <= static_cast<std::int64_t>(2 * d) &&
          table.at(m) <= 3 * d * m)
        return SparseLowGrowth{m, k};
  }
  return std::nullopt;
}

DirectiveSequence contract(const DirectiveSequence& ds, std::size_t min_growth,
                           const LanguageOptions& opts) {
  if (min_growth < 1)
    throw std::invalid_argument("contract: min_growth must be positive");
  bool finite = ds.tail() == DirectiveSequence::Tail::finite;
  std::size_t base = ds.tail_base();
  std::size_t p = finite ? 1 : ds.tail_period();
  std::vector<Morphism> blocks;
  std::map<std::size_t, std::size_t> first_block_at_residue;
  std::size_t start = 0;
  for (;;) {
    if (finite && start >= ds.explicit_levels())
      return DirectiveSequence(std::move(blocks), DirectiveSequence::Tail::finite,
                               0, ds.primitive_hint());
    if (!finite && start >= base) {
      std::size_t residue = (start - base) % p;
      auto it = first_block_at_residue.find(residue);
      if (it != first_block_at_residue.end()) {
        std::size_t tail_len = blocks.size() - it->second;
        return DirectiveSequence(std::move(blocks),
                                 DirectiveSequence::Tail::repeat, tail_len,
                                 ds.primitive_hint());
      }
      first_block_at_residue.emplace(residue, blocks.size());
    }
    Morphism block = ds.level(start);
    std::size_t end = start + 1;
    while (block.min_image_length() < min_growth) {
      if (finite && end >= ds.explicit_levels()) break;
      if (end - start >= opts.max_depth)
        throw resource_error(
            "contract: min image length stalled at " +
            std::to_string(block.min_image_length()) + " after " +
            std::to_string(end - start) + " levels");
      if (block.max_image_length() * block.source().size() > opts.max_symbols)
        throw resource_error("contract: block images exceed the symbol budget");
      block = compose(block, ds.level(end));
      ++end;
    }
    blocks.push_back(std::move(block));
    start = end;
  }
}

GrowthReport growth_report(const DirectiveSequence& ds, std::size_t depth) {
  constexpr std::uint64_t kLenCap = 1'000'000'000'000'000'000ull;
  GrowthReport rep;
  const Alphabet& a0 = ds.alphabet_at(0);
  std::size_t k0 = a0.size();
  // Per letter of the current level: image length under tau_[0,n)
  // (saturating) and the set of level-0 letters occurring in it.
  std::vector<std::uint64_t> len(k0, 1);
  std::vector<std::vector<bool>> occ(k0, std::vector<bool>(k0, false));
  for (std::size_t i = 0; i < k0; ++i) occ[i][i] = true;
  auto emit = [&](const std::vector<std::uint64_t>& l,
                  const std::vector<std::vector<bool>>& o) {
    GrowthReport::Level entry;
    entry.min_len = static_cast<std::size_t>(
        *std::min_element(l.begin(), l.end()));
    entry.max_len = static_cast<std::size_t>(
        *std::max_element(l.begin(), l.end()));
    entry.positive = true;
    for (const auto& bits : o)
      for (bool b : bits)
        if (!b) entry.positive = false;
    rep.levels.push_back(entry);
  };
  emit(len, occ);
  for (std::size_t n = 1; n <= depth; ++n) {
    if (!ds.has_level(n - 1)) break;
    const Morphism& tau = ds.level(n - 1);
    const Alphabet& src = tau.source();
    const Alphabet& prev_alpha = tau.target();
    std::vector<std::uint64_t> nlen(src.size(), 0);
    std::vector<std::vector<bool>> nocc(src.size(),
                                        std::vector<bool>(k0, false));
    for (std::size_t bi = 0; bi < src.size(); ++bi) {
      for (Sym c : tau.image(src.symbol(bi))) {
        std::size_t ci = prev_alpha.index_of(c);
        nlen[bi] = std::min(kLenCap, nlen[bi] + len[ci]);
        for (std::size_t t = 0; t < k0; ++t)
          if (occ[ci][t]) nocc[bi][t] = true;
      }
    }
    len = std::move(nlen);
    occ = std::move(nocc);
    emit(len, occ);
  }

  // Primitivity: every level must admit a deeper positive block. On a repeat
  // tail the per-residue occurrence state evolves deterministically, so a
  // repeated non-positive state is a certificate of failure, a positive
  // family a certificate of success.
  rep.primitivity_certified = false;
  if (ds.tail() == DirectiveSequence::Tail::repeat) {
    std::size_t base = ds.tail_base();
    std::size_t p = ds.tail_period();
    bool all_ok = true;
    for (std::size_t n0 = 0; n0 < base + p && all_ok; ++n0) {
      const Alphabet& an0 = ds.alphabet_at(n0);
      std::size_t k = an0.size();
      std::vector<std::vector<bool>> state(k, std::vector<bool>(k, false));
      for (std::size_t i = 0; i < k; ++i) state[i][i] = true;
      std::map<std::size_t, std::set<std::vector<std::vector<bool>>>> seen;
      std::size_t m = n0;
      for (;;) {
        bool positive = true;
        for (const auto& bits : state)
          for (bool b : bits)
            if (!b) positive = false;
        if (positive) break;
        if (m >= base && !seen[(m - base) % p].insert(state).second) {
          all_ok = false;
          break;
        }
        const Morphism& tau = ds.level(m);
        const Alphabet& src = tau.source();
        const Alphabet& tgt = tau.target();
        std::vector<std::vector<bool>> next(src.size(),
                                            std::vector<bool>(k, false));
        for (std::size_t bi = 0; bi < src.size(); ++bi)
          for (Sym c : tau.image(src.symbol(bi))) {
            std::size_t ci = tgt.index_of(c);
            for (std::size_t t = 0; t < k; ++t)
              if (state[ci][t]) next[bi][t] = true;
          }
        state = std::move(next);
        ++m;
      }
    }
    rep.primitivity_certified = all_ok;
  }
  return rep;
}

}  // namespace sadic
