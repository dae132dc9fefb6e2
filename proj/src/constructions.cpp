#include "sadic/constructions.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "factor_index.hpp"
#include "sadic/errors.hpp"
#include "sadic/words.hpp"

namespace sadic {

namespace {

using u128 = unsigned __int128;

constexpr u128 kSaturated = u128(1) << 120;

u128 sat_pow(std::uint64_t base, std::size_t exp) {
  u128 r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (r >= kSaturated / base) return kSaturated;
    r *= base;
  }
  return r;
}

}  // namespace

std::uint64_t gap_epsilon(const std::vector<std::uint64_t>& lengths,
                          std::uint64_t d, std::uint64_t M) {
  if (d < 2 || M < 2) throw std::invalid_argument("need d >= 2 and M >= 2");
  if (d > 1'000'000'000 || M > 1'000'000'000)
    throw std::invalid_argument("scale parameters out of range");
  if (lengths.empty()) throw std::invalid_argument("no lengths given");
  const std::uint64_t L = *std::max_element(lengths.begin(), lengths.end());
  if (L == 0) throw std::invalid_argument("lengths must not all be zero");

  const std::uint64_t d0 = M * d;
  const std::size_t bands = lengths.size() + 1;
  std::uint64_t eps = 0;
  for (std::size_t l = 1; l <= bands; ++l) {
    const u128 deep = sat_pow(d0, l + 1);
    const u128 shallow = sat_pow(d0, l);
    bool occupied = false;
    for (const std::uint64_t x : lengths)
      if (u128(x) * deep > L && u128(x) * shallow <= L) {
        occupied = true;
        break;
      }
    if (!occupied) {
      eps = static_cast<std::uint64_t>(u128(d) * L / deep);
      break;
    }
  }
  if (eps == 0)
    throw std::invalid_argument("sizes too small for a positive gap");
  for (const std::uint64_t x : lengths)
    if (!(u128(x) > u128(M) * eps) && !(u128(x) * d <= eps))
      throw verification_error("gap dichotomy violated at length " +
                               std::to_string(x));
  return eps;
}

namespace {

Word centered_window(const Word& s, std::int64_t half) {
  return PowerWindow{s, -half, half}.materialize(std::size_t{1} << 22);
}

bool matches_at(const Word& w, std::size_t pos, const Word& pattern) {
  for (std::size_t t = 0; t < pattern.size(); ++t)
    if (w[pos + t] != pattern[t]) return false;
  return true;
}

}  // namespace

Decomposition decompose_special(const Word& w, std::size_t eps,
                                const Alphabet& alphabet) {
  if (eps == 0) throw std::invalid_argument("eps must be >= 1");
  const std::size_t n = w.size();
  if (n < 1000 * eps)
    throw std::invalid_argument("word shorter than 1000*eps");
  for (std::size_t i = 0; i < n; ++i)
    if (!alphabet.contains(w[i]))
      throw std::invalid_argument("word uses a symbol outside the alphabet");

  std::vector<Word> windows;
  for (const Word& s : primitive_representatives(alphabet, eps))
    windows.push_back(centered_window(s, static_cast<std::int64_t>(99 * eps)));

  const std::size_t lo = (n - 1000 * eps) / 2;
  const std::size_t wide = 198 * eps;

  std::optional<std::size_t> best_a;
  for (std::size_t a = lo; a + wide + lo <= n; ++a) {
    for (const Word& win : windows)
      if (matches_at(w, a, win)) {
        best_a = a;
        break;
      }
    if (best_a) break;
  }

  const std::size_t vb = lo;
  const Word middle = w.sub(vb, 1000 * eps);
  bool b_valid = true;
  for (const Word& win : windows)
    if (occurs_in(win, middle)) {
      b_valid = false;
      break;
    }

  const std::size_t vu_b = vb + 500 * eps;
  const bool a_wins =
      best_a && (!b_valid || *best_a + 99 * eps <= vu_b);

  Decomposition out;
  out.eps = eps;
  if (a_wins) {
    const std::size_t a = *best_a;
    out.tag = Decomposition::Tag::A;
    out.v = w.sub(0, a);
    out.u = w.sub(a, 99 * eps);
    out.u_prime = w.sub(a + 99 * eps, 99 * eps);
    out.v_prime = w.sub(a + wide, n - a - wide);
  } else if (b_valid) {
    out.tag = Decomposition::Tag::B;
    out.v = w.sub(0, vb);
    out.u = w.sub(vb, 500 * eps);
    out.u_prime = w.sub(vb + 500 * eps, 500 * eps);
    out.v_prime = w.sub(vb + 1000 * eps, n - vb - 1000 * eps);
  } else {
    throw verification_error("no valid decomposition found");
  }
  return out;
}

NegativeFamilyParams NegativeFamilyParams::minimal(std::size_t levels) {
  if (levels == 0) throw std::invalid_argument("need at least one level");
  NegativeFamilyParams params;
  params.ell.assign(levels, 1);
  params.k.assign(levels, 1);
  params.p.assign(levels, {8});
  return params;
}

void NegativeFamilyParams::validate() const {
  if (ell.empty() || ell.size() != p.size() || ell.size() != k.size())
    throw std::invalid_argument("parameter tables must have equal depth");
  for (std::size_t nrow = 0; nrow < ell.size(); ++nrow) {
    if (ell[nrow] == 0 || ell[nrow] != p[nrow].size())
      throw std::invalid_argument("block count mismatch at level " +
                                  std::to_string(nrow));
    if (k[nrow] == 0)
      throw std::invalid_argument("k must be positive at level " +
                                  std::to_string(nrow));
    std::uint64_t band = 1;
    for (std::size_t j = 0; j < ell[nrow]; ++j) {
      band *= 8;  // 8^(j+1), j is 0-based here
      const std::uint64_t lo_bound = band * k[nrow];
      if (p[nrow][j] < lo_bound || p[nrow][j] >= 2 * lo_bound)
        throw std::invalid_argument(
            "exponent out of band at level " + std::to_string(nrow) +
            " block " + std::to_string(j + 1));
    }
  }
}

Morphism negative_tau(const NegativeFamilyParams& params, std::size_t n) {
  params.validate();
  if (n >= params.p.size())
    throw std::invalid_argument("no parameters for level " +
                                std::to_string(n));
  const Alphabet bin = Alphabet::of_size(2);
  std::vector<Word> images;
  for (Sym a : bin.symbols()) {
    Word img;
    for (const std::uint64_t pj : params.p[n]) {
      for (std::uint64_t t = 0; t < pj; ++t) img.append(a);
      for (std::uint64_t t = 0; t < pj; ++t) img.append(1 - a);
    }
    images.push_back(std::move(img));
  }
  return Morphism(bin, bin, std::move(images));
}

DirectiveSequence negative_family_dirseq(const NegativeFamilyParams& params) {
  params.validate();
  std::vector<Morphism> levels;
  for (std::size_t n = 0; n < params.p.size(); ++n)
    levels.push_back(negative_tau(params, n));
  // Both letters appear in every image, so the sequence is primitive.
  return DirectiveSequence(std::move(levels), DirectiveSequence::Tail::repeat,
                           1, true);
}

namespace {

Word letter_swap(const Word& w) {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i) out.append(1 - w[i]);
  return out;
}

}  // namespace

namespace {

// First legal 2d-window with two distinct readings, rendered for messages.
std::string ambiguous_window_note(const Coding& coding, std::size_t d) {
  for (const Word& w : coding.upper(2 * d)) {
    // Scan windows arising from images of legal upper words; every legal
    // lower 2d-window shows up this way.
    const Word img = coding.sigma.apply(w);
    for (std::size_t s = 0; s + 2 * d <= img.size(); ++s) {
      const Word win = img.sub(s, 2 * d);
      const auto readings = window_factorizations(coding, win, d);
      if (readings.size() > 1) {
        std::string note = "window " + win.str() + " admits readings";
        for (const auto& [k, y0] : readings)
          note += " (k=" + std::to_string(k) +
                  ",y0=" + std::to_string(static_cast<int>(y0)) + ")";
        return note;
      }
    }
  }
  return "no ambiguous window found at radius " + std::to_string(d);
}

}  // namespace

NegativeFamilyReport negative_family_check(const NegativeFamilyParams& params,
                                           std::size_t depth,
                                           std::size_t k_max) {
  params.validate();
  if (depth == 0 || depth > params.p.size())
    throw std::invalid_argument("depth must be in [1, parameter rows]");
  if (k_max == 0) throw std::invalid_argument("k_max must be >= 1");

  const DirectiveSequence ds = negative_family_dirseq(params);
  NegativeFamilyReport rep;
  rep.k_max = k_max;
  rep.depth = depth;

  rep.complexity_linear = true;
  const ComplexityTable ct = complexity(ds, 0, k_max);
  if (ct.status != LangStatus::exact) {
    rep.complexity_linear = false;
    rep.failure = "complexity table is not exact within the resource budget; ";
  }
  for (std::size_t kk = 1; kk <= k_max; ++kk) {
    const std::size_t pk = ct.at(kk);
    if (pk > 1024 * kk && rep.complexity_linear) {
      rep.complexity_linear = false;
      rep.failure = "complexity exceeds linear bound: p(" +
                    std::to_string(kk) + ")=" + std::to_string(pk) + " > " +
                    std::to_string(1024 * kk);
    }
    const double ratio = static_cast<double>(pk) / static_cast<double>(kk);
    if (ratio > rep.max_ratio) {
      rep.max_ratio = ratio;
      rep.worst_k = kk;
    }
  }

  rep.lengths_symmetric = true;
  for (std::size_t n = 1; n <= depth; ++n) {
    const Morphism blk = ds.block(0, n);
    const Word img0 = blk.image(0);
    const Word img1 = blk.image(1);
    if (img0.size() != img1.size() || !(letter_swap(img0) == img1)) {
      rep.lengths_symmetric = false;
      if (rep.failure.empty())
        rep.failure = "composed images at depth " + std::to_string(n) +
                      " are not letter swaps of each other";
      break;
    }
    rep.image_lengths.push_back(img0.size());
  }

  rep.recognizable = true;
  for (std::size_t n = 0; n < depth; ++n) {
    const Morphism blk = ds.block(0, n);
    const std::size_t cap = blk.max_image_length();
    const Coding coding{blk, subshift_language_provider(ds, n), {}};
    const std::optional<std::size_t> rad = recognizability_radius(coding, cap);
    rep.radii.push_back(rad);
    rep.radius_caps.push_back(cap);
    if (!rad) {
      rep.recognizable = false;
      if (rep.failure.empty())
        rep.failure = "block of depth " + std::to_string(n) +
                      " has no reading radius within its image length " +
                      std::to_string(cap) + "; " +
                      ambiguous_window_note(coding, cap);
      break;
    }
  }

  rep.spacers_present = true;
  for (std::size_t n = 0; n <= depth; ++n) {
    const std::vector<std::uint64_t>& row =
        params.p[n < params.p.size() ? n : params.p.size() - 1];
    std::size_t found = 0;
    for (const std::uint64_t pj : row) {
      Word spacer;
      spacer.append(1);
      for (std::uint64_t t = 0; t < pj; ++t) spacer.append(0);
      spacer.append(1);
      const LanguageResult lang =
          language(ds, n, static_cast<std::size_t>(pj) + 2);
      if (!lang.contains(spacer)) {
        rep.spacers_present = false;
        if (rep.failure.empty())
          rep.failure = "missing spacer word 1 0^" + std::to_string(pj) +
                        " 1 at level " + std::to_string(n);
        break;
      }
      ++found;
    }
    if (!rep.spacers_present) break;
    rep.spacer_counts.push_back(found);
  }
  return rep;
}

NegativeFamilyReport negative_family_verify(const NegativeFamilyParams& params,
                                            std::size_t depth,
                                            std::size_t k_max) {
  NegativeFamilyReport rep = negative_family_check(params, depth, k_max);
  if (!rep.all()) throw verification_error(rep.failure);
  return rep;
}

std::vector<std::vector<std::uint64_t>> enumerate_P(std::uint64_t n,
                                                    std::uint64_t n0,
                                                    std::size_t l) {
  if (n == 0 || n0 == 0) throw std::invalid_argument("n and n0 must be >= 1");
  if (l == 0 || l > 4)
    throw resource_error("tuple length restricted to [1, 4]");
  std::vector<std::uint64_t> lo(l), hi(l);
  std::uint64_t count = 1;
  std::uint64_t band = 1;
  for (std::size_t j = 0; j < l; ++j) {
    // p_j * n0 in [8^j n, 2 * 8^j n), j counted from 0
    lo[j] = (band * n + n0 - 1) / n0;
    hi[j] = (2 * band * n + n0 - 1) / n0;
    if (hi[j] <= lo[j])
      throw std::invalid_argument("empty exponent band at coordinate " +
                                  std::to_string(j));
    const std::uint64_t width = hi[j] - lo[j];
    if (width > 64) throw resource_error("exponent band wider than 64");
    count *= width;
    if (count > 200'000) throw resource_error("tuple space too large");
    band *= 8;
  }
  std::vector<std::vector<std::uint64_t>> out;
  out.reserve(count);
  std::vector<std::uint64_t> cur(lo);
  for (;;) {
    out.push_back(cur);
    std::size_t j = l;
    while (j > 0) {
      --j;
      if (++cur[j] < hi[j]) break;
      cur[j] = lo[j];
      if (j == 0) return out;
    }
  }
}

bool is_in_K(const std::vector<std::uint64_t>& tuple, std::uint64_t n,
             std::uint64_t n0, std::uint64_t d) {
  if (tuple.empty()) throw std::invalid_argument("empty tuple");
  if (n == 0 || n0 == 0 || d == 0)
    throw std::invalid_argument("n, n0, d must be >= 1");
  if (d > 3) throw resource_error("combination size restricted to d <= 3");

  std::vector<std::uint64_t> targets;
  std::uint64_t max_target = 0;
  for (const std::uint64_t p : tuple) {
    targets.push_back(p * n0);
    max_target = std::max(max_target, p * n0);
  }
  if (max_target > 100'000)
    throw resource_error("combination targets too large");

  const std::uint64_t lo = (n + d - 1) / d;
  const std::uint64_t hi = d * n;  // exclusive
  std::vector<std::uint64_t> pool;
  for (std::uint64_t e = lo; e < hi; ++e) pool.push_back(e);
  if (pool.size() > 64) throw resource_error("combination interval too wide");

  std::vector<std::size_t> pick;
  std::vector<char> reach;
  const auto combination_writes_all = [&](const std::vector<std::size_t>& sel) {
    reach.assign(max_target + 1, 0);
    reach[0] = 1;
    for (const std::size_t idx : sel) {
      const std::uint64_t e = pool[idx];
      for (std::uint64_t s = e; s <= max_target; ++s)
        if (reach[s - e]) reach[s] = 1;
    }
    for (const std::uint64_t t : targets)
      if (!reach[t]) return false;
    return true;
  };

  // Subset sizes 0..d over the pool, smallest first.
  const std::size_t m = pool.size();
  if (combination_writes_all({})) return true;
  for (std::size_t size = 1; size <= d; ++size) {
    if (size > m) break;
    pick.assign(size, 0);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    for (;;) {
      if (combination_writes_all(pick)) return true;
      std::size_t i = size;
      while (i > 0) {
        --i;
        if (pick[i] + (size - i) < m) {
          ++pick[i];
          for (std::size_t t = i + 1; t < size; ++t) pick[t] = pick[t - 1] + 1;
          break;
        }
        if (i == 0) {
          i = SIZE_MAX;
          break;
        }
      }
      if (i == SIZE_MAX) break;
    }
  }
  return false;
}

std::optional<std::vector<std::uint64_t>> sample_P_minus_K(std::uint64_t n,
                                                           std::uint64_t n0,
                                                           std::uint64_t d,
                                                           std::size_t l) {
  for (const std::vector<std::uint64_t>& tuple : enumerate_P(n, n0, l))
    if (!is_in_K(tuple, n, n0, d)) return tuple;
  return std::nullopt;
}

std::size_t CoverSet::min_length() const {
  for (std::size_t n = 0; n < counts_by_length.size(); ++n)
    if (counts_by_length[n] > 0) return n;
  return SIZE_MAX;
}

std::size_t CoverSet::max_length() const {
  for (std::size_t n = counts_by_length.size(); n > 0; --n)
    if (counts_by_length[n - 1] > 0) return n - 1;
  return 0;
}

std::size_t CoverSet::total_distinct() const {
  std::size_t total = 0;
  for (const std::size_t c : counts_by_length) total += c;
  return total;
}

std::vector<Word> CoverSet::words(std::size_t max_total_symbols) const {
  const auto by_len_lex = [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  };
  std::set<Word, decltype(by_len_lex)> out(by_len_lex);
  std::size_t symbols = 0;
  for (const std::vector<std::size_t>& cuts : boundaries) {
    for (std::size_t t = 0; t + 1 < cuts.size(); ++t) {
      const std::size_t a = cuts[t];
      const std::size_t b = cuts[t + 1];
      for (std::size_t len = ell; len <= b - a; ++len) {
        symbols += 2 * len;
        if (symbols > max_total_symbols)
          throw resource_error("cover too large to materialize");
        out.insert(w.sub(a, len));
        out.insert(w.sub(b - len, len));
      }
    }
  }
  return std::vector<Word>(out.begin(), out.end());
}

namespace {

// Splits u = w[x, y) at a piece boundary c so that w[x, c) is a suffix of
// the piece ending at c and w[c, y) a prefix of the one starting there.
bool positional_split(const std::vector<std::vector<std::size_t>>& boundaries,
                      std::size_t levels, std::size_t ell, std::size_t W,
                      std::size_t x, std::size_t y) {
  const std::size_t m = y - x;
  const std::size_t ratio = W / m;
  std::size_t best = 0;
  while ((std::size_t{2} << best) <= ratio) ++best;  // 2^best <= W/m < 2^(b+1)
  if (best >= levels) best = levels == 0 ? 0 : levels - 1;

  for (std::size_t attempt = 0; attempt <= levels; ++attempt) {
    // Try the scale whose pieces are at least |u| first, then the rest.
    std::size_t i;
    if (attempt == 0) {
      i = best;
    } else {
      i = attempt - 1;
      if (i == best) continue;
    }
    if (i >= levels) continue;
    for (std::size_t j = 0; j < 8; ++j) {
      const std::vector<std::size_t>& cuts = boundaries[i * 8 + j];
      auto it = std::lower_bound(cuts.begin(), cuts.end(), x + ell);
      for (; it != cuts.end() && *it + ell <= y; ++it) {
        if (it == cuts.begin()) continue;
        const std::size_t prev = *(it - 1);
        const std::size_t next = (it + 1 == cuts.end()) ? W : *(it + 1);
        if (prev <= x && next >= y) return true;
      }
    }
  }
  return false;
}

}  // namespace

CoverSet cfpz_cover(const Word& w, std::size_t ell) {
  const std::size_t W = w.size();
  if (ell == 0 || ell > W)
    throw std::invalid_argument("need 1 <= ell <= |w|");

  CoverSet cover;
  cover.w = w;
  cover.ell = ell;
  while ((u128(1) << cover.level_count) * ell < W) ++cover.level_count;

  for (std::size_t i = 0; i < cover.level_count; ++i) {
    for (std::size_t j = 0; j < 8; ++j) {
      std::vector<std::size_t> cuts{0};
      const std::uint64_t denom = std::uint64_t{1} << (i + 3);
      for (std::uint64_t k = 1;; ++k) {
        const std::uint64_t b = (8 * k + j) * W / denom;
        if (b >= W) break;
        cuts.push_back(static_cast<std::size_t>(b));
      }
      cuts.push_back(W);
      cover.boundaries.push_back(std::move(cuts));
    }
  }

  // Guarantee (1): distinct members per length, counted with one shared
  // factor index; (2) follows from the construction but is re-checked.
  std::size_t max_piece = 0;
  std::vector<std::vector<std::uint32_t>> starts_by_len(W + 1);
  for (const std::vector<std::size_t>& cuts : cover.boundaries) {
    for (std::size_t t = 0; t + 1 < cuts.size(); ++t) {
      const std::size_t a = cuts[t];
      const std::size_t b = cuts[t + 1];
      max_piece = std::max(max_piece, b - a);
      for (std::size_t len = ell; len <= b - a; ++len) {
        starts_by_len[len].push_back(static_cast<std::uint32_t>(a));
        starts_by_len[len].push_back(static_cast<std::uint32_t>(b - len));
      }
    }
  }
  if (max_piece > W)
    throw verification_error("cover piece exceeds the word length");

  cover.counts_by_length.assign(W + 1, 0);
  if (cover.level_count > 0) {
    const detail::SuffixArrayIndex index({w});
    std::vector<std::int64_t> ids;
    std::vector<std::int64_t> seen;
    for (std::size_t len = ell; len <= max_piece; ++len) {
      if (starts_by_len[len].empty()) continue;
      ids = index.factor_class_ids(len);
      seen.clear();
      for (const std::uint32_t s : starts_by_len[len]) seen.push_back(ids[s]);
      std::sort(seen.begin(), seen.end());
      seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
      cover.counts_by_length[len] = seen.size();
      if (seen.size() * ell > 32 * W)
        throw verification_error("per-length cover bound violated at length " +
                                 std::to_string(len));
    }
  }

  // Guarantee (3): every long factor splits at some piece boundary.
  const std::size_t threshold = 64 * ell;
  for (std::size_t len = threshold; len <= W; ++len) {
    for (std::size_t x = 0; x + len <= W; ++x) {
      if (!positional_split(cover.boundaries, cover.level_count, ell, W, x,
                            x + len))
        throw verification_error(
            "factor at position " + std::to_string(x) + " length " +
            std::to_string(len) + " not covered by two members");
    }
  }
  return cover;
}

namespace {

// Windows of the shortest block length cross at most one block boundary of
// a W-block concatenation, so each must show up inside a pair u.v.
void certify_two_block_cover(const LanguageProvider& lang,
                             const std::vector<Word>& W) {
  if (W.empty()) throw std::invalid_argument("empty block set");
  std::size_t minlen = SIZE_MAX;
  for (const Word& u : W) {
    if (u.empty()) throw std::invalid_argument("empty block in cover set");
    minlen = std::min(minlen, u.size());
  }
  std::set<Word> window_factors;
  for (const Word& u : W)
    for (const Word& v : W) {
      const Word cat = u + v;
      for (std::size_t i = 0; i + minlen <= cat.size(); ++i)
        window_factors.insert(cat.sub(i, minlen));
    }
  for (const Word& legal : lang(minlen))
    if (!window_factors.count(legal))
      throw std::invalid_argument(
          "cover certificate failed: legal word " + legal.str() +
          " is not a factor of any two-block concatenation");
}

std::size_t distinct_roots(const std::vector<Word>& W) {
  std::set<Word> roots;
  for (const Word& u : W) roots.insert(root(u));
  return roots.size();
}

}  // namespace

PowerCoverBound power_cover_px_bound(const LanguageProvider& lang,
                                     const std::vector<Word>& W) {
  certify_two_block_cover(lang, W);
  std::size_t maxlen = 0, minlen = SIZE_MAX;
  for (const Word& u : W) {
    maxlen = std::max(maxlen, u.size());
    minlen = std::min(minlen, u.size());
  }
  const std::size_t r = distinct_roots(W);
  PowerCoverBound out;
  out.bound = maxlen * r * r;
  out.actual = lang(minlen).size();
  out.pass = out.actual <= out.bound;
  return out;
}

DifferenceBound first_difference_bound(const LanguageProvider& lang,
                                       const std::vector<Word>& W,
                                       std::size_t l) {
  certify_two_block_cover(lang, W);
  std::size_t maxlen = 0, minlen = SIZE_MAX;
  for (const Word& u : W) {
    maxlen = std::max(maxlen, u.size());
    minlen = std::min(minlen, u.size());
  }
  if (l == 0 || l >= minlen)
    throw std::invalid_argument("need 1 <= l < <W>");
  const std::size_t a = lang(1).size();
  const std::size_t r = distinct_roots(W);
  const std::size_t delta = lang(l + 1).size() - lang(l).size();

  const u128 rhs = u128(256) * a * r * r * maxlen * maxlen;
  const u128 lhs = u128(delta) * l * l;
  DifferenceBound out;
  out.bound = static_cast<double>(rhs) / (static_cast<double>(l) * l);
  out.actual = delta;
  out.pass = lhs <= rhs;
  return out;
}

Word synchronize_occurrences(const Word& x, const Word& y,
                             const std::vector<std::size_t>& positions,
                             const std::vector<std::size_t>& lengths) {
  if (positions.empty() || positions.size() != lengths.size())
    throw std::invalid_argument("positions and lengths must match, nonempty");
  std::vector<std::pair<std::size_t, std::size_t>> occ;
  for (std::size_t j = 0; j < positions.size(); ++j) {
    if (lengths[j] == 0) throw std::invalid_argument("zero occurrence length");
    if (positions[j] + lengths[j] > x.size())
      throw std::invalid_argument("occurrence window leaves the word");
    if (lengths[j] > y.size())
      throw std::invalid_argument("occurrence longer than y");
    occ.emplace_back(positions[j], lengths[j]);
  }
  std::sort(occ.begin(), occ.end());
  for (std::size_t j = 0; j + 1 < occ.size(); ++j)
    if (occ[j].first == occ[j + 1].first)
      throw std::invalid_argument("positions must be distinct");

  for (const auto& [pos, len] : occ)
    for (std::size_t t = 0; t < len; ++t)
      if (x[pos + t] != y[t])
        throw std::invalid_argument("window does not match a prefix of y");

  const std::size_t span = occ.back().first - occ.front().first;
  for (const auto& [pos, len] : occ)
    if (2 * span > len)
      throw std::invalid_argument("positions spread beyond half the windows");

  if (occ.size() == 1) return root(x.sub(occ[0].first, occ[0].second));

  std::size_t g = 0;
  for (std::size_t j = 0; j + 1 < occ.size(); ++j)
    g = std::gcd(g, occ[j + 1].first - occ[j].first);
  const Word wper = root(x.sub(occ.front().first, g));

  for (std::size_t i = 0; i < occ.size(); ++i)
    for (std::size_t j = i + 1; j < occ.size(); ++j) {
      const std::size_t gap = occ[j].first - occ[i].first;
      if (gap % wper.size() != 0)
        throw verification_error("gap is not a multiple of the period");
      const std::size_t reach = gap + std::min(occ[i].second, occ[j].second);
      for (std::size_t t = 0; t < reach; ++t)
        if (x[occ[i].first + t] != wper[t % wper.size()])
          throw verification_error("synchronized window is not periodic");
    }
  return wper;
}

}  // namespace sadic
