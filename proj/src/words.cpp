#include "sadic/words.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "sadic/errors.hpp"

namespace sadic {

namespace {

// fail[i] = length of the longest proper border of w[0..i].
std::vector<std::size_t> failure_function(const Word& w) {
  std::vector<std::size_t> fail(w.size(), 0);
  for (std::size_t i = 1; i < w.size(); ++i) {
    std::size_t b = fail[i - 1];
    while (b > 0 && w[i] != w[b]) b = fail[b - 1];
    if (w[i] == w[b]) ++b;
    fail[i] = b;
  }
  return fail;
}

// Smallest repetition of base covering at least len symbols plus one extra
// copy, so that every factor of base^inf of length len is present.
Word power_covering(const Word& base, std::size_t len) {
  std::size_t copies = len / base.size() + 2;
  return base.repeat(copies);
}

bool is_prefix_of_power(const Word& w, const Word& base) {
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != base[i % base.size()]) return false;
  return true;
}

}  // namespace

bool occurs_in(const Word& pattern, const Word& text) {
  if (pattern.empty()) return true;
  if (pattern.size() > text.size()) return false;
  for (std::size_t pos = 0; pos + pattern.size() <= text.size(); ++pos) {
    bool match = true;
    for (std::size_t i = 0; i < pattern.size(); ++i) {
      if (text[pos + i] != pattern[i]) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

bool occurs_in_power(const Word& pattern, const Word& base) {
  if (base.empty()) throw std::invalid_argument("occurs_in_power: empty base");
  if (pattern.empty()) return true;
  return occurs_in(pattern, power_covering(base, pattern.size()));
}

Word rotation(const Word& w, std::int64_t i) {
  if (w.empty()) return w;
  std::int64_t n = static_cast<std::int64_t>(w.size());
  std::int64_t r = i % n;
  if (r < 0) r += n;
  std::vector<Sym> out;
  out.reserve(w.size());
  for (std::int64_t m = 0; m < n; ++m)
    out.push_back(w[static_cast<std::size_t>((m + r) % n)]);
  return Word(std::move(out));
}

Word root(const Word& w) {
  if (w.empty()) throw std::invalid_argument("root: empty word");
  std::size_t p = period(w);
  if (w.size() % p == 0) return w.prefix(p);
  return w;
}

bool is_primitive(const Word& w) { return root(w) == w; }

std::size_t period(const Word& w) {
  if (w.empty()) throw std::invalid_argument("period: empty word");
  std::vector<std::size_t> fail = failure_function(w);
  return w.size() - fail.back();
}

bool is_periodic_by(const Word& w, const Word& u) {
  if (w.empty() || u.empty())
    throw std::invalid_argument("is_periodic_by: empty word");
  return occurs_in_power(w, u);
}

bool are_conjugate(const Word& u, const Word& v) {
  if (u.size() != v.size()) return false;
  if (u.empty()) return true;
  return occurs_in(v, u + u);
}

std::optional<Word> fine_wilf(const Word& u, const Word& v, const Word& w) {
  if (u.empty() || v.empty())
    throw std::invalid_argument("fine_wilf: empty base word");
  if (!is_prefix_of_power(w, u))
    throw std::invalid_argument("fine_wilf: w is not a prefix of u^inf");
  if (!is_prefix_of_power(w, v))
    throw std::invalid_argument("fine_wilf: w is not a prefix of v^inf");
  Word ru = root(u);
  Word rv = root(v);
  if (w.size() >= u.size() + v.size() - 1) {
    if (ru != rv)
      throw verification_error("fine_wilf: roots differ above the bound");
    return ru;
  }
  if (ru == rv) return ru;
  return std::nullopt;
}

bool shift_fixes_power(const Word& t, std::int64_t i) {
  if (t.empty()) throw std::invalid_argument("shift_fixes_power: empty word");
  std::int64_t r = static_cast<std::int64_t>(root(t).size());
  std::int64_t m = i % r;
  return m == 0;
}

std::optional<Word> power_window_sync(const Word& t, const Word& s,
                                      std::int64_t i, std::int64_t j,
                                      std::int64_t len) {
  if (len < 0)
    throw std::invalid_argument("power_window_sync: negative length");
  if (t.empty() || s.empty())
    throw std::invalid_argument("power_window_sync: empty base word");
  Word left = PowerWindow{t, i, i + len}.materialize();
  Word right = PowerWindow{s, j, j + len}.materialize();
  if (left != right) return std::nullopt;
  // S^i t^Z is the periodic point whose base is t rotated by i.
  Word shifted_t = root(rotation(t, i));
  Word shifted_s = root(rotation(s, j));
  if (len >= static_cast<std::int64_t>(t.size() + s.size()) - 1) {
    if (shifted_t != shifted_s)
      throw verification_error(
          "power_window_sync: equal windows above the bound with distinct "
          "points");
    return shifted_t;
  }
  if (shifted_t == shifted_s) return shifted_t;
  return std::nullopt;
}

bool overlap_synchronize(const Word& u, const Word& v, const Word& w,
                         const Word& t, const Word& s) {
  if (t.empty() || s.empty())
    throw std::invalid_argument("overlap_synchronize: empty base word");
  if (!occurs_in_power(u + v, t))
    throw std::invalid_argument("overlap_synchronize: uv not in t^inf");
  if (!occurs_in_power(v + w, s))
    throw std::invalid_argument("overlap_synchronize: vw not in s^inf");
  Word uvw = u + v + w;
  bool direct = occurs_in_power(uvw, t) && occurs_in_power(uvw, s);
  if (v.size() >= t.size() + s.size() - 1) {
    // The shared middle is long enough to synchronize both powers.
    if (!direct)
      throw verification_error(
          "overlap_synchronize: overlap bound met but occurrence fails");
    return true;
  }
  return direct;
}

LocalToGlobal global_period_from_local(const Word& u,
                                       const std::vector<Word>& bases) {
  if (bases.empty())
    throw std::invalid_argument("global_period_from_local: no bases");
  std::size_t bound = 0;
  for (const Word& b : bases) {
    if (b.empty())
      throw std::invalid_argument("global_period_from_local: empty base");
    bound = std::max(bound, b.size());
  }
  std::size_t window = 2 * bound;
  if (u.size() < window)
    throw std::invalid_argument(
        "global_period_from_local: |u| below twice the longest base");

  LocalToGlobal result;
  result.period_bound = bound;
  for (std::size_t pos = 0; pos + window <= u.size(); ++pos) {
    Word factor = u.sub(pos, window);
    bool found = false;
    for (const Word& b : bases) {
      if (occurs_in_power(factor, b)) {
        result.assignment.emplace_back(pos, b);
        found = true;
        break;
      }
    }
    if (!found)
      throw hypothesis_error(
          "global_period_from_local: factor \"" + factor.str() +
          "\" at position " + std::to_string(pos) +
          " occurs in no base power");
  }
  result.period = period(u);
  if (result.period > bound)
    throw verification_error(
        "global_period_from_local: period exceeds the base-length bound");
  for (const auto& [pos, b] : result.assignment) {
    if (!occurs_in_power(u, b))
      throw verification_error(
          "global_period_from_local: u misses the power of the base chosen "
          "at position " +
          std::to_string(pos));
  }
  return result;
}

std::optional<std::pair<std::size_t, Word>> aperiodicity_witness(
    const Word& u, std::size_t k) {
  if (k < 1) throw std::invalid_argument("aperiodicity_witness: k < 1");
  if (u.empty()) throw std::invalid_argument("aperiodicity_witness: empty word");
  if (period(u) <= k) return std::nullopt;
  if (u.size() < 2 * k)
    throw std::invalid_argument(
        "aperiodicity_witness: word shorter than 2k with period above k");
  for (std::size_t pos = 0; pos + 2 * k <= u.size(); ++pos) {
    Word factor = u.sub(pos, 2 * k);
    if (period(factor) > k) return std::make_pair(pos, factor);
  }
  throw verification_error(
      "aperiodicity_witness: no length-2k factor with period above k");
}

std::vector<Word> primitive_representatives(const Alphabet& alphabet,
                                            std::size_t maxlen) {
  if (maxlen < 1)
    throw std::invalid_argument("primitive_representatives: maxlen < 1");
  // Duval's generation of Lyndon words of length <= maxlen in lex order.
  // Word content is stored as alphabet indices and mapped to symbols at
  // output time so the alphabet's own order drives the enumeration.
  std::vector<Word> out;
  std::size_t k = alphabet.size();
  std::vector<std::size_t> w{0};
  while (!w.empty()) {
    std::vector<Sym> symbols;
    symbols.reserve(w.size());
    for (std::size_t idx : w) symbols.push_back(alphabet.symbol(idx));
    out.push_back(Word(std::move(symbols)));
    std::size_t m = w.size();
    w.resize(maxlen);
    for (std::size_t i = m; i < maxlen; ++i) w[i] = w[i - m];
    while (!w.empty() && w.back() == k - 1) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  std::sort(out.begin(), out.end(), [](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace sadic
