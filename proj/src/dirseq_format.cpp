#include "sadic/dirseq_format.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace sadic {

namespace {

struct Token {
  std::string text;
  std::size_t col = 0;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '#') break;
    std::size_t j = i;
    while (j < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[j])) &&
           line[j] != '#')
      ++j;
    out.push_back({line.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

std::size_t parse_index(const Token& tok, std::size_t line,
                        const std::string& what) {
  std::string digits = tok.text;
  if (!digits.empty() && digits.back() == ':') digits.pop_back();
  if (digits.empty()) throw parse_error(line, tok.col, "missing " + what);
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw parse_error(line, tok.col, what + " must be a number, got '" +
                                           tok.text + "'");
  return static_cast<std::size_t>(std::stoull(digits));
}

// Consumes an optional trailing ':' given either attached to prev or as its
// own token; returns the index of the first payload token.
std::size_t expect_colon(const std::vector<Token>& toks, std::size_t after,
                         std::size_t line) {
  if (toks[after - 1].text.back() == ':') return after;
  if (after < toks.size() && toks[after].text == ":") return after + 1;
  throw parse_error(line, toks[after - 1].col, "expected ':' after index");
}

// Incidence-matrix primitivity of the endomorphism block that repeats.
bool repeating_block_primitive(const std::vector<Morphism>& levels,
                               std::size_t period) {
  const std::size_t base = levels.size() - period;
  const Alphabet& a = levels[base].target();
  const std::size_t m = a.size();
  // occ[i][j]: letter j occurs in the block image of letter i; the block is
  // expanded by applying the period's levels innermost-first.
  std::vector<std::vector<bool>> occ(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    Word w;
    w.append(a.symbol(i));
    for (std::size_t t = period; t-- > 0;) w = levels[base + t].apply(w);
    for (std::size_t p = 0; p < w.size(); ++p)
      occ[i][a.index_of(w[p])] = true;
  }
  std::vector<std::vector<bool>> reach = occ;
  for (std::size_t step = 1; step < 2 * m * m + 2; ++step) {
    bool full = true;
    for (const auto& row : reach)
      for (bool b : row) full = full && b;
    if (full) return true;
    std::vector<std::vector<bool>> next(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t k = 0; k < m; ++k)
        if (reach[i][k])
          for (std::size_t j = 0; j < m; ++j)
            if (occ[k][j]) next[i][j] = true;
    if (next == reach) return false;
    reach = std::move(next);
  }
  return false;
}

}  // namespace

DirectiveSequence parse_dirseq(const std::string& text) {
  std::vector<std::pair<std::vector<std::string>, std::size_t>> alphabets;
  std::vector<Alphabet> built;
  std::vector<Morphism> morphisms;
  // Pending morphism block: source-letter index -> image tokens.
  bool in_morphism = false;
  std::size_t morphism_line = 0;
  std::vector<std::pair<bool, Word>> images;
  bool tail_seen = false;
  std::size_t tail_period = 0;

  std::istringstream stream(text);
  std::string raw;
  std::size_t lineno = 0;

  auto alphabet_for = [&](std::size_t level) -> const Alphabet& {
    return built[level];
  };

  auto finish_morphism = [&]() {
    if (!in_morphism) return;
    const std::size_t k = morphisms.size();
    const Alphabet& src = alphabet_for(k + 1);
    std::vector<Word> imgs;
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (!images[i].first)
        throw parse_error(morphism_line, 1,
                          "morphism " + std::to_string(k) +
                              " misses an image for letter '" +
                              src.glyph(src.symbol(i)) + "'");
      imgs.push_back(images[i].second);
    }
    morphisms.emplace_back(src, alphabet_for(k), std::move(imgs));
    in_morphism = false;
    images.clear();
  };

  while (std::getline(stream, raw)) {
    ++lineno;
    std::vector<Token> toks = tokenize(raw);
    if (toks.empty()) continue;
    const std::string& head = toks[0].text;

    if (tail_seen)
      throw parse_error(lineno, toks[0].col,
                        "nothing may follow the tail rule");

    if (head == "alphabet") {
      finish_morphism();
      if (toks.size() < 2)
        throw parse_error(lineno, toks[0].col, "missing alphabet index");
      const std::size_t idx = parse_index(toks[1], lineno, "alphabet index");
      if (idx != alphabets.size())
        throw parse_error(lineno, toks[1].col,
                          "alphabet " + std::to_string(alphabets.size()) +
                              " expected here, got " + std::to_string(idx));
      const std::size_t first = expect_colon(toks, 2, lineno);
      if (first >= toks.size())
        throw parse_error(lineno, toks[toks.size() - 1].col,
                          "alphabet needs at least one symbol");
      std::vector<std::string> glyphs;
      for (std::size_t t = first; t < toks.size(); ++t) {
        for (const std::string& seen : glyphs)
          if (seen == toks[t].text)
            throw parse_error(lineno, toks[t].col,
                              "duplicate symbol '" + toks[t].text + "'");
        glyphs.push_back(toks[t].text);
      }
      alphabets.emplace_back(glyphs, lineno);
      std::vector<Sym> ids(glyphs.size());
      for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<Sym>(i);
      built.emplace_back(ids, glyphs);
      continue;
    }

    if (head == "morphism") {
      finish_morphism();
      if (toks.size() < 2)
        throw parse_error(lineno, toks[0].col, "missing morphism index");
      const std::size_t idx = parse_index(toks[1], lineno, "morphism index");
      if (idx != morphisms.size())
        throw parse_error(lineno, toks[1].col,
                          "morphism " + std::to_string(morphisms.size()) +
                              " expected here, got " + std::to_string(idx));
      expect_colon(toks, 2, lineno);
      if (built.size() < idx + 2)
        throw parse_error(lineno, toks[0].col,
                          "morphism " + std::to_string(idx) +
                              " needs alphabets " + std::to_string(idx) +
                              " and " + std::to_string(idx + 1) +
                              " declared first");
      in_morphism = true;
      morphism_line = lineno;
      images.assign(built[idx + 1].size(), {false, Word()});
      continue;
    }

    if (head == "tail") {
      finish_morphism();
      if (toks.size() < 2 || toks[1].text != "repeat")
        throw parse_error(lineno, toks.size() < 2 ? toks[0].col : toks[1].col,
                          "tail rule must be 'tail repeat <p>'");
      if (toks.size() < 3)
        throw parse_error(lineno, toks[1].col, "missing tail period");
      if (toks.size() > 3)
        throw parse_error(lineno, toks[3].col, "trailing tokens after period");
      tail_period = parse_index(toks[2], lineno, "tail period");
      if (tail_period == 0 || tail_period > morphisms.size())
        throw parse_error(lineno, toks[2].col,
                          "tail period must be in [1, " +
                              std::to_string(morphisms.size()) + "]");
      const std::size_t top = morphisms.size();
      if (built[top].size() != built[top - tail_period].size())
        throw parse_error(lineno, toks[2].col,
                          "alphabet " + std::to_string(top) +
                              " must match alphabet " +
                              std::to_string(top - tail_period) +
                              " for the tail to compose");
      tail_seen = true;
      continue;
    }

    // Image line: <letter> -> <letters...>
    if (!in_morphism)
      throw parse_error(lineno, toks[0].col,
                        "unrecognized line (expected alphabet, morphism, "
                        "tail, or an indented image rule)");
    const std::size_t k = morphisms.size();
    const Alphabet& src = built[k + 1];
    const Alphabet& tgt = built[k];
    const Sym a = src.symbol_for_glyph(toks[0].text);
    if (a < 0)
      throw parse_error(lineno, toks[0].col,
                        "'" + toks[0].text + "' is not in alphabet " +
                            std::to_string(k + 1));
    if (toks.size() < 2 || toks[1].text != "->")
      throw parse_error(lineno, toks.size() < 2 ? toks[0].col : toks[1].col,
                        "expected '->' after the letter");
    if (images[src.index_of(a)].first)
      throw parse_error(lineno, toks[0].col,
                        "duplicate image for '" + toks[0].text + "'");
    if (toks.size() == 2)
      throw parse_error(lineno, toks[1].col, "empty image");
    Word img;
    for (std::size_t t = 2; t < toks.size(); ++t) {
      const Sym s = tgt.symbol_for_glyph(toks[t].text);
      if (s < 0)
        throw parse_error(lineno, toks[t].col,
                          "'" + toks[t].text + "' is not in alphabet " +
                              std::to_string(k) + "");
      img.append(s);
    }
    images[src.index_of(a)] = {true, std::move(img)};
  }
  finish_morphism();

  if (morphisms.empty())
    throw parse_error(lineno + 1, 1, "file declares no morphism");
  if (built.size() != morphisms.size() + 1)
    throw parse_error(lineno + 1, 1,
                      "need exactly one alphabet per level: " +
                          std::to_string(morphisms.size() + 1) +
                          " alphabets for " + std::to_string(morphisms.size()) +
                          " morphisms");

  if (!tail_seen)
    return DirectiveSequence(std::move(morphisms),
                             DirectiveSequence::Tail::finite, 1, false);
  const bool hint = repeating_block_primitive(morphisms, tail_period);
  return DirectiveSequence(std::move(morphisms),
                           DirectiveSequence::Tail::repeat, tail_period, hint);
}

DirectiveSequence load_dirseq(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_dirseq(buf.str());
  } catch (const parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

std::string serialize_dirseq(const DirectiveSequence& ds) {
  std::ostringstream out;
  const std::size_t levels = ds.explicit_levels();
  for (std::size_t n = 0; n <= levels; ++n) {
    const Alphabet& a = ds.alphabet_at(n);
    out << "alphabet " << n << ":";
    for (Sym s : a.symbols()) out << ' ' << a.glyph(s);
    out << '\n';
  }
  for (std::size_t n = 0; n < levels; ++n) {
    const Morphism& m = ds.level(n);
    out << "morphism " << n << ":\n";
    for (Sym s : m.source().symbols()) {
      out << "  " << m.source().glyph(s) << " ->";
      const Word& img = m.image(s);
      for (std::size_t i = 0; i < img.size(); ++i)
        out << ' ' << m.target().glyph(img[i]);
      out << '\n';
    }
  }
  if (ds.tail() == DirectiveSequence::Tail::repeat)
    out << "tail repeat " << ds.tail_period() << '\n';
  return out.str();
}

}  // namespace sadic
