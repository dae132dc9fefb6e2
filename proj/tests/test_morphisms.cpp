#include <doctest.h>

#include <cstddef>
#include <random>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "sadic/directive.hpp"
#include "sadic/morphism.hpp"

using namespace sadic;

namespace {

Word W(const char* digits) {
  std::vector<Sym> syms;
  for (const char* p = digits; *p; ++p) syms.push_back(*p - '0');
  return Word(syms);
}

Morphism fibonacci() {
  Alphabet bin = Alphabet::of_size(2);
  return Morphism(bin, bin, {W("01"), W("0")});
}

Morphism thue_morse() {
  Alphabet bin = Alphabet::of_size(2);
  return Morphism(bin, bin, {W("01"), W("10")});
}

}  // namespace

TEST_CASE("images and application on the pinned examples") {
  Morphism fib = fibonacci();
  CHECK(fib.image(0) == W("01"));
  CHECK(fib.image(1) == W("0"));
  CHECK(fib.apply(W("01")) == W("010"));

  Morphism tm = thue_morse();
  CHECK(tm.apply(W("011")) == W("011010"));
  CHECK(tm.apply(Word()) == Word());
}

TEST_CASE("two-sided application marks the center") {
  Morphism fib = fibonacci();
  auto [fw, fc] = fib.apply_two_sided(W("1"), W("0"));
  CHECK(fw == W("001"));
  CHECK(fc == 1);

  Morphism tm = thue_morse();
  auto [tw, tc] = tm.apply_two_sided(W("0"), W("1"));
  CHECK(tw == W("0110"));
  CHECK(tc == 2);

  auto [ew, ec] = tm.apply_two_sided(Word(), Word());
  CHECK(ew == Word());
  CHECK(ec == 0);

  // The pair is always (image(left) . image(right), |image(left)|).
  for (std::size_t ll = 0; ll <= 4; ++ll)
    for (const Word& l : oracles::all_words(2, ll))
      for (std::size_t rl = 0; rl <= 3; ++rl)
        for (const Word& r : oracles::all_words(2, rl)) {
          auto [w, c] = fib.apply_two_sided(l, r);
          Word li = fib.apply(l);
          CHECK(w == li + fib.apply(r));
          CHECK(c == li.size());
        }
}

TEST_CASE("composition on the pinned examples") {
  Morphism fib = fibonacci();
  Morphism fib2 = compose(fib, fib);
  CHECK(fib2.image(0) == W("010"));
  CHECK(fib2.image(1) == W("01"));

  Morphism tm = thue_morse();
  Morphism tm2 = compose(tm, tm);
  CHECK(tm2.image(0) == W("0110"));
  CHECK(tm2.image(1) == W("1001"));
}

TEST_CASE("image length extremes and structural predicates") {
  Morphism fib = fibonacci();
  CHECK(fib.max_image_length() == 2);
  CHECK(fib.min_image_length() == 1);
  CHECK_FALSE(fib.positive());
  CHECK_FALSE(fib.proper());
  CHECK(fib.injective_on_letters());

  Morphism tm = thue_morse();
  CHECK(tm.max_image_length() == 2);
  CHECK(tm.min_image_length() == 2);
  CHECK(tm.positive());
  CHECK_FALSE(tm.proper());
  CHECK(tm.injective_on_letters());

  Alphabet bin = Alphabet::of_size(2);
  Morphism constant(bin, bin, {W("00"), W("00")});
  CHECK_FALSE(constant.injective_on_letters());
  CHECK(constant.proper());

  CHECK(Morphism::identity(bin).injective_on_letters());
  CHECK(Morphism::identity(bin).max_image_length() == 1);
}

TEST_CASE("construction and application reject malformed input") {
  Alphabet bin = Alphabet::of_size(2);
  CHECK_THROWS_AS(Morphism(bin, bin, {W("01")}), std::invalid_argument);
  CHECK_THROWS_AS(Morphism(bin, bin, {W("01"), Word()}), std::invalid_argument);
  CHECK_THROWS_AS(Morphism(bin, bin, {W("01"), W("02")}),
                  std::invalid_argument);
  Morphism fib = fibonacci();
  CHECK_THROWS_AS(fib.apply(W("02")), std::invalid_argument);
}

TEST_CASE("application is a homomorphism") {
  std::mt19937_64 gen(0);
  for (int k = 1; k <= 3; ++k) {
    Alphabet src = Alphabet::of_size(k);
    Alphabet tgt = Alphabet::of_size(1 + static_cast<int>(gen() % 3));
    Morphism m = oracles::random_morphism(gen, src, tgt, 4);
    for (std::size_t len = 0; len <= 6; ++len)
      for (const Word& w : oracles::all_words(k, len))
        for (std::size_t cut = 0; cut <= len; ++cut) {
          Word a(std::vector<Sym>(w.begin(), w.begin() + cut));
          Word b(std::vector<Sym>(w.begin() + cut, w.end()));
          CHECK(m.apply(w) == m.apply(a) + m.apply(b));
        }
  }
}

TEST_CASE("composition is associative and multiplies length bounds") {
  std::mt19937_64 gen(1);
  for (int trial = 0; trial < 1000; ++trial) {
    Alphabet a = Alphabet::of_size(1 + static_cast<int>(gen() % 4));
    Alphabet b = Alphabet::of_size(1 + static_cast<int>(gen() % 4));
    Alphabet c = Alphabet::of_size(1 + static_cast<int>(gen() % 4));
    Alphabet d = Alphabet::of_size(1 + static_cast<int>(gen() % 4));
    Morphism h = oracles::random_morphism(gen, a, b, 5);
    Morphism g = oracles::random_morphism(gen, b, c, 5);
    Morphism f = oracles::random_morphism(gen, c, d, 5);

    Morphism gh = compose(g, h);
    CHECK(compose(f, gh) == compose(compose(f, g), h));

    CHECK(gh.max_image_length() <= g.max_image_length() * h.max_image_length());
    CHECK(gh.min_image_length() >= g.min_image_length() * h.min_image_length());

    // Composition agrees with applying in sequence.
    Word w = oracles::random_word(gen, a.size(), 1 + gen() % 6);
    CHECK(gh.apply(w) == g.apply(h.apply(w)));
  }
}

TEST_CASE("composition of positive morphisms is positive") {
  std::mt19937_64 gen(2);
  for (int trial = 0; trial < 200; ++trial) {
    int ka = 1 + static_cast<int>(gen() % 3);
    int kb = 1 + static_cast<int>(gen() % 3);
    int kc = 1 + static_cast<int>(gen() % 3);
    Alphabet a = Alphabet::of_size(ka);
    Alphabet b = Alphabet::of_size(kb);
    Alphabet c = Alphabet::of_size(kc);
    // Force positivity: seed each image with the whole target alphabet, then
    // pad randomly.
    auto positive = [&gen](const Alphabet& src, const Alphabet& tgt) {
      std::vector<Word> images;
      for (std::size_t i = 0; i < src.size(); ++i) {
        std::vector<Sym> syms(tgt.symbols());
        std::size_t pad = gen() % 3;
        for (std::size_t j = 0; j < pad; ++j)
          syms.push_back(static_cast<Sym>(gen() % tgt.size()));
        images.emplace_back(syms);
      }
      return Morphism(src, tgt, images);
    };
    Morphism h = positive(a, b);
    Morphism g = positive(b, c);
    REQUIRE(h.positive());
    REQUIRE(g.positive());
    CHECK(compose(g, h).positive());
  }
}

TEST_CASE("iterated blocks of stationary sequences") {
  DirectiveSequence fib = DirectiveSequence::stationary(fibonacci(), true);
  CHECK(fib.block(0, 8).image(0).size() == 55);
  Morphism fib2 = fib.block(0, 2);
  CHECK(fib2.image(0).size() == 3);
  CHECK(fib2.image(1).size() == 2);
  CHECK(fib.block(3, 3) == Morphism::identity(Alphabet::of_size(2)));

  DirectiveSequence tm = DirectiveSequence::stationary(thue_morse(), true);
  CHECK(tm.block(0, 4).image(0) == W("0110100110010110"));
  CHECK(tm.block(0, 5).image(0).size() == 32);
  // Stationarity: the block depends only on the level count.
  CHECK(tm.block(0, 3) == tm.block(2, 5));
}
