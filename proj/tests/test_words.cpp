#include <doctest.h>

#include <cstdint>
#include <stdexcept>

#include "oracles.hpp"
#include "sadic/errors.hpp"
#include "sadic/words.hpp"

using namespace sadic;

namespace {

Word W(const char* digits) { return Word::from_digits(digits); }

// t^Z at absolute position m.
Sym power_at(const Word& t, std::int64_t m) {
  std::int64_t r = m % static_cast<std::int64_t>(t.size());
  if (r < 0) r += static_cast<std::int64_t>(t.size());
  return t[static_cast<std::size_t>(r)];
}

}  // namespace

TEST_CASE("root and period on the pinned examples") {
  CHECK(root(W("0101")) == W("01"));
  CHECK(root(W("001")) == W("001"));
  CHECK(root(W("000000")) == W("0"));
  CHECK(period(W("010")) == 2);
  CHECK(period(W("00100")) == 3);
  CHECK(period(W("0123")) == 4);
  CHECK_THROWS_AS(root(Word{}), std::invalid_argument);
  CHECK_THROWS_AS(period(Word{}), std::invalid_argument);
}

TEST_CASE("root idempotence and stability under powers") {
  for (std::size_t len = 1; len <= 10; ++len)
    for (const Word& w : oracles::all_words(2, len)) {
      Word r = root(w);
      CHECK(root(r) == r);
      std::vector<Sym> rep;
      for (int k = 0; k < 3; ++k) {
        rep.insert(rep.end(), w.begin(), w.end());
        CHECK(root(Word(rep)) == r);
      }
    }
}

TEST_CASE("period and root agree with the defining scans") {
  for (std::size_t len = 1; len <= 12; ++len)
    for (const Word& w : oracles::all_words(2, len)) {
      CHECK(period(w) == oracles::period(w));
      CHECK(root(w) == oracles::root(w));
    }
  for (std::size_t len = 1; len <= 8; ++len)
    for (const Word& w : oracles::all_words(3, len)) {
      CHECK(period(w) == oracles::period(w));
      CHECK(root(w) == oracles::root(w));
    }
}

TEST_CASE("half-length words force period = root length") {
  for (std::size_t len = 1; len <= 12; ++len)
    for (const Word& w : oracles::all_words(2, len))
      if (w.size() >= 2 * root(w).size()) CHECK(period(w) == root(w).size());
}

TEST_CASE("periodicity by a base word") {
  CHECK(is_periodic_by(W("1010"), W("01")));
  CHECK_FALSE(is_periodic_by(W("001"), W("01")));
  CHECK(is_periodic_by(W("01"), W("0101")));
}

TEST_CASE("occurrence in powers") {
  CHECK(occurs_in(Word{}, W("01")));
  CHECK(occurs_in(Word{}, Word{}));
  CHECK(occurs_in_power(W("0101"), W("01")));
  CHECK_FALSE(occurs_in_power(W("1001"), W("01")));
  for (std::size_t bl = 1; bl <= 3; ++bl)
    for (const Word& base : oracles::all_words(2, bl))
      for (std::size_t pl = 1; pl <= 6; ++pl)
        for (const Word& pat : oracles::all_words(2, pl))
          CHECK(occurs_in_power(pat, base) ==
                oracles::occurs_in_power(pat, base));
}

TEST_CASE("rotations") {
  CHECK(rotation(W("0123"), 1) == W("1230"));
  CHECK(rotation(W("0123"), -1) == W("3012"));
  CHECK(rotation(W("0123"), 0) == W("0123"));
  CHECK(rotation(W("0123"), 8) == W("0123"));
  CHECK(rotation(W("0123"), -7) == rotation(W("0123"), 1));
}

TEST_CASE("conjugacy matches rotation classes") {
  CHECK(are_conjugate(W("01"), W("10")));
  CHECK(are_conjugate(W("001"), W("010")));
  CHECK_FALSE(are_conjugate(W("001"), W("011")));
  for (std::size_t len = 1; len <= 8; ++len) {
    auto words = oracles::all_words(2, len);
    for (const Word& u : words) {
      CHECK(are_conjugate(u, u));
      for (const Word& v : words) {
        bool lib = are_conjugate(u, v);
        CHECK(lib == oracles::conjugate(u, v));
        CHECK(lib == are_conjugate(v, u));
      }
    }
  }
}

TEST_CASE("two-period words on the pinned examples") {
  auto r1 = fine_wilf(W("01"), W("0101"), W("01010"));
  REQUIRE(r1.has_value());
  CHECK(*r1 == W("01"));
  auto r2 = fine_wilf(W("0"), W("0"), W("0"));
  REQUIRE(r2.has_value());
  CHECK(*r2 == W("0"));
  CHECK_FALSE(fine_wilf(W("01"), W("010"), W("010")).has_value());
  // w must be a prefix of both powers.
  CHECK_THROWS_AS(fine_wilf(W("01"), W("01"), W("11")),
                  std::invalid_argument);
}

TEST_CASE("two-period words against the divisor oracle") {
  for (std::size_t ul = 1; ul <= 4; ++ul)
    for (const Word& u : oracles::all_words(2, ul))
      for (std::size_t vl = 1; vl <= 4; ++vl)
        for (const Word& v : oracles::all_words(2, vl)) {
          auto expect = oracles::common_root(u, v);
          for (std::size_t wl = 0; wl <= ul + vl + 2; ++wl) {
            Word w = oracles::power_prefix(u, wl);
            if (w != oracles::power_prefix(v, wl)) continue;
            auto got = fine_wilf(u, v, w);
            if (wl >= ul + vl - 1) {
              REQUIRE(expect.has_value());
              REQUIRE(got.has_value());
              CHECK(*got == *expect);
            } else {
              CHECK(got.has_value() == expect.has_value());
              if (got) CHECK(*got == *expect);
            }
          }
        }
}

TEST_CASE("shifts fixing a periodic point") {
  CHECK(shift_fixes_power(W("0101"), 2));
  CHECK_FALSE(shift_fixes_power(W("01"), 1));
  CHECK(shift_fixes_power(W("010"), 3));
  for (std::size_t len = 1; len <= 5; ++len)
    for (const Word& t : oracles::all_words(2, len))
      for (std::int64_t i = -10; i <= 10; ++i) {
        bool direct = true;
        for (std::size_t m = 0; m < t.size(); ++m)
          direct = direct &&
                   power_at(t, static_cast<std::int64_t>(m) + i) ==
                       power_at(t, static_cast<std::int64_t>(m));
        CHECK(shift_fixes_power(t, i) == direct);
      }
}

TEST_CASE("window agreement between two periodic points") {
  auto wit = power_window_sync(W("01"), W("10"), 0, 1, 4);
  REQUIRE(wit.has_value());
  CHECK(*wit == W("01"));
  CHECK(power_window_sync(W("01"), W("01"), 0, 0, 0).has_value());
  CHECK_FALSE(power_window_sync(W("01"), W("00"), 0, 0, 3).has_value());

  // Above the threshold, agreement must force the same point; the witness
  // reproduces both windows.
  for (std::size_t tl = 1; tl <= 4; ++tl)
    for (const Word& t : oracles::all_words(2, tl))
      for (std::size_t sl = 1; sl <= 4; ++sl)
        for (const Word& s : oracles::all_words(2, sl)) {
          std::int64_t len = static_cast<std::int64_t>(tl + sl) - 1;
          for (std::int64_t i = -6; i <= 6; ++i)
            for (std::int64_t j = -6; j <= 6; ++j) {
              bool agree = true;
              for (std::int64_t m = 0; m < len; ++m)
                agree = agree && power_at(t, i + m) == power_at(s, j + m);
              auto res = power_window_sync(t, s, i, j, len);
              CHECK(res.has_value() == agree);
              if (res)
                for (std::int64_t m = -8; m <= 8; ++m)
                  CHECK(power_at(*res, m) == power_at(t, i + m));
            }
        }
}

TEST_CASE("overlapping occurrences synchronize") {
  CHECK(overlap_synchronize(W("0"), W("101"), W("0"), W("01"), W("10")));
  CHECK(overlap_synchronize(Word{}, W("01"), Word{}, W("01"), W("01")));
  // Below the threshold the direct check decides.
  CHECK(overlap_synchronize(W("0"), W("1"), W("0"), W("01"), W("10")));
  CHECK_THROWS_AS(
      overlap_synchronize(W("1"), W("1"), W("1"), W("01"), W("10")),
      std::invalid_argument);
}

TEST_CASE("local power windows force a global period") {
  auto res = global_period_from_local(W("010101"), {W("01")});
  CHECK(res.period == 2);
  CHECK(res.period_bound == 2);
  CHECK_FALSE(res.assignment.empty());
  CHECK(global_period_from_local(W("0101"), {W("10")}).period_bound == 2);
  CHECK_THROWS_AS(global_period_from_local(W("0011"), {W("01")}),
                  hypothesis_error);
}

TEST_CASE("aperiodicity localizes to short factors") {
  auto w1 = aperiodicity_witness(W("0011"), 1);
  REQUIRE(w1.has_value());
  CHECK(w1->first == 1);
  CHECK(w1->second == W("01"));
  CHECK_FALSE(aperiodicity_witness(W("0101"), 2).has_value());
  auto w2 = aperiodicity_witness(W("0001"), 1);
  REQUIRE(w2.has_value());
  CHECK(w2->first == 2);
  CHECK(w2->second == W("01"));
  CHECK_THROWS_AS(aperiodicity_witness(W("001"), 2), std::invalid_argument);

  for (std::size_t len = 1; len <= 10; ++len)
    for (const Word& u : oracles::all_words(2, len))
      for (std::size_t k = 1; 2 * k <= len; ++k) {
        auto wit = aperiodicity_witness(u, k);
        if (oracles::period(u) <= k) {
          CHECK_FALSE(wit.has_value());
        } else {
          REQUIRE(wit.has_value());
          CHECK(wit->second.size() == 2 * k);
          CHECK(oracles::period(wit->second) > k);
        }
      }
}

TEST_CASE("long factors inherit the period exactly") {
  for (std::size_t len = 1; len <= 10; ++len)
    for (const Word& u : oracles::all_words(2, len)) {
      std::size_t per = period(u);
      for (std::size_t flen = 2 * per; flen <= len; ++flen)
        for (std::size_t at = 0; at + flen <= len; ++at)
          CHECK(period(Word(std::vector<Sym>(u.begin() + at,
                                             u.begin() + at + flen))) == per);
    }
}

TEST_CASE("a long middle word synchronizes the outer periods") {
  for (std::size_t len = 2; len <= 10; ++len)
    for (const Word& x : oracles::all_words(2, len))
      for (std::size_t a = 1; a < len; ++a)
        for (std::size_t b = a; b < len; ++b) {
          Word uv(std::vector<Sym>(x.begin(), x.begin() + b));
          Word vw(std::vector<Sym>(x.begin() + a, x.end()));
          if (b - a < oracles::period(uv) + oracles::period(vw)) continue;
          CHECK(oracles::period(x) == oracles::period(uv));
          CHECK(oracles::period(x) == oracles::period(vw));
        }
}

TEST_CASE("primitive class representatives") {
  CHECK(primitive_representatives(Alphabet::of_size(2), 1) ==
        std::vector<Word>{W("0"), W("1")});
  CHECK(primitive_representatives(Alphabet::of_size(2), 2) ==
        std::vector<Word>{W("0"), W("1"), W("01")});

  for (std::size_t k : {2u, 3u}) {
    std::size_t maxlen = k == 2 ? 8 : 5;
    auto reps = primitive_representatives(Alphabet::of_size(k), maxlen);
    for (std::size_t n = 1; n <= maxlen; ++n) {
      std::size_t count = 0;
      for (auto& r : reps) count += r.size() == n;
      CHECK(count == oracles::necklace_count(k, n));
    }
    for (auto& r : reps) {
      CHECK(is_primitive(r));
      for (std::size_t i = 1; i < r.size(); ++i) {
        Word rot = rotation(r, static_cast<std::int64_t>(i));
        CHECK_FALSE(rot < r);
      }
    }
  }
}
