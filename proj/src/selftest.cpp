#include "sadic/selftest.hpp"

#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "sadic/coding.hpp"
#include "sadic/constructions.hpp"
#include "sadic/dirseq_format.hpp"
#include "sadic/language.hpp"
#include "sadic/words.hpp"

namespace sadic {

namespace {

struct Checker {
  std::vector<SelfTestOutcome>& out;
  std::string prefix;

  void check(const std::string& name, bool cond,
             const std::string& detail = "") {
    out.push_back({prefix + "/" + name, cond, cond ? "" : detail});
  }

  template <class T, class U>
  void equals(const std::string& name, const T& actual, const U& expected) {
    bool ok = (actual == expected);
    std::string detail;
    if (!ok) {
      std::ostringstream os;
      os << "expected " << expected << ", got " << actual;
      detail = os.str();
    }
    out.push_back({prefix + "/" + name, ok, detail});
  }
};

Word W(const char* digits) { return Word::from_digits(digits); }

Morphism fibonacci() {
  Alphabet bin = Alphabet::of_size(2);
  return Morphism(bin, bin, {W("01"), W("0")});
}

Morphism thue_morse() {
  Alphabet bin = Alphabet::of_size(2);
  return Morphism(bin, bin, {W("01"), W("10")});
}

void suite_words(Checker& c) {
  c.equals("period", period(W("010010")), std::size_t{3});
  c.equals("root-full", root(W("0101")), W("01"));
  c.equals("root-primitive", root(W("010010")), W("010"));
  c.check("primitive", is_primitive(W("0110")) && !is_primitive(W("0101")));
  c.equals("rotation-left", rotation(W("0123"), 1), W("1230"));
  c.equals("rotation-right", rotation(W("0123"), -1), W("3012"));
  c.check("conjugacy", are_conjugate(W("001"), W("010")) &&
                           are_conjugate(W("001"), W("100")) &&
                           !are_conjugate(W("001"), W("011")));
  c.check("power-occurrence", occurs_in_power(W("0101"), W("01")) &&
                                  !occurs_in_power(W("1001"), W("01")));

  // |w| = |u| + |v| - 1 forces the common root; one symbol less does not.
  auto forced = fine_wilf(W("01"), W("0101"), W("01010"));
  c.check("two-periods-forced", forced && *forced == W("01"));
  c.check("two-periods-sharp", !fine_wilf(W("01"), W("010"), W("010")));

  c.check("shift-fixes-power", shift_fixes_power(W("0101"), 2) &&
                                   !shift_fixes_power(W("0101"), 1) &&
                                   shift_fixes_power(W("0101"), -4));

  auto sync = power_window_sync(W("01"), W("10"), 0, 1, 3);
  c.check("window-sync", sync && *sync == W("01"));
  c.check("window-sync-mismatch",
          !power_window_sync(W("01"), W("10"), 0, 0, 3));

  c.check("overlap-sync",
          overlap_synchronize(W("0"), W("101"), W("0"), W("01"), W("10")));

  auto l2g = global_period_from_local(W("010101"), {W("01")});
  c.check("local-to-global",
          l2g.period == 2 && l2g.period_bound == 2 && !l2g.assignment.empty());

  auto wit = aperiodicity_witness(W("010010"), 1);
  c.check("aperiodicity-witness",
          wit && wit->first == 0 && wit->second == W("01"));
  c.check("aperiodicity-none", !aperiodicity_witness(W("0101"), 2));

  auto reps = primitive_representatives(Alphabet::of_size(2), 3);
  std::vector<Word> expect{W("0"), W("1"), W("01"), W("001"), W("011")};
  c.check("primitive-classes", reps == expect);
}

void suite_morphisms(Checker& c) {
  Morphism fib = fibonacci();
  Morphism tm = thue_morse();
  Alphabet bin = Alphabet::of_size(2);

  c.equals("apply", fib.apply(W("01")), W("010"));
  c.equals("identity", Morphism::identity(bin).apply(W("0101")), W("0101"));
  c.check("positivity", tm.positive() && !fib.positive());
  c.check("letter-injectivity",
          fib.injective_on_letters() &&
              !Morphism(bin, bin, {W("0"), W("0")}).injective_on_letters());

  auto ds = DirectiveSequence::stationary(fib, true);
  c.equals("block-length", ds.block(0, 8).image(0).size(), std::size_t{55});

  auto tms = DirectiveSequence::stationary(tm, true);
  c.equals("fixed-point-prefix", tms.block(0, 4).image(0),
           W("0110100110010110"));
}

void suite_language(Checker& c) {
  auto fib = DirectiveSequence::stationary(fibonacci(), true);
  auto tm = DirectiveSequence::stationary(thue_morse(), true);

  auto ct = complexity(fib, 0, 12);
  bool fib_ok = ct.status == LangStatus::exact;
  for (std::size_t n = 1; n <= 12; ++n) fib_ok = fib_ok && ct.at(n) == n + 1;
  c.check("fibonacci-complexity", fib_ok, "p(n) != n + 1 below 13");

  auto tt = complexity(tm, 0, 6);
  std::vector<std::size_t> tm_expect{2, 4, 6, 10, 12, 16};
  c.check("thue-morse-complexity", tt.values == tm_expect);

  auto lw = language(fib, 0, 4);
  std::vector<Word> words4{W("0010"), W("0100"), W("0101"), W("1001"),
                           W("1010")};
  c.check("language-words", lw.words == words4 && lw.status == LangStatus::exact);
  c.check("membership", lw.contains(W("0100")) && !lw.contains(W("0000")));

  bool rs_ok = true;
  for (std::size_t n = 1; n <= 6; ++n)
    rs_ok = rs_ok && right_special(fib, 0, n).size() == 1;
  c.check("right-special", rs_ok, "Sturmian level must have one branch point");

  auto pows = power_set(fib, W("0"), 3);
  bool pow_ok = false, pow3 = false;
  for (auto& p : pows) {
    if (p == W("00")) pow_ok = true;
    if (p == W("000")) pow3 = true;
  }
  c.check("power-set", pow_ok && !pow3, "expected 00 in, 000 out");

  auto big = complexity(fib, 0, 9);
  c.equals("low-growth-length", find_low_growth_length(big, 4, 2),
           std::size_t{4});
  auto sparse = find_sparse_low_growth(big, 2, 2);
  c.check("sparse-low-growth", sparse && sparse->anchor == 4 &&
                                   sparse->m >= 2 && sparse->m < 4);

  auto contracted = contract(fib, 3);
  bool same = contracted.level(0).min_image_length() >= 3;
  auto cc = complexity(contracted, 0, 8);
  for (std::size_t n = 1; n <= 8; ++n) same = same && cc.at(n) == ct.at(n);
  c.check("contract-preserves-language", same);

  auto gr = growth_report(fib, 6);
  c.check("growth-report", gr.levels.size() >= 6 && gr.levels[5].max_len == 13 &&
                               gr.levels[5].min_len == 8 &&
                               gr.primitivity_certified);
}

void suite_codings(Checker& c) {
  Morphism fib = fibonacci();
  auto ds = DirectiveSequence::stationary(fib, true);
  auto provider = subshift_language_provider(ds, 0);

  ClopenSet u1 = ClopenSet::from_words({W("1")});
  auto rw = return_words(provider, u1, 4);
  std::vector<Word> rw_expect{W("10"), W("100")};
  c.check("return-words", rw == rw_expect);

  Factorization f(fib, 0, W("010"));
  c.check("cut-positions", f.cut(0) == 0 && f.cut(1) == 2 && f.cut(2) == 3 &&
                               f.cut(3) == 5);

  Coding idc{Morphism::identity(fib.source()), provider, {}};
  auto idr = recognizability_radius(idc, 4);
  c.check("identity-radius", idr && *idr == 1);

  Coding fc{fib, provider, {}};
  auto fr = recognizability_radius(fc, 16);
  c.check("self-coding-radius", fr && *fr == 2);

  Coding cc = clopen_coding(ds, 0, u1);
  c.check("clopen-coding", cc.sigma.source().size() == 2 && cc.reco_radius &&
                               *cc.reco_radius == 3);

  auto [sc, rep] = special_coding(ds, 0, 3);
  (void)sc;
  c.check("special-coding", rep.all() && rep.d == 2 && rep.return_count == 2 &&
                                rep.radius == 4);

  auto comp = composition_recognizability_check(fib, fib, provider, 20);
  c.check("composition", comp.decided && comp.consistent &&
                             comp.inner_radius == std::size_t{2} &&
                             comp.outer_radius == std::size_t{2} &&
                             comp.composed_radius == std::size_t{4});

  Alphabet bin = Alphabet::of_size(2);
  Morphism collapse(bin, bin, {W("0"), W("0")});
  auto bad = composition_recognizability_check(
      collapse, Morphism::identity(bin), provider, 8);
  c.check("composition-collapse", !bad.inner_radius && bad.consistent &&
                                      !bad.decided);
}

void suite_constructions(Checker& c) {
  c.equals("scale-separator", gap_epsilon({1000, 2}, 2, 4),
           std::uint64_t{31});

  Alphabet bin = Alphabet::of_size(2);
  Word zeros(std::vector<Sym>(1000, 0));
  auto da = decompose_special(zeros, 1, bin);
  c.check("decompose-periodic", da.tag == Decomposition::Tag::A &&
                                    da.v.size() == 0 && da.u.size() == 99 &&
                                    da.u_prime.size() == 99 &&
                                    da.v_prime.size() == 802);

  std::vector<Sym> alt;
  for (int i = 0; i < 500; ++i) {
    alt.push_back(0);
    alt.push_back(1);
  }
  auto db = decompose_special(Word(alt), 1, bin);
  c.check("decompose-alternating", db.tag == Decomposition::Tag::B &&
                                       db.u.size() == 500 &&
                                       db.u_prime.size() == 500);

  auto params = NegativeFamilyParams::minimal(1);
  auto rep = negative_family_check(params, 1, 64);
  c.check("family-depth-one", rep.all(), rep.failure);
  c.equals("family-image", negative_tau(params, 0).image(0),
           W("0000000011111111"));

  auto pk1 = sample_P_minus_K(8, 1, 1, 1);
  c.check("tuple-outside-combinations",
          pk1 && *pk1 == std::vector<std::uint64_t>{8});
  c.check("tuples-all-covered", !sample_P_minus_K(8, 1, 2, 1));

  std::vector<Sym> ab;
  for (int i = 0; i < 32; ++i) {
    ab.push_back(0);
    ab.push_back(1);
  }
  auto cover = cfpz_cover(Word(ab), 1);
  c.check("dyadic-cover", cover.level_count == 6 &&
                              cover.total_distinct() == 103 &&
                              cover.min_length() >= 1);

  auto ds = DirectiveSequence::stationary(fibonacci(), true);
  auto provider = subshift_language_provider(ds, 0);
  std::vector<Word> blocks{ds.block(0, 6).image(0), ds.block(0, 6).image(1)};
  auto pb = power_cover_px_bound(provider, blocks);
  c.check("power-cover-bound", pb.pass && pb.bound == 84 && pb.actual == 14);
  auto fd = first_difference_bound(provider, blocks, 10);
  c.check("difference-bound", fd.pass && fd.actual == 1);

  std::vector<Sym> host;
  for (int i = 0; i < 8; ++i) {
    host.push_back(0);
    host.push_back(1);
  }
  auto base = synchronize_occurrences(Word(host), W("01010101"), {0, 2, 4},
                                      {8, 8, 8});
  c.equals("occurrence-sync", base, W("01"));
}

void suite_format(Checker& c) {
  std::string fib_text =
      "alphabet 0: 0 1\n"
      "alphabet 1: 0 1\n"
      "morphism 0:\n"
      "  0 -> 0 1\n"
      "  1 -> 0\n"
      "tail repeat 1\n";
  auto ds = parse_dirseq(fib_text);
  c.check("parse", ds.explicit_levels() == 1 &&
                       ds.tail() == DirectiveSequence::Tail::repeat &&
                       ds.tail_period() == 1 && ds.primitive_hint());
  c.equals("round-trip", serialize_dirseq(parse_dirseq(serialize_dirseq(ds))),
           serialize_dirseq(ds));

  auto ct = complexity(ds, 0, 6);
  bool ok = true;
  for (std::size_t n = 1; n <= 6; ++n) ok = ok && ct.at(n) == n + 1;
  c.check("parsed-complexity", ok);

  auto expect_error = [&](const char* name, const std::string& text,
                          std::size_t line, const std::string& fragment) {
    try {
      parse_dirseq(text);
      c.check(name, false, "no diagnostic raised");
    } catch (const parse_error& e) {
      std::string msg = e.what();
      c.check(name, e.line() == line && msg.find(fragment) != std::string::npos,
              msg);
    }
  };
  expect_error("diagnostic-index", "alphabet 1: 0 1\n", 1,
               "alphabet 0 expected");
  expect_error("diagnostic-letter",
               "alphabet 0: 0 1\nalphabet 1: 0 1\nmorphism 0:\n  0 -> 0\n"
               "  1 -> 2\n",
               5, "not in alphabet 0");
  expect_error("diagnostic-missing-image",
               "alphabet 0: 0 1\nalphabet 1: 0 1\nmorphism 0:\n  0 -> 0 1\n",
               3, "misses an image");
}

using SuiteFn = void (*)(Checker&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"words", suite_words},           {"morphisms", suite_morphisms},
      {"language", suite_language},     {"codings", suite_codings},
      {"constructions", suite_constructions}, {"format", suite_format},
  };
  return suites;
}

}  // namespace

std::vector<std::string> selftest_suites() {
  std::vector<std::string> names;
  for (auto& [name, fn] : registry()) names.push_back(name);
  return names;
}

std::vector<SelfTestOutcome> run_selftest(const std::string& suite) {
  std::vector<SelfTestOutcome> out;
  bool matched = false;
  for (auto& [name, fn] : registry()) {
    if (suite == "all" || suite == name) {
      Checker c{out, name};
      fn(c);
      matched = true;
    }
  }
  if (!matched)
    throw std::invalid_argument("unknown selftest suite: " + suite);
  return out;
}

}  // namespace sadic
