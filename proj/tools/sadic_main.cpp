#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sadic/coding.hpp"
#include "sadic/constructions.hpp"
#include "sadic/dirseq_format.hpp"
#include "sadic/errors.hpp"
#include "sadic/language.hpp"
#include "sadic/selftest.hpp"

namespace {

using namespace sadic;

// Exit codes: 0 success, 1 verification failure, 2 input error.
constexpr int kOk = 0;
constexpr int kVerifyFail = 1;
constexpr int kInputError = 2;

std::string fixed3(double x) {
  std::ostringstream os;
  os.setf(std::ios::fixed);
  os.precision(3);
  os << x;
  return os.str();
}

// All value output goes through an owned stream so --out and stdout share
// one code path and stay byte-identical.
struct Output {
  std::string path;  // empty = stdout

  template <class Fn>
  int write(Fn&& body) const {
    if (path.empty()) {
      body(std::cout);
      return std::cout ? kOk : kInputError;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
      std::cerr << "cannot open output file: " << path << "\n";
      return kInputError;
    }
    body(f);
    return f ? kOk : kInputError;
  }
};

struct DirseqArgs {
  std::string path;
  std::size_t level = 0;

  DirectiveSequence load() const { return load_dirseq(path); }
};

void add_dirseq_flags(CLI::App* cmd, DirseqArgs& args) {
  cmd->add_option("--dirseq", args.path, "directive-sequence file")
      ->required();
  cmd->add_option("--level", args.level, "subshift level (default 0)");
}

int cmd_complexity(const DirseqArgs& in, std::size_t max_len,
                   const Output& out) {
  auto table = complexity(in.load(), in.level, max_len);
  return out.write([&](std::ostream& os) {
    os << "n,p,delta\n";
    for (std::size_t n = 1; n <= table.max_length(); ++n) {
      os << n << "," << table.at(n) << ",";
      if (n < table.max_length()) os << table.delta(n);
      os << "\n";
    }
  });
}

int cmd_language(const DirseqArgs& in, std::size_t length, const Output& out) {
  auto result = language(in.load(), in.level, length);
  if (result.status != LangStatus::exact)
    std::cerr << "warning: language truncated by resource limits; "
                 "the listing is a lower approximation\n";
  return out.write([&](std::ostream& os) {
    for (auto& w : result.words) os << w << "\n";
  });
}

int cmd_special(const DirseqArgs& in, std::size_t length, const Output& out) {
  auto words = right_special(in.load(), in.level, length);
  return out.write([&](std::ostream& os) {
    for (auto& w : words) os << w << "\n";
  });
}

int cmd_pcom(const DirseqArgs& in, std::size_t base_len, std::size_t k_max) {
  std::cout << pcom_estimate(in.load(), base_len, k_max) << "\n";
  return kOk;
}

int cmd_return_words(const DirseqArgs& in,
                     const std::vector<std::string>& cylinders,
                     std::size_t scan, const Output& out) {
  auto ds = in.load();
  std::vector<Word> cyl_words;
  for (auto& c : cylinders) cyl_words.push_back(Word::from_digits(c));
  auto words = return_words(subshift_language_provider(ds, in.level),
                            ClopenSet::from_words(cyl_words), scan);
  return out.write([&](std::ostream& os) {
    for (auto& w : words) os << w << "\n";
  });
}

int cmd_coding_special(const DirseqArgs& in, std::size_t n) {
  auto [coding, rep] = special_coding(in.load(), in.level, n);
  (void)coding;
  std::cout << "n " << rep.n << "\n"
            << "d " << rep.d << "\n"
            << "alphabet " << rep.alphabet_size << "\n"
            << "right-special " << rep.rs_count << "\n"
            << "letters " << rep.return_count << "\n"
            << "syndetic " << rep.syndetic_bound << "\n"
            << "radius " << rep.radius << "\n";
  auto item = [&](const char* name, bool ok, const std::string& expl) {
    if (ok)
      std::cout << "PASS " << name << "\n";
    else
      std::cout << "FAIL " << name << " " << expl << "\n";
  };
  item("letters-bound", rep.letters_bound,
       std::to_string(rep.return_count) + " > d^3");
  item("image-bound", rep.image_bound, "some |tau(a)| > (d+1) n");
  item("radius-bound", rep.radius_bound,
       std::to_string(rep.radius) + " > (d+2) n");
  item("cuts-match", rep.cuts_match,
       "cut positions differ from right-special windows");
  item("syndetic-certified", rep.syndetic_certified,
       std::to_string(rep.syndetic_bound) + " > p(n) + n");
  item("return-count-bound", rep.return_count_bound,
       std::to_string(rep.return_count) + " > #A * #RS");
  return rep.all() ? kOk : kVerifyFail;
}

int cmd_recognizability(const DirseqArgs& in, std::size_t depth,
                        std::size_t d_max) {
  auto ds = in.load();
  Morphism block = ds.block(in.level, in.level + depth);
  std::size_t cap = d_max ? d_max : 4 * block.max_image_length();
  Coding coding{block, subshift_language_provider(ds, in.level + depth), {}};
  std::cout << "depth " << depth << " cap " << cap << "\n";
  auto radius = recognizability_radius(coding, cap);
  if (radius) {
    std::cout << "PASS recognizability radius " << *radius << "\n";
    return kOk;
  }
  std::cout << "FAIL recognizability no radius within " << cap << "\n";
  return kVerifyFail;
}

int cmd_contract(const DirseqArgs& in, std::size_t min_growth,
                 const Output& out) {
  auto contracted = contract(in.load(), min_growth);
  return out.write([&](std::ostream& os) { os << serialize_dirseq(contracted); });
}

int cmd_negative_family(std::size_t levels, std::size_t k_max, bool verify) {
  auto params = NegativeFamilyParams::minimal(levels);
  auto rep = negative_family_check(params, levels, k_max);
  std::cout << "levels " << levels << " depth " << rep.depth << " kmax "
            << rep.k_max << "\n";
  auto item = [&](const char* name, bool ok, const std::string& data) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << " " << data << "\n";
  };
  item("complexity-linear", rep.complexity_linear,
       "max p(k)/k = " + fixed3(rep.max_ratio) + " at k = " +
           std::to_string(rep.worst_k));
  std::string lens;
  for (auto l : rep.image_lengths)
    lens += (lens.empty() ? "" : " ") + std::to_string(l);
  item("lengths-symmetric", rep.lengths_symmetric, "image lengths " + lens);
  std::string radii;
  for (std::size_t n = 0; n < rep.radii.size(); ++n) {
    if (n) radii += " ";
    radii += rep.radii[n] ? std::to_string(*rep.radii[n]) : std::string("-");
    radii += "/" + std::to_string(rep.radius_caps[n]);
  }
  item("recognizable", rep.recognizable,
       rep.recognizable ? "radius/cap " + radii : rep.failure);
  std::string spc;
  for (auto s : rep.spacer_counts)
    spc += (spc.empty() ? "" : " ") + std::to_string(s);
  item("spacers-present", rep.spacers_present, "per level " + spc);
  if (verify && !rep.all()) return kVerifyFail;
  return kOk;
}

int cmd_pk_sample(std::uint64_t n, std::uint64_t n0, std::uint64_t d,
                  std::size_t l) {
  auto tuple = sample_P_minus_K(n, n0, d, l);
  if (!tuple) {
    std::cout << "none\n";
    return kOk;
  }
  std::string line;
  for (auto p : *tuple) line += (line.empty() ? "" : " ") + std::to_string(p);
  std::cout << line << "\n";
  return kOk;
}

int cmd_cover(const std::string& word_digits, std::size_t random_len,
              std::uint64_t seed, std::size_t alphabet_size, std::size_t ell,
              bool list, const Output& out) {
  Word w;
  if (!word_digits.empty()) {
    w = Word::from_digits(word_digits);
  } else {
    // mt19937_64 output is pinned by the standard, so the word (and every
    // derived line) is reproducible from the seed alone.
    std::mt19937_64 gen(seed);
    std::vector<Sym> syms(random_len);
    for (auto& s : syms) s = static_cast<Sym>(gen() % alphabet_size);
    w = Word(syms);
  }
  auto cover = cfpz_cover(w, ell);
  return out.write([&](std::ostream& os) {
    os << "length " << cover.w.size() << " ell " << cover.ell << "\n"
       << "levels " << cover.level_count << "\n"
       << "distinct " << cover.total_distinct() << "\n"
       << "min " << cover.min_length() << " max " << cover.max_length()
       << "\n";
    if (list)
      for (auto& v : cover.words()) os << v << "\n";
  });
}

int cmd_px_bounds(const DirseqArgs& in, std::size_t depth, std::size_t l) {
  auto ds = in.load();
  Morphism block = ds.block(in.level, in.level + depth);
  std::vector<Word> blocks;
  for (Sym a : block.source().symbols()) {
    Word img = block.image(a);
    bool seen = false;
    for (auto& b : blocks) seen = seen || b == img;
    if (!seen) blocks.push_back(img);
  }
  auto provider = subshift_language_provider(ds, in.level);
  std::size_t min_len = block.min_image_length();
  std::cout << "blocks " << blocks.size() << " min " << min_len << " max "
            << block.max_image_length() << "\n";
  auto pc = power_cover_px_bound(provider, blocks);
  std::cout << (pc.pass ? "PASS" : "FAIL") << " power-cover p(" << min_len
            << ") = " << pc.actual << (pc.pass ? " <= " : " > ") << pc.bound
            << "\n";
  if (!l && min_len < 2)
    throw std::invalid_argument(
        "no admissible difference length: min block length is 1");
  std::size_t l_eff = l ? l : min_len - 1;
  auto fd = first_difference_bound(provider, blocks, l_eff);
  std::cout << (fd.pass ? "PASS" : "FAIL") << " first-difference delta("
            << l_eff << ") = " << fd.actual << (fd.pass ? " <= " : " > ")
            << fixed3(fd.bound) << "\n";
  return (pc.pass && fd.pass) ? kOk : kVerifyFail;
}

int cmd_verify(const std::string& suite) {
  auto outcomes = run_selftest(suite);
  std::size_t fails = 0;
  for (auto& o : outcomes) {
    if (o.pass) {
      std::cout << "PASS " << o.name << "\n";
    } else {
      ++fails;
      std::cout << "FAIL " << o.name << " " << o.detail << "\n";
    }
  }
  std::cout << outcomes.size() << " checks, " << fails << " failures\n";
  return fails == 0 ? kOk : kVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"s-adic word combinatorics toolkit"};
  app.require_subcommand(1);

  int rc = kOk;
  Output out;

  // complexity
  DirseqArgs cx_in;
  std::size_t cx_max = 30;
  auto* cx = app.add_subcommand("complexity", "factor complexity table (CSV)");
  add_dirseq_flags(cx, cx_in);
  cx->add_option("--max", cx_max, "largest factor length")->required();
  cx->add_option("--out", out.path, "output file (default stdout)");
  cx->callback([&] { rc = cmd_complexity(cx_in, cx_max, out); });

  // language
  DirseqArgs lg_in;
  std::size_t lg_len = 0;
  auto* lg = app.add_subcommand("language", "legal words of one length");
  add_dirseq_flags(lg, lg_in);
  lg->add_option("--length", lg_len, "word length")->required();
  lg->add_option("--out", out.path, "output file (default stdout)");
  lg->callback([&] { rc = cmd_language(lg_in, lg_len, out); });

  // special
  DirseqArgs sp_in;
  std::size_t sp_len = 0;
  auto* sp = app.add_subcommand("special", "right-special words of one length");
  add_dirseq_flags(sp, sp_in);
  sp->add_option("--length", sp_len, "word length")->required();
  sp->add_option("--out", out.path, "output file (default stdout)");
  sp->callback([&] { rc = cmd_special(sp_in, sp_len, out); });

  // pcom
  DirseqArgs pc_in;
  std::size_t pc_base = 4, pc_kmax = 16;
  auto* pc = app.add_subcommand("pcom", "power complexity lower bound");
  add_dirseq_flags(pc, pc_in);
  pc->add_option("--base-len", pc_base, "largest power base length");
  pc->add_option("--kmax", pc_kmax, "largest exponent scanned");
  pc->callback([&] { rc = cmd_pcom(pc_in, pc_base, pc_kmax); });

  // coding return-words | coding special
  auto* cd = app.add_subcommand("coding", "codings of the subshift");
  cd->require_subcommand(1);
  DirseqArgs rw_in;
  std::vector<std::string> rw_cyl;
  std::size_t rw_scan = 8;
  auto* rw = cd->add_subcommand("return-words", "return words of a clopen set");
  add_dirseq_flags(rw, rw_in);
  rw->add_option("--cylinder", rw_cyl, "cylinder word (repeatable)")
      ->required();
  rw->add_option("--scan", rw_scan, "initial scan length");
  rw->add_option("--out", out.path, "output file (default stdout)");
  rw->callback([&] { rc = cmd_return_words(rw_in, rw_cyl, rw_scan, out); });

  DirseqArgs cs_in;
  std::size_t cs_n = 0;
  auto* cs = cd->add_subcommand("special",
                                "coding by right-special cylinders + report");
  add_dirseq_flags(cs, cs_in);
  cs->add_option("--length", cs_n, "right-special word length")->required();
  cs->callback([&] { rc = cmd_coding_special(cs_in, cs_n); });

  // recognizability
  DirseqArgs rg_in;
  std::size_t rg_depth = 1, rg_dmax = 0;
  auto* rg = app.add_subcommand("recognizability",
                                "reading radius of a composed block");
  add_dirseq_flags(rg, rg_in);
  rg->add_option("--depth", rg_depth, "number of composed levels");
  rg->add_option("--dmax", rg_dmax,
                 "radius cap (default: four block image lengths)");
  rg->callback([&] { rc = cmd_recognizability(rg_in, rg_depth, rg_dmax); });

  // contract
  DirseqArgs ct_in;
  std::size_t ct_growth = 2;
  auto* ct = app.add_subcommand("contract",
                                "telescope levels to a minimum growth");
  add_dirseq_flags(ct, ct_in);
  ct->add_option("--min-growth", ct_growth, "minimum block image length");
  ct->add_option("--out", out.path, "output file (default stdout)");
  ct->callback([&] { rc = cmd_contract(ct_in, ct_growth, out); });

  // negative-family
  std::size_t nf_levels = 1, nf_kmax = 512;
  bool nf_verify = false;
  auto* nf = app.add_subcommand(
      "negative-family", "linear-complexity family with unreadable blocks");
  nf->add_option("--levels", nf_levels, "explicit levels")->required();
  nf->add_option("--kmax", nf_kmax, "complexity horizon");
  nf->add_flag("--verify", nf_verify, "exit 1 unless every item passes");
  nf->callback([&] { rc = cmd_negative_family(nf_levels, nf_kmax, nf_verify); });

  // pk-sample
  std::uint64_t pk_n = 8, pk_n0 = 1, pk_d = 1;
  std::size_t pk_l = 1;
  auto* pk = app.add_subcommand("pk-sample",
                                "first exponent tuple outside the "
                                "combination set");
  pk->add_option("--n", pk_n, "window scale")->required();
  pk->add_option("--n0", pk_n0, "base length");
  pk->add_option("--d", pk_d, "combination budget")->required();
  pk->add_option("--l", pk_l, "tuple length")->required();
  pk->callback([&] { rc = cmd_pk_sample(pk_n, pk_n0, pk_d, pk_l); });

  // cover
  std::string cv_word;
  std::size_t cv_random = 0, cv_alpha = 2, cv_ell = 1;
  std::uint64_t cv_seed = 0;
  bool cv_list = false;
  auto* cv = app.add_subcommand("cover", "dyadic factor cover of a word");
  auto* cv_w = cv->add_option("--word", cv_word, "word as a digit string");
  auto* cv_r = cv->add_option("--random", cv_random, "random word length");
  cv_w->excludes(cv_r);
  cv->add_option("--seed", cv_seed, "random seed (default 0)");
  cv->add_option("--alphabet", cv_alpha, "random alphabet size");
  cv->add_option("--ell", cv_ell, "granularity")->required();
  cv->add_flag("--list", cv_list, "list the members");
  cv->add_option("--out", out.path, "output file (default stdout)");
  cv->callback([&] {
    if (cv_word.empty() && cv_random == 0)
      throw CLI::ValidationError("cover", "need --word or --random");
    rc = cmd_cover(cv_word, cv_random, cv_seed, cv_alpha, cv_ell, cv_list,
                   out);
  });

  // px-bounds
  DirseqArgs px_in;
  std::size_t px_depth = 1, px_l = 0;
  auto* px = app.add_subcommand(
      "px-bounds", "complexity bounds from a block image cover");
  add_dirseq_flags(px, px_in);
  px->add_option("--depth", px_depth, "number of composed levels");
  px->add_option("--l", px_l,
                 "difference length (default: min block length - 1)");
  px->callback([&] { rc = cmd_px_bounds(px_in, px_depth, px_l); });

  // verify
  std::string vf_suite;
  auto* vf = app.add_subcommand("verify", "built-in verification suites");
  vf->add_option("suite", vf_suite, "suite name or 'all'")->required();
  vf->callback([&] { rc = cmd_verify(vf_suite); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  } catch (const verification_error& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kVerifyFail;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFail;
  }
  return rc;
}
