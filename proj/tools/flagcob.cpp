#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "flagcob/checks.hpp"
#include "flagcob/ddiff.hpp"
#include "flagcob/errors.hpp"
#include "flagcob/jsonio.hpp"
#include "flagcob/stable.hpp"
#include "flagcob/word.hpp"

namespace {

using flagcob::Json;

void emit(const std::string& text, const std::string& out_path) {
  std::cout << text << "\n";
  if (!out_path.empty()) {
    std::ofstream os(out_path);
    if (!os) throw flagcob::Error("cannot open output file '" + out_path + "'");
    os << text << "\n";
  }
}

void emit(const Json& j, const std::string& out_path) {
  emit(j.dump(2), out_path);
}

flagcob::TheorySpec parse_one_theory(const std::string& s) {
  const auto t = flagcob::TheorySpec::parse(s);
  if (!t) throw flagcob::UnsupportedTheory("unknown theory '" + s + "'");
  return *t;
}

std::vector<int> parse_int_list(const std::string& csv, const char* what) {
  std::vector<int> out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      size_t pos = 0;
      const int v = std::stoi(tok, &pos);
      if (pos != tok.size()) throw std::invalid_argument(tok);
      out.push_back(v);
    } catch (const std::exception&) {
      throw flagcob::Error(std::string("bad ") + what + " list '" + csv + "'");
    }
  }
  if (out.empty())
    throw flagcob::Error(std::string("empty ") + what + " list");
  return out;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "flagcob: exact Bott-Samelson and Schubert classes for full flag "
      "varieties over a choice of formal group law"};
  app.require_subcommand(1);
  int rc = 0;

  // ---- bs -----------------------------------------------------------
  auto* bs = app.add_subcommand("bs", "class of a reduced word");
  std::string bs_theory = "i2", bs_word, bs_format = "json", bs_top, bs_out;
  int bs_n = 0;
  bs->add_option("--theory", bs_theory, "ch | k | iN")->capture_default_str();
  bs->add_option("--n", bs_n, "rank of the flag variety")->required();
  bs->add_option("--word", bs_word, "comma separated letters, empty for the point");
  bs->add_option("--top-class", bs_top,
                 "JSON override for the class of a point");
  bs->add_option("--format", bs_format, "json | latex")
      ->check(CLI::IsMember({"json", "latex"}))
      ->capture_default_str();
  bs->add_option("--out", bs_out, "also write the output to this file");
  bs->callback([&] {
    const auto t = parse_one_theory(bs_theory);
    const flagcob::Word w = flagcob::parse_word(bs_word, bs_n);
    std::optional<flagcob::QPoly> top;
    if (!bs_top.empty()) {
      Json tj = Json::parse(bs_top, nullptr, true);
      flagcob::QPoly p = flagcob::qpoly_from_json(tj);
      if (p.n != bs_n)
        throw flagcob::RankMismatch("--top-class rank differs from --n");
      if (!(p.theory == t))
        throw flagcob::Mismatch("--top-class theory differs from --theory");
      top = std::move(p);
    }
    const flagcob::QPoly cls = flagcob::bs_class(w, t, top);
    if (bs_format == "latex") {
      emit(flagcob::qpoly_to_latex(cls), bs_out);
      return;
    }
    Json rep;
    rep["command"] = "bs";
    rep["theory"] = t.name();
    rep["n"] = bs_n;
    rep["word"] = w.str();
    rep["class"] = flagcob::qpoly_to_json(cls);
    const auto deg = flagcob::homogeneous_degree(cls);
    rep["graded_degree"] = deg ? Json(*deg) : Json(nullptr);
    rep["latex"] = flagcob::qpoly_to_latex(cls);
    emit(rep, bs_out);
  });

  // ---- stable -------------------------------------------------------
  auto* st = app.add_subcommand(
      "stable", "lift a class through the rank tower and verify stability");
  std::string st_theory = "i2", st_word, st_out;
  int st_n = 0, st_upto = -1;
  st->add_option("--theory", st_theory, "ch | k | iN")->capture_default_str();
  st->add_option("--n", st_n, "base rank")->required();
  st->add_option("--word", st_word, "word at the base rank");
  st->add_option("--upto", st_upto, "largest rank, default n+3");
  st->add_option("--out", st_out, "also write the output to this file");
  st->callback([&] {
    const auto t = parse_one_theory(st_theory);
    const flagcob::Word v = flagcob::parse_word(st_word, st_n);
    const int upto = st_upto < 0 ? st_n + 3 : st_upto;
    Json rep;
    rep["command"] = "stable";
    rep["theory"] = t.name();
    rep["n"] = st_n;
    rep["word"] = v.str();
    rep["upto"] = upto;
    try {
      const flagcob::StableFamily fam = flagcob::stable_bs_family(v, upto, t);
      rep["verified"] = fam.verified;
      Json members = Json::array();
      for (int N = st_n; N <= upto; ++N)
        members.push_back(Json{{"N", N},
                               {"class", flagcob::qpoly_to_json(fam.member(N))}});
      rep["members"] = std::move(members);
      emit(rep, st_out);
    } catch (const flagcob::StabilityViolation& e) {
      rep["verified"] = false;
      rep["error"] = e.what();
      emit(rep, st_out);
      rc = 1;
    }
  });

  // ---- dominant -----------------------------------------------------
  auto* dom = app.add_subcommand(
      "dominant",
      "closed form of a stable dominant class (i2) against the operator "
      "definition");
  std::string dom_part, dom_out, dom_theory = "i2";
  int dom_n = 0, dom_upto = -1;
  dom->add_option("--partition", dom_part, "comma separated parts")->required();
  dom->add_option("--n", dom_n, "base rank")->required();
  dom->add_option("--upto", dom_upto, "rank of the truncation, default n");
  dom->add_option("--theory", dom_theory, "must be i2")->capture_default_str();
  dom->add_option("--out", dom_out, "also write the output to this file");
  dom->callback([&] {
    const auto t = parse_one_theory(dom_theory);
    if (!(t == flagcob::TheorySpec::infinitesimal(2)))
      throw flagcob::UnsupportedTheory(
          "the dominant closed form is stated for i2 only");
    const flagcob::Partition lam = flagcob::parse_partition(dom_part);
    if (!flagcob::fits_staircase(lam, dom_n))
      throw flagcob::InvalidPartition(
          "partition does not fit inside the rank staircase");
    const int N = dom_upto < 0 ? dom_n : dom_upto;
    if (N < dom_n) throw flagcob::InvalidIndex("--upto must be >= --n");
    const flagcob::DominantReading rd = flagcob::dominant_reading(lam, dom_n);
    const flagcob::QPoly closed = flagcob::dominant_closed_form(lam, dom_n, N);
    const flagcob::Word full =
        flagcob::coxeter_chain(dom_n, N).concat(rd.reading_word.lifted(N));
    const flagcob::QPoly direct = flagcob::bs_class(full, t);
    const bool match = closed == direct;
    Json rep;
    rep["command"] = "dominant";
    rep["partition"] = flagcob::partition_to_json(lam);
    rep["n"] = dom_n;
    rep["upto"] = N;
    rep["reading_word"] = rd.reading_word.str();
    Json segs = Json::array();
    for (size_t s = 0; s < rd.segments.size(); ++s) {
      Json orb = Json::array();
      for (const auto& [a, b] : rd.orbits[s]) orb.push_back(Json::array({a, b}));
      segs.push_back(Json{{"word", rd.segments[s].str()}, {"orbits", orb}});
    }
    rep["segments"] = std::move(segs);
    rep["closed_form"] = flagcob::qpoly_to_json(closed);
    rep["direct"] = flagcob::qpoly_to_json(direct);
    rep["match"] = match;
    emit(rep, dom_out);
    if (!match) rc = 1;
  });

  // ---- decompose ----------------------------------------------------
  auto* dec = app.add_subcommand(
      "decompose", "u c v factorization of a reduced word above the Coxeter "
                   "element");
  std::string dec_word, dec_out;
  int dec_n = 0;
  bool dec_mirrored = false;
  dec->add_option("--n", dec_n, "rank")->required();
  dec->add_option("--word", dec_word, "comma separated letters")->required();
  dec->add_flag("--mirrored", dec_mirrored, "use c' = s_n ... s_1");
  dec->add_option("--out", dec_out, "also write the output to this file");
  dec->callback([&] {
    const flagcob::Word w = flagcob::parse_word(dec_word, dec_n);
    if (!flagcob::is_reduced(w))
      throw flagcob::NotReduced("decompose expects a reduced word");
    Json rep;
    rep["command"] = "decompose";
    rep["rank"] = dec_n;
    rep["word"] = w.str();
    rep["mirrored"] = dec_mirrored;
    const auto d = flagcob::decompose_ucv(w, dec_mirrored);
    rep["above_c"] = bool(d);
    if (d) {
      rep["u"] = flagcob::word_to_json(d->u);
      rep["v"] = flagcob::word_to_json(d->v);
      rep["normal_word"] = flagcob::word_to_json(d->normal_word);
      rep["r1"] = d->r1();
      rep["r2"] = d->r2();
      rep["rhs_word"] = flagcob::word_to_json(flagcob::cinv_shift_concat(*d));
    }
    emit(rep, dec_out);
  });

  // ---- check --------------------------------------------------------
  auto* check = app.add_subcommand("check", "exhaustive verification suites");
  check->require_subcommand(1);
  int jobs_flag = 0;

  auto* cre = check->add_subcommand(
      "restriction", "pullback stability of Coxeter extensions");
  int cre_max_n = 3;
  std::string cre_theory = "all", cre_out;
  cre->add_option("--max-n", cre_max_n)->capture_default_str();
  cre->add_option("--theory", cre_theory, "comma list or 'all'")
      ->capture_default_str();
  cre->add_option("--jobs", jobs_flag, "worker threads (or FLAGCOB_JOBS)");
  cre->add_option("--out", cre_out);
  cre->callback([&] {
    const auto s = flagcob::check_restriction(
        cre_max_n, flagcob::parse_theory_list(cre_theory),
        flagcob::resolve_jobs(jobs_flag));
    emit(s.report, cre_out);
    if (!s.pass()) rc = 1;
  });

  auto* cpr = check->add_subcommand(
      "product", "divisor product against the shifted decomposition");
  int cpr_n = 3;
  std::string cpr_theory = "ch,i2", cpr_out;
  bool cpr_mirrored = false;
  cpr->add_option("--n", cpr_n)->capture_default_str();
  cpr->add_option("--theory", cpr_theory, "subset of ch,i2")
      ->capture_default_str();
  cpr->add_flag("--mirrored", cpr_mirrored);
  cpr->add_option("--jobs", jobs_flag, "worker threads (or FLAGCOB_JOBS)");
  cpr->add_option("--out", cpr_out);
  cpr->callback([&] {
    const auto s = flagcob::check_product(
        cpr_n, flagcob::parse_theory_list(cpr_theory), cpr_mirrored,
        flagcob::resolve_jobs(jobs_flag));
    emit(s.report, cpr_out);
    if (!s.pass()) rc = 1;
  });

  auto* cfi = check->add_subcommand(
      "fiber", "point counts and the explicit fiber bijection over F_q");
  int cfi_n = 2, cfi_max_len = 6;
  std::string cfi_q = "2", cfi_out;
  cfi->add_option("--n", cfi_n, "words live at rank n+1")->capture_default_str();
  cfi->add_option("--q", cfi_q, "comma list of primes from 2,3,5")
      ->capture_default_str();
  cfi->add_option("--max-len", cfi_max_len)->capture_default_str();
  cfi->add_option("--jobs", jobs_flag, "worker threads (or FLAGCOB_JOBS)");
  cfi->add_option("--out", cfi_out);
  cfi->callback([&] {
    const auto s = flagcob::check_fiber(
        cfi_n, parse_int_list(cfi_q, "q"), cfi_max_len,
        flagcob::resolve_jobs(jobs_flag));
    emit(s.report, cfi_out);
    if (!s.pass()) rc = 1;
  });

  auto* cop = check->add_subcommand(
      "operators", "algebraic identities of the divided difference operators");
  int cop_max_n = 4;
  unsigned cop_seed = 20250901u;
  std::string cop_theory = "all", cop_out;
  cop->add_option("--max-n", cop_max_n)->capture_default_str();
  cop->add_option("--theory", cop_theory, "comma list or 'all'")
      ->capture_default_str();
  cop->add_option("--seed", cop_seed)->capture_default_str();
  cop->add_option("--jobs", jobs_flag, "worker threads (or FLAGCOB_JOBS)");
  cop->add_option("--out", cop_out);
  cop->callback([&] {
    const auto s = flagcob::check_operators(
        cop_max_n, flagcob::parse_theory_list(cop_theory), cop_seed,
        flagcob::resolve_jobs(jobs_flag));
    emit(s.report, cop_out);
    if (!s.pass()) rc = 1;
  });

  auto* cnf = check->add_subcommand(
      "normalform", "normal form against a linear-algebra ideal oracle");
  int cnf_max_n = 4, cnf_upto = 7;
  unsigned cnf_seed = 20250901u;
  std::string cnf_out;
  cnf->add_option("--max-n", cnf_max_n)->capture_default_str();
  cnf->add_option("--upto", cnf_upto, "largest rank for the congruence cases")
      ->capture_default_str();
  cnf->add_option("--seed", cnf_seed)->capture_default_str();
  cnf->add_option("--jobs", jobs_flag, "worker threads (or FLAGCOB_JOBS)");
  cnf->add_option("--out", cnf_out);
  cnf->callback([&] {
    const auto s = flagcob::check_normalform(cnf_max_n, cnf_upto, cnf_seed,
                                             flagcob::resolve_jobs(jobs_flag));
    emit(s.report, cnf_out);
    if (!s.pass()) rc = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const flagcob::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
