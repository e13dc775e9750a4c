// Acceptance gate: one pass/fail line per criterion, exit 1 on any failure.
//
// Usage: flagcob_acceptance <path-to-flagcob-cli>
//
// Criteria 1-3 exercise the installed CLI end to end (spawn, JSON output,
// exact class equality); the rest call the library directly.  Criteria with
// a time budget fail when the budget is exceeded even if the values match.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "flagcob/checks.hpp"
#include "flagcob/ddiff.hpp"
#include "flagcob/oracles.hpp"

using namespace flagcob;

namespace {

int acceptance_jobs() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (hw > 8) hw = 8;
  return static_cast<int>(hw);
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// Run `<cli> bs --theory i2 --n <n> --word <word> --out <tmp>` and parse the
// computed class back out of the JSON report.
QPoly cli_bs_class(const std::string& cli, int n, const std::string& word,
                   std::string& note) {
  const auto tmp = std::filesystem::temp_directory_path() /
                   ("flagcob_accept_" + std::to_string(n) + "_" + word + ".json");
  std::ostringstream cmd;
  cmd << '"' << cli << '"' << " bs --theory i2 --n " << n << " --word " << word
      << " --out \"" << tmp.string() << "\" > /dev/null";
  const int rc = std::system(cmd.str().c_str());
  if (rc != 0) {
    note = "CLI exited with status " + std::to_string(rc);
    throw Error(note);
  }
  std::ifstream in(tmp);
  if (!in) {
    note = "CLI produced no output file";
    throw Error(note);
  }
  Json j = Json::parse(in);
  std::filesystem::remove(tmp);
  return qpoly_from_json(j.at("class"));
}

// x^lead * (1 + gamma * (sum of e_2 over the given index ranges)), reduced.
QPoly i2_closed_form(int n, const std::vector<int>& lead,
                     const std::vector<std::pair<int, int>>& ranges) {
  const auto t = TheorySpec::infinitesimal(2);
  const CoeffElem gamma = CoeffElem::gen_power(t, 1);
  QPoly corr = qp_const(n, t, 0);
  for (const auto& [lo, hi] : ranges)
    corr = add(corr, elem_sym(2, lo, hi, n, t));
  const QPoly factor = add(qp_const(n, t, 1), scale(corr, gamma));
  return normal_form(mul(qp_monomial(n, t, lead), factor));
}

bool crit_cli_example(const std::string& cli, int n, const std::string& word,
                      const std::vector<int>& lead,
                      const std::vector<std::pair<int, int>>& ranges,
                      std::string& note) {
  const QPoly got = cli_bs_class(cli, n, word, note);
  const QPoly expect = i2_closed_form(n, lead, ranges);
  if (got == expect) return true;
  note = "CLI class differs from the closed form: got " + qpoly_to_json(got).dump();
  return false;
}

bool crit4_truncation(std::string& note) {
  const auto t = TheorySpec::infinitesimal(2);
  for (int n : {2, 3})
    for (int N = n; N <= n + 4; ++N) {
      const QPoly direct = bs_class(coxeter_chain(n, N), t);
      if (!(direct == chain_truncation(n, N))) {
        note = "mismatch at n=" + std::to_string(n) + ", N=" + std::to_string(N);
        return false;
      }
    }
  return true;
}

bool crit5_dominant(std::string& note) {
  const auto t = TheorySpec::infinitesimal(2);
  for (int n = 2; n <= 5; ++n) {
    std::vector<std::vector<int>> stack = {{}};
    while (!stack.empty()) {
      std::vector<int> parts = stack.back();
      stack.pop_back();
      const Partition lam(parts);
      if (!fits_staircase(lam, n)) continue;
      const auto rd = dominant_reading(lam, n);
      for (int N = n; N <= n + 2; ++N) {
        const Word w = coxeter_chain(n, N).concat(rd.reading_word.lifted(N));
        if (!(dominant_closed_form(lam, n, N) == bs_class(w, t))) {
          std::string ls;
          for (int part : lam.parts) ls += (ls.empty() ? "" : ",") + std::to_string(part);
          note = "mismatch at lambda=(" + ls + "), n=" + std::to_string(n) +
                 ", N=" + std::to_string(N);
          return false;
        }
      }
      const int next = parts.empty() ? n - 1 : parts.back();
      for (int p = 1; p <= next; ++p) {
        auto np = parts;
        np.push_back(p);
        if (static_cast<int>(np.size()) <= n - 1) stack.push_back(np);
      }
    }
  }
  return true;
}

bool run_suite(const SuiteResult& s, std::string& note) {
  if (s.pass()) return true;
  note = s.name + ": " + std::to_string(s.failures) + " of " +
         std::to_string(s.total) + " cases failed";
  return false;
}

bool crit9_oracles(std::string& note) {
  const auto add_t = TheorySpec::additive();
  for (int n : {3, 4}) {
    const Permutation w0 = Permutation::longest(n);
    for (const auto& p : all_permutations(n)) {
      const Permutation u = compose(w0, p);
      const QPoly oracle = normal_form(oracles::schubert_polynomial(u));
      for (const Word& v : reduced_words(p))
        if (!(bs_class(v, add_t) == oracle)) {
          note = "additive mismatch on word " + v.str();
          return false;
        }
    }
  }
  const auto mul_t = TheorySpec::multiplicative();
  const Permutation w0 = Permutation::longest(3);
  for (const auto& p : all_permutations(3)) {
    const Permutation u = compose(w0, p);
    const QPoly oracle = normal_form(oracles::grothendieck_polynomial(u));
    for (const Word& v : reduced_words(p))
      if (!(bs_class(v, mul_t) == oracle)) {
        note = "multiplicative mismatch on word " + v.str();
        return false;
      }
  }
  return true;
}

struct Criterion {
  std::string desc;
  double budget_s; // 0 = no budget
  std::function<bool(std::string&)> run;
};

} // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: " << argv[0] << " <path-to-flagcob-cli>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const int jobs = acceptance_jobs();
  const unsigned seed = 20250901u;

  const std::vector<Criterion> criteria = {
      {"CLI class of word (2,3,4,3) at n=5 equals its closed form", 1.0,
       [&](std::string& note) {
         return crit_cli_example(cli, 5, "2,3,4,3", {4, 2, 0, 0, 0},
                                 {{2, 5}, {3, 4}}, note);
       }},
      {"CLI class of word (1,3,4,3) at n=5 equals its closed form", 0.0,
       [&](std::string& note) {
         return crit_cli_example(cli, 5, "1,3,4,3", {3, 3, 0, 0, 0},
                                 {{1, 2}, {3, 5}, {3, 4}}, note);
       }},
      {"CLI class of word (1,3,5) at n=6 equals its closed form", 0.0,
       [&](std::string& note) {
         return crit_cli_example(cli, 6, "1,3,5", {4, 4, 2, 2, 0, 0},
                                 {{1, 2}, {3, 4}, {5, 6}}, note);
       }},
      {"Coxeter-chain classes equal the stable truncation (n in {2,3}, N up "
       "to n+4)",
       10.0, crit4_truncation},
      {"dominant closed form equals the operator computation (lambda in the "
       "staircase, n <= 5, N <= n+2)",
       0.0, crit5_dominant},
      {"restriction stability for every reduced word at ranks 2..4 in ch, k, "
       "i2",
       60.0,
       [&](std::string& note) {
         return run_suite(
             check_restriction(4, parse_theory_list("all"), jobs), note);
       }},
      {"divisor product formula for every reduced word at rank 4 in ch and "
       "i2",
       0.0,
       [&](std::string& note) {
         return run_suite(
             check_product(4, parse_theory_list("ch,i2"), false, jobs), note);
       }},
      {"fiber bijections over F_2 and F_3 for every reduced word of length "
       "<= 6 at ranks 2..4",
       120.0,
       [&](std::string& note) {
         for (int n : {1, 2, 3}) {
           if (!run_suite(check_fiber(n, {2, 3}, 6, jobs), note)) return false;
         }
         return true;
       }},
      {"classes match the independent Schubert and Grothendieck oracles", 0.0,
       crit9_oracles},
      {"operator-identity, normal-form, and congruence suites", 0.0,
       [&](std::string& note) {
         return run_suite(check_operators(4, parse_theory_list("all"), seed,
                                          jobs),
                          note) &&
                run_suite(check_normalform(4, 7, seed, jobs), note);
       }},
  };

  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const auto& c = criteria[i];
    std::string note;
    bool ok = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      ok = c.run(note);
    } catch (const std::exception& e) {
      ok = false;
      note = std::string("exception: ") + e.what();
    }
    const double dt = seconds_since(t0);
    if (ok && c.budget_s > 0.0 && dt > c.budget_s) {
      ok = false;
      note = "time budget exceeded: " + std::to_string(dt) + " s > " +
             std::to_string(c.budget_s) + " s";
    }
    char line[512];
    std::snprintf(line, sizeof(line), "[%s] criterion %2zu: %s (%.2f s)%s%s",
                  ok ? "PASS" : "FAIL", i + 1, c.desc.c_str(), dt,
                  note.empty() ? "" : " -- ", note.c_str());
    std::cout << line << std::endl;
    if (!ok) ++failed;
  }
  if (failed != 0) {
    std::cout << failed << " criterion(s) failed" << std::endl;
    return 1;
  }
  std::cout << "all 10 criteria passed" << std::endl;
  return 0;
}
