#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "seqproof/cli/commands.hpp"

int main(int argc, char** argv) {
  using namespace seqproof::cli;

  CLI::App app{"seqproof: exact verification of P-recursive recurrences for integer sequences"};
  app.require_subcommand(1);

  VerifyOptions verify;
  std::string verify_bfile;
  auto* v = app.add_subcommand("verify", "closed form, e.g.f., symbolic reduction and residual sweep");
  v->add_option("case", verify.case_ref, "built-in id (A045406, A001711) or case file")->required();
  auto* v_from = v->add_option("--from", "first n of the residual sweep");
  auto* v_to = v->add_option("--to", "last n of the residual sweep");
  v->add_option("--bfile", verify_bfile, "local b-file with sequence values");
  v->add_flag("--fetch", verify.fetch, "allow fetching the b-file from OEIS_BASE_URL");
  v->add_flag("--json", verify.json, "emit a single JSON report");

  ExpandOptions expand;
  auto* e = app.add_subcommand("expand", "expand a built-in e.g.f. into sequence terms");
  e->add_option("egf", expand.egf, "e.g.f. name (A045406)")->required();
  e->add_option("--terms", expand.terms, "largest index n to expand (>= 2)")->required();
  std::string bfile_out;
  e->add_option("--bfile-out", bfile_out, "also write the terms as a b-file");
  e->add_flag("--json", expand.json, "emit JSON");

  ReduceOptions reduce;
  auto* r = app.add_subcommand("reduce", "symbolic reduction of a recurrence's left-hand side");
  r->add_option("case", reduce.case_ref, "built-in id or case file")->required();
  r->add_flag("--json", reduce.json, "emit JSON");

  GuessCliOptions guess;
  std::string guess_bfile, guess_case;
  auto* g = app.add_subcommand("guess", "guess P-recursive recurrences from terms");
  auto* g_bfile = g->add_option("--bfile", guess_bfile, "b-file with consecutive terms");
  auto* g_case = g->add_option("--case", guess_case, "take terms from a case's closed form");
  g_bfile->excludes(g_case);
  g->add_option("--order", guess.order, "recurrence order")->default_val(2);
  g->add_option("--degree", guess.degree, "coefficient degree")->default_val(2);
  g->add_option("--terms", guess.case_terms, "number of closed-form terms with --case")->default_val(kGuessCaseTerms);
  auto* g_verify = g->add_option("--verify-range", "sweep candidates through this n via the closed form");
  g->add_flag("--json", guess.json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  if (*v) {
    if (*v_from) verify.from = v_from->as<std::int64_t>();
    if (*v_to) verify.to = v_to->as<std::int64_t>();
    if (!verify_bfile.empty()) verify.bfile = verify_bfile;
    return run_verify(verify, std::cout, std::cerr).exit_code;
  }
  if (*e) {
    if (!bfile_out.empty()) expand.bfile_out = bfile_out;
    return run_expand(expand, std::cout, std::cerr).exit_code;
  }
  if (*r) return run_reduce(reduce, std::cout, std::cerr).exit_code;
  if (*g) {
    if (*g_bfile) guess.bfile = guess_bfile;
    if (*g_case) guess.case_ref = guess_case;
    if (*g_verify) guess.verify_range = g_verify->as<std::int64_t>();
    return run_guess(guess, std::cout, std::cerr).exit_code;
  }
  return kExitUsage;
}
