#pragma once

// The four command-line operations, callable in-process. Each returns a
// RunReport and writes either human-readable text or a single JSON document
// to `out`; diagnostics go to `err`.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or data error.

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "seqproof/bfile.hpp"
#include "seqproof/cases.hpp"
#include "seqproof/errors.hpp"
#include "seqproof/fetch.hpp"
#include "seqproof/fixtures.hpp"
#include "seqproof/harmonic_expr.hpp"
#include "seqproof/recurrence.hpp"
#include "seqproof/series.hpp"
#include "seqproof/special.hpp"

namespace seqproof::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Order of the e.g.f. expansion compared against the closed form in `verify`.
inline constexpr std::int64_t kVerifyEgfOrder = 200;
/// Terms taken from a closed form when `guess --case` is used.
inline constexpr std::int64_t kGuessCaseTerms = 30;

enum class PassStatus { Pass, Fail, Skipped };

inline const char* status_name(PassStatus s) {
  switch (s) {
    case PassStatus::Pass: return "pass";
    case PassStatus::Fail: return "fail";
    case PassStatus::Skipped: return "skipped";
  }
  return "?";
}

struct PassResult {
  std::string name;
  PassStatus status = PassStatus::Skipped;
  std::string detail;
};

struct RunReport {
  std::string command;
  std::string case_id;
  std::vector<PassResult> passes;
  std::string error;  // usage/data error; forces exit code 2
  nlohmann::json data = nlohmann::json::object();
  int exit_code = kExitOk;

  /// exit 0 iff no error and every non-skipped pass passed.
  void finalize() {
    if (!error.empty()) {
      exit_code = kExitUsage;
      return;
    }
    exit_code = kExitOk;
    for (const auto& p : passes)
      if (p.status == PassStatus::Fail) exit_code = kExitFailure;
  }

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["command"] = command;
    j["case"] = case_id;
    j["passes"] = nlohmann::json::array();
    for (const auto& p : passes) j["passes"].push_back({{"name", p.name}, {"status", status_name(p.status)}, {"detail", p.detail}});
    if (!error.empty()) j["error"] = error;
    if (!data.empty()) j["data"] = data;
    j["exit_code"] = exit_code;
    return j;
  }
};

namespace detail {

/// Prints the pass table and summary (human mode) or the JSON document.
inline void emit(RunReport& report, bool json, std::ostream& out, std::ostream& err, const std::string& body = {}) {
  report.finalize();
  if (!report.error.empty()) err << "error: " << report.error << "\n";
  if (json) {
    out << report.to_json().dump(2) << "\n";
    return;
  }
  out << body;
  if (report.passes.empty()) return;
  std::size_t passed = 0, counted = 0;
  for (std::size_t i = 0; i < report.passes.size(); ++i) {
    const auto& p = report.passes[i];
    out << "  [" << (i + 1) << "] " << std::left << std::setw(13) << p.name << std::setw(8) << status_name(p.status)
        << p.detail << "\n";
    if (p.status != PassStatus::Skipped) {
      ++counted;
      if (p.status == PassStatus::Pass) ++passed;
    }
  }
  out << passed << "/" << counted << " passes";
  if (counted != report.passes.size()) out << " (" << report.passes.size() - counted << " skipped)";
  out << ", exit " << report.exit_code << "\n";
}

inline std::string seconds(std::chrono::nanoseconds d) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(3) << std::chrono::duration<double>(d).count() << " s";
  return s.str();
}

inline BFile read_bfile_path(const std::filesystem::path& p, const std::string& id) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw Error("cannot read b-file " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_bfile(ss.str(), id);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), p.string() + ": " + e.what());
  }
}

/// Built-in id, or a path to a case file.
inline CaseDefinition resolve_case(const std::string& ref) {
  if (auto c = find_builtin_case(ref)) return *c;
  if (std::filesystem::is_regular_file(ref)) return load_case_file(ref);
  if (valid_sequence_id(ref)) throw Error("no built-in case for " + ref + " (pass a case file instead)");
  throw Error("unknown case `" + ref + "`: neither a built-in id nor a readable case file");
}

}  // namespace detail

// ---------------------------------------------------------------- verify

struct VerifyOptions {
  std::string case_ref;
  std::optional<std::int64_t> from;
  std::optional<std::int64_t> to;
  std::optional<std::filesystem::path> bfile;
  bool fetch = false;
  FetchOptions fetch_options;
  bool json = false;
};

inline PassResult closed_form_pass(const HarmonicClosedForm& form, const SequenceTable& data) {
  PassResult p{"closed-form", PassStatus::Pass, {}};
  const std::int64_t lo = std::max(data.offset(), form.domain_min);
  const std::int64_t hi = data.last();
  if (lo > hi) {
    p.status = PassStatus::Fail;
    p.detail = "no data inside the closed-form domain n >= " + std::to_string(form.domain_min);
    return p;
  }
  std::vector<std::string> bad;
  for (std::int64_t n = lo; n <= hi; ++n) {
    BigInt expect = form(n);
    if (expect != data.at(n))
      bad.push_back("n = " + std::to_string(n) + " (closed form " + to_string(expect) + ", data " + to_string(data.at(n)) + ")");
  }
  std::ostringstream d;
  if (bad.empty()) {
    d << "closed form matches " << (hi - lo + 1) << " values at n = " << lo << ".." << hi;
  } else {
    p.status = PassStatus::Fail;
    d << bad.size() << " mismatch(es): ";
    for (std::size_t i = 0; i < bad.size() && i < 5; ++i) d << (i ? "; " : "") << bad[i];
  }
  if (data.offset() < form.domain_min)
  {
    d << "; n = " << data.offset();
    if (form.domain_min - 1 > data.offset()) d << ".." << (form.domain_min - 1);
    d << " outside the closed-form domain";
  }
  p.detail = d.str();
  return p;
}

inline PassResult egf_pass(const CaseDefinition& c, const HarmonicClosedForm& form, const SequenceTable& data,
                           std::int64_t order) {
  PassResult p{"egf", PassStatus::Pass, {}};
  if (!c.egf_name) {
    p.status = PassStatus::Skipped;
    p.detail = "no e.g.f. registered for " + c.sequence_id;
    return p;
  }
  const TruncatedSeries f = *build_named_egf(*c.egf_name, order);
  const SequenceTable coeffs = egf_coefficients(f);
  std::vector<std::int64_t> bad;
  for (std::int64_t n = form.domain_min; n <= order; ++n)
    if (coeffs.at(n) != form(n)) bad.push_back(n);
  // Indices below the closed-form domain are checked against the data instead.
  std::int64_t below = 0;
  for (std::int64_t n = data.offset(); n < form.domain_min && n <= order; ++n)
    if (data.contains(n) && n >= 0) {
      ++below;
      if (coeffs.at(n) != data.at(n)) bad.push_back(n);
    }
  std::ostringstream d;
  if (bad.empty()) {
    d << "n! [x^n] F equals the closed form for n = " << form.domain_min << ".." << order;
    if (below) d << " and the data at " << below << " index(es) below n = " << form.domain_min;
  } else {
    p.status = PassStatus::Fail;
    d << "e.g.f. disagrees at n =";
    for (std::size_t i = 0; i < bad.size() && i < 8; ++i) d << " " << bad[i];
  }
  p.detail = d.str();
  return p;
}

inline PassResult reduce_pass(const CaseDefinition& c, AlphaBeta* computed = nullptr) {
  PassResult p{"reduce", PassStatus::Pass, {}};
  const AlphaBeta ab = reduce_to_alpha_beta(c.reduction_expression(), c.anchor);
  if (computed) *computed = ab;
  const bool ok = ab == c.expected;
  p.status = ok ? PassStatus::Pass : PassStatus::Fail;
  p.detail = "alpha = " + ab.alpha.str() + ", beta = " + ab.beta.str() + " at anchor " + harmonic_symbol(c.anchor);
  if (!ok) p.detail += "; expected alpha = " + c.expected.alpha.str() + ", beta = " + c.expected.beta.str();
  return p;
}

inline RunReport run_verify(const VerifyOptions& opt, std::ostream& out, std::ostream& err) {
  RunReport report{"verify", opt.case_ref, {}, {}, nlohmann::json::object(), 0};
  try {
    const CaseDefinition c = detail::resolve_case(opt.case_ref);
    report.case_id = c.sequence_id;
    const HarmonicClosedForm form = c.closed_form();

    BFile bf;
    std::string source;
    if (opt.bfile) {
      bf = detail::read_bfile_path(*opt.bfile, c.sequence_id);
      source = opt.bfile->string();
    } else if (c.bfile) {
      bf = detail::read_bfile_path(*c.bfile, c.sequence_id);
      source = c.bfile->string();
    } else if (opt.fetch) {
      FetchOptions fo = opt.fetch_options;
      fo.allow_network = true;
      bf = fetch_bfile(c.sequence_id, fo);
      source = "fetched b-file";
    } else if (auto fx = fixtures::bundled_bfile(c.sequence_id)) {
      bf = *fx;
      source = "bundled fixture";
    } else {
      throw Error("no sequence data for " + c.sequence_id + " (use --bfile or --fetch)");
    }
    const SequenceTable data = bf.table();
    if (data.empty()) throw Error("b-file from " + source + " has no entries");

    const std::int64_t lo = opt.from.value_or(c.check_lo);
    const std::int64_t hi = opt.to.value_or(c.check_hi);
    const std::int64_t r = static_cast<std::int64_t>(c.recurrence.order());
    if (lo < c.recurrence.valid_from())
      throw Error("--from " + std::to_string(lo) + " is below the recurrence's from = " +
                  std::to_string(c.recurrence.valid_from()));
    if (lo <= hi && lo - r < form.domain_min)
      throw Error("sweep window starts at n = " + std::to_string(lo - r) + ", outside the closed-form domain");

    report.data["data_source"] = source;
    report.passes.push_back(closed_form_pass(form, data));
    report.passes.push_back(egf_pass(c, form, data, kVerifyEgfOrder));
    report.passes.push_back(reduce_pass(c));

    const SequenceTable values = lo <= hi ? form.table(lo - r, hi) : SequenceTable{};
    const ResidualReport rr = sweep(c.recurrence, values, lo, hi);
    PassResult s{"sweep", rr.ok() ? PassStatus::Pass : PassStatus::Fail, {}};
    std::ostringstream d;
    if (lo > hi) {
      d << "empty range [" << lo << ", " << hi << "]";
    } else if (rr.ok()) {
      d << "residual 0 at every n in [" << lo << ", " << hi << "] (" << detail::seconds(rr.elapsed) << ")";
    } else {
      d << rr.failures.size() << " nonzero residual(s), first at n = " << rr.failures.front().first << " ("
        << to_string(rr.failures.front().second) << ")";
    }
    // Below `from` the relation is not claimed; report it when data allows.
    const std::int64_t below = c.recurrence.valid_from() - 1;
    if (data.covers(below - r, below))
      d << "; informational: residual at n = " << below << " is " << to_string(evaluate_lhs(c.recurrence, data, below));
    s.detail = d.str();
    report.passes.push_back(std::move(s));
  } catch (const std::exception& e) {
    report.error = e.what();
  }

  std::string head = "verify " + report.case_id + "\n";
  detail::emit(report, opt.json, out, err, head);
  return report;
}

// ---------------------------------------------------------------- expand

struct ExpandOptions {
  std::string egf;
  std::int64_t terms = 0;
  std::optional<std::filesystem::path> bfile_out;
  bool json = false;
};

inline std::int64_t egf_offset(const std::string& name) { return name == "A045406" ? 2 : 0; }

inline RunReport run_expand(const ExpandOptions& opt, std::ostream& out, std::ostream& err) {
  RunReport report{"expand", opt.egf, {}, {}, nlohmann::json::object(), 0};
  std::string body;
  try {
    if (!has_named_egf(opt.egf)) throw Error("unknown e.g.f. `" + opt.egf + "`");
    if (opt.terms < 2) throw Error("--terms must be at least 2, got " + std::to_string(opt.terms));
    const SequenceTable all = egf_coefficients(*build_named_egf(opt.egf, opt.terms));
    const SequenceTable t = all.slice(egf_offset(opt.egf), opt.terms);
    const BFile bf = bfile_from_table(t, opt.egf);
    body = render_bfile(bf);
    if (opt.bfile_out) {
      seqproof::detail::write_atomically(*opt.bfile_out, body);
      report.data["bfile_out"] = opt.bfile_out->string();
    }
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [n, v] : bf.entries) rows.push_back({{"n", n}, {"value", to_string(v)}});
    report.data["values"] = rows;
    report.passes.push_back({"expand", PassStatus::Pass,
                             std::to_string(t.size()) + " terms at n = " + std::to_string(t.offset()) + ".." +
                                 std::to_string(t.last())});
  } catch (const std::exception& e) {
    report.error = e.what();
    body.clear();
  }
  detail::emit(report, opt.json, out, err, body);
  return report;
}

// ---------------------------------------------------------------- reduce

struct ReduceOptions {
  std::string case_ref;
  bool json = false;
};

inline RunReport run_reduce(const ReduceOptions& opt, std::ostream& out, std::ostream& err) {
  RunReport report{"reduce", opt.case_ref, {}, {}, nlohmann::json::object(), 0};
  std::ostringstream body;
  try {
    const CaseDefinition c = detail::resolve_case(opt.case_ref);
    report.case_id = c.sequence_id;
    const HarmonicAffineExpr e = c.reduction_expression();
    const HarmonicAffineExpr normal = normalize(e, c.anchor);
    AlphaBeta ab;
    report.passes.push_back(reduce_pass(c, &ab));
    report.data["expression"] = e.str();
    report.data["normalized"] = normal.str();
    report.data["anchor"] = harmonic_symbol(c.anchor);
    report.data["alpha"] = ab.alpha.str();
    report.data["beta"] = ab.beta.str();
    report.data["expected_alpha"] = c.expected.alpha.str();
    report.data["expected_beta"] = c.expected.beta.str();
    body << "reduce " << c.sequence_id << "\n"
         << "expression: " << e.str() << "\n"
         << "normalized onto " << harmonic_symbol(c.anchor) << ": " << normal.str() << "\n"
         << "alpha = " << ab.alpha.str() << ", beta = " << ab.beta.str() << "\n"
         << "expected alpha = " << c.expected.alpha.str() << ", beta = " << c.expected.beta.str() << "\n";
  } catch (const std::exception& e) {
    report.error = e.what();
  }
  detail::emit(report, opt.json, out, err, body.str());
  return report;
}

// ---------------------------------------------------------------- guess

struct GuessCliOptions {
  std::optional<std::filesystem::path> bfile;
  std::optional<std::string> case_ref;
  std::size_t order = 2;
  std::size_t degree = 2;
  std::int64_t case_terms = kGuessCaseTerms;
  std::optional<std::int64_t> verify_range;
  bool json = false;
};

inline RunReport run_guess(const GuessCliOptions& opt, std::ostream& out, std::ostream& err) {
  RunReport report{"guess", opt.case_ref.value_or(""), {}, {}, nlohmann::json::object(), 0};
  std::ostringstream body;
  try {
    if (opt.bfile.has_value() == opt.case_ref.has_value()) throw Error("pass exactly one of --bfile or --case");
    SequenceTable terms;
    std::optional<HarmonicClosedForm> form;
    if (opt.bfile) {
      BFile bf = detail::read_bfile_path(*opt.bfile, "");
      terms = bf.table();
      report.case_id = opt.bfile->filename().string();
    } else {
      const CaseDefinition c = detail::resolve_case(*opt.case_ref);
      report.case_id = c.sequence_id;
      form = c.closed_form();
      if (opt.case_terms < 1) throw Error("--terms must be positive");
      terms = form->table(form->domain_min, form->domain_min + opt.case_terms - 1);
    }

    const std::vector<PRecurrence> found = guess(terms, opt.order, opt.degree);
    nlohmann::json recs = nlohmann::json::array();
    for (const auto& rec : found) {
      recs.push_back(rec.str());
      body << rec.str() << "\n";
    }
    report.data["recurrences"] = recs;
    report.data["terms"] = terms.size();
    const std::string span = std::to_string(terms.size()) + " terms at n = " + std::to_string(terms.offset()) + ".." +
                             std::to_string(terms.last());
    if (found.empty()) {
      body << "no recurrence of order " << opt.order << " and degree " << opt.degree << " fits the " << span << "\n";
      report.passes.push_back({"guess", PassStatus::Pass, "none found over " + span});
    } else {
      report.passes.push_back({"guess", PassStatus::Pass,
                               std::to_string(found.size()) + " candidate(s), each re-verified on all " + span});
    }

    if (opt.verify_range) {
      PassResult v{"verify-range", PassStatus::Pass, {}};
      if (!form) {
        v.status = PassStatus::Skipped;
        v.detail = "no closed form for b-file input";
      } else {
        std::vector<std::string> bad;
        for (const auto& rec : found) {
          const std::int64_t lo = std::max(rec.valid_from(), form->domain_min + static_cast<std::int64_t>(rec.order()));
          const std::int64_t hi = *opt.verify_range;
          const SequenceTable vals =
              lo <= hi ? form->table(lo - static_cast<std::int64_t>(rec.order()), hi) : SequenceTable{};
          const ResidualReport rr = sweep(rec, vals, lo, hi);
          if (!rr.ok()) bad.push_back(rec.str() + " fails at n = " + std::to_string(rr.failures.front().first));
        }
        if (bad.empty()) {
          v.detail = "every candidate holds through n = " + std::to_string(*opt.verify_range);
        } else {
          v.status = PassStatus::Fail;
          v.detail = bad.front();
        }
      }
      report.passes.push_back(std::move(v));
    }
  } catch (const std::exception& e) {
    report.error = e.what();
    body.str("");
  }
  detail::emit(report, opt.json, out, err, body.str());
  return report;
}

}  // namespace seqproof::cli
