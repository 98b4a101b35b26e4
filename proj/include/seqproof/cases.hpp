#pragma once

// Verification cases: a closed form, optional e.g.f., recurrence, the
// expected outcome of the symbolic reduction, and the sweep range.
//
// Case files hold one `key = value` per line (`#` comments, blank lines
// ignored):
//
//     sequence_id = A045406
//     closed_form = A045406          # built-in closed-form name
//     egf = A045406                  # optional built-in e.g.f. name
//     recurrence = p0 = 1; p1 = 2*n - 7; p2 = (n-4)^2; from = 5
//     anchor = -4
//     expected_alpha = 0
//     expected_beta = 0
//     check_range = 5 5000
//     bfile = path/to/b045406.txt    # optional, relative to the case file

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "seqproof/bfile.hpp"
#include "seqproof/cli/recurrence_spec.hpp"
#include "seqproof/errors.hpp"
#include "seqproof/harmonic_expr.hpp"
#include "seqproof/recurrence.hpp"
#include "seqproof/reduction.hpp"
#include "seqproof/series.hpp"
#include "seqproof/special.hpp"

namespace seqproof {

struct CaseDefinition {
  std::string sequence_id;
  std::string closed_form_name;
  std::optional<std::string> egf_name;
  PRecurrence recurrence;
  std::int64_t anchor = 0;
  AlphaBeta expected;
  std::int64_t check_lo = 0;
  std::int64_t check_hi = 0;
  std::optional<std::filesystem::path> bfile;

  HarmonicClosedForm closed_form() const {
    auto f = find_closed_form(closed_form_name);
    if (!f) throw DomainError("unknown closed form `" + closed_form_name + "`");
    return *f;
  }

  /// Post-factoring h-expression of the recurrence's left-hand side.
  HarmonicAffineExpr reduction_expression() const { return derive_h_expression(closed_form(), recurrence); }
};

inline std::vector<CaseDefinition> builtin_cases() {
  const Polynomial n = Polynomial::n();
  return {
      CaseDefinition{"A045406",
                     "A045406",
                     "A045406",
                     PRecurrence({Polynomial(1), Polynomial(2) * n - Polynomial(7),
                                  Polynomial::linear(Rational(-4)).pow(2)},
                                 5),
                     -4,
                     {RationalFunction(0), RationalFunction(0)},
                     5,
                     5000,
                     std::nullopt},
      CaseDefinition{"A001711",
                     "A001711",
                     std::nullopt,
                     PRecurrence({Polynomial(1), -(Polynomial(2) * n + Polynomial(5)),
                                  Polynomial::linear(Rational(2)).pow(2)},
                                 2),
                     2,
                     {RationalFunction(0), RationalFunction(0)},
                     2,
                     2000,
                     std::nullopt},
  };
}

inline std::optional<CaseDefinition> find_builtin_case(const std::string& id) {
  for (auto& c : builtin_cases())
    if (c.sequence_id == id) return c;
  return std::nullopt;
}

inline CaseDefinition parse_case_file(std::string_view text, const std::filesystem::path& base_dir = {}) {
  std::map<std::string, std::pair<std::string, std::size_t>> kv;
  std::size_t line_no = 0, pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    line = cli::detail::trim(line);
    if (line.empty() || line.front() == '#') continue;
    if (auto hash = line.find(" #"); hash != std::string_view::npos) line = cli::detail::trim(line.substr(0, hash));
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ParseError(line_no, "expected `key = value`");
    std::string key(cli::detail::trim(line.substr(0, eq)));
    std::string value(cli::detail::trim(line.substr(eq + 1)));
    if (!kv.emplace(key, std::make_pair(value, line_no)).second) throw ParseError(line_no, "duplicate key `" + key + "`");
  }

  auto required = [&](const std::string& key) -> std::pair<std::string, std::size_t> {
    auto it = kv.find(key);
    if (it == kv.end()) throw ParseError(0, "case file is missing `" + key + "`");
    return it->second;
  };
  auto with_line = [](std::size_t line, auto&& fn) {
    try {
      return fn();
    } catch (const ParseError& e) {
      throw ParseError(line, e.what());
    }
  };
  auto integer = [](const std::string& s, std::size_t line) {
    auto v = parse_bigint(s);
    if (!v || !v->fits_slong_p()) throw ParseError(line, "expected an integer, got `" + s + "`");
    return static_cast<std::int64_t>(v->get_si());
  };

  for (const auto& [key, _] : kv) {
    static const char* known[] = {"sequence_id", "closed_form", "egf", "recurrence", "anchor",
                                  "expected_alpha", "expected_beta", "check_range", "bfile"};
    if (std::find(std::begin(known), std::end(known), key) == std::end(known))
      throw ParseError(kv.at(key).second, "unknown key `" + key + "`");
  }

  auto [id, id_line] = required("sequence_id");
  if (!valid_sequence_id(id)) throw ParseError(id_line, "sequence_id must be A followed by six digits");
  auto [cf, cf_line] = required("closed_form");
  if (!find_closed_form(cf)) throw ParseError(cf_line, "unknown closed form `" + cf + "`");
  std::optional<std::string> egf;
  if (auto it = kv.find("egf"); it != kv.end()) {
    if (!has_named_egf(it->second.first)) throw ParseError(it->second.second, "unknown e.g.f. `" + it->second.first + "`");
    egf = it->second.first;
  }
  auto [rec_text, rec_line] = required("recurrence");
  PRecurrence rec = with_line(rec_line, [&] { return cli::parse_recurrence_spec(rec_text); });
  auto [anchor_text, anchor_line] = required("anchor");
  auto [alpha_text, alpha_line] = required("expected_alpha");
  auto [beta_text, beta_line] = required("expected_beta");
  AlphaBeta expected{with_line(alpha_line, [&] { return cli::parse_rational_function(alpha_text); }),
                     with_line(beta_line, [&] { return cli::parse_rational_function(beta_text); })};
  auto [range_text, range_line] = required("check_range");
  std::istringstream rs(range_text);
  std::string lo_s, hi_s, extra;
  if (!(rs >> lo_s >> hi_s) || (rs >> extra)) throw ParseError(range_line, "check_range needs `<lo> <hi>`");

  CaseDefinition c{id, cf, egf, rec, integer(anchor_text, anchor_line), expected,
                   integer(lo_s, range_line), integer(hi_s, range_line), std::nullopt};
  if (c.check_lo < rec.valid_from())
    throw ParseError(range_line, "check_range starts below the recurrence's `from`");
  if (auto it = kv.find("bfile"); it != kv.end()) {
    std::filesystem::path p(it->second.first);
    c.bfile = p.is_relative() && !base_dir.empty() ? base_dir / p : p;
  }
  return c;
}

inline CaseDefinition load_case_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read case file " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_case_file(ss.str(), path.parent_path());
}

inline std::string render_case_file(const CaseDefinition& c) {
  std::string s = "sequence_id = " + c.sequence_id + "\nclosed_form = " + c.closed_form_name + "\n";
  if (c.egf_name) s += "egf = " + *c.egf_name + "\n";
  s += "recurrence = " + c.recurrence.str() + "\n";
  s += "anchor = " + std::to_string(c.anchor) + "\n";
  s += "expected_alpha = " + (c.expected.alpha.is_zero() ? std::string("0") : c.expected.alpha.str()) + "\n";
  s += "expected_beta = " + (c.expected.beta.is_zero() ? std::string("0") : c.expected.beta.str()) + "\n";
  s += "check_range = " + std::to_string(c.check_lo) + " " + std::to_string(c.check_hi) + "\n";
  if (c.bfile) s += "bfile = " + c.bfile->string() + "\n";
  return s;
}

}  // namespace seqproof
