#pragma once

// OEIS b-file text: one `<index> <value>` pair per line, `#` comment lines
// and blank lines ignored. Indices must be strictly increasing and
// contiguous. Rendering uses `\n`, a single space, and no trailing blank line.

#include <cctype>
#include <cstdint>
#include <regex>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "seqproof/errors.hpp"
#include "seqproof/rational.hpp"
#include "seqproof/sequence.hpp"

namespace seqproof {

inline bool valid_sequence_id(std::string_view id) {
  static const std::regex pattern("A[0-9]{6}");
  return std::regex_match(id.begin(), id.end(), pattern);
}

struct BFile {
  std::string sequence_id;
  std::vector<std::pair<std::int64_t, BigInt>> entries;

  SequenceTable table() const {
    std::vector<BigInt> vals;
    vals.reserve(entries.size());
    for (const auto& [n, v] : entries) vals.push_back(v);
    return {entries.empty() ? 0 : entries.front().first, std::move(vals), Provenance::BFile};
  }

  friend bool operator==(const BFile&, const BFile&) = default;
};

inline BFile parse_bfile(std::string_view text, std::string sequence_id = {}) {
  BFile out{std::move(sequence_id), {}};
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

    std::size_t b = 0;
    while (b < line.size() && std::isspace(static_cast<unsigned char>(line[b]))) ++b;
    if (b == line.size() || line[b] == '#') continue;

    std::vector<std::string_view> fields;
    std::size_t i = b;
    while (i < line.size()) {
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      fields.push_back(line.substr(i, j - i));
      while (j < line.size() && std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      i = j;
    }
    if (fields.size() != 2) throw ParseError(line_no, "expected `<index> <value>`, got `" + std::string(line) + "`");
    auto index = parse_bigint(fields[0]);
    auto value = parse_bigint(fields[1]);
    if (!index || !index->fits_slong_p()) throw ParseError(line_no, "bad index `" + std::string(fields[0]) + "`");
    if (!value) throw ParseError(line_no, "bad value `" + std::string(fields[1]) + "`");
    const std::int64_t n = index->get_si();
    if (!out.entries.empty()) {
      const std::int64_t prev = out.entries.back().first;
      if (n == prev) throw ParseError(line_no, "duplicate index " + std::to_string(n));
      if (n < prev) throw ParseError(line_no, "index " + std::to_string(n) + " is not increasing");
      if (n != prev + 1)
        throw ParseError(line_no, "gap: index " + std::to_string(n) + " follows " + std::to_string(prev));
    }
    out.entries.emplace_back(n, std::move(*value));
  }
  return out;
}

inline std::string render_bfile(const BFile& f) {
  std::string out;
  for (const auto& [n, v] : f.entries) out += std::to_string(n) + " " + to_string(v) + "\n";
  return out;
}

inline BFile bfile_from_table(const SequenceTable& t, std::string sequence_id = {}) {
  BFile f{std::move(sequence_id), {}};
  for (std::int64_t n = t.offset(); n < t.end(); ++n) f.entries.emplace_back(n, t.at(n));
  return f;
}

}  // namespace seqproof
