#pragma once

// Opt-in b-file retrieval with a raw-bytes disk cache.
//
//   GET <base-url>/<Axxxxxx>/b<xxxxxx>.txt
//
// The base URL comes from OEIS_BASE_URL (default https://oeis.org) and the
// cache directory from SEQPROOF_CACHE_DIR, else $XDG_CACHE_HOME/seqproof,
// else ~/.cache/seqproof. Cache files are written to a temporary name and
// renamed into place, so readers never see a partial file.

#include <httplib.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>

#include "seqproof/bfile.hpp"
#include "seqproof/errors.hpp"

namespace seqproof {

inline constexpr const char* kDefaultOeisBaseUrl = "https://oeis.org";
inline constexpr const char* kUserAgent = "seqproof/0.1 (exact P-recurrence verifier; b-file fetch)";

class FetchError : public Error {
 public:
  enum class Kind { BadId, NetworkDisabled, Network, Http, Parse, Cache };
  FetchError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

struct FetchOptions {
  bool allow_network = false;
  std::optional<std::string> base_url;               // overrides OEIS_BASE_URL
  std::optional<std::filesystem::path> cache_dir;    // overrides the env lookup
  int timeout_seconds = 30;
};

inline std::string oeis_base_url(const FetchOptions& opts = {}) {
  if (opts.base_url) return *opts.base_url;
  if (const char* env = std::getenv("OEIS_BASE_URL"); env && *env) return env;
  return kDefaultOeisBaseUrl;
}

inline std::filesystem::path cache_directory(const FetchOptions& opts = {}) {
  if (opts.cache_dir) return *opts.cache_dir;
  if (const char* env = std::getenv("SEQPROOF_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "seqproof";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "seqproof";
  return std::filesystem::temp_directory_path() / "seqproof-cache";
}

/// `/A045406/b045406.txt`
inline std::string bfile_url_path(const std::string& id) { return "/" + id + "/b" + id.substr(1) + ".txt"; }

namespace detail {

inline void write_atomically(const std::filesystem::path& target, const std::string& bytes) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(target.parent_path(), ec);
  if (ec) throw FetchError(FetchError::Kind::Cache, "cannot create cache directory: " + ec.message());
  std::random_device rd;
  const fs::path tmp = target.parent_path() / ("." + target.filename().string() + "." + std::to_string(rd()) + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) throw FetchError(FetchError::Kind::Cache, "cannot write " + tmp.string());
  }
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw FetchError(FetchError::Kind::Cache, "cannot move cache file into place: " + target.string());
  }
}

inline std::optional<std::string> read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace detail

/// Cached b-file path for an id.
inline std::filesystem::path cached_bfile_path(const std::string& id, const FetchOptions& opts = {}) {
  return cache_directory(opts) / ("b" + id.substr(1) + ".txt");
}

inline BFile fetch_bfile(const std::string& id, const FetchOptions& opts = {}) {
  if (!valid_sequence_id(id)) throw FetchError(FetchError::Kind::BadId, "not an OEIS id (A + 6 digits): `" + id + "`");

  const auto cached = cached_bfile_path(id, opts);
  std::string bytes;
  if (auto hit = detail::read_file(cached)) {
    bytes = std::move(*hit);
  } else {
    if (!opts.allow_network)
      throw FetchError(FetchError::Kind::NetworkDisabled, "b-file for " + id + " is not cached and network fetch is disabled");

    const std::string base = oeis_base_url(opts);
    const auto scheme_end = base.find("://");
    const auto path_start = base.find('/', scheme_end == std::string::npos ? 0 : scheme_end + 3);
    const std::string host = base.substr(0, path_start);
    std::string prefix = path_start == std::string::npos ? "" : base.substr(path_start);
    while (!prefix.empty() && prefix.back() == '/') prefix.pop_back();

    httplib::Client client(host);
    client.set_connection_timeout(opts.timeout_seconds);
    client.set_read_timeout(opts.timeout_seconds);
    client.set_follow_location(true);
    auto res = client.Get(prefix + bfile_url_path(id), {{"User-Agent", kUserAgent}});
    if (!res)
      throw FetchError(FetchError::Kind::Network, "request to " + host + " failed: " + httplib::to_string(res.error()));
    if (res->status < 200 || res->status >= 300)
      throw FetchError(FetchError::Kind::Http, "HTTP " + std::to_string(res->status) + " for " + id);
    bytes = std::move(res->body);
  }

  BFile parsed;
  try {
    parsed = parse_bfile(bytes, id);
  } catch (const ParseError& e) {
    throw FetchError(FetchError::Kind::Parse, "b-file for " + id + ": " + e.what());
  }
  if (!std::filesystem::exists(cached)) detail::write_atomically(cached, bytes);
  return parsed;
}

}  // namespace seqproof
