#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace rll::cli {

/// Everything a subcommand needs; filled from the command line and
/// serializable so runs can be recorded and replayed.
struct RunConfig {
  std::string subcommand;
  int m = 3;
  std::string m_spec;  // dims: "3", "3:10" or "3,5,8"
  std::string p = "1/2";
  std::string p_spec;  // dims: "0.5", "0.1:0.9:0.1" or "0.3,0.4"
  std::uint64_t n = 0;
  std::uint64_t depth = 0;
  std::uint64_t kmax = 0;
  std::uint64_t k = 0;
  std::optional<std::uint64_t> seed;
  std::uint64_t stream = 0;
  std::string mode;  // "", "exact" or "float"; empty selects the subcommand default
  double tol = 1e-12;
  std::string format;  // "", "json", "csv" or "text"
  std::string out;
  std::string word;
  std::string periodic;
  std::string variant = "strict";
  std::uint64_t stride = 1;
  std::uint64_t tail = 0;
  bool quick = false;
  bool count_only = false;
  bool occurrences = false;
  bool series = false;
  unsigned threads = 0;  // 0: RLLSHIFT_THREADS or hardware concurrency
};

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const RunConfig& config);
RunConfig config_from_json(const nlohmann::json& j);

}  // namespace rll::cli
