#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace qcoh {

// Options shared by the CLI subcommands. Stored on disk as "key = value" lines; '#' starts a comment.
struct RunConfig {
  std::string system = "A2";
  std::string parabolic;  // 1-based list, e.g. "1,2"
  std::string order;      // 1-based list; empty selects the canonical order
  std::string format = "markdown";
  std::string out;        // empty writes to stdout
  int max_q = 3;
  std::size_t max_weyl = 2000;
  std::uint64_t seed = 20240917;
  std::string suites = "all";

  bool operator==(const RunConfig&) const = default;
};

// Unknown keys and malformed values throw InvalidInput naming the field.
RunConfig parse_config(std::string_view text, RunConfig base = {});
RunConfig load_config(const std::string& path, RunConfig base = {});
std::string emit_config(const RunConfig& c);

}  // namespace qcoh
