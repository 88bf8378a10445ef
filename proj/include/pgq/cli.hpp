#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pgq/algebra.hpp"

namespace pgq {

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Raised for --help; carries the text to print.
struct HelpRequested {
  std::string text;
};

enum class Command {
  table,
  derivations,
  local,
  two_local,
  biderivations,
  commuting,
  centroid,
  quasi_centroid,
  verify_all,
};

struct RunConfig {
  Command command = Command::verify_all;
  std::optional<Params> params;                // exactly one of params / algebra_path is set
  std::optional<std::string> algebra_path;
  bool json_output = false;
  std::uint64_t seed = 0;
  std::uint32_t trials = 100;
};

// Throws UsageError on malformed rationals, unknown flags, missing command or
// conflicting inputs; throws HelpRequested for --help.
RunConfig parse_args(const std::vector<std::string>& args);

// Exit status contract: 0 all applicable checks pass, 1 a check failed,
// 2 usage or input error.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace pgq
