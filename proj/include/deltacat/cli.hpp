#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "deltacat/error.hpp"

namespace deltacat::cli {

/// Human-readable command report. Exit codes are the machine contract:
/// 0 all checks pass, 1 a law or verification failed, 2 malformed input.
struct Report {
  std::string status;  // "pass" | "fail" | "malformed"
  std::vector<LawCheck> checks;
  std::map<std::string, std::string> facts;
  std::vector<std::string> artifacts_written;
  std::optional<Error> error;

  int exit_code() const;
};

std::string render_text(const Report& report, bool all_witnesses);
std::string render_json(const Report& report);

/// Entry point shared by the binary and the tests. Arguments exclude the
/// program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace deltacat::cli
