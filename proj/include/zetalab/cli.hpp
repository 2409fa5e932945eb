#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace zetalab::cli {

enum ExitCode : int {
  ok = 0,
  failure = 1,
  invalid = 2,
  not_realizable = 3,
  radius_exhausted = 4,
};

/// Runs one command; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Named entries of the example corpus, e.g. "twopair", "pq-p2-q5", "fermat-d4".
const std::vector<std::string>& fixture_names();

}  // namespace zetalab::cli
