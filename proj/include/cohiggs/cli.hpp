#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

namespace cohiggs {

// One fully resolved invocation of the command-line tool.
struct RunConfig {
  std::string command;  // validate | spectral | cohomology | stability |
                        // bfield-check | nahm | fixtures
  std::string input;         // --in: path of the JSON input
  std::string theta;         // --theta: potential path for bfield-check
  std::string output;        // --out: report path, empty writes to stdout
  std::string trajectory;    // --trajectory: JSONL dump path for nahm
  std::string dir = "fixtures";  // --dir: target directory for fixtures
  double t_end = 1.0;        // --t
  double dt = 1e-3;          // --dt
  int samples = 5;           // --samples
  int stride = 100;          // --stride
  std::uint64_t seed = 1;    // --seed
  int height = 3;            // --height
};

// Exit codes: 0 success, 1 unusable input (bad arguments or unparseable
// files), 2 validation or identity failure, 3 numeric blow-up.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

// Parses argv into a RunConfig and dispatches to run.
int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cohiggs
