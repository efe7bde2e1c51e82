#pragma once

// Command-line front end: verify, solve, make, surface, replay, selftest.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pythsix/errors.hpp"

namespace pythsix::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kParse = 2,
  kHypothesis = 3,
  kDegree = 4,
  kIo = 5,
};

int exit_code_for(ErrorKind kind);

struct Config {
  std::string subcommand;
  std::vector<std::string> inputs;
  std::string out;  // empty: stdout
  bool approx = false;
  double tol = 1e-9;
  std::size_t nu = 64, nv = 64;
  std::uint64_t seed = 1;
  int count = 20;
  // surface
  std::string family = "E";
  std::string alpha, beta;  // comma-separated circle parameters
  std::string cyclide = "torus";
  std::string params;
  std::string csv, report;
};

int cmd_verify(const Config& c, std::ostream& out);
int cmd_solve(const Config& c, std::ostream& out);
int cmd_make(const Config& c, std::ostream& out);
int cmd_surface(const Config& c, std::ostream& out);
int cmd_replay(const Config& c, std::ostream& out);
int cmd_selftest(const Config& c, std::ostream& out);

/// Parses arguments, dispatches, and maps library errors to exit codes.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace pythsix::cli
