#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "hinv/classify.hpp"

namespace hinv {

struct RunConfig {
  std::string command;
  int64_t n = 0;
  std::string group;
  std::string tau;
  std::string lambda;
  std::string matrix;
  std::string spec_file;
  std::string mode = "anti";
  int64_t M = 0;  // 0: default ambient order
  int64_t cap = kDefaultClassifyCap;
  std::string format = "json";
  std::string out;
};

/// Exit codes.
inline constexpr int kExitTrue = 0;
inline constexpr int kExitFalse = 1;
inline constexpr int kExitInput = 2;

/// Parses one root literal z<name>:<order>:<exp>.
RootOfUnity parse_root_literal(const std::string& s);

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hinv
