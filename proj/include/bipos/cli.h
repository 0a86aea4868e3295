// cli.h
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// The bipos command line: train, eval, analyze, sweep and lambda-search.

#ifndef BIPOS_CLI_H_
#define BIPOS_CLI_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace bipos {

inline constexpr const char* kToolVersion = "0.1.0";

// Every setting a command can read. Values come from --config (key=value
// lines) and from flags, with flags taking precedence.
struct RunConfig {
  std::string command;
  std::string config;
  std::string corpus;
  std::string test;
  std::string tagmap;
  std::string test_tagmap;
  std::size_t n_train = 0;  // 0 trains on the whole corpus
  std::string model;
  std::string kind = "bipos";
  int order = 2;
  double v1 = 0.0;
  double c2 = 1e-4;
  double d1 = 1e-6;
  std::string regime;
  std::string variable;
  std::string lambda;
  bool condition_tags = false;
  std::string specific_tags;
  bool fixed_vocab = false;
  std::string vocab;
  std::string sizes;
  std::string reports = "all";
  std::string prev_tag;
  std::string rare_tag;
  std::uint64_t seed = 1;
  std::string out = ".";
  std::string format = "csv";
  unsigned threads = 0;

  nlohmann::json ToJson() const;
};

// Runs the tool with `args` (excluding the program name). Returns the exit
// status; diagnostics go to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int CmdTrain(const RunConfig& config, std::ostream& out);
int CmdEval(const RunConfig& config, std::ostream& out);
int CmdAnalyze(const RunConfig& config, std::ostream& out);
int CmdSweep(const RunConfig& config, std::ostream& out);
int CmdLambdaSearch(const RunConfig& config, std::ostream& out);

}  // namespace bipos

#endif  // BIPOS_CLI_H_
