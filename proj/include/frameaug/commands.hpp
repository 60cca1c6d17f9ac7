// Copyright 2026 The frameaug Authors
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

// Command implementations behind the frameaug CLI. The binary in tools/
// only parses arguments; everything it does lives here so the pipeline
// can be driven and tested in-process.

#ifndef FRAMEAUG_COMMANDS_H_
#define FRAMEAUG_COMMANDS_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace frameaug {

// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
// Validation or metric failures surfaced because --strict was given.
inline constexpr int kExitStrictFailure = 1;
// Unreadable, unparseable, or inconsistent input files.
inline constexpr int kExitIoError = 2;

enum class DataFormat { kJsonl, kConll, kLuxml };

struct RunConfig {
  std::string lexicon_path;
  std::vector<std::string> corpus_paths;
  std::string out_dir;
  std::uint64_t seed = 0;
  std::size_t holdout_n = 1500;
  bool use_irregulars = true;
  std::string irregulars_path;  // optional user table, merged over builtin
  DataFormat format = DataFormat::kJsonl;
  bool luxml_byte_offsets = false;
  bool strict = false;
  unsigned jobs = 0;
  int verbosity = 0;

  // score / convert / diagnose inputs
  std::string gold_path;
  std::string pred_path;
  std::string provenance_path;
};

// Streams are injectable for tests; `out` carries data when a command
// prints any, `err` carries logs and diagnostics.
int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_stats(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_augment(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_split(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_score(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_convert(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_diagnose(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace frameaug

#endif  // FRAMEAUG_COMMANDS_H_
