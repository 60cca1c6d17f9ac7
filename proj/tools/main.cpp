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

#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "frameaug/commands.hpp"

namespace {

using frameaug::DataFormat;
using frameaug::RunConfig;

int dispatch(const std::string& name, const RunConfig& config) {
  if (name == "validate") return frameaug::cmd_validate(config, std::cout, std::cerr);
  if (name == "stats") return frameaug::cmd_stats(config, std::cout, std::cerr);
  if (name == "augment") return frameaug::cmd_augment(config, std::cout, std::cerr);
  if (name == "split") return frameaug::cmd_split(config, std::cout, std::cerr);
  if (name == "score") return frameaug::cmd_score(config, std::cout, std::cerr);
  if (name == "convert") return frameaug::cmd_convert(config, std::cout, std::cerr);
  if (name == "diagnose") return frameaug::cmd_diagnose(config, std::cout, std::cerr);
  std::cerr << "error: unknown command " << name << "\n";
  return frameaug::kExitIoError;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"frameaug: transfer frame-semantic annotation between sister "
               "lexical units, build leakage-safe splits, and score the result"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig config;
  bool no_irregulars = false;
  std::string format = "jsonl";

  auto add_common_options = [&](CLI::App* cmd) {
    cmd->add_option("--lexicon", config.lexicon_path, "lexicon.jsonl path");
    cmd->add_option("--corpus", config.corpus_paths, "corpus input path (repeatable)");
    cmd->add_option("--out", config.out_dir, "output directory");
    cmd->add_option("--seed", config.seed, "PRNG seed for sampling")
        ->default_val(std::uint64_t{0});
    cmd->add_option("--holdout", config.holdout_n, "number of LUs to hold out in split")
        ->default_val(std::size_t{1500});
    cmd->add_flag("--no-irregulars", no_irregulars,
                  "inflect with regular suffix rules only");
    cmd->add_option("--irregulars", config.irregulars_path,
                    "extra irregular-forms JSONL, merged over the builtin table");
    cmd->add_option("--format", format, "output format: jsonl, conll, or luxml")
        ->check(CLI::IsMember({"jsonl", "conll", "luxml"}));
    cmd->add_flag("--byte-offsets", config.luxml_byte_offsets,
                  "treat luxml label offsets as bytes, not characters");
    cmd->add_flag("--strict", config.strict,
                  "exit nonzero on validation or diagnostic findings; "
                  "couple ArgID to frame correctness when scoring");
    cmd->add_option("--jobs", config.jobs, "worker threads (0 = all cores)")
        ->default_val(0u);
    cmd->add_flag("-v,--verbose", config.verbosity, "more logging on stderr");
  };
  add_common_options(&app);

  CLI::App* score = nullptr;
  CLI::App* diagnose = nullptr;
  const std::pair<const char*, const char*> subcommands[] = {
      {"validate", "check lexicon and corpus invariants"},
      {"stats", "corpus census: frames, LUs, annotation coverage"},
      {"augment", "generate annotation for empty LUs from sisters"},
      {"split", "hold out annotated LUs and rebuild them by augmentation"},
      {"score", "frame and argument identification metrics"},
      {"convert", "convert between jsonl, conll, and luxml inputs"},
      {"diagnose", "flag augmented tokens with word form risks"},
  };
  for (const auto& [name, description] : subcommands) {
    CLI::App* cmd = app.add_subcommand(name, description);
    add_common_options(cmd);
    if (std::string(name) == "score") score = cmd;
    if (std::string(name) == "diagnose") diagnose = cmd;
  }

  score->add_option("gold", config.gold_path, "gold corpus (jsonl, conll, or luxml dir)")
      ->required();
  score->add_option("pred", config.pred_path, "predicted corpus")->required();
  diagnose->add_option("--provenance", config.provenance_path,
                       "provenance.jsonl (default: next to --corpus)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return frameaug::kExitIoError;
  }

  config.use_irregulars = !no_irregulars;
  if (format == "conll") {
    config.format = DataFormat::kConll;
  } else if (format == "luxml") {
    config.format = DataFormat::kLuxml;
  } else {
    config.format = DataFormat::kJsonl;
  }

  return dispatch(app.get_subcommands().front()->get_name(), config);
}
