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

#include "frameaug/commands.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>

#include <json.hpp>

#include "frameaug/augment.hpp"
#include "frameaug/ingest.hpp"
#include "frameaug/luxml.hpp"
#include "frameaug/scorer.hpp"
#include "frameaug/splits.hpp"
#include "frameaug/utf8.hpp"

namespace frameaug {

namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

IrregularLexicon resolve_irregulars(const RunConfig& config) {
  IrregularLexicon irregulars = IrregularLexicon::builtin();
  if (!config.irregulars_path.empty()) {
    irregulars.merge_from(IrregularLexicon::from_file(config.irregulars_path));
  }
  return irregulars;
}

AugmentOptions augment_options(const RunConfig& config,
                               const IrregularLexicon& irregulars) {
  AugmentOptions options;
  options.use_irregulars = config.use_irregulars;
  options.irregulars = &irregulars;
  options.jobs = config.jobs;
  return options;
}

struct LoadedInputs {
  Lexicon lexicon;
  Corpus corpus;
  std::vector<std::string> issues;  // "path:line: rule: message"
};

// Rethrows a ParseError with "path:line" context baked into the message.
[[noreturn]] void rethrow_with_path(const std::string& path, const ParseError& e) {
  throw ParseError(path + ":" + std::to_string(e.line()) + ": " + e.what());
}

LoadedInputs load_inputs(const RunConfig& config, const IrregularLexicon& irregulars) {
  LoadedInputs inputs;
  if (config.lexicon_path.empty()) {
    throw ParseError("no lexicon given (--lexicon PATH)");
  }
  try {
    inputs.lexicon = load_lexicon(config.lexicon_path);
  } catch (const ParseError& e) {
    rethrow_with_path(config.lexicon_path, e);
  }
  for (const std::string& path : config.corpus_paths) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path);
    CorpusLoad load;
    try {
      load = load_corpus(in, inputs.lexicon, irregulars);
    } catch (const ParseError& e) {
      rethrow_with_path(path, e);
    }
    for (const LoadIssue& issue : load.rejected) {
      inputs.issues.push_back(path + ":" + std::to_string(issue.line) + ": " +
                              issue.rule + ": " + issue.message);
    }
    for (const AnnotationSet& set : load.corpus.sets()) {
      try {
        inputs.corpus.add(set);
      } catch (const DuplicateId& e) {
        inputs.issues.push_back(path + ": duplicate_id: " + e.what());
      }
    }
  }
  return inputs;
}

void ensure_out_dir(const RunConfig& config) {
  if (config.out_dir.empty()) {
    throw ParseError("no output directory given (--out DIR)");
  }
  fs::create_directories(config.out_dir);
}

std::string out_path(const RunConfig& config, const std::string& name) {
  return (fs::path(config.out_dir) / name).string();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << text;
}

ordered_json features_to_json(const FeatureBundle& bundle) {
  ordered_json j;
  j["pos"] = bundle.pos.tag();
  j["form"] = bundle.feature_name();
  return j;
}

void write_provenance(const std::vector<AugmentationRecord>& records,
                      const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  for (const AugmentationRecord& record : records) {
    ordered_json j;
    j["id"] = record.annotation.id;
    j["sister_lu"] = record.sister_lu;
    j["source_id"] = record.source_annotation_id;
    j["sister_token"] = record.inflection.sister_token;
    j["new_token"] = record.inflection.produced_token;
    j["features"] = features_to_json(record.inflection.features);
    out << j.dump() << "\n";
  }
}

double round1(double x) { return std::round(x * 10.0) / 10.0; }
double round4(double x) { return std::round(x * 10000.0) / 10000.0; }

ordered_json stats_to_json(const AugmentStats& stats) {
  ordered_json j;
  j["empty_lu_count"] = stats.empty_lu_count;
  j["mwe_excluded_count"] = stats.mwe_excluded_count;
  j["no_sister_count"] = stats.no_sister_count;
  // Empty LUs whose frame offered any candidate at all, MWE or not.
  j["candidate_empty_lu_count"] =
      stats.mwe_excluded_count + stats.eligible_empty_lu_count;
  j["eligible_empty_lu_count"] = stats.eligible_empty_lu_count;
  j["sentences_generated"] = stats.sentences_generated;
  j["skipped_form_mismatch"] = stats.skipped_form_mismatch;
  j["skipped_span_conflict"] = stats.skipped_span_conflict;
  j["coverage_ratio"] =
      stats.empty_lu_count == 0
          ? 0.0
          : round4(static_cast<double>(stats.eligible_empty_lu_count) /
                   static_cast<double>(stats.empty_lu_count));
  return j;
}

// Command bodies run inside this wrapper so I/O failures map to exit
// codes uniformly.
template <typename Fn>
int guarded(std::ostream& err, Fn body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what();
    if (e.line() != 0) err << " (line " << e.line() << ")";
    err << "\n";
    return kExitIoError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitIoError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitIoError;
  }
}

DataFormat infer_format(const std::string& path) {
  if (fs::is_directory(path)) return DataFormat::kLuxml;
  const std::string ext = fs::path(path).extension().string();
  if (ext == ".conll" || ext == ".tsv") return DataFormat::kConll;
  return DataFormat::kJsonl;
}

// Loads a gold or prediction corpus for scoring or conversion without
// lexicon validation.
Corpus load_any_corpus(const std::string& path, const RunConfig& config,
                       std::ostream& err) {
  switch (infer_format(path)) {
    case DataFormat::kConll:
      return parse_conll(path);
    case DataFormat::kLuxml: {
      Lexicon lexicon = config.lexicon_path.empty()
                            ? lexicon_from_luxml(path)
                            : load_lexicon(config.lexicon_path);
      LuXmlOptions options;
      options.byte_offsets = config.luxml_byte_offsets;
      LuXmlResult result = read_framenet_luxml(path, lexicon, options);
      for (const std::string& warning : result.warnings) {
        err << "warning: " << warning << "\n";
      }
      return std::move(result.corpus);
    }
    case DataFormat::kJsonl:
    default:
      return load_corpus_raw(path);
  }
}

}  // namespace

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const IrregularLexicon irregulars = resolve_irregulars(config);
    LoadedInputs inputs = load_inputs(config, irregulars);
    const ValidationReport report = validate(inputs.lexicon, inputs.corpus, irregulars);

    ordered_json j;
    ordered_json load_errors = ordered_json::array();
    for (const std::string& issue : inputs.issues) load_errors.push_back(issue);
    j["load_errors"] = std::move(load_errors);
    ordered_json errors = ordered_json::array();
    for (const ValidationIssue& e : report.errors) {
      errors.push_back({{"id", e.annotation_id}, {"rule", e.rule}, {"message", e.message}});
    }
    j["errors"] = std::move(errors);
    ordered_json warnings = ordered_json::array();
    for (const ValidationIssue& w : report.warnings) {
      warnings.push_back({{"id", w.annotation_id}, {"rule", w.rule}, {"message", w.message}});
    }
    j["warnings"] = std::move(warnings);
    out << j.dump(2) << "\n";

    const std::size_t problems = inputs.issues.size() + report.errors.size();
    err << "validate: " << inputs.corpus.size() << " sets ok, " << problems
        << " problems\n";
    if (problems > 0 && config.strict) return kExitStrictFailure;
    return kExitOk;
  });
}

int cmd_stats(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const IrregularLexicon irregulars = resolve_irregulars(config);
    LoadedInputs inputs = load_inputs(config, irregulars);
    for (const std::string& issue : inputs.issues) {
      err << "warning: rejected record: " << issue << "\n";
    }

    std::size_t lu_total = 0;
    std::size_t lu_empty = 0;
    std::size_t mwe_total = 0;
    std::size_t mwe_empty = 0;
    std::map<std::string, std::size_t> by_pos;
    for (const Frame& frame : inputs.lexicon.frames()) {
      for (const LexicalUnit& lu : frame.lus()) {
        ++lu_total;
        ++by_pos[lu.pos.tag()];
        const bool empty = inputs.corpus.count_for_lu(frame.name(), lu.name) == 0;
        if (empty) ++lu_empty;
        if (is_mwe(lu)) {
          ++mwe_total;
          if (empty) ++mwe_empty;
        }
      }
    }
    std::map<std::string, std::size_t> by_source;
    for (const AnnotationSet& set : inputs.corpus.sets()) {
      ++by_source[to_string(set.source)];
    }

    const double empty_pct =
        lu_total == 0 ? 0.0 : round1(100.0 * static_cast<double>(lu_empty) /
                                     static_cast<double>(lu_total));
    ordered_json j;
    j["frames"] = inputs.lexicon.frames().size();
    j["lus"] = lu_total;
    j["annotated_lus"] = lu_total - lu_empty;
    j["empty_lus"] = lu_empty;
    j["empty_lu_pct"] = empty_pct;
    j["mwe_lus"] = mwe_total;
    j["mwe_empty_lus"] = mwe_empty;
    j["annotation_sets"] = inputs.corpus.size();
    j["sets_by_source"] = by_source;
    j["lus_by_pos"] = by_pos;
    out << j.dump(2) << "\n";
    if (!config.out_dir.empty()) {
      ensure_out_dir(config);
      write_text_file(out_path(config, "stats.json"), j.dump(2) + "\n");
    }

    char line[160];
    std::snprintf(line, sizeof(line), "%-18s %8zu\n", "frames",
                  inputs.lexicon.frames().size());
    err << line;
    std::snprintf(line, sizeof(line), "%-18s %8zu  (%zu annotated, %zu empty, %.1f%%)\n",
                  "LUs", lu_total, lu_total - lu_empty, lu_empty, empty_pct);
    err << line;
    std::snprintf(line, sizeof(line), "%-18s %8zu  (%zu empty)\n", "MWE LUs", mwe_total,
                  mwe_empty);
    err << line;
    std::snprintf(line, sizeof(line), "%-18s %8zu\n", "annotation sets",
                  inputs.corpus.size());
    err << line;
    for (const auto& [pos, count] : by_pos) {
      std::snprintf(line, sizeof(line), "  .%-16s %8zu\n", pos.c_str(), count);
      err << line;
    }
    return kExitOk;
  });
}

int cmd_augment(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const IrregularLexicon irregulars = resolve_irregulars(config);
    LoadedInputs inputs = load_inputs(config, irregulars);
    if (!inputs.issues.empty()) {
      for (const std::string& issue : inputs.issues) err << "error: " << issue << "\n";
      err << "augment: input corpus has invalid records; run validate\n";
      return kExitIoError;
    }
    ensure_out_dir(config);

    AugmentResult result =
        augment_corpus(inputs.lexicon, inputs.corpus, augment_options(config, irregulars));
    if (config.verbosity > 0) {
      for (const AugmentationRecord& record : result.records) {
        err << "  " << record.annotation.frame << "/" << record.annotation.lu_name
            << " <- " << record.sister_lu << ": " << record.inflection.sister_token
            << " -> " << record.inflection.produced_token << " ("
            << record.source_annotation_id << ")\n";
      }
    }

    Corpus augmented;
    for (const AugmentationRecord& record : result.records) {
      augmented.add(record.annotation);
    }
    write_corpus(augmented, out_path(config, "augmented.jsonl"));
    write_provenance(result.records, out_path(config, "provenance.jsonl"));
    write_text_file(out_path(config, "stats.json"),
                    stats_to_json(result.stats).dump(2) + "\n");

    err << "augment: " << result.stats.sentences_generated << " sentences for "
        << result.stats.eligible_empty_lu_count << " of "
        << result.stats.empty_lu_count << " empty LUs ("
        << result.stats.skipped_form_mismatch << " form mismatches, "
        << result.stats.skipped_span_conflict << " span conflicts skipped)\n";
    out << stats_to_json(result.stats).dump(2) << "\n";
    return kExitOk;
  });
}

int cmd_split(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const IrregularLexicon irregulars = resolve_irregulars(config);
    LoadedInputs inputs = load_inputs(config, irregulars);
    if (!inputs.issues.empty()) {
      for (const std::string& issue : inputs.issues) err << "error: " << issue << "\n";
      err << "split: input corpus has invalid records; run validate\n";
      return kExitIoError;
    }
    ensure_out_dir(config);

    ExperimentResult result =
        build_experiment(inputs.lexicon, inputs.corpus, config.holdout_n, config.seed,
                         augment_options(config, irregulars));
    if (result.plan.saturated()) {
      err << "warning: only " << result.plan.held_out.size()
          << " annotated LUs available, holding out all of them\n";
    }

    write_text_file(out_path(config, "plan.json"), plan_to_json(result.plan));
    write_corpus(result.baseline, out_path(config, "baseline.jsonl"));
    export_conll(result.baseline, out_path(config, "baseline.conll"));
    write_corpus(result.augmented, out_path(config, "augmented.jsonl"));
    export_conll(result.augmented, out_path(config, "augmented.conll"));
    write_corpus(result.stripped_gold, out_path(config, "stripped_gold.jsonl"));
    write_provenance(result.records, out_path(config, "provenance.jsonl"));
    write_text_file(out_path(config, "stats.json"),
                    stats_to_json(result.stats).dump(2) + "\n");

    err << "split: held out " << result.plan.held_out.size() << " LUs ("
        << result.plan.stripped_ids.size() << " sets); baseline "
        << result.baseline.size() << " sets, augmented " << result.augmented.size()
        << " sets\n";
    out << plan_to_json(result.plan);
    return kExitOk;
  });
}

int cmd_score(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.gold_path.empty() || config.pred_path.empty()) {
      throw ParseError("score needs GOLD and PRED paths");
    }
    const Corpus gold = load_any_corpus(config.gold_path, config, err);
    const Corpus pred = load_any_corpus(config.pred_path, config, err);

    ScoreReport report;
    try {
      report = score_corpora(gold, pred, config.strict);
    } catch (const ScoreAlignmentError& e) {
      for (const std::string& key : e.missing()) {
        err << "missing prediction: " << key << "\n";
      }
      for (const std::string& key : e.spurious()) {
        err << "spurious prediction: " << key << "\n";
      }
      err << "error: " << e.what() << "\n";
      return kExitStrictFailure;
    }

    out << report_to_json(report);
    err << report_to_table(report);
    if (!config.out_dir.empty()) {
      ensure_out_dir(config);
      write_text_file(out_path(config, "report.json"), report_to_json(report));
      write_text_file(out_path(config, "report.txt"), report_to_table(report));
    }
    return kExitOk;
  });
}

int cmd_convert(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.corpus_paths.size() != 1) {
      throw ParseError("convert needs exactly one --corpus input");
    }
    if (config.format == DataFormat::kLuxml) {
      throw ParseError("convert cannot write the luxml format; it is read-only");
    }
    ensure_out_dir(config);
    const std::string& input = config.corpus_paths.front();

    Corpus corpus;
    if (infer_format(input) == DataFormat::kLuxml && config.lexicon_path.empty()) {
      // No lexicon supplied: derive one from the files and keep it.
      Lexicon lexicon = lexicon_from_luxml(input);
      LuXmlOptions options;
      options.byte_offsets = config.luxml_byte_offsets;
      LuXmlResult result = read_framenet_luxml(input, lexicon, options);
      for (const std::string& warning : result.warnings) {
        err << "warning: " << warning << "\n";
      }
      corpus = std::move(result.corpus);
      write_lexicon(lexicon, out_path(config, "lexicon.jsonl"));
    } else {
      corpus = load_any_corpus(input, config, err);
    }

    std::size_t rows = 0;
    std::string output;
    if (config.format == DataFormat::kConll) {
      output = out_path(config, "corpus.conll");
      rows = export_conll(corpus, output);
    } else {
      output = out_path(config, "corpus.jsonl");
      write_corpus(corpus, output);
      rows = corpus.size();
    }
    err << "convert: " << corpus.size() << " sets -> " << output << " (" << rows
        << " rows)\n";
    out << output << "\n";
    return kExitOk;
  });
}

int cmd_diagnose(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.corpus_paths.size() != 1) {
      throw ParseError("diagnose needs exactly one --corpus input (augmented.jsonl)");
    }
    const std::string corpus_path = config.corpus_paths.front();
    std::string provenance_path = config.provenance_path;
    if (provenance_path.empty()) {
      provenance_path =
          (fs::path(corpus_path).parent_path() / "provenance.jsonl").string();
    }
    const Corpus corpus = load_corpus_raw(corpus_path);

    std::ifstream in(provenance_path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + provenance_path);
    std::vector<AugmentationRecord> records;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      ordered_json j;
      try {
        j = ordered_json::parse(line);
      } catch (const ordered_json::exception& e) {
        throw ParseError(std::string("provenance: ") + e.what(), lineno);
      }
      AugmentationRecord record;
      try {
        const std::string id = j.at("id").get<std::string>();
        const AnnotationSet* set = corpus.find(id);
        if (set == nullptr) {
          throw ParseError("provenance: id '" + id + "' not in corpus", lineno);
        }
        record.annotation = *set;
        record.sister_lu = j.at("sister_lu").get<std::string>();
        record.source_annotation_id = j.at("source_id").get<std::string>();
        record.inflection.sister_token = j.at("sister_token").get<std::string>();
        record.inflection.produced_token = j.at("new_token").get<std::string>();
        const ordered_json& features = j.at("features");
        const Pos pos = Pos::from_tag(features.at("pos").get<std::string>());
        const std::string form = features.at("form").get<std::string>();
        if (pos.kind() == PosKind::kNoun) {
          record.inflection.features = FeatureBundle::noun(
              form == "plural" ? NounNumber::kPlural : NounNumber::kSingular);
        } else if (pos.kind() == PosKind::kVerb) {
          auto vf = verb_form_from_string(form);
          if (!vf) throw ParseError("provenance: bad verb form '" + form + "'", lineno);
          record.inflection.features = FeatureBundle::verb(*vf);
        } else {
          record.inflection.features = FeatureBundle::uninflected(pos);
        }
      } catch (const ordered_json::exception& e) {
        throw ParseError(std::string("provenance: ") + e.what(), lineno);
      }
      records.push_back(std::move(record));
    }

    const IrregularLexicon irregulars = resolve_irregulars(config);
    const std::vector<DiagnosticFlag> flags = diagnose(records, irregulars);
    ordered_json j = ordered_json::array();
    for (const DiagnosticFlag& flag : flags) {
      j.push_back({{"id", flag.annotation_id},
                   {"category", flag.category},
                   {"detail", flag.detail}});
    }
    out << j.dump(2) << "\n";
    err << "diagnose: " << flags.size() << " of " << records.size()
        << " records flagged\n";
    if (!flags.empty() && config.strict) return kExitStrictFailure;
    return kExitOk;
  });
}

}  // namespace frameaug
