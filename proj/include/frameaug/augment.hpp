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

// Annotation transfer between sister lexical units: for every LU with no
// annotation sets, pick the most-annotated LU of the same frame and part
// of speech, re-inflect its target tokens, and rebase the argument spans.

#ifndef FRAMEAUG_AUGMENT_H_
#define FRAMEAUG_AUGMENT_H_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "frameaug/corpus_model.hpp"
#include "frameaug/morphology.hpp"

namespace frameaug {

struct SisterAssignment {
  LexicalUnit empty_lu;
  LexicalUnit sister;
  std::size_t sister_set_count = 0;
};

struct Inflection {
  std::string sister_token;
  std::string produced_token;
  FeatureBundle features;
};

struct AugmentationRecord {
  AnnotationSet annotation;  // source == kAugmented
  std::string sister_lu;
  std::string source_annotation_id;
  Inflection inflection;
};

struct AugmentStats {
  std::size_t empty_lu_count = 0;
  std::size_t mwe_excluded_count = 0;      // MWE empty LU, or only MWE sisters
  std::size_t no_sister_count = 0;         // no annotated same-POS candidate
  std::size_t eligible_empty_lu_count = 0;
  std::size_t sentences_generated = 0;
  std::size_t skipped_form_mismatch = 0;
  std::size_t skipped_span_conflict = 0;

  friend bool operator==(const AugmentStats& a, const AugmentStats& b) = default;
};

struct DiagnosticFlag {
  std::string annotation_id;
  std::string category;  // "word_form_mismatch"
  std::string detail;
};

struct AugmentOptions {
  bool use_irregulars = true;
  const IrregularLexicon* irregulars = nullptr;  // builtin() when null
  unsigned jobs = 0;                             // 0 = hardware concurrency
};

struct AugmentResult {
  std::vector<AugmentationRecord> records;
  AugmentStats stats;
};

// LUs with zero annotation sets, ordered by (frame, LU name). MWEs are
// included; eligibility filtering happens later so the stats can count
// them.
std::vector<LexicalUnit> find_empty_lus(const Lexicon& lexicon, const Corpus& corpus);

// The sister of an empty LU: among annotated LUs of the same frame and
// POS that are not MWEs, the one with the most annotation sets, ties
// broken by lexicographically smallest name. Empty when the LU is an MWE,
// is not an inflectable POS, or no candidate exists.
std::optional<SisterAssignment> select_sister(const LexicalUnit& empty_lu,
                                              const Lexicon& lexicon,
                                              const Corpus& corpus);

// Shifts FE spans around a target whose surface form changed length by
// delta = new_target_len - target.length(): spans before the target are
// untouched, spans after it shift, spans containing it stretch. Returns
// the rebased FE spans and the new target. Throws SpanConflict when a
// span partially overlaps the target.
std::pair<std::vector<FeSpan>, Span> rebase_spans(const std::vector<FeSpan>& fes,
                                                  const Span& target,
                                                  std::size_t new_target_len);

// Transfers every annotation set of the sister onto the empty LU.
// Sentences whose target cannot be re-inflected or whose spans conflict
// are skipped and counted in `stats`. Record ids are
// "{source_id}::aug::{empty_lu_name}".
std::vector<AugmentationRecord> augment_lu(const SisterAssignment& assignment,
                                           const Corpus& corpus,
                                           const AugmentOptions& options,
                                           AugmentStats* stats);

// Runs the full pipeline over every empty LU (optionally restricted to a
// set of (frame, lu_name) pairs). Output order is canonical — (frame, LU
// name), then source annotation id — regardless of the worker count.
AugmentResult augment_corpus(const Lexicon& lexicon, const Corpus& corpus,
                             const AugmentOptions& options = {},
                             const std::set<std::pair<std::string, std::string>>*
                                 restrict_to = nullptr);

// Flags produced tokens that the regular rules built for a lemma whose
// irregular form was available but unused (the "occlude"-style word form
// risk). Pure report; with irregulars enabled it never fires.
std::vector<DiagnosticFlag> diagnose(const std::vector<AugmentationRecord>& records,
                                     const IrregularLexicon& irregulars =
                                         IrregularLexicon::builtin());

}  // namespace frameaug

#endif  // FRAMEAUG_AUGMENT_H_
