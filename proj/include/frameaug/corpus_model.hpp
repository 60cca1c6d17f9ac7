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

// In-memory model of a frame lexicon and its annotated corpus. Everything
// here is immutable after load and safe to share across workers.

#ifndef FRAMEAUG_CORPUS_MODEL_H_
#define FRAMEAUG_CORPUS_MODEL_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "frameaug/errors.hpp"
#include "frameaug/morphology.hpp"

namespace frameaug {

// Half-open character range [start, end) counted in Unicode code points.
struct Span {
  std::size_t start = 0;
  std::size_t end = 0;

  std::size_t length() const { return end - start; }
  friend bool operator==(const Span& a, const Span& b) {
    return a.start == b.start && a.end == b.end;
  }
  friend bool operator<(const Span& a, const Span& b) {
    return a.start != b.start ? a.start < b.start : a.end < b.end;
  }
};

enum class Coreness { kCore, kPeripheral, kExtraThematic };

const char* to_string(Coreness c);
std::optional<Coreness> coreness_from_string(std::string_view s);

struct FrameElementDef {
  std::string name;
  Coreness coreness = Coreness::kCore;
};

struct LexicalUnit {
  std::string name;   // "lemma.pos"
  std::string lemma;
  Pos pos;
  std::string frame;
};

// Splits "lemma.pos" on the final dot; lowercases the tag. Throws
// MalformedLuName when no dot is present.
std::pair<std::string, Pos> parse_lu_name(std::string_view name);
std::string format_lu_name(std::string_view lemma, const Pos& pos);

// Multiword expressions are lemmas with an internal space; hyphenated
// forms are single whitespace tokens and do not count.
bool is_mwe(const LexicalUnit& lu);
bool is_mwe_lemma(std::string_view lemma);

class Frame {
 public:
  explicit Frame(std::string name) : name_(std::move(name)) {}

  const std::string& name() const { return name_; }
  const std::vector<FrameElementDef>& fe_defs() const { return fe_defs_; }
  const std::vector<LexicalUnit>& lus() const { return lus_; }

  void add_fe(FrameElementDef fe);        // throws ParseError on duplicate name
  void add_lu(const std::string& name);   // throws DuplicateLu / MalformedLuName

  const FrameElementDef* find_fe(std::string_view name) const;
  const LexicalUnit* find_lu(std::string_view name) const;

 private:
  std::string name_;
  std::vector<FrameElementDef> fe_defs_;
  std::vector<LexicalUnit> lus_;
};

class Lexicon {
 public:
  // Throws DuplicateFrame when the name is already present.
  Frame& add_frame(std::string name);
  const Frame* find(std::string_view name) const;
  const std::vector<Frame>& frames() const { return frames_; }

  const LexicalUnit* find_lu(std::string_view frame, std::string_view lu_name) const;
  std::size_t lu_count() const;

 private:
  std::vector<Frame> frames_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

enum class AnnotationSource { kLexicographic, kFulltext, kAugmented };

const char* to_string(AnnotationSource s);
std::optional<AnnotationSource> source_from_string(std::string_view s);

struct FeSpan {
  std::string fe_name;
  Span span;

  friend bool operator==(const FeSpan& a, const FeSpan& b) {
    return a.fe_name == b.fe_name && a.span == b.span;
  }
};

// One annotated sentence: the target span evoking the frame plus its
// labeled frame element spans.
struct AnnotationSet {
  std::string id;
  std::string frame;
  std::string lu_name;
  std::string sentence;
  Span target;
  std::vector<FeSpan> fes;
  AnnotationSource source = AnnotationSource::kLexicographic;

  friend bool operator==(const AnnotationSet& a, const AnnotationSet& b) {
    return a.id == b.id && a.frame == b.frame && a.lu_name == b.lu_name &&
           a.sentence == b.sentence && a.target == b.target && a.fes == b.fes &&
           a.source == b.source;
  }
};

class Corpus {
 public:
  // Throws DuplicateId.
  void add(AnnotationSet set);

  const std::vector<AnnotationSet>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  const AnnotationSet* find(std::string_view id) const;

  // Indices of the sets annotating (frame, lu), in insertion order.
  const std::vector<std::size_t>* sets_for_lu(std::string_view frame,
                                              std::string_view lu_name) const;
  std::size_t count_for_lu(std::string_view frame, std::string_view lu_name) const;

 private:
  std::vector<AnnotationSet> sets_;
  std::unordered_map<std::string, std::size_t> by_id_;
  std::map<std::pair<std::string, std::string>, std::vector<std::size_t>> by_lu_;
};

struct ValidationIssue {
  std::string annotation_id;
  std::string rule;
  std::string message;

  friend bool operator==(const ValidationIssue& a, const ValidationIssue& b) {
    return a.annotation_id == b.annotation_id && a.rule == b.rule &&
           a.message == b.message;
  }
};

struct ValidationReport {
  std::vector<ValidationIssue> errors;
  std::vector<ValidationIssue> warnings;

  bool ok() const { return errors.empty(); }
};

// Checks one annotation set against the lexicon and sentence: span bounds
// and token alignment, FE names, FE/FE and FE/target overlap, and that
// the target text is a surface form of the LU's lemma. Violations are
// appended to `out`; nothing is thrown.
void check_annotation(const Lexicon& lexicon, const AnnotationSet& set,
                      const IrregularLexicon& irregulars,
                      std::vector<ValidationIssue>* out);

// Runs check_annotation over the whole corpus. Pure; the report is
// ordered by (annotation id, rule, message).
ValidationReport validate(const Lexicon& lexicon, const Corpus& corpus,
                          const IrregularLexicon& irregulars = IrregularLexicon::builtin());

// True when [span.start, span.end) sits on whitespace-token boundaries of
// the sentence (code point offsets).
bool token_aligned(std::string_view sentence, const Span& span);

}  // namespace frameaug

#endif  // FRAMEAUG_CORPUS_MODEL_H_
