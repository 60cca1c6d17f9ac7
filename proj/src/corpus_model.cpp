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

#include "frameaug/corpus_model.hpp"

#include <algorithm>
#include <cassert>

#include "frameaug/utf8.hpp"

namespace frameaug {

const char* to_string(Coreness c) {
  switch (c) {
    case Coreness::kCore: return "core";
    case Coreness::kPeripheral: return "peripheral";
    case Coreness::kExtraThematic: return "extra-thematic";
  }
  return "?";
}

std::optional<Coreness> coreness_from_string(std::string_view s) {
  if (s == "core") return Coreness::kCore;
  if (s == "peripheral") return Coreness::kPeripheral;
  if (s == "extra-thematic") return Coreness::kExtraThematic;
  return std::nullopt;
}

const char* to_string(AnnotationSource s) {
  switch (s) {
    case AnnotationSource::kLexicographic: return "lexicographic";
    case AnnotationSource::kFulltext: return "fulltext";
    case AnnotationSource::kAugmented: return "augmented";
  }
  return "?";
}

std::optional<AnnotationSource> source_from_string(std::string_view s) {
  if (s == "lexicographic") return AnnotationSource::kLexicographic;
  if (s == "fulltext") return AnnotationSource::kFulltext;
  if (s == "augmented") return AnnotationSource::kAugmented;
  return std::nullopt;
}

std::pair<std::string, Pos> parse_lu_name(std::string_view name) {
  auto dot = name.rfind('.');
  if (dot == std::string_view::npos || dot == 0 || dot + 1 == name.size()) {
    throw MalformedLuName("LU name '" + std::string(name) +
                          "' is not of the form lemma.pos");
  }
  return {std::string(name.substr(0, dot)), Pos::from_tag(name.substr(dot + 1))};
}

std::string format_lu_name(std::string_view lemma, const Pos& pos) {
  return std::string(lemma) + "." + pos.tag();
}

bool is_mwe_lemma(std::string_view lemma) {
  return lemma.find(' ') != std::string_view::npos;
}

bool is_mwe(const LexicalUnit& lu) { return is_mwe_lemma(lu.lemma); }

void Frame::add_fe(FrameElementDef fe) {
  if (find_fe(fe.name) != nullptr) {
    throw ParseError("duplicate FE '" + fe.name + "' in frame " + name_);
  }
  fe_defs_.push_back(std::move(fe));
}

void Frame::add_lu(const std::string& lu_name) {
  if (find_lu(lu_name) != nullptr) {
    throw DuplicateLu("duplicate LU '" + lu_name + "' in frame " + name_);
  }
  auto [lemma, pos] = parse_lu_name(lu_name);
  lus_.push_back(LexicalUnit{lu_name, std::move(lemma), std::move(pos), name_});
}

const FrameElementDef* Frame::find_fe(std::string_view name) const {
  for (const auto& fe : fe_defs_) {
    if (fe.name == name) return &fe;
  }
  return nullptr;
}

const LexicalUnit* Frame::find_lu(std::string_view name) const {
  for (const auto& lu : lus_) {
    if (lu.name == name) return &lu;
  }
  return nullptr;
}

Frame& Lexicon::add_frame(std::string name) {
  if (index_.count(name) > 0) {
    throw DuplicateFrame("duplicate frame '" + name + "'");
  }
  index_.emplace(name, frames_.size());
  frames_.emplace_back(std::move(name));
  return frames_.back();
}

const Frame* Lexicon::find(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &frames_[it->second];
}

const LexicalUnit* Lexicon::find_lu(std::string_view frame,
                                    std::string_view lu_name) const {
  const Frame* f = find(frame);
  return f == nullptr ? nullptr : f->find_lu(lu_name);
}

std::size_t Lexicon::lu_count() const {
  std::size_t n = 0;
  for (const auto& f : frames_) n += f.lus().size();
  return n;
}

void Corpus::add(AnnotationSet set) {
  if (by_id_.count(set.id) > 0) {
    throw DuplicateId("duplicate annotation id '" + set.id + "'");
  }
  by_id_.emplace(set.id, sets_.size());
  by_lu_[{set.frame, set.lu_name}].push_back(sets_.size());
  sets_.push_back(std::move(set));
}

const AnnotationSet* Corpus::find(std::string_view id) const {
  auto it = by_id_.find(std::string(id));
  return it == by_id_.end() ? nullptr : &sets_[it->second];
}

const std::vector<std::size_t>* Corpus::sets_for_lu(std::string_view frame,
                                                    std::string_view lu_name) const {
  auto it = by_lu_.find({std::string(frame), std::string(lu_name)});
  return it == by_lu_.end() ? nullptr : &it->second;
}

std::size_t Corpus::count_for_lu(std::string_view frame,
                                 std::string_view lu_name) const {
  const auto* indices = sets_for_lu(frame, lu_name);
  return indices == nullptr ? 0 : indices->size();
}

bool token_aligned(std::string_view sentence, const Span& span) {
  const std::size_t len = utf8::length(sentence);
  if (span.start >= span.end || span.end > len) return false;
  auto char_at = [&](std::size_t cp) {
    return utf8::substr(sentence, cp, cp + 1);
  };
  if (span.start > 0 && char_at(span.start - 1) != " ") return false;
  if (span.end < len && char_at(span.end) != " ") return false;
  // A span never starts or ends on a space of its own.
  if (char_at(span.start) == " " || char_at(span.end - 1) == " ") return false;
  return true;
}

namespace {

enum class Overlap { kBefore, kAfter, kContains, kPartial };

Overlap classify(const Span& span, const Span& target) {
  if (span.end <= target.start) return Overlap::kBefore;
  if (span.start >= target.end) return Overlap::kAfter;
  if (span.start <= target.start && span.end >= target.end) return Overlap::kContains;
  return Overlap::kPartial;
}

void check_span_bounds(const AnnotationSet& set, const Span& span,
                       const std::string& what, std::vector<ValidationIssue>* out) {
  const std::size_t len = utf8::length(set.sentence);
  if (span.start >= span.end || span.end > len) {
    out->push_back({set.id, "span_out_of_bounds",
                    what + " span [" + std::to_string(span.start) + "," +
                        std::to_string(span.end) + ") out of bounds for sentence of length " +
                        std::to_string(len)});
    return;
  }
  if (!token_aligned(set.sentence, span)) {
    out->push_back({set.id, "span_not_token_aligned",
                    what + " span [" + std::to_string(span.start) + "," +
                        std::to_string(span.end) + ") not on token boundaries"});
  }
}

// The target of a multiword LU inflects on its head word; analysis runs
// on the first whitespace token of both lemma and target text.
void check_target_form(const AnnotationSet& set, const LexicalUnit& lu,
                       const IrregularLexicon& irregulars,
                       std::vector<ValidationIssue>* out) {
  std::string text(utf8::substr(set.sentence, set.target.start, set.target.end));
  std::string lemma = lu.lemma;
  if (is_mwe_lemma(lemma)) {
    text = text.substr(0, text.find(' '));
    lemma = lemma.substr(0, lemma.find(' '));
  }
  if (!lu.pos.inflectable()) {
    std::string a = text, b = lemma;
    std::transform(a.begin(), a.end(), a.begin(), ::tolower);
    std::transform(b.begin(), b.end(), b.begin(), ::tolower);
    if (a != b) {
      out->push_back({set.id, "target_form_mismatch",
                      "target '" + text + "' does not match uninflectable lemma '" +
                          lemma + "'"});
    }
    return;
  }
  try {
    analyze(text, lemma, lu.pos, irregulars);
  } catch (const FormMismatch& e) {
    out->push_back({set.id, "target_form_mismatch", e.what()});
  }
}

}  // namespace

void check_annotation(const Lexicon& lexicon, const AnnotationSet& set,
                      const IrregularLexicon& irregulars,
                      std::vector<ValidationIssue>* out) {
  const Frame* frame = lexicon.find(set.frame);
  if (frame == nullptr) {
    out->push_back({set.id, "unknown_frame", "frame '" + set.frame + "' not in lexicon"});
    return;
  }
  const LexicalUnit* lu = frame->find_lu(set.lu_name);
  if (lu == nullptr) {
    out->push_back({set.id, "unknown_lu",
                    "LU '" + set.lu_name + "' not in frame " + set.frame});
    return;
  }

  const std::size_t before = out->size();
  check_span_bounds(set, set.target, "target", out);
  for (const FeSpan& fe : set.fes) {
    check_span_bounds(set, fe.span, "FE " + fe.fe_name, out);
  }
  // Overlap and form checks only make sense on in-bounds spans.
  if (out->size() != before) return;

  for (const FeSpan& fe : set.fes) {
    if (frame->find_fe(fe.fe_name) == nullptr) {
      out->push_back({set.id, "unknown_fe",
                      "FE '" + fe.fe_name + "' not defined for frame " + set.frame});
    }
    if (classify(fe.span, set.target) == Overlap::kPartial) {
      out->push_back({set.id, "partial_target_overlap",
                      "FE " + fe.fe_name + " partially overlaps the target"});
    }
  }
  for (std::size_t i = 0; i < set.fes.size(); ++i) {
    for (std::size_t j = i + 1; j < set.fes.size(); ++j) {
      const Span& a = set.fes[i].span;
      const Span& b = set.fes[j].span;
      if (a.start < b.end && b.start < a.end) {
        out->push_back({set.id, "fe_overlap",
                        "FE " + set.fes[i].fe_name + " overlaps FE " + set.fes[j].fe_name});
      }
    }
  }
  check_target_form(set, *lu, irregulars, out);
}

ValidationReport validate(const Lexicon& lexicon, const Corpus& corpus,
                          const IrregularLexicon& irregulars) {
  ValidationReport report;
  for (const AnnotationSet& set : corpus.sets()) {
    check_annotation(lexicon, set, irregulars, &report.errors);
  }
  auto by_id_rule = [](const ValidationIssue& a, const ValidationIssue& b) {
    if (a.annotation_id != b.annotation_id) return a.annotation_id < b.annotation_id;
    if (a.rule != b.rule) return a.rule < b.rule;
    return a.message < b.message;
  };
  std::sort(report.errors.begin(), report.errors.end(), by_id_rule);
  std::sort(report.warnings.begin(), report.warnings.end(), by_id_rule);
  return report;
}

}  // namespace frameaug
