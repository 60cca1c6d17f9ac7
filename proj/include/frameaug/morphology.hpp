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

// English inflection for annotation transfer: recover the features of a
// surface token relative to its lemma, and inflect a new lemma to match.

#ifndef FRAMEAUG_MORPHOLOGY_H_
#define FRAMEAUG_MORPHOLOGY_H_

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

#include "frameaug/errors.hpp"

namespace frameaug {

// Part of speech, as written in LU name suffixes ("buy.v" -> kVerb).
enum class PosKind { kVerb, kNoun, kAdjective, kAdverb, kPreposition, kNumeral, kOther };

class Pos {
 public:
  Pos() = default;

  // Maps a lowercase LU suffix to a Pos; unknown tags become kOther and
  // are never augmented.
  static Pos from_tag(std::string_view tag);

  PosKind kind() const { return kind_; }
  // The tag as written in LU names ("v", "n", "a", "adv", ...).
  const std::string& tag() const { return tag_; }
  // Nouns, verbs, adjectives and adverbs carry recoverable features.
  bool inflectable() const;

  friend bool operator==(const Pos& a, const Pos& b) { return a.tag_ == b.tag_; }
  friend bool operator!=(const Pos& a, const Pos& b) { return !(a == b); }

 private:
  PosKind kind_ = PosKind::kOther;
  std::string tag_;
};

enum class NounNumber { kSingular, kPlural };
enum class VerbForm { kBase, kThirdSg, kPast, kPastParticiple, kGerund };

// Features recovered from a surface token. Nouns carry a number, verbs a
// form; adjectives and adverbs nothing beyond the part of speech.
struct FeatureBundle {
  Pos pos;
  std::optional<NounNumber> number;
  std::optional<VerbForm> verb_form;

  static FeatureBundle noun(NounNumber n);
  static FeatureBundle verb(VerbForm f);
  static FeatureBundle uninflected(Pos pos);

  // "singular", "past", "none", ... for reports and provenance files.
  std::string feature_name() const;

  friend bool operator==(const FeatureBundle& a, const FeatureBundle& b) {
    return a.pos == b.pos && a.number == b.number && a.verb_form == b.verb_form;
  }
};

// Exceptional forms looked up before the regular suffix rules. The verb
// map is partial: a lemma may override only its past, say, and fall back
// to the rules for every other form.
class IrregularLexicon {
 public:
  using VerbForms = std::unordered_map<VerbForm, std::string>;

  // The table bundled with the library (data/irregulars.jsonl).
  static const IrregularLexicon& builtin();
  // Parses the irregulars JSONL format:
  //   {"lemma": str, "pos": "n"|"v", "forms": {"plural"|"past"|...: str}}
  static IrregularLexicon from_jsonl(std::istream& in);
  static IrregularLexicon from_file(const std::string& path);

  void add_noun(std::string lemma, std::string plural);
  void add_verb(std::string lemma, VerbForms forms);
  // Entries of `overlay` replace entries of *this with the same lemma.
  void merge_from(const IrregularLexicon& overlay);

  const std::string* noun_plural(std::string_view lemma) const;
  const std::string* verb_form(std::string_view lemma, VerbForm form) const;
  bool has_noun(std::string_view lemma) const;
  bool has_verb(std::string_view lemma) const;

  std::size_t noun_count() const { return nouns_.size(); }
  std::size_t verb_count() const { return verbs_.size(); }

 private:
  std::unordered_map<std::string, std::string> nouns_;
  std::unordered_map<std::string, VerbForms> verbs_;
};

// Produces the surface form of `lemma` under `features`. Irregular table
// entries win when use_irregulars is set; otherwise only the documented
// regular suffix rules apply. Total on valid input.
std::string inflect(std::string_view lemma, const FeatureBundle& features,
                    const IrregularLexicon& irregulars, bool use_irregulars = true);

// Recovers the minimal bundle whose inflection reproduces `token`
// (case-insensitively). Both the irregular and the regular realization of
// each candidate form are accepted, so "bended" and "bent" analyze alike.
// Regular past and past participle coincide; analysis reports past.
// Throws FormMismatch when no bundle fits.
FeatureBundle analyze(std::string_view token, std::string_view lemma, const Pos& pos,
                      const IrregularLexicon& irregulars);

// analyze + inflect + capitalization copy: inflects `new_lemma` with the
// features of `sister_token`, uppercasing the first letter when the
// sister token starts uppercase. Throws FormMismatch.
std::string match_form(std::string_view sister_token, std::string_view sister_lemma,
                       std::string_view new_lemma, const Pos& pos,
                       const IrregularLexicon& irregulars, bool use_irregulars = true);

const char* to_string(NounNumber n);
const char* to_string(VerbForm f);
std::optional<VerbForm> verb_form_from_string(std::string_view s);

}  // namespace frameaug

#endif  // FRAMEAUG_MORPHOLOGY_H_
