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

#include "frameaug/morphology.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <unordered_set>

#include <json.hpp>

namespace frameaug {

namespace {

using json = nlohmann::json;

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return out;
}

bool is_vowel(char c) {
  return c == 'a' || c == 'e' || c == 'i' || c == 'o' || c == 'u';
}

bool is_consonant(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) && !is_vowel(c);
}

std::size_t vowel_groups(std::string_view w) {
  std::size_t n = 0;
  bool in_group = false;
  for (char c : w) {
    bool v = is_vowel(c);
    if (v && !in_group) ++n;
    in_group = v;
  }
  return n;
}

// Multisyllabic lemmas that still double their final consonant (final
// syllable stressed). Monosyllables double by rule; everything else does
// not ("visit" -> "visited").
const std::unordered_set<std::string>& doubling_lemmas() {
  static const std::unordered_set<std::string> set = {
      "admit",   "commit", "permit",  "submit", "omit",   "emit",
      "transmit", "remit", "refer",   "prefer", "defer",  "infer",
      "confer",  "transfer", "occur", "incur",  "recur",  "concur",
      "deter",   "regret", "equip",   "control", "patrol", "propel",
      "compel",  "expel",  "repel",   "dispel", "rebel",  "excel",
      "format",  "kidnap", "handicap"};
  return set;
}

bool doubles_final_consonant(std::string_view w) {
  if (w.size() < 3) return false;
  char a = w[w.size() - 3];
  char b = w[w.size() - 2];
  char c = w[w.size() - 1];
  if (!(is_consonant(a) && is_vowel(b) && is_consonant(c))) return false;
  if (c == 'w' || c == 'x' || c == 'y') return false;
  if (vowel_groups(w) == 1) return true;
  return doubling_lemmas().count(std::string(w)) > 0;
}

bool ends_with(std::string_view w, std::string_view suffix) {
  return w.size() >= suffix.size() && w.substr(w.size() - suffix.size()) == suffix;
}

bool sibilant_ending(std::string_view w) {
  return ends_with(w, "s") || ends_with(w, "x") || ends_with(w, "z") ||
         ends_with(w, "ch") || ends_with(w, "sh");
}

bool consonant_y_ending(std::string_view w) {
  return w.size() >= 2 && w.back() == 'y' && is_consonant(w[w.size() - 2]);
}

// Also serves as the regular third person singular rule.
std::string regular_plural(std::string_view w) {
  std::string out(w);
  if (sibilant_ending(w)) return out + "es";
  if (consonant_y_ending(w)) {
    out.pop_back();
    return out + "ies";
  }
  return out + "s";
}

std::string regular_past(std::string_view w) {
  std::string out(w);
  if (ends_with(w, "e")) return out + "d";
  if (consonant_y_ending(w)) {
    out.pop_back();
    return out + "ied";
  }
  if (doubles_final_consonant(w)) return out + w.back() + "ed";
  return out + "ed";
}

std::string regular_gerund(std::string_view w) {
  std::string out(w);
  if (ends_with(w, "e") && !ends_with(w, "ee")) {
    out.pop_back();
    return out + "ing";
  }
  if (doubles_final_consonant(w)) return out + w.back() + "ing";
  return out + "ing";
}

}  // namespace

Pos Pos::from_tag(std::string_view tag) {
  Pos pos;
  pos.tag_ = lower(tag);
  if (pos.tag_ == "v") {
    pos.kind_ = PosKind::kVerb;
  } else if (pos.tag_ == "n") {
    pos.kind_ = PosKind::kNoun;
  } else if (pos.tag_ == "a") {
    pos.kind_ = PosKind::kAdjective;
  } else if (pos.tag_ == "adv") {
    pos.kind_ = PosKind::kAdverb;
  } else if (pos.tag_ == "prep") {
    pos.kind_ = PosKind::kPreposition;
  } else if (pos.tag_ == "num") {
    pos.kind_ = PosKind::kNumeral;
  } else {
    pos.kind_ = PosKind::kOther;
  }
  return pos;
}

bool Pos::inflectable() const {
  switch (kind_) {
    case PosKind::kVerb:
    case PosKind::kNoun:
    case PosKind::kAdjective:
    case PosKind::kAdverb:
      return true;
    default:
      return false;
  }
}

FeatureBundle FeatureBundle::noun(NounNumber n) {
  FeatureBundle b;
  b.pos = Pos::from_tag("n");
  b.number = n;
  return b;
}

FeatureBundle FeatureBundle::verb(VerbForm f) {
  FeatureBundle b;
  b.pos = Pos::from_tag("v");
  b.verb_form = f;
  return b;
}

FeatureBundle FeatureBundle::uninflected(Pos pos) {
  FeatureBundle b;
  b.pos = std::move(pos);
  return b;
}

std::string FeatureBundle::feature_name() const {
  if (number) return to_string(*number);
  if (verb_form) return to_string(*verb_form);
  return "none";
}

const char* to_string(NounNumber n) {
  return n == NounNumber::kSingular ? "singular" : "plural";
}

const char* to_string(VerbForm f) {
  switch (f) {
    case VerbForm::kBase: return "base";
    case VerbForm::kThirdSg: return "third_sg";
    case VerbForm::kPast: return "past";
    case VerbForm::kPastParticiple: return "past_participle";
    case VerbForm::kGerund: return "gerund";
  }
  return "?";
}

std::optional<VerbForm> verb_form_from_string(std::string_view s) {
  if (s == "base") return VerbForm::kBase;
  if (s == "third_sg") return VerbForm::kThirdSg;
  if (s == "past") return VerbForm::kPast;
  if (s == "past_participle") return VerbForm::kPastParticiple;
  if (s == "gerund") return VerbForm::kGerund;
  return std::nullopt;
}

void IrregularLexicon::add_noun(std::string lemma, std::string plural) {
  nouns_[lower(lemma)] = std::move(plural);
}

void IrregularLexicon::add_verb(std::string lemma, VerbForms forms) {
  verbs_[lower(lemma)] = std::move(forms);
}

void IrregularLexicon::merge_from(const IrregularLexicon& overlay) {
  for (const auto& [lemma, plural] : overlay.nouns_) nouns_[lemma] = plural;
  for (const auto& [lemma, forms] : overlay.verbs_) verbs_[lemma] = forms;
}

const std::string* IrregularLexicon::noun_plural(std::string_view lemma) const {
  auto it = nouns_.find(std::string(lemma));
  return it == nouns_.end() ? nullptr : &it->second;
}

const std::string* IrregularLexicon::verb_form(std::string_view lemma,
                                               VerbForm form) const {
  auto it = verbs_.find(std::string(lemma));
  if (it == verbs_.end()) return nullptr;
  auto fit = it->second.find(form);
  if (fit != it->second.end()) return &fit->second;
  // Regular verbs never distinguish past from participle; irregular
  // entries may list just the past and share it.
  if (form == VerbForm::kPastParticiple) {
    fit = it->second.find(VerbForm::kPast);
    if (fit != it->second.end()) return &fit->second;
  }
  return nullptr;
}

bool IrregularLexicon::has_noun(std::string_view lemma) const {
  return nouns_.count(std::string(lemma)) > 0;
}

bool IrregularLexicon::has_verb(std::string_view lemma) const {
  return verbs_.count(std::string(lemma)) > 0;
}

IrregularLexicon IrregularLexicon::from_jsonl(std::istream& in) {
  IrregularLexicon lex;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json record;
    try {
      record = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError(std::string("irregulars: ") + e.what(), lineno);
    }
    if (!record.contains("lemma") || !record.contains("pos") ||
        !record.contains("forms")) {
      throw ParseError("irregulars: record needs lemma, pos, forms", lineno);
    }
    const std::string lemma = record["lemma"].get<std::string>();
    const std::string pos = record["pos"].get<std::string>();
    const json& forms = record["forms"];
    if (lemma.empty()) throw ParseError("irregulars: empty lemma", lineno);
    if (pos == "n") {
      if (!forms.contains("plural") || forms["plural"].get<std::string>().empty()) {
        throw ParseError("irregulars: noun entry needs a non-empty forms.plural",
                         lineno);
      }
      lex.add_noun(lemma, forms["plural"].get<std::string>());
    } else if (pos == "v") {
      VerbForms vf;
      for (const auto& [key, value] : forms.items()) {
        auto form = verb_form_from_string(key);
        if (!form) throw ParseError("irregulars: unknown verb form " + key, lineno);
        if (value.get<std::string>().empty()) {
          throw ParseError("irregulars: empty form for " + key, lineno);
        }
        vf[*form] = value.get<std::string>();
      }
      if (vf.empty()) throw ParseError("irregulars: empty forms map", lineno);
      lex.add_verb(lemma, std::move(vf));
    } else {
      throw ParseError("irregulars: pos must be n or v", lineno);
    }
  }
  return lex;
}

IrregularLexicon IrregularLexicon::from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open irregulars file: " + path);
  return from_jsonl(in);
}

const IrregularLexicon& IrregularLexicon::builtin() {
  static const IrregularLexicon lex = [] {
    static constexpr std::string_view kData =
#include "frameaug_irregulars_data.inc"
        ;
    std::istringstream in{std::string(kData)};
    return from_jsonl(in);
  }();
  return lex;
}

std::string inflect(std::string_view lemma, const FeatureBundle& features,
                    const IrregularLexicon& irregulars, bool use_irregulars) {
  const std::string low = lower(lemma);
  switch (features.pos.kind()) {
    case PosKind::kNoun: {
      if (!features.number || *features.number == NounNumber::kSingular) {
        return std::string(lemma);
      }
      if (use_irregulars) {
        if (const std::string* p = irregulars.noun_plural(low)) return *p;
      }
      return regular_plural(low);
    }
    case PosKind::kVerb: {
      VerbForm form = features.verb_form.value_or(VerbForm::kBase);
      if (form == VerbForm::kBase) return std::string(lemma);
      if (use_irregulars) {
        if (const std::string* p = irregulars.verb_form(low, form)) return *p;
      }
      switch (form) {
        case VerbForm::kThirdSg:
          return regular_plural(low);
        case VerbForm::kPast:
        case VerbForm::kPastParticiple:
          return regular_past(low);
        case VerbForm::kGerund:
          return regular_gerund(low);
        default:
          return std::string(lemma);
      }
    }
    default:
      // Adjectives, adverbs and everything else carry no inflection.
      return std::string(lemma);
  }
}

FeatureBundle analyze(std::string_view token, std::string_view lemma, const Pos& pos,
                      const IrregularLexicon& irregulars) {
  if (token.empty()) throw FormMismatch("empty token");
  const std::string tok = lower(token);

  auto matches = [&](const FeatureBundle& bundle) {
    return lower(inflect(lemma, bundle, irregulars, true)) == tok ||
           lower(inflect(lemma, bundle, irregulars, false)) == tok;
  };

  std::vector<FeatureBundle> candidates;
  switch (pos.kind()) {
    case PosKind::kNoun:
      candidates = {FeatureBundle::noun(NounNumber::kSingular),
                    FeatureBundle::noun(NounNumber::kPlural)};
      break;
    case PosKind::kVerb:
      candidates = {FeatureBundle::verb(VerbForm::kBase),
                    FeatureBundle::verb(VerbForm::kThirdSg),
                    FeatureBundle::verb(VerbForm::kPast),
                    FeatureBundle::verb(VerbForm::kPastParticiple),
                    FeatureBundle::verb(VerbForm::kGerund)};
      break;
    case PosKind::kAdjective:
    case PosKind::kAdverb:
      candidates = {FeatureBundle::uninflected(pos)};
      break;
    default:
      throw FormMismatch("part of speech '" + pos.tag() + "' is not analyzable");
  }

  for (const FeatureBundle& bundle : candidates) {
    if (matches(bundle)) return bundle;
  }
  throw FormMismatch("no inflection of '" + std::string(lemma) + "' yields '" +
                     std::string(token) + "'");
}

std::string match_form(std::string_view sister_token, std::string_view sister_lemma,
                       std::string_view new_lemma, const Pos& pos,
                       const IrregularLexicon& irregulars, bool use_irregulars) {
  FeatureBundle bundle = analyze(sister_token, sister_lemma, pos, irregulars);
  std::string out = inflect(new_lemma, bundle, irregulars, use_irregulars);
  if (!out.empty() && !sister_token.empty() &&
      std::isupper(static_cast<unsigned char>(sister_token.front()))) {
    out.front() = static_cast<char>(std::toupper(static_cast<unsigned char>(out.front())));
  }
  return out;
}

}  // namespace frameaug
