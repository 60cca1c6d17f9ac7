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

#include "frameaug/splits.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

#include <json.hpp>

#include "frameaug/rng.hpp"

namespace frameaug {

namespace {
using ordered_json = nlohmann::ordered_json;
}

std::string qualified_lu_name(std::string_view frame, std::string_view lu_name) {
  return std::string(frame) + "/" + std::string(lu_name);
}

std::pair<std::string, std::string> split_qualified_lu_name(std::string_view qualified) {
  auto slash = qualified.find('/');
  if (slash == std::string_view::npos) {
    throw ParseError("qualified LU name '" + std::string(qualified) +
                     "' is not of the form Frame/lemma.pos");
  }
  return {std::string(qualified.substr(0, slash)),
          std::string(qualified.substr(slash + 1))};
}

HoldoutPlan plan_holdout(const Lexicon& lexicon, const Corpus& corpus, std::size_t n,
                         std::uint64_t seed) {
  // LUs known to the lexicon with at least one lexicographic set, sorted
  // by (frame, name).
  std::set<std::pair<std::string, std::string>> annotated;
  for (const AnnotationSet& set : corpus.sets()) {
    if (set.source == AnnotationSource::kLexicographic &&
        lexicon.find_lu(set.frame, set.lu_name) != nullptr) {
      annotated.insert({set.frame, set.lu_name});
    }
  }
  std::vector<std::pair<std::string, std::string>> lus(annotated.begin(),
                                                       annotated.end());

  const std::size_t take = std::min(n, lus.size());
  SplitMix64 rng(seed);
  for (std::size_t i = 0; i < take; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.bounded(lus.size() - i));
    std::swap(lus[i], lus[j]);
  }
  lus.resize(take);
  std::sort(lus.begin(), lus.end());

  HoldoutPlan plan;
  plan.seed = seed;
  plan.n = n;
  for (const auto& [frame, lu] : lus) {
    plan.held_out.push_back(qualified_lu_name(frame, lu));
  }
  std::set<std::pair<std::string, std::string>> held(lus.begin(), lus.end());
  for (const AnnotationSet& set : corpus.sets()) {
    if (set.source == AnnotationSource::kLexicographic &&
        held.count({set.frame, set.lu_name}) > 0) {
      plan.stripped_ids.push_back(set.id);
    }
  }
  std::sort(plan.stripped_ids.begin(), plan.stripped_ids.end());
  return plan;
}

std::pair<Corpus, Corpus> apply_holdout(const Corpus& corpus, const HoldoutPlan& plan) {
  std::unordered_set<std::string> stripped(plan.stripped_ids.begin(),
                                           plan.stripped_ids.end());
  for (const std::string& id : plan.stripped_ids) {
    const AnnotationSet* set = corpus.find(id);
    if (set == nullptr) {
      throw PlanMismatch("plan strips unknown annotation id '" + id + "'");
    }
    if (set->source != AnnotationSource::kLexicographic) {
      throw PlanMismatch("plan would strip non-lexicographic set '" + id + "'");
    }
  }
  Corpus baseline;
  Corpus gold;
  for (const AnnotationSet& set : corpus.sets()) {
    if (stripped.count(set.id) > 0) {
      gold.add(set);
    } else {
      baseline.add(set);
    }
  }
  return {std::move(baseline), std::move(gold)};
}

ExperimentResult build_experiment(const Lexicon& lexicon, const Corpus& corpus,
                                  std::size_t n, std::uint64_t seed,
                                  const AugmentOptions& options) {
  ExperimentResult result;
  result.plan = plan_holdout(lexicon, corpus, n, seed);
  std::tie(result.baseline, result.stripped_gold) = apply_holdout(corpus, result.plan);

  std::set<std::pair<std::string, std::string>> held;
  for (const std::string& name : result.plan.held_out) {
    held.insert(split_qualified_lu_name(name));
  }
  AugmentResult aug = augment_corpus(lexicon, result.baseline, options, &held);
  result.stats = aug.stats;
  result.records = std::move(aug.records);

  for (const AnnotationSet& set : result.baseline.sets()) {
    result.augmented.add(set);
  }
  for (const AugmentationRecord& record : result.records) {
    result.augmented.add(record.annotation);
  }
  return result;
}

std::string plan_to_json(const HoldoutPlan& plan) {
  ordered_json j;
  j["seed"] = plan.seed;
  j["n"] = plan.n;
  j["held_out"] = plan.held_out;
  j["stripped_ids"] = plan.stripped_ids;
  return j.dump(2) + "\n";
}

HoldoutPlan plan_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::exception& e) {
    throw ParseError(std::string("plan: ") + e.what());
  }
  HoldoutPlan plan;
  try {
    plan.seed = j.at("seed").get<std::uint64_t>();
    plan.n = j.at("n").get<std::size_t>();
    plan.held_out = j.at("held_out").get<std::vector<std::string>>();
    plan.stripped_ids = j.at("stripped_ids").get<std::vector<std::string>>();
  } catch (const ordered_json::exception& e) {
    throw ParseError(std::string("plan: ") + e.what());
  }
  return plan;
}

}  // namespace frameaug
