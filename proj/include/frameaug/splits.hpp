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

// Leakage-safe experiment construction: strip the lexicographic
// annotation of N randomly chosen LUs, keep it aside as gold, and rebuild
// it with the augmenter against the stripped corpus.

#ifndef FRAMEAUG_SPLITS_H_
#define FRAMEAUG_SPLITS_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "frameaug/augment.hpp"
#include "frameaug/corpus_model.hpp"

namespace frameaug {

struct HoldoutPlan {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  // Frame-qualified "Frame/lemma.pos" names, sorted.
  std::vector<std::string> held_out;
  // Ids of the lexicographic sets of the held-out LUs, sorted. Full-text
  // sets are never stripped.
  std::vector<std::string> stripped_ids;

  bool saturated() const { return held_out.size() < n; }
};

std::string qualified_lu_name(std::string_view frame, std::string_view lu_name);
std::pair<std::string, std::string> split_qualified_lu_name(std::string_view qualified);

// Samples n LUs without replacement from the lexicographically annotated
// LUs, sorted by (frame, name), using SplitMix64(seed) and a partial
// Fisher-Yates shuffle (j = i + next() % (len - i)). When fewer than n
// LUs are available all of them are taken (plan.saturated()).
HoldoutPlan plan_holdout(const Lexicon& lexicon, const Corpus& corpus, std::size_t n,
                         std::uint64_t seed);

// Splits the corpus into (baseline = corpus minus stripped ids, stripped
// gold sets). Throws PlanMismatch when an id is absent or not a
// lexicographic set.
std::pair<Corpus, Corpus> apply_holdout(const Corpus& corpus, const HoldoutPlan& plan);

struct ExperimentResult {
  HoldoutPlan plan;
  Corpus baseline;        // training corpus with held-out LUs emptied
  Corpus stripped_gold;   // what was removed, kept as reference
  Corpus augmented;       // baseline plus re-generated annotation
  std::vector<AugmentationRecord> records;  // the re-generated sets
  AugmentStats stats;
};

// plan + apply + augment restricted to the held-out LUs. Sisters are
// selected against the baseline corpus, so a stripped LU can never serve
// as its own sister.
ExperimentResult build_experiment(const Lexicon& lexicon, const Corpus& corpus,
                                  std::size_t n, std::uint64_t seed,
                                  const AugmentOptions& options = {});

// plan.json: {"seed", "n", "held_out": [...], "stripped_ids": [...]}.
std::string plan_to_json(const HoldoutPlan& plan);
HoldoutPlan plan_from_json(const std::string& text);

}  // namespace frameaug

#endif  // FRAMEAUG_SPLITS_H_
