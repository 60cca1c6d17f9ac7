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

// Test-only brute-force oracles. These recompute augmentation decisions
// with plain scans over the raw data, independent of the library's
// indexes and pipeline, so the tests can check the real implementation
// against first principles.

#ifndef FRAMEAUG_TESTS_ORACLES_H_
#define FRAMEAUG_TESTS_ORACLES_H_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frameaug/corpus_model.hpp"

namespace frameaug {
namespace oracles {

using LuKey = std::pair<std::string, std::string>;  // (frame, lu name)

inline std::map<LuKey, std::size_t> count_sets(const Corpus& corpus) {
  std::map<LuKey, std::size_t> counts;
  for (const AnnotationSet& set : corpus.sets()) {
    ++counts[{set.frame, set.lu_name}];
  }
  return counts;
}

// Every LU that no annotation set mentions, by linear scan.
inline std::vector<LuKey> empty_lus(const Lexicon& lexicon, const Corpus& corpus) {
  const auto counts = count_sets(corpus);
  std::vector<LuKey> empty;
  for (const Frame& frame : lexicon.frames()) {
    for (const LexicalUnit& lu : frame.lus()) {
      if (counts.count({frame.name(), lu.name}) == 0) {
        empty.push_back({frame.name(), lu.name});
      }
    }
  }
  std::sort(empty.begin(), empty.end());
  return empty;
}

// Arg-max sister with the documented tie-break, recomputed from scratch.
inline std::optional<std::pair<std::string, std::size_t>> sister_of(
    const Lexicon& lexicon, const Corpus& corpus, const LuKey& empty) {
  const Frame* frame = lexicon.find(empty.first);
  if (frame == nullptr) return std::nullopt;
  const LexicalUnit* empty_lu = frame->find_lu(empty.second);
  if (empty_lu == nullptr || is_mwe(*empty_lu) || !empty_lu->pos.inflectable()) {
    return std::nullopt;
  }
  const auto counts = count_sets(corpus);
  std::optional<std::pair<std::string, std::size_t>> best;
  for (const LexicalUnit& candidate : frame->lus()) {
    if (candidate.name == empty.second || is_mwe(candidate) ||
        !(candidate.pos == empty_lu->pos)) {
      continue;
    }
    auto it = counts.find({empty.first, candidate.name});
    if (it == counts.end() || it->second == 0) continue;
    if (!best || it->second > best->second ||
        (it->second == best->second && candidate.name < best->first)) {
      best = {candidate.name, it->second};
    }
  }
  return best;
}

}  // namespace oracles
}  // namespace frameaug

#endif  // FRAMEAUG_TESTS_ORACLES_H_
