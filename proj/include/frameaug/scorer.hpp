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

// Evaluation metrics for frame-semantic role labeling: frame
// identification accuracy over gold targets and exact-match micro P/R/F1
// for argument identification.

#ifndef FRAMEAUG_SCORER_H_
#define FRAMEAUG_SCORER_H_

#include <cstdint>
#include <string>
#include <vector>

#include "frameaug/corpus_model.hpp"

namespace frameaug {

struct Prf {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;

  // Applies the zero-denominator convention: a metric whose denominator
  // is zero is 1.0 when the opposite set is also empty, else 0.0.
  static Prf from_counts(std::uint64_t tp, std::uint64_t fp, std::uint64_t fn);
};

struct FrameIdResult {
  std::uint64_t correct = 0;
  std::uint64_t total = 0;
  double f1 = 0.0;  // one prediction per gold target, so accuracy == F1
};

// Both scorers align annotations by (id, target span) and require the
// alignment to be one-to-one; they throw ScoreAlignmentError listing the
// missing and spurious keys otherwise.

FrameIdResult score_frame_id(const Corpus& gold, const Corpus& pred);

// Exact (fe_name, span) matching, micro-averaged over the corpus. By
// default frames are assumed gold (pipeline scoring with oracle frames);
// with strict_pipeline set, annotations whose predicted frame differs
// from gold contribute all their predicted FEs as fp and gold FEs as fn.
Prf score_arg_id(const Corpus& gold, const Corpus& pred, bool strict_pipeline = false);

struct ScoreReport {
  FrameIdResult frame_id;
  Prf arg_id;
  bool strict_pipeline = false;

  struct PerFrame {
    std::string frame;
    FrameIdResult frame_id;
    Prf arg_id;
  };
  std::vector<PerFrame> per_frame;  // sorted by frame name
};

ScoreReport score_corpora(const Corpus& gold, const Corpus& pred,
                          bool strict_pipeline = false);

std::string report_to_json(const ScoreReport& report);
// Fixed-width table: one overall row plus one row per frame.
std::string report_to_table(const ScoreReport& report);

}  // namespace frameaug

#endif  // FRAMEAUG_SCORER_H_
