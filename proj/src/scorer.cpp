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

#include "frameaug/scorer.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace frameaug {

namespace {

using ordered_json = nlohmann::ordered_json;

// Annotations align on (sentence id, target span).
using AlignKey = std::tuple<std::string, std::size_t, std::size_t>;

std::string key_to_string(const AlignKey& key) {
  return std::get<0>(key) + "@[" + std::to_string(std::get<1>(key)) + "," +
         std::to_string(std::get<2>(key)) + ")";
}

std::map<AlignKey, const AnnotationSet*> index_by_key(const Corpus& corpus) {
  std::map<AlignKey, const AnnotationSet*> index;
  for (const AnnotationSet& set : corpus.sets()) {
    index.emplace(AlignKey{set.id, set.target.start, set.target.end}, &set);
  }
  return index;
}

// Aligned (gold, pred) pairs; throws when the alignment is not one-to-one.
std::vector<std::pair<const AnnotationSet*, const AnnotationSet*>> align(
    const Corpus& gold, const Corpus& pred) {
  auto gold_index = index_by_key(gold);
  auto pred_index = index_by_key(pred);
  std::vector<std::string> missing;
  std::vector<std::string> spurious;
  for (const auto& [key, set] : gold_index) {
    if (pred_index.count(key) == 0) missing.push_back(key_to_string(key));
  }
  for (const auto& [key, set] : pred_index) {
    if (gold_index.count(key) == 0) spurious.push_back(key_to_string(key));
  }
  if (!missing.empty() || !spurious.empty()) {
    throw ScoreAlignmentError(std::move(missing), std::move(spurious));
  }
  std::vector<std::pair<const AnnotationSet*, const AnnotationSet*>> pairs;
  pairs.reserve(gold_index.size());
  for (const auto& [key, set] : gold_index) {
    pairs.emplace_back(set, pred_index.at(key));
  }
  return pairs;
}

struct Counts {
  std::uint64_t tp = 0;
  std::uint64_t fp = 0;
  std::uint64_t fn = 0;

  Counts& operator+=(const Counts& other) {
    tp += other.tp;
    fp += other.fp;
    fn += other.fn;
    return *this;
  }
};

// Exact-match FE pairing for one aligned annotation: sort both sides by
// (span, name) and pair off equal elements one-to-one.
Counts count_fes(const AnnotationSet& gold, const AnnotationSet& pred,
                 bool strict_pipeline) {
  Counts counts;
  if (strict_pipeline && gold.frame != pred.frame) {
    // A wrong frame forfeits every FE of the annotation.
    counts.fp = pred.fes.size();
    counts.fn = gold.fes.size();
    return counts;
  }
  auto key = [](const FeSpan& fe) {
    return std::tuple(fe.span.start, fe.span.end, fe.fe_name);
  };
  std::vector<FeSpan> g = gold.fes;
  std::vector<FeSpan> p = pred.fes;
  auto less = [&](const FeSpan& a, const FeSpan& b) { return key(a) < key(b); };
  std::sort(g.begin(), g.end(), less);
  std::sort(p.begin(), p.end(), less);
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < g.size() && j < p.size()) {
    if (key(g[i]) == key(p[j])) {
      ++counts.tp;
      ++i;
      ++j;
    } else if (key(g[i]) < key(p[j])) {
      ++counts.fn;
      ++i;
    } else {
      ++counts.fp;
      ++j;
    }
  }
  counts.fn += g.size() - i;
  counts.fp += p.size() - j;
  return counts;
}

}  // namespace

ScoreAlignmentError::ScoreAlignmentError(std::vector<std::string> missing,
                                         std::vector<std::string> spurious)
    : Error("gold/prediction alignment failed: " + std::to_string(missing.size()) +
            " missing, " + std::to_string(spurious.size()) + " spurious"),
      missing_(std::move(missing)),
      spurious_(std::move(spurious)) {}

Prf Prf::from_counts(std::uint64_t tp, std::uint64_t fp, std::uint64_t fn) {
  Prf prf;
  prf.tp = tp;
  prf.fp = fp;
  prf.fn = fn;
  const bool no_pred = tp + fp == 0;
  const bool no_gold = tp + fn == 0;
  prf.precision = no_pred ? (no_gold ? 1.0 : 0.0)
                          : static_cast<double>(tp) / static_cast<double>(tp + fp);
  prf.recall = no_gold ? (no_pred ? 1.0 : 0.0)
                       : static_cast<double>(tp) / static_cast<double>(tp + fn);
  prf.f1 = prf.precision + prf.recall == 0.0
               ? 0.0
               : 2.0 * prf.precision * prf.recall / (prf.precision + prf.recall);
  return prf;
}

FrameIdResult score_frame_id(const Corpus& gold, const Corpus& pred) {
  FrameIdResult result;
  for (const auto& [g, p] : align(gold, pred)) {
    ++result.total;
    if (g->frame == p->frame) ++result.correct;
  }
  result.f1 = result.total == 0 ? 1.0
                                : static_cast<double>(result.correct) /
                                      static_cast<double>(result.total);
  return result;
}

Prf score_arg_id(const Corpus& gold, const Corpus& pred, bool strict_pipeline) {
  Counts total;
  for (const auto& [g, p] : align(gold, pred)) {
    total += count_fes(*g, *p, strict_pipeline);
  }
  return Prf::from_counts(total.tp, total.fp, total.fn);
}

ScoreReport score_corpora(const Corpus& gold, const Corpus& pred,
                          bool strict_pipeline) {
  ScoreReport report;
  report.strict_pipeline = strict_pipeline;

  struct FrameAccumulator {
    std::uint64_t correct = 0;
    std::uint64_t total = 0;
    Counts counts;
  };
  std::map<std::string, FrameAccumulator> frames;
  Counts overall;
  std::uint64_t correct = 0;
  std::uint64_t total = 0;
  for (const auto& [g, p] : align(gold, pred)) {
    FrameAccumulator& acc = frames[g->frame];
    ++acc.total;
    ++total;
    if (g->frame == p->frame) {
      ++acc.correct;
      ++correct;
    }
    const Counts counts = count_fes(*g, *p, strict_pipeline);
    acc.counts += counts;
    overall += counts;
  }

  report.frame_id.correct = correct;
  report.frame_id.total = total;
  report.frame_id.f1 =
      total == 0 ? 1.0 : static_cast<double>(correct) / static_cast<double>(total);
  report.arg_id = Prf::from_counts(overall.tp, overall.fp, overall.fn);
  for (const auto& [name, acc] : frames) {
    ScoreReport::PerFrame row;
    row.frame = name;
    row.frame_id.correct = acc.correct;
    row.frame_id.total = acc.total;
    row.frame_id.f1 = acc.total == 0 ? 1.0
                                     : static_cast<double>(acc.correct) /
                                           static_cast<double>(acc.total);
    row.arg_id = Prf::from_counts(acc.counts.tp, acc.counts.fp, acc.counts.fn);
    report.per_frame.push_back(std::move(row));
  }
  return report;
}

namespace {

ordered_json prf_to_json(const Prf& prf) {
  ordered_json j;
  j["precision"] = prf.precision;
  j["recall"] = prf.recall;
  j["f1"] = prf.f1;
  j["tp"] = prf.tp;
  j["fp"] = prf.fp;
  j["fn"] = prf.fn;
  return j;
}

ordered_json frame_id_to_json(const FrameIdResult& r) {
  ordered_json j;
  j["correct"] = r.correct;
  j["total"] = r.total;
  j["f1"] = r.f1;
  return j;
}

}  // namespace

std::string report_to_json(const ScoreReport& report) {
  ordered_json j;
  j["strict_pipeline"] = report.strict_pipeline;
  j["frame_id"] = frame_id_to_json(report.frame_id);
  j["arg_id"] = prf_to_json(report.arg_id);
  ordered_json per_frame = ordered_json::array();
  for (const auto& row : report.per_frame) {
    ordered_json r;
    r["frame"] = row.frame;
    r["frame_id"] = frame_id_to_json(row.frame_id);
    r["arg_id"] = prf_to_json(row.arg_id);
    per_frame.push_back(std::move(r));
  }
  j["per_frame"] = std::move(per_frame);
  return j.dump(2) + "\n";
}

std::string report_to_table(const ScoreReport& report) {
  std::size_t width = 12;
  for (const auto& row : report.per_frame) {
    width = std::max(width, row.frame.size() + 2);
  }
  std::ostringstream out;
  char line[256];
  std::snprintf(line, sizeof(line), "%-*s %35s %10s\n", static_cast<int>(width), "",
                "ArgID", "FrameID");
  out << line;
  std::snprintf(line, sizeof(line), "%-*s %11s %11s %11s %10s\n",
                static_cast<int>(width), "", "P", "R", "F1", "F1");
  out << line;
  auto emit = [&](const std::string& label, const Prf& prf, const FrameIdResult& fid) {
    std::snprintf(line, sizeof(line), "%-*s %11.3f %11.3f %11.3f %10.3f\n",
                  static_cast<int>(width), label.c_str(), prf.precision, prf.recall,
                  prf.f1, fid.f1);
    out << line;
  };
  emit("overall", report.arg_id, report.frame_id);
  for (const auto& row : report.per_frame) {
    emit(row.frame, row.arg_id, row.frame_id);
  }
  return out.str();
}

}  // namespace frameaug
