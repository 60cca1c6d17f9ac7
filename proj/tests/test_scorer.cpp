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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "frameaug/ingest.hpp"
#include "frameaug/rng.hpp"
#include "frameaug/scorer.hpp"

namespace frameaug {
namespace {

const std::string kFixtures = FRAMEAUG_FIXTURE_DIR;
constexpr double kTol = 1e-9;

AnnotationSet ann(const std::string& id, const std::string& frame,
                  std::vector<FeSpan> fes) {
  AnnotationSet set;
  set.id = id;
  set.frame = frame;
  set.lu_name = "x.v";
  set.sentence = "irrelevant for scoring .";
  set.target = {0, 10};
  set.fes = std::move(fes);
  return set;
}

TEST_CASE("gold against itself is perfect") {
  const Lexicon lexicon = load_lexicon(kFixtures + "/main/lexicon.jsonl");
  const CorpusLoad load = load_corpus(kFixtures + "/main/corpus.jsonl", lexicon);
  const Corpus& gold = load.corpus;

  const FrameIdResult frame_id = score_frame_id(gold, gold);
  CHECK(frame_id.correct == gold.size());
  CHECK(frame_id.f1 == doctest::Approx(1.0).epsilon(kTol));

  const Prf arg_id = score_arg_id(gold, gold);
  CHECK(arg_id.precision == doctest::Approx(1.0).epsilon(kTol));
  CHECK(arg_id.recall == doctest::Approx(1.0).epsilon(kTol));
  CHECK(arg_id.f1 == doctest::Approx(1.0).epsilon(kTol));
  CHECK(arg_id.fp == 0);
  CHECK(arg_id.fn == 0);

  const ScoreReport report = score_corpora(gold, gold);
  CHECK(report.frame_id.f1 == doctest::Approx(1.0).epsilon(kTol));
  for (const auto& row : report.per_frame) {
    CHECK(row.arg_id.f1 == doctest::Approx(1.0).epsilon(kTol));
    CHECK(row.frame_id.f1 == doctest::Approx(1.0).epsilon(kTol));
  }
}

TEST_CASE("frame id counts exact frame matches") {
  Corpus gold;
  Corpus pred;
  const char* frames[] = {"A", "B", "C", "D", "E"};
  for (int i = 0; i < 5; ++i) {
    gold.add(ann("s" + std::to_string(i), frames[i], {}));
    // One of five predictions names the wrong frame.
    pred.add(ann("s" + std::to_string(i), i == 3 ? "Wrong" : frames[i], {}));
  }
  const FrameIdResult result = score_frame_id(gold, pred);
  CHECK(result.total == 5);
  CHECK(result.correct == 4);
  CHECK(result.f1 == doctest::Approx(0.8).epsilon(kTol));
}

TEST_CASE("arg id: missing fe halves recall") {
  Corpus gold;
  gold.add(ann("s1", "Commerce_buy",
               {{"Buyer", {0, 5}}, {"Goods", {12, 17}}}));
  Corpus pred;
  pred.add(ann("s1", "Commerce_buy", {{"Buyer", {0, 5}}}));

  const Prf prf = score_arg_id(gold, pred);
  CHECK(prf.tp == 1);
  CHECK(prf.fp == 0);
  CHECK(prf.fn == 1);
  CHECK(prf.precision == doctest::Approx(1.0).epsilon(kTol));
  CHECK(prf.recall == doctest::Approx(0.5).epsilon(kTol));
  CHECK(prf.f1 == doctest::Approx(2.0 / 3.0).epsilon(kTol));
}

TEST_CASE("arg id: one spurious fe over a perfect set of three") {
  Corpus gold;
  gold.add(ann("s1", "F", {{"A", {0, 2}}, {"B", {3, 7}}, {"C", {8, 12}}}));
  Corpus pred;
  pred.add(ann("s1", "F",
               {{"A", {0, 2}}, {"B", {3, 7}}, {"C", {8, 12}}, {"D", {13, 16}}}));

  const Prf prf = score_arg_id(gold, pred);
  CHECK(prf.tp == 3);
  CHECK(prf.fp == 1);
  CHECK(prf.fn == 0);
  CHECK(prf.precision == doctest::Approx(0.75).epsilon(kTol));
  CHECK(prf.recall == doctest::Approx(1.0).epsilon(kTol));
  CHECK(prf.f1 == doctest::Approx(6.0 / 7.0).epsilon(kTol));
}

TEST_CASE("exact match requires both name and span") {
  Corpus gold;
  gold.add(ann("s1", "F", {{"A", {0, 2}}}));

  Corpus wrong_name;
  wrong_name.add(ann("s1", "F", {{"B", {0, 2}}}));
  CHECK(score_arg_id(gold, wrong_name).tp == 0);

  Corpus wrong_span;
  wrong_span.add(ann("s1", "F", {{"A", {0, 3}}}));
  CHECK(score_arg_id(gold, wrong_span).tp == 0);
}

TEST_CASE("zero-denominator conventions") {
  SUBCASE("both sides empty") {
    Corpus gold;
    gold.add(ann("s1", "F", {}));
    Corpus pred;
    pred.add(ann("s1", "F", {}));
    const Prf prf = score_arg_id(gold, pred);
    CHECK(prf.precision == doctest::Approx(1.0).epsilon(kTol));
    CHECK(prf.recall == doctest::Approx(1.0).epsilon(kTol));
    CHECK(prf.f1 == doctest::Approx(1.0).epsilon(kTol));
  }
  SUBCASE("empty prediction against real gold") {
    Corpus gold;
    gold.add(ann("s1", "F", {{"A", {0, 2}}}));
    Corpus pred;
    pred.add(ann("s1", "F", {}));
    const Prf prf = score_arg_id(gold, pred);
    CHECK(prf.precision == doctest::Approx(0.0).epsilon(kTol));
    CHECK(prf.recall == doctest::Approx(0.0).epsilon(kTol));
    CHECK(prf.f1 == doctest::Approx(0.0).epsilon(kTol));
  }
}

TEST_CASE("strict pipeline mode forfeits fes under a wrong frame") {
  Corpus gold;
  gold.add(ann("s1", "Earnings_and_losses", {{"Earner", {0, 4}}, {"Gain", {5, 9}}}));
  Corpus pred;
  // The frame is wrong but the FEs line up exactly.
  pred.add(ann("s1", "Manufacturing", {{"Earner", {0, 4}}, {"Gain", {5, 9}}}));

  // Default ArgID assumes gold frames and accepts the spans.
  const Prf loose = score_arg_id(gold, pred, false);
  CHECK(loose.tp == 2);
  CHECK(loose.f1 == doctest::Approx(1.0).epsilon(kTol));

  // Strict coupling: every predicted FE of the annotation is fp.
  const Prf strict = score_arg_id(gold, pred, true);
  CHECK(strict.tp == 0);
  CHECK(strict.fp == 2);
  CHECK(strict.fn == 2);
  CHECK(strict.f1 == doctest::Approx(0.0).epsilon(kTol));

  // FrameID counts the annotation as incorrect either way.
  CHECK(score_frame_id(gold, pred).correct == 0);
}

TEST_CASE("micro counts add up") {
  Corpus gold;
  gold.add(ann("s1", "F", {{"A", {0, 2}}, {"B", {3, 7}}}));
  gold.add(ann("s2", "F", {{"C", {8, 12}}}));
  Corpus pred;
  pred.add(ann("s1", "F", {{"A", {0, 2}}, {"X", {13, 16}}}));
  pred.add(ann("s2", "F", {}));

  const Prf prf = score_arg_id(gold, pred);
  CHECK(prf.tp + prf.fn == 3);  // total gold FEs
  CHECK(prf.tp + prf.fp == 2);  // total predicted FEs
}

TEST_CASE("symmetry: precision of (g, p) equals recall of (p, g)") {
  SplitMix64 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    Corpus gold;
    Corpus pred;
    const std::size_t n = 1 + rng.bounded(5);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<FeSpan> g;
      std::vector<FeSpan> p;
      std::size_t cursor = 0;
      const std::size_t fes = rng.bounded(4);
      for (std::size_t f = 0; f < fes; ++f) {
        const Span span{cursor, cursor + 1 + rng.bounded(3)};
        cursor = span.end + 1;
        const std::string name(1, static_cast<char>('A' + rng.bounded(3)));
        if (rng.bounded(3) != 0) g.push_back({name, span});
        if (rng.bounded(3) != 0) p.push_back({name, span});
      }
      gold.add(ann("s" + std::to_string(s), "F", std::move(g)));
      pred.add(ann("s" + std::to_string(s), "F", std::move(p)));
    }
    const Prf forward = score_arg_id(gold, pred);
    const Prf backward = score_arg_id(pred, gold);
    CHECK(forward.precision == doctest::Approx(backward.recall).epsilon(kTol));
    CHECK(forward.recall == doctest::Approx(backward.precision).epsilon(kTol));
  }
}

TEST_CASE("annotation order does not change the metrics") {
  Corpus gold;
  gold.add(ann("s1", "F", {{"A", {0, 2}}}));
  gold.add(ann("s2", "G", {{"B", {3, 7}}}));
  gold.add(ann("s3", "F", {{"C", {8, 12}}}));
  Corpus pred_forward;
  pred_forward.add(ann("s1", "F", {{"A", {0, 2}}}));
  pred_forward.add(ann("s2", "F", {}));
  pred_forward.add(ann("s3", "F", {{"C", {8, 12}}}));
  Corpus pred_reversed;
  pred_reversed.add(ann("s3", "F", {{"C", {8, 12}}}));
  pred_reversed.add(ann("s2", "F", {}));
  pred_reversed.add(ann("s1", "F", {{"A", {0, 2}}}));

  const ScoreReport a = score_corpora(gold, pred_forward);
  const ScoreReport b = score_corpora(gold, pred_reversed);
  CHECK(a.frame_id.correct == b.frame_id.correct);
  CHECK(a.arg_id.tp == b.arg_id.tp);
  CHECK(a.arg_id.fn == b.arg_id.fn);
  CHECK(report_to_json(a) == report_to_json(b));
}

TEST_CASE("misaligned corpora raise with the offending keys") {
  Corpus gold;
  gold.add(ann("s1", "F", {}));
  gold.add(ann("s2", "F", {}));
  Corpus pred;
  pred.add(ann("s1", "F", {}));
  pred.add(ann("s9", "F", {}));

  try {
    score_frame_id(gold, pred);
    FAIL("expected ScoreAlignmentError");
  } catch (const ScoreAlignmentError& e) {
    REQUIRE(e.missing().size() == 1);
    REQUIRE(e.spurious().size() == 1);
    CHECK(e.missing()[0].find("s2") != std::string::npos);
    CHECK(e.spurious()[0].find("s9") != std::string::npos);
  }

  // A prediction for the right id at the wrong target span also fails.
  Corpus shifted;
  shifted.add(ann("s1", "F", {}));
  AnnotationSet moved = ann("s2", "F", {});
  moved.target = {0, 4};
  shifted.add(moved);
  CHECK_THROWS_AS(score_arg_id(gold, shifted), ScoreAlignmentError);
}

TEST_CASE("report renders json and a fixed-width table") {
  Corpus gold;
  gold.add(ann("s1", "Commerce_buy", {{"Buyer", {0, 5}}, {"Goods", {12, 17}}}));
  Corpus pred;
  pred.add(ann("s1", "Commerce_buy", {{"Buyer", {0, 5}}}));

  const ScoreReport report = score_corpora(gold, pred);
  const std::string json = report_to_json(report);
  CHECK(json.find("\"frame_id\"") != std::string::npos);
  CHECK(json.find("\"per_frame\"") != std::string::npos);

  const std::string table = report_to_table(report);
  CHECK(table.find("overall") != std::string::npos);
  CHECK(table.find("Commerce_buy") != std::string::npos);
  CHECK(table.find("0.500") != std::string::npos);  // recall column
}

}  // namespace
}  // namespace frameaug
