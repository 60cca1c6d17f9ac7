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

#include <sstream>

#include "frameaug/augment.hpp"
#include "frameaug/ingest.hpp"
#include "frameaug/utf8.hpp"
#include "oracles.hpp"

namespace frameaug {
namespace {

const std::string kFixtures = FRAMEAUG_FIXTURE_DIR;

struct Loaded {
  Lexicon lexicon;
  Corpus corpus;
};

Loaded load(const std::string& name) {
  Loaded loaded;
  loaded.lexicon = load_lexicon(kFixtures + "/" + name + "/lexicon.jsonl");
  CorpusLoad cl = load_corpus(kFixtures + "/" + name + "/corpus.jsonl", loaded.lexicon);
  REQUIRE(cl.rejected.empty());
  loaded.corpus = std::move(cl.corpus);
  return loaded;
}

LexicalUnit make_lu(const std::string& name, const std::string& frame) {
  auto [lemma, pos] = parse_lu_name(name);
  return LexicalUnit{name, lemma, pos, frame};
}

AnnotationSet make_set(const std::string& id, const std::string& frame,
                       const std::string& lu, const std::string& sentence,
                       Span target, std::vector<FeSpan> fes = {}) {
  AnnotationSet set;
  set.id = id;
  set.frame = frame;
  set.lu_name = lu;
  set.sentence = sentence;
  set.target = target;
  set.fes = std::move(fes);
  return set;
}

TEST_CASE("find_empty_lus matches the brute-force scan") {
  const Loaded fixture = load("main");
  const std::vector<LexicalUnit> empty = find_empty_lus(fixture.lexicon, fixture.corpus);

  std::vector<oracles::LuKey> got;
  for (const LexicalUnit& lu : empty) got.push_back({lu.frame, lu.name});
  CHECK(got == oracles::empty_lus(fixture.lexicon, fixture.corpus));
  CHECK(empty.size() == 7);
  CHECK(got.front() == oracles::LuKey{"Body_movement", "bend.v"});
}

TEST_CASE("find_empty_lus is empty when everything is annotated") {
  const Loaded fixture = load("main");
  Lexicon lexicon;
  Frame& frame = lexicon.add_frame("Wealthiness");
  frame.add_fe({"Person", Coreness::kCore});
  frame.add_lu("poor.a");
  Corpus corpus;
  corpus.add(*fixture.corpus.find("b1"));
  CHECK(find_empty_lus(lexicon, corpus).empty());
}

TEST_CASE("select_sister picks the most annotated same-pos lu") {
  Lexicon lexicon;
  Frame& frame = lexicon.add_frame("F");
  frame.add_fe({"X", Coreness::kCore});
  frame.add_lu("alpha.v");
  frame.add_lu("beta.v");
  frame.add_lu("gamma.v");
  frame.add_lu("landed.a");

  Corpus corpus;
  for (int i = 0; i < 3; ++i) {
    corpus.add(make_set("a" + std::to_string(i), "F", "alpha.v",
                        "They alpha the thing .", {5, 10}));
  }
  for (int i = 0; i < 5; ++i) {
    corpus.add(make_set("b" + std::to_string(i), "F", "beta.v",
                        "They beta the thing .", {5, 9}));
  }

  auto sister = select_sister(make_lu("gamma.v", "F"), lexicon, corpus);
  REQUIRE(sister.has_value());
  CHECK(sister->sister.name == "beta.v");
  CHECK(sister->sister_set_count == 5);
  CHECK(oracles::sister_of(lexicon, corpus, {"F", "gamma.v"})->first == "beta.v");

  // Different POS never pairs: the adjective finds nothing.
  CHECK_FALSE(select_sister(make_lu("landed.a", "F"), lexicon, corpus).has_value());
}

TEST_CASE("select_sister breaks ties by name") {
  Lexicon lexicon;
  Frame& frame = lexicon.add_frame("F");
  frame.add_lu("alpha.v");
  frame.add_lu("beta.v");
  frame.add_lu("gamma.v");
  Corpus corpus;
  for (int i = 0; i < 4; ++i) {
    corpus.add(make_set("a" + std::to_string(i), "F", "alpha.v",
                        "They alpha the thing .", {5, 10}));
    corpus.add(make_set("b" + std::to_string(i), "F", "beta.v",
                        "They beta the thing .", {5, 9}));
  }
  auto sister = select_sister(make_lu("gamma.v", "F"), lexicon, corpus);
  REQUIRE(sister.has_value());
  CHECK(sister->sister.name == "alpha.v");
  CHECK(sister->sister_set_count == 4);
}

TEST_CASE("select_sister refuses mwe on either side") {
  Lexicon lexicon;
  Frame& frame = lexicon.add_frame("F");
  frame.add_lu("give up.v");
  frame.add_lu("gamma.v");
  frame.add_lu("also empty.v");
  Corpus corpus;
  corpus.add(make_set("g1", "F", "give up.v", "They give up the thing .", {5, 12}));

  // The only annotated candidate is an MWE.
  CHECK_FALSE(select_sister(make_lu("gamma.v", "F"), lexicon, corpus).has_value());
  // An MWE empty LU is never augmented.
  CHECK_FALSE(select_sister(make_lu("also empty.v", "F"), lexicon, corpus).has_value());
}

TEST_CASE("rebase_spans arithmetic") {
  SUBCASE("zero delta leaves everything in place") {
    const std::vector<FeSpan> fes = {{"A", {0, 2}}, {"B", {11, 19}}};
    auto [rebased, target] = rebase_spans(fes, {3, 10}, 7);
    CHECK(rebased == fes);
    CHECK(target == Span{3, 10});
  }

  SUBCASE("shrinking target shifts later spans left") {
    // "He stamped his foot ..." with "stamped" -> "bended": delta -1.
    const std::vector<FeSpan> fes = {{"Agent", {0, 2}}, {"Body_part", {11, 19}}};
    auto [rebased, target] = rebase_spans(fes, {3, 10}, 6);
    CHECK(rebased[0] == FeSpan{"Agent", {0, 2}});
    CHECK(rebased[1] == FeSpan{"Body_part", {10, 18}});
    CHECK(target == Span{3, 9});
  }

  SUBCASE("span containing the target stretches") {
    const std::vector<FeSpan> fes = {{"Weapon", {0, 8}}, {"Other", {9, 15}}};
    auto [rebased, target] = rebase_spans(fes, {4, 8}, 7);
    CHECK(rebased[0] == FeSpan{"Weapon", {0, 11}});
    CHECK(rebased[1] == FeSpan{"Other", {12, 18}});
    CHECK(target == Span{4, 11});
  }

  SUBCASE("span equal to the target counts as containing") {
    const std::vector<FeSpan> fes = {{"E", {4, 8}}};
    auto [rebased, target] = rebase_spans(fes, {4, 8}, 2);
    CHECK(rebased[0] == FeSpan{"E", {4, 6}});
    CHECK(target == Span{4, 6});
  }

  SUBCASE("touching spans do not move on the left or do on the right") {
    const std::vector<FeSpan> fes = {{"L", {0, 4}}, {"R", {8, 12}}};
    auto [rebased, target] = rebase_spans(fes, {4, 8}, 6);
    CHECK(rebased[0] == FeSpan{"L", {0, 4}});
    CHECK(rebased[1] == FeSpan{"R", {10, 14}});
    CHECK(target == Span{4, 10});
  }

  SUBCASE("partial overlap raises SpanConflict") {
    CHECK_THROWS_AS(rebase_spans({{"X", {2, 6}}}, {4, 8}, 3), SpanConflict);
    CHECK_THROWS_AS(rebase_spans({{"X", {5, 10}}}, {4, 8}, 3), SpanConflict);
    CHECK_THROWS_AS(rebase_spans({{"X", {5, 7}}}, {4, 8}, 3), SpanConflict);
  }
}

TEST_CASE("augment_lu reproduces the bended example") {
  const Loaded fixture = load("parallel");
  const LexicalUnit bend = make_lu("bend.v", "Body_movement");
  auto assignment = select_sister(bend, fixture.lexicon, fixture.corpus);
  REQUIRE(assignment.has_value());
  CHECK(assignment->sister.name == "stamp.v");

  AugmentOptions options;
  options.use_irregulars = false;
  AugmentStats stats;
  const auto records = augment_lu(*assignment, fixture.corpus, options, &stats);
  REQUIRE(records.size() == 1);
  const AugmentationRecord& record = records[0];
  CHECK(record.annotation.sentence == "He bended his foot into his flying-boot .");
  CHECK(record.annotation.id == "par1::aug::bend.v");
  CHECK(record.annotation.source == AnnotationSource::kAugmented);
  CHECK(record.sister_lu == "stamp.v");
  CHECK(record.source_annotation_id == "par1");
  CHECK(record.inflection.sister_token == "stamped");
  CHECK(record.inflection.produced_token == "bended");
  CHECK(record.inflection.features == FeatureBundle::verb(VerbForm::kPast));

  // FE phrases survive verbatim.
  const AnnotationSet* source = fixture.corpus.find("par1");
  REQUIRE(source != nullptr);
  REQUIRE(record.annotation.fes.size() == source->fes.size());
  for (std::size_t i = 0; i < source->fes.size(); ++i) {
    CHECK(utf8::substr(record.annotation.sentence, record.annotation.fes[i].span.start,
                       record.annotation.fes[i].span.end) ==
          utf8::substr(source->sentence, source->fes[i].span.start,
                       source->fes[i].span.end));
  }
  // With the irregular table on, the same transfer yields "bent".
  options.use_irregulars = true;
  const auto bent = augment_lu(*assignment, fixture.corpus, options, nullptr);
  REQUIRE(bent.size() == 1);
  CHECK(bent[0].annotation.sentence == "He bent his foot into his flying-boot .");
}

TEST_CASE("augment_lu skips unanalyzable sentences and counts them") {
  Lexicon lexicon;
  Frame& frame = lexicon.add_frame("F");
  frame.add_lu("alpha.v");
  frame.add_lu("gamma.v");
  Corpus corpus;
  // Unvalidated corpus: the target text has nothing to do with the lemma.
  corpus.add(make_set("x1", "F", "alpha.v", "They blorped the thing .", {5, 12}));
  auto assignment = select_sister(make_lu("gamma.v", "F"), lexicon, corpus);
  REQUIRE(assignment.has_value());
  AugmentStats stats;
  const auto records = augment_lu(*assignment, corpus, {}, &stats);
  CHECK(records.empty());
  CHECK(stats.skipped_form_mismatch == 1);
  CHECK(stats.sentences_generated == 0);
}

TEST_CASE("augment_corpus matches the exhaustive oracle on the main fixture") {
  const Loaded fixture = load("main");
  const AugmentResult result = augment_corpus(fixture.lexicon, fixture.corpus);

  CHECK(result.stats.empty_lu_count == 7);
  CHECK(result.stats.mwe_excluded_count == 2);
  CHECK(result.stats.no_sister_count == 0);
  CHECK(result.stats.eligible_empty_lu_count == 5);
  CHECK(result.stats.sentences_generated == 15);
  CHECK(result.stats.skipped_form_mismatch == 0);
  CHECK(result.stats.skipped_span_conflict == 0);
  REQUIRE(result.records.size() == 15);

  // Oracle cross-check: per empty LU, the record count equals the oracle
  // sister's set count, and the chosen sister agrees.
  const auto empties = oracles::empty_lus(fixture.lexicon, fixture.corpus);
  std::size_t expected_total = 0;
  for (const auto& key : empties) {
    const auto oracle = oracles::sister_of(fixture.lexicon, fixture.corpus, key);
    std::size_t records_for_lu = 0;
    for (const AugmentationRecord& record : result.records) {
      if (record.annotation.frame == key.first &&
          record.annotation.lu_name == key.second) {
        ++records_for_lu;
        REQUIRE(oracle.has_value());
        CHECK(record.sister_lu == oracle->first);
      }
    }
    expected_total += oracle ? oracle->second : 0;
    CHECK(records_for_lu == (oracle ? oracle->second : 0));
  }
  CHECK(expected_total == result.stats.sentences_generated);

  // The full frozen output, in canonical order, computed independently.
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"a1::aug::bend.v", "He bent his foot into the mud ."},
      {"a2::aug::bend.v", "She bends her feet whenever the band plays ."},
      {"a3::aug::bend.v", "The toddler was bending both feet in fury ."},
      {"d1::aug::torment.v", "She was really tormented by the question ."},
      {"d2::aug::torment.v", "The teacher torments him daily ."},
      {"d3::aug::torment.v", "Loud praise tormented the new recruits ."},
      {"e1::aug::proclaim.v", "She proclaimed that the committee would resign ."},
      {"e2::aug::proclaim.v", "He proclaims the same thing every year ."},
      {"e3::aug::proclaim.v", "Witnesses proclaimed the fire began at noon ."},
      {"b1::aug::rich.a", "He remained a rich man all his life ."},
      {"b2::aug::rich.a", "They met a very rich family by the river ."},
      {"b3::aug::rich.a", "Those rich villagers deserved better ."},
      {"c1::aug::musket.n", "The muskets were hidden under the floor ."},
      {"c2::aug::musket.n", "A musket lay on the table ."},
      {"c3::aug::musket.n", "Snipers cleaned their muskets before dawn ."},
  };
  REQUIRE(result.records.size() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(result.records[i].annotation.id == expected[i].first);
    CHECK(result.records[i].annotation.sentence == expected[i].second);
  }
}

TEST_CASE("augmented output passes validation") {
  const Loaded fixture = load("main");
  const AugmentResult result = augment_corpus(fixture.lexicon, fixture.corpus);
  Corpus augmented;
  for (const AugmentationRecord& record : result.records) {
    augmented.add(record.annotation);
  }
  const ValidationReport report = validate(fixture.lexicon, augmented);
  CHECK(report.errors.empty());
}

TEST_CASE("span contents survive augmentation") {
  const Loaded fixture = load("main");
  const AugmentResult result = augment_corpus(fixture.lexicon, fixture.corpus);
  for (const AugmentationRecord& record : result.records) {
    const AnnotationSet* source = fixture.corpus.find(record.source_annotation_id);
    REQUIRE(source != nullptr);
    const AnnotationSet& out = record.annotation;
    CAPTURE(out.id);

    // Target text equals the produced form.
    CHECK(utf8::substr(out.sentence, out.target.start, out.target.end) ==
          record.inflection.produced_token);

    // The new sentence is prefix + produced + suffix of the source.
    CHECK(out.sentence ==
          std::string(utf8::substr(source->sentence, 0, source->target.start)) +
              record.inflection.produced_token +
              std::string(utf8::substr(source->sentence, source->target.end,
                                       utf8::length(source->sentence))));

    REQUIRE(out.fes.size() == source->fes.size());
    for (std::size_t i = 0; i < out.fes.size(); ++i) {
      const Span& old_span = source->fes[i].span;
      const Span& new_span = out.fes[i].span;
      const bool contains = old_span.start <= source->target.start &&
                            old_span.end >= source->target.end;
      if (contains) {
        // Containing spans keep everything except the replaced token.
        const std::string expected =
            std::string(utf8::substr(source->sentence, old_span.start,
                                     source->target.start)) +
            record.inflection.produced_token +
            std::string(utf8::substr(source->sentence, source->target.end,
                                     old_span.end));
        CHECK(utf8::substr(out.sentence, new_span.start, new_span.end) == expected);
      } else {
        CHECK(utf8::substr(out.sentence, new_span.start, new_span.end) ==
              utf8::substr(source->sentence, old_span.start, old_span.end));
      }
    }
  }
}

TEST_CASE("augment_corpus is deterministic and job-count independent") {
  const Loaded fixture = load("main");
  auto run = [&](unsigned jobs) {
    AugmentOptions options;
    options.jobs = jobs;
    const AugmentResult result = augment_corpus(fixture.lexicon, fixture.corpus, options);
    Corpus corpus;
    for (const AugmentationRecord& record : result.records) corpus.add(record.annotation);
    std::ostringstream out;
    write_corpus(corpus, out);
    return out.str();
  };
  const std::string serial = run(1);
  CHECK(serial == run(1));
  CHECK(serial == run(4));
  CHECK(serial == run(3));
}

TEST_CASE("adding sets to another lu never reduces the yield") {
  const Loaded fixture = load("main");
  const std::size_t before =
      augment_corpus(fixture.lexicon, fixture.corpus).stats.sentences_generated;

  // Four more sets for wiggle.v make it overtake stamp.v as the sister.
  Corpus grown;
  for (const AnnotationSet& set : fixture.corpus.sets()) grown.add(set);
  for (int i = 0; i < 4; ++i) {
    grown.add(make_set("w" + std::to_string(i), "Body_movement", "wiggle.v",
                       "Dogs wiggle their hips .", {5, 11},
                       {{"Agent", {0, 4}}, {"Body_part", {12, 22}}}));
  }
  const AugmentResult after = augment_corpus(fixture.lexicon, grown);
  CHECK(after.stats.sentences_generated >= before);
  CHECK(after.stats.sentences_generated == before + 2);  // 5 wiggle sets vs 3
  bool bend_from_wiggle = false;
  for (const AugmentationRecord& record : after.records) {
    if (record.annotation.lu_name == "bend.v") {
      CHECK(record.sister_lu == "wiggle.v");
      bend_from_wiggle = true;
    }
  }
  CHECK(bend_from_wiggle);
}

TEST_CASE("augment_corpus with nothing empty yields zero everything") {
  Lexicon lexicon;
  Frame& frame = lexicon.add_frame("Wealthiness");
  frame.add_fe({"Person", Coreness::kCore});
  frame.add_lu("poor.a");
  Corpus corpus;
  corpus.add(make_set("b1", "Wealthiness", "poor.a", "He stayed poor .", {10, 14}));

  const AugmentResult result = augment_corpus(lexicon, corpus);
  CHECK(result.records.empty());
  CHECK(result.stats == AugmentStats{});
}

TEST_CASE("augment_lu skips out-of-range targets on unvalidated input") {
  Lexicon lexicon;
  Frame& frame = lexicon.add_frame("F");
  frame.add_lu("alpha.v");
  frame.add_lu("gamma.v");
  Corpus corpus;
  AnnotationSet broken = make_set("x1", "F", "alpha.v", "Too short .", {20, 99});
  corpus.add(broken);
  auto assignment = select_sister(make_lu("gamma.v", "F"), lexicon, corpus);
  REQUIRE(assignment.has_value());
  AugmentStats stats;
  CHECK(augment_lu(*assignment, corpus, {}, &stats).empty());
  CHECK(stats.skipped_span_conflict == 1);
}

TEST_CASE("restriction limits augmentation to chosen lus") {
  const Loaded fixture = load("main");
  std::set<std::pair<std::string, std::string>> only{{"Wealthiness", "rich.a"}};
  const AugmentResult result =
      augment_corpus(fixture.lexicon, fixture.corpus, {}, &only);
  CHECK(result.stats.empty_lu_count == 1);
  CHECK(result.stats.eligible_empty_lu_count == 1);
  REQUIRE(result.records.size() == 3);
  for (const AugmentationRecord& record : result.records) {
    CHECK(record.annotation.lu_name == "rich.a");
  }
}

TEST_CASE("diagnose flags regular forms of irregular lemmas") {
  const Loaded fixture = load("main");
  AugmentOptions options;
  options.use_irregulars = false;
  const AugmentResult regular = augment_corpus(fixture.lexicon, fixture.corpus, options);
  const auto flags = diagnose(regular.records);
  // bend.v past is the only irregular-lemma slot inflected by rule:
  // a1 produces "bended" while the table prefers "bent".
  REQUIRE(flags.size() == 1);
  CHECK(flags[0].annotation_id == "a1::aug::bend.v");
  CHECK(flags[0].category == "word_form_mismatch");
  CHECK(flags[0].detail.find("bended") != std::string::npos);
  CHECK(flags[0].detail.find("bent") != std::string::npos);

  // With irregulars enabled the rule cannot fire.
  const AugmentResult preferred = augment_corpus(fixture.lexicon, fixture.corpus);
  CHECK(diagnose(preferred.records).empty());
}

}  // namespace
}  // namespace frameaug
