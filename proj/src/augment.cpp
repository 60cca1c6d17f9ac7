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

#include "frameaug/augment.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <mutex>
#include <thread>

#include "frameaug/utf8.hpp"

namespace frameaug {

namespace {

enum class Overlap { kBefore, kAfter, kContains, kPartial };

Overlap classify(const Span& span, const Span& target) {
  if (span.end <= target.start) return Overlap::kBefore;
  if (span.start >= target.end) return Overlap::kAfter;
  if (span.start <= target.start && span.end >= target.end) return Overlap::kContains;
  return Overlap::kPartial;
}

// Runs fn(i) for i in [0, count) on up to `jobs` workers. Exceptions are
// rethrown on the caller thread.
template <typename Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn fn) {
  if (jobs == 0) jobs = std::thread::hardware_concurrency();
  if (jobs <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  threads.reserve(n);
  for (unsigned t = 0; t < n; ++t) threads.emplace_back(worker);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

const IrregularLexicon& irregulars_of(const AugmentOptions& options) {
  return options.irregulars != nullptr ? *options.irregulars
                                       : IrregularLexicon::builtin();
}

}  // namespace

std::vector<LexicalUnit> find_empty_lus(const Lexicon& lexicon, const Corpus& corpus) {
  std::vector<LexicalUnit> empty;
  for (const Frame& frame : lexicon.frames()) {
    for (const LexicalUnit& lu : frame.lus()) {
      if (corpus.count_for_lu(frame.name(), lu.name) == 0) {
        empty.push_back(lu);
      }
    }
  }
  std::sort(empty.begin(), empty.end(), [](const LexicalUnit& a, const LexicalUnit& b) {
    return a.frame != b.frame ? a.frame < b.frame : a.name < b.name;
  });
  return empty;
}

std::optional<SisterAssignment> select_sister(const LexicalUnit& empty_lu,
                                              const Lexicon& lexicon,
                                              const Corpus& corpus) {
  if (is_mwe(empty_lu) || !empty_lu.pos.inflectable()) return std::nullopt;
  const Frame* frame = lexicon.find(empty_lu.frame);
  if (frame == nullptr) return std::nullopt;

  const LexicalUnit* best = nullptr;
  std::size_t best_count = 0;
  for (const LexicalUnit& candidate : frame->lus()) {
    if (candidate.name == empty_lu.name) continue;
    if (candidate.pos != empty_lu.pos) continue;
    if (is_mwe(candidate)) continue;
    const std::size_t count = corpus.count_for_lu(frame->name(), candidate.name);
    if (count == 0) continue;
    if (best == nullptr || count > best_count ||
        (count == best_count && candidate.name < best->name)) {
      best = &candidate;
      best_count = count;
    }
  }
  if (best == nullptr) return std::nullopt;
  return SisterAssignment{empty_lu, *best, best_count};
}

std::pair<std::vector<FeSpan>, Span> rebase_spans(const std::vector<FeSpan>& fes,
                                                  const Span& target,
                                                  std::size_t new_target_len) {
  const std::ptrdiff_t delta = static_cast<std::ptrdiff_t>(new_target_len) -
                               static_cast<std::ptrdiff_t>(target.length());
  std::vector<FeSpan> out;
  out.reserve(fes.size());
  auto shift = [&](std::size_t offset) {
    return static_cast<std::size_t>(static_cast<std::ptrdiff_t>(offset) + delta);
  };
  for (const FeSpan& fe : fes) {
    switch (classify(fe.span, target)) {
      case Overlap::kBefore:
        out.push_back(fe);
        break;
      case Overlap::kAfter:
        out.push_back({fe.fe_name, Span{shift(fe.span.start), shift(fe.span.end)}});
        break;
      case Overlap::kContains:
        out.push_back({fe.fe_name, Span{fe.span.start, shift(fe.span.end)}});
        break;
      case Overlap::kPartial:
        throw SpanConflict("FE " + fe.fe_name + " [" + std::to_string(fe.span.start) +
                           "," + std::to_string(fe.span.end) +
                           ") partially overlaps the target");
    }
  }
  return {std::move(out), Span{target.start, target.start + new_target_len}};
}

std::vector<AugmentationRecord> augment_lu(const SisterAssignment& assignment,
                                           const Corpus& corpus,
                                           const AugmentOptions& options,
                                           AugmentStats* stats) {
  const IrregularLexicon& irregulars = irregulars_of(options);
  std::vector<AugmentationRecord> records;

  const auto* indices = corpus.sets_for_lu(assignment.sister.frame,
                                           assignment.sister.name);
  if (indices == nullptr) return records;

  // Canonical per-sister order: source annotation id.
  std::vector<const AnnotationSet*> sources;
  sources.reserve(indices->size());
  for (std::size_t i : *indices) sources.push_back(&corpus.sets()[i]);
  std::sort(sources.begin(), sources.end(),
            [](const AnnotationSet* a, const AnnotationSet* b) { return a->id < b->id; });

  for (const AnnotationSet* source : sources) {
    // Unvalidated inputs may carry out-of-range targets; treat them like
    // any other unusable span rather than splicing garbage.
    if (source->target.start >= source->target.end ||
        source->target.end > utf8::length(source->sentence)) {
      if (stats != nullptr) ++stats->skipped_span_conflict;
      continue;
    }
    const std::string sister_token{
        utf8::substr(source->sentence, source->target.start, source->target.end)};
    std::string produced;
    FeatureBundle bundle;
    try {
      bundle = analyze(sister_token, assignment.sister.lemma, assignment.sister.pos,
                       irregulars);
      produced = inflect(assignment.empty_lu.lemma, bundle, irregulars,
                         options.use_irregulars);
      if (!produced.empty() &&
          std::isupper(static_cast<unsigned char>(sister_token.front()))) {
        produced.front() = static_cast<char>(
            std::toupper(static_cast<unsigned char>(produced.front())));
      }
    } catch (const FormMismatch&) {
      if (stats != nullptr) ++stats->skipped_form_mismatch;
      continue;
    }

    std::vector<FeSpan> fes;
    Span new_target;
    try {
      std::tie(fes, new_target) =
          rebase_spans(source->fes, source->target, utf8::length(produced));
    } catch (const SpanConflict&) {
      if (stats != nullptr) ++stats->skipped_span_conflict;
      continue;
    }

    AnnotationSet out;
    out.id = source->id + "::aug::" + assignment.empty_lu.name;
    out.frame = assignment.empty_lu.frame;
    out.lu_name = assignment.empty_lu.name;
    out.sentence = utf8::splice(source->sentence, source->target.start,
                                source->target.end, produced);
    out.target = new_target;
    out.fes = std::move(fes);
    out.source = AnnotationSource::kAugmented;
    records.push_back({std::move(out), assignment.sister.name, source->id,
                       {sister_token, produced, bundle}});
    if (stats != nullptr) ++stats->sentences_generated;
  }
  return records;
}

AugmentResult augment_corpus(const Lexicon& lexicon, const Corpus& corpus,
                             const AugmentOptions& options,
                             const std::set<std::pair<std::string, std::string>>*
                                 restrict_to) {
  std::vector<LexicalUnit> empty = find_empty_lus(lexicon, corpus);
  if (restrict_to != nullptr) {
    std::erase_if(empty, [&](const LexicalUnit& lu) {
      return restrict_to->count({lu.frame, lu.name}) == 0;
    });
  }

  AugmentResult result;
  result.stats.empty_lu_count = empty.size();

  // Classify every empty LU up front; transfers then run in parallel.
  struct Work {
    SisterAssignment assignment;
    std::vector<AugmentationRecord> records;
    AugmentStats stats;
  };
  std::vector<Work> work;
  for (const LexicalUnit& lu : empty) {
    auto assignment = select_sister(lu, lexicon, corpus);
    if (assignment) {
      ++result.stats.eligible_empty_lu_count;
      work.push_back({std::move(*assignment), {}, {}});
      continue;
    }
    if (is_mwe(lu)) {
      ++result.stats.mwe_excluded_count;
      continue;
    }
    // Blocked by an MWE-only candidate pool, or plainly sisterless?
    const Frame* frame = lexicon.find(lu.frame);
    bool mwe_candidate = false;
    if (frame != nullptr && lu.pos.inflectable()) {
      for (const LexicalUnit& candidate : frame->lus()) {
        if (candidate.name != lu.name && candidate.pos == lu.pos &&
            is_mwe(candidate) &&
            corpus.count_for_lu(frame->name(), candidate.name) > 0) {
          mwe_candidate = true;
          break;
        }
      }
    }
    if (mwe_candidate) {
      ++result.stats.mwe_excluded_count;
    } else {
      ++result.stats.no_sister_count;
    }
  }

  parallel_for(work.size(), options.jobs, [&](std::size_t i) {
    work[i].records = augment_lu(work[i].assignment, corpus, options, &work[i].stats);
  });

  for (Work& w : work) {
    result.stats.sentences_generated += w.stats.sentences_generated;
    result.stats.skipped_form_mismatch += w.stats.skipped_form_mismatch;
    result.stats.skipped_span_conflict += w.stats.skipped_span_conflict;
    for (AugmentationRecord& r : w.records) {
      result.records.push_back(std::move(r));
    }
  }
  return result;
}

std::vector<DiagnosticFlag> diagnose(const std::vector<AugmentationRecord>& records,
                                     const IrregularLexicon& irregulars) {
  std::vector<DiagnosticFlag> flags;
  for (const AugmentationRecord& record : records) {
    std::string lemma;
    try {
      lemma = parse_lu_name(record.annotation.lu_name).first;
    } catch (const MalformedLuName&) {
      continue;
    }
    const FeatureBundle& bundle = record.inflection.features;
    const std::string regular = inflect(lemma, bundle, irregulars, false);
    const std::string preferred = inflect(lemma, bundle, irregulars, true);
    if (preferred == regular) continue;  // no irregular form for this feature

    // Case-insensitive comparison against the produced token; match_form
    // may have copied capitalization.
    auto ci_equal = [](std::string_view a, std::string_view b) {
      if (a.size() != b.size()) return false;
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i]))) {
          return false;
        }
      }
      return true;
    };
    if (ci_equal(record.inflection.produced_token, regular)) {
      flags.push_back({record.annotation.id, "word_form_mismatch",
                       "'" + record.inflection.produced_token +
                           "' was built by regular rules; the irregular " +
                           bundle.feature_name() + " of '" + lemma + "' is '" +
                           preferred + "'"});
    }
  }
  return flags;
}

}  // namespace frameaug
