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

// Readers and writers for the canonical JSONL formats and the CoNLL
// export consumed by external sequence labelers.
//
// lexicon.jsonl, one frame per line:
//   {"frame": str,
//    "fes": [{"name": str, "coreness": "core"|"peripheral"|"extra-thematic"}],
//    "lus": ["lemma.pos", ...]}
// corpus.jsonl, one annotation set per line:
//   {"id": str, "frame": str, "lu": str, "sentence": str,
//    "target": [start, end], "fes": [{"name": str, "span": [start, end]}],
//    "source": "lexicographic"|"fulltext"|"augmented"}

#ifndef FRAMEAUG_INGEST_H_
#define FRAMEAUG_INGEST_H_

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "frameaug/corpus_model.hpp"

namespace frameaug {

// A record rejected while loading, keyed by its 1-based line number.
struct LoadIssue {
  std::size_t line = 0;
  std::string rule;
  std::string message;
};

struct CorpusLoad {
  Corpus corpus;
  std::vector<LoadIssue> rejected;
};

// Throws ParseError (with line), DuplicateFrame, DuplicateLu.
Lexicon load_lexicon(const std::string& path);
Lexicon load_lexicon(std::istream& in);

// Structurally malformed lines throw ParseError; records violating the
// corpus invariants (unknown frame or LU, span errors, target form
// mismatch) are rejected into `rejected` and the rest load normally.
CorpusLoad load_corpus(const std::string& path, const Lexicon& lexicon,
                       const IrregularLexicon& irregulars = IrregularLexicon::builtin());
CorpusLoad load_corpus(std::istream& in, const Lexicon& lexicon,
                       const IrregularLexicon& irregulars = IrregularLexicon::builtin());

// Structural parse only, no lexicon checks. Prediction files legitimately
// carry wrong frames and stray FEs, so the scorer loads through this.
Corpus load_corpus_raw(const std::string& path);
Corpus load_corpus_raw(std::istream& in);

void write_lexicon(const Lexicon& lexicon, const std::string& path);
void write_lexicon(const Lexicon& lexicon, std::ostream& out);
// Sets are written in corpus order.
void write_corpus(const Corpus& corpus, const std::string& path);
void write_corpus(const Corpus& corpus, std::ostream& out);

// Inclusive (first, last) whitespace-token indices covered by a
// token-aligned char span. Throws AlignmentError.
std::pair<std::size_t, std::size_t> char_span_to_token_span(std::string_view sentence,
                                                            const Span& span);

// CoNLL export: per token, 7 tab-separated columns
//   index  form  lemma  pos  frame  lu  fe
// Lemma, pos, frame and lu are filled on target tokens and "_" elsewhere;
// fe carries BIO labels derived from the FE spans. Blocks are separated
// by one blank line and ordered by annotation id. Returns the token row
// count. Throws AlignmentError naming the offending annotation.
std::size_t export_conll(const Corpus& corpus, const std::string& path);
std::size_t export_conll(const Corpus& corpus, std::ostream& out);

// Parses the export format back into a corpus. Sentences are rebuilt by
// joining tokens with single spaces; ids are the 0-based block ordinal.
// Throws ParseError on malformed rows, broken BIO sequences, or targets
// split into more than one run.
Corpus parse_conll(const std::string& path);
Corpus parse_conll(std::istream& in);

}  // namespace frameaug

#endif  // FRAMEAUG_INGEST_H_
