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

// Compatibility adapter for FrameNet-style lu/*.xml annotation files.
// The canonical corpus format is JSONL; this reader only converts the
// Target and first FE layer of each annotation set.

#ifndef FRAMEAUG_LUXML_H_
#define FRAMEAUG_LUXML_H_

#include <string>
#include <vector>

#include "frameaug/corpus_model.hpp"

namespace frameaug {

struct LuXmlOptions {
  // Label offsets are code points by default. Some releases store byte
  // offsets instead; set this to convert them against the sentence text.
  bool byte_offsets = false;
};

struct LuXmlResult {
  Corpus corpus;
  // One entry per skipped sentence or dropped layer.
  std::vector<std::string> warnings;
};

// Reads every *.xml file under `dir` (sorted by filename). Label offsets
// use inclusive ends in the source and become half-open spans here.
// Sentences without a Target label are skipped with a warning; FE layers
// beyond rank 1 are dropped with a warning; null-instantiated FEs (no
// offsets) are ignored. Throws XmlError, OffsetError, UnknownFrame,
// UnknownLu.
LuXmlResult read_framenet_luxml(const std::string& dir, const Lexicon& lexicon,
                                const LuXmlOptions& options = {});

// Collects the frame/LU/FE inventory declared or used by the files, for
// use when no hand-written lexicon exists. FE coreness is not recorded in
// lu XML, so every FE imports as peripheral.
Lexicon lexicon_from_luxml(const std::string& dir);

}  // namespace frameaug

#endif  // FRAMEAUG_LUXML_H_
