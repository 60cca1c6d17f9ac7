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

#include "frameaug/ingest.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "frameaug/utf8.hpp"

namespace frameaug {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Token {
  std::string text;
  std::size_t cp_start;
  std::size_t cp_end;
};

// Whitespace tokenization over code points. The corpus convention
// pre-separates punctuation, so nothing smarter is needed.
std::vector<Token> tokenize(std::string_view sentence) {
  std::vector<Token> tokens;
  std::size_t cp = 0;
  std::size_t byte = 0;
  std::size_t tok_start_cp = 0;
  std::size_t tok_start_byte = 0;
  bool in_token = false;
  auto flush = [&](std::size_t end_cp, std::size_t end_byte) {
    if (in_token) {
      tokens.push_back({std::string(sentence.substr(tok_start_byte, end_byte - tok_start_byte)),
                        tok_start_cp, end_cp});
      in_token = false;
    }
  };
  while (byte < sentence.size()) {
    std::size_t next = byte + 1;
    while (next < sentence.size() &&
           utf8::is_continuation(static_cast<unsigned char>(sentence[next]))) {
      ++next;
    }
    if (sentence[byte] == ' ') {
      flush(cp, byte);
    } else if (!in_token) {
      in_token = true;
      tok_start_cp = cp;
      tok_start_byte = byte;
    }
    byte = next;
    ++cp;
  }
  flush(cp, byte);
  return tokens;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  return out;
}

Span span_from_json(const ordered_json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_unsigned() ||
      !j[1].is_number_unsigned()) {
    throw ParseError("span must be [start, end] with nonnegative integers");
  }
  return Span{j[0].get<std::size_t>(), j[1].get<std::size_t>()};
}

}  // namespace

Lexicon load_lexicon(std::istream& in) {
  Lexicon lexicon;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    ordered_json record;
    try {
      record = ordered_json::parse(line);
    } catch (const ordered_json::exception& e) {
      throw ParseError(std::string("lexicon: ") + e.what(), lineno);
    }
    try {
      if (!record.contains("frame") || !record["frame"].is_string()) {
        throw ParseError("lexicon: record needs a \"frame\" string", lineno);
      }
      Frame& frame = lexicon.add_frame(record["frame"].get<std::string>());
      for (const auto& fe : record.value("fes", ordered_json::array())) {
        auto coreness = coreness_from_string(fe.value("coreness", "core"));
        if (!coreness) {
          throw ParseError("lexicon: bad coreness '" + fe.value("coreness", "") + "'",
                           lineno);
        }
        frame.add_fe({fe.at("name").get<std::string>(), *coreness});
      }
      for (const auto& lu : record.value("lus", ordered_json::array())) {
        frame.add_lu(lu.get<std::string>());
      }
    } catch (const DuplicateFrame& e) {
      throw DuplicateFrame(e.what(), lineno);
    } catch (const DuplicateLu& e) {
      throw DuplicateLu(e.what(), lineno);
    } catch (const MalformedLuName& e) {
      throw ParseError(std::string("lexicon: ") + e.what(), lineno);
    } catch (const ordered_json::exception& e) {
      throw ParseError(std::string("lexicon: ") + e.what(), lineno);
    }
  }
  return lexicon;
}

Lexicon load_lexicon(const std::string& path) {
  std::ifstream in = open_input(path);
  return load_lexicon(in);
}

namespace {

AnnotationSet record_to_set(const std::string& line, std::size_t lineno) {
  ordered_json record;
  try {
    record = ordered_json::parse(line);
  } catch (const ordered_json::exception& e) {
    throw ParseError(std::string("corpus: ") + e.what(), lineno);
  }
  AnnotationSet set;
  try {
    set.id = record.at("id").get<std::string>();
    set.frame = record.at("frame").get<std::string>();
    set.lu_name = record.at("lu").get<std::string>();
    set.sentence = record.at("sentence").get<std::string>();
    set.target = span_from_json(record.at("target"));
    for (const auto& fe : record.value("fes", ordered_json::array())) {
      set.fes.push_back({fe.at("name").get<std::string>(), span_from_json(fe.at("span"))});
    }
    auto source = source_from_string(record.value("source", "lexicographic"));
    if (!source) {
      throw ParseError("corpus: bad source '" + record.value("source", "") + "'", lineno);
    }
    set.source = *source;
  } catch (const ordered_json::exception& e) {
    throw ParseError(std::string("corpus: ") + e.what(), lineno);
  }
  return set;
}

}  // namespace

CorpusLoad load_corpus(std::istream& in, const Lexicon& lexicon,
                       const IrregularLexicon& irregulars) {
  CorpusLoad result;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    AnnotationSet set = record_to_set(line, lineno);

    std::vector<ValidationIssue> issues;
    check_annotation(lexicon, set, irregulars, &issues);
    if (!issues.empty()) {
      for (const auto& issue : issues) {
        result.rejected.push_back({lineno, issue.rule, issue.message});
      }
      continue;
    }
    if (result.corpus.find(set.id) != nullptr) {
      result.rejected.push_back({lineno, "duplicate_id",
                                 "annotation id '" + set.id + "' already seen"});
      continue;
    }
    result.corpus.add(std::move(set));
  }
  return result;
}

CorpusLoad load_corpus(const std::string& path, const Lexicon& lexicon,
                       const IrregularLexicon& irregulars) {
  std::ifstream in = open_input(path);
  return load_corpus(in, lexicon, irregulars);
}

Corpus load_corpus_raw(std::istream& in) {
  Corpus corpus;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    corpus.add(record_to_set(line, lineno));
  }
  return corpus;
}

Corpus load_corpus_raw(const std::string& path) {
  std::ifstream in = open_input(path);
  return load_corpus_raw(in);
}

void write_lexicon(const Lexicon& lexicon, std::ostream& out) {
  for (const Frame& frame : lexicon.frames()) {
    ordered_json record;
    record["frame"] = frame.name();
    ordered_json fes = ordered_json::array();
    for (const auto& fe : frame.fe_defs()) {
      fes.push_back({{"name", fe.name}, {"coreness", to_string(fe.coreness)}});
    }
    record["fes"] = std::move(fes);
    ordered_json lus = ordered_json::array();
    for (const auto& lu : frame.lus()) lus.push_back(lu.name);
    record["lus"] = std::move(lus);
    out << record.dump() << "\n";
  }
}

void write_lexicon(const Lexicon& lexicon, const std::string& path) {
  std::ofstream out = open_output(path);
  write_lexicon(lexicon, out);
}

void write_corpus(const Corpus& corpus, std::ostream& out) {
  for (const AnnotationSet& set : corpus.sets()) {
    ordered_json record;
    record["id"] = set.id;
    record["frame"] = set.frame;
    record["lu"] = set.lu_name;
    record["sentence"] = set.sentence;
    record["target"] = {set.target.start, set.target.end};
    ordered_json fes = ordered_json::array();
    for (const auto& fe : set.fes) {
      fes.push_back({{"name", fe.fe_name}, {"span", {fe.span.start, fe.span.end}}});
    }
    record["fes"] = std::move(fes);
    record["source"] = to_string(set.source);
    out << record.dump() << "\n";
  }
}

void write_corpus(const Corpus& corpus, const std::string& path) {
  std::ofstream out = open_output(path);
  write_corpus(corpus, out);
}

std::pair<std::size_t, std::size_t> char_span_to_token_span(std::string_view sentence,
                                                            const Span& span) {
  const std::vector<Token> tokens = tokenize(sentence);
  std::size_t first = tokens.size();
  std::size_t last = tokens.size();
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i].cp_start == span.start) first = i;
    if (tokens[i].cp_end == span.end) last = i;
  }
  if (first == tokens.size() || last == tokens.size() || last < first) {
    throw AlignmentError("span [" + std::to_string(span.start) + "," +
                         std::to_string(span.end) + ") is not token-aligned");
  }
  return {first, last};
}

namespace {

// BIO labels for one annotation set, one per token.
std::vector<std::string> bio_labels(const AnnotationSet& set,
                                    const std::vector<Token>& tokens) {
  std::vector<std::string> labels(tokens.size(), "O");
  for (const FeSpan& fe : set.fes) {
    auto [first, last] = char_span_to_token_span(set.sentence, fe.span);
    for (std::size_t t = first; t <= last; ++t) {
      labels[t] = (t == first ? "B-" : "I-") + fe.fe_name;
    }
  }
  return labels;
}

}  // namespace

std::size_t export_conll(const Corpus& corpus, std::ostream& out) {
  std::vector<const AnnotationSet*> ordered;
  ordered.reserve(corpus.size());
  for (const auto& set : corpus.sets()) ordered.push_back(&set);
  std::sort(ordered.begin(), ordered.end(),
            [](const AnnotationSet* a, const AnnotationSet* b) { return a->id < b->id; });

  std::size_t rows = 0;
  bool first_block = true;
  for (const AnnotationSet* set : ordered) {
    const std::vector<Token> tokens = tokenize(set->sentence);
    std::size_t t_first, t_last;
    std::vector<std::string> labels;
    try {
      std::tie(t_first, t_last) = char_span_to_token_span(set->sentence, set->target);
      labels = bio_labels(*set, tokens);
    } catch (const AlignmentError& e) {
      throw AlignmentError("annotation " + set->id + ": " + e.what());
    }
    std::string lemma = "_";
    std::string pos = "_";
    try {
      auto [l, p] = parse_lu_name(set->lu_name);
      lemma = l;
      pos = p.tag();
    } catch (const MalformedLuName&) {
      // Exported as underscores; the loader will have complained already.
    }
    if (!first_block) out << "\n";
    first_block = false;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
      if (tokens[i].text.find('\t') != std::string::npos) {
        throw AlignmentError("annotation " + set->id +
                             ": token contains a tab, cannot export");
      }
      const bool on_target = i >= t_first && i <= t_last;
      out << (i + 1) << "\t" << tokens[i].text << "\t" << (on_target ? lemma : "_")
          << "\t" << (on_target ? pos : "_") << "\t" << (on_target ? set->frame : "_")
          << "\t" << (on_target ? set->lu_name : "_") << "\t" << labels[i] << "\n";
      ++rows;
    }
  }
  return rows;
}

std::size_t export_conll(const Corpus& corpus, const std::string& path) {
  std::ofstream out = open_output(path);
  return export_conll(corpus, out);
}

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

struct ConllBlock {
  std::vector<std::vector<std::string>> rows;
  std::size_t first_line = 0;
};

AnnotationSet block_to_set(const ConllBlock& block, std::size_t ordinal) {
  AnnotationSet set;
  set.id = std::to_string(ordinal);

  std::vector<Token> tokens;
  std::size_t cp = 0;
  for (std::size_t i = 0; i < block.rows.size(); ++i) {
    const auto& row = block.rows[i];
    if (row.size() != 7) {
      throw ParseError("conll: expected 7 tab-separated columns",
                       block.first_line + i);
    }
    if (row[0] != std::to_string(i + 1)) {
      throw ParseError("conll: token index out of sequence", block.first_line + i);
    }
    const std::string& form = row[1];
    std::size_t len = utf8::length(form);
    tokens.push_back({form, cp, cp + len});
    cp += len + 1;
    if (!set.sentence.empty()) set.sentence += ' ';
    set.sentence += form;
  }

  // Target run: the tokens carrying a frame label.
  std::size_t t_first = tokens.size(), t_last = tokens.size();
  for (std::size_t i = 0; i < block.rows.size(); ++i) {
    if (block.rows[i][4] == "_") continue;
    if (t_first == tokens.size()) {
      t_first = t_last = i;
      set.frame = block.rows[i][4];
      set.lu_name = block.rows[i][5];
    } else {
      if (i != t_last + 1) {
        throw ParseError("conll: more than one target run in block",
                         block.first_line + i);
      }
      if (block.rows[i][4] != set.frame) {
        throw ParseError("conll: inconsistent frame labels on target",
                         block.first_line + i);
      }
      t_last = i;
    }
  }
  if (t_first == tokens.size()) {
    throw ParseError("conll: block has no target tokens", block.first_line);
  }
  set.target = Span{tokens[t_first].cp_start, tokens[t_last].cp_end};

  // FE spans from the BIO column.
  std::string open_label;
  std::size_t open_first = 0;
  auto close = [&](std::size_t last_token) {
    if (!open_label.empty()) {
      set.fes.push_back({open_label,
                         Span{tokens[open_first].cp_start, tokens[last_token].cp_end}});
      open_label.clear();
    }
  };
  for (std::size_t i = 0; i < block.rows.size(); ++i) {
    const std::string& tag = block.rows[i][6];
    if (tag == "O") {
      close(i == 0 ? 0 : i - 1);
    } else if (tag.rfind("B-", 0) == 0) {
      close(i == 0 ? 0 : i - 1);
      open_label = tag.substr(2);
      open_first = i;
    } else if (tag.rfind("I-", 0) == 0) {
      if (open_label != tag.substr(2)) {
        throw ParseError("conll: I-" + tag.substr(2) + " without matching B-",
                         block.first_line + i);
      }
    } else {
      throw ParseError("conll: bad BIO tag '" + tag + "'", block.first_line + i);
    }
  }
  close(block.rows.size() - 1);
  return set;
}

}  // namespace

Corpus parse_conll(std::istream& in) {
  Corpus corpus;
  ConllBlock block;
  std::string line;
  std::size_t lineno = 0;
  std::size_t ordinal = 0;
  auto flush = [&] {
    if (!block.rows.empty()) {
      corpus.add(block_to_set(block, ordinal++));
      block = ConllBlock{};
    }
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    if (block.rows.empty()) block.first_line = lineno;
    block.rows.push_back(split_tabs(line));
  }
  flush();
  return corpus;
}

Corpus parse_conll(const std::string& path) {
  std::ifstream in = open_input(path);
  return parse_conll(in);
}

}  // namespace frameaug
