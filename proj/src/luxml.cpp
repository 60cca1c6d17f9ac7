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

#include "frameaug/luxml.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <optional>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "frameaug/utf8.hpp"

namespace frameaug {

namespace {

namespace fs = std::filesystem;
using boost::property_tree::ptree;

std::vector<std::string> xml_files_sorted(const std::string& dir) {
  std::vector<std::string> files;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(dir, ec)) {
    if (entry.is_regular_file() && entry.path().extension() == ".xml") {
      files.push_back(entry.path().string());
    }
  }
  if (ec) throw XmlError("cannot read directory " + dir + ": " + ec.message());
  std::sort(files.begin(), files.end());
  return files;
}

ptree parse_xml(const std::string& path) {
  ptree tree;
  try {
    boost::property_tree::read_xml(path, tree);
  } catch (const boost::property_tree::xml_parser_error& e) {
    throw XmlError("cannot parse " + path + ": " + e.what());
  }
  return tree;
}

struct Label {
  std::string name;
  std::size_t start;
  std::size_t end;  // inclusive, as stored in the files
};

// Labels without offsets are null instantiations; they carry no span and
// are skipped.
std::optional<Label> read_label(const ptree& node) {
  auto attrs = node.get_child_optional("<xmlattr>");
  if (!attrs) return std::nullopt;
  auto start = node.get_optional<std::size_t>("<xmlattr>.start");
  auto end = node.get_optional<std::size_t>("<xmlattr>.end");
  if (!start || !end) return std::nullopt;
  return Label{node.get<std::string>("<xmlattr>.name", ""), *start, *end};
}

// Converts an inclusive-end label to a half-open code point span.
Span to_span(const Label& label, const std::string& text, bool byte_offsets,
             const std::string& where) {
  std::size_t start = label.start;
  std::size_t end_incl = label.end;
  if (byte_offsets) {
    if (end_incl + 1 > text.size() || start > end_incl) {
      throw OffsetError(where + ": label [" + std::to_string(label.start) + "," +
                        std::to_string(label.end) + "] outside sentence bytes");
    }
    start = utf8::cp_offset(text, start);
    end_incl = utf8::cp_offset(text, end_incl);
  }
  Span span{start, end_incl + 1};
  if (span.start >= span.end || span.end > utf8::length(text)) {
    throw OffsetError(where + ": label [" + std::to_string(label.start) + "," +
                      std::to_string(label.end) + "] outside sentence");
  }
  return span;
}

template <typename Fn>
void for_each_child(const ptree& node, const std::string& name, Fn fn) {
  for (const auto& [key, child] : node) {
    if (key == name) fn(child);
  }
}

struct LuFile {
  std::string lu_name;
  std::string pos;
  std::string frame;
};

LuFile read_lu_attrs(const ptree& tree, const std::string& path) {
  auto root = tree.get_child_optional("lexUnit");
  if (!root) throw XmlError(path + ": no lexUnit root element");
  LuFile lu;
  lu.lu_name = root->get<std::string>("<xmlattr>.name", "");
  lu.pos = root->get<std::string>("<xmlattr>.POS", "");
  lu.frame = root->get<std::string>("<xmlattr>.frame", "");
  if (lu.lu_name.empty() || lu.frame.empty()) {
    throw XmlError(path + ": lexUnit needs name and frame attributes");
  }
  return lu;
}

}  // namespace

LuXmlResult read_framenet_luxml(const std::string& dir, const Lexicon& lexicon,
                                const LuXmlOptions& options) {
  LuXmlResult result;
  for (const std::string& path : xml_files_sorted(dir)) {
    const ptree tree = parse_xml(path);
    const LuFile lu = read_lu_attrs(tree, path);
    if (lexicon.find(lu.frame) == nullptr) {
      throw UnknownFrame(path + ": frame '" + lu.frame + "' not in lexicon");
    }
    if (lexicon.find_lu(lu.frame, lu.lu_name) == nullptr) {
      throw UnknownLu(path + ": LU '" + lu.lu_name + "' not in frame " + lu.frame);
    }

    const ptree& root = tree.get_child("lexUnit");
    for_each_child(root, "subCorpus", [&](const ptree& sub) {
      for_each_child(sub, "sentence", [&](const ptree& sentence) {
        const std::string sent_id = sentence.get<std::string>("<xmlattr>.ID", "?");
        const std::string text = sentence.get<std::string>("text", "");
        for_each_child(sentence, "annotationSet", [&](const ptree& aset) {
          const std::string aset_id = aset.get<std::string>("<xmlattr>.ID", "?");
          const std::string where = path + " sentence " + sent_id;

          std::vector<Label> target_labels;
          std::vector<Label> fe_labels;
          bool dropped_layer = false;
          for_each_child(aset, "layer", [&](const ptree& layer) {
            const std::string layer_name = layer.get<std::string>("<xmlattr>.name", "");
            const int rank = layer.get<int>("<xmlattr>.rank", 1);
            std::vector<Label>* sink = nullptr;
            if (layer_name == "Target") {
              sink = &target_labels;
            } else if (layer_name == "FE" && rank == 1) {
              sink = &fe_labels;
            } else if (layer_name == "FE") {
              for_each_child(layer, "label", [&](const ptree& label) {
                if (read_label(label)) dropped_layer = true;
              });
              return;
            } else {
              return;  // other layers (GF, PT, ...) are not modeled
            }
            for_each_child(layer, "label", [&](const ptree& label) {
              if (auto l = read_label(label)) sink->push_back(*l);
            });
          });
          if (dropped_layer) {
            result.warnings.push_back(where + ": FE layer beyond rank 1 dropped");
          }
          if (target_labels.empty()) {
            result.warnings.push_back(where + ": annotation set " + aset_id +
                                      " has no Target label, skipped");
            return;
          }

          AnnotationSet set;
          set.id = "luxml:" + aset_id;
          set.frame = lu.frame;
          set.lu_name = lu.lu_name;
          set.sentence = text;
          set.source = AnnotationSource::kLexicographic;
          // Discontinuous targets collapse to their envelope.
          std::size_t lo = target_labels[0].start;
          std::size_t hi = target_labels[0].end;
          for (const Label& l : target_labels) {
            lo = std::min(lo, l.start);
            hi = std::max(hi, l.end);
          }
          set.target = to_span({"Target", lo, hi}, text, options.byte_offsets, where);
          for (const Label& l : fe_labels) {
            set.fes.push_back({l.name, to_span(l, text, options.byte_offsets, where)});
          }
          result.corpus.add(std::move(set));
        });
      });
    });
  }
  return result;
}

Lexicon lexicon_from_luxml(const std::string& dir) {
  // First pass: frame -> LU names; frame -> FE names seen in labels.
  std::map<std::string, std::vector<std::string>> frame_lus;
  std::map<std::string, std::vector<std::string>> frame_fes;
  for (const std::string& path : xml_files_sorted(dir)) {
    const ptree tree = parse_xml(path);
    const LuFile lu = read_lu_attrs(tree, path);
    auto& lus = frame_lus[lu.frame];
    if (std::find(lus.begin(), lus.end(), lu.lu_name) == lus.end()) {
      lus.push_back(lu.lu_name);
    }
    auto& fes = frame_fes[lu.frame];
    const ptree& root = tree.get_child("lexUnit");
    for_each_child(root, "subCorpus", [&](const ptree& sub) {
      for_each_child(sub, "sentence", [&](const ptree& sentence) {
        for_each_child(sentence, "annotationSet", [&](const ptree& aset) {
          for_each_child(aset, "layer", [&](const ptree& layer) {
            if (layer.get<std::string>("<xmlattr>.name", "") != "FE") return;
            for_each_child(layer, "label", [&](const ptree& label) {
              const std::string name = label.get<std::string>("<xmlattr>.name", "");
              if (!name.empty() &&
                  std::find(fes.begin(), fes.end(), name) == fes.end()) {
                fes.push_back(name);
              }
            });
          });
        });
      });
    });
  }
  Lexicon lexicon;
  for (auto& [frame_name, lus] : frame_lus) {
    Frame& frame = lexicon.add_frame(frame_name);
    auto& fes = frame_fes[frame_name];
    std::sort(fes.begin(), fes.end());
    for (const std::string& fe : fes) {
      frame.add_fe({fe, Coreness::kPeripheral});
    }
    std::sort(lus.begin(), lus.end());
    for (const std::string& lu : lus) frame.add_lu(lu);
  }
  return lexicon;
}

}  // namespace frameaug
