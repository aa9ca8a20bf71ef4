// Copyright 2026 The charnet Authors.
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

#pragma once

// Baseline heuristic tagger and tag-layer management. The baseline stands
// in for an external statistical tagger in self-contained runs: it trusts
// capitalization mid-sentence and demands first-name evidence at sentence
// openings, where capitalization proves nothing.

#include <span>
#include <string>
#include <vector>

#include "charnet/corpus.hpp"
#include "charnet/errors.hpp"
#include "charnet/lexicon.hpp"
#include "charnet/tags.hpp"
#include "charnet/text.hpp"

namespace charnet {

namespace detail {

// A token "opens" its sentence when only punctuation precedes it, so the
// word after a dialogue dash is treated like a sentence-initial word.
inline bool opens_sentence(const std::vector<Token>& sentence, std::size_t index) {
  for (std::size_t i = 0; i < index; ++i) {
    if (!text::is_punct_only(sentence[i].surface)) return false;
  }
  return true;
}

inline bool is_prep_word(const std::string& normalized) { return normalized == "de"; }

inline bool is_det_word(const std::string& normalized) {
  return normalized == "o" || normalized == "a" || normalized == "os" ||
         normalized == "as" || normalized == "do" || normalized == "da" ||
         normalized == "dos" || normalized == "das";
}

}  // namespace detail

// Deterministic and total: every token gets exactly one tag. Rule order:
// punctuation, capitalized titles, capitalized names (sentence-opening
// ones need first-name evidence), prepositions, articles, presence verbs,
// then OTHER.
inline TagLayer baseline_tag(const Document& doc, const LexiconSet& lexicons,
                             std::string layer_name = "primary") {
  TagLayer layer;
  layer.layer_name = std::move(layer_name);
  layer.tags.reserve(doc.token_count());
  for (const auto& sentence : doc.sentences) {
    for (std::size_t t = 0; t < sentence.size(); ++t) {
      const std::string& surface = sentence[t].surface;
      if (text::is_punct_only(surface)) {
        layer.tags.push_back(PosTag::punct);
        continue;
      }
      std::string norm = text::normalize(surface);
      if (text::is_capitalized(surface)) {
        if (lexicons.titles.contains(norm)) {
          layer.tags.push_back(PosTag::title);
          continue;
        }
        if (!detail::opens_sentence(sentence, t) || lexicons.first_names.contains(norm)) {
          layer.tags.push_back(PosTag::pnm);
          continue;
        }
      }
      if (detail::is_prep_word(norm)) {
        layer.tags.push_back(PosTag::prep);
      } else if (detail::is_det_word(norm)) {
        layer.tags.push_back(PosTag::det);
      } else if (lexicons.presence.contains(norm)) {
        layer.tags.push_back(PosTag::verb);
      } else {
        layer.tags.push_back(PosTag::other);
      }
    }
  }
  return layer;
}

// Returns a copy of the document with the layer registered. Layers are
// immutable once attached; re-attaching a name is an error.
inline Document attach_layer(Document doc, TagLayer layer) {
  if (layer.tags.size() != doc.token_count())
    throw AlignmentError(layer.tags.size(), doc.token_count());
  if (doc.tag_layers.count(layer.layer_name)) throw DuplicateLayer(layer.layer_name);
  std::string name = layer.layer_name;
  doc.tag_layers.emplace(std::move(name), std::move(layer));
  return doc;
}

inline std::vector<PosTag> map_external_tagset(std::span<const std::string> raw_tags,
                                               const TagsetMapping& mapping) {
  std::vector<PosTag> out;
  out.reserve(raw_tags.size());
  for (const std::string& raw : raw_tags) out.push_back(mapping.map(raw));
  return out;
}

}  // namespace charnet
