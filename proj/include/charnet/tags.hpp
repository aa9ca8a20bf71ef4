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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace charnet {

// Closed tag vocabulary consumed by the name patterns. External tagsets
// must be projected onto it at ingestion (see map_external_tagset).
enum class PosTag { pnm, title, prep, det, verb, noun, punct, other };

inline const char* to_string(PosTag tag) {
  switch (tag) {
    case PosTag::pnm: return "PNM";
    case PosTag::title: return "TITLE";
    case PosTag::prep: return "PREP";
    case PosTag::det: return "DET";
    case PosTag::verb: return "VERB";
    case PosTag::noun: return "NOUN";
    case PosTag::punct: return "PUNCT";
    case PosTag::other: return "OTHER";
  }
  return "OTHER";
}

inline std::optional<PosTag> parse_pos_tag(std::string_view s) {
  if (s == "PNM") return PosTag::pnm;
  if (s == "TITLE") return PosTag::title;
  if (s == "PREP") return PosTag::prep;
  if (s == "DET") return PosTag::det;
  if (s == "VERB") return PosTag::verb;
  if (s == "NOUN") return PosTag::noun;
  if (s == "PUNCT") return PosTag::punct;
  if (s == "OTHER") return PosTag::other;
  return std::nullopt;
}

// One tag per token, aligned with the document's flattened token order.
struct TagLayer {
  std::string layer_name;
  std::vector<PosTag> tags;
};

}  // namespace charnet
