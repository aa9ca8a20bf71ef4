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

#include <string>

#include "charnet/charnet.hpp"

namespace testsupport {

inline std::string fixture_path(const std::string& relative) {
  return std::string(CHARNET_FIXTURE_DIR) + "/" + relative;
}

inline const charnet::LexiconSet& seed_lexicons() {
  static const charnet::LexiconSet set = [] {
    charnet::LexiconSet s;
    s.titles = charnet::load_lexicon(fixture_path("lexicons/titles.txt"),
                                     charnet::LexiconKind::titles);
    s.presence = charnet::load_lexicon(fixture_path("lexicons/presence.txt"),
                                       charnet::LexiconKind::presence);
    s.locations = charnet::load_lexicon(fixture_path("lexicons/locations.txt"),
                                        charnet::LexiconKind::locations);
    s.first_names = charnet::load_lexicon(fixture_path("lexicons/first_names.tsv"),
                                          charnet::LexiconKind::first_names);
    s.diminutives = charnet::load_lexicon(fixture_path("lexicons/diminutives.tsv"),
                                          charnet::LexiconKind::diminutives);
    s.narrator_pronouns = charnet::load_lexicon(fixture_path("lexicons/narrator_pronouns.txt"),
                                                charnet::LexiconKind::narrator_pronouns);
    s.gender_markers = charnet::load_lexicon(fixture_path("lexicons/gender_markers.tsv"),
                                             charnet::LexiconKind::gender_markers);
    return s;
  }();
  return set;
}

inline charnet::SegmenterOptions seed_segmenter_options() {
  charnet::SegmenterOptions options;
  for (const std::string& title : seed_lexicons().titles.entries()) {
    if (!title.empty() && title.back() == '.') options.abbreviations.insert(title);
  }
  return options;
}

inline charnet::Document make_doc(const std::string& text, const std::string& id = "test") {
  return charnet::load_document(text, id, seed_segmenter_options());
}

// Document with the baseline layer attached under "primary".
inline charnet::Document tagged_doc(const std::string& text, const std::string& id = "test") {
  charnet::Document doc = make_doc(text, id);
  return charnet::attach_layer(std::move(doc), charnet::baseline_tag(doc, seed_lexicons()));
}

}  // namespace testsupport
