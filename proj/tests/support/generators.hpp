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

// Deterministic random inputs for property tests.

#include <algorithm>
#include <random>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "charnet/coref.hpp"
#include "charnet/corpus.hpp"
#include "charnet/mention.hpp"
#include "charnet/tagging.hpp"
#include "charnet/tags.hpp"

namespace testsupport {

// Builds a document (with a "primary" layer) from explicit surface/tag
// sentences; byte spans come from a space-joined reconstruction.
inline charnet::Document make_tag_doc(
    const std::vector<std::vector<std::pair<std::string, charnet::PosTag>>>& sentences,
    const std::string& id = "synthetic") {
  charnet::Document doc;
  doc.id = id;
  charnet::TagLayer layer;
  layer.layer_name = "primary";
  std::string source;
  for (const auto& sent : sentences) {
    std::vector<charnet::Token> tokens;
    for (const auto& [surface, tag] : sent) {
      charnet::Token tok;
      tok.sentence_index = static_cast<int>(doc.sentences.size());
      tok.token_index = static_cast<int>(tokens.size());
      if (!source.empty()) source.push_back(' ');
      tok.begin = source.size();
      source += surface;
      tok.end = source.size();
      tok.surface = surface;
      tokens.push_back(std::move(tok));
      layer.tags.push_back(tag);
    }
    doc.sentences.push_back(std::move(tokens));
  }
  doc.source_text = std::move(source);
  return charnet::attach_layer(std::move(doc), std::move(layer));
}

// Surfaces consistent with each tag so capitalization-sensitive filters
// behave as they would on real text.
inline std::string surface_for(charnet::PosTag tag, std::mt19937& rng) {
  static const std::vector<std::string> kNames = {
      "Aurora", "Bento",   "Cidalia", "Duarte", "Estela",  "Fausto",
      "Gloria", "Heitor",  "Iria",    "Jacinto", "Leonor", "Matias",
  };
  static const std::vector<std::string> kTitles = {"Sr.", "Dona", "Dr.", "Senhora"};
  static const std::vector<std::string> kOthers = {"campo", "tarde", "casa", "rio", "vento"};
  static const std::vector<std::string> kVerbs = {"gritou", "disse", "perguntou"};
  switch (tag) {
    case charnet::PosTag::pnm: return kNames[rng() % kNames.size()];
    case charnet::PosTag::title: return kTitles[rng() % kTitles.size()];
    case charnet::PosTag::prep: return "de";
    case charnet::PosTag::det: return (rng() % 2) ? "do" : "a";
    case charnet::PosTag::verb: return kVerbs[rng() % kVerbs.size()];
    case charnet::PosTag::noun: return kOthers[rng() % kOthers.size()];
    case charnet::PosTag::punct: return (rng() % 2) ? "," : "—";
    default: return kOthers[rng() % kOthers.size()];
  }
}

inline charnet::Document random_tag_doc(std::mt19937& rng, int max_sentences = 4,
                                        int max_tokens = 8) {
  static const std::vector<charnet::PosTag> kAlphabet = {
      charnet::PosTag::pnm,  charnet::PosTag::title, charnet::PosTag::prep,
      charnet::PosTag::det,  charnet::PosTag::other, charnet::PosTag::verb,
      charnet::PosTag::punct};
  std::vector<std::vector<std::pair<std::string, charnet::PosTag>>> sentences;
  int n_sent = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_sentences));
  for (int s = 0; s < n_sent; ++s) {
    std::vector<std::pair<std::string, charnet::PosTag>> sent;
    int n_tok = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_tokens));
    for (int t = 0; t < n_tok; ++t) {
      charnet::PosTag tag = kAlphabet[rng() % kAlphabet.size()];
      sent.emplace_back(surface_for(tag, rng), tag);
    }
    sentences.push_back(std::move(sent));
  }
  return make_tag_doc(sentences);
}

// Synthetic resolved groups with mentions spread over random sentences.
inline std::vector<charnet::CharacterGroup> random_groups(std::mt19937& rng, int max_groups = 5,
                                                          int max_sentences = 20,
                                                          int max_mentions = 30) {
  static const std::vector<std::string> kNames = {"Ana", "Bento", "Clara", "Dinis", "Eva"};
  int n_groups = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_groups));
  int n_mentions = static_cast<int>(rng() % static_cast<unsigned>(max_mentions + 1));
  std::vector<charnet::CharacterGroup> groups(static_cast<std::size_t>(n_groups));
  for (int g = 0; g < n_groups; ++g) {
    groups[static_cast<std::size_t>(g)].group_id = g + 1;
    groups[static_cast<std::size_t>(g)].representation = kNames[static_cast<std::size_t>(g)];
    groups[static_cast<std::size_t>(g)].aliases = {kNames[static_cast<std::size_t>(g)]};
  }
  for (int m = 0; m < n_mentions; ++m) {
    auto& g = groups[rng() % static_cast<unsigned>(n_groups)];
    charnet::CandidateMention mention;
    mention.sentence_index = static_cast<int>(rng() % static_cast<unsigned>(max_sentences));
    mention.begin = static_cast<int>(rng() % 5);
    mention.end = mention.begin + 1;
    mention.surface = g.representation;
    g.mentions.push_back(std::move(mention));
  }
  for (auto& g : groups) {
    std::sort(g.mentions.begin(), g.mentions.end(),
              [](const charnet::CandidateMention& a, const charnet::CandidateMention& b) {
                return std::tie(a.sentence_index, a.begin) <
                       std::tie(b.sentence_index, b.begin);
              });
    g.occurrence_count = static_cast<int>(g.mentions.size());
  }
  return groups;
}

}  // namespace testsupport
