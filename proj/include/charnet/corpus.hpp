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

// Document loading: sentence segmentation, tokenization, front/back-matter
// stripping, and ingestion of pre-tagged token streams.
//
// Segmentation rule: ".", "!", "?" or "…" ends a sentence when followed by
// whitespace and a capital letter, or by end of text. Tokens listed in the
// abbreviation set keep their trailing period and never end a sentence.
// Tokenization splits on whitespace and peels leading/trailing punctuation
// into tokens of their own; word-internal punctuation (hyphens in clitics)
// stays put, so contracted forms survive as single tokens.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "charnet/errors.hpp"
#include "charnet/io.hpp"
#include "charnet/tags.hpp"
#include "charnet/text.hpp"

namespace charnet {

struct Token {
  std::string surface;
  int sentence_index = 0;
  int token_index = 0;     // position within the sentence
  std::size_t begin = 0;   // half-open byte span into source_text
  std::size_t end = 0;
};

struct Document {
  std::string id;
  std::string source_text;
  std::vector<std::vector<Token>> sentences;
  std::map<std::string, TagLayer> tag_layers;

  std::size_t token_count() const {
    std::size_t n = 0;
    for (const auto& s : sentences) n += s.size();
    return n;
  }

  // Flat index of a sentence-local token position.
  std::size_t flat_index(int sentence, int token) const {
    std::size_t n = 0;
    for (int s = 0; s < sentence; ++s) n += sentences[static_cast<std::size_t>(s)].size();
    return n + static_cast<std::size_t>(token);
  }

  const TagLayer* layer(const std::string& name) const {
    auto it = tag_layers.find(name);
    return it == tag_layers.end() ? nullptr : &it->second;
  }
};

// Abbreviations that keep a trailing period, normalized form. Seeded from
// the bundled titles; the pipeline extends this with any loaded title that
// ends in a period.
inline const std::set<std::string>& default_abbreviations() {
  static const std::set<std::string> kAbbrevs = {
      "sr.",  "sra.",  "srta.", "d.",    "dr.",   "dra.",  "prof.",
      "eng.", "exmo.", "exma.", "v.",    "s.",    "sto.",  "sta.",
      "av.",  "st.",   "jr.",   "me.",   "fr.",
  };
  return kAbbrevs;
}

struct SegmenterOptions {
  std::set<std::string> abbreviations = default_abbreviations();
};

namespace detail {

inline bool is_sentence_terminal(std::string_view surface) {
  return surface == "." || surface == "!" || surface == "?" || surface == "…";
}

// True when, skipping whitespace from byte pos, the next codepoint is a
// capital letter; EOT also counts as a boundary.
inline bool boundary_follows(std::string_view source, std::size_t pos) {
  std::size_t i = pos;
  bool saw_ws = false;
  while (i < source.size()) {
    std::size_t j = i;
    char32_t cp = text::decode(source, j);
    if (text::is_whitespace(cp)) {
      saw_ws = true;
      i = j;
      continue;
    }
    return saw_ws && text::is_upper(cp);
  }
  return true;  // end of text
}

struct RawToken {
  std::string surface;
  std::size_t begin, end;
};

// Splits one whitespace-delimited chunk into punctuation and word tokens.
inline void split_chunk(std::string_view source, std::size_t begin, std::size_t end,
                        const std::set<std::string>& abbreviations,
                        std::vector<RawToken>& out) {
  // Peel leading punctuation codepoints.
  std::size_t i = begin;
  while (i < end) {
    std::size_t j = i;
    char32_t cp = text::decode(source, j);
    if (!text::is_punct(cp)) break;
    out.push_back({std::string(source.substr(i, j - i)), i, j});
    i = j;
  }
  if (i >= end) return;

  // Find trailing punctuation codepoints, honouring abbreviations: a final
  // "." stays attached when word+"." is a known abbreviation.
  std::vector<std::pair<std::size_t, std::size_t>> cps;  // codepoint spans of the core
  for (std::size_t k = i; k < end;) {
    std::size_t j = k;
    text::decode(source, j);
    cps.emplace_back(k, j);
    k = j;
  }
  std::size_t core_cps = cps.size();
  while (core_cps > 1) {
    auto [b, e] = cps[core_cps - 1];
    std::size_t tmp = b;
    char32_t cp = text::decode(source, tmp);
    if (!text::is_punct(cp)) break;
    if (cp == U'.') {
      std::string with_dot(source.substr(i, e - i));
      if (abbreviations.count(text::normalize(with_dot))) break;
    }
    --core_cps;
  }
  std::size_t core_end = core_cps == 0 ? i : cps[core_cps - 1].second;
  if (core_end > i) out.push_back({std::string(source.substr(i, core_end - i)), i, core_end});
  for (std::size_t k = core_cps; k < cps.size(); ++k) {
    auto [b, e] = cps[k];
    out.push_back({std::string(source.substr(b, e - b)), b, e});
  }
}

}  // namespace detail

// Pure function: identical input yields an identical Document.
inline Document load_document(std::string_view source, std::string id,
                              const SegmenterOptions& options = {}) {
  Document doc;
  doc.id = std::move(id);
  doc.source_text = std::string(source);

  std::vector<Token> current;
  auto flush = [&] {
    if (!current.empty()) {
      doc.sentences.push_back(std::move(current));
      current.clear();
    }
  };

  std::size_t i = 0;
  const std::size_t n = source.size();
  std::vector<detail::RawToken> chunk_tokens;
  while (i < n) {
    // Skip whitespace.
    std::size_t j = i;
    char32_t cp = text::decode(source, j);
    if (text::is_whitespace(cp)) {
      i = j;
      continue;
    }
    // Read one whitespace-delimited chunk.
    std::size_t chunk_begin = i;
    std::size_t chunk_end = i;
    while (chunk_end < n) {
      std::size_t k = chunk_end;
      if (text::is_whitespace(text::decode(source, k))) break;
      chunk_end = k;
    }
    chunk_tokens.clear();
    detail::split_chunk(source, chunk_begin, chunk_end, options.abbreviations, chunk_tokens);
    for (const auto& raw : chunk_tokens) {
      Token tok;
      tok.surface = raw.surface;
      tok.begin = raw.begin;
      tok.end = raw.end;
      tok.sentence_index = static_cast<int>(doc.sentences.size());
      tok.token_index = static_cast<int>(current.size());
      bool terminal = detail::is_sentence_terminal(tok.surface);
      std::size_t after = tok.end;
      current.push_back(std::move(tok));
      if (terminal && detail::boundary_follows(source, after)) flush();
    }
    i = chunk_end;
  }
  flush();

  if (doc.sentences.empty()) throw EmptyDocument(doc.id);
  return doc;
}

struct MarkerPair {
  std::string begin;
  std::string end;
};

// Keeps only the text enclosed by begin/end marker pairs and re-segments.
// Pairs whose begin marker never occurs contribute nothing; when no pair
// matches at all the document is returned unchanged (already clean input).
// Any attached tag layers are dropped because token positions change.
inline Document strip_nonliterary(const Document& doc, const std::vector<MarkerPair>& markers,
                                  const SegmenterOptions& options = {}) {
  if (markers.empty()) return doc;
  std::vector<std::pair<std::size_t, std::size_t>> regions;
  for (const auto& marker : markers) {
    if (marker.begin.empty()) throw ConfigError("empty begin marker");
    std::size_t pos = 0;
    while (true) {
      std::size_t b = doc.source_text.find(marker.begin, pos);
      if (b == std::string::npos) break;
      std::size_t content = b + marker.begin.size();
      std::size_t e = marker.end.empty() ? std::string::npos
                                         : doc.source_text.find(marker.end, content);
      if (e == std::string::npos) throw UnbalancedMarkers(marker.begin);
      regions.emplace_back(content, e);
      pos = e + marker.end.size();
    }
  }
  if (regions.empty()) return doc;
  std::sort(regions.begin(), regions.end());
  std::string kept;
  for (auto [b, e] : regions) {
    kept.append(doc.source_text, b, e - b);
    kept.push_back('\n');
  }
  return load_document(kept, doc.id, options);
}

// Maps a foreign tagset onto the closed vocabulary. A "*" row declares the
// default for anything unlisted.
struct TagsetMapping {
  std::map<std::string, PosTag> mapping;
  std::optional<PosTag> fallback;

  PosTag map(const std::string& raw) const {
    auto it = mapping.find(raw);
    if (it != mapping.end()) return it->second;
    if (fallback) return *fallback;
    throw UnknownTag(raw);
  }
};

inline TagsetMapping parse_tagset_mapping(std::string_view contents) {
  TagsetMapping out;
  std::size_t lineno = 0;
  for (const std::string& raw_line : io::split_lines(contents)) {
    ++lineno;
    std::string line = io::trim(raw_line);
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields = io::split_tsv(line);
    if (fields.size() != 2)
      throw MalformedInput(lineno, "expected raw_tag<TAB>TAG");
    auto tag = parse_pos_tag(io::trim(fields[1]));
    if (!tag) throw MalformedInput(lineno, "unknown target tag \"" + fields[1] + "\"");
    if (fields[0] == "*")
      out.fallback = *tag;
    else
      out.mapping[fields[0]] = *tag;
  }
  return out;
}

// Pre-tagged stream: `surface<TAB>tag[<TAB>tag2]`, one token per line, a
// blank line ends a sentence. An optional first line `#layers: a[,b]`
// names the layers; otherwise they default to primary/secondary. The
// source text is reconstructed with single spaces and newline-separated
// sentences so byte spans stay well-defined.
inline Document load_pretagged(std::string_view contents, std::string id,
                               const TagsetMapping* mapping = nullptr) {
  std::vector<std::string> lines = io::split_lines(contents);
  std::vector<std::string> layer_names;
  std::size_t first_data_line = 0;
  if (!lines.empty() && lines[0].rfind("#layers:", 0) == 0) {
    std::string names = lines[0].substr(8);
    std::size_t start = 0;
    while (start <= names.size()) {
      std::size_t comma = names.find(',', start);
      std::string name = io::trim(comma == std::string::npos ? names.substr(start)
                                                             : names.substr(start, comma - start));
      if (!name.empty()) layer_names.push_back(name);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (layer_names.empty() || layer_names.size() > 2)
      throw MalformedInput(1, "#layers must name one or two layers");
    first_data_line = 1;
  }

  Document doc;
  doc.id = std::move(id);
  std::vector<std::vector<PosTag>> columns;
  std::vector<Token> current;
  std::string source;
  std::size_t expected_tags = layer_names.size();  // 0 = infer from first row

  auto flush = [&] {
    if (!current.empty()) {
      doc.sentences.push_back(std::move(current));
      current.clear();
      source.push_back('\n');
    }
  };

  for (std::size_t li = first_data_line; li < lines.size(); ++li) {
    const std::size_t lineno = li + 1;
    const std::string& line = lines[li];
    if (io::trim(line).empty()) {
      flush();
      continue;
    }
    std::vector<std::string> fields = io::split_tsv(line);
    if (fields[0].empty()) throw MalformedInput(lineno, "empty token surface");
    if (expected_tags == 0) {
      expected_tags = fields.size() - 1;
      if (expected_tags < 1 || expected_tags > 2)
        throw MalformedInput(lineno, "expected one or two tag columns");
    }
    if (fields.size() != expected_tags + 1)
      throw MalformedInput(lineno, "expected " + std::to_string(expected_tags + 1) +
                                       " columns, got " + std::to_string(fields.size()));
    columns.resize(expected_tags);
    for (std::size_t c = 0; c < expected_tags; ++c) {
      const std::string& raw = fields[c + 1];
      if (mapping) {
        columns[c].push_back(mapping->map(raw));
      } else if (auto tag = parse_pos_tag(raw)) {
        columns[c].push_back(*tag);
      } else {
        throw MalformedInput(lineno, "unknown tag \"" + raw + "\"");
      }
    }
    Token tok;
    tok.sentence_index = static_cast<int>(doc.sentences.size());
    tok.token_index = static_cast<int>(current.size());
    if (!current.empty()) source.push_back(' ');
    tok.begin = source.size();
    source += fields[0];
    tok.end = source.size();
    tok.surface = fields[0];
    current.push_back(std::move(tok));
  }
  flush();

  if (doc.sentences.empty()) throw EmptyDocument(doc.id);
  doc.source_text = std::move(source);

  if (layer_names.empty()) {
    layer_names = {"primary"};
    if (columns.size() > 1) layer_names.push_back("secondary");
  }
  for (std::size_t c = 0; c < columns.size(); ++c) {
    TagLayer layer{layer_names[c], std::move(columns[c])};
    doc.tag_layers.emplace(layer.layer_name, std::move(layer));
  }
  return doc;
}

}  // namespace charnet
