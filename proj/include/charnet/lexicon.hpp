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

// Rule resources behind the extraction filters: titles, presence verbs, a
// location gazetteer, a first-names database with gender, diminutive to
// canonical-name pairs, narrator pronouns, and gendered marker words.
//
// File format: UTF-8, one entry per line, '#' starts a comment line.
// Map kinds carry a tab-separated payload column.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "charnet/errors.hpp"
#include "charnet/io.hpp"
#include "charnet/text.hpp"

namespace charnet {

enum class LexiconKind {
  titles,
  presence,
  locations,
  first_names,
  diminutives,
  narrator_pronouns,
  gender_markers,
};

enum class Gender { male, female, unknown };

inline char gender_code(Gender g) {
  switch (g) {
    case Gender::male: return 'M';
    case Gender::female: return 'F';
    default: return 'U';
  }
}

inline std::optional<Gender> parse_gender(std::string_view s) {
  if (s == "M") return Gender::male;
  if (s == "F") return Gender::female;
  if (s == "U") return Gender::unknown;
  return std::nullopt;
}

// Immutable after load; all keys are normalization-canonical and lookups
// normalize their argument first.
class Lexicon {
 public:
  explicit Lexicon(LexiconKind kind) : kind_(kind) {}

  LexiconKind kind() const { return kind_; }
  bool is_map_kind() const {
    return kind_ == LexiconKind::first_names || kind_ == LexiconKind::diminutives ||
           kind_ == LexiconKind::gender_markers;
  }

  bool contains(std::string_view key) const {
    std::string k = text::normalize(key);
    if (is_map_kind()) return values_.count(k) > 0;
    return entries_.count(k) > 0;
  }

  // Payload for map kinds: the display-form value for diminutives, the
  // gender code string for first_names / gender_markers.
  std::optional<std::string> value_of(std::string_view key) const {
    auto it = values_.find(text::normalize(key));
    if (it == values_.end()) return std::nullopt;
    return it->second;
  }

  std::optional<Gender> gender_of(std::string_view key) const {
    auto v = value_of(key);
    if (!v) return std::nullopt;
    return parse_gender(*v);
  }

  std::optional<std::string> canonical_of(std::string_view diminutive) const {
    return value_of(diminutive);
  }

  std::size_t size() const { return is_map_kind() ? values_.size() : entries_.size(); }
  bool empty() const { return size() == 0; }

  const std::set<std::string>& entries() const { return entries_; }
  const std::map<std::string, std::string>& values() const { return values_; }

  void insert_entry(std::string_view raw) { entries_.insert(text::normalize(raw)); }
  void insert_value(std::string_view raw_key, std::string value) {
    values_.emplace(text::normalize(raw_key), std::move(value));
  }

 private:
  LexiconKind kind_;
  std::set<std::string> entries_;                 // set kinds
  std::map<std::string, std::string> values_;    // map kinds
};

// Parses lexicon file contents. Duplicate identical entries are dropped;
// a duplicate map key with a conflicting payload is an error so that the
// loaded lexicon never depends on line order.
inline Lexicon parse_lexicon(std::string_view contents, LexiconKind kind,
                             std::vector<std::string>* warnings = nullptr) {
  Lexicon lex(kind);
  bool map_kind = lex.is_map_kind();
  std::size_t lineno = 0;
  for (const std::string& raw_line : io::split_lines(contents)) {
    ++lineno;
    std::string line = io::trim(raw_line);
    if (line.empty() || line[0] == '#') continue;
    if (!map_kind) {
      std::string key = text::normalize(line);
      if (key.empty()) throw MalformedLexicon(lineno, "entry normalizes to nothing");
      lex.insert_entry(line);
      continue;
    }
    std::vector<std::string> fields = io::split_tsv(line);
    if (fields.size() != 2)
      throw MalformedLexicon(lineno, "expected key<TAB>value, got " +
                                         std::to_string(fields.size()) + " column(s)");
    std::string key = text::normalize(fields[0]);
    std::string value = io::trim(fields[1]);
    if (key.empty()) throw MalformedLexicon(lineno, "key normalizes to nothing");
    if (kind == LexiconKind::first_names || kind == LexiconKind::gender_markers) {
      if (!parse_gender(value))
        throw MalformedLexicon(lineno, "unknown gender code \"" + value + "\"");
      if (kind == LexiconKind::gender_markers && value == "U")
        throw MalformedLexicon(lineno, "gender markers must be M or F");
    } else if (value.empty()) {
      throw MalformedLexicon(lineno, "empty canonical form");
    }
    if (auto existing = lex.value_of(fields[0])) {
      if (*existing != value)
        throw MalformedLexicon(lineno, "conflicting duplicate for key \"" + key + "\"");
      continue;
    }
    lex.insert_value(fields[0], value);
  }
  if (lex.empty() && warnings)
    warnings->push_back("lexicon file is empty (" + std::to_string(lineno) + " lines read)");
  return lex;
}

inline Lexicon load_lexicon(const std::string& path, LexiconKind kind,
                            std::vector<std::string>* warnings = nullptr) {
  return parse_lexicon(io::read_file(path), kind, warnings);
}

// Built-in defaults so a pipeline without the two optional resources still
// runs the narrator rule and the gender vote.
inline Lexicon default_narrator_pronouns() {
  Lexicon lex(LexiconKind::narrator_pronouns);
  for (const char* w : {"eu", "me", "mim", "comigo"}) lex.insert_entry(w);
  return lex;
}

inline Lexicon default_gender_markers() {
  Lexicon lex(LexiconKind::gender_markers);
  for (const char* w : {"o", "os", "do", "dos", "ao", "aos", "um", "senhor", "dom"})
    lex.insert_value(w, "M");
  for (const char* w : {"a", "as", "da", "das", "à", "às", "uma", "senhora", "dona"})
    lex.insert_value(w, "F");
  return lex;
}

// The full resource bundle the pipeline stages consume.
struct LexiconSet {
  Lexicon titles{LexiconKind::titles};
  Lexicon presence{LexiconKind::presence};
  Lexicon locations{LexiconKind::locations};
  Lexicon first_names{LexiconKind::first_names};
  Lexicon diminutives{LexiconKind::diminutives};
  Lexicon narrator_pronouns = default_narrator_pronouns();
  Lexicon gender_markers = default_gender_markers();

  // Flags diminutive canonicals missing from the names database.
  std::vector<std::string> validate() const {
    std::vector<std::string> issues;
    for (const auto& [dim, canonical] : diminutives.values()) {
      if (!first_names.contains(canonical))
        issues.push_back("diminutive \"" + dim + "\" maps to \"" + canonical +
                         "\" which is not in the first-names database");
    }
    return issues;
  }
};

}  // namespace charnet
