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

// Interaction detection by sentence-window co-occurrence. Two mentions of
// different characters interact when their sentences are fewer than
// `window_sentences` apart; every unordered mention pair counts exactly
// once, so counts never depend on how overlapping windows are slid.

#include <algorithm>
#include <map>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "charnet/coref.hpp"
#include "charnet/errors.hpp"
#include "charnet/io.hpp"

namespace charnet {

struct WindowConfig {
  int window_sentences = 3;
};

struct InteractionRecord {
  int group_a = 0;  // group_a < group_b
  int group_b = 0;
  int count = 0;
  std::vector<std::pair<int, int>> evidence;  // (sentence of a-mention, sentence of b-mention)
};

struct InteractionTable {
  std::vector<InteractionRecord> records;  // sorted by (group_a, group_b)
};

inline InteractionTable detect_interactions(const std::vector<CharacterGroup>& groups,
                                            const WindowConfig& config = {}) {
  if (config.window_sentences < 1)
    throw ConfigError("window_sentences must be at least 1");

  struct Point {
    int sentence;
    int group_id;
  };
  std::vector<Point> points;
  for (const auto& g : groups) {
    for (const auto& m : g.mentions) points.push_back({m.sentence_index, g.group_id});
  }
  std::stable_sort(points.begin(), points.end(),
                   [](const Point& a, const Point& b) { return a.sentence < b.sentence; });

  std::map<std::pair<int, int>, InteractionRecord> pairs;
  const int window = config.window_sentences;
  std::size_t lo = 0;
  for (std::size_t j = 0; j < points.size(); ++j) {
    while (lo < j && points[j].sentence - points[lo].sentence >= window) ++lo;
    for (std::size_t i = lo; i < j; ++i) {
      if (points[i].group_id == points[j].group_id) continue;
      int a = points[i].group_id, b = points[j].group_id;
      int sent_a = points[i].sentence, sent_b = points[j].sentence;
      if (a > b) {
        std::swap(a, b);
        std::swap(sent_a, sent_b);
      }
      InteractionRecord& rec = pairs[{a, b}];
      rec.group_a = a;
      rec.group_b = b;
      rec.evidence.emplace_back(sent_a, sent_b);
      ++rec.count;
    }
  }
  InteractionTable table;
  table.records.reserve(pairs.size());
  for (auto& [key, rec] : pairs) {
    std::sort(rec.evidence.begin(), rec.evidence.end());
    table.records.push_back(std::move(rec));
  }
  return table;
}

struct TableRow {
  std::string character_a;
  std::string character_b;
  int interactions = 0;
};

// Rows use group representations and sort by count descending, then names.
inline std::vector<TableRow> to_table(const InteractionTable& table,
                                      const std::vector<CharacterGroup>& groups) {
  std::map<int, const CharacterGroup*> by_id;
  for (const auto& g : groups) by_id[g.group_id] = &g;
  std::vector<TableRow> rows;
  rows.reserve(table.records.size());
  for (const auto& rec : table.records) {
    auto a = by_id.find(rec.group_a);
    auto b = by_id.find(rec.group_b);
    if (a == by_id.end() || b == by_id.end())
      throw InconsistentInput("interaction references a group that is not in the roster");
    rows.push_back({a->second->representation, b->second->representation, rec.count});
  }
  std::sort(rows.begin(), rows.end(), [](const TableRow& x, const TableRow& y) {
    if (x.interactions != y.interactions) return x.interactions > y.interactions;
    return std::tie(x.character_a, x.character_b) < std::tie(y.character_a, y.character_b);
  });
  return rows;
}

inline std::string format_interactions_csv(const std::vector<TableRow>& rows) {
  std::string out = "character_a,character_b,interactions\n";
  for (const auto& row : rows)
    out += io::csv_row({row.character_a, row.character_b, std::to_string(row.interactions)});
  return out;
}

inline std::vector<TableRow> parse_interactions_csv(std::string_view contents) {
  std::vector<std::string> lines = io::split_lines(contents);
  if (lines.empty() || io::parse_csv_row(lines[0]) !=
                           std::vector<std::string>{"character_a", "character_b", "interactions"})
    throw MalformedInput(1, "expected interactions CSV header");
  std::vector<TableRow> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    std::vector<std::string> fields = io::parse_csv_row(lines[i]);
    if (fields.size() != 3) throw MalformedInput(i + 1, "expected 3 CSV fields");
    rows.push_back({fields[0], fields[1], std::stoi(fields[2])});
  }
  return rows;
}

}  // namespace charnet
