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

#include <map>
#include <random>
#include <utility>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "support/generators.hpp"
#include "support/helpers.hpp"
#include "support/oracles.hpp"

using namespace charnet;

namespace {

CharacterGroup group_at(int id, const std::string& rep, const std::vector<int>& sentences) {
  CharacterGroup g;
  g.group_id = id;
  g.representation = rep;
  g.aliases = {rep};
  for (int s : sentences) {
    CandidateMention m;
    m.sentence_index = s;
    m.begin = 0;
    m.end = 1;
    m.surface = rep;
    g.mentions.push_back(m);
  }
  g.occurrence_count = static_cast<int>(g.mentions.size());
  return g;
}

std::map<std::pair<int, int>, int> counts_of(const InteractionTable& table) {
  std::map<std::pair<int, int>, int> out;
  for (const auto& rec : table.records) out[{rec.group_a, rec.group_b}] = rec.count;
  return out;
}

}  // namespace

TEST_CASE("same-sentence mentions interact") {
  std::vector<CharacterGroup> groups = {group_at(1, "Sagul", {4}),
                                        group_at(2, "Gatinhas", {4})};
  InteractionTable table = detect_interactions(groups, {});
  REQUIRE(table.records.size() == 1);
  CHECK(table.records[0].group_a == 1);
  CHECK(table.records[0].group_b == 2);
  CHECK(table.records[0].count == 1);
  CHECK(table.records[0].evidence == std::vector<std::pair<int, int>>{{4, 4}});
}

TEST_CASE("window boundary: three sentences apart is out with window 3") {
  std::vector<CharacterGroup> groups = {group_at(1, "A", {0}), group_at(2, "B", {3})};
  CHECK(detect_interactions(groups, {3}).records.empty());
  // distance 2 is in
  std::vector<CharacterGroup> close = {group_at(1, "A", {0}), group_at(2, "B", {2})};
  CHECK(detect_interactions(close, {3}).records.size() == 1);
}

TEST_CASE("no self-interaction for mentions of the same group") {
  std::vector<CharacterGroup> groups = {group_at(1, "A", {0, 0, 1, 2})};
  CHECK(detect_interactions(groups, {3}).records.empty());
}

TEST_CASE("every unordered mention pair counts once") {
  // Two mentions of A and two of B in one sentence: 4 cross pairs.
  std::vector<CharacterGroup> groups = {group_at(1, "A", {5, 5}), group_at(2, "B", {5, 5})};
  InteractionTable table = detect_interactions(groups, {3});
  REQUIRE(table.records.size() == 1);
  CHECK(table.records[0].count == 4);
}

TEST_CASE("window 1 is exactly same-sentence co-occurrence") {
  std::mt19937 rng(101);
  for (int iter = 0; iter < 200; ++iter) {
    auto groups = testsupport::random_groups(rng);
    InteractionTable table = detect_interactions(groups, {1});
    for (const auto& rec : table.records) {
      for (auto [sa, sb] : rec.evidence) CHECK(sa == sb);
    }
    CHECK(counts_of(table) == testsupport::oracle_interactions(groups, 1));
  }
}

TEST_CASE("property: matches the brute-force oracle for windows 1..5") {
  std::mt19937 rng(103);
  for (int iter = 0; iter < 300; ++iter) {
    auto groups = testsupport::random_groups(rng);
    for (int window = 1; window <= 5; ++window) {
      CHECK(counts_of(detect_interactions(groups, {window})) ==
            testsupport::oracle_interactions(groups, window));
    }
  }
}

TEST_CASE("property: widening the window never loses interactions") {
  std::mt19937 rng(107);
  for (int iter = 0; iter < 200; ++iter) {
    auto groups = testsupport::random_groups(rng);
    std::map<std::pair<int, int>, int> previous;
    for (int window = 1; window <= 5; ++window) {
      auto counts = counts_of(detect_interactions(groups, {window}));
      for (const auto& [pair, count] : previous) {
        CHECK(counts.count(pair));
        CHECK(counts[pair] >= count);
      }
      previous = std::move(counts);
    }
  }
}

TEST_CASE("property: group order does not change counts") {
  std::mt19937 rng(109);
  for (int iter = 0; iter < 100; ++iter) {
    auto groups = testsupport::random_groups(rng);
    auto reference = counts_of(detect_interactions(groups, {3}));
    std::shuffle(groups.begin(), groups.end(), rng);
    CHECK(counts_of(detect_interactions(groups, {3})) == reference);
  }
}

TEST_CASE("evidence pairs satisfy the window and match the counts") {
  std::mt19937 rng(113);
  for (int iter = 0; iter < 100; ++iter) {
    auto groups = testsupport::random_groups(rng);
    InteractionTable table = detect_interactions(groups, {3});
    for (const auto& rec : table.records) {
      CHECK(rec.group_a < rec.group_b);
      CHECK(rec.count == static_cast<int>(rec.evidence.size()));
      for (auto [sa, sb] : rec.evidence) {
        int delta = sa > sb ? sa - sb : sb - sa;
        CHECK(delta < 3);
      }
    }
  }
}

TEST_CASE("invalid window is rejected") {
  CHECK_THROWS_AS(detect_interactions({}, {0}), ConfigError);
}

TEST_CASE("table rows use representations, sorted by count then names") {
  std::vector<CharacterGroup> groups = {group_at(1, "Sagul", {0, 1, 2}),
                                        group_at(2, "Gatinhas", {0, 1}),
                                        group_at(3, "Teresa", {2})};
  InteractionTable table = detect_interactions(groups, {1});
  std::vector<TableRow> rows = to_table(table, groups);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].character_a == "Sagul");
  CHECK(rows[0].character_b == "Gatinhas");
  CHECK(rows[0].interactions == 2);
  CHECK(rows[1].character_a == "Sagul");
  CHECK(rows[1].character_b == "Teresa");
  CHECK(rows[1].interactions == 1);
}

TEST_CASE("empty records give a header-only table") {
  CHECK(format_interactions_csv({}) == "character_a,character_b,interactions\n");
}

TEST_CASE("tied counts order lexicographically") {
  std::vector<CharacterGroup> groups = {group_at(1, "Zulmira", {0}), group_at(2, "Ana", {0}),
                                        group_at(3, "Bento", {9}), group_at(4, "Clara", {9})};
  std::vector<TableRow> rows = to_table(detect_interactions(groups, {1}), groups);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].character_a == "Bento");
  CHECK(rows[1].character_a == "Zulmira");
}

TEST_CASE("interaction CSV round trip") {
  std::vector<CharacterGroup> groups = {group_at(1, "Sagul", {0, 3}),
                                        group_at(2, "Gatinhas", {1, 2})};
  std::vector<TableRow> rows = to_table(detect_interactions(groups, {3}), groups);
  std::string csv = format_interactions_csv(rows);
  std::vector<TableRow> parsed = parse_interactions_csv(csv);
  REQUIRE(parsed.size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    CHECK(parsed[i].character_a == rows[i].character_a);
    CHECK(parsed[i].character_b == rows[i].character_b);
    CHECK(parsed[i].interactions == rows[i].interactions);
  }
}

TEST_CASE("unknown group in a table row is inconsistent input") {
  std::vector<CharacterGroup> groups = {group_at(1, "Sagul", {0})};
  InteractionTable table;
  InteractionRecord rec;
  rec.group_a = 1;
  rec.group_b = 9;
  rec.count = 1;
  table.records.push_back(rec);
  CHECK_THROWS_AS(to_table(table, groups), InconsistentInput);
}
