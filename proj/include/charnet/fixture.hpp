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

// Internal-consistency checks for the bundled test fixture: the inputs
// must load, the gold annotation must be self-consistent, the expected
// outputs must parse, and every file must match its recorded checksum.

#include <filesystem>
#include <string>
#include <vector>

#include "charnet/corpus.hpp"
#include "charnet/errors.hpp"
#include "charnet/evaluation.hpp"
#include "charnet/interactions.hpp"
#include "charnet/io.hpp"
#include "charnet/network.hpp"
#include "charnet/pipeline.hpp"

namespace charnet {

struct FixtureReport {
  std::vector<std::string> checked;
};

inline FixtureReport validate_fixture(const std::filesystem::path& dir) {
  FixtureReport report;
  auto note = [&](const std::string& what) { report.checked.push_back(what); };

  try {
    Document text_doc = load_document(io::read_file(dir / "novel.txt"), "novel");
    note("novel.txt: " + std::to_string(text_doc.sentences.size()) + " sentences");

    Document tagged = load_pretagged(io::read_file(dir / "novel_pretagged.tsv"), "novel");
    if (!tagged.layer("primary") || !tagged.layer("secondary"))
      throw FixtureError("pre-tagged fixture must carry primary and secondary layers");
    note("novel_pretagged.tsv: " + std::to_string(tagged.token_count()) + " tokens");

    GoldAnnotation gold = parse_gold(io::read_file(dir / "gold.json"));
    for (const auto& c : gold.characters) {
      if (c.mentions.empty())
        throw FixtureError("gold character \"" + c.id + "\" has no mentions");
      for (const auto& m : c.mentions) {
        if (m.sentence >= static_cast<int>(tagged.sentences.size()))
          throw FixtureError("gold mention of \"" + c.id + "\" at sentence " +
                             std::to_string(m.sentence) + " is past the document");
      }
    }
    note("gold.json: " + std::to_string(gold.characters.size()) + " characters, " +
         std::to_string(gold.interactions.size()) + " interactions");

    auto [groups, doc_id] = parse_groups_with_mentions(
        io::read_file(dir / "expected" / "roster.csv"),
        io::read_file(dir / "expected" / "group_mentions.tsv"));
    note("expected roster: " + std::to_string(groups.size()) + " groups");

    std::vector<TableRow> rows =
        parse_interactions_csv(io::read_file(dir / "expected" / "interactions.csv"));
    CharacterNetwork net =
        parse_network_json(io::read_file(dir / "expected" / "network.json"));
    if (net.edges.size() != rows.size())
      throw FixtureError("expected network edge count differs from interaction rows");
    note("expected interactions: " + std::to_string(rows.size()) + " rows");

    // Checksums cover both inputs and expected outputs.
    std::vector<std::string> lines = io::split_lines(io::read_file(dir / "checksums.tsv"));
    std::size_t files_checked = 0;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (lines[i].empty() || lines[i][0] == '#') continue;
      std::vector<std::string> fields = io::split_tsv(lines[i]);
      if (fields.size() != 2)
        throw FixtureError("checksums.tsv line " + std::to_string(i + 1) + " malformed");
      std::string actual = io::fnv1a64_hex(io::read_file(dir / fields[0]));
      if (actual != fields[1])
        throw FixtureError("checksum mismatch for " + fields[0] + ": expected " + fields[1] +
                           ", got " + actual);
      ++files_checked;
    }
    if (files_checked == 0) throw FixtureError("checksums.tsv lists no files");
    note("checksums: " + std::to_string(files_checked) + " files verified");
  } catch (const FixtureError&) {
    throw;
  } catch (const Error& e) {
    throw FixtureError(e.what());
  }
  return report;
}

}  // namespace charnet
