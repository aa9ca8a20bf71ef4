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

// End-to-end composition and the stage file formats. Every stage writes
// and reads plain files, so `extract`, `coref`, `interactions`, `graph`
// and `eval` chain into exactly what `run` produces in one go. All
// outputs are deterministic: identical input and config give
// byte-identical artifacts, recorded in a run manifest with checksums.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "charnet/coref.hpp"
#include "charnet/corpus.hpp"
#include "charnet/errors.hpp"
#include "charnet/evaluation.hpp"
#include "charnet/extraction.hpp"
#include "charnet/interactions.hpp"
#include "charnet/io.hpp"
#include "charnet/lexicon.hpp"
#include "charnet/network.hpp"
#include "charnet/tagging.hpp"

#include "json.hpp"

namespace charnet {

enum class TaggerMode { baseline, pretagged };

inline const char* to_string(TaggerMode m) {
  return m == TaggerMode::baseline ? "baseline" : "pretagged";
}

struct PipelineConfig {
  std::string titles_path;
  std::string presence_path;
  std::string locations_path;
  std::string first_names_path;
  std::string diminutives_path;
  std::optional<std::string> narrator_pronouns_path;
  std::optional<std::string> gender_markers_path;
  int window_sentences = 3;
  int prune_threshold = 3;
  std::optional<std::string> narrator;
  TaggerMode mode = TaggerMode::baseline;
  std::string output_dir = "out";
  std::vector<MarkerPair> markers;
  std::optional<std::string> tagset_map_path;
  std::optional<std::string> gold_path;
  std::optional<std::string> document_id;  // defaults to the input file stem
};

inline void validate_config(const PipelineConfig& config) {
  auto require = [](const std::string& path, const char* kind) {
    if (path.empty())
      throw ConfigError(std::string("missing lexicon path: ") + kind);
    if (!std::filesystem::exists(path))
      throw ConfigError(std::string(kind) + " lexicon not found: " + path);
  };
  require(config.titles_path, "titles");
  require(config.presence_path, "presence");
  require(config.locations_path, "locations");
  require(config.first_names_path, "first_names");
  require(config.diminutives_path, "diminutives");
  if (config.window_sentences < 1) throw ConfigError("window_sentences must be >= 1");
  if (config.prune_threshold < 0) throw ConfigError("prune_threshold must be >= 0");
}

inline LexiconSet load_lexicons(const PipelineConfig& config,
                                std::vector<std::string>* warnings = nullptr) {
  LexiconSet set;
  set.titles = load_lexicon(config.titles_path, LexiconKind::titles, warnings);
  set.presence = load_lexicon(config.presence_path, LexiconKind::presence, warnings);
  set.locations = load_lexicon(config.locations_path, LexiconKind::locations, warnings);
  set.first_names = load_lexicon(config.first_names_path, LexiconKind::first_names, warnings);
  set.diminutives = load_lexicon(config.diminutives_path, LexiconKind::diminutives, warnings);
  if (config.narrator_pronouns_path)
    set.narrator_pronouns =
        load_lexicon(*config.narrator_pronouns_path, LexiconKind::narrator_pronouns, warnings);
  if (config.gender_markers_path)
    set.gender_markers =
        load_lexicon(*config.gender_markers_path, LexiconKind::gender_markers, warnings);
  if (warnings) {
    for (std::string& issue : set.validate()) warnings->push_back(std::move(issue));
  }
  return set;
}

inline std::string document_id_for(const PipelineConfig& config, const std::string& input_path) {
  if (config.document_id) return *config.document_id;
  return std::filesystem::path(input_path).stem().string();
}

// Loads and tags the input according to the configured mode. Baseline
// mode segments the raw text (title abbreviations never end a sentence)
// and tags it heuristically; pretagged mode trusts the token stream.
inline Document load_input(const PipelineConfig& config, const std::string& input_path,
                           const LexiconSet& lexicons,
                           std::vector<std::string>* warnings = nullptr) {
  std::string contents = io::read_file(input_path);
  std::string id = document_id_for(config, input_path);
  if (config.mode == TaggerMode::pretagged) {
    if (!config.markers.empty() && warnings)
      warnings->push_back("strip markers ignored for pre-tagged input");
    if (config.tagset_map_path) {
      TagsetMapping mapping = parse_tagset_mapping(io::read_file(*config.tagset_map_path));
      return load_pretagged(contents, std::move(id), &mapping);
    }
    return load_pretagged(contents, std::move(id));
  }
  SegmenterOptions options;
  for (const std::string& title : lexicons.titles.entries()) {
    if (!title.empty() && title.back() == '.') options.abbreviations.insert(title);
  }
  Document doc = load_document(contents, std::move(id), options);
  doc = strip_nonliterary(doc, config.markers, options);
  return attach_layer(std::move(doc), baseline_tag(doc, lexicons));
}

// ---- stage file formats ----------------------------------------------

inline std::string format_mentions_tsv(const MentionList& list) {
  std::string out = "#document: " + list.document_id + "\n";
  for (const auto& m : list.mentions) {
    out += m.surface;
    out += "\t" + std::to_string(m.sentence_index);
    out += "\t" + std::to_string(m.begin);
    out += "\t" + std::to_string(m.end);
    out += std::string("\t") + (m.state == MentionState::confirmed ? "confirmed" : "candidate");
    out += std::string("\t") + (m.pattern ? to_string(*m.pattern) : "-");
    out.push_back('\n');
  }
  return out;
}

inline MentionList parse_mentions_tsv(std::string_view contents) {
  MentionList list;
  std::vector<std::string> lines = io::split_lines(contents);
  std::size_t start = 0;
  if (!lines.empty() && lines[0].rfind("#document: ", 0) == 0) {
    list.document_id = lines[0].substr(11);
    start = 1;
  }
  for (std::size_t i = start; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    std::vector<std::string> fields = io::split_tsv(lines[i]);
    if (fields.size() != 6) throw MalformedInput(i + 1, "expected 6 mention fields");
    CandidateMention m;
    m.surface = fields[0];
    m.sentence_index = std::stoi(fields[1]);
    m.begin = std::stoi(fields[2]);
    m.end = std::stoi(fields[3]);
    if (fields[4] == "confirmed")
      m.state = MentionState::confirmed;
    else if (fields[4] == "candidate")
      m.state = MentionState::candidate;
    else
      throw MalformedInput(i + 1, "unknown mention state \"" + fields[4] + "\"");
    if (fields[5] != "-") {
      m.pattern = parse_pattern(fields[5]);
      if (!m.pattern) throw MalformedInput(i + 1, "unknown pattern \"" + fields[5] + "\"");
    }
    list.mentions.push_back(std::move(m));
  }
  return list;
}

inline std::string format_group_mentions_tsv(const std::vector<CharacterGroup>& groups,
                                             const std::string& document_id) {
  std::string out = "#document: " + document_id + "\n";
  for (const auto& g : groups) {
    for (const auto& m : g.mentions) {
      out += std::to_string(g.group_id);
      out += "\t" + std::to_string(m.sentence_index);
      out += "\t" + std::to_string(m.begin);
      out += "\t" + std::to_string(m.end);
      out += "\t" + m.surface;
      out.push_back('\n');
    }
  }
  return out;
}

inline std::vector<CharacterGroup> parse_roster_csv(std::string_view contents) {
  std::vector<std::string> lines = io::split_lines(contents);
  if (lines.empty() ||
      io::parse_csv_row(lines[0]) != std::vector<std::string>{"group_id", "representation",
                                                              "gender", "occurrences", "aliases"})
    throw MalformedInput(1, "expected roster CSV header");
  std::vector<CharacterGroup> groups;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    std::vector<std::string> fields = io::parse_csv_row(lines[i]);
    if (fields.size() != 5) throw MalformedInput(i + 1, "expected 5 roster fields");
    CharacterGroup g;
    g.group_id = std::stoi(fields[0]);
    g.representation = fields[1];
    auto gender = parse_gender(fields[2]);
    if (!gender) throw MalformedInput(i + 1, "unknown gender code \"" + fields[2] + "\"");
    g.gender = *gender;
    g.occurrence_count = std::stoi(fields[3]);
    std::size_t pos = 0;
    const std::string& aliases = fields[4];
    while (pos <= aliases.size() && !aliases.empty()) {
      std::size_t bar = aliases.find('|', pos);
      std::string alias =
          bar == std::string::npos ? aliases.substr(pos) : aliases.substr(pos, bar - pos);
      if (!alias.empty()) g.aliases.push_back(alias);
      if (bar == std::string::npos) break;
      pos = bar + 1;
    }
    groups.push_back(std::move(g));
  }
  return groups;
}

// Rebuilds roster groups with their mentions from the two stage files.
// Returns the groups plus the document id recorded in the mentions file.
inline std::pair<std::vector<CharacterGroup>, std::string> parse_groups_with_mentions(
    std::string_view roster_csv, std::string_view group_mentions_tsv) {
  std::vector<CharacterGroup> groups = parse_roster_csv(roster_csv);
  std::map<int, CharacterGroup*> by_id;
  for (auto& g : groups) by_id[g.group_id] = &g;

  std::vector<std::string> lines = io::split_lines(group_mentions_tsv);
  std::string document_id;
  std::size_t start = 0;
  if (!lines.empty() && lines[0].rfind("#document: ", 0) == 0) {
    document_id = lines[0].substr(11);
    start = 1;
  }
  for (std::size_t i = start; i < lines.size(); ++i) {
    if (lines[i].empty()) continue;
    std::vector<std::string> fields = io::split_tsv(lines[i]);
    if (fields.size() != 5) throw MalformedInput(i + 1, "expected 5 group-mention fields");
    auto it = by_id.find(std::stoi(fields[0]));
    if (it == by_id.end())
      throw InconsistentInput("group-mention references unknown group " + fields[0]);
    CandidateMention m;
    m.sentence_index = std::stoi(fields[1]);
    m.begin = std::stoi(fields[2]);
    m.end = std::stoi(fields[3]);
    m.surface = fields[4];
    m.state = MentionState::confirmed;
    it->second->mentions.push_back(std::move(m));
  }
  for (const auto& g : groups) {
    if (static_cast<int>(g.mentions.size()) != g.occurrence_count)
      throw InconsistentInput("roster occurrence count for \"" + g.representation +
                              "\" does not match its mention lines");
  }
  return {std::move(groups), std::move(document_id)};
}

// Interaction CSV rows back into group-id records, via representations.
inline InteractionTable table_from_rows(const std::vector<TableRow>& rows,
                                        const std::vector<CharacterGroup>& groups) {
  std::map<std::string, int> rep_to_id;
  for (const auto& g : groups) {
    if (!rep_to_id.emplace(g.representation, g.group_id).second)
      throw InconsistentInput("duplicate representation \"" + g.representation +
                              "\"; interaction rows are ambiguous");
  }
  InteractionTable table;
  for (const auto& row : rows) {
    auto a = rep_to_id.find(row.character_a);
    auto b = rep_to_id.find(row.character_b);
    if (a == rep_to_id.end())
      throw InconsistentInput("unknown character in interaction table: " + row.character_a);
    if (b == rep_to_id.end())
      throw InconsistentInput("unknown character in interaction table: " + row.character_b);
    InteractionRecord rec;
    rec.group_a = std::min(a->second, b->second);
    rec.group_b = std::max(a->second, b->second);
    rec.count = row.interactions;
    table.records.push_back(rec);
  }
  std::sort(table.records.begin(), table.records.end(),
            [](const InteractionRecord& x, const InteractionRecord& y) {
              return std::tie(x.group_a, x.group_b) < std::tie(y.group_a, y.group_b);
            });
  return table;
}

// ---- config file ------------------------------------------------------

// Key/value config: `key = value`, '#' comments, repeated strip_begin /
// strip_end keys pair up in order. Command-line flags override any value
// set here.
inline std::map<std::string, std::vector<std::string>> parse_config_file(
    std::string_view contents) {
  std::map<std::string, std::vector<std::string>> out;
  std::size_t lineno = 0;
  for (const std::string& raw : io::split_lines(contents)) {
    ++lineno;
    std::string line = io::trim(raw);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError("config line " + std::to_string(lineno) +
                                                   ": expected key = value");
    std::string key = io::trim(line.substr(0, eq));
    std::string value = io::trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("config line " + std::to_string(lineno) + ": empty key");
    out[key].push_back(value);
  }
  return out;
}

// Canonical serialization used for the manifest and the config hash.
inline std::string serialize_config(const PipelineConfig& config) {
  std::string out;
  auto add = [&](const std::string& key, const std::string& value) {
    out += key + " = " + value + "\n";
  };
  add("titles", config.titles_path);
  add("presence", config.presence_path);
  add("locations", config.locations_path);
  add("first_names", config.first_names_path);
  add("diminutives", config.diminutives_path);
  add("narrator_pronouns", config.narrator_pronouns_path.value_or(""));
  add("gender_markers", config.gender_markers_path.value_or(""));
  add("window_sentences", std::to_string(config.window_sentences));
  add("prune_threshold", std::to_string(config.prune_threshold));
  add("narrator", config.narrator.value_or(""));
  add("mode", to_string(config.mode));
  add("out", config.output_dir);
  for (const auto& m : config.markers) {
    add("strip_begin", m.begin);
    add("strip_end", m.end);
  }
  add("tagset_map", config.tagset_map_path.value_or(""));
  add("gold", config.gold_path.value_or(""));
  add("document_id", config.document_id.value_or(""));
  return out;
}

// ---- full pipeline ----------------------------------------------------

struct PipelineResult {
  std::string document_id;
  std::vector<std::pair<std::string, std::string>> artifacts;  // name -> contents
  std::vector<std::string> warnings;
  std::vector<EvalReport> reports;        // empty unless gold was supplied
  std::vector<CharacterGroup> groups;     // final roster, for callers
};

// Runs extraction, co-reference, interactions, graph export and optional
// evaluation; returns every artifact and writes them under output_dir
// together with a manifest of checksums.
inline PipelineResult run_pipeline(const PipelineConfig& config, const std::string& input_path,
                                   bool write_files = true) {
  validate_config(config);
  PipelineResult result;
  LexiconSet lexicons = load_lexicons(config, &result.warnings);
  Document doc = load_input(config, input_path, lexicons, &result.warnings);
  result.document_id = doc.id;

  CneResult cne = run_cne(doc, lexicons);
  for (const auto& w : cne.warnings) result.warnings.push_back(w);

  CorefConfig coref_config;
  coref_config.prune_threshold = config.prune_threshold;
  coref_config.narrator = config.narrator;
  CorefResult coref = resolve_characters(cne.kept, doc, lexicons, coref_config);
  for (const auto& w : coref.warnings) result.warnings.push_back(w);

  WindowConfig window{config.window_sentences};
  InteractionTable table = detect_interactions(coref.groups, window);
  std::vector<TableRow> rows = to_table(table, coref.groups);
  CharacterNetwork net = build_network(coref.groups, rows);

  auto& artifacts = result.artifacts;
  artifacts.emplace_back("mentions.tsv", format_mentions_tsv(cne.kept));
  artifacts.emplace_back("audit.tsv", format_audit_log(cne.removed));
  artifacts.emplace_back("roster.csv", format_roster_csv(coref.groups));
  artifacts.emplace_back("group_mentions.tsv",
                         format_group_mentions_tsv(coref.groups, doc.id));
  artifacts.emplace_back("interactions.csv", format_interactions_csv(rows));
  artifacts.emplace_back("network.dot", export_graph(net, GraphFormat::dot));
  artifacts.emplace_back("network.graphml", export_graph(net, GraphFormat::graphml));
  artifacts.emplace_back("network.json", export_graph(net, GraphFormat::json));

  if (config.gold_path) {
    GoldAnnotation gold = load_gold(*config.gold_path);
    result.reports.push_back(eval_mentions(coref.groups, gold, doc.id));
    result.reports.push_back(eval_interactions(coref.groups, table, gold, doc.id));
    artifacts.emplace_back("report.csv", format_report_csv(result.reports));
    artifacts.emplace_back("report_detail.json", format_report_detail_json(result.reports));
  }

  // Manifest: inputs, canonical config + hash, output checksums.
  nlohmann::ordered_json manifest;
  manifest["document"] = doc.id;
  manifest["input"] = input_path;
  std::string config_text = serialize_config(config);
  manifest["config"] = config_text;
  manifest["config_hash"] = io::fnv1a64_hex(config_text);
  manifest["outputs"] = nlohmann::ordered_json::array();
  for (const auto& [name, contents] : artifacts) {
    manifest["outputs"].push_back({{"file", name},
                                   {"bytes", contents.size()},
                                   {"fnv1a64", io::fnv1a64_hex(contents)}});
  }
  artifacts.emplace_back("manifest.json", manifest.dump(2) + "\n");

  if (write_files) {
    std::filesystem::path out_dir(config.output_dir);
    for (const auto& [name, contents] : artifacts) io::write_file(out_dir / name, contents);
  }
  result.groups = std::move(coref.groups);
  return result;
}

}  // namespace charnet
