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

// charnet CLI: extracts character social networks from literary text.
// Subcommands mirror the pipeline stages; `run` chains them all. Exit
// codes: 0 success, 1 input/config error, 2 pipeline error.

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "charnet/charnet.hpp"

namespace {

namespace fs = std::filesystem;
using namespace charnet;

struct CliState {
  std::string config_path;
  std::string lexicon_dir;
  PipelineConfig config;
  std::vector<std::string> strip_begin;
  std::vector<std::string> strip_end;
  std::string narrator;
  std::string mode = "baseline";
  std::string tagset_map;
  std::string gold;
  std::string doc_id;
  std::string narrator_pronouns;
  std::string gender_markers;
};

void add_shared_options(CLI::App* cmd, CliState& st) {
  cmd->add_option("--config", st.config_path, "key = value config file; flags override it");
  cmd->add_option("--lexicons", st.lexicon_dir,
                  "directory with titles.txt, presence.txt, locations.txt, first_names.tsv, "
                  "diminutives.tsv, narrator_pronouns.txt, gender_markers.tsv");
  cmd->add_option("--titles", st.config.titles_path, "titles lexicon");
  cmd->add_option("--presence", st.config.presence_path, "presence-indicator lexicon");
  cmd->add_option("--locations", st.config.locations_path, "location gazetteer");
  cmd->add_option("--first-names", st.config.first_names_path, "first-names database");
  cmd->add_option("--diminutives", st.config.diminutives_path, "diminutive map");
  cmd->add_option("--narrator-pronouns", st.narrator_pronouns, "narrator pronoun list");
  cmd->add_option("--gender-markers", st.gender_markers, "gendered marker words");
  cmd->add_option("--window", st.config.window_sentences, "co-occurrence window in sentences");
  cmd->add_option("--prune", st.config.prune_threshold, "minimum mentions per character");
  cmd->add_option("--narrator", st.narrator, "narrator group (representation or alias)");
  cmd->add_option("--mode", st.mode, "tagger mode: baseline or pretagged");
  cmd->add_option("--out", st.config.output_dir, "output directory");
  cmd->add_option("--strip-begin", st.strip_begin, "front/back-matter begin marker (repeatable)");
  cmd->add_option("--strip-end", st.strip_end, "matching end marker (repeatable)");
  cmd->add_option("--tagset-map", st.tagset_map, "raw-tag to tag mapping file");
  cmd->add_option("--gold", st.gold, "gold annotation JSON (enables evaluation)");
  cmd->add_option("--doc-id", st.doc_id, "document id (default: input file stem)");
}

// Config-file values fill anything the command line left unset.
void finalize_config(CLI::App* cmd, CliState& st) {
  std::map<std::string, std::vector<std::string>> file_values;
  if (!st.config_path.empty()) file_values = parse_config_file(io::read_file(st.config_path));

  auto from_file = [&](const char* key) -> std::optional<std::string> {
    auto it = file_values.find(key);
    if (it == file_values.end() || it->second.empty()) return std::nullopt;
    return it->second.back();
  };
  auto fill = [&](const char* flag, const char* key, std::string& target) {
    if (cmd->count(flag) == 0) {
      if (auto v = from_file(key)) target = *v;
    }
  };

  fill("--lexicons", "lexicons", st.lexicon_dir);
  fill("--titles", "titles", st.config.titles_path);
  fill("--presence", "presence", st.config.presence_path);
  fill("--locations", "locations", st.config.locations_path);
  fill("--first-names", "first_names", st.config.first_names_path);
  fill("--diminutives", "diminutives", st.config.diminutives_path);
  fill("--narrator-pronouns", "narrator_pronouns", st.narrator_pronouns);
  fill("--gender-markers", "gender_markers", st.gender_markers);
  fill("--narrator", "narrator", st.narrator);
  fill("--mode", "mode", st.mode);
  fill("--out", "out", st.config.output_dir);
  fill("--tagset-map", "tagset_map", st.tagset_map);
  fill("--gold", "gold", st.gold);
  fill("--doc-id", "document_id", st.doc_id);
  if (cmd->count("--window") == 0) {
    if (auto v = from_file("window_sentences")) st.config.window_sentences = std::stoi(*v);
  }
  if (cmd->count("--prune") == 0) {
    if (auto v = from_file("prune_threshold")) st.config.prune_threshold = std::stoi(*v);
  }
  if (cmd->count("--strip-begin") == 0) {
    if (auto it = file_values.find("strip_begin"); it != file_values.end())
      st.strip_begin = it->second;
  }
  if (cmd->count("--strip-end") == 0) {
    if (auto it = file_values.find("strip_end"); it != file_values.end())
      st.strip_end = it->second;
  }

  if (!st.lexicon_dir.empty()) {
    fs::path dir(st.lexicon_dir);
    auto defaulted = [&](std::string& path, const char* name) {
      if (path.empty()) path = (dir / name).string();
    };
    defaulted(st.config.titles_path, "titles.txt");
    defaulted(st.config.presence_path, "presence.txt");
    defaulted(st.config.locations_path, "locations.txt");
    defaulted(st.config.first_names_path, "first_names.tsv");
    defaulted(st.config.diminutives_path, "diminutives.tsv");
    if (st.narrator_pronouns.empty() && fs::exists(dir / "narrator_pronouns.txt"))
      st.narrator_pronouns = (dir / "narrator_pronouns.txt").string();
    if (st.gender_markers.empty() && fs::exists(dir / "gender_markers.tsv"))
      st.gender_markers = (dir / "gender_markers.tsv").string();
  }

  if (st.strip_begin.size() != st.strip_end.size())
    throw ConfigError("--strip-begin and --strip-end must be paired");
  for (std::size_t i = 0; i < st.strip_begin.size(); ++i)
    st.config.markers.push_back({st.strip_begin[i], st.strip_end[i]});

  if (!st.narrator.empty()) st.config.narrator = st.narrator;
  if (!st.tagset_map.empty()) st.config.tagset_map_path = st.tagset_map;
  if (!st.gold.empty()) st.config.gold_path = st.gold;
  if (!st.doc_id.empty()) st.config.document_id = st.doc_id;
  if (!st.narrator_pronouns.empty()) st.config.narrator_pronouns_path = st.narrator_pronouns;
  if (!st.gender_markers.empty()) st.config.gender_markers_path = st.gender_markers;
  if (st.mode == "baseline")
    st.config.mode = TaggerMode::baseline;
  else if (st.mode == "pretagged")
    st.config.mode = TaggerMode::pretagged;
  else
    throw ConfigError("unknown mode \"" + st.mode + "\" (baseline or pretagged)");
}

void print_warnings(const std::vector<std::string>& warnings) {
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
}

void write_artifact(const fs::path& dir, const std::string& name, const std::string& contents) {
  io::write_file(dir / name, contents);
  std::cout << "wrote " << (dir / name).string() << "\n";
}

int cmd_run(CliState& st, const std::string& input, bool interactive) {
  if (interactive && !st.config.narrator) {
    // Show the roster first, then ask which character narrates.
    validate_config(st.config);
    std::vector<std::string> warnings;
    LexiconSet lexicons = load_lexicons(st.config, &warnings);
    Document doc = load_input(st.config, input, lexicons, &warnings);
    CneResult cne = run_cne(doc, lexicons);
    CorefConfig cc;
    cc.prune_threshold = st.config.prune_threshold;
    CorefResult coref = resolve_characters(cne.kept, doc, lexicons, cc);
    std::cout << format_roster_csv(coref.groups);
    std::cout << "narrator representation (empty for none): " << std::flush;
    std::string line;
    std::getline(std::cin, line);
    line = io::trim(line);
    if (!line.empty()) st.config.narrator = line;
  }
  PipelineResult result = run_pipeline(st.config, input);
  print_warnings(result.warnings);
  for (const auto& [name, contents] : result.artifacts)
    std::cout << "wrote " << (fs::path(st.config.output_dir) / name).string() << "\n";
  for (const auto& r : result.reports) {
    std::cout << r.document << " " << to_string(r.task) << ": P=" << r.precision
              << " R=" << r.recall << " F1=" << r.f1 << "\n";
  }
  return 0;
}

int cmd_extract(CliState& st, const std::string& input) {
  validate_config(st.config);
  std::vector<std::string> warnings;
  LexiconSet lexicons = load_lexicons(st.config, &warnings);
  Document doc = load_input(st.config, input, lexicons, &warnings);
  CneResult cne = run_cne(doc, lexicons);
  print_warnings(warnings);
  print_warnings(cne.warnings);
  fs::path dir(st.config.output_dir);
  write_artifact(dir, "mentions.tsv", format_mentions_tsv(cne.kept));
  write_artifact(dir, "audit.tsv", format_audit_log(cne.removed));
  return 0;
}

int cmd_coref(CliState& st, const std::string& input, const std::string& mentions_path) {
  validate_config(st.config);
  std::vector<std::string> warnings;
  LexiconSet lexicons = load_lexicons(st.config, &warnings);
  Document doc = load_input(st.config, input, lexicons, &warnings);
  MentionList mentions = parse_mentions_tsv(io::read_file(mentions_path));
  if (!mentions.document_id.empty() && mentions.document_id != doc.id)
    throw DocumentMismatch(doc.id, mentions.document_id);
  CorefConfig cc;
  cc.prune_threshold = st.config.prune_threshold;
  cc.narrator = st.config.narrator;
  CorefResult coref = resolve_characters(mentions, doc, lexicons, cc);
  print_warnings(warnings);
  print_warnings(coref.warnings);
  for (const auto& pruned : coref.pruned)
    std::cerr << "pruned: " << pruned.representation << " (" << pruned.occurrence_count
              << " mentions)\n";
  fs::path dir(st.config.output_dir);
  write_artifact(dir, "roster.csv", format_roster_csv(coref.groups));
  write_artifact(dir, "group_mentions.tsv", format_group_mentions_tsv(coref.groups, doc.id));
  return 0;
}

int cmd_interactions(CliState& st, const std::string& roster_path,
                     const std::string& group_mentions_path) {
  auto [groups, doc_id] = parse_groups_with_mentions(io::read_file(roster_path),
                                                     io::read_file(group_mentions_path));
  WindowConfig window{st.config.window_sentences};
  InteractionTable table = detect_interactions(groups, window);
  std::vector<TableRow> rows = to_table(table, groups);
  write_artifact(fs::path(st.config.output_dir), "interactions.csv",
                 format_interactions_csv(rows));
  return 0;
}

int cmd_graph(CliState& st, const std::string& roster_path, const std::string& interactions_path,
              const std::string& format) {
  std::vector<CharacterGroup> groups = parse_roster_csv(io::read_file(roster_path));
  std::vector<TableRow> rows = parse_interactions_csv(io::read_file(interactions_path));
  CharacterNetwork net = build_network(groups, rows);
  fs::path dir(st.config.output_dir);
  if (format == "all" || format == "dot")
    write_artifact(dir, "network.dot", export_graph(net, GraphFormat::dot));
  if (format == "all" || format == "graphml")
    write_artifact(dir, "network.graphml", export_graph(net, GraphFormat::graphml));
  if (format == "all" || format == "json")
    write_artifact(dir, "network.json", export_graph(net, GraphFormat::json));
  if (format != "all") parse_graph_format(format);  // rejects unknown formats
  return 0;
}

int cmd_eval(CliState& st, const std::string& roster_path,
             const std::string& group_mentions_path, const std::string& interactions_path) {
  if (!st.config.gold_path) throw ConfigError("eval requires --gold");
  const std::string gold_path = *st.config.gold_path;
  auto [groups, doc_id] = parse_groups_with_mentions(io::read_file(roster_path),
                                                     io::read_file(group_mentions_path));
  std::vector<TableRow> rows = parse_interactions_csv(io::read_file(interactions_path));
  InteractionTable table = table_from_rows(rows, groups);
  GoldAnnotation gold = load_gold(gold_path);
  if (!st.doc_id.empty()) doc_id = st.doc_id;
  std::vector<EvalReport> reports;
  reports.push_back(eval_mentions(groups, gold, doc_id));
  reports.push_back(eval_interactions(groups, table, gold, doc_id));
  fs::path dir(st.config.output_dir);
  write_artifact(dir, "report.csv", format_report_csv(reports));
  write_artifact(dir, "report_detail.json", format_report_detail_json(reports));
  for (const auto& r : reports) {
    std::cout << r.document << " " << to_string(r.task) << ": P=" << r.precision
              << " R=" << r.recall << " F1=" << r.f1 << "\n";
  }
  return 0;
}

// Dumps the segmented, tagged token stream in the pre-tagged file format;
// handy for inspecting segmentation and for bootstrapping fixtures.
int cmd_tokens(CliState& st, const std::string& input) {
  validate_config(st.config);
  std::vector<std::string> warnings;
  LexiconSet lexicons = load_lexicons(st.config, &warnings);
  Document doc = load_input(st.config, input, lexicons, &warnings);
  print_warnings(warnings);
  const TagLayer* primary = doc.layer("primary");
  const TagLayer* secondary = doc.layer("secondary");
  std::cout << "#layers: primary" << (secondary ? ",secondary" : "") << "\n";
  std::size_t flat = 0;
  for (const auto& sentence : doc.sentences) {
    for (const auto& tok : sentence) {
      std::cout << tok.surface << "\t" << to_string(primary->tags[flat]);
      if (secondary) std::cout << "\t" << to_string(secondary->tags[flat]);
      std::cout << "\n";
      ++flat;
    }
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"character social network extraction from literary text"};
  app.require_subcommand(1);

  CliState st;
  std::string input, mentions_path, roster_path, group_mentions_path, interactions_path;
  std::string format = "all";
  bool interactive = false;

  CLI::App* run = app.add_subcommand("run", "full pipeline: extract, coref, interactions, graph");
  run->add_option("input", input, "text or pre-tagged input file")->required();
  add_shared_options(run, st);
  run->add_flag("--interactive-narrator", interactive,
                "print the roster and prompt for the narrator group");

  CLI::App* extract = app.add_subcommand("extract", "character name extraction");
  extract->add_option("input", input, "text or pre-tagged input file")->required();
  add_shared_options(extract, st);

  CLI::App* coref = app.add_subcommand("coref", "co-reference resolution over mentions");
  coref->add_option("input", input, "text or pre-tagged input file")->required();
  coref->add_option("--mentions", mentions_path, "mentions.tsv from extract")->required();
  add_shared_options(coref, st);

  CLI::App* inter = app.add_subcommand("interactions", "windowed co-occurrence detection");
  inter->add_option("--roster", roster_path, "roster.csv from coref")->required();
  inter->add_option("--group-mentions", group_mentions_path, "group_mentions.tsv from coref")
      ->required();
  add_shared_options(inter, st);

  CLI::App* graph = app.add_subcommand("graph", "network export");
  graph->add_option("--roster", roster_path, "roster.csv from coref")->required();
  graph->add_option("--interactions", interactions_path, "interactions.csv")->required();
  graph->add_option("--format", format, "dot, graphml, json or all");
  add_shared_options(graph, st);

  CLI::App* eval = app.add_subcommand("eval", "score against a gold annotation");
  eval->add_option("--roster", roster_path, "roster.csv from coref")->required();
  eval->add_option("--group-mentions", group_mentions_path, "group_mentions.tsv from coref")
      ->required();
  eval->add_option("--interactions", interactions_path, "interactions.csv")->required();
  add_shared_options(eval, st);  // gold comes in through the shared --gold flag

  CLI::App* tokens = app.add_subcommand("tokens", "dump the tagged token stream");
  tokens->add_option("input", input, "text or pre-tagged input file")->required();
  add_shared_options(tokens, st);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    CLI::App* cmd = app.get_subcommands().front();
    finalize_config(cmd, st);
    if (cmd == run) return cmd_run(st, input, interactive);
    if (cmd == extract) return cmd_extract(st, input);
    if (cmd == coref) return cmd_coref(st, input, mentions_path);
    if (cmd == inter) return cmd_interactions(st, roster_path, group_mentions_path);
    if (cmd == graph) return cmd_graph(st, roster_path, interactions_path, format);
    if (cmd == eval) return cmd_eval(st, roster_path, group_mentions_path, interactions_path);
    if (cmd == tokens) return cmd_tokens(st, input);
    return 1;
  } catch (const charnet::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const charnet::Error& e) {
    std::cerr << "pipeline error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "pipeline error: " << e.what() << "\n";
    return 2;
  }
}
