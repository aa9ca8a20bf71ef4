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

// Scoring against gold annotations. Mentions match within their sentence
// by normalized surface, and a system group is only fully credited when
// its matches land on a single gold character; matches spilling onto a
// second character degrade to false positives (and the gold side to false
// negatives). Interaction scoring is alias-insensitive: endpoints resolve
// to gold characters through shared surfaces, and pairs are scored by
// presence unless the gold annotation supplies multiplicities.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "charnet/coref.hpp"
#include "charnet/errors.hpp"
#include "charnet/interactions.hpp"
#include "charnet/io.hpp"
#include "charnet/text.hpp"

#include "json.hpp"

namespace charnet {

struct GoldMention {
  std::string surface;
  int sentence = 0;
};

struct GoldCharacter {
  std::string id;
  std::string canonical;
  std::vector<GoldMention> mentions;
};

struct GoldInteraction {
  std::string a;
  std::string b;
  std::optional<int> count;
};

struct GoldAnnotation {
  std::string document;
  std::vector<GoldCharacter> characters;
  std::vector<GoldInteraction> interactions;
};

inline GoldAnnotation parse_gold(std::string_view contents) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(contents);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedGold(e.what());
  }
  GoldAnnotation gold;
  try {
    gold.document = j.at("document").get<std::string>();
    std::set<std::string> ids;
    for (const auto& c : j.at("characters")) {
      GoldCharacter gc;
      gc.id = c.at("id").get<std::string>();
      gc.canonical = c.at("canonical").get<std::string>();
      if (!ids.insert(gc.id).second) throw MalformedGold("duplicate character id " + gc.id);
      for (const auto& m : c.value("mentions", nlohmann::json::array())) {
        GoldMention gm;
        gm.surface = m.at("surface").get<std::string>();
        gm.sentence = m.at("sentence").get<int>();
        if (gm.sentence < 0) throw MalformedGold("negative sentence index");
        gc.mentions.push_back(std::move(gm));
      }
      gold.characters.push_back(std::move(gc));
    }
    for (const auto& i : j.value("interactions", nlohmann::json::array())) {
      GoldInteraction gi;
      gi.a = i.at("a").get<std::string>();
      gi.b = i.at("b").get<std::string>();
      if (i.contains("count")) gi.count = i.at("count").get<int>();
      if (!ids.count(gi.a)) throw DanglingReference(gi.a);
      if (!ids.count(gi.b)) throw DanglingReference(gi.b);
      if (gi.a == gi.b) throw MalformedGold("self-interaction for " + gi.a);
      gold.interactions.push_back(std::move(gi));
    }
  } catch (const nlohmann::json::exception& e) {
    throw MalformedGold(e.what());
  }
  return gold;
}

inline GoldAnnotation load_gold(const std::string& path) {
  return parse_gold(io::read_file(path));
}

enum class EvalTask { mentions, interactions };

inline const char* to_string(EvalTask t) {
  return t == EvalTask::mentions ? "mentions" : "interactions";
}

// One matched/missed/spurious line in the detail report.
struct EvalItem {
  std::string description;
  int sentence = -1;  // -1 for pair-level items
};

struct EvalReport {
  EvalTask task = EvalTask::mentions;
  std::string document;
  int true_positives = 0;
  int false_positives = 0;
  int false_negatives = 0;
  double precision = 0.0;  // percentages
  double recall = 0.0;
  double f1 = 0.0;
  bool empty_prediction = false;  // flags the precision-0-by-convention case
  std::vector<EvalItem> matched;
  std::vector<EvalItem> missed;
  std::vector<EvalItem> spurious;
};

// Harmonic mean of two percentages; zero when both are zero.
inline double f1_score(double precision, double recall) {
  if (precision + recall <= 0.0) return 0.0;
  return 2.0 * precision * recall / (precision + recall);
}

namespace eval_detail {

inline void finalize(EvalReport& r) {
  int tp_fp = r.true_positives + r.false_positives;
  int tp_fn = r.true_positives + r.false_negatives;
  r.empty_prediction = tp_fp == 0;
  r.precision = tp_fp > 0 ? 100.0 * r.true_positives / tp_fp : 0.0;
  r.recall = tp_fn > 0 ? 100.0 * r.true_positives / tp_fn : 0.0;
  r.f1 = f1_score(r.precision, r.recall);
}

}  // namespace eval_detail

inline EvalReport eval_mentions(const std::vector<CharacterGroup>& system,
                                const GoldAnnotation& gold, const std::string& document_id) {
  if (document_id != gold.document) throw DocumentMismatch(document_id, gold.document);
  EvalReport report;
  report.task = EvalTask::mentions;
  report.document = gold.document;

  // Gold slots per (sentence, normalized surface), FIFO in file order.
  struct Slot {
    std::size_t character;
    bool taken = false;
  };
  std::map<std::pair<int, std::string>, std::deque<std::size_t>> free_slots;
  std::vector<Slot> slots;
  std::vector<GoldMention> slot_mentions;
  for (std::size_t c = 0; c < gold.characters.size(); ++c) {
    for (const auto& m : gold.characters[c].mentions) {
      free_slots[{m.sentence, text::normalize(m.surface)}].push_back(slots.size());
      slots.push_back({c});
      slot_mentions.push_back(m);
    }
  }

  // First pass: greedy instance matching in document order.
  struct Match {
    std::size_t group_index;
    const CandidateMention* mention;
    std::size_t slot;
  };
  std::vector<Match> matches;
  std::vector<const CandidateMention*> unmatched_system;
  std::vector<std::pair<std::size_t, const CandidateMention*>> system_mentions;
  for (std::size_t g = 0; g < system.size(); ++g) {
    for (const auto& m : system[g].mentions) system_mentions.emplace_back(g, &m);
  }
  std::sort(system_mentions.begin(), system_mentions.end(), [](const auto& a, const auto& b) {
    return std::tie(a.second->sentence_index, a.second->begin) <
           std::tie(b.second->sentence_index, b.second->begin);
  });
  for (const auto& [g, m] : system_mentions) {
    auto it = free_slots.find({m->sentence_index, text::normalize(m->surface)});
    if (it != free_slots.end() && !it->second.empty()) {
      std::size_t slot = it->second.front();
      it->second.pop_front();
      slots[slot].taken = true;
      matches.push_back({g, m, slot});
    } else {
      unmatched_system.push_back(m);
    }
  }

  // Second pass: co-reference consistency. Each system group is assigned
  // the gold character it matched most often; matches on any other
  // character are demoted.
  std::map<std::size_t, std::map<std::size_t, int>> votes;  // group -> char -> matches
  for (const auto& match : matches) ++votes[match.group_index][slots[match.slot].character];
  std::map<std::size_t, std::size_t> assigned;
  for (const auto& [group, per_char] : votes) {
    std::size_t best = 0;
    int best_count = -1;
    for (const auto& [character, count] : per_char) {
      if (count > best_count) {
        best = character;
        best_count = count;
      }
    }
    assigned[group] = best;
  }

  for (const auto& match : matches) {
    std::size_t character = slots[match.slot].character;
    if (assigned[match.group_index] == character) {
      ++report.true_positives;
      report.matched.push_back({match.mention->surface + " -> " +
                                    gold.characters[character].id,
                                match.mention->sentence_index});
    } else {
      ++report.false_positives;  // right surface, wrong character grouping
      slots[match.slot].taken = false;
      report.spurious.push_back({match.mention->surface + " (grouping)",
                                 match.mention->sentence_index});
    }
  }
  for (const auto* m : unmatched_system) {
    ++report.false_positives;
    report.spurious.push_back({m->surface, m->sentence_index});
  }
  for (std::size_t s = 0; s < slots.size(); ++s) {
    if (slots[s].taken) continue;
    ++report.false_negatives;
    report.missed.push_back({slot_mentions[s].surface + " (" +
                                 gold.characters[slots[s].character].id + ")",
                             slot_mentions[s].sentence});
  }
  eval_detail::finalize(report);
  return report;
}

namespace eval_detail {

// Resolves each system group to the gold character sharing the most
// normalized surfaces (aliases plus mention surfaces against canonical
// plus mention surfaces). No overlap leaves the group unresolved.
inline std::map<int, std::optional<std::size_t>> resolve_groups(
    const std::vector<CharacterGroup>& system, const GoldAnnotation& gold) {
  std::vector<std::set<std::string>> gold_surfaces(gold.characters.size());
  for (std::size_t c = 0; c < gold.characters.size(); ++c) {
    gold_surfaces[c].insert(text::normalize(gold.characters[c].canonical));
    for (const auto& m : gold.characters[c].mentions)
      gold_surfaces[c].insert(text::normalize(m.surface));
  }
  std::map<int, std::optional<std::size_t>> out;
  for (const auto& g : system) {
    std::set<std::string> surfaces;
    surfaces.insert(text::normalize(g.representation));
    for (const auto& a : g.aliases) surfaces.insert(text::normalize(a));
    for (const auto& m : g.mentions) surfaces.insert(text::normalize(m.surface));
    std::optional<std::size_t> best;
    std::size_t best_overlap = 0;
    for (std::size_t c = 0; c < gold.characters.size(); ++c) {
      std::size_t overlap = 0;
      for (const auto& s : surfaces) overlap += gold_surfaces[c].count(s);
      if (overlap > best_overlap) {
        best_overlap = overlap;
        best = c;
      }
    }
    out[g.group_id] = best;
  }
  return out;
}

}  // namespace eval_detail

inline EvalReport eval_interactions(const std::vector<CharacterGroup>& system,
                                    const InteractionTable& table, const GoldAnnotation& gold,
                                    const std::string& document_id) {
  if (document_id != gold.document) throw DocumentMismatch(document_id, gold.document);
  EvalReport report;
  report.task = EvalTask::interactions;
  report.document = gold.document;

  std::map<std::string, std::size_t> char_index;
  for (std::size_t c = 0; c < gold.characters.size(); ++c)
    char_index[gold.characters[c].id] = c;

  auto resolution = eval_detail::resolve_groups(system, gold);

  // System pairs in gold-character space; unresolved endpoints and pairs
  // collapsing onto one character stay in system space as spurious.
  std::map<std::pair<std::size_t, std::size_t>, int> system_pairs;
  std::vector<std::pair<std::string, int>> unresolved;  // description, count
  std::map<int, const CharacterGroup*> by_id;
  for (const auto& g : system) by_id[g.group_id] = &g;
  for (const auto& rec : table.records) {
    auto a = resolution[rec.group_a];
    auto b = resolution[rec.group_b];
    std::string desc = by_id.at(rec.group_a)->representation + " - " +
                       by_id.at(rec.group_b)->representation;
    if (!a || !b || *a == *b) {
      unresolved.emplace_back(desc, rec.count);
      continue;
    }
    auto key = std::minmax(*a, *b);
    system_pairs[{key.first, key.second}] += rec.count;
  }

  std::map<std::pair<std::size_t, std::size_t>, std::optional<int>> gold_pairs;
  for (const auto& gi : gold.interactions) {
    auto key = std::minmax(char_index.at(gi.a), char_index.at(gi.b));
    auto& entry = gold_pairs[{key.first, key.second}];
    if (gi.count) entry = entry.value_or(0) + *gi.count;
  }

  auto pair_name = [&](std::pair<std::size_t, std::size_t> key) {
    return gold.characters[key.first].id + " - " + gold.characters[key.second].id;
  };

  for (const auto& [key, sys_count] : system_pairs) {
    auto it = gold_pairs.find(key);
    if (it == gold_pairs.end()) {
      ++report.false_positives;
      report.spurious.push_back({pair_name(key), -1});
      continue;
    }
    if (it->second) {
      // Gold supplies a multiplicity: compare instance counts.
      int g = *it->second;
      report.true_positives += std::min(sys_count, g);
      if (sys_count > g) report.false_positives += sys_count - g;
      if (g > sys_count) report.false_negatives += g - sys_count;
      report.matched.push_back({pair_name(key), -1});
    } else {
      ++report.true_positives;
      report.matched.push_back({pair_name(key), -1});
    }
  }
  for (const auto& [key, count] : gold_pairs) {
    if (system_pairs.count(key)) continue;
    report.false_negatives += count ? *count : 1;
    report.missed.push_back({pair_name(key), -1});
  }
  for (const auto& [desc, count] : unresolved) {
    ++report.false_positives;
    report.spurious.push_back({desc + " (unresolved)", -1});
  }
  eval_detail::finalize(report);
  return report;
}

// Unweighted arithmetic mean of per-document metrics; counts are summed
// for reference. The mean of F1 values is reported, which is not the F1
// of the mean precision/recall.
inline EvalReport aggregate_reports(const std::vector<EvalReport>& reports) {
  if (reports.empty()) throw EmptyReportSet();
  EvalReport avg;
  avg.task = reports.front().task;
  avg.document = "average";
  for (const auto& r : reports) {
    avg.true_positives += r.true_positives;
    avg.false_positives += r.false_positives;
    avg.false_negatives += r.false_negatives;
    avg.precision += r.precision;
    avg.recall += r.recall;
    avg.f1 += r.f1;
  }
  double n = static_cast<double>(reports.size());
  avg.precision /= n;
  avg.recall /= n;
  avg.f1 /= n;
  return avg;
}

inline std::string format_report_csv(const std::vector<EvalReport>& reports) {
  auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return std::string(buf);
  };
  std::string out = "document,task,precision,recall,f1\n";
  for (const auto& r : reports) {
    out += io::csv_row({r.document, to_string(r.task), fmt(r.precision), fmt(r.recall),
                        fmt(r.f1)});
  }
  return out;
}

inline std::string format_report_detail_json(const std::vector<EvalReport>& reports) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["document"] = r.document;
    j["task"] = to_string(r.task);
    j["true_positives"] = r.true_positives;
    j["false_positives"] = r.false_positives;
    j["false_negatives"] = r.false_negatives;
    j["precision"] = r.precision;
    j["recall"] = r.recall;
    j["f1"] = r.f1;
    j["empty_prediction"] = r.empty_prediction;
    auto items = [](const std::vector<EvalItem>& v) {
      nlohmann::ordered_json arr = nlohmann::ordered_json::array();
      for (const auto& item : v) {
        nlohmann::ordered_json e;
        e["item"] = item.description;
        if (item.sentence >= 0) e["sentence"] = item.sentence;
        arr.push_back(std::move(e));
      }
      return arr;
    };
    j["matched"] = items(r.matched);
    j["missed"] = items(r.missed);
    j["spurious"] = items(r.spurious);
    out.push_back(std::move(j));
  }
  return out.dump(2) + "\n";
}

}  // namespace charnet
