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

// Co-reference resolution over extracted name surfaces, in six steps:
// sort surfaces by name length, cluster by token-set inclusion against
// each cluster's seed, count tokens, pick a "First Last" representation,
// rewrite diminutives and merge the clusters this connects, and assign
// narrator pronouns to a user-chosen group. Rare characters are pruned
// afterwards and gender is inferred from the names database with a
// marker-word vote as fallback.
//
// Token matching ignores titles and the name connectives (de, da, do,
// dos, das, e) throughout: positional matching would fail exactly where
// the data needs it ("Sr. Domingos" against a full name that has
// "Domingos" in another slot).

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "charnet/corpus.hpp"
#include "charnet/errors.hpp"
#include "charnet/lexicon.hpp"
#include "charnet/mention.hpp"
#include "charnet/text.hpp"

namespace charnet {

// One distinct mention surface with its corpus frequency. Tokens keep
// their written form; matching uses normalized forms with titles and
// connectives masked out.
struct NameSequence {
  std::string surface;
  std::vector<std::string> tokens;
  std::vector<bool> is_title;
  int frequency = 0;

  int name_token_count() const {
    int n = 0;
    for (bool t : is_title)
      if (!t) ++n;
    return n;
  }
};

struct CharacterGroup {
  int group_id = 0;
  std::string representation;
  std::vector<std::string> aliases;  // sorted, unique
  std::vector<CandidateMention> mentions;
  Gender gender = Gender::unknown;
  int occurrence_count = 0;
};

namespace coref_detail {

inline bool is_connective(const std::string& normalized) {
  return normalized == "de" || normalized == "da" || normalized == "do" ||
         normalized == "dos" || normalized == "das" || normalized == "e";
}

// Normalized non-title, non-connective token set of an entry.
inline std::set<std::string> match_token_set(const NameSequence& seq) {
  std::set<std::string> out;
  for (std::size_t i = 0; i < seq.tokens.size(); ++i) {
    if (seq.is_title[i]) continue;
    std::string norm = text::normalize(seq.tokens[i]);
    if (norm.empty() || is_connective(norm)) continue;
    out.insert(norm);
  }
  return out;
}

}  // namespace coref_detail

// A cluster of surfaces under construction; entries[0] is the seed.
struct SurfaceGroup {
  std::vector<NameSequence> entries;

  int total_frequency() const {
    int n = 0;
    for (const auto& e : entries) n += e.frequency;
    return n;
  }
};

// Builds the distinct-surface list from a mention list. Title flags come
// from the titles lexicon; insertion order never matters because surfaces
// are collected into an ordered map.
inline std::vector<NameSequence> collect_surfaces(const MentionList& list,
                                                  const Lexicon& titles) {
  std::map<std::string, int> counts;
  for (const auto& m : list.mentions) {
    if (m.removed()) continue;
    ++counts[m.surface];
  }
  std::vector<NameSequence> out;
  out.reserve(counts.size());
  for (const auto& [surface, count] : counts) {
    NameSequence seq;
    seq.surface = surface;
    seq.tokens = text::split_words(surface);
    seq.is_title.reserve(seq.tokens.size());
    for (const auto& tok : seq.tokens) seq.is_title.push_back(titles.contains(tok));
    seq.frequency = count;
    out.push_back(std::move(seq));
  }
  return out;
}

// Step 1: descending by non-title token count; ties broken by corpus
// frequency (descending), then surface text.
inline std::vector<NameSequence> sort_by_token_count(std::vector<NameSequence> surfaces) {
  std::stable_sort(surfaces.begin(), surfaces.end(),
                   [](const NameSequence& a, const NameSequence& b) {
                     if (a.name_token_count() != b.name_token_count())
                       return a.name_token_count() > b.name_token_count();
                     if (a.frequency != b.frequency) return a.frequency > b.frequency;
                     return a.surface < b.surface;
                   });
  return surfaces;
}

// Step 2: each entry joins the first group whose seed token set contains
// every one of its tokens, otherwise it seeds a new group. Collisions
// between same-surname characters resolve to the earliest group, which is
// deterministic under the step-1 ordering; each collision is reported so
// ambiguous assignments stay visible.
inline std::vector<SurfaceGroup> group_by_token_match(const std::vector<NameSequence>& sorted,
                                                      std::vector<std::string>* collisions =
                                                          nullptr) {
  std::vector<SurfaceGroup> groups;
  std::vector<std::set<std::string>> seed_sets;
  for (const auto& entry : sorted) {
    std::set<std::string> tokens = coref_detail::match_token_set(entry);
    std::optional<std::size_t> placed;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      // An entry with no usable name tokens (all titles or connectives)
      // only joins a group in the same degenerate state; the vacuous
      // subset would otherwise glue it to the first group.
      bool match = tokens.empty()
                       ? seed_sets[g].empty()
                       : std::includes(seed_sets[g].begin(), seed_sets[g].end(),
                                       tokens.begin(), tokens.end());
      if (!match) continue;
      if (!placed) {
        groups[g].entries.push_back(entry);
        placed = g;
        if (!collisions) break;
      } else if (collisions) {
        collisions->push_back("\"" + entry.surface + "\" also matches the group of \"" +
                              groups[g].entries.front().surface + "\"; kept with \"" +
                              groups[*placed].entries.front().surface + "\"");
      }
    }
    if (!placed) {
      groups.push_back(SurfaceGroup{{entry}});
      seed_sets.push_back(std::move(tokens));
    }
  }
  return groups;
}

// Step 3: per-token occurrence counts weighted by surface frequency,
// titles and connectives excluded; descending, ties alphabetical.
inline std::vector<std::pair<std::string, int>> token_frequencies(const SurfaceGroup& group) {
  if (group.entries.empty()) throw EmptyGroup();
  // Count ties break by first position in the group scan (names lead
  // their aliases, so the given name beats its surname on a tie), then
  // alphabetically. The two extra passes only engage for degenerate
  // groups whose tokens are all connectives or all titles.
  for (int pass = 0; pass < 3; ++pass) {
    struct Stat {
      int count = 0;
      int first_seen = 0;
    };
    std::map<std::string, Stat> stats;
    int scan_position = 0;
    for (const auto& entry : group.entries) {
      for (std::size_t i = 0; i < entry.tokens.size(); ++i, ++scan_position) {
        if (pass < 2 && entry.is_title[i]) continue;
        std::string norm = text::normalize(entry.tokens[i]);
        if (norm.empty()) continue;
        if (pass < 1 && coref_detail::is_connective(norm)) continue;
        auto [it, inserted] = stats.try_emplace(norm, Stat{0, scan_position});
        it->second.count += entry.frequency;
      }
    }
    if (stats.empty()) continue;
    std::vector<std::pair<std::string, Stat>> ranked(stats.begin(), stats.end());
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
      if (a.second.count != b.second.count) return a.second.count > b.second.count;
      if (a.second.first_seen != b.second.first_seen)
        return a.second.first_seen < b.second.first_seen;
      return a.first < b.first;
    });
    std::vector<std::pair<std::string, int>> out;
    out.reserve(ranked.size());
    for (auto& [token, stat] : ranked) out.emplace_back(token, stat.count);
    return out;
  }
  throw EmptyGroup();
}

namespace coref_detail {

// Non-title tokens of an entry, written form.
inline std::vector<std::string> name_tokens(const NameSequence& seq) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < seq.tokens.size(); ++i)
    if (!seq.is_title[i]) out.push_back(seq.tokens[i]);
  return out;
}

inline std::string first_last(const std::vector<std::string>& tokens) {
  if (tokens.empty()) throw EmptyGroup();
  if (tokens.size() == 1) return tokens[0];
  // Last non-connective token; falls back to the first token when the
  // tail is all connectives.
  for (std::size_t i = tokens.size(); i-- > 1;) {
    if (!is_connective(text::normalize(tokens[i])))
      return tokens[0] + " " + tokens[i];
  }
  return tokens[0];
}

// Deterministic candidate preference: longer names first, then more
// frequent, then alphabetical.
inline bool better_candidate(const NameSequence& a, const NameSequence& b) {
  if (a.name_token_count() != b.name_token_count())
    return a.name_token_count() > b.name_token_count();
  if (a.frequency != b.frequency) return a.frequency > b.frequency;
  return a.surface < b.surface;
}

}  // namespace coref_detail

// Step 4: first and last name of the longest alias that begins with the
// group's most frequent token. When no alias begins with that token the
// representation falls back to the token's written form alone.
inline std::string select_representation(const SurfaceGroup& group) {
  std::vector<std::pair<std::string, int>> freqs = token_frequencies(group);
  const std::string& top = freqs[0].first;

  const NameSequence* best = nullptr;
  for (const auto& entry : group.entries) {
    std::vector<std::string> tokens = coref_detail::name_tokens(entry);
    if (tokens.empty() || text::normalize(tokens[0]) != top) continue;
    if (!best || coref_detail::better_candidate(entry, *best)) best = &entry;
  }
  if (best) return coref_detail::first_last(coref_detail::name_tokens(*best));

  // The most frequent token never leads an alias: use its written form
  // from the entry that carries it, preferring the same ordering.
  const NameSequence* carrier = nullptr;
  for (const auto& entry : group.entries) {
    for (const std::string& tok : entry.tokens) {
      if (text::normalize(tok) == top) {
        if (!carrier || coref_detail::better_candidate(entry, *carrier)) carrier = &entry;
        break;
      }
    }
  }
  if (!carrier) return group.entries.front().surface;
  for (const std::string& tok : carrier->tokens) {
    if (text::normalize(tok) == top) return tok;
  }
  return carrier->surface;
}

// Step 5: rewrite diminutive tokens to their canonical written form, then
// merge groups connected by the rewrite. Merge edges are collected first
// and resolved as connected components, so the outcome is independent of
// group order. A group only produces edges when a rewrite touched it; an
// edge exists when the rewritten groups share a representation token or a
// full alias with another group.
inline std::vector<SurfaceGroup> merge_diminutives(std::vector<SurfaceGroup> groups,
                                                   const Lexicon& diminutives) {
  if (groups.empty()) return groups;
  std::vector<bool> rewritten(groups.size(), false);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (auto& entry : groups[g].entries) {
      bool changed = false;
      for (std::size_t i = 0; i < entry.tokens.size(); ++i) {
        if (entry.is_title[i]) continue;
        if (auto canonical = diminutives.canonical_of(entry.tokens[i])) {
          entry.tokens[i] = *canonical;
          changed = true;
        }
      }
      if (changed) {
        std::string joined;
        for (std::size_t i = 0; i < entry.tokens.size(); ++i) {
          if (i) joined.push_back(' ');
          joined += entry.tokens[i];
        }
        entry.surface = std::move(joined);
        rewritten[g] = true;
      }
    }
  }
  if (std::none_of(rewritten.begin(), rewritten.end(), [](bool b) { return b; }))
    return groups;

  auto rep_tokens = [](const SurfaceGroup& g) {
    std::set<std::string> out;
    for (const std::string& tok : text::split_words(select_representation(g)))
      out.insert(text::normalize(tok));
    return out;
  };
  auto alias_set = [](const SurfaceGroup& g) {
    std::set<std::string> out;
    for (const auto& e : g.entries) out.insert(text::normalize(e.surface));
    return out;
  };
  std::vector<std::set<std::string>> reps(groups.size()), aliases(groups.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    reps[g] = rep_tokens(groups[g]);
    aliases[g] = alias_set(groups[g]);
  }

  // Union-find over merge edges.
  std::vector<std::size_t> parent(groups.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto intersects = [](const std::set<std::string>& a, const std::set<std::string>& b) {
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& large = a.size() <= b.size() ? b : a;
    return std::any_of(small.begin(), small.end(),
                       [&](const std::string& k) { return large.count(k) > 0; });
  };
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (std::size_t h = g + 1; h < groups.size(); ++h) {
      if (!rewritten[g] && !rewritten[h]) continue;
      if (intersects(reps[g], reps[h]) || intersects(aliases[g], aliases[h])) {
        std::size_t rg = find(g), rh = find(h);
        if (rg != rh) parent[std::max(rg, rh)] = std::min(rg, rh);
      }
    }
  }

  std::map<std::size_t, SurfaceGroup> merged;  // keyed by root, keeps order
  for (std::size_t g = 0; g < groups.size(); ++g) {
    SurfaceGroup& target = merged[find(g)];
    for (auto& entry : groups[g].entries) {
      // Identical rewritten surfaces fold together, summing frequency.
      auto same = std::find_if(target.entries.begin(), target.entries.end(),
                               [&](const NameSequence& e) { return e.surface == entry.surface; });
      if (same != target.entries.end())
        same->frequency += entry.frequency;
      else
        target.entries.push_back(std::move(entry));
    }
  }
  std::vector<SurfaceGroup> out;
  out.reserve(merged.size());
  for (auto& [root, group] : merged) out.push_back(std::move(group));
  return out;
}

struct PrunedGroup {
  std::string representation;
  int occurrence_count = 0;
};

struct CorefConfig {
  int prune_threshold = 3;
  std::optional<std::string> narrator;  // representation or unique alias
};

struct CorefResult {
  std::vector<CharacterGroup> groups;   // final ids, document order of first mention
  std::vector<PrunedGroup> pruned;
  std::vector<std::string> warnings;
};

// Step 6: every narrator-pronoun token in the document becomes a mention
// of the chosen group. Index must reference an existing group.
inline void assign_narrator(std::vector<CharacterGroup>& groups, const Document& doc,
                            std::size_t narrator_index, const Lexicon& pronouns) {
  if (narrator_index >= groups.size())
    throw UnknownGroup("index " + std::to_string(narrator_index));
  CharacterGroup& target = groups[narrator_index];
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    const auto& sentence = doc.sentences[s];
    for (std::size_t t = 0; t < sentence.size(); ++t) {
      if (!pronouns.contains(sentence[t].surface)) continue;
      CandidateMention m;
      m.sentence_index = static_cast<int>(s);
      m.begin = static_cast<int>(t);
      m.end = static_cast<int>(t + 1);
      m.surface = sentence[t].surface;
      m.state = MentionState::confirmed;
      target.mentions.push_back(std::move(m));
    }
  }
  std::sort(target.mentions.begin(), target.mentions.end(),
            [](const CandidateMention& a, const CandidateMention& b) {
              return std::tie(a.sentence_index, a.begin) < std::tie(b.sentence_index, b.begin);
            });
  target.occurrence_count = static_cast<int>(target.mentions.size());
}

// Characters mentioned fewer than `threshold` times are noise, not cast.
inline std::vector<CharacterGroup> prune_rare(std::vector<CharacterGroup> groups, int threshold,
                                              std::vector<PrunedGroup>* pruned = nullptr) {
  std::vector<CharacterGroup> kept;
  kept.reserve(groups.size());
  for (auto& g : groups) {
    if (g.occurrence_count < threshold) {
      if (pruned) pruned->push_back({g.representation, g.occurrence_count});
      continue;
    }
    kept.push_back(std::move(g));
  }
  return kept;
}

// Database gender of the representation's first token wins; otherwise the
// marker words directly before each mention vote, majority rules, and a
// tie or no evidence stays unknown.
inline Gender infer_gender(const CharacterGroup& group, const Lexicon& first_names,
                           const Lexicon& gender_markers, const Document& doc) {
  std::vector<std::string> rep_tokens = text::split_words(group.representation);
  if (!rep_tokens.empty()) {
    if (auto g = first_names.gender_of(rep_tokens[0]); g && *g != Gender::unknown) return *g;
  }
  int male = 0, female = 0;
  for (const auto& m : group.mentions) {
    if (m.begin <= 0) continue;
    const auto& sentence = doc.sentences[static_cast<std::size_t>(m.sentence_index)];
    const std::string& prev = sentence[static_cast<std::size_t>(m.begin - 1)].surface;
    if (auto g = gender_markers.gender_of(prev)) {
      if (*g == Gender::male) ++male;
      if (*g == Gender::female) ++female;
    }
  }
  if (male > female) return Gender::male;
  if (female > male) return Gender::female;
  return Gender::unknown;
}

namespace coref_detail {

// Materializes CharacterGroups from surface clusters: attaches mentions by
// surface, sorts aliases, and assigns ids by first appearance in the text.
inline std::vector<CharacterGroup> materialize(const std::vector<SurfaceGroup>& groups,
                                               const MentionList& mentions,
                                               const std::map<std::string, std::string>&
                                                   rewritten_surface) {
  // surface -> group index (aliases partition the surfaces).
  std::map<std::string, std::size_t> owner;
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (const auto& entry : groups[g].entries) owner[entry.surface] = g;
  }
  std::vector<CharacterGroup> out(groups.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    std::set<std::string> aliases;
    for (const auto& entry : groups[g].entries) aliases.insert(entry.surface);
    out[g].aliases.assign(aliases.begin(), aliases.end());
    out[g].representation = select_representation(groups[g]);
  }
  for (const auto& m : mentions.mentions) {
    if (m.removed()) continue;
    std::string surface = m.surface;
    if (auto it = rewritten_surface.find(surface); it != rewritten_surface.end())
      surface = it->second;
    auto it = owner.find(surface);
    if (it == owner.end()) continue;  // surface pruned during clustering
    out[it->second].mentions.push_back(m);
  }
  for (auto& g : out) {
    std::sort(g.mentions.begin(), g.mentions.end(),
              [](const CandidateMention& a, const CandidateMention& b) {
                return std::tie(a.sentence_index, a.begin) < std::tie(b.sentence_index, b.begin);
              });
    g.occurrence_count = static_cast<int>(g.mentions.size());
  }
  // Ids follow first appearance; empty groups sort last.
  std::vector<std::size_t> order(out.size());
  std::iota(order.begin(), order.end(), 0);
  auto first_pos = [&](std::size_t g) {
    constexpr int kNoMention = std::numeric_limits<int>::max();
    if (out[g].mentions.empty()) return std::pair<int, int>(kNoMention, kNoMention);
    const auto& m = out[g].mentions.front();
    return std::pair<int, int>(m.sentence_index, m.begin);
  };
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    auto pa = first_pos(a), pb = first_pos(b);
    if (pa != pb) return pa < pb;
    return out[a].representation < out[b].representation;
  });
  std::vector<CharacterGroup> final_groups;
  final_groups.reserve(out.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    CharacterGroup g = std::move(out[order[rank]]);
    g.group_id = static_cast<int>(rank) + 1;
    final_groups.push_back(std::move(g));
  }
  return final_groups;
}

}  // namespace coref_detail

// The full resolution stage. Narrator selection happens after groups have
// representations, mirroring the interactive flow where the roster exists
// before the user names the narrating character.
inline CorefResult resolve_characters(const MentionList& mentions, const Document& doc,
                                      const LexiconSet& lexicons, const CorefConfig& config = {}) {
  CorefResult result;

  std::vector<NameSequence> surfaces = collect_surfaces(mentions, lexicons.titles);

  // Canonicalize diminutives before clustering, so a nickname clusters
  // exactly as its canonical form would have. Rewriting only at the merge
  // step would leave the stage non-idempotent: the rewritten alias can
  // subset-match a group its written form could not reach.
  std::map<std::string, std::string> rewritten;
  {
    std::map<std::string, NameSequence> canonical;
    for (auto& entry : surfaces) {
      std::string original = entry.surface;
      bool changed = false;
      for (std::size_t i = 0; i < entry.tokens.size(); ++i) {
        if (entry.is_title[i]) continue;
        if (auto mapped = lexicons.diminutives.canonical_of(entry.tokens[i])) {
          entry.tokens[i] = *mapped;
          changed = true;
        }
      }
      if (changed) {
        std::string joined;
        for (std::size_t i = 0; i < entry.tokens.size(); ++i) {
          if (i) joined.push_back(' ');
          joined += entry.tokens[i];
        }
        entry.surface = joined;
        rewritten[original] = std::move(joined);
      }
      auto [it, inserted] = canonical.try_emplace(entry.surface, entry);
      if (!inserted) it->second.frequency += entry.frequency;
    }
    surfaces.clear();
    for (auto& [surface, entry] : canonical) surfaces.push_back(std::move(entry));
  }

  std::vector<NameSequence> sorted = sort_by_token_count(std::move(surfaces));
  std::vector<std::string> collisions;
  std::vector<SurfaceGroup> raw_groups = group_by_token_match(sorted, &collisions);
  for (std::string& c : collisions) result.warnings.push_back("ambiguous surface: " + c);
  // No-op on the canonical surfaces; kept so the stage composition stays
  // the documented step sequence.
  raw_groups = merge_diminutives(std::move(raw_groups), lexicons.diminutives);

  std::vector<CharacterGroup> groups =
      coref_detail::materialize(raw_groups, mentions, rewritten);

  if (config.narrator) {
    std::optional<std::size_t> index;
    for (std::size_t g = 0; g < groups.size(); ++g) {
      if (groups[g].representation == *config.narrator) {
        index = g;
        break;
      }
    }
    if (!index) {
      for (std::size_t g = 0; g < groups.size(); ++g) {
        const auto& a = groups[g].aliases;
        if (std::find(a.begin(), a.end(), *config.narrator) != a.end()) {
          index = g;
          break;
        }
      }
    }
    if (!index) throw UnknownGroup("\"" + *config.narrator + "\"");
    assign_narrator(groups, doc, *index, lexicons.narrator_pronouns);
  }

  groups = prune_rare(std::move(groups), config.prune_threshold, &result.pruned);

  // Renumber densely after pruning, keeping first-appearance order.
  for (std::size_t g = 0; g < groups.size(); ++g)
    groups[g].group_id = static_cast<int>(g) + 1;

  for (auto& g : groups)
    g.gender = infer_gender(g, lexicons.first_names, lexicons.gender_markers, doc);

  result.groups = std::move(groups);
  return result;
}

// Roster CSV: group_id,representation,gender,occurrences,aliases with
// aliases joined by '|'.
inline std::string format_roster_csv(const std::vector<CharacterGroup>& groups) {
  std::string out = "group_id,representation,gender,occurrences,aliases\n";
  for (const auto& g : groups) {
    std::string aliases;
    for (std::size_t i = 0; i < g.aliases.size(); ++i) {
      if (i) aliases.push_back('|');
      aliases += g.aliases[i];
    }
    out += io::csv_row({std::to_string(g.group_id), g.representation,
                        std::string(1, gender_code(g.gender)),
                        std::to_string(g.occurrence_count), aliases});
  }
  return out;
}

}  // namespace charnet
