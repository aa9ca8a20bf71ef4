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

// Character-name extraction: tag-pattern matching over one layer, then six
// cleaning steps. Title and presence evidence CONFIRM a mention; confirmed
// mentions are exempt from every removal filter, so surname-only and
// nickname mentions survive the first-names check. Each removal records
// its reason for the audit log.

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "charnet/corpus.hpp"
#include "charnet/errors.hpp"
#include "charnet/lexicon.hpp"
#include "charnet/mention.hpp"
#include "charnet/tags.hpp"
#include "charnet/text.hpp"

namespace charnet {

namespace detail {

inline bool is_connective_tag(PosTag t) { return t == PosTag::prep || t == PosTag::det; }

// Longest pattern match starting at token `start` of a sentence tag span,
// or 0. Grammar: [TITLE] PNM+ ((PREP|DET)+ PNM+)*; a connective run is
// consumed only when another PNM follows it, which stops over-extension
// into trailing prose.
inline std::size_t match_length_at(std::span<const PosTag> tags, std::size_t start) {
  std::size_t i = start;
  if (i < tags.size() && tags[i] == PosTag::title) ++i;
  if (i >= tags.size() || tags[i] != PosTag::pnm) return 0;
  while (i < tags.size() && tags[i] == PosTag::pnm) ++i;
  while (true) {
    std::size_t run = i;
    while (run < tags.size() && is_connective_tag(tags[run])) ++run;
    if (run == i || run >= tags.size() || tags[run] != PosTag::pnm) break;
    i = run;
    while (i < tags.size() && tags[i] == PosTag::pnm) ++i;
  }
  return i - start;
}

inline Pattern classify_span(std::span<const PosTag> tags) {
  bool titled = tags.front() == PosTag::title;
  std::size_t name_tokens = tags.size() - (titled ? 1 : 0);
  bool connective = std::any_of(tags.begin(), tags.end(), is_connective_tag);
  if (titled) return name_tokens == 1 ? Pattern::title_name : Pattern::title_name_seq;
  if (connective) return Pattern::name_seq_linked;
  return name_tokens == 1 ? Pattern::name : Pattern::name_seq;
}

inline std::string join_surfaces(const std::vector<Token>& sentence, int begin, int end) {
  std::string out;
  for (int t = begin; t < end; ++t) {
    if (t > begin) out.push_back(' ');
    out += sentence[static_cast<std::size_t>(t)].surface;
  }
  return out;
}

}  // namespace detail

// Scans every sentence left to right taking the longest match at each
// position, so no surviving span overlaps or nests inside another.
inline MentionList match_patterns(const Document& doc, const std::string& layer_name = "primary") {
  const TagLayer* layer = doc.layer(layer_name);
  if (!layer) throw InconsistentInput("tag layer \"" + layer_name + "\" is not attached");
  if (layer->tags.size() != doc.token_count())
    throw AlignmentError(layer->tags.size(), doc.token_count());

  MentionList list;
  list.document_id = doc.id;
  std::size_t flat = 0;
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    const auto& sentence = doc.sentences[s];
    std::span<const PosTag> tags(layer->tags.data() + flat, sentence.size());
    std::size_t t = 0;
    while (t < sentence.size()) {
      std::size_t len = detail::match_length_at(tags, t);
      if (len == 0) {
        ++t;
        continue;
      }
      CandidateMention m;
      m.sentence_index = static_cast<int>(s);
      m.begin = static_cast<int>(t);
      m.end = static_cast<int>(t + len);
      m.surface = detail::join_surfaces(sentence, m.begin, m.end);
      m.pattern = detail::classify_span(tags.subspan(t, len));
      m.state = MentionState::candidate;
      list.mentions.push_back(std::move(m));
      t += len;
    }
    flat += sentence.size();
  }
  return list;
}

// Title Finder: any candidate whose span contains a title is certainly a
// person and becomes confirmed.
inline MentionList confirm_by_title(MentionList list, const Lexicon& titles) {
  for (auto& m : list.mentions) {
    if (m.state != MentionState::candidate) continue;
    for (const std::string& word : text::split_words(m.surface)) {
      if (titles.contains(word)) {
        m.state = MentionState::confirmed;
        break;
      }
    }
  }
  return list;
}

// Presence Detection: a candidate directly preceded (same sentence,
// punctuation skipped) by a presence indicator becomes confirmed.
inline MentionList confirm_by_presence(MentionList list, const Lexicon& presence,
                                       const Document& doc) {
  for (auto& m : list.mentions) {
    if (m.state != MentionState::candidate) continue;
    const auto& sentence = doc.sentences[static_cast<std::size_t>(m.sentence_index)];
    int t = m.begin - 1;
    while (t >= 0 && text::is_punct_only(sentence[static_cast<std::size_t>(t)].surface)) --t;
    if (t < 0) continue;
    if (presence.contains(sentence[static_cast<std::size_t>(t)].surface))
      m.state = MentionState::confirmed;
  }
  return list;
}

// Re-tag cross-check: an unconfirmed candidate with no proper-name tag in
// the second layer was a first-tagger mistake.
inline MentionList filter_retag(MentionList list, const Document& doc,
                                const TagLayer* second_layer) {
  if (!second_layer) return list;
  if (second_layer->tags.size() != doc.token_count())
    throw AlignmentError(second_layer->tags.size(), doc.token_count());
  for (auto& m : list.mentions) {
    if (m.state != MentionState::candidate) continue;
    bool any_pnm = false;
    for (int t = m.begin; t < m.end; ++t) {
      std::size_t flat = doc.flat_index(m.sentence_index, t);
      if (second_layer->tags[flat] == PosTag::pnm) {
        any_pnm = true;
        break;
      }
    }
    if (!any_pnm) {
      m.state = MentionState::removed;
      m.removal_reason = RemovalReason::retag;
    }
  }
  return list;
}

// Locations Filter: a candidate that is exactly a gazetteer entry is a
// place, not a person.
inline MentionList filter_locations(MentionList list, const Lexicon& locations) {
  for (auto& m : list.mentions) {
    if (m.state != MentionState::candidate) continue;
    if (locations.contains(m.surface)) {
      m.state = MentionState::removed;
      m.removal_reason = RemovalReason::location;
    }
  }
  return list;
}

// Incorrect Tokens Removal: a capitalized span token that also occurs in
// the document as an all-lowercase word was only capitalized by position.
// Flagged tokens are deleted; the longest contiguous run of surviving
// tokens keeps the mention alive, otherwise it is removed.
inline MentionList filter_lowercase_variant(MentionList list, const Document& doc) {
  std::set<std::string> lowercase_forms;
  for (const auto& sentence : doc.sentences) {
    for (const auto& tok : sentence) {
      if (text::is_all_lowercase_word(tok.surface))
        lowercase_forms.insert(text::casefold(tok.surface));
    }
  }
  for (auto& m : list.mentions) {
    if (m.state != MentionState::candidate) continue;
    const auto& sentence = doc.sentences[static_cast<std::size_t>(m.sentence_index)];
    std::vector<bool> keep(static_cast<std::size_t>(m.length()), true);
    bool changed = false;
    for (int t = m.begin; t < m.end; ++t) {
      const std::string& surface = sentence[static_cast<std::size_t>(t)].surface;
      if (text::is_capitalized(surface) &&
          lowercase_forms.count(text::casefold(surface))) {
        keep[static_cast<std::size_t>(t - m.begin)] = false;
        changed = true;
      }
    }
    if (!changed) continue;
    // Longest contiguous run of kept tokens; earliest wins ties.
    int best_begin = 0, best_len = 0, run_begin = -1;
    for (int i = 0; i <= m.length(); ++i) {
      bool kept = i < m.length() && keep[static_cast<std::size_t>(i)];
      if (kept && run_begin < 0) run_begin = i;
      if (!kept && run_begin >= 0) {
        if (i - run_begin > best_len) {
          best_len = i - run_begin;
          best_begin = run_begin;
        }
        run_begin = -1;
      }
    }
    if (best_len == 0) {
      m.state = MentionState::removed;
      m.removal_reason = RemovalReason::lowercase_variant;
      continue;
    }
    m.begin += best_begin;
    m.end = m.begin + best_len;
    m.surface = detail::join_surfaces(sentence, m.begin, m.end);
  }
  return list;
}

// First Names Filter: an unconfirmed candidate whose first non-title token
// is not in the names database is discarded.
inline MentionList filter_first_names(MentionList list, const Lexicon& first_names) {
  for (auto& m : list.mentions) {
    if (m.state != MentionState::candidate) continue;
    std::vector<std::string> words = text::split_words(m.surface);
    std::size_t first = 0;
    bool titled = m.pattern == Pattern::title_name || m.pattern == Pattern::title_name_seq;
    if (titled && words.size() > 1) first = 1;
    if (!first_names.contains(words[first])) {
      m.state = MentionState::removed;
      m.removal_reason = RemovalReason::first_name;
    }
  }
  return list;
}

struct CneResult {
  MentionList kept;     // state candidate or confirmed, document order
  MentionList removed;  // audit trail with removal reasons
  std::vector<std::string> warnings;
};

// Full extraction stage in the fixed order: match, title, presence, retag,
// locations, lowercase variants, first names.
inline CneResult run_cne(const Document& doc, const LexiconSet& lexicons,
                         const std::string& primary_layer = "primary",
                         const std::string& secondary_layer = "secondary") {
  CneResult result;
  MentionList list = match_patterns(doc, primary_layer);
  list = confirm_by_title(std::move(list), lexicons.titles);
  list = confirm_by_presence(std::move(list), lexicons.presence, doc);
  const TagLayer* second = doc.layer(secondary_layer);
  if (!second)
    result.warnings.push_back("no secondary tag layer; re-tag filter skipped");
  list = filter_retag(std::move(list), doc, second);
  list = filter_locations(std::move(list), lexicons.locations);
  list = filter_lowercase_variant(std::move(list), doc);
  list = filter_first_names(std::move(list), lexicons.first_names);

  result.kept.document_id = list.document_id;
  result.removed.document_id = list.document_id;
  for (auto& m : list.mentions) {
    if (m.removed())
      result.removed.mentions.push_back(std::move(m));
    else
      result.kept.mentions.push_back(std::move(m));
  }
  return result;
}

// Audit log: surface<TAB>reason<TAB>sentence_index, one removed mention
// per line in document order.
inline std::string format_audit_log(const MentionList& removed) {
  std::string out;
  for (const auto& m : removed.mentions) {
    if (!m.removed()) continue;
    out += m.surface;
    out.push_back('\t');
    out += to_string(*m.removal_reason);
    out.push_back('\t');
    out += std::to_string(m.sentence_index);
    out.push_back('\n');
  }
  return out;
}

}  // namespace charnet
