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

// Independent oracles the implementation is checked against. These are
// deliberately brute force: every sub-span is tested against each pattern
// definition in isolation, and co-occurrence counts every mention pair.

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "charnet/coref.hpp"
#include "charnet/mention.hpp"
#include "charnet/tags.hpp"

namespace testsupport {

struct OracleSpan {
  int begin, end;
  charnet::Pattern pattern;
};

namespace oracle_detail {

using charnet::Pattern;
using charnet::PosTag;

inline bool conn(PosTag t) { return t == PosTag::prep || t == PosTag::det; }

inline bool all_pnm(const std::vector<PosTag>& s) {
  return std::all_of(s.begin(), s.end(), [](PosTag t) { return t == PosTag::pnm; });
}

// PNM+ ((PREP|DET)+ PNM+)+: only names and connectives, name at both
// ends, at least one connective. Any such sequence decomposes into the
// required alternating runs.
inline bool linked_name(const std::vector<PosTag>& s) {
  if (s.empty() || s.front() != PosTag::pnm || s.back() != PosTag::pnm) return false;
  bool any_connective = false;
  for (PosTag t : s) {
    if (t == PosTag::pnm) continue;
    if (!conn(t)) return false;
    any_connective = true;
  }
  return any_connective;
}

inline bool name_part(const std::vector<PosTag>& s) {
  if (s.size() == 1) return s[0] == PosTag::pnm;
  return all_pnm(s) || linked_name(s);
}

inline std::optional<Pattern> classify(const std::vector<PosTag>& s) {
  if (s.size() == 1 && s[0] == PosTag::pnm) return Pattern::name;
  if (s.size() == 2 && s[0] == PosTag::title && s[1] == PosTag::pnm)
    return Pattern::title_name;
  if (s.size() >= 2 && all_pnm(s)) return Pattern::name_seq;
  if (linked_name(s)) return Pattern::name_seq_linked;
  if (s.size() >= 3 && s[0] == PosTag::title) {
    std::vector<PosTag> rest(s.begin() + 1, s.end());
    if (name_part(rest)) return Pattern::title_name_seq;
  }
  return std::nullopt;
}

}  // namespace oracle_detail

// Every matching sub-span, then longest-match suppression: spans ordered
// by start then length descending, kept when they overlap nothing kept.
inline std::vector<OracleSpan> oracle_match(const std::vector<charnet::PosTag>& tags) {
  std::vector<OracleSpan> candidates;
  int n = static_cast<int>(tags.size());
  for (int b = 0; b < n; ++b) {
    for (int e = b + 1; e <= n; ++e) {
      std::vector<charnet::PosTag> span(tags.begin() + b, tags.begin() + e);
      if (auto p = oracle_detail::classify(span)) candidates.push_back({b, e, *p});
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const OracleSpan& a, const OracleSpan& b) {
    if (a.begin != b.begin) return a.begin < b.begin;
    return a.end > b.end;
  });
  std::vector<OracleSpan> kept;
  for (const auto& span : candidates) {
    bool overlaps = std::any_of(kept.begin(), kept.end(), [&](const OracleSpan& k) {
      return span.begin < k.end && k.begin < span.end;
    });
    if (!overlaps) kept.push_back(span);
  }
  return kept;
}

// O(n^2) co-occurrence reference: every unordered mention pair of distinct
// groups within the window counts once.
inline std::map<std::pair<int, int>, int> oracle_interactions(
    const std::vector<charnet::CharacterGroup>& groups, int window) {
  struct Point {
    int sentence, group;
  };
  std::vector<Point> points;
  for (const auto& g : groups)
    for (const auto& m : g.mentions) points.push_back({m.sentence_index, g.group_id});
  std::map<std::pair<int, int>, int> counts;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      if (points[i].group == points[j].group) continue;
      int delta = points[i].sentence - points[j].sentence;
      if (delta < 0) delta = -delta;
      if (delta >= window) continue;
      int a = std::min(points[i].group, points[j].group);
      int b = std::max(points[i].group, points[j].group);
      ++counts[{a, b}];
    }
  }
  return counts;
}

}  // namespace testsupport
