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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace charnet {

// The five name tag patterns. A titled match with more than one name token
// classifies as title_name_seq whether or not connectives occur inside.
enum class Pattern {
  name,             // PNM
  title_name,       // TITLE PNM
  name_seq,         // PNM PNM+
  name_seq_linked,  // PNM+ ((PREP|DET)+ PNM+)+
  title_name_seq,   // TITLE PNM+ ((PREP|DET)+ PNM+)*
};

inline const char* to_string(Pattern p) {
  switch (p) {
    case Pattern::name: return "name";
    case Pattern::title_name: return "title_name";
    case Pattern::name_seq: return "name_seq";
    case Pattern::name_seq_linked: return "name_seq_linked";
    case Pattern::title_name_seq: return "title_name_seq";
  }
  return "name";
}

inline std::optional<Pattern> parse_pattern(std::string_view s) {
  if (s == "name") return Pattern::name;
  if (s == "title_name") return Pattern::title_name;
  if (s == "name_seq") return Pattern::name_seq;
  if (s == "name_seq_linked") return Pattern::name_seq_linked;
  if (s == "title_name_seq") return Pattern::title_name_seq;
  return std::nullopt;
}

enum class MentionState { candidate, confirmed, removed };

enum class RemovalReason { retag, location, lowercase_variant, first_name };

inline const char* to_string(RemovalReason r) {
  switch (r) {
    case RemovalReason::retag: return "retag";
    case RemovalReason::location: return "location";
    case RemovalReason::lowercase_variant: return "lowercase_variant";
    case RemovalReason::first_name: return "first_name";
  }
  return "retag";
}

// A contiguous token span inside one sentence. Narrator mentions appended
// during co-reference carry no pattern.
struct CandidateMention {
  int sentence_index = 0;
  int begin = 0;  // half-open token positions within the sentence
  int end = 0;
  std::string surface;  // span tokens joined with single spaces
  std::optional<Pattern> pattern;
  MentionState state = MentionState::candidate;
  std::optional<RemovalReason> removal_reason;

  int length() const { return end - begin; }
  bool removed() const { return state == MentionState::removed; }
};

struct MentionList {
  std::string document_id;
  std::vector<CandidateMention> mentions;  // document order
};

}  // namespace charnet
