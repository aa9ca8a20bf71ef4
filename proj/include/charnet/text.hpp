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

// UTF-8 text utilities for Latin-script languages: codepoint iteration,
// case mapping, canonical composition of the common Latin diacritics, and
// the key normalization used by every lexicon lookup.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace charnet::text {

inline constexpr char32_t kReplacement = 0xFFFD;

// Decodes the codepoint starting at byte i and advances i past it.
// Invalid sequences decode one byte at a time to the replacement char.
inline char32_t decode(std::string_view s, std::size_t& i) {
  const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
  unsigned char b0 = byte(i);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  auto cont = [&](std::size_t k) {
    return k < s.size() && (byte(k) & 0xC0) == 0x80;
  };
  if ((b0 & 0xE0) == 0xC0 && cont(i + 1)) {
    char32_t cp = (char32_t(b0 & 0x1F) << 6) | (byte(i + 1) & 0x3F);
    i += 2;
    return cp;
  }
  if ((b0 & 0xF0) == 0xE0 && cont(i + 1) && cont(i + 2)) {
    char32_t cp = (char32_t(b0 & 0x0F) << 12) | (char32_t(byte(i + 1) & 0x3F) << 6) |
                  (byte(i + 2) & 0x3F);
    i += 3;
    return cp;
  }
  if ((b0 & 0xF8) == 0xF0 && cont(i + 1) && cont(i + 2) && cont(i + 3)) {
    char32_t cp = (char32_t(b0 & 0x07) << 18) | (char32_t(byte(i + 1) & 0x3F) << 12) |
                  (char32_t(byte(i + 2) & 0x3F) << 6) | (byte(i + 3) & 0x3F);
    i += 4;
    return cp;
  }
  ++i;
  return kReplacement;
}

inline void encode(char32_t cp, std::string& out) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

inline std::vector<char32_t> codepoints(std::string_view s) {
  std::vector<char32_t> cps;
  cps.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) cps.push_back(decode(s, i));
  return cps;
}

inline std::string from_codepoints(const std::vector<char32_t>& cps) {
  std::string out;
  out.reserve(cps.size() * 2);
  for (char32_t cp : cps) encode(cp, out);
  return out;
}

inline bool is_whitespace(char32_t cp) {
  return cp == U' ' || cp == U'\t' || cp == U'\n' || cp == U'\r' || cp == U'\v' ||
         cp == U'\f' || cp == 0x00A0;
}

inline bool is_upper(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return true;
  if ((cp >= 0xC0 && cp <= 0xD6) || (cp >= 0xD8 && cp <= 0xDE)) return true;
  // Latin Extended-A pairs; 0x178 is the uppercase of 0xFF.
  if (cp >= 0x100 && cp <= 0x137) return (cp % 2) == 0;
  if (cp >= 0x139 && cp <= 0x148) return (cp % 2) == 1;
  if (cp >= 0x14A && cp <= 0x177) return (cp % 2) == 0;
  if (cp == 0x178) return true;
  if (cp >= 0x179 && cp <= 0x17E) return (cp % 2) == 1;
  return false;
}

inline char32_t to_lower(char32_t cp) {
  if (cp >= U'A' && cp <= U'Z') return cp + 0x20;
  if ((cp >= 0xC0 && cp <= 0xD6) || (cp >= 0xD8 && cp <= 0xDE)) return cp + 0x20;
  if (cp == 0x178) return 0xFF;
  if (is_upper(cp) && cp >= 0x100 && cp <= 0x17E) return cp + 1;
  return cp;
}

inline bool is_letter(char32_t cp) {
  if ((cp >= U'a' && cp <= U'z') || (cp >= U'A' && cp <= U'Z')) return true;
  if (cp >= 0xC0 && cp <= 0xFF && cp != 0xD7 && cp != 0xF7) return true;
  if (cp >= 0x100 && cp <= 0x17F) return true;
  return false;
}

inline bool is_combining_mark(char32_t cp) { return cp >= 0x300 && cp <= 0x36F; }

inline bool is_punct(char32_t cp) {
  if ((cp >= 0x21 && cp <= 0x2F) || (cp >= 0x3A && cp <= 0x40) ||
      (cp >= 0x5B && cp <= 0x60) || (cp >= 0x7B && cp <= 0x7E)) {
    return true;
  }
  switch (cp) {
    case 0xA1:   // inverted exclamation
    case 0xAB:   // left guillemet
    case 0xB7:   // middle dot
    case 0xBB:   // right guillemet
    case 0xBF:   // inverted question
    case 0x2013: // en dash
    case 0x2014: // em dash
    case 0x2018:
    case 0x2019:
    case 0x201A:
    case 0x201C:
    case 0x201D:
    case 0x201E:
    case 0x2026: // ellipsis
    case 0x2039:
    case 0x203A:
      return true;
    default:
      return false;
  }
}

// Canonical composition for the Latin diacritics that occur in Portuguese
// and its neighbours. Anything outside the table passes through untouched.
inline char32_t compose(char32_t base, char32_t mark) {
  struct Entry {
    char32_t base, mark, composed;
  };
  static constexpr std::array<Entry, 42> kTable{{
      {U'A', 0x300, 0xC0}, {U'A', 0x301, 0xC1}, {U'A', 0x302, 0xC2},
      {U'A', 0x303, 0xC3}, {U'A', 0x308, 0xC4}, {U'C', 0x327, 0xC7},
      {U'E', 0x300, 0xC8}, {U'E', 0x301, 0xC9}, {U'E', 0x302, 0xCA},
      {U'E', 0x308, 0xCB}, {U'I', 0x300, 0xCC}, {U'I', 0x301, 0xCD},
      {U'I', 0x302, 0xCE}, {U'I', 0x308, 0xCF}, {U'N', 0x303, 0xD1},
      {U'O', 0x300, 0xD2}, {U'O', 0x301, 0xD3}, {U'O', 0x302, 0xD4},
      {U'O', 0x303, 0xD5}, {U'O', 0x308, 0xD6}, {U'U', 0x300, 0xD9},
      {U'U', 0x301, 0xDA}, {U'U', 0x302, 0xDB}, {U'U', 0x308, 0xDC},
      {U'Y', 0x301, 0xDD}, {U'a', 0x300, 0xE0}, {U'a', 0x301, 0xE1},
      {U'a', 0x302, 0xE2}, {U'a', 0x303, 0xE3}, {U'a', 0x308, 0xE4},
      {U'c', 0x327, 0xE7}, {U'e', 0x300, 0xE8}, {U'e', 0x301, 0xE9},
      {U'e', 0x302, 0xEA}, {U'e', 0x308, 0xEB}, {U'i', 0x300, 0xEC},
      {U'i', 0x301, 0xED}, {U'i', 0x302, 0xEE}, {U'i', 0x308, 0xEF},
      {U'n', 0x303, 0xF1}, {U'o', 0x300, 0xF2}, {U'o', 0x301, 0xF3},
  }};
  static constexpr std::array<Entry, 8> kTable2{{
      {U'o', 0x302, 0xF4}, {U'o', 0x303, 0xF5}, {U'o', 0x308, 0xF6},
      {U'u', 0x300, 0xF9}, {U'u', 0x301, 0xFA}, {U'u', 0x302, 0xFB},
      {U'u', 0x308, 0xFC}, {U'y', 0x301, 0xFD},
  }};
  for (const auto& e : kTable)
    if (e.base == base && e.mark == mark) return e.composed;
  for (const auto& e : kTable2)
    if (e.base == base && e.mark == mark) return e.composed;
  return 0;
}

// NFC restricted to the compose() table: combining marks following a
// composable base letter are folded into the precomposed codepoint.
inline std::string nfc(std::string_view s) {
  std::vector<char32_t> cps = codepoints(s);
  std::vector<char32_t> out;
  out.reserve(cps.size());
  for (char32_t cp : cps) {
    if (!out.empty() && is_combining_mark(cp)) {
      if (char32_t composed = compose(out.back(), cp); composed != 0) {
        out.back() = composed;
        continue;
      }
    }
    out.push_back(cp);
  }
  return from_codepoints(out);
}

inline std::string casefold(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size();) encode(to_lower(decode(s, i)), out);
  return out;
}

inline bool is_capitalized(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = 0;
  return is_upper(decode(s, i));
}

// A word token written entirely in lowercase (at least one letter, no
// uppercase letter anywhere).
inline bool is_all_lowercase_word(std::string_view s) {
  bool has_letter = false;
  for (std::size_t i = 0; i < s.size();) {
    char32_t cp = decode(s, i);
    if (is_upper(cp)) return false;
    if (is_letter(cp)) has_letter = true;
  }
  return has_letter;
}

inline bool is_punct_only(std::string_view s) {
  if (s.empty()) return false;
  for (std::size_t i = 0; i < s.size();) {
    if (!is_punct(decode(s, i))) return false;
  }
  return true;
}

// Lexicon key normalization: compose diacritics, casefold, then strip
// punctuation off both edges. A single trailing "." stays when it directly
// follows a letter, so title abbreviations keep the period that
// distinguishes them ("sr." vs "sr").
inline std::string normalize(std::string_view s) {
  std::vector<char32_t> cps = codepoints(casefold(nfc(s)));
  std::size_t begin = 0;
  std::size_t end = cps.size();
  while (begin < end && is_punct(cps[begin])) ++begin;
  while (end > begin) {
    char32_t last = cps[end - 1];
    if (!is_punct(last)) break;
    if (last == U'.' && end - 1 > begin && is_letter(cps[end - 2])) break;
    --end;
  }
  std::vector<char32_t> kept(cps.begin() + begin, cps.begin() + end);
  return from_codepoints(kept);
}

// Splits on single spaces; used to recover the token views of a mention
// surface (token surfaces never contain whitespace).
inline std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> words;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t sp = s.find(' ', start);
    if (sp == std::string_view::npos) {
      if (start < s.size()) words.emplace_back(s.substr(start));
      break;
    }
    if (sp > start) words.emplace_back(s.substr(start, sp - start));
    start = sp + 1;
  }
  return words;
}

}  // namespace charnet::text
