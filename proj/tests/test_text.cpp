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

#include <random>
#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "charnet/text.hpp"

using namespace charnet;

TEST_CASE("casefold handles Portuguese letters") {
  CHECK(text::casefold("DOMINGOS") == "domingos");
  CHECK(text::casefold("José ANTÓNIO") == "josé antónio");
  CHECK(text::casefold("ÀÁÂÃÇÉÊÍÓÔÕÚ") == "àáâãçéêíóôõú");
}

TEST_CASE("normalize strips edge punctuation but keeps abbreviation periods") {
  CHECK(text::normalize("Sr.") == "sr.");
  CHECK(text::normalize("Sr") == "sr");
  CHECK(text::normalize("«Gatinhas»") == "gatinhas");
  CHECK(text::normalize("—") == "");
  CHECK(text::normalize("Sr.,") == "sr.");
  CHECK(text::normalize("...") == "");
  CHECK(text::normalize("Maria!") == "maria");
}

TEST_CASE("normalize composes decomposed diacritics") {
  // "Jose" + combining acute = "José"
  CHECK(text::normalize("José") == text::normalize("José"));
  CHECK(text::normalize("São") == "são");
  CHECK(text::normalize("ça") == "ça");
}

TEST_CASE("normalize is idempotent") {
  std::vector<std::string> samples = {
      "Sr.",    "«D. Maria»", "JOSÉ",  "são",  "...",  "Escorpião de Jade",
      "comigo", "—",          "Sra.,", "águia", "",     "O.K.",
  };
  std::mt19937 rng(7);
  const std::string alphabet = "abcDEF.«»!?—éÂç ";
  std::vector<char32_t> cps = text::codepoints(alphabet);
  for (int i = 0; i < 200; ++i) {
    std::string s;
    int len = static_cast<int>(rng() % 8);
    for (int k = 0; k < len; ++k) text::encode(cps[rng() % cps.size()], s);
    samples.push_back(s);
  }
  for (const auto& s : samples) {
    std::string once = text::normalize(s);
    CHECK(text::normalize(once) == once);
  }
}

TEST_CASE("capitalization and word-shape checks") {
  CHECK(text::is_capitalized("Domingos"));
  CHECK(text::is_capitalized("Índia"));
  CHECK_FALSE(text::is_capitalized("domingos"));
  CHECK_FALSE(text::is_capitalized("«quoted"));
  CHECK(text::is_all_lowercase_word("livro"));
  CHECK(text::is_all_lowercase_word("água"));
  CHECK_FALSE(text::is_all_lowercase_word("Livro"));
  CHECK_FALSE(text::is_all_lowercase_word("..."));
  CHECK(text::is_punct_only("—"));
  CHECK(text::is_punct_only("«»"));
  CHECK_FALSE(text::is_punct_only("Sr."));
}

TEST_CASE("split_words recovers mention tokens") {
  CHECK(text::split_words("Sr. Domingos") == std::vector<std::string>{"Sr.", "Domingos"});
  CHECK(text::split_words("Gatinhas") == std::vector<std::string>{"Gatinhas"});
  CHECK(text::split_words("") == std::vector<std::string>{});
}
