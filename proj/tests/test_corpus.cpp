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

#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "support/helpers.hpp"

using namespace charnet;
using testsupport::make_doc;

namespace {

std::vector<std::string> surfaces(const std::vector<Token>& sentence) {
  std::vector<std::string> out;
  for (const auto& t : sentence) out.push_back(t.surface);
  return out;
}

}  // namespace

TEST_CASE("empty source is an error") {
  CHECK_THROWS_AS(load_document("", "x"), EmptyDocument);
  CHECK_THROWS_AS(load_document("  \n\t ", "x"), EmptyDocument);
}

TEST_CASE("two plain sentences segment and tokenize") {
  Document doc = make_doc("Gatinhas correu. Sagul gritou.");
  REQUIRE(doc.sentences.size() == 2);
  CHECK(surfaces(doc.sentences[0]) == std::vector<std::string>{"Gatinhas", "correu", "."});
  CHECK(surfaces(doc.sentences[1]) == std::vector<std::string>{"Sagul", "gritou", "."});
}

TEST_CASE("title abbreviation does not end the sentence") {
  Document doc = make_doc("Sr. Domingos chegou.");
  REQUIRE(doc.sentences.size() == 1);
  CHECK(surfaces(doc.sentences[0]) ==
        std::vector<std::string>{"Sr.", "Domingos", "chegou", "."});
}

TEST_CASE("no abbreviation in the set splits on the period") {
  SegmenterOptions bare;
  bare.abbreviations.clear();
  Document doc = load_document("Sr. Domingos chegou.", "x", bare);
  CHECK(doc.sentences.size() == 2);
}

TEST_CASE("every dotted seed title survives as one token") {
  for (const std::string& title : testsupport::seed_lexicons().titles.entries()) {
    if (title.empty() || title.back() != '.') continue;
    // Capitalize the first letter so the next word looks sentence-initial.
    std::string display = title;
    display[0] = static_cast<char>(display[0] - 'a' + 'A');
    Document doc = make_doc("Veio o " + display + " Carmo falar.");
    INFO(display);
    CHECK(doc.sentences.size() == 1);
  }
}

TEST_CASE("dialogue dash and ellipsis tokenize on their own") {
  Document doc = make_doc("— Corre!");
  REQUIRE(doc.sentences.size() == 1);
  CHECK(surfaces(doc.sentences[0]) == std::vector<std::string>{"—", "Corre", "!"});

  Document doc2 = make_doc("Talvez… Depois venho.");
  CHECK(doc2.sentences.size() == 2);
}

TEST_CASE("terminal punctuation only splits before a capital") {
  // Attribution after the dash continues the sentence.
  Document doc = make_doc("— Corre! — gritou Gatinhas.");
  CHECK(doc.sentences.size() == 1);
  // A following capital starts a new one.
  Document doc2 = make_doc("— Corre! Depois veio.");
  CHECK(doc2.sentences.size() == 2);
}

TEST_CASE("token spans reconstruct the source text") {
  std::string source = "  Sr. Domingos chegou.\nA Maria — a viúva — sorriu!  ";
  Document doc = make_doc(source);
  std::string rebuilt;
  std::size_t cursor = 0;
  for (const auto& sentence : doc.sentences) {
    for (const auto& tok : sentence) {
      REQUIRE(tok.begin >= cursor);
      REQUIRE(tok.end <= source.size());
      rebuilt += source.substr(cursor, tok.begin - cursor);
      rebuilt += tok.surface;
      CHECK(source.substr(tok.begin, tok.end - tok.begin) == tok.surface);
      cursor = tok.end;
    }
  }
  rebuilt += source.substr(cursor);
  CHECK(rebuilt == source);
}

TEST_CASE("sentence and token indices are dense") {
  Document doc = make_doc("Um dois. Tres quatro cinco. Seis.");
  for (std::size_t s = 0; s < doc.sentences.size(); ++s) {
    for (std::size_t t = 0; t < doc.sentences[s].size(); ++t) {
      CHECK(doc.sentences[s][t].sentence_index == static_cast<int>(s));
      CHECK(doc.sentences[s][t].token_index == static_cast<int>(t));
    }
  }
}

TEST_CASE("loading is deterministic") {
  std::string source = "O Sr. Domingos falou com a D. Maria. Depois partiu para Cascais.";
  Document a = make_doc(source);
  Document b = make_doc(source);
  REQUIRE(a.sentences.size() == b.sentences.size());
  for (std::size_t s = 0; s < a.sentences.size(); ++s) {
    REQUIRE(surfaces(a.sentences[s]) == surfaces(b.sentences[s]));
  }
}

TEST_CASE("strip_nonliterary") {
  Document doc = make_doc("PREFACE junk. *** START *** Era uma vez. Fim da história. "
                          "*** END *** licensing junk here.");
  SECTION("empty markers keep the document") {
    Document out = strip_nonliterary(doc, {});
    CHECK(out.source_text == doc.source_text);
  }
  SECTION("a marker pair keeps only the enclosed text") {
    Document out = strip_nonliterary(doc, {{"*** START ***", "*** END ***"}},
                                     testsupport::seed_segmenter_options());
    CHECK(out.sentences.size() == 2);
    CHECK(out.source_text.find("junk") == std::string::npos);
    CHECK(out.source_text.find("Era uma vez.") != std::string::npos);
  }
  SECTION("begin without end is unbalanced") {
    Document bad = make_doc("text *** START *** still going");
    CHECK_THROWS_AS(strip_nonliterary(bad, {{"*** START ***", "*** END ***"}}),
                    UnbalancedMarkers);
  }
  SECTION("absent markers leave the document unchanged") {
    Document out = strip_nonliterary(doc, {{"@@BEGIN@@", "@@END@@"}});
    CHECK(out.source_text == doc.source_text);
  }
}

TEST_CASE("pretagged: minimal file") {
  Document doc = load_pretagged("Domingos\tPNM\n\n", "mini");
  REQUIRE(doc.sentences.size() == 1);
  REQUIRE(doc.sentences[0].size() == 1);
  CHECK(doc.sentences[0][0].surface == "Domingos");
  const TagLayer* layer = doc.layer("primary");
  REQUIRE(layer != nullptr);
  REQUIRE(layer->tags.size() == 1);
  CHECK(layer->tags[0] == PosTag::pnm);
}

TEST_CASE("pretagged: blank lines advance the sentence index") {
  Document doc = load_pretagged("A\tOTHER\nB\tPNM\n\nC\tPNM\n\n\nD\tOTHER\n", "mini");
  REQUIRE(doc.sentences.size() == 3);
  CHECK(doc.sentences[0].size() == 2);
  CHECK(doc.sentences[1][0].sentence_index == 1);
  CHECK(doc.sentences[2][0].sentence_index == 2);
}

TEST_CASE("pretagged: ragged rows are malformed") {
  try {
    load_pretagged("#layers: primary,secondary\nA\tPNM\tPNM\nB\tPNM\n", "mini");
    FAIL("expected MalformedInput");
  } catch (const MalformedInput& e) {
    CHECK(e.line == 3);
  }
}

TEST_CASE("pretagged: two layers via header") {
  Document doc = load_pretagged("#layers: primary,secondary\nLivro\tPNM\tNOUN\n", "mini");
  REQUIRE(doc.layer("primary") != nullptr);
  REQUIRE(doc.layer("secondary") != nullptr);
  CHECK(doc.layer("primary")->tags[0] == PosTag::pnm);
  CHECK(doc.layer("secondary")->tags[0] == PosTag::noun);
}

TEST_CASE("pretagged: unknown tag without mapping is malformed") {
  CHECK_THROWS_AS(load_pretagged("A\tPROPN\n", "mini"), MalformedInput);
}

TEST_CASE("pretagged: foreign tags go through a mapping") {
  TagsetMapping mapping = parse_tagset_mapping("PROPN\tPNM\n*\tOTHER\n");
  Document doc = load_pretagged("Ana\tPROPN\nfoi\tVERBX\n", "mini", &mapping);
  CHECK(doc.layer("primary")->tags[0] == PosTag::pnm);
  CHECK(doc.layer("primary")->tags[1] == PosTag::other);
}

TEST_CASE("tagset mapping without default rejects unknown tags") {
  TagsetMapping mapping = parse_tagset_mapping("PROPN\tPNM\n");
  std::vector<std::string> raw{"XYZ"};
  CHECK_THROWS_AS(map_external_tagset(raw, mapping), UnknownTag);
}
