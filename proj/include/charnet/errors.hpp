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

#include <stdexcept>
#include <string>

namespace charnet {

// Base of every library error. InputError covers malformed or inconsistent
// user-supplied data (CLI exit code 1); PipelineError covers failures while
// composing stages (CLI exit code 2).
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct InputError : Error {
  using Error::Error;
};

struct PipelineError : Error {
  using Error::Error;
};

struct EmptyDocument : InputError {
  explicit EmptyDocument(const std::string& id)
      : InputError("empty document: \"" + id + "\" contains no tokens") {}
};

struct UnbalancedMarkers : InputError {
  explicit UnbalancedMarkers(const std::string& begin_marker)
      : InputError("begin marker \"" + begin_marker + "\" has no matching end marker") {}
};

struct MalformedInput : InputError {
  MalformedInput(std::size_t line, const std::string& detail)
      : InputError("malformed input at line " + std::to_string(line) + ": " + detail),
        line(line) {}
  std::size_t line;
};

struct MalformedLexicon : InputError {
  MalformedLexicon(std::size_t line, const std::string& detail)
      : InputError("malformed lexicon at line " + std::to_string(line) + ": " + detail),
        line(line) {}
  std::size_t line;
};

struct UnknownTag : InputError {
  explicit UnknownTag(const std::string& raw)
      : InputError("unmapped tag \"" + raw + "\" and no default mapping"), raw(raw) {}
  std::string raw;
};

struct MalformedGold : InputError {
  explicit MalformedGold(const std::string& detail)
      : InputError("malformed gold annotation: " + detail) {}
};

struct DanglingReference : InputError {
  explicit DanglingReference(const std::string& char_id)
      : InputError("gold interaction references unknown character \"" + char_id + "\"") {}
};

struct DocumentMismatch : InputError {
  DocumentMismatch(const std::string& expected, const std::string& got)
      : InputError("document id mismatch: system \"" + expected + "\" vs gold \"" + got + "\"") {}
};

struct UnsupportedFormat : InputError {
  explicit UnsupportedFormat(const std::string& format)
      : InputError("unsupported graph format \"" + format + "\"") {}
};

struct ConfigError : InputError {
  using InputError::InputError;
};

struct FixtureError : InputError {
  explicit FixtureError(const std::string& detail)
      : InputError("fixture inconsistency: " + detail) {}
};

struct AlignmentError : PipelineError {
  AlignmentError(std::size_t layer_len, std::size_t token_count)
      : PipelineError("tag layer length " + std::to_string(layer_len) +
                      " does not match token count " + std::to_string(token_count)) {}
};

struct DuplicateLayer : PipelineError {
  explicit DuplicateLayer(const std::string& name)
      : PipelineError("tag layer \"" + name + "\" is already attached") {}
};

struct EmptyGroup : PipelineError {
  EmptyGroup() : PipelineError("operation on an empty character group") {}
};

struct UnknownGroup : InputError {
  explicit UnknownGroup(const std::string& which)
      : InputError("unknown character group: " + which) {}
};

struct InconsistentInput : PipelineError {
  explicit InconsistentInput(const std::string& detail)
      : PipelineError("inconsistent stage inputs: " + detail) {}
};

struct EmptyReportSet : PipelineError {
  EmptyReportSet() : PipelineError("cannot aggregate an empty report set") {}
};

}  // namespace charnet
