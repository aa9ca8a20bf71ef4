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

#include "charnet/coref.hpp"
#include "charnet/corpus.hpp"
#include "charnet/errors.hpp"
#include "charnet/evaluation.hpp"
#include "charnet/extraction.hpp"
#include "charnet/fixture.hpp"
#include "charnet/interactions.hpp"
#include "charnet/io.hpp"
#include "charnet/lexicon.hpp"
#include "charnet/mention.hpp"
#include "charnet/network.hpp"
#include "charnet/pipeline.hpp"
#include "charnet/tagging.hpp"
#include "charnet/tags.hpp"
#include "charnet/text.hpp"
