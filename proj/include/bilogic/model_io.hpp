// Copyright 2026 The bilogic Authors
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

/// \file model_io.hpp
/// JSON model documents.
///
///     { "mode": "bd4" | "lbd",
///       "domain": ["a", "b"],
///       "constants": {"c": "a"},
///       "predicates": {
///         "P":  {"arity": 1, "map": {"a": "T", "b": [0.7, 0.5]}, "default": "N"},
///         "R":  {"arity": 2, "map": {"a,b": "B"}, "default": "F"} } }
///
/// Tuple keys join element names with commas; the zero-ary tuple is "".
/// Values are corner glyphs or [pos, neg] arrays. "constants" and "map"
/// may be omitted; "default" may not.

#pragma once

#include <string>
#include <string_view>

#include "bilogic/semantics.hpp"

namespace bilogic {

std::string_view logic_name(Logic logic) noexcept;  // "bd4" or "lbd"
/// Throws std::invalid_argument for anything but "bd4"/"lbd".
Logic parse_logic_name(std::string_view name);

/// Reads a model document. Throws ModelError on malformed JSON or shape
/// errors; semantic problems (constants outside the domain, fuzzy values in
/// a four-valued model, ...) are left for validate_model().
Model parse_model_json(std::string_view text);
Model load_model(const std::string& path);

/// Deterministic serialization; indent < 0 gives a single line.
std::string model_to_json(const Model& model, int indent = 2);

/// Value encoding shared by every JSON output: corner glyph or [pos, neg].
std::string value_to_json(const TruthValue& value);

}  // namespace bilogic
