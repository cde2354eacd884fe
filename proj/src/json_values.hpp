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

// JSON fragments shared by model files, verdicts and the C API.

#pragma once

#include "bilogic/semantics.hpp"
#include "json.hpp"

namespace bilogic::detail {

using ordered_json = nlohmann::ordered_json;

ordered_json value_json(const TruthValue& v);
ordered_json model_json(const Model& m);
ordered_json environment_json(const Environment& env);

}  // namespace bilogic::detail
