// Copyright 2026 The infoweight Authors.
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

// Shared JSON conversions for documents written by the library.

#include "infoweight/model.hpp"
#include "json.hpp"

namespace infoweight::internal {

using Json = nlohmann::ordered_json;

Json LogBaseToJson(double base);
Json ConfigToJson(const EngineConfig& config);

// Dumps with two-space indentation and a trailing newline.
std::string DumpDocument(const Json& doc);

}  // namespace infoweight::internal
