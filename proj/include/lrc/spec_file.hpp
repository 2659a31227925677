// Copyright 2026 The lrc-shorten Authors
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

#include <filesystem>
#include <string>
#include <string_view>

#include "lrc/construction.hpp"

namespace lrc {

inline constexpr int kSpecFileVersion = 1;

/// Canonical JSON text for a code: fixed key order, integers only, one
/// top-level key per line, trailing newline. Identical codes give identical bytes.
std::string to_spec_json(const CodeSpec& spec);

/// Parses a spec file, rebuilds the code from (q, n, k, r) and rejects any
/// stored field that disagrees with the rebuild. The stored generator matrix
/// is kept as written (shape and range checked) so that verification can
/// examine it. Throws Errc::InvalidSpecFile.
CodeSpec from_spec_json(std::string_view text);

void save_spec_file(const CodeSpec& spec, const std::filesystem::path& path);
CodeSpec load_spec_file(const std::filesystem::path& path);

}  // namespace lrc
