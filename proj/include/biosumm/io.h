// Copyright 2026 The Biosumm Authors.
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

#ifndef BIOSUMM_IO_H_
#define BIOSUMM_IO_H_

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace biosumm {

// Whole-file read. Throws an input Error if the file cannot be opened.
std::string ReadFile(const std::filesystem::path& path);

void WriteFile(const std::filesystem::path& path, std::string_view content);

// Regular, non-hidden files directly under `dir`, sorted by filename. Files
// ending in `.pos` are POS sidecars and are skipped.
std::vector<std::filesystem::path> ListDocumentFiles(
    const std::filesystem::path& dir);

}  // namespace biosumm

#endif  // BIOSUMM_IO_H_
