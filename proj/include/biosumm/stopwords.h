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

#ifndef BIOSUMM_STOPWORDS_H_
#define BIOSUMM_STOPWORDS_H_

#include <filesystem>
#include <set>
#include <string>
#include <string_view>

namespace biosumm {

using Stopwords = std::set<std::string>;

// Bundled English function-word list, lowercase.
const Stopwords& DefaultStopwords();

// One word per line; blank lines and lines starting with '#' are skipped.
// Words are lowercased.
Stopwords ParseStopwords(std::string_view content);
Stopwords LoadStopwords(const std::filesystem::path& path);

bool IsStopword(const Stopwords& stopwords, std::string_view surface);

}  // namespace biosumm

#endif  // BIOSUMM_STOPWORDS_H_
