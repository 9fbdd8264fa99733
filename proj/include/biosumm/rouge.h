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

// ROUGE-L and ROUGE-N scoring, byte-budget truncation and bootstrap
// confidence intervals.

#ifndef BIOSUMM_ROUGE_H_
#define BIOSUMM_ROUGE_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace biosumm {

enum class RougeMetric { kL, kN };

struct RougeScore {
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;
  RougeMetric metric = RougeMetric::kL;
  int n = 0;               // n-gram order for kN
  bool undefined = false;  // nothing to compare; all three values are 0
};

// Classic O(|a|*|b|) dynamic program using two rows.
size_t LcsLength(std::span<const std::string> a, std::span<const std::string> b);

// Lowercased token surfaces.
std::vector<std::string> RougeTokens(std::string_view text);

// Per reference: R = LCS/|ref|, P = LCS/|cand|, F = 2PR/(P+R). The result is
// the reference with the highest F (first one on ties). `undefined` is set
// when candidate and every reference are empty.
RougeScore RougeL(std::string_view candidate,
                  std::span<const std::string> references);

// Clipped n-gram overlap, best reference by F. `undefined` is set when no
// reference has n tokens.
RougeScore RougeN(std::string_view candidate,
                  std::span<const std::string> references, int n);

// Longest prefix of at most `budget` bytes that does not split a UTF-8
// sequence.
std::string TruncateBytes(std::string_view text, size_t budget);

struct ConfidenceInterval {
  double point = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  double level = 0.95;
  int resamples = 0;
};

// point = mean; lower/upper = 2.5th/97.5th percentiles (linear
// interpolation) of `resamples` bootstrap means, widened if necessary so they
// bracket the point. Throws a usage Error on empty input.
ConfidenceInterval BootstrapCi(std::span<const double> scores,
                               int resamples = 1000, uint64_t seed = 1);

struct RougeBatchOptions {
  RougeMetric metric = RougeMetric::kL;
  int n = 1;
  int resamples = 1000;
  uint64_t seed = 1;
};

struct RougeBatchEntry {
  std::string id;
  RougeScore score;
};

struct RougeBatchReport {
  RougeBatchOptions options;
  std::vector<RougeBatchEntry> entries;
  std::vector<std::string> unmatched;  // candidate ids without a reference
  double mean_precision = 0.0;
  double mean_recall = 0.0;
  double mean_f = 0.0;
  std::optional<ConfidenceInterval> f_interval;  // when >= 2 entries

  // `# ...` metadata line, `id<TAB>P<TAB>R<TAB>F` rows, then
  // `MEAN<TAB>P<TAB>R<TAB>F[<TAB>CI_LOW<TAB>CI_HIGH]`.
  std::string ToTsv() const;
};

// Candidates are the document files of `candidates_dir`. The reference for a
// candidate is the file with the same name in `references_dir`, or every file
// in a directory of that name.
RougeBatchReport ScoreDirectories(const std::filesystem::path& candidates_dir,
                                  const std::filesystem::path& references_dir,
                                  const RougeBatchOptions& options);

}  // namespace biosumm

#endif  // BIOSUMM_ROUGE_H_
