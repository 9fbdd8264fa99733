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

#ifndef BIOSUMM_CLI_H_
#define BIOSUMM_CLI_H_

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "biosumm/classify.h"
#include "biosumm/model_io.h"

namespace biosumm {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitInternal = 3;

// Effective settings for one invocation. Built from defaults, then a
// key=value config file, then command-line flags, each layer overriding the
// previous one.
struct RunConfig {
  TaskKind task = TaskKind::kTenClass;
  FeatureMode features = FeatureMode::kUnigram;
  bool pos = false;
  std::optional<std::filesystem::path> hypernyms;
  double hypernym_weight = 0.1;
  std::optional<std::filesystem::path> cue_words;
  TrainingUnit units = TrainingUnit::kSentence;
  ClassifierKind classifier = ClassifierKind::kNaiveBayes;
  double train_fraction = 100.0 / 130.0;
  int64_t lexicon_min_count = 3;
  double lexicon_purity = 0.8;
  double svm_reg = 1e-3;
  int svm_epochs = 200;
  int tree_max_depth = 8;
  int64_t tree_min_leaf = 2;
  int64_t budget = 665;
  std::optional<int64_t> pool_k;
  std::optional<double> min_similarity;
  uint64_t seed = 1;
  std::optional<std::filesystem::path> world;
  std::optional<std::filesystem::path> model;
  std::optional<std::filesystem::path> stopwords;
  std::string metric = "l";
  int resamples = 1000;

  // Applies one setting by name; throws a usage Error on an unknown key or
  // an unparsable value.
  void Set(const std::string& key, const std::string& value);
  // Sorted `key=value` lines (unset optionals omitted).
  std::map<std::string, std::string> Effective() const;
};

// `key=value` lines; '#' starts a comment line.
std::map<std::string, std::string> ParseConfigFile(const std::string& content);

// Entry point for the `biosumm` tool. Errors are reported to `err` as a single
// line `biosumm: error[<usage|input|internal>]: <message>`.
int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err);

}  // namespace biosumm

#endif  // BIOSUMM_CLI_H_
