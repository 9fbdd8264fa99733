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

// Label spaces for the two classification tasks and sentence feature
// extraction shared by every classifier.

#ifndef BIOSUMM_CLASSIFY_H_
#define BIOSUMM_CLASSIFY_H_

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "biosumm/corpus.h"
#include "biosumm/textproc.h"

namespace biosumm {

// kTenClass uses all ten BioCategory values as labels (LabelId is the
// category's enum value). kTwoClass folds the nine elements into bio2.
enum class TaskKind { kTenClass, kTwoClass };

using LabelId = int;
inline constexpr LabelId kBio2 = 0;
inline constexpr LabelId kNone2 = 1;

size_t NumLabels(TaskKind task);
std::string_view LabelName(TaskKind task, LabelId label);
std::optional<LabelId> ParseLabel(TaskKind task, std::string_view name);
LabelId ToTaskLabel(TaskKind task, BioCategory category);
LabelId NoneLabel(TaskKind task);

// "ten" / "two".
std::string_view TaskName(TaskKind task);
std::optional<TaskKind> ParseTask(std::string_view name);

enum class FeatureMode { kUnigram, kBigram, kStemUnigram };

std::string_view FeatureModeName(FeatureMode mode);  // unigram|bigram|stem
std::optional<FeatureMode> ParseFeatureMode(std::string_view name);

// word -> hypernyms, keys and values lowercased.
using HypernymLexicon = std::map<std::string, std::vector<std::string>>;

// `word<TAB>hypernym` lines; a word may repeat to list several hypernyms.
HypernymLexicon ParseHypernymLexicon(std::string_view content);
HypernymLexicon LoadHypernymLexicon(const std::filesystem::path& path);

struct FeatureConfig {
  FeatureMode mode = FeatureMode::kUnigram;
  bool pos_augmented = false;
  std::optional<HypernymLexicon> hypernyms;
  double hypernym_weight = 0.1;
  // Optional indicator words (for example a list of occupation terms). Each
  // token found here adds one count of the feature "@cue".
  std::set<std::string> cue_words;

  // Hypernyms only apply to unigrams; the weight must lie in (0, 1].
  void Validate() const;
};

// Sparse feature-id -> weight. Present weights are always positive.
using FeatureVector = std::map<std::string, double>;

// unigram: lowercased surface counts; bigram: "a_b" pair counts; stem: stem
// counts. With pos_augmented each id gets a "/TAG" suffix. Hypernym expansion
// adds hypernym_weight per occurrence of a word with a lexicon entry.
// Throws a usage Error if POS features are requested but a token has no tag.
FeatureVector ExtractFeatures(std::span<const Token> tokens,
                              const FeatureConfig& config);
FeatureVector ExtractFeatures(const Sentence& sentence,
                              const FeatureConfig& config);

struct TrainingInstance {
  FeatureVector features;
  LabelId label = 0;
};

// kSentence trains on whole sentences; kPhrase trains on the annotated clause
// texts plus the unannotated sentences as `none`.
enum class TrainingUnit { kSentence, kPhrase };

// Multi-label sentences contribute one instance per label.
std::vector<TrainingInstance> BuildTrainingInstances(
    std::span<const AnnotatedDocument> docs, TaskKind task,
    const FeatureConfig& config, TrainingUnit unit);

}  // namespace biosumm

#endif  // BIOSUMM_CLASSIFY_H_
