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

// A trained sentence classifier together with everything needed to apply it,
// and its versioned text file format:
//
//   BIOSUMM-MODEL 1 task=two features=unigram pos=0 hypernym_weight=0.1 ...
//   PRIOR <label> <p>
//   LIK <label> <feature> <p>        (feature <UNK> is the unknown slot)
//   HYP <word> <hypernym>            (optional hypernym lexicon)
//   CUE <word>                       (optional cue words)
//   SALIENCY, then BIOLEX <stem> / NONBIOLEX <stem> (2-class lexicons)
//   SVM <w0> <w1> <bias> <reg> <epochs> <seed>
//   TREE <id> <leaf> <label> <feature> <threshold> <left> <right>
//   END
//
// Reals are written with 17 significant digits, so a save/load round trip is
// lossless.

#ifndef BIOSUMM_MODEL_IO_H_
#define BIOSUMM_MODEL_IO_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "biosumm/classify.h"
#include "biosumm/naive_bayes.h"
#include "biosumm/saliency.h"

namespace biosumm {

enum class ClassifierKind { kNaiveBayes, kSvm, kTree };

std::string_view ClassifierKindName(ClassifierKind kind);  // nb|svm|tree
std::optional<ClassifierKind> ParseClassifierKind(std::string_view name);

struct ClassifierBundle {
  TaskKind task = TaskKind::kTenClass;
  FeatureConfig features;
  TrainingUnit unit = TrainingUnit::kSentence;
  ClassifierKind active = ClassifierKind::kNaiveBayes;
  NaiveBayesModel nb;
  // Present for 2-class bundles only.
  std::optional<SaliencyLexicons> lexicons;
  std::optional<LinearSvmModel> svm;
  std::optional<DecisionTreeModel> tree;

  LabelId Classify(const Sentence& sentence) const;
  bool IsBiographical(const Sentence& sentence) const {
    return Classify(sentence) != NoneLabel(task);
  }
};

std::string SerializeModel(const ClassifierBundle& bundle);

// Throws an input Error on any malformed, missing or inconsistent content.
ClassifierBundle ParseModel(std::string_view content);

void SaveModel(const ClassifierBundle& bundle,
               const std::filesystem::path& path);
ClassifierBundle LoadModel(const std::filesystem::path& path);

}  // namespace biosumm

#endif  // BIOSUMM_MODEL_IO_H_
