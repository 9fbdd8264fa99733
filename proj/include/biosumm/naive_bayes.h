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

// Multinomial Naive Bayes with add-one smoothing.
//
//   prior(C)         = (count(C) + 1) / (N + |labels|)
//   likelihood(C, f) = (count(f in C) + 1) / (tokens(C) + |vocab| + 1)
//
// The extra slot in the likelihood denominator is a per-label UNK entry that
// absorbs features never seen in training, so every table sums to one.

#ifndef BIOSUMM_NAIVE_BAYES_H_
#define BIOSUMM_NAIVE_BAYES_H_

#include <map>
#include <span>
#include <string>
#include <vector>

#include "biosumm/classify.h"

namespace biosumm {

struct NaiveBayesModel {
  TaskKind task = TaskKind::kTenClass;
  std::vector<double> priors;  // indexed by LabelId
  // feature id -> per-label likelihood. The keys are the vocabulary.
  std::map<std::string, std::vector<double>> likelihoods;
  std::vector<double> unknown;  // per-label UNK likelihood

  double Likelihood(LabelId label, const std::string& feature) const;
};

// Throws a usage Error on empty data or a label outside the task's space.
NaiveBayesModel TrainNaiveBayes(std::span<const TrainingInstance> data,
                                TaskKind task);

struct NbDecision {
  LabelId label = 0;
  std::vector<double> scores;  // log prior + sum of weight * log likelihood
};

// Argmax over labels; ties go to the lowest LabelId.
NbDecision ClassifyNaiveBayes(const NaiveBayesModel& model,
                              const FeatureVector& features);

}  // namespace biosumm

#endif  // BIOSUMM_NAIVE_BAYES_H_
