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

// Two-dimensional saliency features for the 2-class task, and the linear SVM
// and gain-ratio decision tree trained on them.

#ifndef BIOSUMM_SALIENCY_H_
#define BIOSUMM_SALIENCY_H_

#include <array>
#include <cstdint>
#include <limits>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "biosumm/classify.h"

namespace biosumm {

struct SaliencyFeatures {
  double bio_fraction = 0.0;     // share of tokens found in the bio lexicon
  double nonbio_fraction = 0.0;  // share found in the non-bio lexicon

  double operator[](size_t feature) const {
    return feature == 0 ? bio_fraction : nonbio_fraction;
  }
};

// Stems that clearly indicate biographical / non-biographical sentences.
struct SaliencyLexicons {
  std::set<std::string> bio;
  std::set<std::string> nonbio;
};

// Token-occurrence fractions, matched on stems. Throws a usage Error when the
// lexicons overlap.
SaliencyFeatures ComputeSaliency(std::span<const Token> tokens,
                                 const SaliencyLexicons& lexicons);
SaliencyFeatures ComputeSaliency(const Sentence& sentence,
                                 const SaliencyLexicons& lexicons);

// A stem with at least `min_count` occurrences enters `bio` when at least
// `purity` of them fall in biographical sentences and `nonbio` when at least
// `purity` fall in `none` sentences. purity must lie in (0.5, 1].
SaliencyLexicons BuildSaliencyLexicons(std::span<const LabeledSentence> train,
                                       int64_t min_count, double purity);

// A saliency vector with a 2-class label (kBio2 / kNone2).
struct SaliencySample {
  SaliencyFeatures x;
  LabelId label = kNone2;
};

struct SvmParams {
  double reg = 1e-3;  // L2 regularization constant
  int epochs = 200;
  uint64_t seed = 1;
};

struct LinearSvmModel {
  std::array<double, 2> weights{};
  double bias = 0.0;
  SvmParams params;

  double Margin(const SaliencyFeatures& x) const {
    return weights[0] * x.bio_fraction + weights[1] * x.nonbio_fraction + bias;
  }
};

// reg/2 * |w|^2 + mean hinge loss; the bias is not regularized.
double SvmObjective(const LinearSvmModel& model,
                    std::span<const SaliencySample> data);

// Stochastic sub-gradient descent on the regularized hinge loss, one seeded
// pass over a shuffled copy of the data per epoch. At every epoch end both the
// current and the running-average iterate are scored and the best model seen
// so far is kept, so the returned objective never increases with `epochs`.
// Throws a usage Error unless both labels occur.
LinearSvmModel TrainLinearSvm(std::span<const SaliencySample> data,
                              const SvmParams& params);

// kBio2 when the margin is strictly positive; the boundary goes to kNone2.
LabelId PredictSvm(const LinearSvmModel& model, const SaliencyFeatures& x);

struct TreeParams {
  int max_depth = std::numeric_limits<int>::max();
  size_t min_leaf = 1;
};

struct DecisionTreeModel {
  struct Node {
    bool leaf = true;
    LabelId label = kNone2;  // leaves only
    int feature = 0;         // splits only: 0 bio_fraction, 1 nonbio_fraction
    double threshold = 0.0;  // x < threshold goes left, x >= threshold right
    int left = -1;
    int right = -1;
  };
  std::vector<Node> nodes;  // nodes[0] is the root

  int Depth() const;
};

// Information gain of splitting `data` at `threshold` on `feature`, divided
// by the entropy of the split proportions. Zero when one side is empty.
double GainRatio(std::span<const SaliencySample> data, int feature,
                 double threshold);

// Binary splits on the two features with thresholds at midpoints between
// consecutive distinct values, chosen by maximum gain ratio (ties: feature 0
// first, then the lower threshold). Splitting stops on a pure node, at
// max_depth, or when no split leaves min_leaf samples on both sides. Leaves
// take the majority label, ties going to kNone2.
DecisionTreeModel TrainDecisionTree(std::span<const SaliencySample> data,
                                    const TreeParams& params);

LabelId PredictTree(const DecisionTreeModel& model, const SaliencyFeatures& x);

}  // namespace biosumm

#endif  // BIOSUMM_SALIENCY_H_
