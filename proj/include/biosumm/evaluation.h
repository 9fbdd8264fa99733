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

#ifndef BIOSUMM_EVALUATION_H_
#define BIOSUMM_EVALUATION_H_

#include <cstdint>
#include <span>
#include <vector>

#include "biosumm/classify.h"

namespace biosumm {

struct PrecisionRecall {
  double precision = 0.0;
  double recall = 0.0;
};

struct ClassifierEvaluation {
  double accuracy = 0.0;
  size_t hits = 0;
  size_t total = 0;
  std::vector<PrecisionRecall> per_label;  // indexed by LabelId
};

// Gold sets are ordered; the first entry is the primary label. Strict mode
// counts a hit iff the prediction equals the primary label, relaxed mode iff
// it is any gold label. For per-label recall each instance's reference label
// is the matched gold label on a hit and the primary label otherwise; 0/0
// yields 0.
ClassifierEvaluation EvaluateClassifier(
    std::span<const LabelId> predicted,
    std::span<const std::vector<LabelId>> gold, bool relaxed,
    size_t num_labels);

// n labels drawn uniformly and independently from the task's label space.
std::vector<LabelId> RandomBaseline(size_t n, TaskKind task, uint64_t seed);

}  // namespace biosumm

#endif  // BIOSUMM_EVALUATION_H_
