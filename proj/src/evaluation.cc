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

#include "biosumm/evaluation.h"

#include <algorithm>

#include "biosumm/error.h"
#include "biosumm/random.h"

namespace biosumm {

ClassifierEvaluation EvaluateClassifier(
    std::span<const LabelId> predicted,
    std::span<const std::vector<LabelId>> gold, bool relaxed,
    size_t num_labels) {
  if (predicted.size() != gold.size()) {
    throw UsageError("prediction and gold sequences differ in length");
  }
  std::vector<double> true_pos(num_labels, 0.0);
  std::vector<double> pred_count(num_labels, 0.0);
  std::vector<double> ref_count(num_labels, 0.0);
  auto check = [num_labels](LabelId l) {
    if (l < 0 || static_cast<size_t>(l) >= num_labels) {
      throw UsageError("label id out of range");
    }
    return static_cast<size_t>(l);
  };

  ClassifierEvaluation eval;
  eval.total = predicted.size();
  for (size_t i = 0; i < predicted.size(); ++i) {
    if (gold[i].empty()) throw UsageError("empty gold label set");
    const LabelId p = predicted[i];
    const bool hit =
        relaxed ? std::find(gold[i].begin(), gold[i].end(), p) != gold[i].end()
                : p == gold[i].front();
    const LabelId reference = hit ? p : gold[i].front();
    pred_count[check(p)] += 1;
    ref_count[check(reference)] += 1;
    if (hit) {
      ++eval.hits;
      true_pos[check(p)] += 1;
    }
  }
  eval.accuracy = eval.total == 0 ? 0.0
                                  : static_cast<double>(eval.hits) /
                                        static_cast<double>(eval.total);
  eval.per_label.resize(num_labels);
  for (size_t k = 0; k < num_labels; ++k) {
    if (pred_count[k] > 0) eval.per_label[k].precision = true_pos[k] / pred_count[k];
    if (ref_count[k] > 0) eval.per_label[k].recall = true_pos[k] / ref_count[k];
  }
  return eval;
}

std::vector<LabelId> RandomBaseline(size_t n, TaskKind task, uint64_t seed) {
  Rng rng(seed);
  const uint64_t k = NumLabels(task);
  std::vector<LabelId> labels(n);
  for (LabelId& l : labels) l = static_cast<LabelId>(rng.Below(k));
  return labels;
}

}  // namespace biosumm
