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

#include "biosumm/naive_bayes.h"

#include <cmath>

#include "biosumm/error.h"

namespace biosumm {

double NaiveBayesModel::Likelihood(LabelId label,
                                   const std::string& feature) const {
  auto it = likelihoods.find(feature);
  const auto k = static_cast<size_t>(label);
  return it == likelihoods.end() ? unknown[k] : it->second[k];
}

NaiveBayesModel TrainNaiveBayes(std::span<const TrainingInstance> data,
                                TaskKind task) {
  if (data.empty()) throw UsageError("cannot train on empty data");
  const size_t n_labels = NumLabels(task);

  std::vector<double> label_counts(n_labels, 0.0);
  std::vector<double> label_mass(n_labels, 0.0);
  std::map<std::string, std::vector<double>> feature_counts;
  for (const TrainingInstance& inst : data) {
    if (inst.label < 0 || static_cast<size_t>(inst.label) >= n_labels) {
      throw UsageError("training label " + std::to_string(inst.label) +
                       " is outside the " + std::string(TaskName(task)) +
                       "-class label space");
    }
    const auto k = static_cast<size_t>(inst.label);
    label_counts[k] += 1.0;
    for (const auto& [feature, weight] : inst.features) {
      auto [it, inserted] = feature_counts.try_emplace(feature);
      if (inserted) it->second.assign(n_labels, 0.0);
      it->second[k] += weight;
      label_mass[k] += weight;
    }
  }

  NaiveBayesModel model;
  model.task = task;
  const auto n = static_cast<double>(data.size());
  const auto vocab = static_cast<double>(feature_counts.size());
  model.priors.resize(n_labels);
  model.unknown.resize(n_labels);
  for (size_t k = 0; k < n_labels; ++k) {
    model.priors[k] = (label_counts[k] + 1.0) / (n + static_cast<double>(n_labels));
    model.unknown[k] = 1.0 / (label_mass[k] + vocab + 1.0);
  }
  for (auto& [feature, counts] : feature_counts) {
    std::vector<double> probs(n_labels);
    for (size_t k = 0; k < n_labels; ++k) {
      probs[k] = (counts[k] + 1.0) / (label_mass[k] + vocab + 1.0);
    }
    model.likelihoods.emplace(feature, std::move(probs));
  }
  return model;
}

NbDecision ClassifyNaiveBayes(const NaiveBayesModel& model,
                              const FeatureVector& features) {
  const size_t n_labels = model.priors.size();
  NbDecision decision;
  decision.scores.resize(n_labels);
  for (size_t k = 0; k < n_labels; ++k) {
    decision.scores[k] = std::log(model.priors[k]);
  }
  for (const auto& [feature, weight] : features) {
    auto it = model.likelihoods.find(feature);
    for (size_t k = 0; k < n_labels; ++k) {
      const double p =
          it == model.likelihoods.end() ? model.unknown[k] : it->second[k];
      decision.scores[k] += weight * std::log(p);
    }
  }
  decision.label = 0;
  for (size_t k = 1; k < n_labels; ++k) {
    if (decision.scores[k] > decision.scores[decision.label]) {
      decision.label = static_cast<LabelId>(k);
    }
  }
  return decision;
}

}  // namespace biosumm
