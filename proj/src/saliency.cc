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

#include "biosumm/saliency.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "biosumm/error.h"
#include "biosumm/random.h"

namespace biosumm {

SaliencyFeatures ComputeSaliency(std::span<const Token> tokens,
                                 const SaliencyLexicons& lexicons) {
  for (const std::string& stem : lexicons.bio) {
    if (lexicons.nonbio.contains(stem)) {
      throw UsageError("saliency lexicons overlap on '" + stem + "'");
    }
  }
  SaliencyFeatures f;
  if (tokens.empty()) return f;
  size_t bio = 0;
  size_t nonbio = 0;
  for (const Token& t : tokens) {
    if (lexicons.bio.contains(t.stem)) ++bio;
    if (lexicons.nonbio.contains(t.stem)) ++nonbio;
  }
  const auto n = static_cast<double>(tokens.size());
  f.bio_fraction = static_cast<double>(bio) / n;
  f.nonbio_fraction = static_cast<double>(nonbio) / n;
  return f;
}

SaliencyFeatures ComputeSaliency(const Sentence& sentence,
                                 const SaliencyLexicons& lexicons) {
  return ComputeSaliency(sentence.tokens, lexicons);
}

SaliencyLexicons BuildSaliencyLexicons(std::span<const LabeledSentence> train,
                                       int64_t min_count, double purity) {
  if (!(purity > 0.5 && purity <= 1.0)) {
    throw UsageError("purity must lie in (0.5, 1]");
  }
  struct Counts {
    int64_t bio = 0;
    int64_t none = 0;
  };
  std::map<std::string, Counts> counts;
  for (const LabeledSentence& ls : train) {
    const bool bio = ls.is_biographical();
    for (const Token& t : ls.sentence.tokens) {
      Counts& c = counts[t.stem];
      (bio ? c.bio : c.none) += 1;
    }
  }
  SaliencyLexicons lexicons;
  for (const auto& [stem, c] : counts) {
    const int64_t total = c.bio + c.none;
    if (total < min_count || total == 0) continue;
    const double bio_share = static_cast<double>(c.bio) / static_cast<double>(total);
    const double none_share = static_cast<double>(c.none) / static_cast<double>(total);
    if (bio_share >= purity) {
      lexicons.bio.insert(stem);
    } else if (none_share >= purity) {
      lexicons.nonbio.insert(stem);
    }
  }
  return lexicons;
}

double SvmObjective(const LinearSvmModel& model,
                    std::span<const SaliencySample> data) {
  double hinge = 0.0;
  for (const SaliencySample& s : data) {
    const double y = s.label == kBio2 ? 1.0 : -1.0;
    hinge += std::max(0.0, 1.0 - y * model.Margin(s.x));
  }
  const double reg = 0.5 * model.params.reg *
                     (model.weights[0] * model.weights[0] +
                      model.weights[1] * model.weights[1]);
  return reg + (data.empty() ? 0.0 : hinge / static_cast<double>(data.size()));
}

LinearSvmModel TrainLinearSvm(std::span<const SaliencySample> data,
                              const SvmParams& params) {
  const bool has_bio = std::any_of(data.begin(), data.end(), [](const auto& s) {
    return s.label == kBio2;
  });
  const bool has_none = std::any_of(data.begin(), data.end(), [](const auto& s) {
    return s.label == kNone2;
  });
  if (!has_bio || !has_none) {
    throw UsageError("SVM training needs both bio2 and none2 examples");
  }
  if (!(params.reg > 0.0) || params.epochs < 1) {
    throw UsageError("SVM needs reg > 0 and at least one epoch");
  }

  LinearSvmModel current;
  current.params = params;
  LinearSvmModel average = current;
  LinearSvmModel best = current;
  double best_objective = SvmObjective(best, data);

  std::vector<size_t> order(data.size());
  std::iota(order.begin(), order.end(), size_t{0});
  Rng rng(params.seed);
  uint64_t step = 0;
  for (int epoch = 0; epoch < params.epochs; ++epoch) {
    rng.Shuffle(order);
    for (size_t idx : order) {
      ++step;
      const SaliencySample& s = data[idx];
      const double y = s.label == kBio2 ? 1.0 : -1.0;
      const double eta = 1.0 / (1.0 + params.reg * static_cast<double>(step));
      const bool violated = y * current.Margin(s.x) < 1.0;
      for (double& w : current.weights) w *= 1.0 - eta * params.reg;
      if (violated) {
        current.weights[0] += eta * y * s.x.bio_fraction;
        current.weights[1] += eta * y * s.x.nonbio_fraction;
        current.bias += eta * y;
      }
      const double mix = 1.0 / static_cast<double>(step);
      for (size_t k = 0; k < 2; ++k) {
        average.weights[k] += mix * (current.weights[k] - average.weights[k]);
      }
      average.bias += mix * (current.bias - average.bias);
    }
    for (const LinearSvmModel* candidate : {&current, &average}) {
      const double objective = SvmObjective(*candidate, data);
      if (objective < best_objective) {
        best_objective = objective;
        best = *candidate;
      }
    }
  }
  return best;
}

LabelId PredictSvm(const LinearSvmModel& model, const SaliencyFeatures& x) {
  return model.Margin(x) > 0.0 ? kBio2 : kNone2;
}

namespace {

double Entropy(double a, double b) {
  const double n = a + b;
  double h = 0.0;
  for (double c : {a, b}) {
    if (c > 0.0) h -= (c / n) * std::log2(c / n);
  }
  return h;
}

struct LabelCounts {
  double bio = 0;
  double none = 0;
  double total() const { return bio + none; }
  void Add(LabelId label) { (label == kBio2 ? bio : none) += 1; }
};

double GainRatioFromCounts(const LabelCounts& all, const LabelCounts& left) {
  LabelCounts right{all.bio - left.bio, all.none - left.none};
  if (left.total() == 0 || right.total() == 0) return 0.0;
  const double n = all.total();
  const double children = (left.total() / n) * Entropy(left.bio, left.none) +
                          (right.total() / n) * Entropy(right.bio, right.none);
  const double gain = std::max(0.0, Entropy(all.bio, all.none) - children);
  const double split_info = Entropy(left.total(), right.total());
  return split_info > 0.0 ? gain / split_info : 0.0;
}

class TreeBuilder {
 public:
  TreeBuilder(std::span<const SaliencySample> data, const TreeParams& params)
      : data_(data), params_(params) {}

  DecisionTreeModel Build() {
    std::vector<size_t> all(data_.size());
    std::iota(all.begin(), all.end(), size_t{0});
    Grow(all, 0);
    return std::move(model_);
  }

 private:
  struct Split {
    int feature = -1;
    double threshold = 0.0;
    double gain_ratio = -1.0;
  };

  int Grow(const std::vector<size_t>& rows, int depth) {
    const int id = static_cast<int>(model_.nodes.size());
    model_.nodes.emplace_back();
    LabelCounts counts;
    for (size_t r : rows) counts.Add(data_[r].label);
    model_.nodes[id].label = counts.bio > counts.none ? kBio2 : kNone2;

    const bool pure = counts.bio == 0 || counts.none == 0;
    if (pure || depth >= params_.max_depth) return id;
    const Split split = BestSplit(rows, counts);
    if (split.feature < 0) return id;

    std::vector<size_t> left;
    std::vector<size_t> right;
    for (size_t r : rows) {
      (data_[r].x[split.feature] < split.threshold ? left : right).push_back(r);
    }
    model_.nodes[id].leaf = false;
    model_.nodes[id].feature = split.feature;
    model_.nodes[id].threshold = split.threshold;
    const int l = Grow(left, depth + 1);
    const int rr = Grow(right, depth + 1);
    model_.nodes[id].left = l;
    model_.nodes[id].right = rr;
    return id;
  }

  // A zero-gain split is still accepted when nothing better exists, so
  // XOR-like configurations keep splitting instead of stalling.
  Split BestSplit(const std::vector<size_t>& rows, const LabelCounts& all) {
    Split best;
    const size_t min_leaf = std::max<size_t>(params_.min_leaf, 1);
    for (int feature = 0; feature < 2; ++feature) {
      std::vector<size_t> sorted = rows;
      std::stable_sort(sorted.begin(), sorted.end(), [&](size_t a, size_t b) {
        return data_[a].x[feature] < data_[b].x[feature];
      });
      LabelCounts left;
      for (size_t i = 0; i + 1 < sorted.size(); ++i) {
        left.Add(data_[sorted[i]].label);
        const double a = data_[sorted[i]].x[feature];
        const double b = data_[sorted[i + 1]].x[feature];
        if (!(a < b)) continue;
        const size_t n_left = i + 1;
        if (n_left < min_leaf || sorted.size() - n_left < min_leaf) continue;
        double threshold = a + (b - a) / 2.0;
        if (!(threshold > a)) threshold = b;
        const double gr = GainRatioFromCounts(all, left);
        if (gr > best.gain_ratio) best = {feature, threshold, gr};
      }
    }
    return best;
  }

  std::span<const SaliencySample> data_;
  TreeParams params_;
  DecisionTreeModel model_;
};

}  // namespace

double GainRatio(std::span<const SaliencySample> data, int feature,
                 double threshold) {
  LabelCounts all;
  LabelCounts left;
  for (const SaliencySample& s : data) {
    all.Add(s.label);
    if (s.x[feature] < threshold) left.Add(s.label);
  }
  return GainRatioFromCounts(all, left);
}

DecisionTreeModel TrainDecisionTree(std::span<const SaliencySample> data,
                                    const TreeParams& params) {
  if (data.empty()) throw UsageError("cannot grow a tree from empty data");
  return TreeBuilder(data, params).Build();
}

int DecisionTreeModel::Depth() const {
  if (nodes.empty()) return 0;
  int deepest = 0;
  std::vector<std::pair<int, int>> stack = {{0, 0}};
  while (!stack.empty()) {
    auto [id, depth] = stack.back();
    stack.pop_back();
    deepest = std::max(deepest, depth);
    if (!nodes[id].leaf) {
      stack.emplace_back(nodes[id].left, depth + 1);
      stack.emplace_back(nodes[id].right, depth + 1);
    }
  }
  return deepest;
}

LabelId PredictTree(const DecisionTreeModel& model, const SaliencyFeatures& x) {
  if (model.nodes.empty()) throw UsageError("empty decision tree");
  int id = 0;
  while (!model.nodes[id].leaf) {
    const auto& node = model.nodes[id];
    id = x[node.feature] < node.threshold ? node.left : node.right;
  }
  return model.nodes[id].label;
}

}  // namespace biosumm
