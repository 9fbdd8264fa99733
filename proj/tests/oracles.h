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

// Independent reference implementations used to cross-check the library.
// They follow the defining formulas as literally as possible and make no
// attempt to be fast.

#ifndef BIOSUMM_TESTS_ORACLES_H_
#define BIOSUMM_TESTS_ORACLES_H_

#include <cmath>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

// Longest common subsequence by enumerating every subsequence of `a`.
inline size_t BruteLcs(const std::vector<std::string>& a,
                       const std::vector<std::string>& b) {
  size_t best = 0;
  const size_t n = a.size();
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    std::vector<std::string> sub;
    for (size_t i = 0; i < n; ++i) {
      if (mask & (1ul << i)) sub.push_back(a[i]);
    }
    if (sub.size() <= best) continue;
    size_t j = 0;
    for (size_t k = 0; k < b.size() && j < sub.size(); ++k) {
      if (b[k] == sub[j]) ++j;
    }
    if (j == sub.size()) best = sub.size();
  }
  return best;
}

struct NbExample {
  std::map<std::string, int> features;
  int label = 0;
};

// Posterior scores log(P(C) * prod_j P(F_j | C)^{w_j}) with add-one
// smoothing, computed as a product in linear space and logged at the end.
inline std::vector<double> NbScores(const std::vector<NbExample>& data,
                                    int num_labels,
                                    const std::map<std::string, int>& query) {
  std::set<std::string> vocab;
  for (const auto& ex : data) {
    for (const auto& f : ex.features) vocab.insert(f.first);
  }
  std::vector<double> scores;
  for (int c = 0; c < num_labels; ++c) {
    double instances = 0;
    double tokens = 0;
    for (const auto& ex : data) {
      if (ex.label != c) continue;
      instances += 1;
      for (const auto& f : ex.features) tokens += f.second;
    }
    double product = (instances + 1) / (data.size() + num_labels);
    for (const auto& [feature, weight] : query) {
      double count = 0;
      if (vocab.count(feature)) {
        for (const auto& ex : data) {
          if (ex.label != c) continue;
          auto it = ex.features.find(feature);
          if (it != ex.features.end()) count += it->second;
        }
      }
      const double p = (count + 1) / (tokens + vocab.size() + 1);
      product *= std::pow(p, weight);
    }
    scores.push_back(std::log(product));
  }
  return scores;
}

inline double Entropy(double pos, double neg) {
  double h = 0;
  for (double k : {pos, neg}) {
    if (k > 0) {
      const double p = k / (pos + neg);
      h -= p * std::log2(p);
    }
  }
  return h;
}

// Information gain of splitting labelled values at `threshold` (x < t left)
// divided by the entropy of the split itself.
inline double GainRatio(const std::vector<std::pair<double, bool>>& points,
                        double threshold) {
  double lp = 0, ln = 0, rp = 0, rn = 0;
  for (const auto& [x, positive] : points) {
    if (x < threshold) {
      (positive ? lp : ln) += 1;
    } else {
      (positive ? rp : rn) += 1;
    }
  }
  const double n = lp + ln + rp + rn;
  const double left = lp + ln;
  const double right = rp + rn;
  const double gain = Entropy(lp + rp, ln + rn) -
                      left / n * Entropy(lp, ln) - right / n * Entropy(rp, rn);
  const double split = Entropy(left, right);
  return split == 0 ? 0 : gain / split;
}

// rf_doc(w) / rf_world(w) with rf(w) = (count + 1) / (total + |V|) and V the
// union of both vocabularies.
inline double Cw(const std::string& w, const std::map<std::string, long>& doc,
                 const std::map<std::string, long>& world) {
  std::set<std::string> vocab;
  long doc_total = 0;
  long world_total = 0;
  for (const auto& [k, v] : doc) {
    vocab.insert(k);
    doc_total += v;
  }
  for (const auto& [k, v] : world) {
    vocab.insert(k);
    world_total += v;
  }
  auto count = [&](const std::map<std::string, long>& m) {
    auto it = m.find(w);
    return it == m.end() ? 0.0 : static_cast<double>(it->second);
  };
  const double v = static_cast<double>(vocab.size());
  const double rf_doc = (count(doc) + 1) / (doc_total + v);
  const double rf_world = (count(world) + 1) / (world_total + v);
  return rf_doc / rf_world;
}

}  // namespace oracle

#endif  // BIOSUMM_TESTS_ORACLES_H_
