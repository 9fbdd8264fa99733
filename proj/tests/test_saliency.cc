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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <limits>
#include <vector>

#include "biosumm/corpus.h"
#include "biosumm/error.h"
#include "biosumm/random.h"
#include "biosumm/saliency.h"
#include "oracles.h"

namespace biosumm {
namespace {

SaliencySample Sample(double bio, double nonbio, LabelId label) {
  return {{bio, nonbio}, label};
}

std::vector<SaliencySample> Clusters(uint64_t seed, size_t n) {
  Rng rng(seed);
  std::vector<SaliencySample> data;
  for (size_t i = 0; i < n; ++i) {
    const double jx = (rng.Unit() - 0.5) * 0.1;
    const double jy = (rng.Unit() - 0.5) * 0.06;
    if (i % 2 == 0) {
      data.push_back(Sample(0.8 + jx, 0.05 + std::abs(jy), kBio2));
    } else {
      data.push_back(Sample(0.02 + std::abs(jy) / 3, 0.6 + jx, kNone2));
    }
  }
  return data;
}

double SvmAccuracy(const LinearSvmModel& m,
                   const std::vector<SaliencySample>& data) {
  size_t hits = 0;
  for (const auto& s : data) hits += PredictSvm(m, s.x) == s.label;
  return static_cast<double>(hits) / static_cast<double>(data.size());
}

LabelId BrutePath(const DecisionTreeModel& model, const SaliencyFeatures& x) {
  int node = 0;
  while (!model.nodes[node].leaf) {
    const auto& n = model.nodes[node];
    node = x[n.feature] < n.threshold ? n.left : n.right;
  }
  return model.nodes[node].label;
}

TEST_CASE("saliency features") {
  SaliencyLexicons lex;
  lex.bio = {"cancer", "chemotherapy"};
  CHECK(ComputeSaliency(Tokenize("cancer chemotherapy hope the"), lex)
            .bio_fraction == 0.5);
  CHECK(ComputeSaliency(Tokenize("cancer chemotherapy hope the"), lex)
            .nonbio_fraction == 0.0);
  const auto none = ComputeSaliency(Tokenize("stock market"), lex);
  CHECK(none.bio_fraction == 0.0);
  CHECK(none.nonbio_fraction == 0.0);
  CHECK(ComputeSaliency(Tokenize("cancer Cancer"), lex).bio_fraction == 1.0);
  CHECK(ComputeSaliency(Tokenize(""), lex).bio_fraction == 0.0);

  lex.nonbio = {"cancer"};
  CHECK_THROWS_AS(ComputeSaliency(Tokenize("x"), lex), Error);
}

TEST_CASE("saliency lexicons") {
  const auto doc = ParseAnnotated(
      "She <work>ran the mill</work>. She <work>ran the shop</work>. "
      "She <work>ran the farm</work>. She <work>ran a lab</work>. "
      "She <work>ran a bank</work>. Prices rose fast. Prices rose fast. "
      "Prices fell fast. The dog barked. The dog slept.");
  const auto labeled = LabelDocument(doc);
  const auto lex = BuildSaliencyLexicons(labeled, 3, 0.8);
  CHECK(lex.bio.count("ran"));       // 5 of 5 in bio sentences
  CHECK(lex.nonbio.count("pric"));   // 3 of 3 in none sentences
  CHECK(lex.nonbio.count("fast"));
  CHECK_FALSE(lex.bio.count("dog"));  // only twice
  CHECK_FALSE(lex.nonbio.count("dog"));
  CHECK(lex.bio.count("she"));        // 5 of 5 in bio sentences
  // "the": 3 bio + 2 none = 0.6 < 0.8 in either direction.
  CHECK_FALSE(lex.bio.count("the"));
  CHECK_FALSE(lex.nonbio.count("the"));
  for (const auto& s : lex.bio) CHECK_FALSE(lex.nonbio.count(s));

  // An even split is never pure enough.
  const auto even = LabelDocument(ParseAnnotated(
      "A <bio>x y</bio>. A <bio>x y</bio>. A z w. A z w."));
  const auto lex2 = BuildSaliencyLexicons(even, 1, 0.51);
  CHECK_FALSE(lex2.bio.count("a"));
  CHECK_FALSE(lex2.nonbio.count("a"));
  CHECK_THROWS_AS(BuildSaliencyLexicons(even, 1, 0.5), Error);
}

TEST_CASE("svm: separable clusters") {
  const auto data = Clusters(3, 200);
  const auto model = TrainLinearSvm(data, {});
  CHECK(SvmAccuracy(model, data) == 1.0);
  CHECK(std::isfinite(model.weights[0]));
  CHECK(std::isfinite(model.bias));
  CHECK(PredictSvm(model, {0.8, 0.05}) == kBio2);
  CHECK(PredictSvm(model, {0.02, 0.6}) == kNone2);
}

TEST_CASE("svm: deterministic") {
  const auto data = Clusters(5, 100);
  const auto a = TrainLinearSvm(data, {1e-3, 50, 9});
  const auto b = TrainLinearSvm(data, {1e-3, 50, 9});
  CHECK(a.weights == b.weights);
  CHECK(a.bias == b.bias);
}

TEST_CASE("svm: swapping labels flips the decisions") {
  const auto data = Clusters(7, 100);
  auto swapped = data;
  for (auto& s : swapped) s.label = s.label == kBio2 ? kNone2 : kBio2;
  const auto m = TrainLinearSvm(data, {});
  const auto w = TrainLinearSvm(swapped, {});
  for (const auto& s : data) {
    CHECK(PredictSvm(m, s.x) != PredictSvm(w, s.x));
  }
  CHECK((m.weights[0] > 0) != (w.weights[0] > 0));
  CHECK((m.weights[1] > 0) != (w.weights[1] > 0));
}

TEST_CASE("svm: boundary point is none2") {
  LinearSvmModel m;
  m.weights = {1.0, -1.0};
  m.bias = 0.0;
  CHECK(PredictSvm(m, {0.3, 0.3}) == kNone2);
  CHECK(PredictSvm(m, {0.31, 0.3}) == kBio2);
}

TEST_CASE("svm: objective never increases with more epochs") {
  Rng rng(12);
  std::vector<SaliencySample> data;
  for (int i = 0; i < 150; ++i) {  // overlapping clouds
    const LabelId y = rng.Below(2) ? kBio2 : kNone2;
    const double c = y == kBio2 ? 0.55 : 0.45;
    data.push_back(Sample(c + (rng.Unit() - 0.5) * 0.4,
                          (1 - c) * rng.Unit() * 0.5, y));
  }
  double previous = std::numeric_limits<double>::infinity();
  for (int epochs : {1, 2, 5, 10, 20, 50, 100}) {
    const auto m = TrainLinearSvm(data, {1e-2, epochs, 4});
    const double obj = SvmObjective(m, data);
    CHECK(obj <= previous + 1e-15);
    previous = obj;
  }
}

TEST_CASE("svm: extra epochs after convergence keep predictions") {
  const auto data = Clusters(9, 120);
  const auto a = TrainLinearSvm(data, {1e-3, 200, 1});
  const auto b = TrainLinearSvm(data, {1e-3, 400, 1});
  Rng rng(1);
  for (int i = 0; i < 200; ++i) {
    const double u = rng.Unit();
    const SaliencyFeatures x = i % 2 ? SaliencyFeatures{0.8, 0.05 * u}
                                     : SaliencyFeatures{0.02 * u, 0.6};
    CHECK(PredictSvm(a, x) == PredictSvm(b, x));
  }
}

TEST_CASE("svm: errors") {
  std::vector<SaliencySample> one = {Sample(0.1, 0.1, kBio2)};
  CHECK_THROWS_AS(TrainLinearSvm(one, {}), Error);
  CHECK_THROWS_AS(TrainLinearSvm({}, {}), Error);
}

TEST_CASE("gain ratio matches the entropy oracle") {
  Rng rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<SaliencySample> data;
    std::vector<std::pair<double, bool>> points;
    for (uint64_t i = 0, n = 2 + rng.Below(15); i < n; ++i) {
      const double x = static_cast<double>(rng.Below(10)) / 10.0;
      const bool pos = rng.Below(2) == 0;
      data.push_back(Sample(x, 0.0, pos ? kBio2 : kNone2));
      points.push_back({x, pos});
    }
    const double t = static_cast<double>(rng.Below(11)) / 10.0 - 0.05;
    CHECK(GainRatio(data, 0, t) ==
          doctest::Approx(oracle::GainRatio(points, t)).epsilon(1e-12));
  }
  std::vector<SaliencySample> balanced = {
      Sample(0.1, 0, kNone2), Sample(0.2, 0, kNone2), Sample(0.7, 0, kBio2),
      Sample(0.9, 0, kBio2)};
  CHECK(GainRatio(balanced, 0, 0.45) == doctest::Approx(1.0));
}

TEST_CASE("tree: pure data is a single leaf") {
  std::vector<SaliencySample> data = {Sample(0.1, 0.2, kBio2),
                                      Sample(0.5, 0.1, kBio2)};
  const auto t = TrainDecisionTree(data, {});
  REQUIRE(t.nodes.size() == 1);
  CHECK(t.nodes[0].leaf);
  CHECK(t.Depth() == 0);
  CHECK(PredictTree(t, {0.99, 0.0}) == kBio2);
  CHECK_THROWS_AS(TrainDecisionTree({}, {}), Error);
}

TEST_CASE("tree: single threshold split") {
  Rng rng(4);
  std::vector<SaliencySample> data;
  double max_neg = 0, min_pos = 1;
  for (int i = 0; i < 40; ++i) {
    const double x = rng.Unit();
    const double y = rng.Unit() * 0.3;
    const LabelId label = x > 0.5 ? kBio2 : kNone2;
    if (label == kBio2) min_pos = std::min(min_pos, x);
    if (label == kNone2) max_neg = std::max(max_neg, x);
    data.push_back(Sample(x, y, label));
  }
  const auto t = TrainDecisionTree(data, {});
  CHECK(t.Depth() == 1);
  REQUIRE(!t.nodes[0].leaf);
  CHECK(t.nodes[0].feature == 0);
  CHECK(t.nodes[0].threshold > max_neg);
  CHECK(t.nodes[0].threshold < min_pos);
  CHECK(t.nodes[0].threshold == doctest::Approx((max_neg + min_pos) / 2));

  // The chosen threshold is the best candidate under the oracle.
  std::vector<std::pair<double, bool>> points;
  for (const auto& s : data) points.push_back({s.x.bio_fraction, s.label == kBio2});
  std::vector<double> xs;
  for (const auto& p : points) xs.push_back(p.first);
  std::sort(xs.begin(), xs.end());
  double best = 0;
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    if (xs[i] != xs[i + 1]) {
      best = std::max(best, oracle::GainRatio(points, (xs[i] + xs[i + 1]) / 2));
    }
  }
  CHECK(oracle::GainRatio(points, t.nodes[0].threshold) ==
        doctest::Approx(best));
}

TEST_CASE("tree: equality goes right") {
  DecisionTreeModel t;
  t.nodes.resize(3);
  t.nodes[0] = {false, kNone2, 0, 0.5, 1, 2};
  t.nodes[1] = {true, kNone2, 0, 0, -1, -1};
  t.nodes[2] = {true, kBio2, 0, 0, -1, -1};
  CHECK(PredictTree(t, {0.5, 0}) == kBio2);
  CHECK(PredictTree(t, {0.4999, 0}) == kNone2);
}

TEST_CASE("tree: leaf ties go to none2") {
  std::vector<SaliencySample> data = {Sample(0.3, 0.3, kBio2),
                                      Sample(0.3, 0.3, kNone2)};
  const auto t = TrainDecisionTree(data, {});
  CHECK(t.nodes.size() == 1);
  CHECK(t.nodes[0].label == kNone2);
}

TEST_CASE("tree: fits consistent data exactly and matches path walking") {
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<SaliencySample> data;
    std::map<std::pair<int, int>, LabelId> seen;
    for (uint64_t i = 0, n = 1 + rng.Below(40); i < n; ++i) {
      const int a = static_cast<int>(rng.Below(8));
      const int b = static_cast<int>(rng.Below(8));
      auto [it, fresh] = seen.try_emplace({a, b}, rng.Below(2) ? kBio2 : kNone2);
      data.push_back(Sample(a / 8.0, b / 16.0, it->second));
    }
    const auto t = TrainDecisionTree(data, {});
    for (const auto& s : data) CHECK(PredictTree(t, s.x) == s.label);
    for (int i = 0; i < 50; ++i) {
      const SaliencyFeatures x{rng.Unit(), rng.Unit() / 2};
      CHECK(PredictTree(t, x) == BrutePath(t, x));
    }
  }

  // XOR needs a split with zero immediate gain.
  std::vector<SaliencySample> xr = {
      Sample(0.1, 0.1, kNone2), Sample(0.9, 0.9, kNone2),
      Sample(0.1, 0.9, kBio2), Sample(0.9, 0.1, kBio2)};
  const auto t = TrainDecisionTree(xr, {});
  for (const auto& s : xr) CHECK(PredictTree(t, s.x) == s.label);
}

TEST_CASE("tree: depth and leaf limits") {
  Rng rng(2);
  std::vector<SaliencySample> data;
  for (int i = 0; i < 100; ++i) {
    data.push_back(Sample(rng.Unit(), rng.Unit() / 2,
                          rng.Below(2) ? kBio2 : kNone2));
  }
  for (int depth : {0, 1, 2, 3}) {
    CHECK(TrainDecisionTree(data, {depth, 1}).Depth() <= depth);
  }
  // Every node, and so every split side, holds at least min_leaf points.
  const auto t = TrainDecisionTree(data, {100, 10});
  std::function<size_t(int, const std::vector<SaliencySample>&)> check =
      [&](int id, const std::vector<SaliencySample>& pts) -> size_t {
    const auto& n = t.nodes[id];
    CHECK(pts.size() >= 10);
    if (n.leaf) return 1;
    std::vector<SaliencySample> l, r;
    for (const auto& p : pts) (p.x[n.feature] < n.threshold ? l : r).push_back(p);
    return check(n.left, l) + check(n.right, r);
  };
  CHECK(check(0, data) >= 1);
}

}  // namespace
}  // namespace biosumm
