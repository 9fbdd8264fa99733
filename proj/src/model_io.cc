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

#include "biosumm/model_io.h"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <vector>

#include "biosumm/error.h"
#include "biosumm/io.h"

namespace biosumm {
namespace {

constexpr std::string_view kMagic = "BIOSUMM-MODEL";
constexpr int kVersion = 1;
constexpr std::string_view kUnknownFeature = "<UNK>";

std::string Real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string_view> Fields(std::string_view line) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    const size_t b = i;
    while (i < line.size() && line[i] != ' ') ++i;
    if (i > b) out.push_back(line.substr(b, i - b));
  }
  return out;
}

class LineParser {
 public:
  explicit LineParser(size_t line_no) : line_no_(line_no) {}

  [[noreturn]] void Fail(const std::string& what) const {
    throw InputError("model line " + std::to_string(line_no_) + ": " + what);
  }

  double Real(std::string_view s) const {
    double v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || !std::isfinite(v)) {
      Fail("bad number '" + std::string(s) + "'");
    }
    return v;
  }

  int64_t Int(std::string_view s) const {
    int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size()) {
      Fail("bad integer '" + std::string(s) + "'");
    }
    return v;
  }

  LabelId Label(TaskKind task, std::string_view s) const {
    auto label = ParseLabel(task, s);
    if (!label) Fail("unknown label '" + std::string(s) + "'");
    return *label;
  }

  double Probability(std::string_view s) const {
    const double p = Real(s);
    if (!(p > 0.0 && p <= 1.0)) Fail("probability out of range");
    return p;
  }

 private:
  size_t line_no_;
};

void CheckNormalized(const ClassifierBundle& b) {
  constexpr double kTolerance = 1e-9;
  const size_t n = NumLabels(b.task);
  double prior_sum = 0;
  for (double p : b.nb.priors) prior_sum += p;
  if (std::abs(prior_sum - 1.0) > kTolerance) {
    throw InputError("model priors do not sum to 1");
  }
  for (size_t k = 0; k < n; ++k) {
    double sum = b.nb.unknown[k];
    for (const auto& [feature, probs] : b.nb.likelihoods) sum += probs[k];
    if (std::abs(sum - 1.0) > kTolerance) {
      throw InputError("likelihoods for label '" +
                       std::string(LabelName(b.task, static_cast<LabelId>(k))) +
                       "' do not sum to 1");
    }
  }
}

}  // namespace

std::string_view ClassifierKindName(ClassifierKind kind) {
  switch (kind) {
    case ClassifierKind::kNaiveBayes:
      return "nb";
    case ClassifierKind::kSvm:
      return "svm";
    case ClassifierKind::kTree:
      return "tree";
  }
  return "nb";
}

std::optional<ClassifierKind> ParseClassifierKind(std::string_view name) {
  if (name == "nb") return ClassifierKind::kNaiveBayes;
  if (name == "svm") return ClassifierKind::kSvm;
  if (name == "tree") return ClassifierKind::kTree;
  return std::nullopt;
}

LabelId ClassifierBundle::Classify(const Sentence& sentence) const {
  switch (active) {
    case ClassifierKind::kNaiveBayes:
      return ClassifyNaiveBayes(nb, ExtractFeatures(sentence, features)).label;
    case ClassifierKind::kSvm:
      if (!svm || !lexicons) throw UsageError("model has no SVM section");
      return PredictSvm(*svm, ComputeSaliency(sentence, *lexicons));
    case ClassifierKind::kTree:
      if (!tree || !lexicons) throw UsageError("model has no tree section");
      return PredictTree(*tree, ComputeSaliency(sentence, *lexicons));
  }
  throw InvariantError("unhandled classifier kind");
}

std::string SerializeModel(const ClassifierBundle& b) {
  std::ostringstream out;
  out << kMagic << ' ' << kVersion << " task=" << TaskName(b.task)
      << " features=" << FeatureModeName(b.features.mode)
      << " pos=" << (b.features.pos_augmented ? 1 : 0)
      << " hypernyms=" << (b.features.hypernyms ? 1 : 0)
      << " hypernym_weight=" << Real(b.features.hypernym_weight)
      << " unit=" << (b.unit == TrainingUnit::kPhrase ? "phrase" : "sentence")
      << " classifier=" << ClassifierKindName(b.active) << '\n';
  const size_t n = NumLabels(b.task);
  for (size_t k = 0; k < n; ++k) {
    out << "PRIOR " << LabelName(b.task, static_cast<LabelId>(k)) << ' '
        << Real(b.nb.priors[k]) << '\n';
  }
  for (size_t k = 0; k < n; ++k) {
    out << "LIK " << LabelName(b.task, static_cast<LabelId>(k)) << ' '
        << kUnknownFeature << ' ' << Real(b.nb.unknown[k]) << '\n';
  }
  for (const auto& [feature, probs] : b.nb.likelihoods) {
    for (size_t k = 0; k < n; ++k) {
      out << "LIK " << LabelName(b.task, static_cast<LabelId>(k)) << ' '
          << feature << ' ' << Real(probs[k]) << '\n';
    }
  }
  if (b.features.hypernyms) {
    for (const auto& [word, hypernyms] : *b.features.hypernyms) {
      for (const std::string& h : hypernyms) {
        out << "HYP " << word << ' ' << h << '\n';
      }
    }
  }
  for (const std::string& w : b.features.cue_words) out << "CUE " << w << '\n';
  if (b.lexicons) {
    out << "SALIENCY\n";
    for (const std::string& s : b.lexicons->bio) out << "BIOLEX " << s << '\n';
    for (const std::string& s : b.lexicons->nonbio) {
      out << "NONBIOLEX " << s << '\n';
    }
  }
  if (b.svm) {
    out << "SVM " << Real(b.svm->weights[0]) << ' ' << Real(b.svm->weights[1])
        << ' ' << Real(b.svm->bias) << ' ' << Real(b.svm->params.reg) << ' '
        << b.svm->params.epochs << ' ' << b.svm->params.seed << '\n';
  }
  if (b.tree) {
    for (size_t i = 0; i < b.tree->nodes.size(); ++i) {
      const auto& node = b.tree->nodes[i];
      out << "TREE " << i << ' ' << (node.leaf ? 1 : 0) << ' '
          << LabelName(TaskKind::kTwoClass, node.label) << ' ' << node.feature
          << ' ' << Real(node.threshold) << ' ' << node.left << ' '
          << node.right << '\n';
    }
  }
  out << "END\n";
  return out.str();
}

ClassifierBundle ParseModel(std::string_view content) {
  std::vector<std::string_view> lines;
  for (size_t start = 0; start < content.size();) {
    size_t nl = content.find('\n', start);
    if (nl == std::string_view::npos) nl = content.size();
    lines.push_back(content.substr(start, nl - start));
    start = nl + 1;
  }
  if (lines.empty()) throw InputError("model file is empty");

  ClassifierBundle b;
  {
    const LineParser p(1);
    const auto header = Fields(lines[0]);
    if (header.size() < 2 || header[0] != kMagic) p.Fail("not a model file");
    if (p.Int(header[1]) != kVersion) p.Fail("unsupported model version");
    std::map<std::string_view, std::string_view> kv;
    for (size_t i = 2; i < header.size(); ++i) {
      const size_t eq = header[i].find('=');
      if (eq == std::string_view::npos) p.Fail("bad header field");
      kv[header[i].substr(0, eq)] = header[i].substr(eq + 1);
    }
    auto get = [&](std::string_view key) {
      auto it = kv.find(key);
      if (it == kv.end()) p.Fail("header lacks '" + std::string(key) + "'");
      return it->second;
    };
    auto task = ParseTask(get("task"));
    auto mode = ParseFeatureMode(get("features"));
    auto kind = ParseClassifierKind(get("classifier"));
    if (!task || !mode || !kind) p.Fail("bad header value");
    b.task = *task;
    b.features.mode = *mode;
    b.features.pos_augmented = get("pos") == "1";
    if (get("hypernyms") == "1") b.features.hypernyms.emplace();
    b.features.hypernym_weight = p.Real(get("hypernym_weight"));
    const std::string_view unit = get("unit");
    if (unit != "phrase" && unit != "sentence") p.Fail("bad unit");
    b.unit = unit == "phrase" ? TrainingUnit::kPhrase : TrainingUnit::kSentence;
    b.active = *kind;
  }

  const size_t n = NumLabels(b.task);
  b.nb.task = b.task;
  b.nb.priors.assign(n, 0.0);
  b.nb.unknown.assign(n, 0.0);
  std::vector<bool> seen_prior(n, false);
  std::vector<bool> seen_unknown(n, false);
  std::map<std::string, std::vector<bool>> seen_lik;
  bool ended = false;
  for (size_t i = 1; i < lines.size(); ++i) {
    const LineParser p(i + 1);
    if (ended) {
      if (!lines[i].empty()) p.Fail("content after END");
      continue;
    }
    const auto f = Fields(lines[i]);
    if (f.empty()) p.Fail("blank line");
    const std::string_view kind = f[0];
    if (kind == "END" && f.size() == 1) {
      ended = true;
    } else if (kind == "PRIOR" && f.size() == 3) {
      const auto k = static_cast<size_t>(p.Label(b.task, f[1]));
      b.nb.priors[k] = p.Probability(f[2]);
      seen_prior[k] = true;
    } else if (kind == "LIK" && f.size() == 4) {
      const auto k = static_cast<size_t>(p.Label(b.task, f[1]));
      const double prob = p.Probability(f[3]);
      if (f[2] == kUnknownFeature) {
        b.nb.unknown[k] = prob;
        seen_unknown[k] = true;
      } else {
        const std::string feature(f[2]);
        auto [it, inserted] = b.nb.likelihoods.try_emplace(feature);
        if (inserted) {
          it->second.assign(n, 0.0);
          seen_lik[feature].assign(n, false);
        }
        it->second[k] = prob;
        seen_lik[feature][k] = true;
      }
    } else if (kind == "HYP" && f.size() == 3) {
      if (!b.features.hypernyms) p.Fail("HYP without hypernyms=1");
      (*b.features.hypernyms)[std::string(f[1])].emplace_back(f[2]);
    } else if (kind == "CUE" && f.size() == 2) {
      b.features.cue_words.emplace(f[1]);
    } else if (kind == "SALIENCY" && f.size() == 1) {
      b.lexicons.emplace();
    } else if (kind == "BIOLEX" && f.size() == 2) {
      if (!b.lexicons) b.lexicons.emplace();
      b.lexicons->bio.emplace(f[1]);
    } else if (kind == "NONBIOLEX" && f.size() == 2) {
      if (!b.lexicons) b.lexicons.emplace();
      b.lexicons->nonbio.emplace(f[1]);
    } else if (kind == "SVM" && f.size() == 7) {
      LinearSvmModel svm;
      svm.weights = {p.Real(f[1]), p.Real(f[2])};
      svm.bias = p.Real(f[3]);
      svm.params.reg = p.Real(f[4]);
      svm.params.epochs = static_cast<int>(p.Int(f[5]));
      svm.params.seed = static_cast<uint64_t>(p.Int(f[6]));
      b.svm = svm;
    } else if (kind == "TREE" && f.size() == 8) {
      if (!b.tree) b.tree.emplace();
      if (p.Int(f[1]) != static_cast<int64_t>(b.tree->nodes.size())) {
        p.Fail("tree nodes out of order");
      }
      DecisionTreeModel::Node node;
      node.leaf = f[2] == "1";
      node.label = p.Label(TaskKind::kTwoClass, f[3]);
      node.feature = static_cast<int>(p.Int(f[4]));
      node.threshold = p.Real(f[5]);
      node.left = static_cast<int>(p.Int(f[6]));
      node.right = static_cast<int>(p.Int(f[7]));
      b.tree->nodes.push_back(node);
    } else {
      p.Fail("unrecognized record '" + std::string(kind) + "'");
    }
  }
  if (!ended) throw InputError("model file is truncated (no END)");
  for (size_t k = 0; k < n; ++k) {
    if (!seen_prior[k] || !seen_unknown[k]) {
      throw InputError("model lacks PRIOR or UNK for a label");
    }
  }
  for (const auto& [feature, seen] : seen_lik) {
    for (bool s : seen) {
      if (!s) throw InputError("model lacks a LIK entry for '" + feature + "'");
    }
  }
  if (b.tree) {
    const auto count = static_cast<int>(b.tree->nodes.size());
    for (int id = 0; id < count; ++id) {
      const auto& node = b.tree->nodes[id];
      // Children always follow their parent, which also rules out cycles.
      if (!node.leaf && (node.left <= id || node.left >= count ||
                         node.right <= id || node.right >= count ||
                         node.feature < 0 || node.feature > 1)) {
        throw InputError("model tree has invalid child references");
      }
    }
  }
  if (b.lexicons) {
    for (const auto& s : b.lexicons->bio) {
      if (b.lexicons->nonbio.contains(s)) {
        throw InputError("model saliency lexicons overlap");
      }
    }
  }
  CheckNormalized(b);
  b.features.Validate();
  if (b.active == ClassifierKind::kSvm && (!b.svm || !b.lexicons)) {
    throw InputError("model selects svm but has no SVM section");
  }
  if (b.active == ClassifierKind::kTree && (!b.tree || !b.lexicons)) {
    throw InputError("model selects tree but has no TREE section");
  }
  return b;
}

void SaveModel(const ClassifierBundle& bundle,
               const std::filesystem::path& path) {
  WriteFile(path, SerializeModel(bundle));
}

ClassifierBundle LoadModel(const std::filesystem::path& path) {
  return ParseModel(ReadFile(path));
}

}  // namespace biosumm
