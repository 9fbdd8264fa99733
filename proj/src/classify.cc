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

#include "biosumm/classify.h"

#include <algorithm>

#include "biosumm/error.h"
#include "biosumm/io.h"

namespace biosumm {
namespace {

constexpr std::array<std::string_view, 2> kTwoClassNames = {"bio2", "none2"};

std::string TokenId(const Token& token, const FeatureConfig& config) {
  std::string id = config.mode == FeatureMode::kStemUnigram
                       ? token.stem
                       : LowerAscii(token.surface);
  if (config.pos_augmented) {
    if (!token.pos) {
      throw UsageError("POS features requested but token '" + token.surface +
                       "' has no POS tag");
    }
    id += '/';
    id += *token.pos;
  }
  return id;
}

// Runs of whitespace become '_' so ids stay single fields in model files.
std::string NormalizeId(std::string_view raw) {
  std::string out;
  bool pending = false;
  for (char c : raw) {
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      pending = !out.empty();
      continue;
    }
    if (pending) out += '_';
    pending = false;
    out += c;
  }
  return LowerAscii(out);
}

void AddInstances(const std::vector<LabelId>& labels,
                  const FeatureVector& features,
                  std::vector<TrainingInstance>& out) {
  for (LabelId label : labels) out.push_back({features, label});
}

}  // namespace

size_t NumLabels(TaskKind task) {
  return task == TaskKind::kTenClass ? kNumCategories : kTwoClassNames.size();
}

std::string_view LabelName(TaskKind task, LabelId label) {
  if (label < 0 || static_cast<size_t>(label) >= NumLabels(task)) {
    throw InvariantError("label id out of range");
  }
  if (task == TaskKind::kTenClass) {
    return CategoryName(static_cast<BioCategory>(label));
  }
  return kTwoClassNames[static_cast<size_t>(label)];
}

std::optional<LabelId> ParseLabel(TaskKind task, std::string_view name) {
  for (size_t i = 0; i < NumLabels(task); ++i) {
    if (LabelName(task, static_cast<LabelId>(i)) == name) {
      return static_cast<LabelId>(i);
    }
  }
  return std::nullopt;
}

LabelId ToTaskLabel(TaskKind task, BioCategory category) {
  if (task == TaskKind::kTenClass) return static_cast<LabelId>(category);
  return category == BioCategory::kNone ? kNone2 : kBio2;
}

LabelId NoneLabel(TaskKind task) {
  return ToTaskLabel(task, BioCategory::kNone);
}

std::string_view TaskName(TaskKind task) {
  return task == TaskKind::kTenClass ? "ten" : "two";
}

std::optional<TaskKind> ParseTask(std::string_view name) {
  if (name == "ten") return TaskKind::kTenClass;
  if (name == "two") return TaskKind::kTwoClass;
  return std::nullopt;
}

std::string_view FeatureModeName(FeatureMode mode) {
  switch (mode) {
    case FeatureMode::kUnigram:
      return "unigram";
    case FeatureMode::kBigram:
      return "bigram";
    case FeatureMode::kStemUnigram:
      return "stem";
  }
  return "unigram";
}

std::optional<FeatureMode> ParseFeatureMode(std::string_view name) {
  if (name == "unigram") return FeatureMode::kUnigram;
  if (name == "bigram") return FeatureMode::kBigram;
  if (name == "stem") return FeatureMode::kStemUnigram;
  return std::nullopt;
}

HypernymLexicon ParseHypernymLexicon(std::string_view content) {
  HypernymLexicon lexicon;
  size_t start = 0;
  size_t line_no = 0;
  while (start < content.size()) {
    size_t nl = content.find('\n', start);
    if (nl == std::string_view::npos) nl = content.size();
    std::string_view line = content.substr(start, nl - start);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty() && line.front() != '#') {
      const size_t tab = line.find('\t');
      if (tab == std::string_view::npos || tab == 0 || tab + 1 == line.size()) {
        throw InputError("hypernym lexicon line " + std::to_string(line_no) +
                             " is not word<TAB>hypernym",
                         start);
      }
      const std::string hypernym = NormalizeId(line.substr(tab + 1));
      if (hypernym.empty()) {
        throw InputError("empty hypernym on line " + std::to_string(line_no));
      }
      auto& entries = lexicon[LowerAscii(line.substr(0, tab))];
      if (std::find(entries.begin(), entries.end(), hypernym) ==
          entries.end()) {
        entries.push_back(hypernym);
      }
    }
    start = nl + 1;
  }
  return lexicon;
}

HypernymLexicon LoadHypernymLexicon(const std::filesystem::path& path) {
  return ParseHypernymLexicon(ReadFile(path));
}

void FeatureConfig::Validate() const {
  if (hypernyms && mode != FeatureMode::kUnigram) {
    throw UsageError("hypernym expansion requires unigram features");
  }
  if (!(hypernym_weight > 0.0 && hypernym_weight <= 1.0)) {
    throw UsageError("hypernym weight must lie in (0, 1]");
  }
}

FeatureVector ExtractFeatures(std::span<const Token> tokens,
                              const FeatureConfig& config) {
  FeatureVector fv;
  if (config.mode == FeatureMode::kBigram) {
    for (size_t i = 0; i + 1 < tokens.size(); ++i) {
      fv[TokenId(tokens[i], config) + "_" + TokenId(tokens[i + 1], config)] +=
          1.0;
    }
  } else {
    for (const Token& token : tokens) fv[TokenId(token, config)] += 1.0;
  }
  if (config.hypernyms) {
    for (const Token& token : tokens) {
      auto it = config.hypernyms->find(LowerAscii(token.surface));
      if (it == config.hypernyms->end()) continue;
      for (const std::string& hypernym : it->second) {
        fv[hypernym] += config.hypernym_weight;
      }
    }
  }
  if (!config.cue_words.empty()) {
    for (const Token& token : tokens) {
      if (config.cue_words.contains(LowerAscii(token.surface))) fv["@cue"] += 1;
    }
  }
  return fv;
}

FeatureVector ExtractFeatures(const Sentence& sentence,
                              const FeatureConfig& config) {
  return ExtractFeatures(sentence.tokens, config);
}

std::vector<TrainingInstance> BuildTrainingInstances(
    std::span<const AnnotatedDocument> docs, TaskKind task,
    const FeatureConfig& config, TrainingUnit unit) {
  config.Validate();
  std::vector<TrainingInstance> out;
  for (const AnnotatedDocument& doc : docs) {
    const std::vector<LabeledSentence> labeled = LabelDocument(doc);
    if (unit == TrainingUnit::kSentence) {
      for (const LabeledSentence& ls : labeled) {
        std::vector<LabelId> labels;
        for (BioCategory c : ls.labels) {
          const LabelId id = ToTaskLabel(task, c);
          if (std::find(labels.begin(), labels.end(), id) == labels.end()) {
            labels.push_back(id);
          }
        }
        AddInstances(labels, ExtractFeatures(ls.sentence, config), out);
      }
      continue;
    }

    // Phrase units: collect the document's tokens with their absolute byte
    // ranges so each span can pick up the (possibly POS-tagged) tokens it
    // overlaps.
    std::vector<const Token*> doc_tokens;
    std::vector<ByteRange> doc_ranges;
    for (const LabeledSentence& ls : labeled) {
      const std::vector<ByteRange> ranges = TokenRanges(ls.sentence.text);
      if (ranges.size() != ls.sentence.tokens.size()) {
        throw InvariantError("token ranges disagree with tokenization");
      }
      for (size_t k = 0; k < ranges.size(); ++k) {
        doc_tokens.push_back(&ls.sentence.tokens[k]);
        doc_ranges.push_back({ranges[k].begin + ls.sentence.begin,
                              ranges[k].end + ls.sentence.begin});
      }
    }
    for (const AnnotatedSpan& span : doc.spans) {
      std::vector<Token> tokens;
      for (size_t k = 0; k < doc_tokens.size(); ++k) {
        if (doc_ranges[k].begin < span.range.end &&
            span.range.begin < doc_ranges[k].end) {
          tokens.push_back(*doc_tokens[k]);
        }
      }
      out.push_back({ExtractFeatures(tokens, config),
                     ToTaskLabel(task, span.category)});
    }
    for (const LabeledSentence& ls : labeled) {
      if (!ls.is_biographical()) {
        out.push_back({ExtractFeatures(ls.sentence, config), NoneLabel(task)});
      }
    }
  }
  return out;
}

}  // namespace biosumm
