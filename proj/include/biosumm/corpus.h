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

// The clause-annotated biography corpus: inline-tag parsing, projection of
// clause tags onto sentences, span statistics and train/test splitting.

#ifndef BIOSUMM_CORPUS_H_
#define BIOSUMM_CORPUS_H_

#include <array>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "biosumm/error.h"
#include "biosumm/random.h"
#include "biosumm/textproc.h"

namespace biosumm {

// The nine biography elements plus `none`, in checklist order. This order is
// also the tie-breaking order for every classifier.
enum class BioCategory {
  kBio,
  kFame,
  kPersonality,
  kSocial,
  kEducation,
  kNationality,
  kScandal,
  kPersonal,
  kWork,
  kNone,
};

inline constexpr size_t kNumCategories = 10;
inline constexpr size_t kNumBioElements = 9;

inline constexpr std::array<BioCategory, kNumCategories> kAllCategories = {
    BioCategory::kBio,         BioCategory::kFame,    BioCategory::kPersonality,
    BioCategory::kSocial,      BioCategory::kEducation,
    BioCategory::kNationality, BioCategory::kScandal, BioCategory::kPersonal,
    BioCategory::kWork,        BioCategory::kNone};

std::string_view CategoryName(BioCategory category);
std::optional<BioCategory> ParseCategory(std::string_view name);

struct AnnotatedSpan {
  BioCategory category = BioCategory::kNone;
  std::string text;
  ByteRange range;  // into the tag-stripped text
};

struct AnnotatedDocument {
  std::string id;
  std::string plain_text;
  std::vector<AnnotatedSpan> spans;
  // Set when a POS sidecar accompanied the document.
  std::optional<PosSidecar> pos;
};

// Strips `<tag>...</tag>` markers drawn from the nine element names. Anything
// that does not look like a tag (`a < b`) is kept as text. Unknown tag names,
// unbalanced or mismatched tags, nesting and empty spans throw an input Error
// carrying the byte offset of the offending tag.
AnnotatedDocument ParseAnnotated(std::string_view text);

// Inverse of ParseAnnotated.
std::string RenderAnnotated(const AnnotatedDocument& doc);

struct LabeledSentence {
  Sentence sentence;
  // Categories of the spans overlapping the sentence, in annotation order,
  // without repeats; exactly {kNone} when no span overlaps.
  std::vector<BioCategory> labels;

  bool is_biographical() const { return labels.front() != BioCategory::kNone; }
};

// `sentences` must partition `plain_text`: in order, non-overlapping, each
// text equal to its slice, whitespace only in between.
std::vector<LabeledSentence> ProjectLabels(std::string_view plain_text,
                                           std::span<const AnnotatedSpan> spans,
                                           std::span<const Sentence> sentences);

// Segments (attaching POS tags if present) and projects labels.
std::vector<LabeledSentence> LabelDocument(const AnnotatedDocument& doc);

struct CorpusStats {
  std::array<int64_t, kNumBioElements> counts{};
  int64_t total_spans = 0;

  int64_t count(BioCategory category) const;
  void Add(const CorpusStats& other);
  // `category<TAB>count` lines in checklist order, then `TOTAL<TAB>n`.
  std::string ToTsv() const;
};

CorpusStats ComputeCorpusStats(std::span<const AnnotatedDocument> docs);

// Reads every document file in `dir` (see ListDocumentFiles). The id is the
// filename without extension; a sibling `<id>.pos` file is taken as the POS
// sidecar.
std::vector<AnnotatedDocument> LoadCorpusDir(const std::filesystem::path& dir);

// Deterministic shuffle-and-cut. |train| = round(train_fraction * N); both
// halves keep the input order.
template <typename T>
std::pair<std::vector<T>, std::vector<T>> SplitCorpus(std::span<const T> docs,
                                                      double train_fraction,
                                                      uint64_t seed) {
  if (docs.size() < 2) throw UsageError("need at least 2 documents to split");
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw UsageError("train fraction must lie in (0, 1)");
  }
  std::vector<size_t> order(docs.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  Rng rng(seed);
  rng.Shuffle(order);
  const auto n_train = static_cast<size_t>(
      std::llround(train_fraction * static_cast<double>(docs.size())));
  std::vector<bool> in_train(docs.size(), false);
  for (size_t i = 0; i < n_train; ++i) in_train[order[i]] = true;
  std::pair<std::vector<T>, std::vector<T>> out;
  for (size_t i = 0; i < docs.size(); ++i) {
    (in_train[i] ? out.first : out.second).push_back(docs[i]);
  }
  return out;
}

}  // namespace biosumm

#endif  // BIOSUMM_CORPUS_H_
