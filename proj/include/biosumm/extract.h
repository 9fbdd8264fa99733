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

// The biography extraction pipeline: name filtering, candidate merging,
// informativeness ranking against a world corpus, redundancy elimination and
// byte-budgeted assembly.
//
// Informativeness of a word is the ratio of its smoothed relative frequency in
// the document set to its smoothed relative frequency in the world corpus,
//
//   C_w = rf_doc(w) / rf_world(w),   rf(w) = (count(w) + 1) / (total + V)
//
// with V the size of the union of both vocabularies. Despite the "ITF" name
// used for these statistics elsewhere, they are plain relative frequencies:
// words that are frequent in the document set but rare in the world score
// high. A sentence scores the mean C_w over its non-stopword tokens.

#ifndef BIOSUMM_EXTRACT_H_
#define BIOSUMM_EXTRACT_H_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "biosumm/stopwords.h"
#include "biosumm/textproc.h"

namespace biosumm {

struct ClassifierBundle;

struct Document {
  std::string id;
  std::optional<std::string> date;  // from a leading `DATE:` line, unused
  std::string text;
  std::vector<Sentence> sentences;
};

// Segments `content`; a first line of the form `DATE: ...` is split off.
Document MakeDocument(std::string id, std::string_view content);

// Every document file in `dir`, id = filename without extension. A sibling
// `<id>.pos` sidecar, if present, tags the tokens.
std::vector<Document> LoadDocumentDir(const std::filesystem::path& dir);

// Stem counts.
struct TermStats {
  std::map<std::string, int64_t> counts;
  int64_t total = 0;

  void Add(std::string_view stem, int64_t n = 1);
  void Merge(const TermStats& other);
  void AddText(std::string_view text);
  void AddSentences(std::span<const Sentence> sentences);

  // `TOTAL<TAB>n` followed by `stem<TAB>count` lines sorted by stem.
  std::string ToTsv() const;
  // Validates the header total, ordering and counts; throws an input Error.
  static TermStats Parse(std::string_view content);
  static TermStats Load(const std::filesystem::path& path);
};

// Word informativeness over a fixed (document set, world) pair.
class Informativeness {
 public:
  Informativeness(const TermStats& doc, const TermStats& world);

  size_t vocabulary_size() const { return vocabulary_size_; }
  double DocFrequency(const std::string& stem) const;
  double WorldFrequency(const std::string& stem) const;
  double Score(const std::string& stem) const;  // C_w

 private:
  const TermStats& doc_;
  const TermStats& world_;
  size_t vocabulary_size_ = 0;
};

double WordInformativeness(const std::string& stem, const TermStats& doc,
                           const TermStats& world);

struct RankedSentence {
  Sentence sentence;
  double score = 0.0;               // C_s
  std::vector<double> word_scores;  // C_w of each non-stopword token
};

// Descending by score; ties keep input order.
std::vector<RankedSentence> ScoreSentences(
    std::span<const Sentence> candidates, const TermStats& doc,
    const TermStats& world, const Stopwords& stopwords = DefaultStopwords());

struct QualityFilter {
  size_t min_tokens = 5;
  double max_quoted_fraction = 0.5;
};

// Share of the sentence's bytes inside quotation marks, quote marks included.
// A closing mark with no opener quotes everything before it; an opener that
// is never closed quotes everything after it.
double QuotedFraction(std::string_view text);

// Not too short and not a direct quote.
bool PassesQualityFilter(const Sentence& sentence, const QualityFilter& filter);

// Sentences passing the quality filter that mention the person.
std::vector<Sentence> NameFilter(std::span<const Document> docs,
                                 const PersonName& name,
                                 const QualityFilter& filter = {});

// Case-folded, whitespace-collapsed, trimmed text used for duplicate checks.
std::string NormalizeForDedup(std::string_view text);

// Union keeping first-seen order, `filtered` first.
std::vector<Sentence> MergeCandidates(std::span<const Sentence> filtered,
                                      std::span<const Sentence> classified);

struct SummarySentence {
  Sentence sentence;  // text is cut when `truncated`
  double score = 0.0;
  bool truncated = false;
};

enum class SummaryStatus { kOk, kNoCandidates };

struct Summary {
  PersonName person;
  std::vector<SummarySentence> sentences;
  size_t byte_budget = 665;
  size_t total_bytes = 0;
  SummaryStatus status = SummaryStatus::kOk;

  // Sentences joined by single spaces.
  std::string Text() const;
};

struct RedundancyOptions {
  size_t byte_budget = 665;
  // Candidate pool size; default twice the number of top sentences that fit
  // the budget.
  std::optional<size_t> pool_k;
  // Once within budget, keep removing while the similarity to the pool stays
  // at or above this value. Off by default.
  std::optional<double> min_similarity;
};

// Starting from the top of `ranked`, repeatedly drops the sentence whose
// removal leaves the remaining text most similar (cosine over stemmed,
// stopword-free term frequencies) to the whole pool, until the survivors fit
// the budget. A lone survivor that is still too long is cut at a UTF-8
// boundary. Survivors stay in descending score order.
Summary EliminateRedundancy(std::span<const RankedSentence> ranked,
                            const RedundancyOptions& options,
                            const Stopwords& stopwords = DefaultStopwords());

struct SummarizerConfig {
  RedundancyOptions redundancy;
  QualityFilter quality;
  Stopwords stopwords = DefaultStopwords();
};

using BiographicalPredicate = std::function<bool(const Sentence&)>;

// name filter -> classifier -> merge -> document-set statistics -> ranking ->
// redundancy elimination. The classifier sees every sentence that passes the
// quality filter. Throws a usage Error on an empty document set; returns a
// kNoCandidates summary when nothing survives filtering.
Summary Summarize(std::span<const Document> docs, const PersonName& name,
                  const BiographicalPredicate& is_biographical,
                  const TermStats& world, const SummarizerConfig& config);
Summary Summarize(std::span<const Document> docs, const PersonName& name,
                  const ClassifierBundle& classifier, const TermStats& world,
                  const SummarizerConfig& config);

}  // namespace biosumm

#endif  // BIOSUMM_EXTRACT_H_
