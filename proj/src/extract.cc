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

#include "biosumm/extract.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "biosumm/error.h"
#include "biosumm/io.h"
#include "biosumm/model_io.h"
#include "biosumm/rouge.h"

namespace biosumm {
namespace {

using TermVector = std::map<std::string, double>;

TermVector ContentTerms(const Sentence& sentence, const Stopwords& stopwords) {
  TermVector tf;
  for (const Token& t : sentence.tokens) {
    if (!IsStopword(stopwords, t.surface)) tf[t.stem] += 1.0;
  }
  return tf;
}

double Norm(const TermVector& v) {
  double s = 0;
  for (const auto& [term, x] : v) s += x * x;
  return std::sqrt(s);
}

// Cosine between `rest` (given as `current` minus `removed`) and `target`.
double CosineAfterRemoval(const TermVector& current, const TermVector& removed,
                          const TermVector& target, double target_norm) {
  double dot = 0;
  double norm2 = 0;
  for (const auto& [term, x] : current) {
    auto it = removed.find(term);
    const double v = it == removed.end() ? x : x - it->second;
    if (v <= 0) continue;
    norm2 += v * v;
    auto jt = target.find(term);
    if (jt != target.end()) dot += v * jt->second;
  }
  if (norm2 <= 0 || target_norm <= 0) return 0.0;
  return dot / (std::sqrt(norm2) * target_norm);
}

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && IsSpace(s.front())) s.remove_prefix(1);
  while (!s.empty() && IsSpace(s.back())) s.remove_suffix(1);
  return s;
}

size_t JoinedBytes(size_t sum_of_lengths, size_t count) {
  return count == 0 ? 0 : sum_of_lengths + (count - 1);
}

}  // namespace

Document MakeDocument(std::string id, std::string_view content) {
  Document doc;
  doc.id = std::move(id);
  std::string_view body = content;
  if (body.starts_with("DATE:")) {
    const size_t nl = body.find('\n');
    const std::string_view line =
        body.substr(5, nl == std::string_view::npos ? std::string_view::npos
                                                    : nl - 5);
    doc.date = std::string(Trim(line));
    body = nl == std::string_view::npos ? std::string_view{}
                                        : body.substr(nl + 1);
  }
  doc.text = std::string(body);
  doc.sentences = SegmentSentences(doc.text, doc.id);
  return doc;
}

std::vector<Document> LoadDocumentDir(const std::filesystem::path& dir) {
  std::vector<Document> docs;
  for (const auto& path : ListDocumentFiles(dir)) {
    docs.push_back(MakeDocument(path.stem().string(), ReadFile(path)));
    std::filesystem::path sidecar = path;
    sidecar.replace_extension(".pos");
    if (std::filesystem::is_regular_file(sidecar)) {
      AttachPosTags(docs.back().sentences, ParsePosSidecar(ReadFile(sidecar)));
    }
  }
  return docs;
}

void TermStats::Add(std::string_view stem, int64_t n) {
  counts[std::string(stem)] += n;
  total += n;
}

void TermStats::Merge(const TermStats& other) {
  for (const auto& [stem, c] : other.counts) counts[stem] += c;
  total += other.total;
}

void TermStats::AddText(std::string_view text) {
  for (const Token& t : Tokenize(text)) Add(t.stem);
}

void TermStats::AddSentences(std::span<const Sentence> sentences) {
  for (const Sentence& s : sentences) {
    for (const Token& t : s.tokens) Add(t.stem);
  }
}

std::string TermStats::ToTsv() const {
  std::ostringstream out;
  out << "TOTAL\t" << total << '\n';
  for (const auto& [stem, c] : counts) out << stem << '\t' << c << '\n';
  return out.str();
}

TermStats TermStats::Parse(std::string_view content) {
  TermStats stats;
  int64_t declared = -1;
  std::string previous;
  size_t start = 0;
  size_t line_no = 0;
  auto parse_int = [&](std::string_view s) {
    int64_t v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || p != s.data() + s.size() || v < 0) {
      throw InputError("world stats line " + std::to_string(line_no) +
                       ": bad count '" + std::string(s) + "'");
    }
    return v;
  };
  while (start < content.size()) {
    size_t nl = content.find('\n', start);
    if (nl == std::string_view::npos) nl = content.size();
    std::string_view line = content.substr(start, nl - start);
    start = nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    const size_t tab = line.find('\t');
    if (tab == std::string_view::npos || tab == 0) {
      throw InputError("world stats line " + std::to_string(line_no) +
                       " is not key<TAB>count");
    }
    const std::string_view key = line.substr(0, tab);
    const int64_t value = parse_int(line.substr(tab + 1));
    if (declared < 0) {
      if (key != "TOTAL") throw InputError("world stats must start with TOTAL");
      declared = value;
      continue;
    }
    if (!previous.empty() && !(previous < key)) {
      throw InputError("world stats are not sorted by stem at line " +
                       std::to_string(line_no));
    }
    previous = std::string(key);
    stats.counts.emplace(previous, value);
    stats.total += value;
  }
  if (declared < 0) throw InputError("world stats file is empty");
  if (declared != stats.total) {
    throw InputError("world stats TOTAL " + std::to_string(declared) +
                     " does not match the sum of counts " +
                     std::to_string(stats.total));
  }
  return stats;
}

TermStats TermStats::Load(const std::filesystem::path& path) {
  try {
    return Parse(ReadFile(path));
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": " + e.what());
  }
}

Informativeness::Informativeness(const TermStats& doc, const TermStats& world)
    : doc_(doc), world_(world) {
  vocabulary_size_ = world.counts.size();
  for (const auto& [stem, c] : doc.counts) {
    if (!world.counts.contains(stem)) ++vocabulary_size_;
  }
}

double Informativeness::DocFrequency(const std::string& stem) const {
  auto it = doc_.counts.find(stem);
  const double c = it == doc_.counts.end() ? 0.0 : static_cast<double>(it->second);
  return (c + 1.0) / (static_cast<double>(doc_.total) +
                      static_cast<double>(std::max<size_t>(vocabulary_size_, 1)));
}

double Informativeness::WorldFrequency(const std::string& stem) const {
  auto it = world_.counts.find(stem);
  const double c =
      it == world_.counts.end() ? 0.0 : static_cast<double>(it->second);
  return (c + 1.0) / (static_cast<double>(world_.total) +
                      static_cast<double>(std::max<size_t>(vocabulary_size_, 1)));
}

double Informativeness::Score(const std::string& stem) const {
  return DocFrequency(stem) / WorldFrequency(stem);
}

double WordInformativeness(const std::string& stem, const TermStats& doc,
                           const TermStats& world) {
  return Informativeness(doc, world).Score(stem);
}

std::vector<RankedSentence> ScoreSentences(std::span<const Sentence> candidates,
                                           const TermStats& doc,
                                           const TermStats& world,
                                           const Stopwords& stopwords) {
  const Informativeness info(doc, world);
  std::vector<RankedSentence> ranked;
  ranked.reserve(candidates.size());
  for (const Sentence& s : candidates) {
    RankedSentence r;
    r.sentence = s;
    double sum = 0;
    for (const Token& t : s.tokens) {
      if (IsStopword(stopwords, t.surface)) continue;
      r.word_scores.push_back(info.Score(t.stem));
      sum += r.word_scores.back();
    }
    r.score = r.word_scores.empty()
                  ? 0.0
                  : sum / static_cast<double>(r.word_scores.size());
    ranked.push_back(std::move(r));
  }
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const RankedSentence& a, const RankedSentence& b) {
                     return a.score > b.score;
                   });
  return ranked;
}

double QuotedFraction(std::string_view text) {
  if (text.empty()) return 0.0;
  static constexpr std::string_view kOpenCurly = "“";
  static constexpr std::string_view kCloseCurly = "”";
  size_t quoted = 0;
  bool inside = false;
  size_t i = 0;
  while (i < text.size()) {
    bool open = false;
    bool close = false;
    size_t len = 1;
    if (text.substr(i).starts_with(kOpenCurly)) {
      open = true;
      len = kOpenCurly.size();
    } else if (text.substr(i).starts_with(kCloseCurly)) {
      close = true;
      len = kCloseCurly.size();
    } else if (text[i] == '"') {
      // A straight quote opens at the start or after whitespace or a bracket;
      // anywhere else it closes.
      const bool after_break =
          i == 0 || IsSpace(text[i - 1]) || text[i - 1] == '(' ||
          text[i - 1] == '[';
      open = after_break && !inside;
      close = !open;
    }
    if (open) {
      inside = true;
      quoted += len;
    } else if (close) {
      if (inside) {
        quoted += len;
        inside = false;
      } else {
        quoted = i + len;  // unmatched close: everything so far was quoted
      }
    } else if (inside) {
      quoted += len;
    }
    i += len;
  }
  return static_cast<double>(quoted) / static_cast<double>(text.size());
}

bool PassesQualityFilter(const Sentence& sentence, const QualityFilter& filter) {
  return sentence.tokens.size() >= filter.min_tokens &&
         QuotedFraction(sentence.text) <= filter.max_quoted_fraction;
}

std::vector<Sentence> NameFilter(std::span<const Document> docs,
                                 const PersonName& name,
                                 const QualityFilter& filter) {
  const std::set<std::string> variants = NameVariants(name);
  std::vector<Sentence> kept;
  for (const Document& doc : docs) {
    for (const Sentence& s : doc.sentences) {
      if (PassesQualityFilter(s, filter) && MentionsAny(s.text, variants)) {
        kept.push_back(s);
      }
    }
  }
  return kept;
}

std::string NormalizeForDedup(std::string_view text) {
  std::string out;
  bool pending_space = false;
  for (char c : Trim(text)) {
    if (IsSpace(c)) {
      pending_space = true;
      continue;
    }
    if (pending_space) out += ' ';
    pending_space = false;
    out += c;
  }
  return LowerAscii(out);
}

std::vector<Sentence> MergeCandidates(std::span<const Sentence> filtered,
                                      std::span<const Sentence> classified) {
  std::set<std::string> seen;
  std::vector<Sentence> merged;
  for (auto group : {filtered, classified}) {
    for (const Sentence& s : group) {
      if (seen.insert(NormalizeForDedup(s.text)).second) merged.push_back(s);
    }
  }
  return merged;
}

std::string Summary::Text() const {
  std::string out;
  for (const SummarySentence& s : sentences) {
    if (!out.empty()) out += ' ';
    out += s.sentence.text;
  }
  return out;
}

Summary EliminateRedundancy(std::span<const RankedSentence> ranked,
                            const RedundancyOptions& options,
                            const Stopwords& stopwords) {
  if (options.byte_budget < 1) throw UsageError("byte budget must be >= 1");
  Summary summary;
  summary.byte_budget = options.byte_budget;
  if (ranked.empty()) {
    summary.status = SummaryStatus::kNoCandidates;
    return summary;
  }

  std::vector<const RankedSentence*> unique;
  std::set<std::string> seen;
  for (const RankedSentence& r : ranked) {
    if (seen.insert(NormalizeForDedup(r.sentence.text)).second) {
      unique.push_back(&r);
    }
  }

  size_t fit = 0;
  size_t fit_bytes = 0;
  for (const RankedSentence* r : unique) {
    const size_t next = fit_bytes + r->sentence.byte_len() + (fit ? 1 : 0);
    if (next > options.byte_budget) break;
    fit_bytes = next;
    ++fit;
  }
  const size_t k = std::max<size_t>(
      options.pool_k.value_or(2 * std::max<size_t>(fit, 1)), 1);
  std::vector<const RankedSentence*> pool(
      unique.begin(), unique.begin() + static_cast<long>(std::min(k, unique.size())));

  std::vector<TermVector> terms;
  TermVector original;
  size_t length_sum = 0;
  for (const RankedSentence* r : pool) {
    terms.push_back(ContentTerms(r->sentence, stopwords));
    for (const auto& [term, x] : terms.back()) original[term] += x;
    length_sum += r->sentence.byte_len();
  }
  const double original_norm = Norm(original);
  TermVector current = original;
  std::vector<bool> alive(pool.size(), true);
  size_t alive_count = pool.size();

  struct Removal {
    size_t index = 0;
    double similarity = -1.0;
  };
  // Later (lower-scored) sentences win ties, so they are dropped first.
  auto best_removal = [&]() {
    Removal best;
    for (size_t i = pool.size(); i-- > 0;) {
      if (!alive[i]) continue;
      const double sim =
          CosineAfterRemoval(current, terms[i], original, original_norm);
      if (sim > best.similarity) best = {i, sim};
    }
    return best;
  };
  auto remove = [&](size_t i) {
    alive[i] = false;
    --alive_count;
    length_sum -= pool[i]->sentence.byte_len();
    for (const auto& [term, x] : terms[i]) {
      auto it = current.find(term);
      it->second -= x;
      if (it->second <= 0) current.erase(it);
    }
  };

  while (alive_count > 1 &&
         JoinedBytes(length_sum, alive_count) > options.byte_budget) {
    remove(best_removal().index);
  }
  if (options.min_similarity) {
    while (alive_count > 1) {
      const Removal r = best_removal();
      if (r.similarity < *options.min_similarity) break;
      remove(r.index);
    }
  }

  for (size_t i = 0; i < pool.size(); ++i) {
    if (!alive[i]) continue;
    SummarySentence s{pool[i]->sentence, pool[i]->score, false};
    if (s.sentence.byte_len() > options.byte_budget) {
      s.sentence.text = TruncateBytes(s.sentence.text, options.byte_budget);
      s.truncated = true;
    }
    if (!s.sentence.text.empty()) summary.sentences.push_back(std::move(s));
  }
  summary.total_bytes = summary.Text().size();
  if (summary.total_bytes > options.byte_budget) {
    throw InvariantError("summary exceeds its byte budget");
  }
  return summary;
}

Summary Summarize(std::span<const Document> docs, const PersonName& name,
                  const BiographicalPredicate& is_biographical,
                  const TermStats& world, const SummarizerConfig& config) {
  if (docs.empty()) throw UsageError("empty document set");
  const std::vector<Sentence> filtered = NameFilter(docs, name, config.quality);
  std::vector<Sentence> classified;
  TermStats doc_stats;
  for (const Document& doc : docs) {
    doc_stats.AddSentences(doc.sentences);
    for (const Sentence& s : doc.sentences) {
      if (PassesQualityFilter(s, config.quality) && is_biographical(s)) {
        classified.push_back(s);
      }
    }
  }
  const std::vector<Sentence> merged = MergeCandidates(filtered, classified);
  Summary summary;
  if (!merged.empty()) {
    const std::vector<RankedSentence> ranked =
        ScoreSentences(merged, doc_stats, world, config.stopwords);
    summary = EliminateRedundancy(ranked, config.redundancy, config.stopwords);
  } else {
    summary.byte_budget = config.redundancy.byte_budget;
    summary.status = SummaryStatus::kNoCandidates;
  }
  summary.person = name;
  return summary;
}

Summary Summarize(std::span<const Document> docs, const PersonName& name,
                  const ClassifierBundle& classifier, const TermStats& world,
                  const SummarizerConfig& config) {
  return Summarize(
      docs, name,
      [&classifier](const Sentence& s) { return classifier.IsBiographical(s); },
      world, config);
}

}  // namespace biosumm
