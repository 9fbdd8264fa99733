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

#include "biosumm/rouge.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "biosumm/error.h"
#include "biosumm/io.h"
#include "biosumm/random.h"
#include "biosumm/textproc.h"

namespace biosumm {
namespace {

double Ratio(double num, double den) { return den > 0 ? num / den : 0.0; }

double FMeasure(double p, double r) {
  return p + r > 0 ? 2.0 * p * r / (p + r) : 0.0;
}

using NgramCounts = std::map<std::vector<std::string>, int64_t>;

NgramCounts Ngrams(const std::vector<std::string>& tokens, int n) {
  NgramCounts counts;
  const auto order = static_cast<size_t>(n);
  for (size_t i = 0; i + order <= tokens.size(); ++i) {
    ++counts[std::vector<std::string>(tokens.begin() + static_cast<long>(i),
                                      tokens.begin() + static_cast<long>(i + order))];
  }
  return counts;
}

std::string Fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

size_t LcsLength(std::span<const std::string> a,
                 std::span<const std::string> b) {
  std::vector<size_t> prev(b.size() + 1, 0);
  std::vector<size_t> cur(b.size() + 1, 0);
  for (size_t i = 1; i <= a.size(); ++i) {
    for (size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                    : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::vector<std::string> RougeTokens(std::string_view text) {
  std::vector<std::string> out;
  for (const ByteRange& r : TokenRanges(text)) {
    out.push_back(LowerAscii(text.substr(r.begin, r.end - r.begin)));
  }
  return out;
}

RougeScore RougeL(std::string_view candidate,
                  std::span<const std::string> references) {
  if (references.empty()) throw UsageError("ROUGE needs at least one reference");
  const std::vector<std::string> cand = RougeTokens(candidate);
  RougeScore best;
  best.metric = RougeMetric::kL;
  bool any_defined = false;
  bool first = true;
  for (const std::string& reference : references) {
    const std::vector<std::string> ref = RougeTokens(reference);
    if (cand.empty() && ref.empty()) continue;
    any_defined = true;
    const auto lcs = static_cast<double>(LcsLength(cand, ref));
    RougeScore s;
    s.metric = RougeMetric::kL;
    s.recall = Ratio(lcs, static_cast<double>(ref.size()));
    s.precision = Ratio(lcs, static_cast<double>(cand.size()));
    s.f_measure = FMeasure(s.precision, s.recall);
    if (first || s.f_measure > best.f_measure) best = s;
    first = false;
  }
  best.undefined = !any_defined;
  return best;
}

RougeScore RougeN(std::string_view candidate,
                  std::span<const std::string> references, int n) {
  if (references.empty()) throw UsageError("ROUGE needs at least one reference");
  if (n < 1) throw UsageError("ROUGE-N needs n >= 1");
  const NgramCounts cand = Ngrams(RougeTokens(candidate), n);
  int64_t cand_total = 0;
  for (const auto& [gram, c] : cand) cand_total += c;

  RougeScore best;
  best.metric = RougeMetric::kN;
  best.n = n;
  bool any_defined = false;
  for (const std::string& reference : references) {
    const NgramCounts ref = Ngrams(RougeTokens(reference), n);
    if (ref.empty()) continue;
    int64_t ref_total = 0;
    int64_t matched = 0;
    for (const auto& [gram, c] : ref) {
      ref_total += c;
      auto it = cand.find(gram);
      if (it != cand.end()) matched += std::min(c, it->second);
    }
    RougeScore s;
    s.metric = RougeMetric::kN;
    s.n = n;
    s.recall = Ratio(static_cast<double>(matched), static_cast<double>(ref_total));
    s.precision =
        Ratio(static_cast<double>(matched), static_cast<double>(cand_total));
    s.f_measure = FMeasure(s.precision, s.recall);
    if (!any_defined || s.f_measure > best.f_measure) best = s;
    any_defined = true;
  }
  best.undefined = !any_defined;
  return best;
}

std::string TruncateBytes(std::string_view text, size_t budget) {
  if (text.size() <= budget) return std::string(text);
  size_t cut = budget;
  // Back off while the first excluded byte continues a multi-byte sequence.
  while (cut > 0 && (static_cast<unsigned char>(text[cut]) & 0xC0) == 0x80) {
    --cut;
  }
  return std::string(text.substr(0, cut));
}

ConfidenceInterval BootstrapCi(std::span<const double> scores, int resamples,
                               uint64_t seed) {
  if (scores.empty()) throw UsageError("bootstrap needs at least one score");
  if (resamples < 1) throw UsageError("bootstrap needs at least one resample");
  ConfidenceInterval ci;
  ci.resamples = resamples;
  double sum = 0;
  for (double s : scores) sum += s;
  const auto n = static_cast<double>(scores.size());
  ci.point = sum / n;

  Rng rng(seed);
  std::vector<double> means(static_cast<size_t>(resamples));
  for (double& m : means) {
    double total = 0;
    for (size_t i = 0; i < scores.size(); ++i) {
      total += scores[rng.Below(scores.size())];
    }
    m = total / n;
  }
  std::sort(means.begin(), means.end());
  auto percentile = [&](double q) {
    const double h = q * static_cast<double>(means.size() - 1);
    const auto lo = static_cast<size_t>(std::floor(h));
    const size_t hi = std::min(lo + 1, means.size() - 1);
    return means[lo] + (h - static_cast<double>(lo)) * (means[hi] - means[lo]);
  };
  const double alpha = (1.0 - ci.level) / 2.0;
  ci.lower = std::min(percentile(alpha), ci.point);
  ci.upper = std::max(percentile(1.0 - alpha), ci.point);
  return ci;
}

std::string RougeBatchReport::ToTsv() const {
  std::ostringstream out;
  out << "# metric="
      << (options.metric == RougeMetric::kL
              ? std::string("rouge-l")
              : "rouge-" + std::to_string(options.n))
      << " beta=1 aggregate=max resamples=" << options.resamples
      << " seed=" << options.seed << '\n';
  for (const RougeBatchEntry& e : entries) {
    out << e.id << '\t' << Fixed(e.score.precision) << '\t'
        << Fixed(e.score.recall) << '\t' << Fixed(e.score.f_measure) << '\n';
  }
  out << "MEAN\t" << Fixed(mean_precision) << '\t' << Fixed(mean_recall)
      << '\t' << Fixed(mean_f);
  if (f_interval) {
    out << '\t' << Fixed(f_interval->lower) << '\t' << Fixed(f_interval->upper);
  }
  out << '\n';
  return out.str();
}

RougeBatchReport ScoreDirectories(const std::filesystem::path& candidates_dir,
                                  const std::filesystem::path& references_dir,
                                  const RougeBatchOptions& options) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(references_dir)) {
    throw InputError("not a directory: " + references_dir.string());
  }
  RougeBatchReport report;
  report.options = options;
  std::vector<double> f_scores;
  for (const fs::path& candidate : ListDocumentFiles(candidates_dir)) {
    const std::string id = candidate.filename().string();
    const fs::path match = references_dir / id;
    std::vector<std::string> references;
    if (fs::is_directory(match)) {
      for (const fs::path& r : ListDocumentFiles(match)) {
        references.push_back(ReadFile(r));
      }
    } else if (fs::is_regular_file(match)) {
      references.push_back(ReadFile(match));
    }
    if (references.empty()) {
      report.unmatched.push_back(id);
      continue;
    }
    const std::string text = ReadFile(candidate);
    RougeBatchEntry entry{id, options.metric == RougeMetric::kL
                                  ? RougeL(text, references)
                                  : RougeN(text, references, options.n)};
    report.mean_precision += entry.score.precision;
    report.mean_recall += entry.score.recall;
    f_scores.push_back(entry.score.f_measure);
    report.entries.push_back(std::move(entry));
  }
  if (!report.entries.empty()) {
    const auto k = static_cast<double>(report.entries.size());
    report.mean_precision /= k;
    report.mean_recall /= k;
    double f_sum = 0;
    for (double f : f_scores) f_sum += f;
    report.mean_f = f_sum / k;
  }
  if (report.entries.size() >= 2) {
    report.f_interval = BootstrapCi(f_scores, options.resamples, options.seed);
  }
  return report;
}

}  // namespace biosumm
