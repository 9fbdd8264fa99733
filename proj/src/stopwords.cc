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

#include "biosumm/stopwords.h"

#include "biosumm/io.h"
#include "biosumm/textproc.h"

namespace biosumm {

const Stopwords& DefaultStopwords() {
  static const auto* kWords = new Stopwords{
      "a",       "about",   "above",   "after",   "again",   "against",
      "all",     "also",    "am",      "an",      "and",     "any",
      "are",     "as",      "at",      "be",      "because", "been",
      "before",  "being",   "below",   "between", "both",    "but",
      "by",      "can",     "could",   "did",     "do",      "does",
      "doing",   "down",    "during",  "each",    "few",     "for",
      "from",    "further", "had",     "has",     "have",    "having",
      "he",      "her",     "here",    "hers",    "herself", "him",
      "himself", "his",     "how",     "i",       "if",      "in",
      "into",    "is",      "it",      "its",     "itself",  "just",
      "me",      "more",    "most",    "my",      "myself",  "no",
      "nor",     "not",     "now",     "of",      "off",     "on",
      "once",    "only",    "or",      "other",   "our",     "ours",
      "out",     "over",    "own",     "same",    "she",     "should",
      "so",      "some",    "such",    "than",    "that",    "the",
      "their",   "theirs",  "them",    "then",    "there",   "these",
      "they",    "this",    "those",   "through", "to",      "too",
      "under",   "until",   "up",      "very",    "was",     "we",
      "were",    "what",    "when",    "where",   "which",   "while",
      "who",     "whom",    "why",     "will",    "with",    "would",
      "you",     "your",    "said",    "says",    "mr",      "mrs",
      "ms",      "one",     "may",     "might",   "must",    "shall",
      "upon",    "yet",     "s",       "t",       "it's",    "he's",
      "she's",   "there's", "that's",  "i'm",     "don't",   "didn't"};
  return *kWords;
}

Stopwords ParseStopwords(std::string_view content) {
  Stopwords words;
  size_t start = 0;
  while (start < content.size()) {
    size_t nl = content.find('\n', start);
    if (nl == std::string_view::npos) nl = content.size();
    std::string_view line = content.substr(start, nl - start);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' ||
                             line.back() == '\t')) {
      line.remove_suffix(1);
    }
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) {
      line.remove_prefix(1);
    }
    if (!line.empty() && line.front() != '#') words.insert(LowerAscii(line));
    start = nl + 1;
  }
  return words;
}

Stopwords LoadStopwords(const std::filesystem::path& path) {
  return ParseStopwords(ReadFile(path));
}

bool IsStopword(const Stopwords& stopwords, std::string_view surface) {
  return stopwords.contains(LowerAscii(surface));
}

}  // namespace biosumm
