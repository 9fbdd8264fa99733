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

// Sentence segmentation, tokenization, stemming and person-name matching.
// Everything here is deterministic and byte-oriented over UTF-8 input.

#ifndef BIOSUMM_TEXTPROC_H_
#define BIOSUMM_TEXTPROC_H_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace biosumm {

struct Token {
  std::string surface;             // as written, case preserved
  std::string stem;                // lowercase, never empty
  std::optional<std::string> pos;  // only when a POS sidecar was attached
};

struct Sentence {
  size_t index = 0;    // position within its document
  std::string doc_id;
  std::string text;
  size_t begin = 0;    // byte offset of `text` in the source document
  std::vector<Token> tokens;

  size_t byte_len() const { return text.size(); }
  size_t end() const { return begin + text.size(); }
};

// Half-open byte range [begin, end).
struct ByteRange {
  size_t begin = 0;
  size_t end = 0;
  bool operator==(const ByteRange&) const = default;
};

class Stemmer {
 public:
  virtual ~Stemmer() = default;
  virtual std::string Stem(std::string_view word) const = 0;
};

// Lowercases, then strips the longest suffix from a fixed table
// (ations, ation, ness, ments, ment, ings, ing, ies, ed, es, s) provided at
// least three bytes remain.
class SuffixStemmer : public Stemmer {
 public:
  std::string Stem(std::string_view word) const override;
};

const Stemmer& DefaultStemmer();

// Stems with the default stemmer. Throws on an empty word.
std::string Stem(std::string_view word);

std::string LowerAscii(std::string_view text);

// Byte ranges of the tokens of `text`: maximal runs of letters, digits and
// apostrophes, with leading and trailing apostrophes trimmed. Runs with no
// letter or digit are dropped.
std::vector<ByteRange> TokenRanges(std::string_view text);

std::vector<Token> Tokenize(std::string_view text,
                            const Stemmer& stemmer = DefaultStemmer());

// Splits at '.', '!' or '?' (optionally followed by closing quotes or
// brackets) when followed by whitespace and then an uppercase letter, possibly
// behind an opening quote. Known abbreviations and single-letter initials
// suppress the split. Sentence texts never start or end with whitespace.
std::vector<Sentence> SegmentSentences(std::string_view text,
                                       std::string_view doc_id = {},
                                       const Stemmer& stemmer = DefaultStemmer());

struct PersonName {
  std::string full;
  std::string first;
  std::string last;

  // First and final whitespace-separated words of `full`.
  static PersonName Parse(std::string_view full);
};

// Exactly {first, last, full}.
std::set<std::string> NameVariants(const PersonName& name);

// True iff some variant occurs case-sensitively in `text` starting at a token
// start and ending at a token end. "Armstrong's" is a single token, so it does
// not count as a mention of "Armstrong".
bool MentionsPerson(std::string_view text, const PersonName& name);
bool MentionsPerson(const Sentence& sentence, const PersonName& name);
bool MentionsAny(std::string_view text, const std::set<std::string>& variants);

// POS sidecar: one `token<TAB>tag` pair per line.
using PosSidecar = std::vector<std::pair<std::string, std::string>>;

PosSidecar ParsePosSidecar(std::string_view content);

// Attaches tags to the tokens of `sentences` in order. The sidecar must align
// 1:1 with the tokens, surface for surface.
void AttachPosTags(std::vector<Sentence>& sentences, const PosSidecar& tags);

}  // namespace biosumm

#endif  // BIOSUMM_TEXTPROC_H_
