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

#include "biosumm/textproc.h"

#include <algorithm>
#include <array>
#include <string>
#include <unordered_set>

#include "biosumm/error.h"

namespace biosumm {
namespace {

struct Decoded {
  char32_t cp;
  size_t len;
};

// Lenient UTF-8 decoding: a malformed byte decodes as U+FFFD of length 1.
Decoded DecodeAt(std::string_view s, size_t i) {
  const auto b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) return {b0, 1};
  size_t len = 0;
  char32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return {0xFFFD, 1};
  }
  if (i + len > s.size()) return {0xFFFD, 1};
  for (size_t k = 1; k < len; ++k) {
    const auto b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0) != 0x80) return {0xFFFD, 1};
    cp = (cp << 6) | (b & 0x3F);
  }
  return {cp, len};
}

bool IsAsciiAlnum(char32_t c) {
  return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'z') ||
         (c >= 'A' && c <= 'Z');
}

bool IsApostrophe(char32_t c) { return c == U'\'' || c == U'’'; }

// Letters and digits. Outside ASCII everything counts as a letter except the
// Latin-1 punctuation block and the common punctuation/symbol ranges.
bool IsWordChar(char32_t c) {
  if (c < 0x80) return IsAsciiAlnum(c);
  if (c <= 0xBF || c == 0xD7 || c == 0xF7) return false;
  if (c >= 0x2000 && c <= 0x2BFF) return false;
  if (c >= 0x3000 && c <= 0x303F) return false;
  if (c >= 0xFE30 && c <= 0xFE4F) return false;
  if (c >= 0xFF00 && c <= 0xFF0F) return false;
  if (c == 0xFEFF || c == 0xFFFD) return false;
  return true;
}

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
         c == '\v';
}

bool IsUpper(char c) { return c >= 'A' && c <= 'Z'; }

const std::unordered_set<std::string_view>& Abbreviations() {
  static const auto* kAbbrev = new std::unordered_set<std::string_view>{
      "Dr.",   "Mr.",   "Mrs.",  "Ms.",   "St.",  "U.S.", "vs.",  "etc.",
      "Jr.",   "Sr.",   "Prof.", "Gen.",  "Sen.", "Rep.", "Gov.", "Lt.",
      "Col.",  "Capt.", "Sgt.",  "Mt.",   "Inc.", "Corp.", "Co.", "Ltd.",
      "No.",   "Jan.",  "Feb.",  "Mar.",  "Apr.", "Aug.", "Sep.", "Sept.",
      "Oct.",  "Nov.",  "Dec.",  "U.K.",  "U.N.", "a.m.", "p.m.", "e.g.",
      "i.e.",  "Rev.",  "Hon.",  "Mass.", "Calif.", "Ft."};
  return *kAbbrev;
}

// Multi-byte quote marks that may follow a terminator or precede a sentence.
constexpr std::string_view kRightDoubleQuote = "”";
constexpr std::string_view kRightSingleQuote = "’";
constexpr std::string_view kLeftDoubleQuote = "“";
constexpr std::string_view kLeftSingleQuote = "‘";

size_t SkipClosers(std::string_view s, size_t i) {
  while (i < s.size()) {
    const char c = s[i];
    if (c == '"' || c == '\'' || c == ')' || c == ']') {
      ++i;
    } else if (s.substr(i).starts_with(kRightDoubleQuote) ||
               s.substr(i).starts_with(kRightSingleQuote)) {
      i += 3;
    } else {
      break;
    }
  }
  return i;
}

size_t SkipOpeners(std::string_view s, size_t i) {
  while (i < s.size()) {
    const char c = s[i];
    if (c == '"' || c == '\'' || c == '(' || c == '[') {
      ++i;
    } else if (s.substr(i).starts_with(kLeftDoubleQuote) ||
               s.substr(i).starts_with(kLeftSingleQuote)) {
      i += 3;
    } else {
      break;
    }
  }
  return i;
}

// True if the '.' at `dot` ends an abbreviation or an initial ("F.").
bool EndsAbbreviation(std::string_view s, size_t sentence_begin, size_t dot) {
  size_t b = dot;
  while (b > sentence_begin && !IsSpace(s[b - 1])) --b;
  b = SkipOpeners(s, b);
  if (b > dot) return false;
  const std::string_view word = s.substr(b, dot - b + 1);
  if (Abbreviations().contains(word)) return true;
  return word.size() == 2 && IsUpper(word[0]);
}

size_t Utf8Length(std::string_view s, size_t i) { return DecodeAt(s, i).len; }

}  // namespace

std::string LowerAscii(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

std::string SuffixStemmer::Stem(std::string_view word) const {
  static constexpr std::array<std::string_view, 11> kSuffixes = {
      "ations", "ation", "ness", "ments", "ment", "ings",
      "ing",    "ies",   "ed",   "es",    "s"};
  constexpr size_t kMinRemaining = 3;
  std::string lower = LowerAscii(word);
  size_t best = 0;
  for (std::string_view suffix : kSuffixes) {
    if (suffix.size() > best && lower.size() >= suffix.size() + kMinRemaining &&
        std::string_view(lower).ends_with(suffix)) {
      best = suffix.size();
    }
  }
  lower.resize(lower.size() - best);
  return lower;
}

const Stemmer& DefaultStemmer() {
  static const SuffixStemmer kStemmer;
  return kStemmer;
}

std::string Stem(std::string_view word) {
  if (word.empty()) throw UsageError("cannot stem an empty word");
  return DefaultStemmer().Stem(word);
}

std::vector<ByteRange> TokenRanges(std::string_view text) {
  std::vector<ByteRange> ranges;
  size_t i = 0;
  while (i < text.size()) {
    const Decoded d = DecodeAt(text, i);
    if (!IsWordChar(d.cp) && !IsApostrophe(d.cp)) {
      i += d.len;
      continue;
    }
    // Collect the run, remembering the first and last word characters so
    // surrounding apostrophes fall away.
    size_t first_word = std::string_view::npos;
    size_t last_word_end = 0;
    while (i < text.size()) {
      const Decoded r = DecodeAt(text, i);
      if (IsWordChar(r.cp)) {
        if (first_word == std::string_view::npos) first_word = i;
        last_word_end = i + r.len;
      } else if (!IsApostrophe(r.cp)) {
        break;
      }
      i += r.len;
    }
    if (first_word != std::string_view::npos) {
      ranges.push_back({first_word, last_word_end});
    }
  }
  return ranges;
}

std::vector<Token> Tokenize(std::string_view text, const Stemmer& stemmer) {
  std::vector<Token> tokens;
  for (const ByteRange& r : TokenRanges(text)) {
    Token t;
    t.surface = std::string(text.substr(r.begin, r.end - r.begin));
    t.stem = stemmer.Stem(t.surface);
    tokens.push_back(std::move(t));
  }
  return tokens;
}

std::vector<Sentence> SegmentSentences(std::string_view text,
                                       std::string_view doc_id,
                                       const Stemmer& stemmer) {
  std::vector<Sentence> sentences;
  auto emit = [&](size_t b, size_t e) {
    while (e > b && IsSpace(text[e - 1])) --e;
    if (e <= b) return;
    Sentence s;
    s.index = sentences.size();
    s.doc_id = std::string(doc_id);
    s.begin = b;
    s.text = std::string(text.substr(b, e - b));
    s.tokens = Tokenize(s.text, stemmer);
    sentences.push_back(std::move(s));
  };

  size_t start = 0;
  while (start < text.size() && IsSpace(text[start])) ++start;
  size_t i = start;
  while (i < text.size()) {
    const char c = text[i];
    if (c != '.' && c != '!' && c != '?') {
      i += Utf8Length(text, i);
      continue;
    }
    size_t j = i + 1;
    while (j < text.size() &&
           (text[j] == '.' || text[j] == '!' || text[j] == '?')) {
      ++j;
    }
    const size_t last_terminator = j - 1;
    j = SkipClosers(text, j);
    size_t k = j;
    while (k < text.size() && IsSpace(text[k])) ++k;
    const size_t next = SkipOpeners(text, k);
    const bool boundary =
        k > j && next < text.size() && IsUpper(text[next]);
    if (boundary && !(text[last_terminator] == '.' && last_terminator == i &&
                      EndsAbbreviation(text, start, i))) {
      emit(start, j);
      start = k;
      i = k;
    } else {
      i = j;
    }
  }
  emit(start, text.size());
  return sentences;
}

PersonName PersonName::Parse(std::string_view full) {
  std::vector<std::string> words;
  size_t i = 0;
  while (i < full.size()) {
    while (i < full.size() && IsSpace(full[i])) ++i;
    const size_t b = i;
    while (i < full.size() && !IsSpace(full[i])) ++i;
    if (i > b) words.emplace_back(full.substr(b, i - b));
  }
  if (words.empty()) throw UsageError("person name is empty");
  PersonName name;
  for (size_t w = 0; w < words.size(); ++w) {
    if (w) name.full += ' ';
    name.full += words[w];
  }
  name.first = words.front();
  name.last = words.back();
  return name;
}

std::set<std::string> NameVariants(const PersonName& name) {
  return {name.first, name.last, name.full};
}

bool MentionsAny(std::string_view text, const std::set<std::string>& variants) {
  const std::vector<ByteRange> ranges = TokenRanges(text);
  std::vector<size_t> starts;
  std::vector<size_t> ends;
  for (const ByteRange& r : ranges) {
    starts.push_back(r.begin);
    ends.push_back(r.end);
  }
  for (const std::string& v : variants) {
    if (v.empty()) continue;
    for (size_t pos = text.find(v); pos != std::string_view::npos;
         pos = text.find(v, pos + 1)) {
      if (std::binary_search(starts.begin(), starts.end(), pos) &&
          std::binary_search(ends.begin(), ends.end(), pos + v.size())) {
        return true;
      }
    }
  }
  return false;
}

bool MentionsPerson(std::string_view text, const PersonName& name) {
  return MentionsAny(text, NameVariants(name));
}

bool MentionsPerson(const Sentence& sentence, const PersonName& name) {
  return MentionsPerson(sentence.text, name);
}

PosSidecar ParsePosSidecar(std::string_view content) {
  PosSidecar out;
  size_t line_start = 0;
  size_t line_no = 0;
  while (line_start < content.size()) {
    size_t nl = content.find('\n', line_start);
    if (nl == std::string_view::npos) nl = content.size();
    std::string_view line = content.substr(line_start, nl - line_start);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      const size_t tab = line.find('\t');
      if (tab == std::string_view::npos || tab == 0 || tab + 1 == line.size()) {
        throw InputError("POS sidecar line " + std::to_string(line_no) +
                             " is not token<TAB>tag",
                         line_start);
      }
      out.emplace_back(std::string(line.substr(0, tab)),
                       std::string(line.substr(tab + 1)));
    }
    line_start = nl + 1;
  }
  return out;
}

void AttachPosTags(std::vector<Sentence>& sentences, const PosSidecar& tags) {
  size_t n = 0;
  for (const Sentence& s : sentences) n += s.tokens.size();
  if (n != tags.size()) {
    throw InputError("POS sidecar has " + std::to_string(tags.size()) +
                     " entries but the text has " + std::to_string(n) +
                     " tokens");
  }
  size_t k = 0;
  for (Sentence& s : sentences) {
    for (Token& t : s.tokens) {
      if (tags[k].first != t.surface) {
        throw InputError("POS sidecar entry " + std::to_string(k + 1) + " '" +
                         tags[k].first + "' does not match token '" +
                         t.surface + "'");
      }
      t.pos = tags[k].second;
      ++k;
    }
  }
}

}  // namespace biosumm
