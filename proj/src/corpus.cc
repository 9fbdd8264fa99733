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

#include "biosumm/corpus.h"

#include <algorithm>
#include <sstream>

#include "biosumm/io.h"

namespace biosumm {
namespace {

constexpr std::array<std::string_view, kNumCategories> kCategoryNames = {
    "bio",         "fame",    "personality", "social", "education",
    "nationality", "scandal", "personal",    "work",   "none"};

bool IsTagNameChar(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

struct Tag {
  bool closing = false;
  std::string_view name;
  size_t length = 0;  // bytes including the angle brackets
};

// Recognizes `<name>` or `</name>` at `i`.
std::optional<Tag> MatchTag(std::string_view text, size_t i) {
  size_t j = i + 1;
  Tag tag;
  if (j < text.size() && text[j] == '/') {
    tag.closing = true;
    ++j;
  }
  const size_t name_begin = j;
  while (j < text.size() && IsTagNameChar(text[j])) ++j;
  if (j == name_begin || j >= text.size() || text[j] != '>') {
    return std::nullopt;
  }
  tag.name = text.substr(name_begin, j - name_begin);
  tag.length = j + 1 - i;
  return tag;
}

}  // namespace

std::string_view CategoryName(BioCategory category) {
  return kCategoryNames[static_cast<size_t>(category)];
}

std::optional<BioCategory> ParseCategory(std::string_view name) {
  for (size_t i = 0; i < kNumCategories; ++i) {
    if (kCategoryNames[i] == name) return kAllCategories[i];
  }
  return std::nullopt;
}

AnnotatedDocument ParseAnnotated(std::string_view text) {
  AnnotatedDocument doc;
  doc.plain_text.reserve(text.size());
  std::optional<BioCategory> open;
  size_t open_offset = 0;     // of the opening tag in `text`
  size_t span_begin = 0;      // in plain_text
  size_t i = 0;
  while (i < text.size()) {
    const std::optional<Tag> tag =
        text[i] == '<' ? MatchTag(text, i) : std::nullopt;
    if (!tag) {
      doc.plain_text.push_back(text[i]);
      ++i;
      continue;
    }
    const std::optional<BioCategory> category = ParseCategory(tag->name);
    if (!category || *category == BioCategory::kNone) {
      throw InputError("unknown tag <" + std::string(tag->name) + ">", i);
    }
    if (!tag->closing) {
      if (open) {
        throw InputError("nested tag <" + std::string(tag->name) +
                             "> inside <" +
                             std::string(CategoryName(*open)) + ">",
                         i);
      }
      open = category;
      open_offset = i;
      span_begin = doc.plain_text.size();
    } else {
      if (!open) {
        throw InputError("closing tag </" + std::string(tag->name) +
                             "> without an opening tag",
                         i);
      }
      if (*open != *category) {
        throw InputError("mismatched tag </" + std::string(tag->name) +
                             "> closes <" + std::string(CategoryName(*open)) +
                             ">",
                         i);
      }
      const size_t span_end = doc.plain_text.size();
      if (span_end == span_begin) {
        throw InputError("empty <" + std::string(tag->name) + "> span",
                         open_offset);
      }
      doc.spans.push_back(
          {*open, doc.plain_text.substr(span_begin, span_end - span_begin),
           {span_begin, span_end}});
      open.reset();
    }
    i += tag->length;
  }
  if (open) {
    throw InputError("unclosed tag <" + std::string(CategoryName(*open)) + ">",
                     open_offset);
  }
  return doc;
}

std::string RenderAnnotated(const AnnotatedDocument& doc) {
  std::string out;
  size_t pos = 0;
  for (const AnnotatedSpan& span : doc.spans) {
    out.append(doc.plain_text, pos, span.range.begin - pos);
    out += '<';
    out += CategoryName(span.category);
    out += '>';
    out.append(doc.plain_text, span.range.begin,
               span.range.end - span.range.begin);
    out += "</";
    out += CategoryName(span.category);
    out += '>';
    pos = span.range.end;
  }
  out.append(doc.plain_text, pos, std::string::npos);
  return out;
}

std::vector<LabeledSentence> ProjectLabels(std::string_view plain_text,
                                           std::span<const AnnotatedSpan> spans,
                                           std::span<const Sentence> sentences) {
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' ||
           c == '\v';
  };
  auto check_gap = [&](size_t from, size_t to) {
    for (size_t k = from; k < to; ++k) {
      if (!is_space(plain_text[k])) {
        throw InputError("sentences do not cover the text", k);
      }
    }
  };

  std::vector<LabeledSentence> out;
  out.reserve(sentences.size());
  size_t cursor = 0;
  for (const Sentence& s : sentences) {
    if (s.begin < cursor || s.end() > plain_text.size() ||
        plain_text.substr(s.begin, s.text.size()) != s.text) {
      throw InputError("sentences are not an in-order partition of the text",
                       s.begin);
    }
    check_gap(cursor, s.begin);
    cursor = s.end();

    LabeledSentence ls;
    ls.sentence = s;
    for (const AnnotatedSpan& span : spans) {
      const bool overlaps =
          span.range.begin < s.end() && s.begin < span.range.end;
      if (overlaps && std::find(ls.labels.begin(), ls.labels.end(),
                                span.category) == ls.labels.end()) {
        ls.labels.push_back(span.category);
      }
    }
    if (ls.labels.empty()) ls.labels.push_back(BioCategory::kNone);
    out.push_back(std::move(ls));
  }
  check_gap(cursor, plain_text.size());
  return out;
}

std::vector<LabeledSentence> LabelDocument(const AnnotatedDocument& doc) {
  std::vector<Sentence> sentences = SegmentSentences(doc.plain_text, doc.id);
  if (doc.pos) AttachPosTags(sentences, *doc.pos);
  return ProjectLabels(doc.plain_text, doc.spans, sentences);
}

int64_t CorpusStats::count(BioCategory category) const {
  if (category == BioCategory::kNone) return 0;
  return counts[static_cast<size_t>(category)];
}

void CorpusStats::Add(const CorpusStats& other) {
  for (size_t i = 0; i < kNumBioElements; ++i) counts[i] += other.counts[i];
  total_spans += other.total_spans;
}

std::string CorpusStats::ToTsv() const {
  std::ostringstream out;
  for (size_t i = 0; i < kNumBioElements; ++i) {
    out << kCategoryNames[i] << '\t' << counts[i] << '\n';
  }
  out << "TOTAL\t" << total_spans << '\n';
  return out.str();
}

CorpusStats ComputeCorpusStats(std::span<const AnnotatedDocument> docs) {
  CorpusStats stats;
  for (const AnnotatedDocument& doc : docs) {
    for (const AnnotatedSpan& span : doc.spans) {
      ++stats.counts[static_cast<size_t>(span.category)];
      ++stats.total_spans;
    }
  }
  return stats;
}

std::vector<AnnotatedDocument> LoadCorpusDir(const std::filesystem::path& dir) {
  std::vector<AnnotatedDocument> docs;
  for (const auto& path : ListDocumentFiles(dir)) {
    AnnotatedDocument doc;
    try {
      doc = ParseAnnotated(ReadFile(path));
    } catch (const Error& e) {
      throw Error(e.kind(), path.string() + ": " + e.what());
    }
    doc.id = path.stem().string();
    auto sidecar = path;
    sidecar.replace_extension(".pos");
    if (std::filesystem::exists(sidecar)) {
      doc.pos = ParsePosSidecar(ReadFile(sidecar));
    }
    docs.push_back(std::move(doc));
  }
  return docs;
}

}  // namespace biosumm
