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

#include <doctest.h>

#include <filesystem>
#include <string>
#include <vector>

#include "biosumm/corpus.h"
#include "biosumm/error.h"
#include "biosumm/random.h"

namespace biosumm {
namespace {

const std::filesystem::path kData = BIOSUMM_TEST_DATA;

constexpr std::string_view kMlk =
    "Martin Luther King <nationality>was born in Atlanta, Georgia"
    "</nationality>. He <bio>was assassinated on April 4, 1968</bio>. King "
    "<education>entered the Boston University as a doctoral "
    "student</education>.";

size_t ErrorOffset(std::string_view text) {
  try {
    ParseAnnotated(text);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kInput);
    REQUIRE(e.offset().has_value());
    return *e.offset();
  }
  FAIL("expected a parse error");
  return 0;
}

TEST_CASE("categories") {
  CHECK(kAllCategories.size() == 10);
  std::set<std::string_view> names;
  for (BioCategory c : kAllCategories) {
    names.insert(CategoryName(c));
    CHECK(ParseCategory(CategoryName(c)) == c);
  }
  CHECK(names.size() == 10);
  CHECK(names.count("none"));
  CHECK_FALSE(ParseCategory("career").has_value());
}

TEST_CASE("parse: single span") {
  const auto doc =
      ParseAnnotated("He <bio>was assassinated on April 4, 1968</bio>.");
  CHECK(doc.plain_text == "He was assassinated on April 4, 1968.");
  REQUIRE(doc.spans.size() == 1);
  CHECK(doc.spans[0].category == BioCategory::kBio);
  CHECK(doc.spans[0].text == "was assassinated on April 4, 1968");
}

TEST_CASE("parse: untagged text is unchanged") {
  const auto doc = ParseAnnotated("No tags here.");
  CHECK(doc.plain_text == "No tags here.");
  CHECK(doc.spans.empty());
}

TEST_CASE("parse: offsets re-slice the plain text") {
  const auto doc = ParseAnnotated(
      "<education>entered the Boston University as a doctoral "
      "student</education>");
  REQUIRE(doc.spans.size() == 1);
  const AnnotatedSpan& s = doc.spans[0];
  CHECK(s.category == BioCategory::kEducation);
  CHECK(s.range.begin == 0);
  CHECK(s.range.end == doc.plain_text.size());
  CHECK(doc.plain_text.substr(s.range.begin, s.range.end - s.range.begin) ==
        s.text);
  CHECK(s.text == "entered the Boston University as a doctoral student");
}

TEST_CASE("parse: errors carry offsets") {
  CHECK(ErrorOffset("a <career>x</career>") == 2);
  CHECK(ErrorOffset("a <bio>x</work>") == 8);
  CHECK(ErrorOffset("<bio>a <work>b</work></bio>") == 7);
  CHECK(ErrorOffset("x </bio>") == 2);
  CHECK(ErrorOffset("ab <fame>unclosed") == 3);
  CHECK(ErrorOffset("<bio></bio>") == 0);
  // A '<' that does not form a tag is literal text.
  CHECK(ParseAnnotated("3 < 4 and a<b").plain_text == "3 < 4 and a<b");
}

TEST_CASE("parse: render round trip") {
  const auto doc = ParseAnnotated(kMlk);
  CHECK(RenderAnnotated(doc) == kMlk);

  Rng rng(11);
  const std::vector<std::string> words = {"He", "won", "a", "prize.", " ",
                                          "é", "<", ">", "1968,"};
  for (int trial = 0; trial < 300; ++trial) {
    std::string text;
    for (uint64_t i = 0, n = rng.Below(8); i < n; ++i) {
      const std::string w = words[rng.Below(words.size())] + " ";
      if (rng.Below(3) == 0) {
        const auto c = kAllCategories[rng.Below(kNumBioElements)];
        const std::string tag(CategoryName(c));
        text += "<" + tag + ">" + w + "</" + tag + ">";
      } else {
        text += w;
      }
    }
    AnnotatedDocument doc;
    try {
      doc = ParseAnnotated(text);
    } catch (const Error&) {
      continue;  // stray '<' + letters can form an unknown tag
    }
    CHECK(RenderAnnotated(doc) == text);
    for (const AnnotatedSpan& s : doc.spans) {
      CHECK(s.range.begin < s.range.end);
      CHECK(s.range.end <= doc.plain_text.size());
      CHECK(s.category != BioCategory::kNone);
    }
  }
}

TEST_CASE("project: labels from overlapping spans") {
  const auto doc = ParseAnnotated(kMlk);
  const auto labeled = LabelDocument(doc);
  REQUIRE(labeled.size() == 3);
  CHECK(labeled[0].labels == std::vector{BioCategory::kNationality});
  CHECK(labeled[1].labels == std::vector{BioCategory::kBio});
  CHECK(labeled[2].labels == std::vector{BioCategory::kEducation});

  const auto two = ParseAnnotated(
      "She <work>ran the lab</work> and <fame>won a Nobel</fame>. It rained.");
  const auto l2 = LabelDocument(two);
  REQUIRE(l2.size() == 2);
  CHECK(l2[0].labels == std::vector{BioCategory::kWork, BioCategory::kFame});
  CHECK(l2[0].is_biographical());
  CHECK(l2[1].labels == std::vector{BioCategory::kNone});
  CHECK_FALSE(l2[1].is_biographical());
}

TEST_CASE("project: a span across a boundary labels both sentences") {
  const auto doc =
      ParseAnnotated("He <scandal>was charged. He was jailed</scandal>. Done.");
  const auto labeled = LabelDocument(doc);
  REQUIRE(labeled.size() == 3);
  CHECK(labeled[0].labels == std::vector{BioCategory::kScandal});
  CHECK(labeled[1].labels == std::vector{BioCategory::kScandal});
  CHECK(labeled[2].labels == std::vector{BioCategory::kNone});
}

TEST_CASE("project: never empty and none is alone") {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    std::string text;
    for (uint64_t i = 0, n = 1 + rng.Below(6); i < n; ++i) {
      if (rng.Below(2)) {
        const std::string tag(
            CategoryName(kAllCategories[rng.Below(kNumBioElements)]));
        text += "A <" + tag + ">b c</" + tag + ">. ";
      } else {
        text += "D e f. ";
      }
    }
    for (const auto& ls : LabelDocument(ParseAnnotated(text))) {
      REQUIRE(!ls.labels.empty());
      if (ls.labels.size() > 1) {
        for (BioCategory c : ls.labels) CHECK(c != BioCategory::kNone);
      }
    }
  }
}

TEST_CASE("project: rejects a non-partition") {
  const std::string text = "One two. Three four.";
  auto sentences = SegmentSentences(text);
  std::vector<Sentence> missing = {sentences[1]};
  missing[0].index = 0;
  CHECK_THROWS_AS(ProjectLabels(text, {}, missing), Error);
  std::vector<Sentence> swapped = {sentences[1], sentences[0]};
  CHECK_THROWS_AS(ProjectLabels(text, {}, swapped), Error);
  Sentence bad = sentences[0];
  bad.text = "One tw0.";
  CHECK_THROWS_AS(ProjectLabels(text, {}, std::vector{bad, sentences[1]}),
                  Error);
}

TEST_CASE("corpus stats") {
  CHECK(ComputeCorpusStats({}).total_spans == 0);

  std::vector<AnnotatedDocument> docs = {
      ParseAnnotated("<bio>a</bio> <bio>b</bio> <work>c</work>")};
  const CorpusStats s = ComputeCorpusStats(docs);
  CHECK(s.count(BioCategory::kBio) == 2);
  CHECK(s.count(BioCategory::kWork) == 1);
  CHECK(s.count(BioCategory::kFame) == 0);
  CHECK(s.total_spans == 3);

  std::vector<AnnotatedDocument> mlk = {ParseAnnotated(kMlk)};
  const CorpusStats m = ComputeCorpusStats(mlk);
  CHECK(m.count(BioCategory::kNationality) == 1);
  CHECK(m.count(BioCategory::kBio) == 1);
  CHECK(m.count(BioCategory::kEducation) == 1);
  CHECK(m.total_spans == 3);
  CHECK(m.ToTsv() ==
        "bio\t1\nfame\t0\npersonality\t0\nsocial\t0\neducation\t1\n"
        "nationality\t1\nscandal\t0\npersonal\t0\nwork\t0\nTOTAL\t3\n");

  // Additive over subsets.
  CorpusStats sum = s;
  sum.Add(m);
  std::vector<AnnotatedDocument> both = {docs[0], mlk[0]};
  const CorpusStats joint = ComputeCorpusStats(both);
  CHECK(joint.counts == sum.counts);
  CHECK(joint.total_spans == sum.total_spans);
  int64_t total = 0;
  for (int64_t c : joint.counts) total += c;
  CHECK(total == joint.total_spans);
}

TEST_CASE("corpus directory") {
  const auto docs = LoadCorpusDir(kData / "corpus");
  REQUIRE(docs.size() >= 4);
  for (const auto& d : docs) CHECK(!d.id.empty());
  CHECK(docs.front().id < docs.back().id);
  CHECK_THROWS_AS(LoadCorpusDir(kData / "no-such-dir"), Error);
}

TEST_CASE("split") {
  std::vector<int> docs(130);
  for (int i = 0; i < 130; ++i) docs[i] = i;
  const auto [train, test] =
      SplitCorpus<int>(docs, 100.0 / 130.0, 42);
  CHECK(train.size() == 100);
  CHECK(test.size() == 30);

  std::vector<int> ten(docs.begin(), docs.begin() + 10);
  const auto a = SplitCorpus<int>(ten, 0.5, 9);
  const auto b = SplitCorpus<int>(ten, 0.5, 9);
  CHECK(a == b);
  std::set<int> seen(a.first.begin(), a.first.end());
  for (int x : a.second) CHECK(seen.insert(x).second);
  CHECK(seen.size() == 10);

  CHECK_THROWS_AS(SplitCorpus<int>(std::vector<int>{1}, 0.5, 1), Error);
  CHECK_THROWS_AS(SplitCorpus<int>(ten, 1.0, 1), Error);
  CHECK_THROWS_AS(SplitCorpus<int>(ten, 0.0, 1), Error);
}

}  // namespace
}  // namespace biosumm
