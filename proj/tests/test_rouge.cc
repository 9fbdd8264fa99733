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

#include <cmath>
#include <filesystem>
#include <string>
#include <vector>

#include "biosumm/error.h"
#include "biosumm/io.h"
#include "biosumm/random.h"
#include "biosumm/rouge.h"
#include "oracles.h"

namespace biosumm {
namespace {

namespace fs = std::filesystem;

using Words = std::vector<std::string>;

std::vector<std::string> Refs(std::initializer_list<std::string> r) {
  return std::vector<std::string>(r);
}

TEST_CASE("lcs: examples") {
  CHECK(LcsLength(Words{"a", "b", "c"}, Words{"a", "b", "c"}) == 3);
  CHECK(LcsLength(Words{"a", "b"}, Words{"c", "d"}) == 0);
  CHECK(LcsLength(Words{"police", "killed", "the", "gunman"},
                  Words{"police", "kill", "the", "gunman"}) == 3);
  CHECK(LcsLength(Words{}, Words{"x"}) == 0);
}

TEST_CASE("lcs: agrees with subsequence enumeration") {
  Rng rng(1234);
  for (int trial = 0; trial < 500; ++trial) {
    Words a, b;
    const uint64_t alphabet = 1 + rng.Below(5);
    for (uint64_t i = 0, n = rng.Below(11); i < n; ++i) {
      a.push_back(std::string(1, static_cast<char>('a' + rng.Below(alphabet))));
    }
    for (uint64_t i = 0, n = rng.Below(11); i < n; ++i) {
      b.push_back(std::string(1, static_cast<char>('a' + rng.Below(alphabet))));
    }
    const size_t l = LcsLength(a, b);
    CHECK(l == oracle::BruteLcs(a, b));
    CHECK(l == LcsLength(b, a));
    CHECK(LcsLength(a, a) == a.size());
    Words a2 = a, b2 = b;
    a2.push_back("z");
    b2.push_back("z");
    CHECK(LcsLength(a2, b2) >= l);
  }
}

TEST_CASE("rouge-l") {
  const auto same = RougeL("The cat sat.", Refs({"the cat sat"}));
  CHECK(same.precision == 1.0);
  CHECK(same.recall == 1.0);
  CHECK(same.f_measure == 1.0);

  const auto none = RougeL("dogs bark", Refs({"cats meow"}));
  CHECK(none.f_measure == 0.0);
  CHECK_FALSE(none.undefined);

  const auto abc = RougeL("a b c", Refs({"a x c"}));
  CHECK(abc.recall == doctest::Approx(2.0 / 3.0));
  CHECK(abc.precision == doctest::Approx(2.0 / 3.0));
  CHECK(abc.f_measure == doctest::Approx(2.0 / 3.0));

  const auto police =
      RougeL("police killed the gunman", Refs({"police kill the gunman"}));
  CHECK(police.recall == 0.75);
  CHECK(police.precision == 0.75);

  // Best reference by F.
  const auto multi = RougeL("a b c d", Refs({"x y", "a b c d e"}));
  CHECK(multi.recall == doctest::Approx(0.8));
  CHECK(multi.precision == 1.0);

  const auto undef = RougeL("", Refs({""}));
  CHECK(undef.undefined);
  CHECK(undef.f_measure == 0.0);
  CHECK_THROWS_AS(RougeL("a", {}), Error);
}

TEST_CASE("rouge-l: F is 1 exactly for a token-identical reference") {
  Rng rng(6);
  const Words vocab = {"a", "b", "c", "d"};
  for (int trial = 0; trial < 300; ++trial) {
    auto text = [&]() {
      std::string t;
      for (uint64_t i = 0, n = 1 + rng.Below(6); i < n; ++i) {
        t += vocab[rng.Below(vocab.size())] + " ";
      }
      return t;
    };
    const std::string c = text();
    const std::string r = text();
    const auto s = RougeL(c, Refs({r}));
    CHECK((s.f_measure == 1.0) == (RougeTokens(c) == RougeTokens(r)));
    CHECK(s.f_measure >= std::min(s.precision, s.recall) - 1e-15);
    CHECK(s.f_measure <= std::max(s.precision, s.recall) + 1e-15);
    for (double v : {s.precision, s.recall, s.f_measure}) {
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
    }
  }
}

TEST_CASE("rouge-n") {
  const auto clipped = RougeN("a b a", Refs({"a b"}), 1);
  CHECK(clipped.recall == 1.0);
  CHECK(clipped.precision == doctest::Approx(2.0 / 3.0));
  CHECK(RougeN("x y z", Refs({"x y z"}), 2).f_measure == 1.0);
  CHECK(RougeN("x y z", Refs({"p q r"}), 1).f_measure == 0.0);
  const auto too_long = RougeN("a b", Refs({"a b"}), 3);
  CHECK(too_long.undefined);
  CHECK(too_long.f_measure == 0.0);
  CHECK_THROWS_AS(RougeN("a", Refs({"a"}), 0), Error);
}

TEST_CASE("truncate bytes") {
  const std::string s664(664, 'x');
  CHECK(TruncateBytes(s664, 665) == s664);
  CHECK(TruncateBytes("", 10).empty());
  CHECK(TruncateBytes("abc", 0).empty());
  const std::string multi = "ab\xC3\xA9" "cd";  // "abécd"
  CHECK(TruncateBytes(multi, 3) == "ab");
  CHECK(TruncateBytes(multi, 4) == "ab\xC3\xA9");
  const std::string cjk = "日本語";
  for (size_t b = 0; b <= cjk.size(); ++b) {
    const std::string out = TruncateBytes(cjk, b);
    CHECK(out.size() <= b);
    CHECK(out.size() % 3 == 0);
    CHECK(cjk.starts_with(out));
  }
}

TEST_CASE("bootstrap") {
  std::vector<double> equal(20, 0.4);
  const auto flat = BootstrapCi(equal);
  CHECK(flat.point == doctest::Approx(0.4));
  CHECK(flat.lower == doctest::Approx(0.4));
  CHECK(flat.upper == doctest::Approx(0.4));

  const auto single = BootstrapCi(std::vector<double>{0.7});
  CHECK(single.lower == 0.7);
  CHECK(single.upper == 0.7);
  CHECK(single.point == 0.7);

  std::vector<double> xs;
  Rng rng(10);
  for (int i = 0; i < 40; ++i) xs.push_back(rng.Unit());
  const auto a = BootstrapCi(xs, 1000, 3);
  const auto b = BootstrapCi(xs, 1000, 3);
  CHECK(a.lower == b.lower);
  CHECK(a.upper == b.upper);
  CHECK(a.lower <= a.point);
  CHECK(a.point <= a.upper);
  CHECK(a.lower < a.upper);
  CHECK(a.level == 0.95);
  CHECK(a.resamples == 1000);
  CHECK(BootstrapCi(xs, 5000, 3).point == a.point);
  CHECK_THROWS_AS(BootstrapCi(std::vector<double>{}), Error);
  CHECK_THROWS_AS(BootstrapCi(xs, 0, 1), Error);
}

TEST_CASE("bootstrap: endpoints settle as resamples grow") {
  std::vector<double> xs;
  Rng rng(15);
  for (int i = 0; i < 30; ++i) xs.push_back(rng.Unit());
  auto spread = [&](int resamples) {
    double sum = 0, sum_sq = 0;
    const int seeds = 40;
    for (int seed = 1; seed <= seeds; ++seed) {
      const double lo = BootstrapCi(xs, resamples, seed).lower;
      sum += lo;
      sum_sq += lo * lo;
    }
    const double mean = sum / seeds;
    return sum_sq / seeds - mean * mean;
  };
  CHECK(spread(2000) < spread(50));
}

TEST_CASE("batch scoring over directories") {
  const fs::path root = fs::temp_directory_path() / "biosumm_rouge_batch";
  fs::remove_all(root);
  fs::create_directories(root / "cand");
  fs::create_directories(root / "ref" / "b");
  WriteFile(root / "cand" / "a", "the cat sat on the mat");
  WriteFile(root / "cand" / "b", "a dog barked");
  WriteFile(root / "cand" / "c", "no reference here");
  WriteFile(root / "ref" / "a", "the cat sat on the mat");
  WriteFile(root / "ref" / "b" / "r1", "a cat meowed");
  WriteFile(root / "ref" / "b" / "r2", "the dog barked loudly");

  const auto report = ScoreDirectories(root / "cand", root / "ref", {});
  REQUIRE(report.entries.size() == 2);
  CHECK(report.entries[0].id == "a");
  CHECK(report.entries[0].score.f_measure == 1.0);
  // r2 wins: LCS 2 ("dog barked"), P 2/3, R 2/4.
  CHECK(report.entries[1].score.precision == doctest::Approx(2.0 / 3.0));
  CHECK(report.entries[1].score.recall == doctest::Approx(0.5));
  CHECK(report.unmatched == std::vector<std::string>{"c"});
  REQUIRE(report.f_interval.has_value());
  CHECK(report.f_interval->lower <= report.mean_f);
  CHECK(report.mean_f <= report.f_interval->upper);

  const std::string tsv = report.ToTsv();
  CHECK(tsv.starts_with("# metric=rouge-l"));
  CHECK(tsv.find("\na\t1.000000\t1.000000\t1.000000\n") != std::string::npos);
  CHECK(tsv.find("\nMEAN\t") != std::string::npos);

  const auto self = ScoreDirectories(root / "ref", root / "ref", {});
  for (const auto& e : self.entries) CHECK(e.score.f_measure == 1.0);

  fs::remove_all(root / "cand");
  fs::create_directories(root / "cand");
  WriteFile(root / "cand" / "a", "the cat");
  const auto lone = ScoreDirectories(root / "cand", root / "ref", {});
  CHECK_FALSE(lone.f_interval.has_value());
  CHECK(lone.ToTsv().find("MEAN\t") != std::string::npos);
  fs::remove_all(root);
}

}  // namespace
}  // namespace biosumm
