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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <string>
#include <utility>
#include <vector>

#include "biosumm/classify.h"
#include "biosumm/corpus.h"
#include "biosumm/error.h"
#include "biosumm/evaluation.h"
#include "biosumm/extract.h"
#include "biosumm/model_io.h"
#include "biosumm/naive_bayes.h"
#include "biosumm/rouge.h"
#include "biosumm/saliency.h"
#include "biosumm/textproc.h"

namespace py = pybind11;
using namespace biosumm;

namespace {

TaskKind TaskArg(const std::string& name) {
  auto task = ParseTask(name);
  if (!task) throw UsageError("task must be 'ten' or 'two'");
  return *task;
}

FeatureConfig FeatureArg(const std::string& mode) {
  FeatureConfig config;
  auto m = ParseFeatureMode(mode);
  if (!m) throw UsageError("features must be unigram, bigram or stem");
  config.mode = *m;
  return config;
}

}  // namespace

PYBIND11_MODULE(_biosumm, m) {
  m.doc() = "Biographical multi-document summarization";

  static py::exception<Error> py_error(m, "BiosummError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(py_error.ptr(), e.what());
    }
  });

  // textproc
  py::class_<Token>(m, "Token")
      .def_readonly("surface", &Token::surface)
      .def_readonly("stem", &Token::stem)
      .def_readonly("pos", &Token::pos)
      .def("__repr__", [](const Token& t) { return "<Token " + t.surface + ">"; });

  py::class_<Sentence>(m, "Sentence")
      .def_readonly("index", &Sentence::index)
      .def_readonly("doc_id", &Sentence::doc_id)
      .def_readonly("text", &Sentence::text)
      .def_readonly("begin", &Sentence::begin)
      .def_readonly("tokens", &Sentence::tokens)
      .def_property_readonly("byte_len", &Sentence::byte_len);

  py::class_<PersonName>(m, "PersonName")
      .def(py::init(&PersonName::Parse), py::arg("full"))
      .def_readonly("full", &PersonName::full)
      .def_readonly("first", &PersonName::first)
      .def_readonly("last", &PersonName::last);

  m.def("stem", [](const std::string& w) { return Stem(w); }, py::arg("word"));
  m.def("tokenize", [](const std::string& t) { return Tokenize(t); },
        py::arg("text"));
  m.def("segment_sentences",
        [](const std::string& text, const std::string& doc_id) {
          return SegmentSentences(text, doc_id);
        },
        py::arg("text"), py::arg("doc_id") = "");
  m.def("name_variants", &NameVariants, py::arg("name"));
  m.def("mentions_person",
        [](const std::string& text, const PersonName& name) {
          return MentionsPerson(text, name);
        },
        py::arg("text"), py::arg("name"));

  // corpus
  m.def("parse_annotated",
        [](const std::string& text) {
          AnnotatedDocument doc = ParseAnnotated(text);
          py::list spans;
          for (const AnnotatedSpan& s : doc.spans) {
            spans.append(py::make_tuple(std::string(CategoryName(s.category)),
                                        s.text, s.range.begin, s.range.end));
          }
          return py::make_tuple(doc.plain_text, spans);
        },
        py::arg("text"),
        "Returns (plain_text, [(category, text, begin, end), ...]).");
  m.def("corpus_stats",
        [](const std::vector<std::string>& texts) {
          std::vector<AnnotatedDocument> docs;
          for (const auto& t : texts) docs.push_back(ParseAnnotated(t));
          const CorpusStats stats = ComputeCorpusStats(docs);
          py::dict out;
          for (size_t i = 0; i < kNumBioElements; ++i) {
            out[py::str(std::string(CategoryName(kAllCategories[i])))] =
                stats.counts[i];
          }
          out["TOTAL"] = stats.total_spans;
          return out;
        },
        py::arg("annotated_texts"));

  // classify
  m.def("label_names",
        [](const std::string& task) {
          std::vector<std::string> names;
          const TaskKind t = TaskArg(task);
          for (size_t k = 0; k < NumLabels(t); ++k) {
            names.emplace_back(LabelName(t, static_cast<LabelId>(k)));
          }
          return names;
        },
        py::arg("task"));
  m.def("extract_features",
        [](const std::string& text, const std::string& mode) {
          return ExtractFeatures(Tokenize(text), FeatureArg(mode));
        },
        py::arg("text"), py::arg("features") = "unigram");

  py::class_<NaiveBayesModel>(m, "NaiveBayesModel")
      .def_readonly("priors", &NaiveBayesModel::priors)
      .def_readonly("unknown", &NaiveBayesModel::unknown)
      .def_readonly("likelihoods", &NaiveBayesModel::likelihoods);

  m.def("train_naive_bayes",
        [](const std::vector<std::pair<FeatureVector, std::string>>& data,
           const std::string& task) {
          const TaskKind t = TaskArg(task);
          std::vector<TrainingInstance> instances;
          for (const auto& [features, label] : data) {
            auto id = ParseLabel(t, label);
            if (!id) throw UsageError("unknown label '" + label + "'");
            instances.push_back({features, *id});
          }
          return TrainNaiveBayes(instances, t);
        },
        py::arg("data"), py::arg("task"));
  m.def("classify_naive_bayes",
        [](const NaiveBayesModel& model, const FeatureVector& features) {
          const NbDecision d = ClassifyNaiveBayes(model, features);
          return py::make_tuple(std::string(LabelName(model.task, d.label)),
                                d.scores);
        },
        py::arg("model"), py::arg("features"));
  m.def("evaluate_classifier",
        [](const std::vector<int>& predicted,
           const std::vector<std::vector<int>>& gold, bool relaxed,
           size_t num_labels) {
          const auto eval =
              EvaluateClassifier(predicted, gold, relaxed, num_labels);
          return eval.accuracy;
        },
        py::arg("predicted"), py::arg("gold"), py::arg("relaxed"),
        py::arg("num_labels"));
  m.def("random_baseline",
        [](size_t n, const std::string& task, uint64_t seed) {
          return RandomBaseline(n, TaskArg(task), seed);
        },
        py::arg("n"), py::arg("task"), py::arg("seed") = 1);

  // extract
  m.def("word_informativeness",
        [](const std::string& stem, const std::map<std::string, int64_t>& doc,
           const std::map<std::string, int64_t>& world) {
          TermStats d;
          TermStats w;
          for (const auto& [k, v] : doc) d.Add(k, v);
          for (const auto& [k, v] : world) w.Add(k, v);
          return WordInformativeness(stem, d, w);
        },
        py::arg("stem"), py::arg("doc_counts"), py::arg("world_counts"));
  m.def("summarize",
        [](const std::vector<std::pair<std::string, std::string>>& documents,
           const std::string& person, const std::filesystem::path& model,
           const std::filesystem::path& world, size_t budget) {
          std::vector<Document> docs;
          for (const auto& [id, text] : documents) {
            docs.push_back(MakeDocument(id, text));
          }
          SummarizerConfig config;
          config.redundancy.byte_budget = budget;
          const Summary s =
              Summarize(docs, PersonName::Parse(person), LoadModel(model),
                        TermStats::Load(world), config);
          return s.Text();
        },
        py::arg("documents"), py::arg("person"), py::arg("model"),
        py::arg("world"), py::arg("budget") = 665);

  // rouge
  m.def("lcs_length",
        [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
          return LcsLength(a, b);
        },
        py::arg("a"), py::arg("b"));
  auto score_tuple = [](const RougeScore& s) {
    return py::make_tuple(s.precision, s.recall, s.f_measure);
  };
  m.def("rouge_l",
        [score_tuple](const std::string& candidate,
                      const std::vector<std::string>& references) {
          return score_tuple(RougeL(candidate, references));
        },
        py::arg("candidate"), py::arg("references"),
        "Returns (precision, recall, f_measure).");
  m.def("rouge_n",
        [score_tuple](const std::string& candidate,
                      const std::vector<std::string>& references, int n) {
          return score_tuple(RougeN(candidate, references, n));
        },
        py::arg("candidate"), py::arg("references"), py::arg("n") = 1);
  m.def("truncate_bytes", &TruncateBytes, py::arg("text"), py::arg("budget"));
  m.def("bootstrap_ci",
        [](const std::vector<double>& scores, int resamples, uint64_t seed) {
          const ConfidenceInterval ci = BootstrapCi(scores, resamples, seed);
          return py::make_tuple(ci.point, ci.lower, ci.upper);
        },
        py::arg("scores"), py::arg("resamples") = 1000, py::arg("seed") = 1);
}
