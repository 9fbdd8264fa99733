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

#include "biosumm/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <iostream>
#include <sstream>

#include "biosumm/corpus.h"
#include "biosumm/error.h"
#include "biosumm/evaluation.h"
#include "biosumm/extract.h"
#include "biosumm/io.h"
#include "biosumm/rouge.h"
#include "biosumm/stopwords.h"

namespace biosumm {
namespace {

namespace fs = std::filesystem;

// Shortest text that reads back as the same double.
std::string Real(double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

std::string Fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

template <typename T>
T ParseNumber(const std::string& key, const std::string& value) {
  T v{};
  auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
  if (ec != std::errc() || p != value.data() + value.size()) {
    throw UsageError("bad value '" + value + "' for " + key);
  }
  return v;
}

bool ParseBool(const std::string& key, const std::string& value) {
  if (value == "1" || value == "true" || value == "yes" || value == "on") {
    return true;
  }
  if (value == "0" || value == "false" || value == "no" || value == "off") {
    return false;
  }
  throw UsageError("bad boolean '" + value + "' for " + key);
}

void RequireFile(const std::optional<fs::path>& path, const std::string& what) {
  if (!path) throw UsageError("missing --" + what + " PATH");
  std::error_code ec;
  if (!fs::is_regular_file(*path, ec)) {
    throw InputError(what + " file not found: " + path->string());
  }
}

FeatureConfig MakeFeatureConfig(const RunConfig& cfg) {
  FeatureConfig fc;
  fc.mode = cfg.features;
  fc.pos_augmented = cfg.pos;
  fc.hypernym_weight = cfg.hypernym_weight;
  if (cfg.hypernyms) {
    RequireFile(cfg.hypernyms, "hypernyms");
    fc.hypernyms = LoadHypernymLexicon(*cfg.hypernyms);
  }
  if (cfg.cue_words) {
    RequireFile(cfg.cue_words, "cue_words");
    fc.cue_words = LoadStopwords(*cfg.cue_words);
  }
  fc.Validate();
  return fc;
}

std::vector<LabelId> GoldLabels(TaskKind task, const LabeledSentence& ls) {
  std::vector<LabelId> gold;
  for (BioCategory c : ls.labels) {
    const LabelId id = ToTaskLabel(task, c);
    if (std::find(gold.begin(), gold.end(), id) == gold.end()) {
      gold.push_back(id);
    }
  }
  return gold;
}

std::vector<SaliencySample> SaliencySamples(
    std::span<const LabeledSentence> sentences,
    const SaliencyLexicons& lexicons) {
  std::vector<SaliencySample> samples;
  for (const LabeledSentence& ls : sentences) {
    samples.push_back({ComputeSaliency(ls.sentence, lexicons),
                       ls.is_biographical() ? kBio2 : kNone2});
  }
  return samples;
}

void WriteEvaluation(std::ostream& out, const std::string& name,
                     TaskKind task, std::span<const LabelId> predicted,
                     std::span<const std::vector<LabelId>> gold) {
  const size_t n_labels = NumLabels(task);
  const auto strict = EvaluateClassifier(predicted, gold, false, n_labels);
  const auto relaxed = EvaluateClassifier(predicted, gold, true, n_labels);
  out << name << "\tstrict\t" << Fixed(strict.accuracy) << "\trelaxed\t"
      << Fixed(relaxed.accuracy) << '\n';
  for (size_t k = 0; k < n_labels; ++k) {
    out << name << '\t' << LabelName(task, static_cast<LabelId>(k))
        << "\tprecision\t" << Fixed(relaxed.per_label[k].precision)
        << "\trecall\t" << Fixed(relaxed.per_label[k].recall) << '\n';
  }
}

int CmdCorpusStats(const std::vector<std::string>& dirs, std::ostream& out) {
  CorpusStats stats;
  for (const std::string& dir : dirs) {
    const auto docs = LoadCorpusDir(dir);
    stats.Add(ComputeCorpusStats(docs));
  }
  out << stats.ToTsv();
  return kExitOk;
}

int CmdTrain(const std::string& corpus_dir, const RunConfig& cfg,
             std::ostream& out) {
  if (!cfg.model) throw UsageError("missing --model PATH for the output model");
  if (cfg.task == TaskKind::kTenClass &&
      cfg.classifier != ClassifierKind::kNaiveBayes) {
    throw UsageError("svm and tree classifiers need --task two");
  }
  const FeatureConfig features = MakeFeatureConfig(cfg);
  const std::vector<AnnotatedDocument> docs = LoadCorpusDir(corpus_dir);
  if (docs.empty()) throw InputError("no documents in " + corpus_dir);

  std::vector<AnnotatedDocument> train;
  std::vector<AnnotatedDocument> test;
  if (cfg.train_fraction >= 1.0) {
    train = docs;
  } else {
    std::tie(train, test) = SplitCorpus<AnnotatedDocument>(
        docs, cfg.train_fraction, cfg.seed);
  }
  if (train.empty()) throw UsageError("training split is empty");

  ClassifierBundle bundle;
  bundle.task = cfg.task;
  bundle.features = features;
  bundle.unit = cfg.units;
  bundle.active = cfg.classifier;
  const auto instances =
      BuildTrainingInstances(train, cfg.task, features, cfg.units);
  bundle.nb = TrainNaiveBayes(instances, cfg.task);

  std::vector<LabeledSentence> train_sentences;
  for (const auto& doc : train) {
    for (auto& ls : LabelDocument(doc)) train_sentences.push_back(std::move(ls));
  }
  if (cfg.task == TaskKind::kTwoClass) {
    bundle.lexicons = BuildSaliencyLexicons(
        train_sentences, cfg.lexicon_min_count, cfg.lexicon_purity);
    const auto samples = SaliencySamples(train_sentences, *bundle.lexicons);
    bundle.svm = TrainLinearSvm(samples, {cfg.svm_reg, cfg.svm_epochs, cfg.seed});
    bundle.tree = TrainDecisionTree(
        samples, {cfg.tree_max_depth, static_cast<size_t>(cfg.tree_min_leaf)});
  }
  SaveModel(bundle, *cfg.model);

  out << "documents\ttrain\t" << train.size() << "\ttest\t" << test.size()
      << '\n';
  out << "instances\t" << instances.size() << "\tvocabulary\t"
      << bundle.nb.likelihoods.size() << '\n';
  std::vector<LabeledSentence> test_sentences;
  for (const auto& doc : test) {
    for (auto& ls : LabelDocument(doc)) test_sentences.push_back(std::move(ls));
  }
  if (test_sentences.empty()) return kExitOk;

  std::vector<std::vector<LabelId>> gold;
  for (const auto& ls : test_sentences) gold.push_back(GoldLabels(cfg.task, ls));
  std::vector<LabelId> predicted;
  auto report = [&](const std::string& name, auto&& classify) {
    predicted.clear();
    for (const auto& ls : test_sentences) predicted.push_back(classify(ls));
    WriteEvaluation(out, name, cfg.task, predicted, gold);
  };
  const auto baseline = RandomBaseline(test_sentences.size(), cfg.task, cfg.seed);
  size_t index = 0;
  report("baseline", [&](const LabeledSentence&) { return baseline[index++]; });
  report("nb", [&](const LabeledSentence& ls) {
    return ClassifyNaiveBayes(bundle.nb, ExtractFeatures(ls.sentence, features))
        .label;
  });
  if (cfg.task == TaskKind::kTwoClass) {
    report("svm", [&](const LabeledSentence& ls) {
      return PredictSvm(*bundle.svm, ComputeSaliency(ls.sentence, *bundle.lexicons));
    });
    report("tree", [&](const LabeledSentence& ls) {
      return PredictTree(*bundle.tree,
                         ComputeSaliency(ls.sentence, *bundle.lexicons));
    });
  }
  return kExitOk;
}

int CmdBuildWorldStats(const std::vector<std::string>& dirs,
                       const std::optional<std::string>& output,
                       std::ostream& out) {
  TermStats stats;
  for (const std::string& dir : dirs) {
    for (const fs::path& file : ListDocumentFiles(dir)) {
      stats.AddText(ReadFile(file));
    }
  }
  if (output) {
    WriteFile(*output, stats.ToTsv());
  } else {
    out << stats.ToTsv();
  }
  return kExitOk;
}

int CmdSummarize(const std::string& docs_dir, const std::string& person,
                 const std::optional<std::string>& sidecar,
                 const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.budget < 1) throw UsageError("--budget must be at least 1");
  RequireFile(cfg.world, "world");
  RequireFile(cfg.model, "model");
  const PersonName name = PersonName::Parse(person);
  const TermStats world = TermStats::Load(*cfg.world);
  ClassifierBundle classifier = LoadModel(*cfg.model);
  const std::vector<Document> docs = LoadDocumentDir(docs_dir);
  if (docs.empty()) throw InputError("no documents in " + docs_dir);

  SummarizerConfig sc;
  sc.redundancy.byte_budget = static_cast<size_t>(cfg.budget);
  if (cfg.pool_k) sc.redundancy.pool_k = static_cast<size_t>(*cfg.pool_k);
  sc.redundancy.min_similarity = cfg.min_similarity;
  if (cfg.stopwords) {
    RequireFile(cfg.stopwords, "stopwords");
    sc.stopwords = LoadStopwords(*cfg.stopwords);
  }
  const Summary summary = Summarize(docs, name, classifier, world, sc);
  if (summary.status == SummaryStatus::kNoCandidates) {
    err << "biosumm: warning: no candidate sentences for '" << name.full
        << "'\n";
  }
  out << summary.Text() << '\n';

  if (sidecar) {
    std::ostringstream side;
    side << "# person=" << name.full << '\n';
    // Classifier settings come from the model, not from this invocation.
    RunConfig echo = cfg;
    echo.task = classifier.task;
    echo.features = classifier.features.mode;
    echo.pos = classifier.features.pos_augmented;
    echo.hypernym_weight = classifier.features.hypernym_weight;
    echo.units = classifier.unit;
    echo.classifier = classifier.active;
    for (const auto& [key, value] : echo.Effective()) {
      side << "# " << key << '=' << value << '\n';
    }
    side << "# total_bytes=" << summary.total_bytes << '\n';
    side << "doc_id\tsentence\tscore\ttruncated\n";
    for (const SummarySentence& s : summary.sentences) {
      side << s.sentence.doc_id << '\t' << s.sentence.index << '\t'
           << Real(s.score) << '\t' << (s.truncated ? 1 : 0) << '\n';
    }
    WriteFile(*sidecar, side.str());
  }
  return kExitOk;
}

int CmdRouge(const std::string& candidates, const std::string& references,
             const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  RougeBatchOptions options;
  options.resamples = cfg.resamples;
  options.seed = cfg.seed;
  if (cfg.metric == "l" || cfg.metric == "L") {
    options.metric = RougeMetric::kL;
  } else {
    options.metric = RougeMetric::kN;
    options.n = ParseNumber<int>("metric", cfg.metric);
    if (options.n < 1) throw UsageError("--metric must be l or n >= 1");
  }
  const RougeBatchReport report =
      ScoreDirectories(candidates, references, options);
  for (const std::string& id : report.unmatched) {
    err << "biosumm: warning: no reference for '" << id << "', skipped\n";
  }
  out << report.ToTsv();
  return kExitOk;
}

std::string_view KindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage:
      return "usage";
    case ErrorKind::kInput:
      return "input";
    case ErrorKind::kInvariant:
      return "internal";
  }
  return "internal";
}

int ExitCode(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kUsage:
      return kExitUsage;
    case ErrorKind::kInput:
      return kExitInput;
    case ErrorKind::kInvariant:
      return kExitInternal;
  }
  return kExitInternal;
}

void ReportError(std::ostream& err, std::string_view kind, std::string msg) {
  std::replace(msg.begin(), msg.end(), '\n', ' ');
  err << "biosumm: error[" << kind << "]: " << msg << '\n';
}

}  // namespace

void RunConfig::Set(const std::string& key, const std::string& value) {
  if (key == "task") {
    auto t = ParseTask(value);
    if (!t) throw UsageError("--task must be ten or two");
    task = *t;
  } else if (key == "features") {
    auto m = ParseFeatureMode(value);
    if (!m) throw UsageError("--features must be unigram, bigram or stem");
    features = *m;
  } else if (key == "pos") {
    pos = ParseBool(key, value);
  } else if (key == "hypernyms") {
    hypernyms = value;
  } else if (key == "hypernym_weight") {
    hypernym_weight = ParseNumber<double>(key, value);
  } else if (key == "cue_words") {
    cue_words = value;
  } else if (key == "units") {
    if (value != "sentence" && value != "phrase") {
      throw UsageError("units must be sentence or phrase");
    }
    units = value == "phrase" ? TrainingUnit::kPhrase : TrainingUnit::kSentence;
  } else if (key == "classifier") {
    auto c = ParseClassifierKind(value);
    if (!c) throw UsageError("classifier must be nb, svm or tree");
    classifier = *c;
  } else if (key == "train_fraction") {
    train_fraction = ParseNumber<double>(key, value);
    if (!(train_fraction > 0.0 && train_fraction <= 1.0)) {
      throw UsageError("train_fraction must lie in (0, 1]");
    }
  } else if (key == "lexicon_min_count") {
    lexicon_min_count = ParseNumber<int64_t>(key, value);
  } else if (key == "lexicon_purity") {
    lexicon_purity = ParseNumber<double>(key, value);
  } else if (key == "svm_reg") {
    svm_reg = ParseNumber<double>(key, value);
  } else if (key == "svm_epochs") {
    svm_epochs = ParseNumber<int>(key, value);
  } else if (key == "tree_max_depth") {
    tree_max_depth = ParseNumber<int>(key, value);
  } else if (key == "tree_min_leaf") {
    tree_min_leaf = ParseNumber<int64_t>(key, value);
  } else if (key == "budget") {
    budget = ParseNumber<int64_t>(key, value);
    if (budget < 1) throw UsageError("budget must be at least 1");
  } else if (key == "pool_k") {
    pool_k = ParseNumber<int64_t>(key, value);
    if (*pool_k < 1) throw UsageError("pool_k must be at least 1");
  } else if (key == "min_similarity") {
    min_similarity = ParseNumber<double>(key, value);
  } else if (key == "seed") {
    seed = ParseNumber<uint64_t>(key, value);
  } else if (key == "world") {
    world = value;
  } else if (key == "model") {
    model = value;
  } else if (key == "stopwords") {
    stopwords = value;
  } else if (key == "metric") {
    metric = value;
  } else if (key == "resamples") {
    resamples = ParseNumber<int>(key, value);
    if (resamples < 1) throw UsageError("resamples must be at least 1");
  } else {
    throw UsageError("unknown configuration key '" + key + "'");
  }
}

std::map<std::string, std::string> RunConfig::Effective() const {
  std::map<std::string, std::string> kv;
  kv["task"] = TaskName(task);
  kv["features"] = FeatureModeName(features);
  kv["pos"] = pos ? "1" : "0";
  if (hypernyms) kv["hypernyms"] = hypernyms->string();
  kv["hypernym_weight"] = Real(hypernym_weight);
  if (cue_words) kv["cue_words"] = cue_words->string();
  kv["units"] = units == TrainingUnit::kPhrase ? "phrase" : "sentence";
  kv["classifier"] = ClassifierKindName(classifier);
  kv["train_fraction"] = Real(train_fraction);
  kv["lexicon_min_count"] = std::to_string(lexicon_min_count);
  kv["lexicon_purity"] = Real(lexicon_purity);
  kv["svm_reg"] = Real(svm_reg);
  kv["svm_epochs"] = std::to_string(svm_epochs);
  kv["tree_max_depth"] = std::to_string(tree_max_depth);
  kv["tree_min_leaf"] = std::to_string(tree_min_leaf);
  kv["budget"] = std::to_string(budget);
  if (pool_k) kv["pool_k"] = std::to_string(*pool_k);
  if (min_similarity) kv["min_similarity"] = Real(*min_similarity);
  kv["seed"] = std::to_string(seed);
  if (world) kv["world"] = world->string();
  if (model) kv["model"] = model->string();
  if (stopwords) kv["stopwords"] = stopwords->string();
  kv["metric"] = metric;
  kv["resamples"] = std::to_string(resamples);
  return kv;
}

std::map<std::string, std::string> ParseConfigFile(const std::string& content) {
  std::map<std::string, std::string> kv;
  std::istringstream in(content);
  std::string line;
  size_t line_no = 0;
  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError("config line " + std::to_string(line_no) +
                       " is not key=value");
    }
    std::string key = trim(line.substr(0, eq));
    std::replace(key.begin(), key.end(), '-', '_');
    kv[key] = trim(line.substr(eq + 1));
  }
  return kv;
}

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Biographical summaries from news documents", "biosumm"};
  app.require_subcommand(1);

  std::optional<std::string> config_path;
  app.add_option("--config", config_path, "key=value configuration file");

  // Settings shared by several subcommands, keyed by their config name.
  std::map<std::string, std::string> flag_values;
  std::vector<std::pair<CLI::Option*, std::string>> bound;
  auto setting = [&](CLI::App* sub, const std::string& flag,
                     const std::string& key, const std::string& help) {
    auto* opt = sub->add_option(flag, flag_values[key], help);
    bound.emplace_back(opt, key);
    return opt;
  };
  bool pos_flag = false;

  auto* stats_cmd = app.add_subcommand("corpus-stats", "Count annotated spans");
  std::vector<std::string> stats_dirs;
  stats_cmd->add_option("dirs", stats_dirs, "Corpus directories")->required();

  auto* train_cmd = app.add_subcommand("train", "Train a sentence classifier");
  std::string train_dir;
  train_cmd->add_option("corpus_dir", train_dir, "Annotated corpus directory")
      ->required();
  setting(train_cmd, "--task", "task", "ten or two");
  setting(train_cmd, "--features", "features", "unigram, bigram or stem");
  CLI::Option* pos_opt = train_cmd->add_flag("--pos", pos_flag, "Append POS tags");
  setting(train_cmd, "--hypernyms", "hypernyms", "word<TAB>hypernym lexicon");
  setting(train_cmd, "--seed", "seed", "Split and training seed");
  setting(train_cmd, "--model", "model", "Output model path");
  setting(train_cmd, "--units", "units", "sentence or phrase");
  setting(train_cmd, "--classifier", "classifier", "nb, svm or tree");
  setting(train_cmd, "--train-fraction", "train_fraction",
          "Share of documents used for training");

  auto* world_cmd =
      app.add_subcommand("build-world-stats", "Count stems of a text corpus");
  std::vector<std::string> world_dirs;
  std::optional<std::string> world_out;
  world_cmd->add_option("dirs", world_dirs, "Text directories")->required();
  world_cmd->add_option("-o,--output", world_out, "Output file (default stdout)");

  auto* sum_cmd = app.add_subcommand("summarize", "Write a biography summary");
  std::string docs_dir;
  std::string person;
  std::optional<std::string> sidecar;
  sum_cmd->add_option("docs_dir", docs_dir, "Document directory")->required();
  sum_cmd->add_option("--person", person, "Person name")->required();
  sum_cmd->add_option("--sidecar", sidecar, "Write per-sentence provenance");
  setting(sum_cmd, "--world", "world", "World stats file");
  setting(sum_cmd, "--model", "model", "Model file");
  setting(sum_cmd, "--budget", "budget", "Byte budget (default 665)");
  setting(sum_cmd, "--pool-k", "pool_k", "Redundancy candidate pool size");
  setting(sum_cmd, "--stopwords", "stopwords", "Stopword list");
  setting(sum_cmd, "--seed", "seed", "Seed (recorded in the sidecar)");

  auto* rouge_cmd = app.add_subcommand("rouge", "Score summaries with ROUGE");
  std::string cand_dir;
  std::string ref_dir;
  rouge_cmd->add_option("candidates_dir", cand_dir, "Candidate summaries")
      ->required();
  rouge_cmd->add_option("references_dir", ref_dir, "Reference summaries")
      ->required();
  setting(rouge_cmd, "--metric", "metric", "l or an n-gram order");
  setting(rouge_cmd, "--resamples", "resamples", "Bootstrap resamples");
  setting(rouge_cmd, "--seed", "seed", "Bootstrap seed");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.back()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    ReportError(err, "usage", e.what());
    return kExitUsage;
  }

  try {
    RunConfig cfg;
    if (config_path) {
      for (const auto& [key, value] : ParseConfigFile(ReadFile(*config_path))) {
        cfg.Set(key, value);
      }
    }
    for (const auto& [opt, key] : bound) {
      if (opt->count() > 0) cfg.Set(key, flag_values[key]);
    }
    if (pos_opt->count() > 0) cfg.pos = pos_flag;

    if (stats_cmd->parsed()) return CmdCorpusStats(stats_dirs, out);
    if (train_cmd->parsed()) return CmdTrain(train_dir, cfg, out);
    if (world_cmd->parsed()) return CmdBuildWorldStats(world_dirs, world_out, out);
    if (sum_cmd->parsed()) {
      return CmdSummarize(docs_dir, person, sidecar, cfg, out, err);
    }
    if (rouge_cmd->parsed()) return CmdRouge(cand_dir, ref_dir, cfg, out, err);
    ReportError(err, "usage", "no command given");
    return kExitUsage;
  } catch (const Error& e) {
    ReportError(err, KindName(e.kind()), e.what());
    return ExitCode(e.kind());
  } catch (const fs::filesystem_error& e) {
    ReportError(err, "input", e.what());
    return kExitInput;
  } catch (const std::exception& e) {
    ReportError(err, "internal", e.what());
    return kExitInternal;
  }
}

}  // namespace biosumm
