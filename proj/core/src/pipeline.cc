/*
 * Copyright 2026 The Glassbox Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "glassbox/pipeline.h"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <variant>

#include "glassbox/cart.h"
#include "glassbox/csv.h"
#include "glassbox/dataio.h"
#include "glassbox/ebm.h"
#include "glassbox/error.h"
#include "glassbox/explain.h"
#include "glassbox/linear.h"
#include "glassbox/metrics.h"
#include "glassbox/numeric.h"
#include "json_io.h"

namespace glassbox {

using nlohmann::json;
namespace fs = std::filesystem;

const char* Version() { return GLASSBOX_VERSION; }

namespace {

constexpr int kReportFormatVersion = 1;

std::string PathIn(const std::string& run_dir, const std::string& relative) {
  return (fs::path(run_dir) / relative).string();
}

void MakeDir(const std::string& path) {
  std::error_code ec;
  fs::create_directories(path, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create '" + path + "': " + ec.message());
}

void RequireFile(const std::string& run_dir, const std::string& relative,
                 std::string_view stage) {
  if (!fs::exists(PathIn(run_dir, relative))) {
    throw Error(ErrorCode::kIncompleteRun, "run directory '" + run_dir + "' lacks " +
                                               relative + "; run the " + std::string(stage) +
                                               " stage first");
  }
}

json ReadJson(const std::string& path) {
  try {
    return json::parse(ReadTextFile(path));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kCorruptFile, path + ": " + e.what());
  }
}

void WriteCsv(const std::string& path, const std::vector<std::string>& header,
              const std::vector<std::vector<std::string>>& rows) {
  std::string text = csv::JoinRow(header) + "\n";
  for (const auto& r : rows) text += csv::JoinRow(r) + "\n";
  WriteTextFile(path, text);
}

class StageTimer {
 public:
  StageTimer(std::string run_dir, std::string stage)
      : run_dir_(std::move(run_dir)),
        stage_(std::move(stage)),
        start_(std::chrono::steady_clock::now()) {}

  void Finish() {
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    const std::string path = PathIn(run_dir_, "timings.json");
    json timings = json::object();
    if (fs::exists(path)) {
      try {
        timings = json::parse(ReadTextFile(path));
      } catch (const json::exception&) {
        timings = json::object();
      }
    }
    timings[stage_] = seconds;
    WriteTextFile(path, Dump(timings));
  }

 private:
  std::string run_dir_;
  std::string stage_;
  std::chrono::steady_clock::time_point start_;
};

std::string PersistedConfig(const RunConfig& config) {
  RunConfig copy = config;
  copy.out_dir.clear();
  return FormatConfig(copy);
}

json SourcesOf(const Dataset& ds) {
  json out = json::array();
  for (const auto& tag : ds.tags()) out.push_back(tag.source);
  return out;
}

json CountsOf(const Dataset& ds) {
  const auto c = ds.ClassCounts();
  return {c[0], c[1]};
}

template <typename F>
auto VisitModel(const AnyModel& model, F&& f) {
  return std::visit(std::forward<F>(f), model);
}

std::vector<double> PredictAll(const AnyModel& model, const Dataset& ds) {
  std::vector<double> out(ds.num_rows());
  VisitModel(model, [&](const auto& m) {
    for (std::size_t i = 0; i < ds.num_rows(); ++i) out[i] = m.Predict(ds.row(i));
  });
  return out;
}

const std::vector<FeatureSpec>& SchemaOf(const AnyModel& model) {
  return *VisitModel(model, [](const auto& m) { return &m.schema; });
}

Task TaskOf(const AnyModel& model) {
  if (const auto* lin = std::get_if<LinearModel>(&model)) {
    return lin->task == LinearTask::kLogistic ? Task::kClassification : Task::kRegression;
  }
  if (const auto* ebm = std::get_if<EbmModel>(&model)) return ebm->task;
  return std::get<DecisionTree>(model).task;
}

std::string ModelFile(ModelKind kind) { return "models/" + std::string(ToString(kind)) + ".json"; }

std::string ThresholdText(double t) { return std::isinf(t) ? "inf" : FormatDouble(t); }

json ThresholdJson(double t) { return std::isinf(t) ? json(nullptr) : json(t); }

double Clip(double v) { return v < 0.0 ? 0.0 : (v > 10.0 ? 10.0 : v); }

}  // namespace

SampleSelector SampleSelector::Parse(std::string_view text) {
  SampleSelector s;
  if (text.empty() || text == "auto") return s;
  std::size_t value = 0;
  for (char ch : text) {
    if (ch < '0' || ch > '9') {
      throw Error(ErrorCode::kInvalidArgument,
                  "sample selector must be 'auto' or a test-row position, got '" +
                      std::string(text) + "'");
    }
    value = value * 10 + static_cast<std::size_t>(ch - '0');
  }
  s.index = value;
  return s;
}

RunConfig LoadRunConfig(const std::string& run_dir) {
  RequireFile(run_dir, "config.conf", "prep");
  RunConfig config;
  ApplyConfigFile(config, PathIn(run_dir, "config.conf"));
  config.out_dir = run_dir;
  return config;
}

void PrepStage(const RunConfig& config) {
  ValidateConfig(config);
  if (config.out_dir.empty()) throw Error(ErrorCode::kInvalidConfig, "no output directory given");
  const std::string& run_dir = config.out_dir;
  MakeDir(PathIn(run_dir, "prep"));
  StageTimer timer(run_dir, "prep");

  SchemaFile schema = LoadSchemaFile(config.schema);
  if (config.provenance) schema.provenance = *config.provenance;
  const bool classify = config.task == Task::kClassification;
  LoadResult loaded =
      LoadDataset(config.dataset, schema, classify ? LabelKind::kBinary : LabelKind::kFms);

  json prep;
  prep["provenance"] = ToString(schema.provenance);
  prep["task"] = ToString(config.task);
  prep["rows_loaded"] = loaded.data.num_rows();
  prep["rows_rejected"] = loaded.rejected_rows;
  prep["warnings"] = loaded.warnings;
  prep["seeds"] = {{"split", config.seed_split},
                   {"oversample", config.seed_oversample},
                   {"model", config.seed_model}};
  prep["train_fraction"] = config.train_fraction;

  Dataset modelled = std::move(loaded.data);
  if (!classify && config.window > 0) {
    WindowedSeries windows = MakeWindows(modelled, loaded.groups, config.window);
    prep["window"] = config.window;
    prep["window_target_rows"] = windows.target_rows;
    modelled = std::move(windows.data);
  } else {
    prep["window"] = 0;
  }
  prep["rows_modelled"] = modelled.num_rows();

  auto [train, test] = Split(modelled, config.train_fraction, config.seed_split);
  if (classify) {
    prep["class_counts"] = {{"all", CountsOf(modelled)},
                            {"train", CountsOf(train)},
                            {"test", CountsOf(test)}};
    train = Oversample(train, config.seed_oversample);
    prep["class_counts"]["train_oversampled"] = CountsOf(train);
    prep["oversampled_copies"] = train.num_rows() - prep["class_counts"]["train"][0].get<std::size_t>() -
                                 prep["class_counts"]["train"][1].get<std::size_t>();
  } else {
    prep["oversampled_copies"] = 0;
  }
  prep["train_rows"] = train.num_rows();
  prep["test_rows"] = test.num_rows();
  prep["test_sources"] = SourcesOf(test);
  prep["label_kind"] = ToString(train.label_kind());
  prep["schema"] = SchemaToJson(train.schema());

  WriteTextFile(PathIn(run_dir, "config.conf"), PersistedConfig(config));
  WriteDatasetCsv(PathIn(run_dir, "prep/train.csv"), train);
  WriteDatasetCsv(PathIn(run_dir, "prep/test.csv"), test);
  WriteTextFile(PathIn(run_dir, "prep/prep.json"), Dump(prep));
  timer.Finish();
}

PreparedData LoadPrepared(const std::string& run_dir) {
  RequireFile(run_dir, "prep/prep.json", "prep");
  const json prep = ReadJson(PathIn(run_dir, "prep/prep.json"));
  PreparedData out;
  try {
    out.task = ParseTask(prep.at("task").get<std::string>());
    const auto schema = SchemaFromJson(prep.at("schema"));
    const LabelKind kind =
        prep.at("label_kind").get<std::string>() == "binary" ? LabelKind::kBinary : LabelKind::kFms;
    const Provenance provenance = ParseProvenance(prep.at("provenance").get<std::string>());
    out.train = ReadDatasetCsv(PathIn(run_dir, "prep/train.csv"), schema, kind, provenance);
    out.test = ReadDatasetCsv(PathIn(run_dir, "prep/test.csv"), schema, kind, provenance);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kCorruptFile, run_dir + "/prep/prep.json: " + e.what());
  }
  return out;
}

AnyModel LoadRunModel(const std::string& run_dir, ModelKind kind) {
  RequireFile(run_dir, ModelFile(kind), "train");
  return LoadModel(PathIn(run_dir, ModelFile(kind)));
}

void TrainStage(const std::string& run_dir) {
  const RunConfig config = LoadRunConfig(run_dir);
  ValidateConfig(config);
  const PreparedData data = LoadPrepared(run_dir);
  MakeDir(PathIn(run_dir, "models"));
  StageTimer timer(run_dir, "train");

  for (ModelKind kind : ResolvedModels(config)) {
    switch (kind) {
      case ModelKind::kEbm: {
        EbmHyper hyper = config.ebm;
        hyper.seed = config.seed_model;
        SaveModel(PathIn(run_dir, ModelFile(kind)), TrainEbm(data.train, hyper, data.task));
        break;
      }
      case ModelKind::kTree: {
        DecisionTree tree = TrainTree(data.train, config.dt_max_depth, data.task);
        WriteTextFile(PathIn(run_dir, "models/dt.txt"), RenderTree(tree));
        SaveModel(PathIn(run_dir, ModelFile(kind)), tree);
        break;
      }
      case ModelKind::kLogistic:
        SaveModel(PathIn(run_dir, ModelFile(kind)), TrainLogistic(data.train, config.lr));
        break;
      case ModelKind::kLinear:
        SaveModel(PathIn(run_dir, ModelFile(kind)), TrainLinear(data.train, config.lir_ridge));
        break;
    }
  }
  timer.Finish();
}

void EvaluateStage(const std::string& run_dir) {
  const RunConfig config = LoadRunConfig(run_dir);
  const PreparedData data = LoadPrepared(run_dir);
  const auto models = ResolvedModels(config);
  for (ModelKind kind : models) RequireFile(run_dir, ModelFile(kind), "train");
  MakeDir(PathIn(run_dir, "evaluate"));
  StageTimer timer(run_dir, "evaluate");

  const Dataset& test = data.test;
  const auto labels = test.labels();
  const bool classify = data.task == Task::kClassification;
  json out;
  out["task"] = ToString(data.task);
  out["test_rows"] = test.num_rows();
  out["models"] = json::object();
  json table = json::array();

  for (ModelKind kind : models) {
    const AnyModel model = LoadRunModel(run_dir, kind);
    RequireSameSchema(SchemaOf(model), test.schema());
    if (TaskOf(model) != data.task) {
      throw Error(ErrorCode::kSchemaMismatch,
                  ModelFile(kind) + " was trained for " + std::string(ToString(TaskOf(model))));
    }
    const std::string name(ToString(kind));
    const std::vector<double> scores = PredictAll(model, test);
    json entry;
    std::vector<std::vector<std::string>> pred_rows;

    if (classify) {
      const ConfusionCounts counts = CountOutcomes(scores, labels, 0.5);
      const ClassificationMetrics m = ComputeClassificationMetrics(counts);
      entry["metrics"] = ToJson(m, counts);
      const RocCurve roc = ComputeRoc(scores, labels);
      entry["auc"] = roc.auc;
      json points = json::array();
      std::vector<std::vector<std::string>> roc_rows;
      for (const auto& p : roc.points) {
        points.push_back({p.fpr, p.tpr, ThresholdJson(p.threshold)});
        roc_rows.push_back({FormatDouble(p.fpr), FormatDouble(p.tpr), ThresholdText(p.threshold)});
      }
      entry["roc"] = std::move(points);
      WriteCsv(PathIn(run_dir, "evaluate/roc_" + name + ".csv"), {"fpr", "tpr", "threshold"},
               roc_rows);
      for (std::size_t i = 0; i < test.num_rows(); ++i) {
        pred_rows.push_back({std::to_string(i), std::to_string(test.tag(i).source),
                             FormatDouble(labels[i]), FormatDouble(scores[i]),
                             scores[i] >= 0.5 ? "1" : "0"});
      }
      WriteCsv(PathIn(run_dir, "evaluate/predictions_" + name + ".csv"),
               {"position", "source", "label", "probability", "predicted"}, pred_rows);
      table.push_back({{"model", name},
                       {"precision_pct", 100.0 * m.precision},
                       {"recall_pct", 100.0 * m.recall},
                       {"f1_pct", 100.0 * m.f1},
                       {"accuracy_pct", 100.0 * m.accuracy},
                       {"auc", roc.auc}});
    } else {
      const RegressionMetrics m = ComputeRegressionMetrics(scores, labels);
      entry["metrics"] = ToJson(m);
      std::vector<double> clipped(scores.size());
      for (std::size_t i = 0; i < scores.size(); ++i) clipped[i] = Clip(scores[i]);
      entry["metrics_clipped"] = ToJson(ComputeRegressionMetrics(clipped, labels));
      for (std::size_t i = 0; i < test.num_rows(); ++i) {
        pred_rows.push_back({std::to_string(i), std::to_string(test.tag(i).source),
                             FormatDouble(labels[i]), FormatDouble(scores[i]),
                             FormatDouble(clipped[i])});
      }
      WriteCsv(PathIn(run_dir, "evaluate/predictions_" + name + ".csv"),
               {"position", "source", "target", "prediction", "prediction_clipped"}, pred_rows);
      table.push_back({{"model", name},
                       {"mse", m.mse},
                       {"rmse", m.rmse},
                       {"r2", m.r2_undefined ? json(nullptr) : json(m.r2)},
                       {"mae", m.mae}});
    }
    out["models"][name] = std::move(entry);
  }
  out["table"] = std::move(table);
  WriteTextFile(PathIn(run_dir, "evaluate/metrics.json"), Dump(out));
  timer.Finish();
}

namespace {

json LocalFor(const AnyModel& model, const Dataset& test, std::size_t position) {
  const int actual = test.label(position) != 0.0 ? 1 : 0;
  const auto sample = test.row(position);
  const auto index = static_cast<std::int64_t>(position);
  json j;
  if (const auto* ebm = std::get_if<EbmModel>(&model)) {
    j = ToJson(LocalExplain(*ebm, sample, actual, index));
  } else if (const auto* lin = std::get_if<LinearModel>(&model)) {
    j = ToJson(LocalExplain(*lin, sample, actual, index));
  } else {
    const auto& tree = std::get<DecisionTree>(model);
    j = ToJson(TraceDecision(tree, sample, actual, index), tree);
    const double p = tree.Predict(sample);
    j["class_probability"] = {{"cybersickness", p}, {"no_cybersickness", 1.0 - p}};
  }
  j["source"] = test.tag(position).source;
  return j;
}

}  // namespace

void ExplainStage(const std::string& run_dir, const SampleSelector& selector) {
  const RunConfig config = LoadRunConfig(run_dir);
  const PreparedData data = LoadPrepared(run_dir);
  const auto models = ResolvedModels(config);
  for (ModelKind kind : models) RequireFile(run_dir, ModelFile(kind), "train");
  if (selector.index && *selector.index >= data.test.num_rows()) {
    throw Error(ErrorCode::kNoSuchSample,
                "test split has " + std::to_string(data.test.num_rows()) +
                    " rows; position " + std::to_string(*selector.index) + " does not exist");
  }
  MakeDir(PathIn(run_dir, "explain"));
  StageTimer timer(run_dir, "explain");

  const bool classify = data.task == Task::kClassification;
  for (ModelKind kind : models) {
    const AnyModel model = LoadRunModel(run_dir, kind);
    RequireSameSchema(SchemaOf(model), data.test.schema());
    const std::string name(ToString(kind));
    const GlobalExplanation global =
        VisitModel(model, [&](const auto& m) { return GlobalExplain(m, data.train); });
    json g = ToJson(global);
    g["explained_rows"] = "train";
    WriteTextFile(PathIn(run_dir, "explain/global_" + name + ".json"), Dump(g));

    json local;
    local["model"] = name;
    local["selector"] = selector.index ? "index" : "auto";
    json slots = json::array();
    if (classify) {
      if (selector.index) {
        json item = LocalFor(model, data.test, *selector.index);
        slots.push_back({{"slot", item.at("status")}, {"present", true}, {"explanation", item}});
      } else {
        const auto scores = PredictAll(model, data.test);
        const auto first = FirstOfEachOutcome(scores, data.test.labels());
        for (std::size_t o = 0; o < first.size(); ++o) {
          json item = {{"slot", ToString(static_cast<Outcome>(o))}, {"present", first[o].has_value()}};
          if (first[o]) item["explanation"] = LocalFor(model, data.test, *first[o]);
          slots.push_back(std::move(item));
        }
      }
    } else {
      local["note"] = "local explanations cover classification runs only";
    }
    local["samples"] = std::move(slots);
    WriteTextFile(PathIn(run_dir, "explain/local_" + name + ".json"), Dump(local));
  }
  timer.Finish();
}

namespace {

std::string BinLower(const ShapeCurve& s, std::size_t b) {
  return b == 0 ? "-inf" : FormatDouble(s.cuts[b - 1]);
}

std::string BinUpper(const ShapeCurve& s, std::size_t b) {
  return b < s.cuts.size() ? FormatDouble(s.cuts[b]) : "inf";
}

void WriteSeries(const std::string& run_dir, const std::string& name, const json& evaluation,
                 const json& global, const json& training) {
  const std::string dir = PathIn(run_dir, "series");
  if (evaluation.contains("roc")) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& p : evaluation.at("roc")) {
      rows.push_back({FormatDouble(p[0].get<double>()), FormatDouble(p[1].get<double>()),
                      p[2].is_null() ? "inf" : FormatDouble(p[2].get<double>())});
    }
    WriteCsv(dir + "/roc_" + name + ".csv", {"fpr", "tpr", "threshold"}, rows);
  }
  {
    std::vector<std::vector<std::string>> rows;
    for (const auto& fi : global.at("importance")) {
      rows.push_back({fi.at("feature").get<std::string>(),
                      FormatDouble(fi.at("score").get<double>())});
    }
    WriteCsv(dir + "/importance_" + name + ".csv", {"feature", "score"}, rows);
  }
  if (global.contains("shapes")) {
    for (const auto& sj : global.at("shapes")) {
      ShapeCurve s;
      s.index = sj.at("index").get<std::size_t>();
      s.cuts = sj.at("cuts").get<std::vector<double>>();
      s.scores = sj.at("scores").get<std::vector<double>>();
      s.density = sj.at("density").get<std::vector<std::size_t>>();
      if (sj.contains("bin_labels")) s.bin_labels = sj.at("bin_labels").get<std::vector<std::string>>();
      std::vector<std::vector<std::string>> rows;
      for (std::size_t b = 0; b < s.scores.size(); ++b) {
        rows.push_back({sj.at("feature").get<std::string>(), std::to_string(b), BinLower(s, b),
                        BinUpper(s, b), b < s.bin_labels.size() ? s.bin_labels[b] : "",
                        FormatDouble(s.scores[b]), std::to_string(s.density[b])});
      }
      WriteCsv(dir + "/shape_" + name + "_" + std::to_string(s.index) + ".csv",
               {"feature", "bin", "lower", "upper", "category", "score", "density"}, rows);
    }
  }
  if (training.contains("epochs")) {
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : training.at("epochs")) {
      rows.push_back({std::to_string(e[0].get<int>()), FormatDouble(e[1].get<double>()),
                      FormatDouble(e[2].get<double>())});
    }
    WriteCsv(dir + "/training_" + name + ".csv", {"epoch", "train_loss", "validation_loss"}, rows);
  } else if (training.contains("loss_history")) {
    std::vector<std::vector<std::string>> rows;
    std::size_t k = 0;
    for (const auto& v : training.at("loss_history")) {
      rows.push_back({std::to_string(k++), FormatDouble(v.get<double>())});
    }
    WriteCsv(dir + "/training_" + name + ".csv", {"iteration", "loss"}, rows);
  }
}

json TrainingSummary(const AnyModel& model) {
  json out;
  if (const auto* ebm = std::get_if<EbmModel>(&model)) {
    out["best_epoch"] = ebm->best_epoch;
    out["epochs_run"] = ebm->log.empty() ? 0 : ebm->log.back().epoch;
    out["intercept"] = ebm->intercept;
    json epochs = json::array();
    for (const auto& e : ebm->log) epochs.push_back({e.epoch, e.train_loss, e.validation_loss});
    out["epochs"] = std::move(epochs);
  } else if (const auto* lin = std::get_if<LinearModel>(&model)) {
    out["iterations"] = lin->iterations;
    out["bias"] = lin->bias;
    out["weights"] = lin->weights;
    if (!lin->loss_history.empty()) out["loss_history"] = lin->loss_history;
  } else {
    const auto& tree = std::get<DecisionTree>(model);
    out["depth"] = tree.Depth();
    out["nodes"] = tree.nodes.size();
    out["rendering"] = RenderTree(tree);
  }
  return out;
}

}  // namespace

void ReportStage(const std::string& run_dir) {
  const RunConfig config = LoadRunConfig(run_dir);
  const auto models = ResolvedModels(config);
  RequireFile(run_dir, "prep/prep.json", "prep");
  for (ModelKind kind : models) RequireFile(run_dir, ModelFile(kind), "train");
  RequireFile(run_dir, "evaluate/metrics.json", "evaluate");
  for (ModelKind kind : models) {
    const std::string name(ToString(kind));
    RequireFile(run_dir, "explain/global_" + name + ".json", "explain");
    RequireFile(run_dir, "explain/local_" + name + ".json", "explain");
  }
  MakeDir(PathIn(run_dir, "series"));
  StageTimer timer(run_dir, "report");

  const json prep = ReadJson(PathIn(run_dir, "prep/prep.json"));
  const json evaluation = ReadJson(PathIn(run_dir, "evaluate/metrics.json"));

  json report;
  report["format"] = "glassbox-report";
  report["format_version"] = kReportFormatVersion;
  report["toolkit_version"] = Version();
  json cfg = json::object();
  for (const auto& [key, value] : ConfigSettings(config)) {
    if (key != "out") cfg[key] = value;
  }
  report["config"] = std::move(cfg);
  if (!config.profile.empty()) report["profile"] = config.profile;
  report["task"] = evaluation.at("task");
  json data = prep;
  data.erase("schema");
  data["features"] = prep.at("schema");
  report["data"] = std::move(data);

  json entries = json::array();
  for (ModelKind kind : models) {
    const std::string name(ToString(kind));
    const AnyModel model = LoadRunModel(run_dir, kind);
    const json& ev = evaluation.at("models").at(name);
    const json global = ReadJson(PathIn(run_dir, "explain/global_" + name + ".json"));
    const json local = ReadJson(PathIn(run_dir, "explain/local_" + name + ".json"));
    const json training = TrainingSummary(model);
    json entry = {{"model", name},
                  {"file", ModelFile(kind)},
                  {"metrics", ev.at("metrics")},
                  {"global", global},
                  {"local", local.at("samples")},
                  {"training", training}};
    if (ev.contains("auc")) entry["auc"] = ev.at("auc");
    if (ev.contains("roc")) entry["roc"] = ev.at("roc");
    if (ev.contains("metrics_clipped")) entry["metrics_clipped"] = ev.at("metrics_clipped");
    WriteSeries(run_dir, name, ev, global, training);
    entries.push_back(std::move(entry));
  }
  report["models"] = std::move(entries);
  report["table"] = evaluation.at("table");
  report["timings_file"] = "timings.json";

  json notes = json::array();
  notes.push_back("Metrics are computed on the untouched test split; classification uses a 0.5 threshold and positive-class precision and recall.");
  if (prep.at("task") == "classification") {
    notes.push_back("The training split was randomly oversampled; the EBM validation rows are carved from the oversampled training split.");
  } else {
    notes.push_back("Regression metrics use raw predictions; metrics_clipped and the prediction files also give predictions clipped to the FMS range [0, 10].");
  }
  notes.push_back("Wall-clock timings live in timings.json so this report stays byte-identical across identical runs.");
  report["notes"] = std::move(notes);
  report["glossary"] = {
      {"mean_absolute_score", "EBM global importance: training-set mean of |g_n(x_n)|."},
      {"class_probability", "Local explanations: logistic link of the summed logits, reported for both classes."},
      {"logit", "One feature's additive contribution to the pre-link score."},
      {"impurity_decrease_share", "Tree global importance: the feature's share of total weighted impurity decrease."},
      {"abs_standardized_coefficient", "Linear-model global importance: |coefficient| on standardized inputs."}};

  const std::string text = Dump(report);
  const auto problems = ValidateReport(text);
  if (!problems.empty()) {
    throw Error(ErrorCode::kCorruptFile, "generated report is malformed: " + problems.front());
  }
  WriteTextFile(PathIn(run_dir, "report.json"), text);
  timer.Finish();
}

void RunAll(const RunConfig& config, const SampleSelector& selector) {
  PrepStage(config);
  TrainStage(config.out_dir);
  EvaluateStage(config.out_dir);
  ExplainStage(config.out_dir, selector);
  ReportStage(config.out_dir);
}

std::vector<std::string> ValidateReport(std::string_view report_json) {
  std::vector<std::string> problems;
  json r;
  try {
    r = json::parse(report_json);
  } catch (const json::exception& e) {
    problems.push_back(std::string("not JSON: ") + e.what());
    return problems;
  }
  auto need = [&](const json& obj, const std::string& key, json::value_t type,
                  const std::string& where) -> bool {
    if (!obj.is_object() || !obj.contains(key)) {
      problems.push_back(where + " lacks '" + key + "'");
      return false;
    }
    const json& v = obj.at(key);
    const bool ok = type == json::value_t::number_float ? v.is_number() : v.type() == type;
    if (!ok) problems.push_back(where + "." + key + " has the wrong type");
    return ok;
  };
  const auto kString = json::value_t::string;
  const auto kObject = json::value_t::object;
  const auto kArray = json::value_t::array;
  const auto kNumber = json::value_t::number_float;

  if (need(r, "format", kString, "report") && r.at("format") != "glassbox-report") {
    problems.push_back("report.format is not glassbox-report");
  }
  if (!r.contains("format_version") || r.at("format_version") != kReportFormatVersion) {
    problems.push_back("report.format_version is not " + std::to_string(kReportFormatVersion));
  }
  need(r, "toolkit_version", kString, "report");
  need(r, "config", kObject, "report");
  need(r, "table", kArray, "report");
  need(r, "notes", kArray, "report");
  bool classify = false;
  if (need(r, "task", kString, "report")) {
    const auto task = r.at("task").get<std::string>();
    if (task != "classification" && task != "regression") problems.push_back("report.task is unknown");
    classify = task == "classification";
  }
  if (need(r, "data", kObject, "report")) {
    const json& d = r.at("data");
    if (need(d, "test_sources", kArray, "data")) {
      for (const auto& v : d.at("test_sources")) {
        if (!v.is_number_integer()) {
          problems.push_back("data.test_sources holds a non-integer");
          break;
        }
      }
    }
    need(d, "features", kArray, "data");
    need(d, "seeds", kObject, "data");
  }
  if (need(r, "models", kArray, "report")) {
    if (r.at("models").empty()) problems.push_back("report.models is empty");
    for (const auto& m : r.at("models")) {
      const std::string where =
          "models[" + (m.contains("model") && m.at("model").is_string() ? m.at("model").get<std::string>() : "?") + "]";
      if (need(m, "model", kString, where)) {
        const auto kind = m.at("model").get<std::string>();
        if (kind != "ebm" && kind != "dt" && kind != "lr" && kind != "lir") {
          problems.push_back(where + " names an unknown model");
        }
      }
      need(m, "file", kString, where);
      need(m, "local", kArray, where);
      need(m, "training", kObject, where);
      if (need(m, "metrics", kObject, where)) {
        const json& mm = m.at("metrics");
        const std::vector<std::string> keys =
            classify ? std::vector<std::string>{"accuracy", "precision", "recall", "f1"}
                     : std::vector<std::string>{"mse", "rmse", "mae"};
        for (const auto& k : keys) need(mm, k, kNumber, where + ".metrics");
      }
      if (classify) {
        need(m, "auc", kNumber, where);
        need(m, "roc", kArray, where);
      }
      if (need(m, "global", kObject, where)) {
        if (need(m.at("global"), "importance", kArray, where + ".global")) {
          for (const auto& fi : m.at("global").at("importance")) {
            need(fi, "feature", kString, where + ".importance");
            need(fi, "score", kNumber, where + ".importance");
          }
        }
      }
    }
  }
  return problems;
}

}  // namespace glassbox
