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

// Command-line driver: prep, train, evaluate, explain, report, run, synth.
// Exit status 0 on success, 1 for validation errors, 2 for data errors and
// 3 for training errors.

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "glassbox/config.h"
#include "glassbox/error.h"
#include "glassbox/pipeline.h"
#include "glassbox/synth.h"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;

// Flags that map one-to-one onto config keys.
struct SettingFlag {
  const char* flag;
  const char* key;
  const char* help;
};

constexpr SettingFlag kSettingFlags[] = {
    {"--dataset", "dataset", "dataset CSV file"},
    {"--schema", "schema", "schema file describing the dataset columns"},
    {"--provenance", "provenance", "physiological, gameplay or synthetic"},
    {"--task", "task", "classify or regress"},
    {"--models", "models", "comma-separated subset of ebm,dt,lr,lir"},
    {"--train-fraction", "train_fraction", "share of rows used for training"},
    {"--seed-split", "seed_split", "seed of the train/test split"},
    {"--seed-oversample", "seed_oversample", "seed of the minority oversampler"},
    {"--seed-model", "seed_model", "seed of the EBM validation carve"},
    {"--window", "window", "time steps per regression window (0 disables windows)"},
    {"--learning-rate", "ebm.learning_rate", "EBM boosting learning rate"},
    {"--patience", "ebm.patience", "EBM early-stopping patience in epochs"},
    {"--max-rounds", "ebm.max_rounds", "EBM epoch limit"},
    {"--max-bins", "ebm.max_bins", "EBM bins per feature"},
    {"--max-depth", "dt.max_depth", "decision tree depth limit"},
    {"--l2", "lr.l2", "logistic regression L2 strength"},
};

struct RunFlags {
  std::map<std::string, std::string> settings;
  std::vector<std::string> overrides;
  std::string profile;
  std::string config_file;
  std::string out;
};

void AddRunFlags(CLI::App* app, RunFlags& flags) {
  for (const auto& f : kSettingFlags) {
    app->add_option_function<std::string>(
        f.flag, [&flags, key = std::string(f.key)](const std::string& v) { flags.settings[key] = v; },
        f.help);
  }
  app->add_option("--profile", flags.profile, "built-in settings: paper-physiological, paper-gameplay");
  app->add_option("--config", flags.config_file, "key = value config file");
  app->add_option("--set", flags.overrides, "extra KEY=VALUE setting, repeatable");
  app->add_option("--out", flags.out, "run directory");
}

glassbox::RunConfig BuildConfig(const RunFlags& flags) {
  glassbox::RunConfig config;
  if (!flags.profile.empty()) glassbox::ApplyProfile(config, flags.profile);
  if (!flags.config_file.empty()) glassbox::ApplyConfigFile(config, flags.config_file);
  for (const auto& [key, value] : flags.settings) glassbox::ApplySetting(config, key, value);
  for (const auto& item : flags.overrides) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw glassbox::Error(glassbox::ErrorCode::kInvalidConfig,
                            "--set expects KEY=VALUE, got '" + item + "'");
    }
    glassbox::ApplySetting(config, item.substr(0, eq), item.substr(eq + 1));
  }
  if (!flags.out.empty()) {
    config.out_dir = flags.out;
  } else if (config.out_dir.empty()) {
    const std::string stem = config.dataset.empty() ? "run" : fs::path(config.dataset).stem().string();
    const char* task = config.task == glassbox::Task::kClassification ? "classify" : "regress";
    config.out_dir = (fs::path(glassbox::DefaultOutputRoot()) / (stem + "-" + task)).string();
  }
  return config;
}

std::string RequireRunDir(const std::string& out) {
  if (out.empty()) {
    throw glassbox::Error(glassbox::ErrorCode::kInvalidConfig, "--out <run directory> is required");
  }
  return out;
}

void PrintArtifacts(const std::string& run_dir) {
  const fs::path table = fs::path(run_dir) / "evaluate" / "metrics.json";
  if (fs::exists(table)) std::cout << "metrics: " << table.string() << "\n";
  const fs::path report = fs::path(run_dir) / "report.json";
  if (!fs::exists(report)) return;
  std::cout << "report: " << report.string() << "\n";
  std::ifstream in(report, std::ios::binary);
  const auto doc = nlohmann::json::parse(in);
  for (const auto& row : doc.at("table")) {
    std::cout << "  " << row.at("model").get<std::string>();
    for (const auto& [key, value] : row.items()) {
      if (key == "model") continue;
      std::cout << "  " << key << "=";
      if (value.is_number()) {
        std::cout << std::fixed << std::setprecision(4) << value.get<double>();
        std::cout.unsetf(std::ios::floatfield);
      } else {
        std::cout << value.dump();
      }
    }
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"glassbox: interpretable models for cybersickness data"};
  app.set_version_flag("--version", std::string(glassbox::Version()));
  app.require_subcommand(1);

  RunFlags prep_flags, run_flags;
  std::string run_dir;
  std::string sample = "auto";

  auto* prep = app.add_subcommand("prep", "load, split and oversample a dataset");
  AddRunFlags(prep, prep_flags);
  auto* run = app.add_subcommand("run", "all stages in one go");
  AddRunFlags(run, run_flags);
  run->add_option("--sample", sample, "local-explanation selector: auto or a test-row position");

  auto* train = app.add_subcommand("train", "train the configured models of a prepared run");
  train->add_option("--out", run_dir, "run directory")->required();
  auto* evaluate = app.add_subcommand("evaluate", "score the trained models on the test split");
  evaluate->add_option("--out", run_dir, "run directory")->required();
  auto* explain = app.add_subcommand("explain", "write global and local explanations");
  explain->add_option("--out", run_dir, "run directory")->required();
  explain->add_option("--sample", sample, "auto (first TP, TN, FP, FN) or a test-row position");
  auto* report = app.add_subcommand("report", "consolidate a finished run into report.json");
  report->add_option("--out", run_dir, "run directory")->required();

  glassbox::SyntheticOptions synth_options;
  std::string synth_dir;
  auto* synth = app.add_subcommand("synth", "write a synthetic demo dataset and its schema");
  synth->add_option("--out", synth_dir, "output directory")->required();
  synth->add_option("--participants", synth_options.participants, "number of participants");
  synth->add_option("--steps", synth_options.steps, "time steps per participant");
  synth->add_option("--seed", synth_options.seed, "generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*prep) {
      const auto config = BuildConfig(prep_flags);
      glassbox::PrepStage(config);
      std::cout << "prepared " << config.out_dir << "\n";
    } else if (*run) {
      const auto config = BuildConfig(run_flags);
      glassbox::RunAll(config, glassbox::SampleSelector::Parse(sample));
      PrintArtifacts(config.out_dir);
    } else if (*train) {
      glassbox::TrainStage(RequireRunDir(run_dir));
      std::cout << "trained models in " << (fs::path(run_dir) / "models").string() << "\n";
    } else if (*evaluate) {
      glassbox::EvaluateStage(RequireRunDir(run_dir));
      PrintArtifacts(run_dir);
    } else if (*explain) {
      glassbox::ExplainStage(RequireRunDir(run_dir), glassbox::SampleSelector::Parse(sample));
      std::cout << "explanations in " << (fs::path(run_dir) / "explain").string() << "\n";
    } else if (*report) {
      glassbox::ReportStage(RequireRunDir(run_dir));
      PrintArtifacts(run_dir);
    } else if (*synth) {
      fs::create_directories(synth_dir);
      const fs::path csv = fs::path(synth_dir) / "synthetic.csv";
      const fs::path schema = fs::path(synth_dir) / "synthetic.schema";
      std::ofstream(csv, std::ios::binary) << glassbox::SyntheticCsv(synth_options);
      std::ofstream(schema, std::ios::binary) << glassbox::SyntheticSchema();
      std::cout << "wrote " << csv.string() << " and " << schema.string() << "\n";
    }
  } catch (const glassbox::Error& e) {
    std::cerr << "glassbox: " << e.what() << "\n";
    return static_cast<int>(e.category());
  } catch (const std::exception& e) {
    std::cerr << "glassbox: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
