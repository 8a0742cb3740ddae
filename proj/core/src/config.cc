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

#include "glassbox/config.h"

#include <cerrno>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "glassbox/error.h"
#include "glassbox/numeric.h"

namespace glassbox {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

[[noreturn]] void Bad(std::string_view key, std::string_view value, std::string_view want) {
  throw Error(ErrorCode::kInvalidConfig, std::string(key) + ": '" + std::string(value) +
                                             "' is not " + std::string(want));
}

double ToDouble(std::string_view key, std::string_view value) {
  double out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) Bad(key, value, "a number");
  return out;
}

template <typename Int>
Int ToInt(std::string_view key, std::string_view value) {
  Int out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) Bad(key, value, "an integer");
  return out;
}

std::string Join(const std::vector<ModelKind>& models) {
  std::string out;
  for (ModelKind m : models) {
    if (!out.empty()) out += ',';
    out += ToString(m);
  }
  return out;
}

}  // namespace

ModelKind ParseModelKind(std::string_view text) {
  if (text == "ebm") return ModelKind::kEbm;
  if (text == "dt") return ModelKind::kTree;
  if (text == "lr") return ModelKind::kLogistic;
  if (text == "lir") return ModelKind::kLinear;
  throw Error(ErrorCode::kInvalidConfig, "unknown model '" + std::string(text) +
                                             "' (expected ebm, dt, lr or lir)");
}

void ApplySetting(RunConfig& c, std::string_view key, std::string_view raw) {
  const std::string_view v = Trim(raw);
  if (key == "dataset") {
    c.dataset = v;
  } else if (key == "schema") {
    c.schema = v;
  } else if (key == "provenance") {
    if (v.empty()) {
      c.provenance.reset();
    } else {
      try {
        c.provenance = ParseProvenance(v);
      } catch (const Error&) {
        Bad(key, v, "physiological, gameplay or synthetic");
      }
    }
  } else if (key == "task") {
    if (v == "classify" || v == "classification") {
      c.task = Task::kClassification;
    } else if (v == "regress" || v == "regression") {
      c.task = Task::kRegression;
    } else {
      Bad(key, v, "classify or regress");
    }
  } else if (key == "models") {
    std::vector<ModelKind> models;
    std::size_t begin = 0;
    while (begin <= v.size()) {
      std::size_t end = v.find(',', begin);
      if (end == std::string_view::npos) end = v.size();
      const std::string_view item = Trim(v.substr(begin, end - begin));
      if (!item.empty()) {
        const ModelKind m = ParseModelKind(item);
        bool seen = false;
        for (ModelKind k : models) seen = seen || k == m;
        if (!seen) models.push_back(m);
      }
      begin = end + 1;
    }
    c.models = std::move(models);
  } else if (key == "train_fraction") {
    c.train_fraction = ToDouble(key, v);
  } else if (key == "seed_split") {
    c.seed_split = ToInt<std::uint64_t>(key, v);
  } else if (key == "seed_oversample") {
    c.seed_oversample = ToInt<std::uint64_t>(key, v);
  } else if (key == "seed_model") {
    c.seed_model = ToInt<std::uint64_t>(key, v);
  } else if (key == "ebm.learning_rate") {
    c.ebm.learning_rate = ToDouble(key, v);
  } else if (key == "ebm.max_rounds") {
    c.ebm.max_rounds = ToInt<int>(key, v);
  } else if (key == "ebm.patience") {
    c.ebm.patience = ToInt<int>(key, v);
  } else if (key == "ebm.validation_fraction") {
    c.ebm.validation_fraction = ToDouble(key, v);
  } else if (key == "ebm.max_bins") {
    c.ebm.max_bins = ToInt<int>(key, v);
  } else if (key == "ebm.max_leaves") {
    c.ebm.max_leaves = ToInt<int>(key, v);
  } else if (key == "ebm.min_samples_leaf") {
    c.ebm.min_samples_leaf = ToInt<int>(key, v);
  } else if (key == "ebm.interactions") {
    c.ebm.interactions = ToInt<int>(key, v);
  } else if (key == "dt.max_depth") {
    c.dt_max_depth = ToInt<int>(key, v);
  } else if (key == "lr.l2") {
    c.lr.l2 = ToDouble(key, v);
  } else if (key == "lr.max_iters") {
    c.lr.max_iters = ToInt<int>(key, v);
  } else if (key == "lr.tolerance") {
    c.lr.tolerance = ToDouble(key, v);
  } else if (key == "lir.ridge") {
    c.lir_ridge = ToDouble(key, v);
  } else if (key == "window") {
    c.window = ToInt<std::size_t>(key, v);
  } else if (key == "out") {
    c.out_dir = v;
  } else if (key == "profile") {
    ApplyProfile(c, v);
  } else {
    throw Error(ErrorCode::kInvalidConfig, "unknown setting '" + std::string(key) + "'");
  }
}

void ApplyConfigText(RunConfig& config, std::string_view text) {
  std::size_t line_no = 0;
  std::size_t begin = 0;
  while (begin < text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(begin, end - begin);
    begin = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = Trim(line);
    if (line.empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kInvalidConfig,
                  "line " + std::to_string(line_no) + ": expected key = value");
    }
    try {
      ApplySetting(config, Trim(line.substr(0, eq)), line.substr(eq + 1));
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(line_no) + ": " + e.detail());
    }
  }
}

void ApplyConfigFile(RunConfig& config, const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kInvalidConfig, "cannot open config '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    ApplyConfigText(config, buffer.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.detail());
  }
}

namespace {

constexpr std::string_view kReproductionCommon =
    "ebm.learning_rate = 0.001\n"
    "ebm.patience = 30\n"
    "ebm.max_rounds = 25000\n"
    "dt.max_depth = 3\n"
    "lr.l2 = 0.001\n"
    "train_fraction = 0.7\n";

}  // namespace

std::vector<std::string> ProfileNames() { return {"paper-physiological", "paper-gameplay"}; }

void ApplyProfile(RunConfig& config, std::string_view name) {
  if (name == "paper-physiological") {
    ApplyConfigText(config, kReproductionCommon);
    config.provenance = Provenance::kPhysiological;
  } else if (name == "paper-gameplay") {
    ApplyConfigText(config, kReproductionCommon);
    config.provenance = Provenance::kGameplay;
  } else {
    throw Error(ErrorCode::kInvalidConfig, "unknown profile '" + std::string(name) + "'");
  }
  config.profile = name;
}

std::vector<ModelKind> ResolvedModels(const RunConfig& config) {
  if (config.models) return *config.models;
  if (config.task == Task::kClassification) {
    return {ModelKind::kEbm, ModelKind::kTree, ModelKind::kLogistic};
  }
  return {ModelKind::kEbm, ModelKind::kTree, ModelKind::kLinear};
}

void ValidateConfig(const RunConfig& config) {
  auto fail = [](const std::string& message) {
    throw Error(ErrorCode::kInvalidConfig, message);
  };
  if (config.dataset.empty()) fail("no dataset given");
  if (config.schema.empty()) fail("no schema file given");
  if (!(config.train_fraction > 0.0 && config.train_fraction < 1.0)) {
    fail("train_fraction must lie in (0, 1)");
  }
  const auto models = ResolvedModels(config);
  if (models.empty()) fail("the model set is empty");
  for (ModelKind m : models) {
    if (m == ModelKind::kLinear && config.task != Task::kRegression) {
      fail("lir needs task = regress");
    }
    if (m == ModelKind::kLogistic && config.task != Task::kClassification) {
      fail("lr needs task = classify");
    }
  }
  if (config.dt_max_depth < 1) fail("dt.max_depth must be at least 1");
  if (!(config.lr.l2 >= 0.0)) fail("lr.l2 must be non-negative");
  if (config.lr.max_iters < 1) fail("lr.max_iters must be positive");
  if (!(config.lr.tolerance > 0.0)) fail("lr.tolerance must be positive");
  if (!(config.lir_ridge >= 0.0)) fail("lir.ridge must be non-negative");
  try {
    ValidateEbmHyper(config.ebm);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kNotImplemented) throw;
    fail(e.detail());
  }
}

std::vector<std::pair<std::string, std::string>> ConfigSettings(const RunConfig& c) {
  std::vector<std::pair<std::string, std::string>> out = {
      {"dataset", c.dataset},
      {"schema", c.schema},
      {"provenance", c.provenance ? std::string(ToString(*c.provenance)) : ""},
      {"task", c.task == Task::kClassification ? "classify" : "regress"},
      {"models", Join(ResolvedModels(c))},
      {"train_fraction", FormatDouble(c.train_fraction)},
      {"seed_split", std::to_string(c.seed_split)},
      {"seed_oversample", std::to_string(c.seed_oversample)},
      {"seed_model", std::to_string(c.seed_model)},
      {"ebm.learning_rate", FormatDouble(c.ebm.learning_rate)},
      {"ebm.max_rounds", std::to_string(c.ebm.max_rounds)},
      {"ebm.patience", std::to_string(c.ebm.patience)},
      {"ebm.validation_fraction", FormatDouble(c.ebm.validation_fraction)},
      {"ebm.max_bins", std::to_string(c.ebm.max_bins)},
      {"ebm.max_leaves", std::to_string(c.ebm.max_leaves)},
      {"ebm.min_samples_leaf", std::to_string(c.ebm.min_samples_leaf)},
      {"ebm.interactions", std::to_string(c.ebm.interactions)},
      {"dt.max_depth", std::to_string(c.dt_max_depth)},
      {"lr.l2", FormatDouble(c.lr.l2)},
      {"lr.max_iters", std::to_string(c.lr.max_iters)},
      {"lr.tolerance", FormatDouble(c.lr.tolerance)},
      {"lir.ridge", FormatDouble(c.lir_ridge)},
      {"window", std::to_string(c.window)},
      {"out", c.out_dir},
  };
  return out;
}

std::string FormatConfig(const RunConfig& config) {
  std::string out;
  if (!config.profile.empty()) out += "# profile: " + config.profile + "\n";
  for (const auto& [key, value] : ConfigSettings(config)) {
    out += key + " = " + value + "\n";
  }
  return out;
}

std::string DefaultOutputRoot() {
  const char* root = std::getenv("GLASSBOX_OUTPUT_ROOT");
  return root != nullptr && *root != '\0' ? root : "runs";
}

}  // namespace glassbox
