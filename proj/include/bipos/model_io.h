// model_io.h
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
//
// Versioned JSON model files. Saving a loaded model reproduces the file
// byte for byte.

#ifndef BIPOS_MODEL_IO_H_
#define BIPOS_MODEL_IO_H_

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "bipos/bipos_model.h"
#include "bipos/language_model.h"
#include "json.hpp"

namespace bipos {

inline constexpr std::string_view kModelFormat = "bipos-model";
inline constexpr int kModelVersion = 1;

struct LoadedModel {
  std::shared_ptr<LanguageModel> model;
  nlohmann::json metadata;
};

nlohmann::json ModelToJson(const LanguageModel& model,
                           const nlohmann::json& metadata = nlohmann::json::object());
std::string SerializeModel(const LanguageModel& model,
                           const nlohmann::json& metadata = nlohmann::json::object());
void SaveModel(const LanguageModel& model, const std::filesystem::path& path,
               const nlohmann::json& metadata = nlohmann::json::object());

// `regime` replaces the stored unknown-word regime of class-based models.
LoadedModel ModelFromJson(const nlohmann::json& j,
                          std::optional<Regime> regime = std::nullopt);
LoadedModel ParseModel(std::string_view text, std::optional<Regime> regime = std::nullopt);
LoadedModel LoadModel(const std::filesystem::path& path,
                      std::optional<Regime> regime = std::nullopt);

}  // namespace bipos

#endif  // BIPOS_MODEL_IO_H_
