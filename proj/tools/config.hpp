// Copyright 2026 The locc Authors
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

#pragma once

#include <cstddef>
#include <filesystem>
#include <string_view>

#include "locc/tolerances.hpp"

namespace locc::cli {

enum class OutputFormat { kText, kJson, kCsv };

OutputFormat parse_format(std::string_view name);

// Defaults shared by every subcommand. A key=value config file may override
// them and command-line flags override the file.
struct Config {
  Tolerances tol;
  std::size_t size_cap = kDefaultSizeCap;
  unsigned m_max = 3;
  unsigned catalyst_dim = 3;
  unsigned grid_steps = 100;
  unsigned threads = 0;
  OutputFormat format = OutputFormat::kText;

  void validate() const;
};

// Environment variable naming a default config file.
inline constexpr const char* kConfigEnv = "LOCC_CONFIG";

// Applies `key = value` lines onto `config`. Blank lines and lines starting
// with '#' are skipped; unknown keys throw Error(kParse). Keys: tol_norm,
// tol_zero, tol_cmp, size_cap, m_max, catalyst_dim, grid_steps, threads,
// format.
void apply_config(std::string_view text, Config& config);
void apply_config_file(const std::filesystem::path& path, Config& config);

}  // namespace locc::cli
