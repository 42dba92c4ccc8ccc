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

#include "config.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

#include "locc/errors.hpp"

namespace locc::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <typename T>
T parse_value(std::string_view key, std::string_view text) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorCode::kParse,
                "bad value '" + std::string(text) + "' for " + std::string(key));
  }
  return value;
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::kText;
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  throw Error(ErrorCode::kParse, "unknown format '" + std::string(name) + "'");
}

void Config::validate() const {
  tol.validate();
  if (size_cap == 0 || m_max == 0 || catalyst_dim == 0 || grid_steps == 0) {
    throw Error(ErrorCode::kInvalidArgument, "config values must be positive");
  }
}

void apply_config(std::string_view text, Config& config) {
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    const std::string_view view = trim(line);
    if (view.empty() || view.front() == '#') continue;
    const std::size_t eq = view.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::kParse, "expected key=value, got '" + std::string(view) + "'");
    }
    const std::string_view key = trim(view.substr(0, eq));
    const std::string_view value = trim(view.substr(eq + 1));
    if (key == "tol_norm") {
      config.tol.norm = parse_value<double>(key, value);
    } else if (key == "tol_zero") {
      config.tol.zero = parse_value<double>(key, value);
    } else if (key == "tol_cmp") {
      config.tol.cmp = parse_value<double>(key, value);
    } else if (key == "size_cap") {
      config.size_cap = parse_value<std::size_t>(key, value);
    } else if (key == "m_max") {
      config.m_max = parse_value<unsigned>(key, value);
    } else if (key == "catalyst_dim") {
      config.catalyst_dim = parse_value<unsigned>(key, value);
    } else if (key == "grid_steps") {
      config.grid_steps = parse_value<unsigned>(key, value);
    } else if (key == "threads") {
      config.threads = parse_value<unsigned>(key, value);
    } else if (key == "format") {
      config.format = parse_format(value);
    } else {
      throw Error(ErrorCode::kParse, "unknown config key '" + std::string(key) + "'");
    }
  }
  config.validate();
}

void apply_config_file(const std::filesystem::path& path, Config& config) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot read config " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  apply_config(buffer.str(), config);
}

}  // namespace locc::cli
