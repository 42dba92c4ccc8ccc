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

#include "cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>

#include "config.hpp"
#include "locc/catalysis.hpp"
#include "locc/errors.hpp"
#include "locc/genericity.hpp"
#include "locc/io.hpp"
#include "locc/majorization.hpp"
#include "locc/sampling.hpp"
#include "locc/schmidt.hpp"

namespace locc::cli {

namespace {

// `@path` reads the argument from a file.
std::string read_argument(const std::string& value) {
  if (value.empty() || value.front() != '@') return value;
  std::ifstream in(value.substr(1));
  if (!in) throw Error(ErrorCode::kParse, "cannot read " + value.substr(1));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

SchmidtSpectrum load_spectrum(const std::string& value, const char* name, const Config& config,
                              std::ostream& err) {
  SchmidtSpectrum s = parse_spectrum(read_argument(value), config.tol);
  if (s.adjusted()) err << "warning: " << name << " was sorted or rescaled on input\n";
  return s;
}

std::string join(const std::vector<std::size_t>& values) {
  if (values.empty()) return "none";
  std::string out;
  for (std::size_t v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

const char* boolean(bool value) { return value ? "true" : "false"; }

std::vector<unsigned> to_unsigned(const std::vector<std::size_t>& values) {
  return {values.begin(), values.end()};
}

std::string witness_text(const ConvertibleWitness& w) {
  std::string out = std::string(to_string(w.direction)) + ", copies=" + std::to_string(w.copies);
  if (w.catalyst) out += ", catalyst=" + format_spectrum(*w.catalyst);
  return out;
}

struct GlobalFlags {
  std::optional<std::string> config;
  std::optional<std::string> format;
  std::optional<double> tol_norm;
  std::optional<double> tol_zero;
  std::optional<double> tol_cmp;
  std::optional<std::size_t> size_cap;
  std::optional<unsigned> threads;
};

Config resolve_config(const GlobalFlags& flags) {
  Config config;
  if (flags.config) {
    apply_config_file(*flags.config, config);
  } else if (const char* path = std::getenv(kConfigEnv); path != nullptr && *path != '\0') {
    apply_config_file(path, config);
  }
  if (flags.format) config.format = parse_format(*flags.format);
  if (flags.tol_norm) config.tol.norm = *flags.tol_norm;
  if (flags.tol_zero) config.tol.zero = *flags.tol_zero;
  if (flags.tol_cmp) config.tol.cmp = *flags.tol_cmp;
  if (flags.size_cap) config.size_cap = *flags.size_cap;
  if (flags.threads) config.threads = *flags.threads;
  config.validate();
  return config;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSizeCapExceeded:
    case ErrorCode::kHorizonExceeded:
      return kExitSizeCap;
    case ErrorCode::kNotFoundWithin:
      return kExitSearchExhausted;
    case ErrorCode::kInternalInconsistency:
      return kExitInternal;
    default:
      return kExitInvalidInput;
  }
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decide LOCC convertibility and incomparability of bipartite pure states",
               "locc"};
  app.fallthrough();
  app.require_subcommand(1);

  GlobalFlags flags;
  app.add_option("--config", flags.config, "key=value config file (default: $LOCC_CONFIG)");
  app.add_option("--format", flags.format, "text, json or csv");
  app.add_option("--tol-norm", flags.tol_norm, "normalization slack");
  app.add_option("--tol-zero", flags.tol_zero, "zero cutoff for Schmidt numbers");
  app.add_option("--tol-cmp", flags.tol_cmp, "prefix-sum comparison slack");
  app.add_option("--size-cap", flags.size_cap, "largest product spectrum to build");
  app.add_option("--threads", flags.threads, "worker threads for sweeps (0 = all cores)");

  std::string matrix;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Schmidt spectrum of a coefficient matrix");
  spectrum_cmd->add_option("--matrix", matrix, "rows separated by ';', or @file")->required();

  std::string a_text;
  std::string b_text;
  std::optional<double> compare_tol;
  auto* compare_cmd = app.add_subcommand("compare", "LOCC relation between two states");
  compare_cmd->add_option("--a", a_text, "spectrum of the first state")->required();
  compare_cmd->add_option("--b", b_text, "spectrum of the second state")->required();
  compare_cmd->add_option("--tol", compare_tol, "prefix-sum comparison slack");

  std::optional<unsigned> m_max;
  std::optional<unsigned> catalyst_dim;
  std::optional<unsigned> grid_steps;
  auto* strong_cmd = app.add_subcommand("strong", "decide strong incomparability");
  strong_cmd->add_option("--a", a_text)->required();
  strong_cmd->add_option("--b", b_text)->required();
  strong_cmd->add_option("--m-max", m_max, "largest copy count searched");
  strong_cmd->add_option("--catalyst-dim", catalyst_dim, "largest catalyst dimension searched");
  strong_cmd->add_option("--grid", grid_steps, "catalyst grid resolution");

  unsigned copies = 1;
  auto* power_cmd = app.add_subcommand("power", "spectrum of the m-fold tensor power");
  power_cmd->add_option("--a", a_text)->required();
  power_cmd->add_option("--m", copies)->required();

  std::optional<std::string> c_text;
  auto* catalyze_cmd = app.add_subcommand("catalyze", "check or search for a catalyst");
  catalyze_cmd->add_option("--a", a_text)->required();
  catalyze_cmd->add_option("--b", b_text)->required();
  catalyze_cmd->add_option("--c", c_text, "catalyst to check; omit to search");
  catalyze_cmd->add_option("--catalyst-dim", catalyst_dim);
  catalyze_cmd->add_option("--grid", grid_steps);

  auto* construct_cmd = app.add_subcommand("construct", "completion and truncation constructions");
  construct_cmd->require_subcommand(1);
  std::string base_text;
  unsigned index = 0;
  auto* complete_cmd = construct_cmd->add_subcommand("complete", "complete extension of a state");
  complete_cmd->add_option("--base", base_text)->required();
  complete_cmd->add_option("--m", index)->required();
  auto* truncate_cmd = construct_cmd->add_subcommand("truncate", "truncation pair at index m");
  truncate_cmd->add_option("--a", a_text)->required();
  truncate_cmd->add_option("--b", b_text)->required();
  truncate_cmd->add_option("--m", index)->required();
  std::string m_list = "3,5,10,50";
  auto* audit_cmd = construct_cmd->add_subcommand("audit", "convergence of truncation pairs");
  audit_cmd->add_option("--a", a_text)->required();
  audit_cmd->add_option("--b", b_text)->required();
  audit_cmd->add_option("--m-list", m_list, "comma-separated truncation indices");

  std::string dims = "2,3,4,6,8,12,16";
  std::size_t samples = 10000;
  std::uint64_t seed = 42;
  std::optional<std::string> out_path;
  auto* sweep_cmd = app.add_subcommand("sweep", "Monte Carlo incomparability fraction");
  sweep_cmd->add_option("--dims", dims, "comma-separated dimensions, ascending");
  sweep_cmd->add_option("--samples", samples, "pairs per dimension");
  sweep_cmd->add_option("--seed", seed);
  sweep_cmd->add_option("--out", out_path, "write to this file instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    const CLI::App* deepest = &app;
    while (!deepest->get_subcommands().empty()) deepest = deepest->get_subcommands().front();
    err << deepest->help();
    return kExitInvalidInput;
  }

  try {
    Config config = resolve_config(flags);
    if (compare_tol) {
      config.tol.cmp = *compare_tol;
      config.tol.validate();
    }
    const bool json = config.format == OutputFormat::kJson;
    auto dump = [&](const nlohmann::ordered_json& j) { out << j.dump(2) << "\n"; };

    if (spectrum_cmd->parsed()) {
      const SchmidtSpectrum s =
          schmidt_spectrum(CoefficientMatrix(parse_matrix(read_argument(matrix))), config.tol);
      const std::size_t rank = schmidt_number(s, config.tol).value();
      if (json) {
        dump({{"spectrum", spectrum_to_json(s)}, {"schmidt_number", rank}});
      } else {
        out << "spectrum: " << format_spectrum(s) << "\nschmidt_number: " << rank << "\n";
      }
    } else if (compare_cmd->parsed()) {
      const auto a = load_spectrum(a_text, "--a", config, err);
      const auto b = load_spectrum(b_text, "--b", config, err);
      const ComparisonVerdict v = compare(a, b, config.tol);
      if (json) {
        dump(verdict_to_json(v));
      } else {
        out << "relation: " << to_string(v.relation)
            << "\nforward_violations: " << join(v.forward_violations)
            << "\nbackward_violations: " << join(v.backward_violations)
            << "\nnear_tie: " << boolean(v.near_tie) << "\n";
      }
    } else if (strong_cmd->parsed()) {
      const auto a = load_spectrum(a_text, "--a", config, err);
      const auto b = load_spectrum(b_text, "--b", config, err);
      const SearchBounds bounds{m_max.value_or(config.m_max),
                                catalyst_dim.value_or(config.catalyst_dim),
                                grid_steps.value_or(config.grid_steps)};
      const StrongVerdict v = strong_verdict(a, b, bounds, config.tol, config.size_cap);
      if (json) {
        dump(strong_to_json(v, a, b, config.size_cap));
      } else {
        out << "outcome: " << to_string(v.outcome) << "\n";
        if (v.witness) out << "witness: " << witness_text(*v.witness) << "\n";
        if (v.outcome == StrongOutcome::kInconclusive) {
          out << "note: no witness within the searched bounds; this is not a proof\n";
        }
        out << "near_tie: " << boolean(v.near_tie) << "\n";
      }
    } else if (power_cmd->parsed()) {
      const auto a = load_spectrum(a_text, "--a", config, err);
      const SchmidtSpectrum p = tensor_power_spectrum(a, copies, config.size_cap);
      if (json) {
        dump(spectrum_to_json(p));
      } else {
        out << format_spectrum(p) << "\n";
      }
    } else if (catalyze_cmd->parsed()) {
      const auto a = load_spectrum(a_text, "--a", config, err);
      const auto b = load_spectrum(b_text, "--b", config, err);
      std::optional<ConvertibleWitness> witness;
      if (c_text) {
        const auto c = load_spectrum(*c_text, "--c", config, err);
        if (auto dir = catalyst_convertible(a, b, c, config.tol, config.size_cap)) {
          witness = ConvertibleWitness{*dir, 1, c};
        }
      } else {
        witness = catalyst_search(a, b, catalyst_dim.value_or(config.catalyst_dim),
                                  grid_steps.value_or(config.grid_steps), config.tol,
                                  config.size_cap);
      }
      if (json) {
        nlohmann::ordered_json j = {{"found", witness.has_value()}};
        if (witness) {
          const auto [a_side, b_side] = witness_spectra(a, b, *witness, config.size_cap);
          j["direction"] = std::string(to_string(witness->direction));
          j["catalyst"] = spectrum_to_json(*witness->catalyst);
          j["a_side"] = spectrum_to_json(a_side);
          j["b_side"] = spectrum_to_json(b_side);
        } else {
          j["direction"] = nullptr;
          j["catalyst"] = nullptr;
        }
        dump(j);
      } else if (witness) {
        out << "direction: " << to_string(witness->direction)
            << "\ncatalyst: " << format_spectrum(*witness->catalyst) << "\n";
      } else {
        out << "direction: none\n";
        if (!c_text) out << "note: no catalyst within the searched bounds; this is not a proof\n";
      }
    } else if (complete_cmd->parsed()) {
      const auto base = load_spectrum(base_text, "--base", config, err);
      const SchmidtSpectrum s = complete_extension(base, index, config.tol);
      if (json) {
        dump(spectrum_to_json(s));
      } else {
        out << format_spectrum(s) << "\n";
      }
    } else if (truncate_cmd->parsed()) {
      const auto a = load_spectrum(a_text, "--a", config, err);
      const auto b = load_spectrum(b_text, "--b", config, err);
      const TruncationPair pair = truncation_pair(a, b, index, config.tol);
      if (json) {
        dump({{"m", pair.m},
              {"a_is_long", pair.a_is_long},
              {"a", spectrum_to_json(pair.a)},
              {"b", spectrum_to_json(pair.b)}});
      } else {
        out << "a: " << format_spectrum(pair.a) << "\nb: " << format_spectrum(pair.b) << "\n";
      }
    } else if (audit_cmd->parsed()) {
      const auto a = load_spectrum(a_text, "--a", config, err);
      const auto b = load_spectrum(b_text, "--b", config, err);
      const auto ms = to_unsigned(parse_index_list(m_list));
      const auto rows = convergence_report(a, b, ms, config.tol);
      if (json) {
        dump(audit_to_json(rows));
      } else {
        out << audit_to_csv(rows);
      }
    } else if (sweep_cmd->parsed()) {
      const auto n_list = parse_index_list(dims);
      const auto records = sweep(n_list, samples, seed, config.tol, config.threads);
      const std::string text = json ? sweep_to_json(records).dump(2) + "\n"
                                    : sweep_to_csv(records);
      if (out_path) {
        std::ofstream file(*out_path, std::ios::binary);
        if (!file) throw Error(ErrorCode::kInvalidArgument, "cannot write " + *out_path);
        file << text;
      } else {
        out << text;
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
  return kExitOk;
}

}  // namespace locc::cli
