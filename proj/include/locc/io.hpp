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

#include <Eigen/Core>
#include <json.hpp>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "locc/catalysis.hpp"
#include "locc/genericity.hpp"
#include "locc/majorization.hpp"
#include "locc/sampling.hpp"
#include "locc/spectrum.hpp"

namespace locc {

// 17 significant digits, enough for any double to round-trip.
std::string format_double(double value);

// Accepts the text form `0.5,0.25,0.25` (optionally `head...geom(first,ratio)`)
// or the JSON form {"values":[...],"tail":{"first":x,"ratio":r}|null}.
// Throws kParse on malformed input; the values are then ingested by
// SchmidtSpectrum, which sorts and rescales them.
SchmidtSpectrum parse_spectrum(std::string_view text, const Tolerances& tol = {});
std::string format_spectrum(const SchmidtSpectrum& spectrum);

nlohmann::ordered_json spectrum_to_json(const SchmidtSpectrum& spectrum);
SchmidtSpectrum spectrum_from_json(const nlohmann::ordered_json& json, const Tolerances& tol = {});

nlohmann::ordered_json verdict_to_json(const ComparisonVerdict& verdict);
ComparisonVerdict verdict_from_json(const nlohmann::ordered_json& json);

// Echoes the witness spectra so a verdict can be re-checked with `compare`.
nlohmann::ordered_json strong_to_json(const StrongVerdict& verdict, const SchmidtSpectrum& a,
                              const SchmidtSpectrum& b, std::size_t size_cap = kDefaultSizeCap);

nlohmann::ordered_json sweep_to_json(std::span<const SweepRecord> records);
std::vector<SweepRecord> sweep_from_json(const nlohmann::ordered_json& json);
// Header n,samples,incomparable,fraction,ci95,seed.
std::string sweep_to_csv(std::span<const SweepRecord> records);

// Header m,dist_a,dist_b,condition_C,incomparable.
std::string audit_to_csv(std::span<const ConvergenceRow> rows);
nlohmann::ordered_json audit_to_json(std::span<const ConvergenceRow> rows);

// Rows separated by ';' or newlines, entries by whitespace. An entry is a
// real number or a complex number written (re,im).
Eigen::MatrixXcd parse_matrix(std::string_view text);

// Comma-separated unsigned integers, e.g. `2,3,4`.
std::vector<std::size_t> parse_index_list(std::string_view text);

}  // namespace locc
