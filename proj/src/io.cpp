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

#include "locc/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <sstream>

#include "locc/errors.hpp"

namespace locc {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view token) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::kParse, "not a number: '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos
                                                                 : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

GeometricTail parse_tail(std::string_view text) {
  text = trim(text);
  constexpr std::string_view kOpen = "geom(";
  if (text.substr(0, kOpen.size()) != kOpen || text.empty() || text.back() != ')') {
    throw Error(ErrorCode::kParse, "tail must read geom(first,ratio)");
  }
  const auto args = split(text.substr(kOpen.size(), text.size() - kOpen.size() - 1), ',');
  if (args.size() != 2) throw Error(ErrorCode::kParse, "geom() takes two arguments");
  return {parse_number(args[0]), parse_number(args[1])};
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

SchmidtSpectrum parse_spectrum(std::string_view text, const Tolerances& tol) {
  text = trim(text);
  if (!text.empty() && text.front() == '{') {
    nlohmann::ordered_json json;
    try {
      json = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::ordered_json::exception& e) {
      throw Error(ErrorCode::kParse, e.what());
    }
    return spectrum_from_json(json, tol);
  }
  const std::size_t dots = text.find("...");
  const std::string_view head_text = trim(text.substr(0, dots));
  std::vector<double> head;
  if (!head_text.empty()) {
    for (std::string_view token : split(head_text, ',')) head.push_back(parse_number(token));
  }
  if (dots == std::string_view::npos) {
    if (head.empty()) throw Error(ErrorCode::kParse, "empty spectrum");
    return SchmidtSpectrum::from_values(std::move(head), tol);
  }
  return SchmidtSpectrum::with_tail(std::move(head), parse_tail(text.substr(dots + 3)), tol);
}

std::string format_spectrum(const SchmidtSpectrum& spectrum) {
  std::string out;
  for (double v : spectrum.head()) {
    if (!out.empty()) out += ',';
    out += format_double(v);
  }
  if (spectrum.has_tail()) {
    out += "...geom(" + format_double(spectrum.tail()->first) + "," +
           format_double(spectrum.tail()->ratio) + ")";
  }
  return out;
}

nlohmann::ordered_json spectrum_to_json(const SchmidtSpectrum& spectrum) {
  nlohmann::ordered_json json;
  json["values"] = std::vector<double>(spectrum.head().begin(), spectrum.head().end());
  if (spectrum.has_tail()) {
    json["tail"] = {{"first", spectrum.tail()->first}, {"ratio", spectrum.tail()->ratio}};
  } else {
    json["tail"] = nullptr;
  }
  return json;
}

SchmidtSpectrum spectrum_from_json(const nlohmann::ordered_json& json, const Tolerances& tol) {
  try {
    auto values = json.at("values").get<std::vector<double>>();
    if (json.contains("tail") && !json.at("tail").is_null()) {
      const auto& t = json.at("tail");
      return SchmidtSpectrum::with_tail(
          std::move(values), {t.at("first").get<double>(), t.at("ratio").get<double>()}, tol);
    }
    return SchmidtSpectrum::from_values(std::move(values), tol);
  } catch (const nlohmann::ordered_json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

nlohmann::ordered_json verdict_to_json(const ComparisonVerdict& verdict) {
  return {{"relation", std::string(to_string(verdict.relation))},
          {"forward_violations", verdict.forward_violations},
          {"backward_violations", verdict.backward_violations},
          {"near_tie", verdict.near_tie}};
}

ComparisonVerdict verdict_from_json(const nlohmann::ordered_json& json) {
  try {
    ComparisonVerdict verdict;
    const auto relation = json.at("relation").get<std::string>();
    bool known = false;
    for (Relation r : {Relation::kForwardConvertible, Relation::kBackwardConvertible,
                       Relation::kEquivalent, Relation::kIncomparable}) {
      if (to_string(r) == relation) {
        verdict.relation = r;
        known = true;
      }
    }
    if (!known) throw Error(ErrorCode::kParse, "unknown relation " + relation);
    verdict.forward_violations = json.at("forward_violations").get<std::vector<std::size_t>>();
    verdict.backward_violations = json.at("backward_violations").get<std::vector<std::size_t>>();
    verdict.near_tie = json.at("near_tie").get<bool>();
    return verdict;
  } catch (const nlohmann::ordered_json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

nlohmann::ordered_json strong_to_json(const StrongVerdict& verdict, const SchmidtSpectrum& a,
                              const SchmidtSpectrum& b, std::size_t size_cap) {
  nlohmann::ordered_json json;
  json["outcome"] = std::string(to_string(verdict.outcome));
  if (verdict.witness) {
    const ConvertibleWitness& w = *verdict.witness;
    const auto [a_side, b_side] = witness_spectra(a, b, w, size_cap);
    json["witness"] = {
        {"direction", std::string(to_string(w.direction))},
        {"copies", w.copies},
        {"catalyst", w.catalyst ? spectrum_to_json(*w.catalyst) : nlohmann::ordered_json(nullptr)},
        {"a_side", spectrum_to_json(a_side)},
        {"b_side", spectrum_to_json(b_side)},
    };
  } else {
    json["witness"] = nullptr;
  }
  json["checked_bounds"] = {{"m_max", verdict.checked_bounds.m_max},
                            {"catalyst_dim_max", verdict.checked_bounds.catalyst_dim_max},
                            {"grid_steps", verdict.checked_bounds.grid_steps}};
  json["near_tie"] = verdict.near_tie;
  json["a"] = spectrum_to_json(a);
  json["b"] = spectrum_to_json(b);
  return json;
}

nlohmann::ordered_json sweep_to_json(std::span<const SweepRecord> records) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const SweepRecord& r : records) {
    out.push_back({{"n", r.n},
                   {"samples", r.samples},
                   {"incomparable", r.incomparable},
                   {"forward", r.forward},
                   {"backward", r.backward},
                   {"equivalent", r.equivalent},
                   {"near_ties", r.near_ties},
                   {"near_product", r.near_product},
                   {"fraction", r.fraction},
                   {"ci95", r.ci95_halfwidth},
                   {"seed", r.seed},
                   {"tol", {{"norm", r.tol.norm}, {"zero", r.tol.zero}, {"cmp", r.tol.cmp}}}});
  }
  return out;
}

std::vector<SweepRecord> sweep_from_json(const nlohmann::ordered_json& json) {
  try {
    std::vector<SweepRecord> out;
    for (const auto& j : json) {
      SweepRecord r;
      r.n = j.at("n").get<std::size_t>();
      r.samples = j.at("samples").get<std::size_t>();
      r.incomparable = j.at("incomparable").get<std::size_t>();
      r.forward = j.at("forward").get<std::size_t>();
      r.backward = j.at("backward").get<std::size_t>();
      r.equivalent = j.at("equivalent").get<std::size_t>();
      r.near_ties = j.at("near_ties").get<std::size_t>();
      r.near_product = j.at("near_product").get<std::size_t>();
      r.fraction = j.at("fraction").get<double>();
      r.ci95_halfwidth = j.at("ci95").get<double>();
      r.seed = j.at("seed").get<std::uint64_t>();
      r.tol = {j.at("tol").at("norm").get<double>(), j.at("tol").at("zero").get<double>(),
               j.at("tol").at("cmp").get<double>()};
      out.push_back(r);
    }
    return out;
  } catch (const nlohmann::ordered_json::exception& e) {
    throw Error(ErrorCode::kParse, e.what());
  }
}

std::string sweep_to_csv(std::span<const SweepRecord> records) {
  std::ostringstream out;
  out << "n,samples,incomparable,fraction,ci95,seed\n";
  for (const SweepRecord& r : records) {
    out << r.n << ',' << r.samples << ',' << r.incomparable << ',' << format_double(r.fraction)
        << ',' << format_double(r.ci95_halfwidth) << ',' << r.seed << '\n';
  }
  return out.str();
}

std::string audit_to_csv(std::span<const ConvergenceRow> rows) {
  std::ostringstream out;
  out << "m,dist_a,dist_b,condition_C,incomparable\n";
  for (const ConvergenceRow& r : rows) {
    out << r.m << ',' << format_double(r.dist_a) << ',' << format_double(r.dist_b) << ','
        << (r.condition_c ? "true" : "false") << ',' << (r.incomparable ? "true" : "false")
        << '\n';
  }
  return out.str();
}

nlohmann::ordered_json audit_to_json(std::span<const ConvergenceRow> rows) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const ConvergenceRow& r : rows) {
    out.push_back({{"m", r.m},
                   {"dist_a", r.dist_a},
                   {"dist_b", r.dist_b},
                   {"condition_C", r.condition_c},
                   {"incomparable", r.incomparable}});
  }
  return out;
}

Eigen::MatrixXcd parse_matrix(std::string_view text) {
  std::vector<std::vector<std::complex<double>>> rows;
  std::vector<std::complex<double>> row;
  auto end_row = [&] {
    if (!row.empty()) rows.push_back(std::move(row));
    row.clear();
  };
  std::size_t i = 0;
  while (i < text.size()) {
    const char ch = text[i];
    if (ch == ';' || ch == '\n') {
      end_row();
      ++i;
    } else if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
      ++i;
    } else if (ch == '(') {
      const std::size_t close = text.find(')', i);
      if (close == std::string_view::npos) throw Error(ErrorCode::kParse, "unclosed '('");
      const auto parts = split(text.substr(i + 1, close - i - 1), ',');
      if (parts.size() != 2) throw Error(ErrorCode::kParse, "complex entries read (re,im)");
      row.emplace_back(parse_number(parts[0]), parse_number(parts[1]));
      i = close + 1;
    } else {
      std::size_t j = i;
      while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j])) &&
             text[j] != ',' && text[j] != ';') {
        ++j;
      }
      row.emplace_back(parse_number(text.substr(i, j - i)), 0.0);
      i = j;
    }
  }
  end_row();
  if (rows.empty()) throw Error(ErrorCode::kParse, "empty matrix");
  const std::size_t cols = rows.front().size();
  Eigen::MatrixXcd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::kParse, "ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    }
  }
  return m;
}

std::vector<std::size_t> parse_index_list(std::string_view text) {
  std::vector<std::size_t> out;
  for (std::string_view token : split(trim(text), ',')) {
    token = trim(token);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
      throw Error(ErrorCode::kParse, "not a non-negative integer: '" + std::string(token) + "'");
    }
    out.push_back(value);
  }
  return out;
}

}  // namespace locc
