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

#include <gtest/gtest.h>

#include <random>

#include "locc/errors.hpp"
#include "oracles.hpp"

using namespace locc;
using nlohmann::ordered_json;

namespace {

SchmidtSpectrum spec(std::vector<double> v) { return SchmidtSpectrum::from_values(std::move(v)); }

ErrorCode parse_error(std::string_view text) {
  try {
    parse_spectrum(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error for '" << text << "'";
  return ErrorCode::kInternalInconsistency;
}

}  // namespace

TEST(format_double, seventeen_significant_digits) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(0.0), "0");
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double x = u(rng);
    EXPECT_EQ(std::stod(format_double(x)), x);
  }
}

TEST(parse_spectrum, plain_list) {
  EXPECT_EQ(parse_spectrum("0.5,0.25,0.25"), spec({0.5, 0.25, 0.25}));
  EXPECT_EQ(parse_spectrum(" 0.25 , 0.5, 0.25 "), spec({0.5, 0.25, 0.25}));
  EXPECT_TRUE(parse_spectrum("0.25,0.5,0.25").adjusted());
}

TEST(parse_spectrum, tail_syntax) {
  const auto s = parse_spectrum("0.45,0.45...geom(0.05,0.5)");
  ASSERT_TRUE(s.has_tail());
  EXPECT_EQ(s.head_size(), 2u);
  EXPECT_EQ(*s.tail(), (GeometricTail{0.05, 0.5}));
  const auto only_tail = parse_spectrum("...geom(0.5,0.5)");
  EXPECT_EQ(only_tail.entry(0), 0.5);
}

TEST(parse_spectrum, json_form) {
  EXPECT_EQ(parse_spectrum(R"({"values":[0.5,0.5],"tail":null})"), spec({0.5, 0.5}));
  const auto s = parse_spectrum(R"({"values":[0.5],"tail":{"first":0.25,"ratio":0.5}})");
  EXPECT_EQ(*s.tail(), (GeometricTail{0.25, 0.5}));
}

TEST(parse_spectrum, errors) {
  EXPECT_EQ(parse_error("0.5,0.6"), ErrorCode::kNotNormalized);
  EXPECT_EQ(parse_error("0.5,abc"), ErrorCode::kParse);
  EXPECT_EQ(parse_error(""), ErrorCode::kParse);
  EXPECT_EQ(parse_error("0.5,,0.5"), ErrorCode::kParse);
  EXPECT_EQ(parse_error("0.5...geom(0.25)"), ErrorCode::kParse);
  EXPECT_EQ(parse_error("0.5...exp(0.25,0.5)"), ErrorCode::kParse);
  EXPECT_EQ(parse_error(R"({"values":"x"})"), ErrorCode::kParse);
  EXPECT_EQ(parse_error("{not json"), ErrorCode::kParse);
}

TEST(format_spectrum, text_round_trip) {
  std::mt19937_64 rng(52);
  for (int i = 0; i < 300; ++i) {
    auto s = spec(oracle::random_simplex(rng, 1 + rng() % 10));
    EXPECT_EQ(parse_spectrum(format_spectrum(s)), s);
  }
  const auto tailed = SchmidtSpectrum::with_tail({0.45, 0.45}, {0.05, 0.5});
  EXPECT_EQ(format_spectrum(tailed), "0.45000000000000001,0.45000000000000001...geom(0.050000000000000003,0.5)");
  EXPECT_EQ(parse_spectrum(format_spectrum(tailed)), tailed);
}

TEST(spectrum_json, round_trip) {
  std::mt19937_64 rng(53);
  for (int i = 0; i < 300; ++i) {
    const auto s = spec(oracle::random_simplex(rng, 1 + rng() % 10));
    const auto text = spectrum_to_json(s).dump();
    EXPECT_EQ(spectrum_from_json(ordered_json::parse(text)), s);
  }
  const auto tailed = SchmidtSpectrum::with_tail({0.45, 0.45}, {0.05, 0.5});
  EXPECT_EQ(spectrum_to_json(tailed).dump(),
            R"({"values":[0.45,0.45],"tail":{"first":0.05,"ratio":0.5}})");
  EXPECT_EQ(spectrum_from_json(ordered_json::parse(spectrum_to_json(tailed).dump())), tailed);
}

TEST(verdict_json, schema_and_round_trip) {
  ComparisonVerdict v;
  v.relation = Relation::kIncomparable;
  v.forward_violations = {1};
  v.backward_violations = {2};
  EXPECT_EQ(verdict_to_json(v).dump(),
            R"({"relation":"incomparable","forward_violations":[1],"backward_violations":[2],"near_tie":false})");
  for (Relation r : {Relation::kForwardConvertible, Relation::kBackwardConvertible,
                     Relation::kEquivalent, Relation::kIncomparable}) {
    v.relation = r;
    v.near_tie = !v.near_tie;
    EXPECT_EQ(verdict_from_json(ordered_json::parse(verdict_to_json(v).dump())), v);
  }
  EXPECT_THROW(verdict_from_json(ordered_json::parse(R"({"relation":"bogus"})")), Error);
}

TEST(strong_json, witness_echoes_spectra) {
  const auto a = spec({0.4, 0.4, 0.1, 0.1});
  const auto b = spec({0.5, 0.25, 0.25});
  const auto verdict = strong_verdict(a, b, {3, 2, 100});
  const auto json = ordered_json::parse(strong_to_json(verdict, a, b).dump());
  EXPECT_EQ(json.at("outcome"), "convertible_witness");
  const auto& w = json.at("witness");
  EXPECT_EQ(w.at("direction"), "forward");
  EXPECT_EQ(w.at("copies"), 1);
  const auto lhs = spectrum_from_json(w.at("a_side"));
  const auto rhs = spectrum_from_json(w.at("b_side"));
  EXPECT_EQ(compare(lhs, rhs).relation, Relation::kForwardConvertible);
  EXPECT_EQ(spectrum_from_json(json.at("a")), a);
  EXPECT_EQ(json.at("checked_bounds").at("catalyst_dim_max"), 2);

  const auto by_c = strong_verdict(spec({0.6, 0.2, 0.1, 0.1}), spec({0.5, 0.5}), {});
  const auto j2 = strong_to_json(by_c, spec({0.6, 0.2, 0.1, 0.1}), spec({0.5, 0.5}));
  EXPECT_EQ(j2.at("outcome"), "strong_by_c");
  EXPECT_TRUE(j2.at("witness").is_null());
}

TEST(sweep_json, round_trip) {
  const std::vector<std::size_t> dims{2, 3};
  const auto records = sweep(dims, 200, 9, {1e-10, 1e-13, 1e-12}, 1);
  const auto back = sweep_from_json(ordered_json::parse(sweep_to_json(records).dump()));
  EXPECT_EQ(back, records);
}

TEST(sweep_csv, header_and_rows) {
  SweepRecord r;
  r.n = 3;
  r.samples = 10;
  r.incomparable = 4;
  r.fraction = 0.4;
  r.ci95_halfwidth = 0.25;
  r.seed = 7;
  const std::vector<SweepRecord> rows{r};
  EXPECT_EQ(sweep_to_csv(rows),
            "n,samples,incomparable,fraction,ci95,seed\n3,10,4,0.40000000000000002,0.25,7\n");
}

TEST(audit_output, csv_and_json) {
  const std::vector<ConvergenceRow> rows{{3, 0.5, 0.25, true, true}, {2, 0.75, 0.5, false, false}};
  EXPECT_EQ(audit_to_csv(rows),
            "m,dist_a,dist_b,condition_C,incomparable\n3,0.5,0.25,true,true\n"
            "2,0.75,0.5,false,false\n");
  EXPECT_EQ(audit_to_json(rows).dump(),
            R"([{"m":3,"dist_a":0.5,"dist_b":0.25,"condition_C":true,"incomparable":true},)"
            R"({"m":2,"dist_a":0.75,"dist_b":0.5,"condition_C":false,"incomparable":false}])");
}

TEST(parse_matrix, formats) {
  const auto m = parse_matrix("0.7071067811865476 0; 0 0.7071067811865476");
  ASSERT_EQ(m.rows(), 2);
  ASSERT_EQ(m.cols(), 2);
  EXPECT_EQ(m(1, 1).real(), 0.7071067811865476);
  const auto c = parse_matrix("(0,0.5),0.5\n0.5 (0.5,0)");
  EXPECT_EQ(c(0, 0), std::complex<double>(0.0, 0.5));
  EXPECT_EQ(c(1, 1), std::complex<double>(0.5, 0.0));
  EXPECT_EQ(parse_matrix("1 2 3\n4 5 6\n").rows(), 2);
  EXPECT_THROW(parse_matrix("1 2; 3"), Error);
  EXPECT_THROW(parse_matrix(""), Error);
  EXPECT_THROW(parse_matrix("(1,2"), Error);
  EXPECT_THROW(parse_matrix("1 x"), Error);
}

TEST(parse_index_list, values_and_errors) {
  EXPECT_EQ(parse_index_list("3,5,10,50"), (std::vector<std::size_t>{3, 5, 10, 50}));
  EXPECT_EQ(parse_index_list(" 2 "), (std::vector<std::size_t>{2}));
  EXPECT_THROW(parse_index_list("3,-1"), Error);
  EXPECT_THROW(parse_index_list("3,,4"), Error);
  EXPECT_THROW(parse_index_list("a"), Error);
}
