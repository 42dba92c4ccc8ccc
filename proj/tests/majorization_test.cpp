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

#include "locc/majorization.hpp"

#include <gtest/gtest.h>

#include <random>

#include "locc/errors.hpp"
#include "locc/genericity.hpp"
#include "oracles.hpp"

using namespace locc;

namespace {

SchmidtSpectrum spec(std::vector<double> v) { return SchmidtSpectrum::from_values(std::move(v)); }

Relation oracle_relation(const oracle::Relation& r) {
  if (r.forward && r.backward) return Relation::kEquivalent;
  if (r.forward) return Relation::kForwardConvertible;
  if (r.backward) return Relation::kBackwardConvertible;
  return Relation::kIncomparable;
}

}  // namespace

TEST(majorized_by, examples) {
  EXPECT_TRUE(majorized_by(spec({0.5, 0.5}), spec({0.7, 0.3})));
  EXPECT_FALSE(majorized_by(spec({0.5, 0.25, 0.25}), spec({0.4, 0.4, 0.2})));
  const auto a = spec({0.3, 0.3, 0.2, 0.1, 0.1});
  EXPECT_TRUE(majorized_by(a, a));
}

TEST(compare, incomparable_example) {
  const auto v = compare(spec({0.5, 0.25, 0.25}), spec({0.4, 0.4, 0.2}));
  EXPECT_EQ(v.relation, Relation::kIncomparable);
  EXPECT_EQ(v.forward_violations, (std::vector<std::size_t>{1}));
  EXPECT_EQ(v.backward_violations, (std::vector<std::size_t>{2}));
  EXPECT_FALSE(v.near_tie);
  const auto o = oracle::brute_relation({0.5, 0.25, 0.25}, {0.4, 0.4, 0.2}, 1e-12);
  EXPECT_EQ(o.forward_violations, v.forward_violations);
  EXPECT_EQ(o.backward_violations, v.backward_violations);
}

TEST(compare, maximally_entangled_converts_to_anything) {
  const auto v = compare(spec({0.25, 0.25, 0.25, 0.25}), spec({1.0, 0, 0, 0}));
  EXPECT_EQ(v.relation, Relation::kForwardConvertible);
  EXPECT_TRUE(v.forward_violations.empty());
  EXPECT_EQ(v.backward_violations, (std::vector<std::size_t>{1, 2, 3}));
}

TEST(compare, condition_c_pair_is_incomparable) {
  const auto v = compare(spec({0.6, 0.2, 0.1, 0.1}), spec({0.5, 0.5, 0, 0}));
  EXPECT_EQ(v.relation, Relation::kIncomparable);
  EXPECT_EQ(v.forward_violations, (std::vector<std::size_t>{1}));
  EXPECT_EQ(v.backward_violations, (std::vector<std::size_t>{2, 3}));
}

TEST(compare, equal_spectra_are_equivalent_with_near_tie) {
  const auto v = compare(spec({0.5, 0.3, 0.2}), spec({0.5, 0.3, 0.2}));
  EXPECT_EQ(v.relation, Relation::kEquivalent);
  EXPECT_TRUE(v.near_tie);
}

TEST(compare, tailed_spectra) {
  // (1/2, 1/4, ...) is majorized by (0.5, 0.5); the reverse fails from k=2 on
  // because the finite spectrum is already saturated there.
  const auto complete = complete_extension(spec({1.0}), 1);
  const auto v = compare(complete, spec({0.5, 0.5}));
  EXPECT_EQ(v.relation, Relation::kForwardConvertible);
  EXPECT_TRUE(v.forward_violations.empty());
  EXPECT_EQ(v.backward_violations.front(), 2u);
    // Tail residual 2^-(t+1) first drops below 1e-12 at t = 39.
  EXPECT_EQ(comparison_horizon(complete, spec({0.5, 0.5})), 40u);
}

TEST(compare, horizon_cap) {
  const auto slow = SchmidtSpectrum::with_tail({0.5}, {0.5 * (1.0 - 0.9999999), 0.9999999});
  EXPECT_THROW(comparison_horizon(slow, slow), Error);
  try {
    compare(slow, spec({1.0}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kHorizonExceeded);
  }
}

TEST(compare, agrees_with_brute_force_on_random_pairs) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 20000; ++trial) {
    const auto na = 1 + rng() % 8;
    const auto nb = 1 + rng() % 8;
    const auto x = oracle::random_simplex(rng, na);
    const auto y = oracle::random_simplex(rng, nb);
    const auto a = spec(x);
    const auto b = spec(y);
    const auto v = compare(a, b);
    const auto o = oracle::brute_relation(a.materialize(na), b.materialize(nb), 1e-12);
    ASSERT_EQ(v.relation, oracle_relation(o));
    ASSERT_EQ(v.forward_violations, o.forward_violations);
    ASSERT_EQ(v.backward_violations, o.backward_violations);
  }
}

TEST(compare, antisymmetry) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 5000; ++trial) {
    const auto n = 2 + rng() % 6;
    const auto a = spec(oracle::random_simplex(rng, n));
    const auto b = spec(oracle::random_simplex(rng, n));
    const auto ab = compare(a, b);
    const auto ba = compare(b, a);
    EXPECT_EQ(ab.relation == Relation::kForwardConvertible,
              ba.relation == Relation::kBackwardConvertible);
    EXPECT_EQ(ab.forward_violations, ba.backward_violations);
  }
}

TEST(majorized_by, transitivity) {
  std::mt19937_64 rng(23);
  int checked = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    const auto n = 2 + rng() % 3;
    const auto a = spec(oracle::random_simplex(rng, n));
    const auto b = spec(oracle::random_simplex(rng, n));
    const auto c = spec(oracle::random_simplex(rng, n));
    if (majorized_by(a, b) && majorized_by(b, c)) {
      ++checked;
      EXPECT_TRUE(majorized_by(a, c));
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(majorized_by, schmidt_number_monotonicity) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 5000; ++trial) {
    auto x = oracle::random_simplex(rng, 1 + rng() % 6);
    auto y = oracle::random_simplex(rng, 1 + rng() % 6);
    x.resize(x.size() + rng() % 4, 0.0);
    y.resize(y.size() + rng() % 4, 0.0);
    const auto a = spec(x);
    const auto b = spec(y);
    if (schmidt_number(a) < schmidt_number(b)) {
      EXPECT_FALSE(majorized_by(a, b));
    }
  }
}

TEST(compare, padding_invariance) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 5000; ++trial) {
    auto x = oracle::random_simplex(rng, 1 + rng() % 6);
    auto y = oracle::random_simplex(rng, 1 + rng() % 6);
    const auto before = compare(spec(x), spec(y));
    x.resize(x.size() + 1 + rng() % 5, 0.0);
    const auto after_a = compare(spec(x), spec(y));
    y.resize(y.size() + 1 + rng() % 5, 0.0);
    const auto after_both = compare(spec(x), spec(y));
    EXPECT_EQ(before, after_a);
    EXPECT_EQ(before, after_both);
  }
}

TEST(majorized_by, top_entry_necessary_condition) {
  std::mt19937_64 rng(26);
  const Tolerances tol;
  for (int trial = 0; trial < 5000; ++trial) {
    const auto a = spec(oracle::random_simplex(rng, 1 + rng() % 6));
    const auto b = spec(oracle::random_simplex(rng, 1 + rng() % 6));
    if (majorized_by(a, b)) EXPECT_LE(a.top(), b.top() + tol.cmp);
  }
}

TEST(compare, verdict_invariants) {
  std::mt19937_64 rng(27);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = spec(oracle::random_simplex(rng, 1 + rng() % 6));
    const auto b = spec(oracle::random_simplex(rng, 1 + rng() % 6));
    const auto v = compare(a, b);
    const bool fwd = v.forward_violations.empty();
    const bool bwd = v.backward_violations.empty();
    EXPECT_EQ(v.relation == Relation::kIncomparable, !fwd && !bwd);
    EXPECT_EQ(v.relation == Relation::kEquivalent, fwd && bwd);
  }
}

TEST(compare, relation_names) {
  EXPECT_EQ(to_string(Relation::kIncomparable), "incomparable");
  EXPECT_EQ(to_string(Relation::kForwardConvertible), "forward_convertible");
  EXPECT_EQ(to_string(Relation::kBackwardConvertible), "backward_convertible");
  EXPECT_EQ(to_string(Relation::kEquivalent), "equivalent");
}
