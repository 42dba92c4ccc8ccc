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

#include "locc/catalysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "locc/errors.hpp"
#include "locc/majorization.hpp"
#include "locc/product_stream.hpp"

namespace locc {

namespace {

void require_finite(const SchmidtSpectrum& s, const char* what) {
  if (s.has_tail()) {
    throw Error(ErrorCode::kInfiniteSchmidtNumber,
                std::string(what) + " must have finite Schmidt number");
  }
}

std::size_t saturating_mul(std::size_t x, std::size_t y) {
  if (x != 0 && y > std::numeric_limits<std::size_t>::max() / x) {
    return std::numeric_limits<std::size_t>::max();
  }
  return x * y;
}

std::size_t power_size(std::size_t base, unsigned m) {
  std::size_t out = 1;
  for (unsigned i = 0; i < m; ++i) out = saturating_mul(out, base);
  return out;
}

void check_cap(std::size_t required, std::size_t cap) {
  if (required > cap) throw SizeCapExceeded(required, cap);
}

// Prefix-sum majorization of x (x) c by y (x) c, generating both product
// spectra lazily so a failing prefix stops the work early.
bool product_majorized(std::span<const double> x, std::span<const double> y,
                       std::span<const double> c, double slack) {
  SortedProductStream sx(x, c);
  SortedProductStream sy(y, c);
  const std::size_t length = std::max<std::size_t>(std::max(x.size(), y.size()) * c.size(), 1);
  double px = 0.0;
  double py = 0.0;
  for (std::size_t k = 0; k < length; ++k) {
    if (!sx.done()) px += sx.next();
    if (!sy.done()) py += sy.next();
    if (px > py + slack) return false;
  }
  return true;
}

}  // namespace

std::string_view to_string(Direction direction) {
  return direction == Direction::kForward ? "forward" : "backward";
}

std::string_view to_string(StrongOutcome outcome) {
  switch (outcome) {
    case StrongOutcome::kStrongByC:
      return "strong_by_c";
    case StrongOutcome::kConvertibleWitness:
      return "convertible_witness";
    case StrongOutcome::kInconclusive:
      return "inconclusive";
  }
  return "unknown";
}

ConditionC condition_c(const SchmidtSpectrum& a, const SchmidtSpectrum& b,
                       const Tolerances& tol) {
  require_finite(a, "a");
  require_finite(b, "b");
  tol.validate();
  const std::size_t na = schmidt_number(a, tol).value();
  const std::size_t nb = schmidt_number(b, tol).value();
  const double gap = a.top() - b.top();
  ConditionC out;
  out.satisfied = (gap > tol.cmp && na > nb) || (-gap > tol.cmp && na < nb);
  out.near_tie = !out.satisfied && na != nb && std::fabs(gap) <= tol.cmp;
  return out;
}

SchmidtSpectrum tensor_power_spectrum(const SchmidtSpectrum& a, unsigned m,
                                      std::size_t size_cap) {
  require_finite(a, "a");
  if (m == 0) throw Error(ErrorCode::kInvalidArgument, "copy count must be positive");
  check_cap(power_size(a.head_size(), m), size_cap);
  const auto base = a.head();
  std::vector<double> current(base.begin(), base.end());
  for (unsigned step = 1; step < m; ++step) {
    std::vector<double> next;
    next.reserve(current.size() * base.size());
    for (double p : current) {
      for (double q : base) next.push_back(p * q);
    }
    current = std::move(next);
  }
  std::sort(current.begin(), current.end(), std::greater<>());
  return SchmidtSpectrum::from_sorted(std::move(current));
}

SchmidtSpectrum tensor_product_spectrum(const SchmidtSpectrum& a, const SchmidtSpectrum& c,
                                        std::size_t size_cap) {
  require_finite(a, "a");
  require_finite(c, "catalyst");
  check_cap(saturating_mul(a.head_size(), c.head_size()), size_cap);
  std::vector<double> out;
  out.reserve(a.head_size() * c.head_size());
  for (double p : a.head()) {
    for (double q : c.head()) out.push_back(p * q);
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return SchmidtSpectrum::from_sorted(std::move(out));
}

std::pair<SchmidtSpectrum, SchmidtSpectrum> witness_spectra(const SchmidtSpectrum& a,
                                                            const SchmidtSpectrum& b,
                                                            const ConvertibleWitness& witness,
                                                            std::size_t size_cap) {
  SchmidtSpectrum lhs = tensor_power_spectrum(a, witness.copies, size_cap);
  SchmidtSpectrum rhs = tensor_power_spectrum(b, witness.copies, size_cap);
  if (witness.catalyst) {
    lhs = tensor_product_spectrum(lhs, *witness.catalyst, size_cap);
    rhs = tensor_product_spectrum(rhs, *witness.catalyst, size_cap);
  }
  return {std::move(lhs), std::move(rhs)};
}

bool verify_witness(const SchmidtSpectrum& a, const SchmidtSpectrum& b,
                    const ConvertibleWitness& witness, const Tolerances& tol,
                    std::size_t size_cap) {
  const auto [lhs, rhs] = witness_spectra(a, b, witness, size_cap);
  return witness.direction == Direction::kForward ? majorized_by(lhs, rhs, tol)
                                                  : majorized_by(rhs, lhs, tol);
}

std::optional<ConvertibleWitness> multicopy_convertible(const SchmidtSpectrum& a,
                                                        const SchmidtSpectrum& b, unsigned m_max,
                                                        const Tolerances& tol,
                                                        std::size_t size_cap) {
  require_finite(a, "a");
  require_finite(b, "b");
  if (m_max == 0) throw Error(ErrorCode::kInvalidArgument, "m_max must be positive");
  check_cap(power_size(std::max(a.head_size(), b.head_size()), m_max), size_cap);
  for (unsigned m = 1; m <= m_max; ++m) {
    const SchmidtSpectrum pa = tensor_power_spectrum(a, m, size_cap);
    const SchmidtSpectrum pb = tensor_power_spectrum(b, m, size_cap);
    if (majorized_by(pa, pb, tol)) return ConvertibleWitness{Direction::kForward, m, {}};
    if (majorized_by(pb, pa, tol)) return ConvertibleWitness{Direction::kBackward, m, {}};
  }
  return std::nullopt;
}

std::optional<Direction> catalyst_convertible(const SchmidtSpectrum& a, const SchmidtSpectrum& b,
                                              const SchmidtSpectrum& c, const Tolerances& tol,
                                              std::size_t size_cap) {
  require_finite(a, "a");
  require_finite(b, "b");
  require_finite(c, "catalyst");
  tol.validate();
  check_cap(saturating_mul(std::max(a.head_size(), b.head_size()), c.head_size()), size_cap);
  if (product_majorized(a.head(), b.head(), c.head(), tol.cmp)) return Direction::kForward;
  if (product_majorized(b.head(), a.head(), c.head(), tol.cmp)) return Direction::kBackward;
  return std::nullopt;
}

std::vector<std::vector<double>> catalyst_grid(unsigned dim, unsigned grid_steps) {
  std::vector<std::vector<double>> out;
  if (dim == 0 || grid_steps < dim) return out;
  std::vector<unsigned> parts(dim);
  // Fill parts[pos..] with non-increasing positive integers summing to
  // `remaining`, each at most `cap`, smallest leading value first.
  std::function<void(unsigned, unsigned, unsigned)> fill = [&](unsigned pos, unsigned remaining,
                                                               unsigned cap) {
    const unsigned slots = dim - pos;
    if (slots == 1) {
      if (remaining >= 1 && remaining <= cap) {
        parts[pos] = remaining;
        std::vector<double> v(dim);
        for (unsigned i = 0; i < dim; ++i) {
          v[i] = static_cast<double>(parts[i]) / static_cast<double>(grid_steps);
        }
        out.push_back(std::move(v));
      }
      return;
    }
    const unsigned lo = (remaining + slots - 1) / slots;
    const unsigned hi = std::min(cap, remaining - (slots - 1));
    for (unsigned v = lo; v <= hi; ++v) {
      parts[pos] = v;
      fill(pos + 1, remaining - v, v);
    }
  };
  fill(0, grid_steps, grid_steps);
  return out;
}

std::optional<ConvertibleWitness> catalyst_search(const SchmidtSpectrum& a,
                                                  const SchmidtSpectrum& b, unsigned dim_max,
                                                  unsigned grid_steps, const Tolerances& tol,
                                                  std::size_t size_cap) {
  require_finite(a, "a");
  require_finite(b, "b");
  if (dim_max < 2) throw Error(ErrorCode::kInvalidArgument, "catalyst dimension must be >= 2");
  if (grid_steps < 2) throw Error(ErrorCode::kInvalidArgument, "grid steps must be >= 2");
  check_cap(saturating_mul(std::max(a.head_size(), b.head_size()), dim_max), size_cap);

  const SchmidtSpectrum trivial = SchmidtSpectrum::from_sorted({1.0});
  if (auto dir = catalyst_convertible(a, b, trivial, tol, size_cap)) {
    return ConvertibleWitness{*dir, 1, trivial};
  }
  for (unsigned dim = 2; dim <= dim_max; ++dim) {
    for (auto& values : catalyst_grid(dim, grid_steps)) {
      const SchmidtSpectrum c = SchmidtSpectrum::from_values(std::move(values), tol);
      if (auto dir = catalyst_convertible(a, b, c, tol, size_cap)) {
        return ConvertibleWitness{*dir, 1, c};
      }
    }
  }
  return std::nullopt;
}

StrongVerdict strong_verdict(const SchmidtSpectrum& a, const SchmidtSpectrum& b,
                             const SearchBounds& bounds, const Tolerances& tol,
                             std::size_t size_cap) {
  const ConditionC c = condition_c(a, b, tol);
  // Lightest evidence first: one copy, then one copy with a catalyst, then
  // several copies.
  std::optional<ConvertibleWitness> witness = multicopy_convertible(a, b, 1, tol, size_cap);
  if (!witness) {
    witness = catalyst_search(a, b, bounds.catalyst_dim_max, bounds.grid_steps, tol, size_cap);
  }
  if (!witness && bounds.m_max > 1) {
    witness = multicopy_convertible(a, b, bounds.m_max, tol, size_cap);
  }
  StrongVerdict verdict;
  verdict.checked_bounds = bounds;
  verdict.near_tie = c.near_tie;
  if (c.satisfied && witness) {
    throw Error(ErrorCode::kInternalInconsistency,
                "condition (C) holds but a conversion witness was found");
  }
  if (c.satisfied) {
    verdict.outcome = StrongOutcome::kStrongByC;
  } else if (witness) {
    verdict.outcome = StrongOutcome::kConvertibleWitness;
    verdict.witness = std::move(witness);
  }
  return verdict;
}

}  // namespace locc
