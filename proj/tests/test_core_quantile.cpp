// Copyright 2026 The coarsequant Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "coarsequant/core_quantile.hpp"
#include "coarsequant/error.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

namespace coarsequant {
namespace {

// The 11-element example vector used throughout, in scrambled order.
const std::vector<double> kExample = {4, 6, 1, 7, 3, 4, 2, 6, 5, 3, 4};

SortedVector sorted(std::vector<double> v) {
  return sort_vector(DataVector(std::move(v)));
}

std::vector<double> iota_vector(int from, int to) {
  std::vector<double> v;
  for (int i = from; i <= to; ++i) v.push_back(i);
  return v;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kInvalidArgument;
}

std::vector<double> as_vector(const SortedVector& y) {
  return {y.values().begin(), y.values().end()};
}

TEST(SortVector, Examples) {
  EXPECT_EQ(as_vector(sorted({3, 1, 2})), (std::vector<double>{1, 2, 3}));
  EXPECT_EQ(as_vector(sorted({5, 5, 5})), (std::vector<double>{5, 5, 5}));
  EXPECT_EQ(as_vector(sorted(kExample)),
            (std::vector<double>{1, 2, 3, 3, 4, 4, 4, 5, 6, 6, 7}));
}

TEST(SortVector, RejectsEmptyAndNonFinite) {
  EXPECT_EQ(code_of([] { DataVector({}); }), ErrorCode::kEmptyInput);
  EXPECT_EQ(code_of([] { DataVector({1.0, std::nan("")}); }),
            ErrorCode::kNonFiniteValue);
  EXPECT_EQ(code_of([] {
              DataVector({std::numeric_limits<double>::infinity()});
            }),
            ErrorCode::kNonFiniteValue);
  EXPECT_EQ(code_of([] { SortedVector::from_sorted({2, 1}); }),
            ErrorCode::kInvalidArgument);
}

TEST(LeftQuantile, Examples) {
  const auto y = sorted(kExample);
  EXPECT_EQ(left_quantile(y, make_rational(1, 2)), 4);
  EXPECT_EQ(left_quantile(y, Rational(1)), 7);
  EXPECT_EQ(left_quantile(sorted(iota_vector(1, 24)), make_rational(1, 2)), 12);
  EXPECT_EQ(left_quantile(y, 0.5), 4);
}

TEST(RightQuantile, Examples) {
  const auto y = sorted(kExample);
  EXPECT_EQ(right_quantile(y, Rational(0)), 1);
  EXPECT_EQ(right_quantile(y, make_rational(4, 11)), 4);
  EXPECT_EQ(right_quantile(sorted(iota_vector(1, 24)), make_rational(1, 2)), 13);
  EXPECT_EQ(right_quantile(y, 0.0), 1);
}

TEST(Quantile, EndpointsAreDomainErrors) {
  const auto y = sorted(kExample);
  EXPECT_EQ(code_of([&] { left_quantile(y, Rational(0)); }), ErrorCode::kDomainError);
  EXPECT_EQ(code_of([&] { left_quantile(y, make_rational(11, 10)); }),
            ErrorCode::kDomainError);
  EXPECT_EQ(code_of([&] { right_quantile(y, Rational(1)); }), ErrorCode::kDomainError);
  EXPECT_EQ(code_of([&] { right_quantile(y, make_rational(-1, 10)); }),
            ErrorCode::kDomainError);
  EXPECT_EQ(code_of([&] { left_quantile(y, 0.0); }), ErrorCode::kDomainError);
  EXPECT_EQ(code_of([&] { right_quantile(y, 1.0); }), ErrorCode::kDomainError);
  EXPECT_EQ(code_of([&] { left_quantile(y, std::nan("")); }), ErrorCode::kDomainError);
  EXPECT_EQ(code_of([] { QuantileQuery(Rational(0), Side::kLeft); }),
            ErrorCode::kDomainError);
  EXPECT_EQ(code_of([] { QuantileQuery(Rational(1), Side::kRight); }),
            ErrorCode::kDomainError);
}

TEST(QuantileIndex, FloatProductsSnapToIntegers) {
  // Neither product is an integer in binary floating point.
  ASSERT_NE(100 * 0.57, 57.0);
  ASSERT_NE(100 * 0.07, 7.0);
  EXPECT_EQ(left_index(100, 0.57), 57u);
  EXPECT_EQ(right_index(100, 0.57), 58u);
  EXPECT_EQ(left_index(100, 0.07), 7u);
  EXPECT_EQ(right_index(100, 0.07), 8u);
  // Far from an integer: no snapping.
  EXPECT_EQ(left_index(10, 0.31), 4u);
  EXPECT_EQ(right_index(10, 0.31), 4u);
}

TEST(PositionInfo, Examples) {
  const auto info = position_info(sorted(kExample), 4);
  EXPECT_EQ(info.min_index, 5u);
  EXPECT_EQ(info.max_index, 7u);
  EXPECT_EQ(info.multiplicity(), 3u);
  EXPECT_EQ(info.spos_lo(), make_rational(4, 11));
  EXPECT_EQ(info.spos_hi(), make_rational(7, 11));

  const auto constant = position_info(sorted({5, 5, 5}), 5);
  EXPECT_EQ(constant.min_index, 1u);
  EXPECT_EQ(constant.max_index, 3u);
  EXPECT_EQ(constant.spos_lo(), Rational(0));
  EXPECT_EQ(constant.spos_hi(), Rational(1));

  // 25 values: three copies of (1, 2, 3, 100, 100) and two blocks of 100s.
  std::vector<double> table;
  for (int i = 0; i < 3; ++i) table.insert(table.end(), {1, 2, 3, 100, 100});
  for (int i = 0; i < 10; ++i) table.push_back(100);
  const auto mixed = position_info(sorted(table), 3);
  EXPECT_EQ(mixed.min_index, 7u);
  EXPECT_EQ(mixed.max_index, 9u);
  EXPECT_EQ(mixed.spos_lo(), make_rational(6, 25));
  EXPECT_EQ(mixed.spos_hi(), make_rational(9, 25));
}

TEST(PositionInfo, NotAnElement) {
  EXPECT_EQ(code_of([] { position_info(sorted({1, 2, 3}), 2.5); }),
            ErrorCode::kNotAnElement);
}

TEST(PositionInfo, DisplacementAndMidpoint) {
  const auto info = position_info(sorted(kExample), 4);
  EXPECT_EQ(info.spos_midpoint(), make_rational(1, 2));
  EXPECT_EQ(info.spos_displacement(make_rational(1, 2)), Rational(0));
  EXPECT_EQ(info.spos_displacement(Rational(1)), make_rational(4, 11));
  EXPECT_EQ(info.spos_displacement(Rational(0)), make_rational(4, 11));
  EXPECT_TRUE(info.spos_contains(make_rational(1, 2)));
  EXPECT_FALSE(info.spos_contains(make_rational(4, 11)));
}

// Index formulas against inf/sup evaluated on the empirical CDF, on a grid
// that hits every jump j/n exactly and the midpoints between them.
TEST(QuantileProperty, IndexFormulasMatchBruteForceCdf) {
  gen::Engine rng(20261015);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = gen::uniform_size(rng, 1, 500);
    const auto x = gen::tied_vector(rng, n);
    const auto y = sorted(x);
    const oracle::EmpiricalCdf cdf(x);
    const auto grid = static_cast<std::int64_t>(4 * n);
    for (std::int64_t j = 0; j <= grid; j += 1 + (trial % 3)) {
      const Rational p = make_rational(j, grid);
      const double pd = static_cast<double>(j) / static_cast<double>(grid);
      if (j > 0) {
        ASSERT_EQ(left_quantile(y, p), cdf.left(j, grid)) << "trial " << trial;
        ASSERT_EQ(left_quantile(y, pd), cdf.left(j, grid)) << "trial " << trial;
      }
      if (j < grid) {
        ASSERT_EQ(right_quantile(y, p), cdf.right(j, grid)) << "trial " << trial;
        ASSERT_EQ(right_quantile(y, pd), cdf.right(j, grid)) << "trial " << trial;
      }
    }
  }
}

TEST(QuantileProperty, OrderingAndMonotonicity) {
  gen::Engine rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = gen::uniform_size(rng, 1, 200);
    const auto y = sorted(gen::tied_vector(rng, n));
    const std::int64_t grid = 3 * static_cast<std::int64_t>(n);
    double prev_left = -std::numeric_limits<double>::infinity();
    double prev_right = prev_left;
    for (std::int64_t j = 1; j < grid; ++j) {
      const Rational p = make_rational(j, grid);
      const double lq = left_quantile(y, p);
      const double rq = right_quantile(y, p);
      ASSERT_LE(lq, rq);
      ASSERT_GE(lq, prev_left);
      ASSERT_GE(rq, prev_right);
      prev_left = lq;
      prev_right = rq;
      // p1 < p2 => rq(p1) <= lq(p2)
      const Rational p2 = make_rational(j + 1, grid);
      ASSERT_LE(rq, left_quantile(y, p2));
    }
  }
}

// Facts about F stated for general distributions, checked on empirical ones.
TEST(QuantileProperty, EmpiricalCdfFacts) {
  gen::Engine rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = gen::uniform_size(rng, 1, 120);
    const auto x = gen::tied_vector(rng, n);
    const auto y = sorted(x);
    const std::int64_t grid = 2 * static_cast<std::int64_t>(n);
    for (std::int64_t j = 1; j < grid; ++j) {
      const Rational p = make_rational(j, grid);
      const double lq = left_quantile(y, p);
      const double rq = right_quantile(y, p);
      // F(lq(p)) >= p
      ASSERT_GE(oracle::ecdf(x, lq), p);
      // P(X < rq(p)) <= p
      std::int64_t below = 0;
      for (double v : x) below += v < rq ? 1 : 0;
      ASSERT_LE(make_rational(below, static_cast<std::int64_t>(n)), p);
      // lq(p) < rq(p) => F(lq(p)) == p
      if (lq < rq) ASSERT_EQ(oracle::ecdf(x, lq), p);
      // x < lq(p) => F(x) < p; x > rq(p) => F(x) > p
      for (double v : x) {
        if (v < lq) ASSERT_LT(oracle::ecdf(x, v), p);
        if (v > rq) ASSERT_GT(oracle::ecdf(x, v), p);
      }
    }
    // P(X = v) > 0 => lq(F(v)) == v
    for (double v : x) ASSERT_EQ(left_quantile(y, oracle::ecdf(x, v)), v);
  }
}

TEST(QuantileProperty, EquivariantUnderIncreasingMaps) {
  gen::Engine rng(13);
  const std::vector<std::function<double(double)>> maps = {
      [](double v) { return 2 * v + 1; }, [](double v) { return v * v * v; }};
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = gen::uniform_size(rng, 1, 150);
    const auto x = gen::tied_vector(rng, n);
    const auto y = sorted(x);
    for (const auto& phi : maps) {
      std::vector<double> mapped;
      for (double v : x) mapped.push_back(phi(v));
      const auto ym = sorted(mapped);
      for (std::int64_t j = 1; j < 40; ++j) {
        const Rational p = make_rational(j, 40);
        ASSERT_EQ(left_quantile(ym, p), phi(left_quantile(y, p)));
        ASSERT_EQ(right_quantile(ym, p), phi(right_quantile(y, p)));
      }
      for (double v : x) {
        const auto a = position_info(y, v);
        const auto b = position_info(ym, phi(v));
        ASSERT_EQ(a.min_index, b.min_index);
        ASSERT_EQ(a.max_index, b.max_index);
      }
    }
  }
}

// p is strictly inside spos(v) exactly when both quantiles equal v; on the
// closed boundary at least one of them differs.
TEST(QuantileProperty, StandardizedPositionCharacterizesQuantiles) {
  gen::Engine rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = gen::uniform_size(rng, 1, 100);
    const auto x = gen::tied_vector(rng, n);
    const auto y = sorted(x);
    const std::int64_t grid = 4 * static_cast<std::int64_t>(n);
    for (double v : std::set<double>(x.begin(), x.end())) {
      const auto info = position_info(y, v);
      const auto [lo, hi] = oracle::index_range(x, v);
      ASSERT_EQ(info.min_index, lo);
      ASSERT_EQ(info.max_index, hi);
      for (std::int64_t j = 1; j < grid; ++j) {
        const Rational p = make_rational(j, grid);
        const bool both = left_quantile(y, p) == v && right_quantile(y, p) == v;
        ASSERT_EQ(info.spos_contains(p), both) << "v=" << v << " p=" << p;
      }
    }
  }
}

}  // namespace
}  // namespace coarsequant
