#include "dedekind/cuts/cut.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace dedekind;
using namespace dedekind::cuts;
using numbers::IntClass;

namespace {

RatClass q(long long p, long long d = 1) { return RatClass::from_ints(p, d); }
const RatClass kMicro = q(1, 1'000'000);

RatClass random_rational(std::mt19937_64& rng, long long bound) {
  std::uniform_int_distribution<long long> num(-bound, bound), den(1, bound);
  return q(num(rng), den(rng));
}

// Plain bisection on x^2 < n, written out separately from the library.
RatClass sqrt_oracle(long long n, int steps) {
  RatClass lo = n == 0 ? q(-1) : q(0), hi = q(n + 1);
  for (int i = 0; i < steps; ++i) {
    const RatClass mid = (lo + hi) * q(1, 2);
    if (mid.sign() < 0 || mid * mid < q(n)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

std::vector<std::pair<std::string, Cut>> sample_cuts() {
  const Cut r2 = cut_sqrt(2);
  return {
      {"sqrt2", r2},
      {"sqrt0", cut_sqrt(0)},
      {"third", cut_from_rational(q(1, 3))},
      {"neg", cut_neg(r2)},
      {"sum", cut_add(r2, cut_from_rational(q(-3, 7)))},
      {"product", cut_mul(r2, cut_sqrt(3))},
      {"negproduct", cut_mul(cut_neg(r2), cut_from_rational(q(5, 2)))},
  };
}

}  // namespace

TEST(Rational, Membership) {
  const Cut z = cut_from_rational(q(0));
  EXPECT_TRUE(z.contains(q(-1)));
  EXPECT_FALSE(z.contains(q(0)));
  const Cut h = cut_from_rational(q(1, 2));
  EXPECT_TRUE(h.contains(q(499, 1000)));
  EXPECT_FALSE(h.contains(q(1, 2)));
  EXPECT_EQ(h.lower(), q(-1, 2));
  EXPECT_EQ(h.upper(), q(3, 2));
}

TEST(Rational, ApproxIsWithinEps) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto r = random_rational(rng, 1000);
    for (const auto& eps : {q(1, 10), q(1, 1000), kMicro}) {
      const auto a = approx(cut_from_rational(r), eps);
      EXPECT_LT(a, r);
      EXPECT_LE(r - a, eps);
    }
  }
  const auto a = approx(cut_from_rational(q(1, 3)), q(1, 1000));
  EXPECT_LE(numbers::abs(a - q(1, 3)), q(1, 1000));
}

TEST(Sqrt, Examples) {
  const auto a4 = approx(cut_sqrt(4), kMicro);
  EXPECT_LE(numbers::abs(a4 - q(2)), kMicro);
  const auto a2 = approx(cut_sqrt(2), kMicro);
  EXPECT_LE(numbers::abs(a2 * a2 - q(2)), q(3, 1'000'000));
  EXPECT_EQ(a2, sqrt_oracle(2, 22));
  const Cut z = cut_sqrt(0);
  EXPECT_FALSE(z.contains(q(0)));
  EXPECT_TRUE(z.contains(q(-1, 1000)));
  EXPECT_LE(numbers::abs(approx(z, kMicro)), kMicro);
}

TEST(Sqrt, QuarterPrecision) {
  const auto r = approx(cut_sqrt(2), q(1, 4));
  EXPECT_LT(r * r, q(2));
  EXPECT_GE((r + q(1, 4)) * (r + q(1, 4)), q(2));
  EXPECT_GT(r, q(5, 4));
  EXPECT_LE(r, q(3, 2));
  EXPECT_EQ(r, sqrt_oracle(2, 4));
}

TEST(Approx, RejectsBadInput) {
  EXPECT_THROW(approx(cut_sqrt(2), q(0)), std::domain_error);
  EXPECT_THROW(approx(cut_sqrt(2), q(-1, 2)), std::domain_error);
  EXPECT_THROW(Cut::from_predicate([](const RatClass& x) { return x < q(5); }, q(6), q(7)), CutInvariantError);
  EXPECT_THROW(Cut::from_predicate([](const RatClass& x) { return x < q(5); }, q(0), q(1)), CutInvariantError);
  EXPECT_THROW(Cut::from_predicate([](const RatClass&) { return true; }, q(1), q(0)), CutInvariantError);
}

TEST(Approx, DetectsPredicateDrift) {
  // Consistent when constructed, then the predicate changes its mind.
  auto calls = std::make_shared<int>(0);
  const Cut c = Cut::from_predicate(
      [calls](const RatClass& x) { return ++*calls <= 2 ? x < q(1) : false; }, q(0), q(2));
  EXPECT_THROW(approx(c, q(1, 8)), CutInvariantError);
}

TEST(Arithmetic, Examples) {
  const Cut r2 = cut_sqrt(2);
  EXPECT_LE(numbers::abs(approx(cut_add(r2, cut_neg(r2)), kMicro)), q(2, 1'000'000));
  EXPECT_LE(numbers::abs(approx(cut_mul(r2, r2), kMicro) - q(2)), q(5, 1'000'000));

  const Cut one = cut_add(cut_from_rational(q(2, 3)), cut_from_rational(q(1, 3)));
  EXPECT_TRUE(one.contains(q(999'999, 1'000'000)));
  EXPECT_FALSE(one.contains(q(1)));
  EXPECT_FALSE(one.contains(q(1'000'001, 1'000'000)));
  EXPECT_TRUE(one.contains(one.lower()));
  EXPECT_FALSE(one.contains(one.upper()));
  const auto a = approx(one, kMicro);
  EXPECT_LT(a, q(1));
  EXPECT_LE(q(1) - a, kMicro);
}

TEST(Arithmetic, SignCases) {
  const Cut r2 = cut_sqrt(2), r3 = cut_sqrt(3);
  const auto check = [](const Cut& c, const RatClass& lo, const RatClass& hi) {
    const auto a = approx(c, kMicro);
    EXPECT_GE(a + kMicro, lo);
    EXPECT_LE(a, hi);
  };
  // sqrt6 in (2.449489, 2.449490)
  check(cut_mul(r2, r3), q(2'449'489, 1'000'000), q(2'449'490, 1'000'000));
  check(cut_mul(cut_neg(r2), r3), q(-2'449'490, 1'000'000), q(-2'449'489, 1'000'000));
  check(cut_mul(cut_neg(r2), cut_neg(r3)), q(2'449'489, 1'000'000), q(2'449'490, 1'000'000));
  check(cut_mul(r2, cut_from_rational(q(0))), q(-1, 1'000'000), q(0));
}

TEST(Refinement, NestedAndShrinking) {
  auto r = cut_sqrt(2).refinement();
  Enclosure prev = r.current();
  for (int i = 0; i < 40; ++i) {
    r.refine();
    const Enclosure e = r.current();
    ASSERT_GE(e.lo, prev.lo);
    ASSERT_LE(e.hi, prev.hi);
    ASSERT_LE(e.width() * q(2), prev.width());
    prev = e;
  }
  EXPECT_LT(prev.lo * prev.lo, q(2));
  EXPECT_GE(prev.hi * prev.hi, q(2));
}

TEST(Render, Sqrt2) {
  EXPECT_EQ(render_decimal(cut_sqrt(2), kMicro), "1.414213 ± 1e-6");
  EXPECT_EQ(render_decimal(cut_sqrt(4), kMicro), "1.999999 ± 1e-6");
  EXPECT_EQ(render_decimal(cut_from_rational(q(-1, 3)), q(1, 1000)), "-0.334 ± 1e-3");
  EXPECT_EQ(render_decimal(cut_sqrt(2), q(1)), "1 ± 1");
  EXPECT_EQ(render_decimal(cut_sqrt(2), q(1, 300)), "1.414 ± 1/300");
  EXPECT_EQ(decimal_places(q(1, 300)), 3u);
  EXPECT_EQ(decimal_places(kMicro), 6u);
}

TEST(Properties, BracketContract) {
  for (const auto& [name, c] : sample_cuts()) {
    EXPECT_TRUE(c.contains(c.lower())) << name;
    EXPECT_FALSE(c.contains(c.upper())) << name;
    for (const auto& eps : {q(1, 2), q(1, 1000), kMicro}) {
      const auto lo = approx(c, eps);
      EXPECT_TRUE(c.contains(lo)) << name;
      EXPECT_FALSE(c.contains(lo + eps)) << name;
    }
  }
}

TEST(Properties, DownwardClosed) {
  std::mt19937_64 rng(358);
  for (const auto& [name, c] : sample_cuts()) {
    const auto mid = approx(c, q(1, 100));
    for (int i = 0; i < 1000; ++i) {
      // Concentrate samples near the boundary.
      auto a = mid + random_rational(rng, 50) * q(1, 20);
      auto b = mid + random_rational(rng, 50) * q(1, 20);
      if (a == b) continue;
      if (b < a) std::swap(a, b);
      if (c.contains(b)) ASSERT_TRUE(c.contains(a)) << name << ' ' << to_string(a) << ' ' << to_string(b);
    }
  }
}

TEST(Properties, ArithmeticCoherence) {
  std::mt19937_64 rng(359);
  const RatClass eps = q(1, 10'000);
  for (int i = 0; i < 40; ++i) {
    const auto r = random_rational(rng, 30), s = random_rational(rng, 30);
    const Cut cr = cut_from_rational(r), cs = cut_from_rational(s);
    const auto close = [&](const Cut& c, const RatClass& exact) {
      const auto a = approx(c, eps);
      EXPECT_LE(numbers::abs(a - exact), eps) << to_string(r) << ' ' << to_string(s);
    };
    close(cut_add(cr, cs), r + s);
    close(cut_neg(cr), -r);
    close(cut_mul(cr, cs), r * s);
  }
}

TEST(Properties, MonotoneRefinement) {
  for (const auto& [name, c] : sample_cuts()) {
    RatClass eps = q(1, 10);
    RatClass prev = approx(c, eps);
    for (int k = 0; k < 6; ++k) {
      const RatClass finer = approx(c, eps * q(1, 10));
      EXPECT_LE(numbers::abs(finer - prev), eps) << name;
      prev = finer;
      eps = eps * q(1, 10);
    }
  }
}
