// boxsol: reliable nonlinear equation solving with interval box consistency
// Copyright 2026 The boxsol Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "boxsol/interval.hpp"
#include "oracle.hpp"

using boxsol::Interval;
using boxsol::kInf;
using boxsol::Union2;
using oracle::Rational;

namespace {

// random finite double spread over many binades
double rand_double(std::mt19937_64& rng, double scale = 1e3) {
    std::uniform_real_distribution<double> mant(-1.0, 1.0);
    std::uniform_int_distribution<int> expo(-12, 12);
    return mant(rng) * scale * std::ldexp(1.0, expo(rng));
}

Interval rand_interval(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> kind(0, 9);
    const int k = kind(rng);
    if (k == 0) return Interval::point(rand_double(rng));
    if (k == 1) return Interval(-kInf, rand_double(rng));
    if (k == 2) return Interval(rand_double(rng), kInf);
    if (k == 3) {
        const double a = rand_double(rng);
        return a <= 0 ? Interval(a, 0.0) : Interval(0.0, a);
    }
    double a = rand_double(rng), b = rand_double(rng);
    if (a > b) std::swap(a, b);
    return Interval(a, b);
}

}  // namespace

TEST_CASE("add examples") {
    CHECK(add(Interval(1, 2), Interval(3, 4)) == Interval(4, 6));
    CHECK(add(Interval(2, 3), Interval(-1, 5)) == Interval(1, 8));
    // decimal constants: enclosure of the real sum, at most 2 ulps wide
    const Interval a = Interval::point(0.1), b = Interval::point(0.2);
    const Interval s = add(a, b);
    const Rational exact = Rational(0.1) + Rational(0.2);
    CHECK(oracle::contains(s, exact));
    CHECK(s.hi() <= boxsol::fp::step_up(s.lo(), 2));
    CHECK(add(Interval::empty(), a).is_empty());
}

TEST_CASE("sub examples") {
    CHECK(sub(Interval(4, 6), Interval(3, 4)) == Interval(0, 3));
    CHECK(sub(Interval(0, 0), Interval(1, 2)) == Interval(-2, -1));
    // dependency effect: x - x over an interval is not [0,0]
    const Interval x(1, 2);
    CHECK(sub(x, x) == Interval(-1, 1));
}

TEST_CASE("mul examples") {
    CHECK(mul(Interval(2, 3), Interval(2, 3)) == Interval(4, 9));
    CHECK(add(mul(Interval(2, 3), Interval(2, 3)), Interval(-1, 5)) == Interval(3, 14));
    CHECK(mul(Interval(-1, 2), Interval(-3, 4)) == Interval(-6, 8));
    CHECK(mul(Interval(0, 0), Interval(-kInf, kInf)) == Interval(0, 0));
}

TEST_CASE("div examples") {
    CHECK(div(Interval(1, 2), Interval(2, 4)) == Interval(0.25, 1));
    CHECK(div(Interval(1, 2), Interval(-1, 1)) == Interval::entire());
    const Interval third = div(Interval(1, 1), Interval(3, 3));
    CHECK(oracle::contains(third, Rational(1) / 3));
    CHECK(third.hi() <= boxsol::fp::step_up(third.lo(), 2));
    // division by the zero point: relational semantics
    CHECK(div(Interval(1, 2), Interval(0, 0)).is_empty());
    CHECK(div(Interval(-1, 1), Interval(0, 0)) == Interval::entire());
}

TEST_CASE("extended division examples") {
    std::mt19937_64 rng(42);
    SUBCASE("denominator straddles zero") {
        const Interval a(1, 2), b(-1, 1);
        const Union2 u = extended_div(a, b);
        CHECK(u.first == Interval(-kInf, -1));
        CHECK(u.second == Interval(1, kInf));
        for (int i = 0; i < 20000; ++i) {
            const double x = oracle::sample(rng, a);
            double y = oracle::sample(rng, b);
            if (y == 0) y = 0.5;
            const Rational q = Rational(x) / Rational(y);
            CHECK((oracle::contains(u.first, q) || oracle::contains(u.second, q)));
        }
    }
    SUBCASE("reduces to plain division") {
        const Union2 u = extended_div(Interval(1, 2), Interval(2, 4));
        CHECK(u.first == div(Interval(1, 2), Interval(2, 4)));
        CHECK(u.second.is_empty());
    }
    SUBCASE("zero endpoint denominator") {
        const Interval a(-2, -1), b(0, 1);
        const Union2 u = extended_div(a, b);
        CHECK(u.first == Interval(-kInf, -1));
        CHECK(u.second.is_empty());
        for (int i = 0; i < 20000; ++i) {
            const double x = oracle::sample(rng, a);
            double y = oracle::sample(rng, 1e-12, 1.0);
            const Rational q = Rational(x) / Rational(y);
            CHECK(oracle::contains(u.first, q));
        }
    }
}

TEST_CASE("pow_int examples") {
    CHECK(pow_int(Interval(-2, 3), 2) == Interval(0, 9));
    CHECK(pow_int(Interval(-2, 3), 3) == Interval(-8, 27));
    CHECK(pow_int(Interval(7.25, 7.25), 0) == Interval(1, 1));
}

TEST_CASE("hull examples") {
    CHECK(hull(Interval(0, 1), Interval(3, 4)) == Interval(0, 4));
    CHECK(hull(Interval::empty(), Interval(3, 4)) == Interval(3, 4));
    CHECK(hull(Interval(1, 5), Interval(2, 3)) == Interval(1, 5));
}

TEST_CASE("split and midpoint") {
    auto [l, r] = split(Interval(0, 2));
    CHECK(l == Interval(0, 1));
    CHECK(r == Interval(1, 2));

    // split of a half-line picks a finite interior point
    auto [l2, r2] = split(Interval(0, kInf));
    CHECK(l2.hi() == r2.lo());
    CHECK(std::isfinite(l2.hi()));
    CHECK(l2.hi() > 0);

    // minimal splittable width: both halves canonical
    const double one_pp = boxsol::fp::step_up(1.0, 2);
    auto [l3, r3] = split(Interval(1.0, one_pp));
    CHECK(l3.is_canonical());
    CHECK(r3.is_canonical());

    CHECK(midpoint(Interval(0, 2)) == 1.0);
    CHECK(midpoint(Interval::entire()) == 0.0);
    const double dm = std::numeric_limits<double>::max();
    const double m = midpoint(Interval(dm / 2, dm));
    CHECK(std::isfinite(m));
    CHECK(m > dm / 2);
    CHECK(m < dm);
}

TEST_CASE("next and prev float") {
    using boxsol::fp::next_float;
    using boxsol::fp::prev_float;
    CHECK(next_float(1.0) == 1.0 + std::ldexp(1.0, -52));
    CHECK(next_float(0.0) == std::numeric_limits<double>::denorm_min());
    CHECK(next_float(kInf) == kInf);
    CHECK(prev_float(-kInf) == -kInf);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100000; ++i) {
        const double x = rand_double(rng);
        CHECK(prev_float(next_float(x)) == x);
        CHECK(next_float(prev_float(x)) == x);
    }
}

TEST_CASE("intersect with a two-piece union") {
    const Union2 u{Interval(-kInf, -1), Interval(1, kInf)};
    CHECK(intersect(Interval(0, 10), u) == Interval(1, 10));
    CHECK(intersect(Interval(-5, 10), u) == Interval(-5, 10));  // hull bridges the gap
    const Union2 v{Interval(4, 5), Interval::empty()};
    CHECK(intersect(Interval(2, 3), v).is_empty());
}

TEST_CASE("canonical predicate") {
    CHECK(Interval(1.0, boxsol::fp::next_float(1.0)).is_canonical());
    CHECK(Interval::point(5.0).is_canonical());
    CHECK(!Interval(1.0, boxsol::fp::step_up(1.0, 2)).is_canonical());
    CHECK(!Interval::empty().is_canonical());
    CHECK(Interval(-kInf, -std::numeric_limits<double>::max()).is_canonical());
}

TEST_CASE("containment fuzz: field operations vs exact rationals") {
    std::mt19937_64 rng(12345);
    for (int i = 0; i < 40000; ++i) {
        const Interval a = rand_interval(rng), b = rand_interval(rng);
        const double x = oracle::sample(rng, a);
        const double y = oracle::sample(rng, b);
        const Rational rx(x), ry(y);
        CHECK(oracle::contains(add(a, b), rx + ry));
        CHECK(oracle::contains(sub(a, b), rx - ry));
        CHECK(oracle::contains(mul(a, b), rx * ry));
        if (y != 0.0) CHECK(oracle::contains(div(a, b), rx / ry));
        const int n = static_cast<int>(rng() % 6);
        CHECK(oracle::contains(pow_int(a, n), oracle::rat_pow(rx, n)));
    }
}

TEST_CASE("containment fuzz: transcendental operations vs 50-digit values") {
    using oracle::BigFloat;
    std::mt19937_64 rng(999);
    std::uniform_real_distribution<double> span(0.0, 8.0);
    for (int i = 0; i < 4000; ++i) {
        double a = oracle::sample(rng, -20.0, 20.0);
        double b = a + span(rng);
        const Interval iv(a, b);
        const double x = oracle::sample(rng, a, b);
        const BigFloat bx(x);
        CHECK(oracle::contains(sin(iv), sin(bx)));
        CHECK(oracle::contains(cos(iv), cos(bx)));
        CHECK(oracle::contains(tan(iv), tan(bx)));
        CHECK(oracle::contains(exp(iv), exp(bx)));
        CHECK(oracle::contains(sinh(iv), sinh(bx)));
        CHECK(oracle::contains(cosh(iv), cosh(bx)));
        CHECK(oracle::contains(tanh(iv), tanh(bx)));
        if (x > 0) {
            CHECK(oracle::contains(log(iv), log(bx)));
            CHECK(oracle::contains(sqrt(iv), sqrt(bx)));
        }
    }
}

TEST_CASE("inclusion monotonicity") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 20000; ++i) {
        const Interval a1 = rand_interval(rng), b1 = rand_interval(rng);
        // widen to build supersets
        const Interval a2 = hull(a1, rand_interval(rng));
        const Interval b2 = hull(b1, rand_interval(rng));
        CHECK(add(a2, b2).contains(add(a1, b1)));
        CHECK(sub(a2, b2).contains(sub(a1, b1)));
        CHECK(mul(a2, b2).contains(mul(a1, b1)));
        const int n = static_cast<int>(rng() % 6);
        CHECK(pow_int(a2, n).contains(pow_int(a1, n)));
    }
}

TEST_CASE("hull of extended division equals plain division") {
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 40000; ++i) {
        const Interval a = rand_interval(rng), b = rand_interval(rng);
        const Union2 u = extended_div(a, b);
        CHECK(hull(u.first, u.second) == div(a, b));
    }
}

TEST_CASE("width") {
    CHECK(boxsol::width(Interval(1, 3)) == 2.0);
    CHECK(boxsol::width(Interval::empty()) == 0.0);
    CHECK(boxsol::width(Interval(0, kInf)) == kInf);
}
