// boxsol: reliable nonlinear equation solving with interval box consistency
// Copyright 2026 The boxsol Authors
// SPDX-License-Identifier: Apache-2.0
//
// Test-only oracles, independent of the library's arithmetic paths:
//  - exact rational evaluation of the field operations,
//  - 50-digit evaluation of the transcendental operators,
//  - a pure-bisection box-consistency narrower (split + "0 not in g" tests
//    only, no Newton), the ground truth for the narrowing algorithms.

#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <random>
#include <vector>

#include "boxsol/expr.hpp"
#include "boxsol/interval.hpp"
#include "boxsol/narrowing.hpp"

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;
using BigFloat = boost::multiprecision::cpp_bin_float_50;

// exact containment of a rational in an interval
inline bool contains(const boxsol::Interval& iv, const Rational& r) {
    if (iv.is_empty()) return false;
    if (iv.lo() != -boxsol::kInf && r < Rational(iv.lo())) return false;
    if (iv.hi() != boxsol::kInf && r > Rational(iv.hi())) return false;
    return true;
}

inline bool contains(const boxsol::Interval& iv, const BigFloat& r) {
    if (iv.is_empty()) return false;
    if (iv.lo() != -boxsol::kInf && r < BigFloat(iv.lo())) return false;
    if (iv.hi() != boxsol::kInf && r > BigFloat(iv.hi())) return false;
    return true;
}

inline Rational rat_pow(const Rational& x, int n) {
    Rational r(1);
    for (int i = 0; i < n; ++i) r *= x;
    return r;
}

// random double in [lo, hi] (both finite), uniform over the reals
inline double sample(std::mt19937_64& rng, double lo, double hi) {
    std::uniform_real_distribution<double> d(lo, hi);
    double v = d(rng);
    if (v < lo) v = lo;
    if (v > hi) v = hi;
    return v;
}

inline double sample(std::mt19937_64& rng, const boxsol::Interval& iv) {
    const double lo = std::max(iv.lo(), -1e300);
    const double hi = std::min(iv.hi(), 1e300);
    return sample(rng, lo, hi);
}

// --- pure-bisection box-consistency narrower --------------------------------

enum class Side { left, right };

inline boxsol::Interval bisect_bound(Side side, const boxsol::Projection& g,
                                     const boxsol::Interval& I, boxsol::NarrowStats& stats) {
    std::vector<boxsol::Interval> work{I};
    while (!work.empty()) {
        boxsol::Interval cur = work.back();
        work.pop_back();
        if (cur.is_empty()) continue;
        if (!g.eval(cur, boxsol::Arith::scalar_d, stats).contains_zero()) continue;
        if (cur.is_canonical()) return cur;
        auto [l, r] = boxsol::split(cur);
        if (side == Side::left) {
            work.push_back(r);
            work.push_back(l);
        } else {
            work.push_back(l);
            work.push_back(r);
        }
    }
    return boxsol::Interval::empty();
}

// Largest box-consistent subinterval by exhaustive dichotomy.
inline boxsol::Interval bisect_narrow(const boxsol::Projection& g, const boxsol::Interval& I,
                                      boxsol::NarrowStats& stats) {
    const boxsol::Interval l = bisect_bound(Side::left, g, I, stats);
    if (l.is_empty()) return boxsol::Interval::empty();
    const boxsol::Interval r =
        bisect_bound(Side::right, g, boxsol::Interval(l.lo(), I.hi()), stats);
    return boxsol::hull(l, r);
}

}  // namespace oracle
