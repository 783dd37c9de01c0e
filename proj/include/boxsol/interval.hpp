// boxsol: reliable nonlinear equation solving with interval box consistency
// Copyright 2026 The boxsol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cassert>
#include <cmath>
#include <iosfwd>
#include <limits>
#include <utility>

#include "boxsol/fpenv.hpp"

namespace boxsol {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Closed connected set of reals with binary64 bounds.  Bounds are never NaN;
// lo may be -inf and hi may be +inf.  The empty set is the sentinel
// [+inf,-inf].  Negative zero is normalized to +0 on construction so that
// value-equal intervals are also bit-equal.
class Interval {
public:
    // [0,0]
    Interval() : lo_(0.0), hi_(0.0) {}

    Interval(double lo, double hi) : lo_(norm(lo)), hi_(norm(hi)) {
        assert(!std::isnan(lo) && !std::isnan(hi));
        assert(lo_ <= hi_);
        assert(lo_ < kInf && hi_ > -kInf);
    }

    static Interval empty() {
        Interval r;
        r.lo_ = kInf;
        r.hi_ = -kInf;
        return r;
    }
    static Interval entire() { return Interval(-kInf, kInf); }
    static Interval point(double x) { return Interval(x, x); }

    double lo() const { return lo_; }
    double hi() const { return hi_; }

    bool is_empty() const { return lo_ > hi_; }
    bool is_point() const { return lo_ == hi_ && !is_empty(); }
    bool is_entire() const { return lo_ == -kInf && hi_ == kInf; }
    bool is_bounded() const { return !is_empty() && std::isfinite(lo_) && std::isfinite(hi_); }

    bool contains(double x) const { return lo_ <= x && x <= hi_; }
    bool contains_zero() const { return lo_ <= 0.0 && 0.0 <= hi_; }
    bool contains(const Interval& other) const {
        return other.is_empty() || (lo_ <= other.lo_ && other.hi_ <= hi_);
    }

    // Indivisible at machine precision: next(lo) >= hi.  False for the empty set.
    bool is_canonical() const { return !is_empty() && fp::next_float(lo_) >= hi_; }

    // Bit-equality modulo the zero normalization done on construction.
    friend bool operator==(const Interval& a, const Interval& b) {
        if (a.is_empty() || b.is_empty()) return a.is_empty() && b.is_empty();
        return a.lo_ == b.lo_ && a.hi_ == b.hi_;
    }
    friend bool operator!=(const Interval& a, const Interval& b) { return !(a == b); }

private:
    static double norm(double x) { return x == 0.0 ? 0.0 : x; }

    double lo_, hi_;
};

// --- plumbing predicates -------------------------------------------------

// Upward-rounded diameter; 0 for the empty set and points, +inf when a bound
// is infinite.
inline double width(const Interval& a) {
    if (a.is_empty()) return 0.0;
    if (a.lo() == -kInf || a.hi() == kInf) return kInf;
    fp::RoundUpScope up;
    return a.hi() - a.lo();
}

// A finite point strictly inside `a` whenever `a` is non-canonical.  Infinite
// bounds are clamped before averaging so splitting always makes progress.
inline double midpoint(const Interval& a) {
    assert(!a.is_empty());
    if (a.is_entire()) return 0.0;
    constexpr double clamp = std::numeric_limits<double>::max() / 2;
    const double lo = a.lo() < -clamp ? -clamp : a.lo();
    const double hi = a.hi() > clamp ? clamp : a.hi();
    double m = 0.5 * lo + 0.5 * hi;  // no overflow for any finite bounds
    if (m <= a.lo()) m = fp::next_float(a.lo());
    if (m >= a.hi()) m = fp::prev_float(a.hi());
    return m;
}

// Halves [lo,m] and [m,hi] covering `a`; requires a non-canonical input.
inline std::pair<Interval, Interval> split(const Interval& a) {
    assert(!a.is_empty() && !a.is_canonical() && "split requires a divisible interval");
    const double m = midpoint(a);
    assert(a.lo() < m && m < a.hi());
    return {Interval(a.lo(), m), Interval(m, a.hi())};
}

inline Interval hull(const Interval& a, const Interval& b) {
    if (a.is_empty()) return b;
    if (b.is_empty()) return a;
    return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

inline Interval intersect(const Interval& a, const Interval& b) {
    if (a.is_empty() || b.is_empty()) return Interval::empty();
    const double lo = std::max(a.lo(), b.lo());
    const double hi = std::min(a.hi(), b.hi());
    if (lo > hi) return Interval::empty();
    return Interval(lo, hi);
}

// --- arithmetic kernels ---------------------------------------------------
//
// Everything below runs under RoundUpScope; lower bounds are computed through
// the negation identity.  mul and div take the max over the four directed
// corner products per bound; a NaN corner can only come from 0*inf (in mul)
// or inf/inf (in div), and in both cases 0 is the exact contribution of that
// corner, so NaN candidates are replaced by 0.  The comparison form matches
// SSE min/max semantics so the lane kernels produce identical bits.

namespace detail {

template <class T>
inline T fix_corner(T c) {
    return std::isnan(c) ? T(0) : c;
}

template <class T>
inline T max4_fixed(T c0, T c1, T c2, T c3) {
    c0 = fix_corner(c0);
    c1 = fix_corner(c1);
    c2 = fix_corner(c2);
    c3 = fix_corner(c3);
    const T m0 = (c0 < c1) ? c1 : c0;
    const T m1 = (c2 < c3) ? c3 : c2;
    return (m0 < m1) ? m1 : m0;
}

// -roundDown(x^n) for x >= 0 as an upward multiplication chain starting at -1.
template <class T>
inline T pow_chain_neg_down(T x, int n) {
    T acc = T(-1);
    for (int i = 0; i < n; ++i) acc = acc * x;
    return acc;
}

// roundUp(x^n) for x >= 0 as an upward multiplication chain starting at 1.
template <class T>
inline T pow_chain_up(T x, int n) {
    T acc = T(1);
    for (int i = 0; i < n; ++i) acc = acc * x;
    return acc;
}

}  // namespace detail

inline Interval add(const Interval& a, const Interval& b) {
    if (a.is_empty() || b.is_empty()) return Interval::empty();
    fp::RoundUpScope up;
    const double nlo = (-a.lo()) + (-b.lo());
    const double hi = a.hi() + b.hi();
    return Interval(-nlo, hi);
}

inline Interval sub(const Interval& a, const Interval& b) {
    if (a.is_empty() || b.is_empty()) return Interval::empty();
    fp::RoundUpScope up;
    const double nlo = (-a.lo()) + b.hi();
    const double hi = a.hi() + (-b.lo());
    return Interval(-nlo, hi);
}

inline Interval neg(const Interval& a) {
    if (a.is_empty()) return a;
    return Interval(-a.hi(), -a.lo());
}

inline Interval mul(const Interval& a, const Interval& b) {
    if (a.is_empty() || b.is_empty()) return Interval::empty();
    fp::RoundUpScope up;
    const double al = a.lo(), ah = a.hi(), bl = b.lo(), bh = b.hi();
    const double nlo =
        detail::max4_fixed((-al) * bl, (-al) * bh, (-ah) * bl, (-ah) * bh);
    const double hi = detail::max4_fixed(al * bl, al * bh, ah * bl, ah * bh);
    return Interval(-nlo, hi);
}

// Quotient over denominators that do not straddle zero.
namespace detail {
inline Interval div_away_from_zero(const Interval& a, const Interval& b) {
    const double al = a.lo(), ah = a.hi(), bl = b.lo(), bh = b.hi();
    const double nlo =
        max4_fixed((-al) / bl, (-al) / bh, (-ah) / bl, (-ah) / bh);
    const double hi = max4_fixed(al / bl, al / bh, ah / bl, ah / bh);
    return Interval(-nlo, hi);
}
}  // namespace detail

// Ordered, disjoint union of at most two intervals; only division and the
// Newton step's modified subtraction produce it.
struct Union2 {
    Interval first = Interval::empty();
    Interval second = Interval::empty();

    bool is_empty() const { return first.is_empty() && second.is_empty(); }

    static Union2 one(const Interval& a) { return Union2{a, Interval::empty()}; }

    static Union2 two(const Interval& a, const Interval& b) {
        if (a.is_empty()) return one(b);
        if (b.is_empty()) return one(a);
        // Merge touching or overlapping pieces to keep the invariant
        // first.hi < second.lo.
        if (a.hi() >= b.lo()) return one(hull(a, b));
        return Union2{a, b};
    }
};

// Set-correct extended division after the relational reading: encloses
// {x/y : x in a, y in b, y != 0}.  When 0 is interior to b the result is a
// union of two half-lines.
inline Union2 extended_div(const Interval& a, const Interval& b) {
    if (a.is_empty() || b.is_empty()) return Union2{};
    fp::RoundUpScope up;
    const bool zero_in_b = b.contains_zero();
    if (!zero_in_b) return Union2::one(detail::div_away_from_zero(a, b));
    // relational reading: a zero numerator admits every quotient
    if (a.contains_zero()) return Union2::one(Interval::entire());
    if (b.lo() == 0.0 && b.hi() == 0.0) return Union2{};
    if (a.lo() > 0.0) {
        // a strictly positive
        if (b.hi() == 0.0) return Union2::one(Interval(-kInf, a.lo() / b.lo()));
        if (b.lo() == 0.0) return Union2::one(Interval(-((-a.lo()) / b.hi()), kInf));
        return Union2::two(Interval(-kInf, a.lo() / b.lo()),
                           Interval(-((-a.lo()) / b.hi()), kInf));
    }
    // a strictly negative
    if (b.hi() == 0.0) return Union2::one(Interval(-((-a.hi()) / b.lo()), kInf));
    if (b.lo() == 0.0) return Union2::one(Interval(-kInf, a.hi() / b.hi()));
    return Union2::two(Interval(-kInf, a.hi() / b.hi()),
                       Interval(-((-a.hi()) / b.lo()), kInf));
}

// Plain quotient: the hull of the extended division.  b = [0,0] yields the
// empty set unless 0 is in a, in which case the whole line.
inline Interval div(const Interval& a, const Interval& b) {
    if (a.is_empty() || b.is_empty()) return Interval::empty();
    if (!b.contains_zero()) {
        fp::RoundUpScope up;
        return detail::div_away_from_zero(a, b);
    }
    const Union2 u = extended_div(a, b);
    return hull(u.first, u.second);
}

// Tight enclosure of {x^n : x in a} for n >= 0; even powers account for the
// fold at zero instead of multiplying the interval by itself.
inline Interval pow_int(const Interval& a, int n) {
    assert(n >= 0);
    if (a.is_empty()) return a;
    if (n == 0) return Interval(1.0, 1.0);
    if (n == 1) return a;
    fp::RoundUpScope up;
    if (n % 2 == 0) {
        const double mig = std::max(0.0, std::max(a.lo(), -a.hi()));
        const double mag = std::max(-a.lo(), a.hi());
        return Interval(-detail::pow_chain_neg_down(mig, n),
                        detail::pow_chain_up(mag, n));
    }
    const double lo = a.lo() >= 0.0 ? -detail::pow_chain_neg_down(a.lo(), n)
                                    : -detail::pow_chain_up(-a.lo(), n);
    const double hi = a.hi() >= 0.0 ? detail::pow_chain_up(a.hi(), n)
                                    : detail::pow_chain_neg_down(-a.hi(), n);
    return Interval(lo, hi);
}

// Hull of the piecewise intersections: an Interval, which may bridge the gap
// of the union.  This is the modified intersection used by the Newton step.
inline Interval intersect(const Interval& a, const Union2& u) {
    return hull(intersect(a, u.first), intersect(a, u.second));
}

// a - u, piecewise with the order flip; pieces may merge after rounding.
inline Union2 sub(const Interval& a, const Union2& u) {
    const Interval p = sub(a, u.second);
    const Interval q = sub(a, u.first);
    if (p.is_empty()) return Union2::one(q);
    if (q.is_empty()) return Union2::one(p);
    if (p.hi() >= q.lo()) return Union2::one(hull(p, q));
    return Union2{p, q};
}

inline Interval operator+(const Interval& a, const Interval& b) { return add(a, b); }
inline Interval operator-(const Interval& a, const Interval& b) { return sub(a, b); }
inline Interval operator*(const Interval& a, const Interval& b) { return mul(a, b); }
inline Interval operator/(const Interval& a, const Interval& b) { return div(a, b); }
inline Interval operator-(const Interval& a) { return neg(a); }

// Transcendental extensions (scalar kernel only; see interval.cpp).
Interval sqrt(const Interval& a);
Interval exp(const Interval& a);
Interval log(const Interval& a);
Interval sin(const Interval& a);
Interval cos(const Interval& a);
Interval tan(const Interval& a);
Interval sinh(const Interval& a);
Interval cosh(const Interval& a);
Interval tanh(const Interval& a);

std::ostream& operator<<(std::ostream& os, const Interval& a);

}  // namespace boxsol
