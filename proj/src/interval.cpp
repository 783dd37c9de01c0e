// boxsol: reliable nonlinear equation solving with interval box consistency
// Copyright 2026 The boxsol Authors
// SPDX-License-Identifier: Apache-2.0

#include "boxsol/interval.hpp"

#include <cmath>
#include <limits>
#include <ostream>

namespace boxsol {

namespace {

// libm results are only faithfully rounded; pad by a few ulps in both
// directions.  3 ulps is above every documented error bound of the functions
// used here, and the containment fuzz suite verifies the padding.
constexpr int kLibmSlop = 3;

double pad_up(double v) { return fp::step_up(v, kLibmSlop); }
double pad_down(double v) { return fp::step_down(v, kLibmSlop); }

// pi is irrational, so the two tightest binary64 neighbours enclose it.
const double kPiLo = 0x1.921fb54442d18p+1;
const double kPiHi = 0x1.921fb54442d19p+1;

Interval pi_interval() { return Interval(kPiLo, kPiHi); }
Interval half_pi() { return Interval(kPiLo * 0.5, kPiHi * 0.5); }  // exact scaling
Interval two_pi() { return Interval(kPiLo * 2.0, kPiHi * 2.0); }

// Conservative: true whenever x may contain a point offset + period*k for
// integer k.  K below encloses every real k with offset + period*k in x, so
// a "no" answer is reliable.
bool may_contain_grid(const Interval& x, const Interval& offset, const Interval& period) {
    const Interval k = div(sub(x, offset), period);
    if (k.is_empty()) return false;
    if (!k.is_bounded()) return true;
    return std::floor(k.hi()) >= std::ceil(k.lo());
}

}  // namespace

Interval sqrt(const Interval& a) {
    if (a.is_empty() || a.hi() < 0.0) return Interval::empty();
    fp::RoundUpScope up;
    const double lo_arg = std::max(0.0, a.lo());
    const double s = std::sqrt(lo_arg);  // roundUp(sqrt), exact per IEEE
    // roundDown(sqrt) is s when s*s == lo_arg exactly, else its predecessor.
    const double lo = (std::fma(s, s, -lo_arg) == 0.0) ? s : fp::prev_float(s);
    const double hi = std::sqrt(a.hi());
    return Interval(lo, hi);
}

Interval exp(const Interval& a) {
    if (a.is_empty()) return a;
    double elo, ehi;
    {
        fp::RoundNearestScope nr;
        elo = std::exp(a.lo());  // exp(-inf) = 0, exp(+inf) = +inf
        ehi = std::exp(a.hi());
    }
    const double lo = std::max(0.0, pad_down(elo));
    const double hi = pad_up(ehi);
    return Interval(lo, hi);
}

Interval log(const Interval& a) {
    if (a.is_empty() || a.hi() <= 0.0) return Interval::empty();
    const double lo_arg = std::max(0.0, a.lo());
    double llo = -kInf, lhi;
    {
        fp::RoundNearestScope nr;
        if (lo_arg > 0.0) llo = std::log(lo_arg);
        lhi = std::log(a.hi());  // log(+inf) = +inf
    }
    return Interval(lo_arg > 0.0 ? pad_down(llo) : -kInf, pad_up(lhi));
}

Interval sin(const Interval& a) {
    if (a.is_empty()) return a;
    fp::RoundUpScope up;
    const bool has_max = may_contain_grid(a, half_pi(), two_pi());
    const bool has_min = may_contain_grid(a, neg(half_pi()), two_pi());
    if (has_max && has_min) return Interval(-1.0, 1.0);
    double sa, sb;
    {
        fp::RoundNearestScope nr;
        sa = std::sin(a.lo());
        sb = std::sin(a.hi());
    }
    const double hi = has_max ? 1.0 : std::min(1.0, pad_up(std::max(sa, sb)));
    const double lo = has_min ? -1.0 : std::max(-1.0, pad_down(std::min(sa, sb)));
    return Interval(lo, hi);
}

Interval cos(const Interval& a) {
    if (a.is_empty()) return a;
    fp::RoundUpScope up;
    const bool has_max = may_contain_grid(a, Interval(0.0, 0.0), two_pi());
    const bool has_min = may_contain_grid(a, pi_interval(), two_pi());
    if (has_max && has_min) return Interval(-1.0, 1.0);
    double ca, cb;
    {
        fp::RoundNearestScope nr;
        ca = std::cos(a.lo());
        cb = std::cos(a.hi());
    }
    const double hi = has_max ? 1.0 : std::min(1.0, pad_up(std::max(ca, cb)));
    const double lo = has_min ? -1.0 : std::max(-1.0, pad_down(std::min(ca, cb)));
    return Interval(lo, hi);
}

Interval tan(const Interval& a) {
    if (a.is_empty()) return a;
    fp::RoundUpScope up;
    if (may_contain_grid(a, half_pi(), pi_interval())) return Interval::entire();
    double ta, tb;
    {
        fp::RoundNearestScope nr;
        ta = std::tan(a.lo());
        tb = std::tan(a.hi());
    }
    // monotone increasing between poles
    return Interval(pad_down(ta), pad_up(tb));
}

Interval sinh(const Interval& a) {
    if (a.is_empty()) return a;
    double slo, shi;
    {
        fp::RoundNearestScope nr;
        slo = std::sinh(a.lo());
        shi = std::sinh(a.hi());
    }
    return Interval(slo == -kInf ? -kInf : pad_down(slo), shi == kInf ? kInf : pad_up(shi));
}

Interval cosh(const Interval& a) {
    if (a.is_empty()) return a;
    const double mig = std::max(0.0, std::max(a.lo(), -a.hi()));
    const double mag = std::max(-a.lo(), a.hi());
    double clo, chi;
    {
        fp::RoundNearestScope nr;
        clo = std::cosh(mig);
        chi = std::cosh(mag);
    }
    return Interval(std::max(1.0, pad_down(clo)), chi == kInf ? kInf : pad_up(chi));
}

Interval tanh(const Interval& a) {
    if (a.is_empty()) return a;
    double tlo, thi;
    {
        fp::RoundNearestScope nr;
        tlo = std::tanh(a.lo());
        thi = std::tanh(a.hi());
    }
    return Interval(std::max(-1.0, pad_down(tlo)), std::min(1.0, pad_up(thi)));
}

std::ostream& operator<<(std::ostream& os, const Interval& a) {
    if (a.is_empty()) return os << "[empty]";
    const auto old = os.precision(17);
    os << '[' << a.lo() << ", " << a.hi() << ']';
    os.precision(old);
    return os;
}

}  // namespace boxsol
