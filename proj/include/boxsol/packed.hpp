// boxsol: reliable nonlinear equation solving with interval box consistency
// Copyright 2026 The boxsol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <utility>

#include "boxsol/interval.hpp"

namespace boxsol::packed {

// Kernel backend.  `lanes` uses SSE2 vector instructions when compiled in;
// `scalar` is the portable software realization of the same lane algebra.
// Both run under the upward rounding scope and agree bit for bit.
enum class Backend { scalar, lanes };

bool lanes_available();

// The two packed types carry independent switches so the downstream
// --vector flag can enable d2 (vector PackedD only) or f4 (both).
Backend backend_d();
Backend backend_f();
void set_backend_d(Backend b);  // falls back to scalar when lanes are unavailable
void set_backend_f(Backend b);
void set_backend(Backend b);  // both at once

// One binary64 interval per vector register, left bound stored negated:
// lanes = (-lo, hi).  With the register rounding direction fixed to +inf,
// both outward-rounded bounds of every operation come out of one vector
// instruction sequence.
struct PackedD {
    double nlo;  // -lo
    double hi;
};

inline PackedD encode(const Interval& a) { return PackedD{-a.lo(), a.hi()}; }

inline Interval decode(const PackedD& p) {
    if (-p.nlo > p.hi) return Interval::empty();
    return Interval(-p.nlo, p.hi);
}

PackedD pd_add(const PackedD& a, const PackedD& b);
PackedD pd_sub(const PackedD& a, const PackedD& b);
PackedD pd_neg(const PackedD& a);
PackedD pd_mul(const PackedD& a, const PackedD& b);
PackedD pd_div(const PackedD& a, const PackedD& b);
PackedD pd_pow_int(const PackedD& a, int n);

// Two binary32 intervals per register: (-lo1, hi1, -lo2, hi2).  Conversion
// from binary64 rounds outward, so each half contains its double-precision
// counterpart; operating on both halves evaluates one function for two
// interval arguments at once.
struct PackedF2 {
    float l[4];
};

PackedF2 encode_pair(const Interval& a, const Interval& b);
std::pair<Interval, Interval> decode_pair(const PackedF2& p);

PackedF2 pf2_add(const PackedF2& a, const PackedF2& b);
PackedF2 pf2_sub(const PackedF2& a, const PackedF2& b);
PackedF2 pf2_neg(const PackedF2& a);
PackedF2 pf2_mul(const PackedF2& a, const PackedF2& b);
PackedF2 pf2_div(const PackedF2& a, const PackedF2& b);
PackedF2 pf2_pow_int(const PackedF2& a, int n);

}  // namespace boxsol::packed
