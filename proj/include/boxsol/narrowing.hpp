// boxsol: reliable nonlinear equation solving with interval box consistency
// Copyright 2026 The boxsol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <stdexcept>
#include <string_view>

#include "boxsol/expr.hpp"
#include "boxsol/interval.hpp"
#include "boxsol/stats.hpp"

namespace boxsol {

// Narrowing selector.  bc3/sbc run on plain binary64 intervals, the vd
// variants on lane-packed binary64 (identical results), bc3vf on binary32
// intervals, vsbc on paired binary32 evaluation, and hybrid runs vsbc on wide
// domains before finishing with the packed-double sbc.
enum class Narrower { bc3, bc3vd, bc3vf, sbc, sbcvd, vsbc, hybrid };

const char* narrower_name(Narrower alg);
std::optional<Narrower> narrower_from_name(std::string_view name);

// Every selector listed in one place, in the order of the report columns.
inline constexpr Narrower kAllNarrowers[] = {
    Narrower::bc3,   Narrower::bc3vd, Narrower::bc3vf, Narrower::sbc,
    Narrower::sbcvd, Narrower::vsbc,  Narrower::hybrid,
};

// Narrowing that exceeds its iteration budget indicates a broken termination
// argument, never a legitimate outcome.
struct IterationBudgetError : std::runtime_error {
    explicit IterationBudgetError(const char* where)
        : std::runtime_error(std::string("narrowing iteration budget exceeded in ") + where) {}
};

struct NarrowOptions {
    double hybrid_threshold = 0.25;
    std::uint64_t iteration_budget = 1'000'000;
};

// One interval Newton step I ∩ (at - g([at,at]) / g'(I)) with extended
// division; the subtraction and intersection handle the two-piece union.
// Zero-preserving; empty exactly when the step proves there is no zero.
Interval newton_step(const Projection& g, const Interval& I, double at, Arith arith,
                     NarrowStats& stats);

// Newton steps at midpoints until a step fails to shrink the width by at
// least 25%, or the interval is canonical or empty.
Interval newton_fixpoint(const Projection& g, const Interval& I, Arith arith,
                         NarrowStats& stats);

// Largest subinterval of I whose left canonical slice evaluates through zero;
// dichotomic search accelerated by Newton steps.  right_narrow mirrors it.
Interval left_narrow(const Projection& g, const Interval& I, Arith arith, NarrowStats& stats,
                     const NarrowOptions& opts = {});
Interval right_narrow(const Projection& g, const Interval& I, Arith arith, NarrowStats& stats,
                      const NarrowOptions& opts = {});

// Box-consistency enforcement: left_narrow, then right_narrow over
// [lb(I_l), rb(I)], then the hull.
Interval bc3revise(const Projection& g, const Interval& I, Arith arith, NarrowStats& stats,
                   const NarrowOptions& opts = {});

// Box consistency by shaving: split, test the canonical end slices, discard
// empty halves, one Newton step anchored at each bound, hull, repeat.
Interval sbc(const Projection& g, const Interval& I, Arith arith, NarrowStats& stats,
             const NarrowOptions& opts = {});

// Data-parallel shaving: paired binary32 end-slice evaluations, paired half
// evaluations, and paired Newton steps that reuse the end-slice values as
// numerators.
Interval vsbc(const Projection& g, const Interval& I, NarrowStats& stats,
              const NarrowOptions& opts = {});

// vsbc while the domain is wider than the threshold, then sbc in the given
// arithmetic; the final result is sbc's.
Interval hybrid_narrow(const Projection& g, const Interval& I, double threshold,
                       NarrowStats& stats, const NarrowOptions& opts = {},
                       Arith polish_arith = Arith::packed_d);

// Selector dispatch; also maintains narrow_calls and the per-call iteration
// maximum.
Interval narrow(Narrower alg, const Projection& g, const Interval& I,
                const NarrowOptions& opts, NarrowStats& stats);

}  // namespace boxsol
