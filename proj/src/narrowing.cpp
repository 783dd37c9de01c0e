// boxsol: reliable nonlinear equation solving with interval box consistency
// Copyright 2026 The boxsol Authors
// SPDX-License-Identifier: Apache-2.0

#include "boxsol/narrowing.hpp"

#include <cassert>
#include <string>
#include <vector>

namespace boxsol {

const char* narrower_name(Narrower alg) {
    switch (alg) {
        case Narrower::bc3: return "bc3";
        case Narrower::bc3vd: return "bc3vd";
        case Narrower::bc3vf: return "bc3vf";
        case Narrower::sbc: return "sbc";
        case Narrower::sbcvd: return "sbcvd";
        case Narrower::vsbc: return "vsbc";
        case Narrower::hybrid: return "hybrid";
    }
    return "?";
}

std::optional<Narrower> narrower_from_name(std::string_view name) {
    for (Narrower alg : kAllNarrowers)
        if (name == narrower_name(alg)) return alg;
    return std::nullopt;
}

namespace {

constexpr std::uint64_t kNewtonStepBudget = 10'000;

Interval left_slice(const Interval& I) {
    return Interval(I.lo(), fp::next_float(I.lo()));
}

Interval right_slice(const Interval& I) {
    return Interval(fp::prev_float(I.hi()), I.hi());
}

// I ∩ (anchor - numerator / g'(I)) with the two-piece division, modified
// subtraction and hull-forming intersection.
Interval newton_contract(const Interval& I, const Interval& anchor,
                         const Interval& numerator, const Interval& gprime,
                         NarrowStats& stats) {
    stats.newton_steps += 1;
    const Union2 quotient = extended_div(numerator, gprime);
    if (quotient.is_empty()) return Interval::empty();
    return intersect(I, sub(anchor, quotient));
}

}  // namespace

Interval newton_step(const Projection& g, const Interval& I, double at, Arith arith,
                     NarrowStats& stats) {
    assert(!I.is_empty());
    const Interval anchor = Interval::point(at);
    const Interval g_at = g.eval(anchor, arith, stats);
    const Interval gprime = g.deriv_eval(I, arith, stats);
    return newton_contract(I, anchor, g_at, gprime, stats);
}

Interval newton_fixpoint(const Projection& g, const Interval& I, Arith arith,
                         NarrowStats& stats) {
    Interval cur = I;
    for (std::uint64_t step = 0; step < kNewtonStepBudget; ++step) {
        if (cur.is_empty() || cur.is_canonical()) return cur;
        const double w = width(cur);
        const Interval next = newton_step(g, cur, midpoint(cur), arith, stats);
        if (next.is_empty() || next == cur) return next;
        if (width(next) > 0.75 * w) return next;
        cur = next;
    }
    throw IterationBudgetError("newton_fixpoint");
}

namespace {

enum class Side { left, right };

// Work-stack form of the dichotomic bound search; the side to improve first
// is pushed last so the traversal order matches the recursive listing.
Interval bound_narrow(Side side, const Projection& g, const Interval& I, Arith arith,
                      NarrowStats& stats, const NarrowOptions& opts) {
    std::vector<Interval> work{I};
    std::uint64_t iters = 0;
    while (!work.empty()) {
        Interval cur = work.back();
        work.pop_back();
        if (++iters > opts.iteration_budget) throw IterationBudgetError("bound_narrow");
        stats.loop_iterations += 1;
        if (cur.is_empty()) continue;
        if (!g.eval(cur, arith, stats).contains_zero()) continue;  // no zero in cur
        if (cur.is_canonical()) return cur;
        cur = newton_fixpoint(g, cur, arith, stats);
        if (cur.is_empty()) continue;
        const Interval slice = side == Side::left ? left_slice(cur) : right_slice(cur);
        if (g.eval(slice, arith, stats).contains_zero()) return cur;  // consistent bound
        if (cur.is_canonical()) continue;  // the covering slice just failed
        auto [l, r] = split(cur);
        stats.splits += 1;
        if (side == Side::left) {
            work.push_back(r);
            work.push_back(l);
        } else {
            work.push_back(l);
            work.push_back(r);
        }
    }
    return Interval::empty();
}

}  // namespace

Interval left_narrow(const Projection& g, const Interval& I, Arith arith, NarrowStats& stats,
                     const NarrowOptions& opts) {
    return bound_narrow(Side::left, g, I, arith, stats, opts);
}

Interval right_narrow(const Projection& g, const Interval& I, Arith arith, NarrowStats& stats,
                      const NarrowOptions& opts) {
    return bound_narrow(Side::right, g, I, arith, stats, opts);
}

Interval bc3revise(const Projection& g, const Interval& I, Arith arith, NarrowStats& stats,
                   const NarrowOptions& opts) {
    if (I.is_empty()) return I;
    const Interval l = left_narrow(g, I, arith, stats, opts);
    if (l.is_empty()) return Interval::empty();
    const Interval r = right_narrow(g, Interval(l.lo(), I.hi()), arith, stats, opts);
    return hull(l, r);
}

Interval sbc(const Projection& g, const Interval& I, Arith arith, NarrowStats& stats,
             const NarrowOptions& opts) {
    if (I.is_empty()) return I;
    bool left_consistent = false, right_consistent = false;
    Interval cur = I;
    std::uint64_t iters = 0;
    do {
        if (++iters > opts.iteration_budget) throw IterationBudgetError("sbc");
        stats.loop_iterations += 1;
        if (cur.is_canonical()) {
            // indivisible: either it evaluates through zero and is consistent,
            // or it can be discarded
            return g.eval(cur, arith, stats).contains_zero() ? cur : Interval::empty();
        }
        auto [il, ir] = split(cur);
        stats.splits += 1;
        if (!left_consistent) {
            if (!g.eval(left_slice(il), arith, stats).contains_zero()) {
                il = Interval(fp::next_float(il.lo()), il.hi());
                if (!g.eval(il, arith, stats).contains_zero()) {
                    il = Interval::empty();
                } else {
                    const Interval anchor = Interval::point(il.lo());
                    const Interval g_at = g.eval(anchor, arith, stats);
                    const Interval gprime = g.deriv_eval(il, arith, stats);
                    il = newton_contract(il, anchor, g_at, gprime, stats);
                }
            } else {
                left_consistent = true;
            }
        }
        if (!right_consistent) {
            if (!g.eval(right_slice(ir), arith, stats).contains_zero()) {
                ir = Interval(ir.lo(), fp::prev_float(ir.hi()));
                if (!g.eval(ir, arith, stats).contains_zero()) {
                    ir = Interval::empty();
                } else {
                    const Interval anchor = Interval::point(ir.hi());
                    const Interval g_at = g.eval(anchor, arith, stats);
                    const Interval gprime = g.deriv_eval(ir, arith, stats);
                    ir = newton_contract(ir, anchor, g_at, gprime, stats);
                }
            } else {
                right_consistent = true;
            }
        }
        cur = hull(il, ir);
    } while (!cur.is_empty() && (!left_consistent || !right_consistent));
    return cur;
}

Interval vsbc(const Projection& g, const Interval& I, NarrowStats& stats,
              const NarrowOptions& opts) {
    if (I.is_empty()) return I;
    bool left_consistent = false, right_consistent = false;
    Interval cur = I;
    std::uint64_t iters = 0;
    do {
        if (++iters > opts.iteration_budget) throw IterationBudgetError("vsbc");
        stats.loop_iterations += 1;
        if (cur.is_canonical()) {
            const auto [v, v2] = g.eval_pair(cur, cur, stats);
            (void)v2;
            return v.contains_zero() ? cur : Interval::empty();
        }
        auto [il, ir] = split(cur);
        stats.splits += 1;
        const auto [jl, jr] = g.eval_pair(left_slice(il), right_slice(ir), stats);
        if (!jl.contains_zero()) {
            il = Interval(fp::next_float(il.lo()), il.hi());
        } else {
            left_consistent = true;
        }
        if (!jr.contains_zero()) {
            ir = Interval(ir.lo(), fp::prev_float(ir.hi()));
        } else {
            right_consistent = true;
        }
        if (!left_consistent || !right_consistent) {
            const auto [kl, kr] = g.eval_pair(il, ir, stats);
            if (!kl.contains_zero()) il = Interval::empty();
            if (!kr.contains_zero()) ir = Interval::empty();
            // two Newton steps performed in parallel, reusing jl and jr as the
            // numerators over the current end slices
            stats.packed_newton_calls += 1;
            const auto [gpl, gpr] = g.deriv_eval_pair(il, ir, stats);
            if (!il.is_empty()) {
                stats.newton_steps += 1;
                const Union2 q = extended_div(jl, gpl);
                il = q.is_empty() ? Interval::empty()
                                  : intersect(il, sub(left_slice(il), q));
            }
            if (!ir.is_empty()) {
                stats.newton_steps += 1;
                const Union2 q = extended_div(jr, gpr);
                ir = q.is_empty() ? Interval::empty()
                                  : intersect(ir, sub(right_slice(ir), q));
            }
        }
        cur = hull(il, ir);
    } while (!cur.is_empty() && (!left_consistent || !right_consistent));
    return cur;
}

Interval hybrid_narrow(const Projection& g, const Interval& I, double threshold,
                       NarrowStats& stats, const NarrowOptions& opts, Arith polish_arith) {
    Interval cur = I;
    if (!cur.is_empty() && width(cur) > threshold) cur = vsbc(g, cur, stats, opts);
    if (cur.is_empty()) return cur;
    return sbc(g, cur, polish_arith, stats, opts);
}

Interval narrow(Narrower alg, const Projection& g, const Interval& I,
                const NarrowOptions& opts, NarrowStats& stats) {
    stats.narrow_calls += 1;
    const std::uint64_t before = stats.loop_iterations;
    Interval result;
    switch (alg) {
        case Narrower::bc3: result = bc3revise(g, I, Arith::scalar_d, stats, opts); break;
        case Narrower::bc3vd: result = bc3revise(g, I, Arith::packed_d, stats, opts); break;
        case Narrower::bc3vf: result = bc3revise(g, I, Arith::scalar_f, stats, opts); break;
        case Narrower::sbc: result = sbc(g, I, Arith::scalar_d, stats, opts); break;
        case Narrower::sbcvd: result = sbc(g, I, Arith::packed_d, stats, opts); break;
        case Narrower::vsbc: result = vsbc(g, I, stats, opts); break;
        case Narrower::hybrid:
            result = hybrid_narrow(g, I, opts.hybrid_threshold, stats, opts);
            break;
    }
    const std::uint64_t used = stats.loop_iterations - before;
    if (used > stats.max_call_iterations) stats.max_call_iterations = used;
    return result;
}

}  // namespace boxsol
