// boxsol: reliable nonlinear equation solving with interval box consistency
// Copyright 2026 The boxsol Authors
// SPDX-License-Identifier: Apache-2.0

#include "boxsol/propagation.hpp"

#include <cassert>
#include <deque>
#include <vector>

namespace boxsol {

namespace {

struct Agenda {
    explicit Agenda(std::size_t eqs, std::size_t vars)
        : vars_(vars), queued_(eqs * vars, 0) {}

    bool empty() const { return queue_.empty(); }

    void push(std::size_t eq, std::size_t var) {
        char& q = queued_[eq * vars_ + var];
        if (q) return;  // double wake collapses to a single entry
        q = 1;
        queue_.push_back({eq, var});
    }

    std::pair<std::size_t, std::size_t> pop(AgendaOrder order) {
        std::pair<std::size_t, std::size_t> p;
        if (order == AgendaOrder::fifo) {
            p = queue_.front();
            queue_.pop_front();
        } else {
            p = queue_.back();
            queue_.pop_back();
        }
        queued_[p.first * vars_ + p.second] = 0;
        return p;
    }

private:
    std::size_t vars_;
    std::vector<char> queued_;
    std::deque<std::pair<std::size_t, std::size_t>> queue_;
};

}  // namespace

Box propagate(const ExprSystem& sys, const Box& box0, const PropagateOptions& opts,
              NarrowStats& stats) {
    assert(box0.size() == sys.arity());
    stats.propagations += 1;
    const std::size_t eqs = sys.equation_count();
    const std::size_t vars = sys.arity();

    // adjacency from the mention matrix
    std::vector<std::vector<std::size_t>> vars_of_eq(eqs);
    std::vector<std::vector<std::size_t>> eqs_of_var(vars);
    for (std::size_t e = 0; e < eqs; ++e)
        for (std::size_t v = 0; v < vars; ++v)
            if (sys.mentions(e, v)) {
                vars_of_eq[e].push_back(v);
                eqs_of_var[v].push_back(e);
            }

    Box box = box0;
    if (box.failed()) return box;

    Agenda agenda(eqs, vars);
    for (std::size_t e = 0; e < eqs; ++e)
        for (std::size_t v : vars_of_eq[e]) agenda.push(e, v);

    while (!agenda.empty()) {
        const auto [e, v] = agenda.pop(opts.order);
        const Projection g(sys, e, v, box);
        const Interval before = box[v];
        const Interval after = narrow(opts.algorithm, g, before, opts.narrow, stats);
        if (after.is_empty()) {
            box[v] = Interval::empty();
            return box;
        }
        assert(before.contains(after));
        if (after == before) continue;
        box[v] = after;
        bool wake = true;
        if (opts.wake_damping > 0.0) {
            const double wb = width(before), wa = width(after);
            wake = !(wb > 0.0) || wb == kInf || (wb - wa) >= opts.wake_damping * wb;
        }
        if (!wake) continue;
        for (std::size_t e2 : eqs_of_var[v])
            for (std::size_t v2 : vars_of_eq[e2])
                if (!(e2 == e && v2 == v)) agenda.push(e2, v2);
    }
    return box;
}

}  // namespace boxsol
