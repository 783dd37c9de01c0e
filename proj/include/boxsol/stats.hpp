// boxsol: reliable nonlinear equation solving with interval box consistency
// Copyright 2026 The boxsol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>

namespace boxsol {

// Work counters shared by evaluation, narrowing, propagation and search.
// All counts are monotone non-decreasing while a call runs.  A paired
// evaluation counts as two g evaluations but one packed call.
struct NarrowStats {
    std::uint64_t g_evals = 0;
    std::uint64_t gprime_evals = 0;
    std::uint64_t newton_steps = 0;
    std::uint64_t splits = 0;
    std::uint64_t loop_iterations = 0;
    std::uint64_t narrow_calls = 0;

    std::uint64_t packed_g_calls = 0;
    std::uint64_t packed_gprime_calls = 0;
    std::uint64_t packed_newton_calls = 0;

    // maximum loop_iterations observed in a single narrowing call
    std::uint64_t max_call_iterations = 0;

    std::uint64_t propagations = 0;
    std::uint64_t search_nodes = 0;

    std::uint64_t evaluation_work() const { return g_evals + gprime_evals; }

    NarrowStats& operator+=(const NarrowStats& o) {
        g_evals += o.g_evals;
        gprime_evals += o.gprime_evals;
        newton_steps += o.newton_steps;
        splits += o.splits;
        loop_iterations += o.loop_iterations;
        narrow_calls += o.narrow_calls;
        packed_g_calls += o.packed_g_calls;
        packed_gprime_calls += o.packed_gprime_calls;
        packed_newton_calls += o.packed_newton_calls;
        if (o.max_call_iterations > max_call_iterations)
            max_call_iterations = o.max_call_iterations;
        propagations += o.propagations;
        search_nodes += o.search_nodes;
        return *this;
    }
};

}  // namespace boxsol
