// boxsol: reliable nonlinear equation solving with interval box consistency
// Copyright 2026 The boxsol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "boxsol/box.hpp"
#include "boxsol/expr.hpp"
#include "boxsol/narrowing.hpp"
#include "boxsol/stats.hpp"

namespace boxsol {

enum class AgendaOrder { fifo, lifo };

struct PropagateOptions {
    Narrower algorithm = Narrower::bc3;
    NarrowOptions narrow;
    AgendaOrder order = AgendaOrder::fifo;
    // minimum relative width improvement required to wake dependents;
    // 0 means any bitwise change wakes
    double wake_damping = 0.0;
};

// Fixpoint revision of every (equation, variable) projection over the box.
// Returns the narrowed box; a failed box carries an empty slot.  Pairs whose
// equation does not mention their variable are never scheduled.
Box propagate(const ExprSystem& sys, const Box& box, const PropagateOptions& opts,
              NarrowStats& stats);

}  // namespace boxsol
