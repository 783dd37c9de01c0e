// boxsol: reliable nonlinear equation solving with interval box consistency
// Copyright 2026 The boxsol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "boxsol/propagation.hpp"

namespace boxsol {

enum class SolveStatus { complete, node_budget, time_budget };

const char* solve_status_name(SolveStatus s);

struct SolveOptions {
    Narrower algorithm = Narrower::sbc;
    double eps = 1e-6;
    NarrowOptions narrow;
    AgendaOrder order = AgendaOrder::fifo;
    std::uint64_t max_nodes = 0;  // 0 = unlimited
    double max_seconds = 0.0;     // 0 = unlimited
};

struct SolveResult {
    std::vector<Box> boxes;
    NarrowStats stats;
    SolveStatus status = SolveStatus::complete;
    double wall_seconds = 0.0;
};

// Depth-first branch and prune: propagate, discard failed boxes, emit boxes
// narrower than eps, otherwise bisect the widest domain and recurse.  Every
// solution of the system inside `initial` lies in the union of the emitted
// boxes.
SolveResult solve(const ExprSystem& sys, const Box& initial, const SolveOptions& opts);

// Hull-merge boxes that touch or overlap in every dimension, to a fixpoint;
// result sorted lexicographically by bounds.
std::vector<Box> merge_adjacent(std::vector<Box> boxes);

// Agreement of two emitted sets up to adjacent-box hulls: equal cluster
// counts and pairwise-overlapping corresponding clusters.
bool solution_sets_agree(const std::vector<Box>& a, const std::vector<Box>& b);

}  // namespace boxsol
