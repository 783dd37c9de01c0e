// boxsol: reliable nonlinear equation solving with interval box consistency
// Copyright 2026 The boxsol Authors
// SPDX-License-Identifier: Apache-2.0

#include "boxsol/search.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>

namespace boxsol {

const char* solve_status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::complete: return "complete";
        case SolveStatus::node_budget: return "node-budget";
        case SolveStatus::time_budget: return "time-budget";
    }
    return "?";
}

namespace {

// widest domain, round-robin tiebreak: scan cyclically from the slot after
// the last split; returns -1 when nothing is divisible
int pick_branch_var(const Box& box, int last) {
    const int n = static_cast<int>(box.size());
    double wmax = -1.0;
    for (int i = 0; i < n; ++i) {
        const double w = width(box[i]);
        if (w > wmax && !box[i].is_canonical()) wmax = w;
    }
    if (wmax < 0.0) return -1;
    for (int k = 1; k <= n; ++k) {
        const int i = (last + k) % n;
        if (!box[i].is_canonical() && width(box[i]) == wmax) return i;
    }
    return -1;
}

struct Node {
    Box box;
    int last_split = -1;
};

}  // namespace

SolveResult solve(const ExprSystem& sys, const Box& initial, const SolveOptions& opts) {
    assert(opts.eps > 0.0);
    const auto start = std::chrono::steady_clock::now();
    SolveResult result;
    PropagateOptions popts;
    popts.algorithm = opts.algorithm;
    popts.narrow = opts.narrow;
    popts.order = opts.order;

    std::vector<Node> stack;
    stack.push_back(Node{initial, -1});

    while (!stack.empty()) {
        if (opts.max_nodes && result.stats.search_nodes >= opts.max_nodes) {
            result.status = SolveStatus::node_budget;
            break;
        }
        if (opts.max_seconds > 0.0) {
            const std::chrono::duration<double> el = std::chrono::steady_clock::now() - start;
            if (el.count() > opts.max_seconds) {
                result.status = SolveStatus::time_budget;
                break;
            }
        }
        Node node = std::move(stack.back());
        stack.pop_back();
        result.stats.search_nodes += 1;

        const Box pruned = propagate(sys, node.box, popts, result.stats);
        if (pruned.failed()) continue;
        int var = -1;
        if (width(pruned) < opts.eps || (var = pick_branch_var(pruned, node.last_split)) < 0) {
            result.boxes.push_back(pruned);
            continue;
        }
        auto [lo_half, hi_half] = split(pruned[var]);
        Node left{pruned, var}, right{pruned, var};
        left.box[var] = lo_half;
        right.box[var] = hi_half;
        stack.push_back(std::move(right));
        stack.push_back(std::move(left));
    }

    const std::chrono::duration<double> el = std::chrono::steady_clock::now() - start;
    result.wall_seconds = el.count();
    return result;
}

namespace {

bool boxes_touch(const Box& a, const Box& b) {
    assert(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (intersect(a[i], b[i]).is_empty()) return false;
    return true;
}

Box box_hull(const Box& a, const Box& b) {
    Box r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = hull(a[i], b[i]);
    return r;
}

bool box_less(const Box& a, const Box& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].lo() != b[i].lo()) return a[i].lo() < b[i].lo();
        if (a[i].hi() != b[i].hi()) return a[i].hi() < b[i].hi();
    }
    return false;
}

}  // namespace

std::vector<Box> merge_adjacent(std::vector<Box> boxes) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < boxes.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < boxes.size() && !changed; ++j) {
                if (boxes_touch(boxes[i], boxes[j])) {
                    boxes[i] = box_hull(boxes[i], boxes[j]);
                    boxes.erase(boxes.begin() + static_cast<std::ptrdiff_t>(j));
                    changed = true;
                }
            }
        }
    }
    std::sort(boxes.begin(), boxes.end(), box_less);
    return boxes;
}

bool solution_sets_agree(const std::vector<Box>& a, const std::vector<Box>& b) {
    const std::vector<Box> ca = merge_adjacent(a);
    const std::vector<Box> cb = merge_adjacent(b);
    if (ca.size() != cb.size()) return false;
    for (std::size_t i = 0; i < ca.size(); ++i)
        if (!boxes_touch(ca[i], cb[i])) return false;
    return true;
}

}  // namespace boxsol
