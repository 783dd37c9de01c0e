// boxsol: reliable nonlinear equation solving with interval box consistency
// Copyright 2026 The boxsol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "boxsol/interval.hpp"

namespace boxsol {

// Cartesian product of per-variable domains; the solver's search state.
// An empty slot fails the whole box.
struct Box {
    std::vector<Interval> domains;

    Box() = default;
    explicit Box(std::size_t n) : domains(n, Interval()) {}
    Box(std::initializer_list<Interval> d) : domains(d) {}

    std::size_t size() const { return domains.size(); }
    Interval& operator[](std::size_t i) { return domains[i]; }
    const Interval& operator[](std::size_t i) const { return domains[i]; }

    bool failed() const {
        for (const Interval& d : domains)
            if (d.is_empty()) return true;
        return false;
    }

    friend bool operator==(const Box& a, const Box& b) { return a.domains == b.domains; }
};

// max per-slot width
inline double width(const Box& b) {
    double w = 0.0;
    for (const Interval& d : b.domains) w = std::max(w, width(d));
    return w;
}

inline bool contains(const Box& outer, const Box& inner) {
    if (outer.size() != inner.size()) return false;
    for (std::size_t i = 0; i < outer.size(); ++i)
        if (!outer[i].contains(inner[i])) return false;
    return true;
}

}  // namespace boxsol
