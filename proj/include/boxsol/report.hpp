// boxsol: reliable nonlinear equation solving with interval box consistency
// Copyright 2026 The boxsol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "boxsol/box.hpp"
#include "boxsol/search.hpp"
#include "boxsol/stats.hpp"

namespace boxsol {

struct RunReport {
    std::string problem;
    std::string algorithm;
    double eps = 1e-6;
    double threshold = 0.25;
    std::string status = "complete";
    double wall_seconds = 0.0;
    NarrowStats stats;
    std::vector<Box> boxes;
};

std::string report_to_json(const RunReport& r);
RunReport report_from_json(const std::string& text);

std::string report_to_text(const RunReport& r);

std::string report_csv_header();
std::string report_to_csv_row(const RunReport& r);

}  // namespace boxsol
