// boxsol: reliable nonlinear equation solving with interval box consistency
// Copyright 2026 The boxsol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "boxsol/box.hpp"
#include "boxsol/expr.hpp"

namespace boxsol {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line, int col)
        : std::runtime_error(msg + " at line " + std::to_string(line) + ", column " +
                             std::to_string(col)),
          line(line),
          col(col) {}
    int line, col;
};

// A problem file: `var x in [lo, hi];` declarations followed by
// `eq <expr> = <expr>;` equations, `#` comments, optional `problem <name>;`
// and `meta solutions|n <int>;` lines.  Parses to a square system.
struct ProblemFile {
    std::string name;
    std::vector<std::string> var_names;
    Box initial;
    ExprSystem system;
    std::optional<long> expected_solutions;
    std::optional<long> scale;
};

ProblemFile parse_problem(std::string_view text);

// Expression over the given variable names; used by tests and tools.
Expr parse_expression(std::string_view text, const std::vector<std::string>& vars);

// Inverse of parsing up to structural identity: parsing the result yields a
// structurally identical tree.
std::string unparse(const Expr& e, const std::vector<std::string>& vars);

std::string unparse_problem(const ProblemFile& p);

}  // namespace boxsol
