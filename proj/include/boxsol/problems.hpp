// boxsol: reliable nonlinear equation solving with interval box consistency
// Copyright 2026 The boxsol Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace boxsol::problems {

// Parameterized families with closed-form definitions.
//   bt    Broyden tridiagonal        quadratic
//   bb    Broyden banded             cubic band
//   dbvf  discrete boundary value    cubic
//   ef    extended Freudenstein-Roth cubic pairs (even n)
//   mc    discrete integral equation cubic, dense
//   tro   Troesch discretization     sinh
//   yam   Yamamura                   cubic plus full linear coupling
//   te3   trigexp chain              exp and sin, tridiagonal
std::vector<std::string> families();

// Fixed catalogue instances shipped as problem files: bro, comb, mat, rob.
std::vector<std::string> static_codes();

bool is_family(const std::string& code);
bool is_static(const std::string& code);

// Problem-file text for a family instance; throws std::invalid_argument on
// unsupported family or size.
std::string generate(const std::string& family, long n);

// Embedded text of a static instance.
std::string static_text(const std::string& code);

// Resolve "bt10", "mc50", "rob", "te3", ... to problem-file text.
// A bare family name picks its catalogue default size.
std::optional<std::string> resolve_code(const std::string& code);

}  // namespace boxsol::problems
