// boxsol: reliable nonlinear equation solving with interval box consistency
// Copyright 2026 The boxsol Authors
// SPDX-License-Identifier: Apache-2.0

#include "boxsol/problems.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

namespace boxsol::problems {

namespace {

std::string var(long i) { return "x" + std::to_string(i); }

void emit_vars(std::ostringstream& os, long n, const std::string& dom) {
    for (long i = 1; i <= n; ++i) os << "var " << var(i) << " in " << dom << ";\n";
}

// Broyden tridiagonal: (3 - 2 x_i) x_i - x_{i-1} - 2 x_{i+1} + 1 = 0,
// x_0 = x_{n+1} = 0.
std::string gen_bt(long n) {
    std::ostringstream os;
    os << "problem bt" << n << ";\nmeta n " << n << ";\n";
    os << "# Broyden tridiagonal; domain: chosen\n";
    emit_vars(os, n, "[-100, 100]");
    for (long i = 1; i <= n; ++i) {
        os << "eq (3 - 2*" << var(i) << ")*" << var(i);
        if (i > 1) os << " - " << var(i - 1);
        if (i < n) os << " - 2*" << var(i + 1);
        os << " + 1 = 0;\n";
    }
    return os.str();
}

// Broyden banded: x_i (2 + 5 x_i^2) + 1 - sum_{j in J_i} x_j (1 + x_j) = 0,
// J_i = { j != i : max(1, i-5) <= j <= min(n, i+1) }.
std::string gen_bb(long n) {
    std::ostringstream os;
    os << "problem bb" << n << ";\nmeta n " << n << ";\n";
    os << "# Broyden banded; domain: chosen\n";
    emit_vars(os, n, "[-100, 100]");
    for (long i = 1; i <= n; ++i) {
        os << "eq " << var(i) << "*(2 + 5*" << var(i) << "^2) + 1";
        const long jlo = std::max<long>(1, i - 5), jhi = std::min<long>(n, i + 1);
        for (long j = jlo; j <= jhi; ++j) {
            if (j == i) continue;
            os << " - " << var(j) << "*(1 + " << var(j) << ")";
        }
        os << " = 0;\n";
    }
    return os.str();
}

// Discrete boundary value: 2 x_i - x_{i-1} - x_{i+1}
//   + (x_i + i/(n+1) + 1)^3 / (2 (n+1)^2) = 0, x_0 = x_{n+1} = 0.
std::string gen_dbvf(long n) {
    std::ostringstream os;
    const long np1 = n + 1;
    os << "problem dbvf" << n << ";\nmeta n " << n << ";\n";
    os << "# discrete boundary value; domain: chosen\n";
    emit_vars(os, n, "[-100, 100]");
    for (long i = 1; i <= n; ++i) {
        os << "eq 2*" << var(i);
        if (i > 1) os << " - " << var(i - 1);
        if (i < n) os << " - " << var(i + 1);
        os << " + (" << var(i) << " + " << i << "/" << np1 << " + 1)^3 / "
           << 2 * np1 * np1 << " = 0;\n";
    }
    return os.str();
}

// Extended Freudenstein-Roth, independent pairs (x_{2k-1}, x_{2k}):
//   x + ((5 - y) y - 2) y - 13 = 0
//   x + ((1 + y) y - 14) y - 29 = 0
std::string gen_ef(long n) {
    if (n % 2 != 0) throw std::invalid_argument("ef requires an even size");
    std::ostringstream os;
    os << "problem ef" << n << ";\nmeta n " << n << ";\nmeta solutions 1;\n";
    os << "# extended Freudenstein-Roth; domain: chosen\n";
    emit_vars(os, n, "[-10, 15]");
    for (long k = 1; k <= n / 2; ++k) {
        const std::string x = var(2 * k - 1), y = var(2 * k);
        os << "eq " << x << " + ((5 - " << y << ")*" << y << " - 2)*" << y << " - 13 = 0;\n";
        os << "eq " << x << " + ((1 + " << y << ")*" << y << " - 14)*" << y << " - 29 = 0;\n";
    }
    return os.str();
}

// Discrete integral equation (More-Cosnard):
//   x_i + sum_{j<=i} (n+1-i) j / (2 (n+1)^3) (x_j + j/(n+1) + 1)^3
//       + sum_{j> i} i (n+1-j) / (2 (n+1)^3) (x_j + j/(n+1) + 1)^3 = 0
std::string gen_mc(long n) {
    std::ostringstream os;
    const long np1 = n + 1;
    const long denom = 2 * np1 * np1 * np1;
    os << "problem mc" << n << ";\nmeta n " << n << ";\nmeta solutions 1;\n";
    os << "# discrete integral equation; domain: chosen\n";
    emit_vars(os, n, "[-4, 0]");
    for (long i = 1; i <= n; ++i) {
        os << "eq " << var(i);
        for (long j = 1; j <= n; ++j) {
            const long num = (j <= i) ? (np1 - i) * j : i * (np1 - j);
            os << " + " << num << "/" << denom << "*(" << var(j) << " + " << j << "/" << np1
               << " + 1)^3";
        }
        os << " = 0;\n";
    }
    return os.str();
}

// Troesch discretization with rho = 10:
//   2 x_i - x_{i-1} - x_{i+1} + 10/(n+1)^2 sinh(10 x_i) = 0,
//   x_0 = 0, x_{n+1} = 1.
std::string gen_tro(long n) {
    std::ostringstream os;
    const long np1 = n + 1;
    os << "problem tro" << n << ";\nmeta n " << n << ";\nmeta solutions 1;\n";
    os << "# Troesch; domain: chosen\n";
    emit_vars(os, n, "[0, 1]");
    for (long i = 1; i <= n; ++i) {
        os << "eq 2*" << var(i);
        if (i > 1) os << " - " << var(i - 1);
        if (i < n) os << " - " << var(i + 1);
        if (i == n) os << " - 1";
        os << " + 10/" << np1 * np1 << "*sinh(10*" << var(i) << ") = 0;\n";
    }
    return os.str();
}

// Yamamura: 2.5 x_i^3 - 10.5 x_i^2 + 11.8 x_i + sum_j x_j - i = 0.
std::string gen_yam(long n) {
    std::ostringstream os;
    os << "problem yam" << n << ";\nmeta n " << n << ";\n";
    os << "# Yamamura; domain: chosen\n";
    emit_vars(os, n, "[-5, 5]");
    for (long i = 1; i <= n; ++i) {
        os << "eq 2.5*" << var(i) << "^3 - 10.5*" << var(i) << "^2 + 11.8*" << var(i);
        for (long j = 1; j <= n; ++j) os << " + " << var(j);
        os << " - " << i << " = 0;\n";
    }
    return os.str();
}

// Trigexp chain:
//   f_1 = 3 x_1^3 + 2 x_2 - 5 + sin(x_1 - x_2) sin(x_1 + x_2)
//   f_i = -x_{i-1} e^{x_{i-1}-x_i} + x_i (4 + 3 x_i^2) + 2 x_{i+1}
//         + sin(x_i - x_{i+1}) sin(x_i + x_{i+1}) - 8
//   f_n = -x_{n-1} e^{x_{n-1}-x_n} + 4 x_n - 3
// Solution at (1, ..., 1).
std::string gen_te3(long n) {
    if (n < 2) throw std::invalid_argument("te3 requires n >= 2");
    std::ostringstream os;
    os << "problem te3";
    if (n != 5000) os << "_" << n;
    os << ";\nmeta n " << n << ";\nmeta solutions 1;\n";
    os << "# trigexp chain; domain: chosen\n";
    emit_vars(os, n, "[0, 2]");
    os << "eq 3*" << var(1) << "^3 + 2*" << var(2) << " - 5 + sin(" << var(1) << " - " << var(2)
       << ")*sin(" << var(1) << " + " << var(2) << ") = 0;\n";
    for (long i = 2; i < n; ++i) {
        os << "eq -" << var(i - 1) << "*exp(" << var(i - 1) << " - " << var(i) << ") + "
           << var(i) << "*(4 + 3*" << var(i) << "^2) + 2*" << var(i + 1) << " + sin(" << var(i)
           << " - " << var(i + 1) << ")*sin(" << var(i) << " + " << var(i + 1) << ") - 8 = 0;\n";
    }
    os << "eq -" << var(n - 1) << "*exp(" << var(n - 1) << " - " << var(n) << ") + 4*" << var(n)
       << " - 3 = 0;\n";
    return os.str();
}

// --- fixed catalogue instances ---------------------------------------------

const char* kBro = R"(problem bro;
# Bronstein; source: COPRIN benchmark collection (transcribed); domain: chosen
meta solutions 4;
var x in [-20, 20];
var y in [-20, 20];
var z in [-20, 20];
eq x^2 + y^2 + z^2 - 36 = 0;
eq x + y - z = 0;
eq x*y + z^2 - 1 = 0;
)";

const char* kComb = R"(problem comb;
# combustion chemistry, reduced propane model (Morgan); domain: chosen
var x1 in [-1, 1];
var x2 in [-1, 1];
var x3 in [-1, 1];
var x4 in [-1, 1];
var x5 in [-1, 1];
var x6 in [-1, 1];
var x7 in [-1, 1];
var x8 in [-1, 1];
var x9 in [-1, 1];
var x10 in [-1, 1];
eq x2 + 2*x6 + x9 + 2*x10 - 0.00001 = 0;
eq x3 + x8 - 0.00003 = 0;
eq x1 + x3 + 2*x5 + 2*x8 + x9 + x10 - 0.00005 = 0;
eq x4 + 2*x7 - 0.00001 = 0;
eq 0.00000005140437*x5 - x1^2 = 0;
eq 0.0000001006932*x6 - 2*x2^2 = 0;
eq 0.0000000000000007816278*x7 - x4^2 = 0;
eq 0.0000001496236*x8 - x1*x3 = 0;
eq 0.00000006194411*x9 - x1*x2 = 0;
eq 0.000000000000002089296*x10 - x1*x2^2 = 0;
)";

const char* kMat = R"(problem mat;
# mixed algebraic-trigonometric instance; form: chosen (catalogue unavailable)
meta solutions 2;
var x in [-3, 3];
var y in [-3, 3];
var z in [-3, 3];
eq x^2 + y^2 + z^2 - 4 = 0;
eq y - sin(x) = 0;
eq z - x*cos(x) = 0;
)";

const char* kRob = R"(problem rob;
# robot kinematics (Morgan-Sommese); source: COPRIN benchmark collection
var x1 in [-1, 1];
var x2 in [-1, 1];
var x3 in [-1, 1];
var x4 in [-1, 1];
var x5 in [-1, 1];
var x6 in [-1, 1];
var x7 in [-1, 1];
var x8 in [-1, 1];
eq 0.004731*x1*x3 - 0.3578*x2*x3 - 0.1238*x1 + x7 - 0.001637*x2 - 0.9338*x4 - 0.3571 = 0;
eq 0.2238*x1*x3 + 0.7623*x2*x3 + 0.2638*x1 - x7 - 0.07745*x2 - 0.6734*x4 - 0.6022 = 0;
eq x6*x8 + 0.3578*x1 + 0.004731*x2 = 0;
eq -0.7623*x1 + 0.2238*x2 + 0.3461 = 0;
eq x1^2 + x2^2 - 1 = 0;
eq x3^2 + x4^2 - 1 = 0;
eq x5^2 + x6^2 - 1 = 0;
eq x7^2 + x8^2 - 1 = 0;
)";

struct Family {
    std::string (*gen)(long);
    long default_size;
};

const std::map<std::string, Family>& family_table() {
    static const std::map<std::string, Family> table = {
        {"bt", {gen_bt, 10}},   {"bb", {gen_bb, 100}},  {"dbvf", {gen_dbvf, 10}},
        {"ef", {gen_ef, 30}},   {"mc", {gen_mc, 50}},   {"tro", {gen_tro, 50}},
        {"yam", {gen_yam, 6}},  {"te3", {gen_te3, 5000}},
    };
    return table;
}

const std::map<std::string, const char*>& static_table() {
    static const std::map<std::string, const char*> table = {
        {"bro", kBro},
        {"comb", kComb},
        {"mat", kMat},
        {"rob", kRob},
    };
    return table;
}

}  // namespace

std::vector<std::string> families() {
    std::vector<std::string> out;
    for (const auto& [name, f] : family_table()) out.push_back(name);
    return out;
}

std::vector<std::string> static_codes() {
    std::vector<std::string> out;
    for (const auto& [name, text] : static_table()) out.push_back(name);
    return out;
}

bool is_family(const std::string& code) { return family_table().count(code) != 0; }
bool is_static(const std::string& code) { return static_table().count(code) != 0; }

std::string generate(const std::string& family, long n) {
    const auto it = family_table().find(family);
    if (it == family_table().end())
        throw std::invalid_argument("unknown problem family '" + family + "'");
    if (n < 1) throw std::invalid_argument("problem size must be positive");
    return it->second.gen(n);
}

std::string static_text(const std::string& code) {
    const auto it = static_table().find(code);
    if (it == static_table().end())
        throw std::invalid_argument("unknown static problem '" + code + "'");
    return it->second;
}

std::optional<std::string> resolve_code(const std::string& code) {
    if (is_static(code)) return static_text(code);
    // split trailing digits: bt10 -> (bt, 10)
    std::size_t split = code.size();
    while (split > 0 && std::isdigit(static_cast<unsigned char>(code[split - 1]))) --split;
    const std::string family = code.substr(0, split);
    if (!is_family(family)) return std::nullopt;
    long n;
    if (split == code.size()) {
        n = family_table().at(family).default_size;
    } else {
        n = std::stol(code.substr(split));
    }
    return generate(family, n);
}

}  // namespace boxsol::problems
