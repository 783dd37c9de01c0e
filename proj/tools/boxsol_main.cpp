// boxsol: reliable nonlinear equation solving with interval box consistency
// Copyright 2026 The boxsol Authors
// SPDX-License-Identifier: Apache-2.0
//
// Benchmark front end: solve one problem with one narrowing algorithm, or run
// several algorithms and cross-check their solution sets.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "boxsol/packed.hpp"
#include "boxsol/parser.hpp"
#include "boxsol/problems.hpp"
#include "boxsol/report.hpp"
#include "boxsol/search.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitParse = 3;
constexpr int kExitBudget = 4;
constexpr int kExitInvariant = 5;

std::string load_problem_text(const std::string& spec) {
    if (std::filesystem::exists(spec)) {
        std::ifstream in(spec);
        if (!in) throw std::runtime_error("cannot read '" + spec + "'");
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    }
    if (auto text = boxsol::problems::resolve_code(spec)) return *text;
    throw std::runtime_error("'" + spec +
                             "' is neither a file nor a known problem code");
}

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"boxsol: branch-and-prune solving of nonlinear systems with "
                 "interval box consistency"};

    std::string problem_spec;
    std::string algorithm = "sbc";
    std::string compare_list;
    std::string format = "text";
    std::string vector_mode = "f4";
    double eps = 1e-6;
    double threshold = 0.25;
    double budget_seconds = 0.0;
    std::uint64_t budget_nodes = 0;
    bool dump = false;
    bool list = false;

    app.add_option("--problem", problem_spec,
                   "problem file path or code (bt10, bb100, mc50, rob, ...)");
    app.add_option("--algorithm", algorithm, "bc3|bc3vd|bc3vf|sbc|sbcvd|vsbc|hybrid")
        ->capture_default_str();
    app.add_option("--compare", compare_list,
                   "comma-separated algorithms to run and cross-check");
    app.add_option("--eps", eps, "stop splitting below this box width")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_option("--threshold", threshold, "hybrid switchover width")
        ->capture_default_str();
    app.add_option("--vector", vector_mode,
                   "packed kernel selection: none (software), d2, f4")
        ->check(CLI::IsMember({"none", "d2", "f4"}))
        ->capture_default_str();
    app.add_option("--format", format, "text|json|csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    app.add_option("--budget-seconds", budget_seconds, "wall-clock limit per run");
    app.add_option("--budget-nodes", budget_nodes, "search node limit per run");
    app.add_flag("--dump-problem", dump, "print the problem file and exit");
    app.add_flag("--list-problems", list, "list known families and instances");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    if (list) {
        std::cout << "families (append a size, e.g. bt10):";
        for (const auto& f : boxsol::problems::families()) std::cout << ' ' << f;
        std::cout << "\nstatic instances:";
        for (const auto& s : boxsol::problems::static_codes()) std::cout << ' ' << s;
        std::cout << "\n";
        return kExitOk;
    }

    if (problem_spec.empty()) {
        std::cerr << "error: --problem is required (see --help)\n";
        return kExitUsage;
    }

    if (vector_mode == "none") {
        boxsol::packed::set_backend(boxsol::packed::Backend::scalar);
    } else if (vector_mode == "d2") {
        boxsol::packed::set_backend_d(boxsol::packed::Backend::lanes);
        boxsol::packed::set_backend_f(boxsol::packed::Backend::scalar);
    } else {
        boxsol::packed::set_backend(boxsol::packed::Backend::lanes);
    }

    std::string text;
    boxsol::ProblemFile pf;
    try {
        text = load_problem_text(problem_spec);
        pf = boxsol::parse_problem(text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }

    if (dump) {
        std::cout << text;
        return kExitOk;
    }

    std::vector<boxsol::Narrower> algs;
    const std::vector<std::string> names =
        compare_list.empty() ? std::vector<std::string>{algorithm} : split_list(compare_list);
    for (const std::string& name : names) {
        const auto alg = boxsol::narrower_from_name(name);
        if (!alg) {
            std::cerr << "error: unknown algorithm '" << name << "'\n";
            return kExitUsage;
        }
        algs.push_back(*alg);
    }

    std::vector<boxsol::RunReport> reports;
    std::vector<std::vector<boxsol::Box>> sets;
    bool budget_hit = false;
    try {
        for (boxsol::Narrower alg : algs) {
            boxsol::SolveOptions sopts;
            sopts.algorithm = alg;
            sopts.eps = eps;
            sopts.narrow.hybrid_threshold = threshold;
            sopts.max_nodes = budget_nodes;
            sopts.max_seconds = budget_seconds;
            const boxsol::SolveResult res = boxsol::solve(pf.system, pf.initial, sopts);

            boxsol::RunReport r;
            r.problem = pf.name.empty() ? problem_spec : pf.name;
            r.algorithm = boxsol::narrower_name(alg);
            r.eps = eps;
            r.threshold = threshold;
            r.status = boxsol::solve_status_name(res.status);
            r.wall_seconds = res.wall_seconds;
            r.stats = res.stats;
            r.boxes = res.boxes;
            budget_hit = budget_hit || res.status != boxsol::SolveStatus::complete;
            sets.push_back(res.boxes);
            reports.push_back(std::move(r));
        }
    } catch (const boxsol::IterationBudgetError& e) {
        std::cerr << "internal invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    }

    if (format == "json") {
        for (const auto& r : reports) std::cout << boxsol::report_to_json(r) << "\n";
    } else if (format == "csv") {
        std::cout << boxsol::report_csv_header() << "\n";
        for (const auto& r : reports) std::cout << boxsol::report_to_csv_row(r) << "\n";
    } else {
        for (const auto& r : reports) std::cout << boxsol::report_to_text(r) << "\n";
    }

    bool disagree = false;
    if (reports.size() > 1 && !budget_hit) {
        for (std::size_t i = 1; i < sets.size(); ++i) {
            const bool same = boxsol::solution_sets_agree(sets[0], sets[i]);
            std::cout << (same ? "SETS AGREE" : "SETS DIFFER") << " ("
                      << reports[0].algorithm << " vs " << reports[i].algorithm << ")\n";
            disagree = disagree || !same;
        }
    }

    if (budget_hit) return kExitBudget;
    if (disagree) return kExitInvariant;
    return kExitOk;
}
