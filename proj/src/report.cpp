// boxsol: reliable nonlinear equation solving with interval box consistency
// Copyright 2026 The boxsol Authors
// SPDX-License-Identifier: Apache-2.0

#include "boxsol/report.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

namespace boxsol {

namespace {

using nlohmann::json;

// JSON has no infinities; encode infinite bounds as strings.
json bound_to_json(double v) {
    if (v == kInf) return "inf";
    if (v == -kInf) return "-inf";
    return v;
}

double bound_from_json(const json& j) {
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "inf") return kInf;
        if (s == "-inf") return -kInf;
        throw std::invalid_argument("bad bound string '" + s + "'");
    }
    return j.get<double>();
}

json stats_to_json(const NarrowStats& s) {
    return json{{"g_evals", s.g_evals},
                {"gprime_evals", s.gprime_evals},
                {"newton_steps", s.newton_steps},
                {"splits", s.splits},
                {"loop_iterations", s.loop_iterations},
                {"narrow_calls", s.narrow_calls},
                {"packed_g_calls", s.packed_g_calls},
                {"packed_gprime_calls", s.packed_gprime_calls},
                {"packed_newton_calls", s.packed_newton_calls},
                {"max_call_iterations", s.max_call_iterations},
                {"propagations", s.propagations},
                {"search_nodes", s.search_nodes}};
}

NarrowStats stats_from_json(const json& j) {
    NarrowStats s;
    s.g_evals = j.at("g_evals").get<std::uint64_t>();
    s.gprime_evals = j.at("gprime_evals").get<std::uint64_t>();
    s.newton_steps = j.at("newton_steps").get<std::uint64_t>();
    s.splits = j.at("splits").get<std::uint64_t>();
    s.loop_iterations = j.at("loop_iterations").get<std::uint64_t>();
    s.narrow_calls = j.at("narrow_calls").get<std::uint64_t>();
    s.packed_g_calls = j.at("packed_g_calls").get<std::uint64_t>();
    s.packed_gprime_calls = j.at("packed_gprime_calls").get<std::uint64_t>();
    s.packed_newton_calls = j.at("packed_newton_calls").get<std::uint64_t>();
    s.max_call_iterations = j.at("max_call_iterations").get<std::uint64_t>();
    s.propagations = j.at("propagations").get<std::uint64_t>();
    s.search_nodes = j.at("search_nodes").get<std::uint64_t>();
    return s;
}

}  // namespace

std::string report_to_json(const RunReport& r) {
    json boxes = json::array();
    for (const Box& b : r.boxes) {
        json jb = json::array();
        for (const Interval& d : b.domains)
            jb.push_back(json::array({bound_to_json(d.lo()), bound_to_json(d.hi())}));
        boxes.push_back(std::move(jb));
    }
    const json j{{"problem", r.problem},
                 {"algorithm", r.algorithm},
                 {"eps", r.eps},
                 {"threshold", r.threshold},
                 {"status", r.status},
                 {"wall_seconds", r.wall_seconds},
                 {"box_count", r.boxes.size()},
                 {"stats", stats_to_json(r.stats)},
                 {"boxes", boxes}};
    return j.dump(2);
}

RunReport report_from_json(const std::string& text) {
    const json j = json::parse(text);
    RunReport r;
    r.problem = j.at("problem").get<std::string>();
    r.algorithm = j.at("algorithm").get<std::string>();
    r.eps = j.at("eps").get<double>();
    r.threshold = j.at("threshold").get<double>();
    r.status = j.at("status").get<std::string>();
    r.wall_seconds = j.at("wall_seconds").get<double>();
    r.stats = stats_from_json(j.at("stats"));
    for (const json& jb : j.at("boxes")) {
        Box b;
        for (const json& jd : jb)
            b.domains.push_back(Interval(bound_from_json(jd.at(0)), bound_from_json(jd.at(1))));
        r.boxes.push_back(std::move(b));
    }
    if (j.at("box_count").get<std::size_t>() != r.boxes.size())
        throw std::invalid_argument("box_count does not match the box list");
    return r;
}

std::string report_to_text(const RunReport& r) {
    std::ostringstream os;
    os.precision(17);
    os << "problem:    " << r.problem << "\n"
       << "algorithm:  " << r.algorithm << "\n"
       << "eps:        " << r.eps << "\n"
       << "status:     " << r.status << "\n"
       << "wall time:  " << r.wall_seconds << " s\n"
       << "boxes:      " << r.boxes.size() << "\n"
       << "g evals:    " << r.stats.g_evals << "\n"
       << "g' evals:   " << r.stats.gprime_evals << "\n"
       << "newton:     " << r.stats.newton_steps << "\n"
       << "splits:     " << r.stats.splits << "\n"
       << "iterations: " << r.stats.loop_iterations << "\n"
       << "narrowings: " << r.stats.narrow_calls << "\n"
       << "packed g:   " << r.stats.packed_g_calls << "\n"
       << "packed g':  " << r.stats.packed_gprime_calls << "\n"
       << "packed nwt: " << r.stats.packed_newton_calls << "\n"
       << "nodes:      " << r.stats.search_nodes << "\n";
    for (std::size_t i = 0; i < r.boxes.size(); ++i) {
        os << "box " << i << ":";
        for (const Interval& d : r.boxes[i].domains) os << ' ' << d;
        os << "\n";
    }
    return os.str();
}

std::string report_csv_header() {
    return "problem,algorithm,eps,status,wall_seconds,boxes,g_evals,gprime_evals,"
           "newton_steps,splits,loop_iterations,narrow_calls,packed_g_calls,"
           "packed_gprime_calls,packed_newton_calls,search_nodes";
}

std::string report_to_csv_row(const RunReport& r) {
    std::ostringstream os;
    os.precision(17);
    os << r.problem << ',' << r.algorithm << ',' << r.eps << ',' << r.status << ','
       << r.wall_seconds << ',' << r.boxes.size() << ',' << r.stats.g_evals << ','
       << r.stats.gprime_evals << ',' << r.stats.newton_steps << ',' << r.stats.splits << ','
       << r.stats.loop_iterations << ',' << r.stats.narrow_calls << ','
       << r.stats.packed_g_calls << ',' << r.stats.packed_gprime_calls << ','
       << r.stats.packed_newton_calls << ',' << r.stats.search_nodes;
    return os.str();
}

}  // namespace boxsol
