/*
   Copyright 2026 The signrep Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "signrep/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

namespace {

using signrep::cli::RunReport;
using Runner = std::function<RunReport(const std::string& text, const std::string& name)>;

RunReport run_file(const std::string& command, const std::string& path, const Runner& run) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return signrep::cli::unreadable(command, path, "no such file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return run(buf.str(), path);
}

// Reports come back in input order regardless of which worker finished first.
std::vector<RunReport> run_all(const std::string& command, const std::vector<std::string>& paths, const Runner& run,
                               unsigned jobs) {
    std::vector<RunReport> out(paths.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < paths.size();) out[i] = run_file(command, paths[i], run);
    };
    const unsigned n = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(paths.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Signs of conjugate-self-dual representations, their specialization, and weight/slope checks"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    unsigned jobs = 1;
    app.add_flag("--json", json, "Print canonical JSON reports");
    app.add_option("--jobs", jobs, "Worker threads for several inputs")->check(CLI::Range(1u, 256u));

    std::vector<std::string> inputs;
    std::optional<std::size_t> precision;
    std::string perm = "cycle";
    std::optional<std::string> bound;
    std::string multiplier;

    auto* sign = app.add_subcommand("sign", "Composition factors, their signs and the goodness verdict");
    sign->add_option("--input", inputs, "Representation JSON file(s)")->required();
    auto* specialize_cmd = app.add_subcommand("specialize", "Compare goodness of the generic and residual fibers of a family");
    specialize_cmd->add_option("--input", inputs, "Family JSON file(s)")->required();
    specialize_cmd->add_option("--precision", precision, "Idempotent lifting precision (default: document or 32)");
    auto* ref = app.add_subcommand("refine", "Match slopes, choose a refinement and scan for obstructions");
    ref->add_option("--weights", inputs, "Weight/slope JSON file(s)")->required();
    ref->add_option("--perm", perm, "cycle | explicit:i1,i2,... (one-based images)");
    ref->add_option("--bound", bound, "Separation bound for the obstruction scan (default: sum of |s_i|)");
    auto* h3 = app.add_subcommand("h3", "General-position check of weights against slopes");
    h3->add_option("--weights", inputs, "Weight/slope JSON file(s)")->required();
    h3->add_option("--multiplier", multiplier, "Rational multiplier of the slope distance")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    std::string command;
    Runner run;
    if (*sign) {
        command = "sign";
        run = [](const std::string& t, const std::string& n) { return signrep::cli::cmd_sign(t, n); };
    } else if (*specialize_cmd) {
        command = "specialize";
        run = [&](const std::string& t, const std::string& n) { return signrep::cli::cmd_specialize(t, n, precision); };
    } else if (*ref) {
        command = "refine";
        run = [&](const std::string& t, const std::string& n) { return signrep::cli::cmd_refine(t, n, perm, bound); };
    } else {
        command = "h3";
        run = [&](const std::string& t, const std::string& n) { return signrep::cli::cmd_h3(t, n, multiplier); };
    }

    const auto reports = run_all(command, inputs, run, jobs);
    int code = 0;
    for (const auto& r : reports) code = std::max(code, r.exit_code);
    if (json) {
        if (reports.size() == 1) {
            std::cout << signrep::io::canonical(reports[0].json);
        } else {
            signrep::io::Json all = signrep::io::Json::array();
            for (const auto& r : reports) all.push_back(r.json);
            std::cout << signrep::io::canonical(signrep::io::Json{{"reports", all}, {"exit_code", code}});
        }
    } else {
        for (const auto& r : reports) std::cout << r.text;
    }
    return code;
}
