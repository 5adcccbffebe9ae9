// Copyright 2026 The ceqaoa Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "ceqaoa/commands.hpp"

namespace {

struct CommonFlags {
    std::string instance;
    std::size_t start = 0;
    std::size_t depth = 1;
    std::string norm = "over_n";
    std::optional<double> lambda;
    std::uint64_t seed = 0;
    bool exact_euclidean = false;
    std::string out;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("instance", f.instance, "Instance file (JSON or TSPLIB)")->required();
    cmd->add_option("--start", f.start, "Anchored start city");
    cmd->add_option("--depth,-p", f.depth, "Circuit depth p")->check(CLI::PositiveNumber);
    cmd->add_option("--norm", f.norm, "Mixer normalization")
        ->check(CLI::IsMember({"raw", "over_n", "over_n_minus_1"}));
    cmd->add_option("--lambda", f.lambda, "Penalty weight (default n * max distance)")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", f.seed, "Master seed");
    cmd->add_flag("--exact-euclidean", f.exact_euclidean, "Do not round EUC_2D distances");
    cmd->add_option("--out,-o", f.out, "Output path");
}

ceqaoa::cli::RunConfig to_config(const CommonFlags& f) {
    ceqaoa::cli::RunConfig c;
    c.instance_path = f.instance;
    c.start_city = f.start;
    c.depth = f.depth;
    c.norm = ceqaoa::parse_normalization(f.norm);
    c.lambda = f.lambda;
    c.seed = f.seed;
    c.exact_euclidean = f.exact_euclidean;
    if (!f.out.empty()) c.out = f.out;
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constraint-enhanced QAOA simulator and hybrid TSP solver"};
    app.require_subcommand(1);

    CommonFlags solve_flags;
    std::string grid = "n+1";
    std::optional<std::uint64_t> shots;
    std::string hist_out;
    auto* solve = app.add_subcommand("solve", "Grid-search PHQC solve");
    add_common(solve, solve_flags);
    solve->add_option("--grid", grid, "n+1 | NxN | list:g,b;g,b;...");
    solve->add_option("--shots", shots, "Shots per grid point (default 10 n^3)")->check(CLI::PositiveNumber);
    solve->add_option("--histogram-out", hist_out, "Per-grid-point cost histogram CSV");

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "Run an invariant suite");
    verify->add_option("suite", suite, "encoder|mixer|ergodicity|one_design|two_design|lie|baselines|all");

    CommonFlags hist_flags;
    double gamma = 0.0;
    double beta = 0.0;
    std::uint64_t hist_shots = 0;
    auto* histogram = app.add_subcommand("histogram", "Per-label counts and exact probabilities at one angle pair");
    add_common(histogram, hist_flags);
    histogram->add_option("--gamma", gamma, "Phase angle")->required();
    histogram->add_option("--beta", beta, "Mixer angle")->required();
    histogram->add_option("--shots", hist_shots, "Shots (0 = probabilities only)");

    std::size_t n = 3;
    std::size_t m = 0;
    std::optional<double> feasible;
    auto* baselines = app.add_subcommand("baselines", "Classical trial-count baselines");
    baselines->add_option("--n", n, "Block size")->check(CLI::PositiveNumber);
    baselines->add_option("--m", m, "Block count (default n)");
    baselines->add_option("--feasible", feasible, "Feasible-set size (default n! when m == n)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve) {
            auto config = to_config(solve_flags);
            config.grid = ceqaoa::cli::GridSpec::parse(grid);
            config.shots = shots;
            if (!hist_out.empty()) config.histogram_out = hist_out;
            return ceqaoa::cli::cmd_solve(config, std::cerr);
        }
        if (*verify) {
            return ceqaoa::cli::cmd_verify(suite, std::cout);
        }
        if (*histogram) {
            auto config = to_config(hist_flags);
            if (hist_flags.out.empty()) config.out = "ceqaoa_histogram.csv";
            return ceqaoa::cli::cmd_histogram(config, {gamma, beta}, hist_shots, std::cerr);
        }
        if (*baselines) {
            return ceqaoa::cli::cmd_baselines(n, m == 0 ? n : m, feasible, std::cout);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return ceqaoa::cli::kExitError;
    }
    return ceqaoa::cli::kExitError;
}
