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

#include "ceqaoa/phqc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "ceqaoa/parallel.hpp"

namespace ceqaoa {

AngleGrid default_grid(std::size_t n_cities) {
    if (n_cities < 3) {
        throw std::invalid_argument("default_grid: need at least 3 cities");
    }
    std::vector<double> axis(n_cities + 1);
    for (std::size_t j = 0; j <= n_cities; ++j) {
        axis[j] = static_cast<double>(j) * std::numbers::pi / static_cast<double>(n_cities);
    }
    return {axis, axis};
}

AngleGrid uniform_grid(std::size_t points) {
    if (points < 2) {
        throw std::invalid_argument("uniform_grid: need at least 2 points per axis");
    }
    std::vector<double> axis(points);
    for (std::size_t j = 0; j < points; ++j) {
        axis[j] = static_cast<double>(j) * std::numbers::pi / static_cast<double>(points - 1);
    }
    return {axis, axis};
}

ShotSet sample_shots(const EncodedState& state, std::uint64_t shots, std::uint64_t seed) {
    if (shots < 1) {
        throw std::invalid_argument("sample_shots: need at least one shot");
    }
    const auto amps = state.amplitudes();
    std::vector<double> cdf(amps.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        acc += std::norm(amps[i]);
        cdf[i] = acc;
    }
    std::mt19937_64 rng(seed);
    ShotSet out;
    out.total_shots = shots;
    out.seed = seed;
    for (std::uint64_t s = 0; s < shots; ++s) {
        const double u = uniform01(rng) * acc;
        auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
        // Clamp guards the top of the CDF against round-off.
        Index idx = static_cast<Index>(std::min<std::ptrdiff_t>(it - cdf.begin(), cdf.size() - 1));
        ++out.counts[idx];
    }
    return out;
}

std::uint64_t required_shots_log(double p_min, double log_inv_delta) {
    if (!(p_min > 0.0) || p_min > 1.0) {
        throw std::invalid_argument("required_shots: p_min must lie in (0, 1]");
    }
    if (!(log_inv_delta > 0.0)) {
        throw std::invalid_argument("required_shots: delta must lie in (0, 1)");
    }
    const double x = log_inv_delta / p_min;
    const double nearest = std::round(x);
    if (std::abs(x - nearest) <= 1e-9 * std::max(1.0, x)) {
        return static_cast<std::uint64_t>(nearest);
    }
    return static_cast<std::uint64_t>(std::ceil(x));
}

std::uint64_t required_shots(double p_min, double delta) {
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::invalid_argument("required_shots: delta must lie in (0, 1)");
    }
    return required_shots_log(p_min, -std::log(delta));
}

void FeasibleBest::observe(Index label, double cost) {
    if (!label_ || (!costs_equal(cost, cost_) && cost < cost_) || (costs_equal(cost, cost_) && label < *label_)) {
        label_ = label;
        cost_ = cost;
    }
}

void FeasibleBest::observe(const AnchoredTsp& enc, const ShotSet& shots) {
    for (const auto& [index, count] : shots.counts) {
        if (count == 0) continue;
        BasisLabel label = index_to_label(enc.layout(), index);
        if (is_feasible(enc, label)) {
            observe(index, objective_value(enc, label));
        }
    }
}

void FeasibleBest::merge(const FeasibleBest& other) {
    if (other.label_) observe(*other.label_, other.cost_);
}

std::uint64_t default_shots(std::size_t n_cities) {
    const auto n = static_cast<std::uint64_t>(n_cities);
    return 10 * n * n * n;
}

namespace {

GridPointStats evaluate_point(const AnchoredTsp& enc, const CostDiagonal& diag, const LayerSchedule& schedule,
                              MixerNormalization norm, std::uint64_t shots, std::uint64_t seed) {
    EncodedState state = run_circuit(enc.layout(), diag, schedule, norm);
    ShotSet sample = sample_shots(state, shots, seed);
    sample.angles = schedule.layers().front();

    GridPointStats stats{sample.angles, seed, 0.0, std::nullopt, std::nullopt, {}};
    FeasibleBest best;
    std::uint64_t feasible = 0;
    for (const auto& [index, count] : sample.counts) {
        BasisLabel label = index_to_label(enc.layout(), index);
        if (!is_feasible(enc, label)) continue;
        const double cost = objective_value(enc, label);
        feasible += count;
        stats.cost_histogram[cost] += count;
        best.observe(index, cost);
    }
    stats.feasible_fraction = static_cast<double>(feasible) / static_cast<double>(shots);
    if (best.has_value()) {
        stats.min_sampled_cost = best.cost();
        stats.best_label = best.label();
    }
    return stats;
}

}  // namespace

PhqcResult phqc_solve(const AnchoredTsp& enc, const std::vector<LayerSchedule>& schedules,
                      const PhqcOptions& options) {
    if (schedules.empty()) {
        throw std::invalid_argument("phqc_solve: empty angle grid");
    }
    const std::uint64_t shots =
        options.shots_per_point ? options.shots_per_point : default_shots(enc.instance().n_cities());
    const CostDiagonal diag =
        build_cost_diagonal(enc, options.lambda.value_or(default_lambda(enc.instance())));

    PhqcResult result;
    result.per_grid_stats.resize(schedules.size());
    // One dense state per worker; keep big layouts single-threaded.
    const std::size_t workers = enc.layout().dim() > (Index{1} << 22) ? 1 : options.max_workers;
    parallel_for(
        schedules.size(),
        [&](std::size_t i) {
            result.per_grid_stats[i] = evaluate_point(enc, diag, schedules[i], options.norm, shots,
                                                      derive_seed(options.master_seed, i));
        },
        workers);

    FeasibleBest global;
    for (std::size_t i = 0; i < schedules.size(); ++i) {
        const auto& stats = result.per_grid_stats[i];
        if (!stats.best_label) continue;
        const auto before = global.label();
        global.observe(*stats.best_label, *stats.min_sampled_cost);
        if (global.label() != before) {
            result.best_grid_index = i;
        }
    }
    result.best_angles = result.per_grid_stats[result.best_grid_index].angles;
    result.feasible_fraction = result.per_grid_stats[result.best_grid_index].feasible_fraction;

    if (global.has_value()) {
        result.best_label = index_to_label(enc.layout(), *global.label());
        result.best_cost = tour_cost(enc, *result.best_label);
        if (enc.layout().m() <= kMaxBruteForceBlocks) {
            const OptimumInfo optimum = brute_force_optimum(enc);
            const EncodedState state =
                run_circuit(enc.layout(), diag, schedules[result.best_grid_index], options.norm);
            result.p_opt_exact = optimal_mass(state, optimum);
            result.optimum_degeneracy = optimum.degeneracy;
        }
    }
    return result;
}

PhqcResult phqc_solve(const AnchoredTsp& enc, const AngleGrid& grid, const PhqcOptions& options) {
    if (options.depth < 1) {
        throw std::invalid_argument("phqc_solve: depth must be >= 1");
    }
    std::vector<LayerSchedule> schedules;
    schedules.reserve(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto [gamma, beta] = grid.point(i);
        schedules.push_back(LayerSchedule::repeated(gamma, beta, options.depth));
    }
    return phqc_solve(enc, schedules, options);
}

double optimal_mass(const EncodedState& state, const OptimumInfo& optimum) {
    double p = 0.0;
    for (const auto& label : optimum.optimal_labels) {
        p += overlap_probability(state, label);
    }
    return p;
}

SuccessProbability exact_success_probability(const AnchoredTsp& enc, const LayerSchedule& schedule,
                                             MixerNormalization norm, std::optional<double> lambda) {
    const OptimumInfo optimum = brute_force_optimum(enc);
    const CostDiagonal diag = build_cost_diagonal(enc, lambda.value_or(default_lambda(enc.instance())));
    const EncodedState state = run_circuit(enc.layout(), diag, schedule, norm);
    return {optimal_mass(state, optimum), optimum.degeneracy};
}

}  // namespace ceqaoa
