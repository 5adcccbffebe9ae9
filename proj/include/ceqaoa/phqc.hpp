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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ceqaoa/encoded.hpp"
#include "ceqaoa/hamiltonian.hpp"
#include "ceqaoa/layers.hpp"

namespace ceqaoa {

struct AngleGrid {
    std::vector<double> gammas;
    std::vector<double> betas;

    std::size_t size() const { return gammas.size() * betas.size(); }
    /// Gamma-major: point i is (gammas[i / |betas|], betas[i % |betas|]).
    LayerAngles point(std::size_t i) const { return {gammas[i / betas.size()], betas[i % betas.size()]}; }
};

/// {jπ/n_cities : j = 0..n_cities} on both axes.
AngleGrid default_grid(std::size_t n_cities);

/// `points` evenly spaced angles covering [0, π] inclusive on both axes.
AngleGrid uniform_grid(std::size_t points);

/// Measurement record for one circuit setting. Counts are keyed by flat label index.
struct ShotSet {
    std::map<Index, std::uint64_t> counts;
    std::uint64_t total_shots = 0;
    LayerAngles angles{0.0, 0.0};
    std::uint64_t seed = 0;
};

/// S independent draws from |amplitude|², reproducible for a given seed.
ShotSet sample_shots(const EncodedState& state, std::uint64_t shots, std::uint64_t seed);

/// ⌈ln(1/δ) / p_min⌉.
std::uint64_t required_shots(double p_min, double delta);
/// Same bound with ln(1/δ) supplied directly (avoids round-off in ln(e^{-k})).
std::uint64_t required_shots_log(double p_min, double log_inv_delta);

/// Deterministic checker state: lowest feasible cost seen, ties to the lowest
/// flat index. Frequencies are never consulted.
class FeasibleBest {
   public:
    void observe(const AnchoredTsp& enc, const ShotSet& shots);
    void observe(Index label, double cost);
    void merge(const FeasibleBest& other);

    bool has_value() const { return label_.has_value(); }
    std::optional<Index> label() const { return label_; }
    double cost() const { return cost_; }

   private:
    std::optional<Index> label_;
    double cost_ = 0.0;
};

struct GridPointStats {
    LayerAngles angles;
    std::uint64_t seed;
    double feasible_fraction;
    std::optional<double> min_sampled_cost;
    std::optional<Index> best_label;
    /// Sampled feasible tour cost -> count.
    std::map<double, std::uint64_t> cost_histogram;
};

struct PhqcResult {
    std::optional<BasisLabel> best_label;
    std::optional<double> best_cost;
    LayerAngles best_angles{0.0, 0.0};
    std::size_t best_grid_index = 0;
    double feasible_fraction = 0.0;  // at best_angles
    std::optional<double> p_opt_exact;
    std::optional<std::size_t> optimum_degeneracy;
    std::vector<GridPointStats> per_grid_stats;
};

struct PhqcOptions {
    std::size_t depth = 1;
    std::uint64_t shots_per_point = 0;  // 0 selects 10 · n_cities³
    MixerNormalization norm = MixerNormalization::kOverN;
    std::optional<double> lambda;  // default_lambda when absent
    std::uint64_t master_seed = 0;
    std::size_t max_workers = 0;
};

/// 10 · n_cities³.
std::uint64_t default_shots(std::size_t n_cities);

/// Grid sweep: per point run the circuit with (γ, β) repeated `depth` times,
/// sample, filter feasible shots and keep the global best.
PhqcResult phqc_solve(const AnchoredTsp& enc, const AngleGrid& grid, const PhqcOptions& options);

/// Sweep over explicit schedules (one per "grid point").
PhqcResult phqc_solve(const AnchoredTsp& enc, const std::vector<LayerSchedule>& schedules,
                      const PhqcOptions& options);

struct SuccessProbability {
    double p_opt;
    std::size_t degeneracy;
};

/// Exact probability mass on every optimal label.
SuccessProbability exact_success_probability(const AnchoredTsp& enc, const LayerSchedule& schedule,
                                             MixerNormalization norm, std::optional<double> lambda = {});

/// Same, reusing a precomputed diagonal and optimum.
double optimal_mass(const EncodedState& state, const OptimumInfo& optimum);

}  // namespace ceqaoa
