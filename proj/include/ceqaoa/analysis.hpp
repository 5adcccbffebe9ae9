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
#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "ceqaoa/encoded.hpp"
#include "ceqaoa/hamiltonian.hpp"
#include "ceqaoa/layers.hpp"

namespace ceqaoa {

// ---------------------------------------------------------------------------
// Permutation twirl (first moment)
// ---------------------------------------------------------------------------

inline constexpr std::uint64_t kMaxExhaustivePermutations = 1'000'000;

/// (n!)^m, saturating at UINT64_MAX.
std::uint64_t block_permutation_count(const BlockLayout& layout);

/// Uniformly random block permutation (Fisher–Yates per block).
BlockPermutation random_block_permutation(const BlockLayout& layout, std::mt19937_64& rng);

/// |⟨x*| P† |ψ⟩|², i.e. the probability of label P(x*).
double twirled_overlap(const EncodedState& state, const BlockPermutation& perm, const BasisLabel& target);

struct Exhaustive {};
struct MonteCarlo {
    std::uint64_t samples;
    std::uint64_t seed = 0;
};
using TwirlMode = std::variant<Exhaustive, MonteCarlo>;

struct TwirlEstimate {
    double mean;
    double std_error;  // zero for exhaustive averages
    std::uint64_t samples;
};

/// Average of twirled_overlap over all (or N sampled) block permutations.
TwirlEstimate twirl_average(const EncodedState& state, const BasisLabel& target, const TwirlMode& mode);

struct GoodPermutation {
    BlockPermutation perm;
    double overlap;
    bool exhaustive;
    bool certified;  // overlap >= 1/D
};

/// Exhaustive maximization when (n!)^m <= kMaxExhaustivePermutations,
/// otherwise single-block swap hill climbing from the identity.
GoodPermutation find_good_permutation(const EncodedState& state, const BasisLabel& target);

// ---------------------------------------------------------------------------
// Angle-averaged mixer transitions
// ---------------------------------------------------------------------------

using Matrix = std::vector<std::vector<double>>;

/// P_ij = mean over β_k = 2πk/K of |⟨e_j|U(β_k)|e_i⟩|² (trapezoid rule).
Matrix angle_averaged_transition(std::size_t n, std::size_t quadrature_points,
                                 MixerNormalization norm = MixerNormalization::kRaw);

/// P_ii = 1 − 2/n + 2/n², P_ij = 2/n².
Matrix transition_closed_form(std::size_t n);

// ---------------------------------------------------------------------------
// Second moments
// ---------------------------------------------------------------------------

struct MomentReport {
    double mean_overlap;
    double second_moment;
    double haar_mean;
    double haar_second;
    std::uint64_t n_samples;
    double mean_std_error;
    double second_std_error;
};

/// Random XY-pulse circuits on one n-level block starting from the uniform
/// vector; moments of X = |⟨target|U|s⟩|².
MomentReport block_design_moments(std::size_t n, std::size_t layers, std::uint64_t trials, std::uint64_t seed,
                                  Symbol target = 0);

/// Per-block pulses interleaved with a random non-additive diagonal phase
/// across blocks. Qualitative only: no depth constants are known.
MomentReport global_design_moments(const BlockLayout& layout, std::size_t layers, std::uint64_t trials,
                                   std::uint64_t seed);

// ---------------------------------------------------------------------------
// Controllability and entanglers
// ---------------------------------------------------------------------------

/// Real dimension of the Lie closure of {i(E_ij + E_ji)} ∪ {i·diag(d − mean d)}.
std::size_t lie_algebra_dimension(std::size_t n, const std::vector<double>& diagonal);

/// Numerical rank of M_jk = exp(−iγ C[j][k]) (relative threshold 1e−9).
std::size_t entangler_schmidt_rank(const Matrix& cost_table, double gamma);

// ---------------------------------------------------------------------------
// Classical baselines
// ---------------------------------------------------------------------------

struct BaselineReport {
    std::size_t n;
    std::size_t m;
    double feasible_count;
    double model_a_trials;  // D / |F|
    double model_b_trials;  // (2^(n·m) + 1) / (|F| + 1)
    double separation_ratio;  // (2^n / n)^m
    double log10_model_a;
    double log10_model_b;
    double log10_separation;
};

BaselineReport classical_baselines(std::size_t n, std::size_t m, double feasible_count);

struct HeavyOutputReport {
    double p_opt;
    double baseline;        // 1/D
    double heavy_factor;    // p_opt · D
    std::size_t degeneracy;
    std::vector<bool> exceeds_power;  // [k-1]: p_opt >= n^{-k}, k = 1..m
    std::optional<std::size_t> smallest_k;
    double finite_shot_threshold;  // 1 / (10 n_cities³)
    bool in_finite_shot_region;
    std::uint64_t required_shots;  // at ln(1/δ) = log_inv_delta
};

HeavyOutputReport heavy_output_report(const AnchoredTsp& enc, const LayerSchedule& schedule,
                                      MixerNormalization norm, double log_inv_delta = 10.0,
                                      std::optional<double> lambda = {});

}  // namespace ceqaoa
