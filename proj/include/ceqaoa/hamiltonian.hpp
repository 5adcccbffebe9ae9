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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ceqaoa/encoded.hpp"

namespace ceqaoa {

/// Dense distance matrix. Symmetry is not required.
struct TspInstance {
    std::string name;
    std::vector<std::vector<double>> distances;
    std::optional<double> known_optimum;

    std::size_t n_cities() const { return distances.size(); }
    double max_distance() const;

    /// Zero diagonal, finite non-negative entries, square shape.
    void validate() const;
};

/// TSP with the start city fixed: block b is tour position b+1, symbol s is
/// the s-th non-start city in ascending order.
class AnchoredTsp {
   public:
    const TspInstance& instance() const { return instance_; }
    std::size_t start_city() const { return start_; }
    const BlockLayout& layout() const { return layout_; }
    std::size_t city_of_symbol(Symbol s) const { return city_of_symbol_[s]; }
    const std::vector<std::size_t>& cities() const { return city_of_symbol_; }

    /// Full cycle start, c_1, ..., c_m, start.
    std::vector<std::size_t> tour_of(const BasisLabel& label) const;

   private:
    friend AnchoredTsp anchor(TspInstance instance, std::size_t start);
    AnchoredTsp(TspInstance instance, std::size_t start, BlockLayout layout, std::vector<std::size_t> cities)
        : instance_(std::move(instance)), start_(start), layout_(layout), city_of_symbol_(std::move(cities)) {}

    TspInstance instance_;
    std::size_t start_;
    BlockLayout layout_;
    std::vector<std::size_t> city_of_symbol_;
};

AnchoredTsp anchor(TspInstance instance, std::size_t start);

/// True iff every block carries a distinct symbol.
bool is_feasible(const AnchoredTsp& enc, const BasisLabel& label);

/// Cyclic tour cost. Throws std::invalid_argument for infeasible labels.
double tour_cost(const AnchoredTsp& enc, const BasisLabel& label);

/// Cyclic cost extended to every label (repeated symbols contribute C[c][c] = 0).
double objective_value(const AnchoredTsp& enc, const BasisLabel& label);

/// Objective and column-penalty energies over every encoded label.
struct CostDiagonal {
    BlockLayout layout;
    std::vector<double> objective;
    std::vector<double> penalty;
    double lambda;

    double energy(Index i) const { return objective[i] + penalty[i]; }
};

/// n_cities · max C[a][b].
double default_lambda(const TspInstance& instance);

/// penalty[x] = λ Σ_a (count_a(x) − 1)². The row term vanishes identically in
/// the encoded space since each block holds exactly one symbol.
CostDiagonal build_cost_diagonal(const AnchoredTsp& enc, double lambda);

struct OptimumInfo {
    BasisLabel label;  // lowest-index optimal label
    double cost;
    std::size_t degeneracy;
    std::vector<BasisLabel> optimal_labels;
};

inline constexpr std::size_t kMaxBruteForceBlocks = 10;

/// Enumerates all m! feasible labels. Refuses m > kMaxBruteForceBlocks.
OptimumInfo brute_force_optimum(const AnchoredTsp& enc);

/// Relative tolerance for treating two tour costs as equal.
bool costs_equal(double a, double b);

}  // namespace ceqaoa
