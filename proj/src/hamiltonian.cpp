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

#include "ceqaoa/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ceqaoa {

double TspInstance::max_distance() const {
    double mx = 0.0;
    for (const auto& row : distances) {
        for (double d : row) mx = std::max(mx, d);
    }
    return mx;
}

void TspInstance::validate() const {
    const std::size_t n = distances.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (distances[i].size() != n) {
            throw std::invalid_argument("distance matrix is not square (row " + std::to_string(i) + ")");
        }
        for (std::size_t j = 0; j < n; ++j) {
            double d = distances[i][j];
            if (!std::isfinite(d) || d < 0.0) {
                throw std::invalid_argument("distance C[" + std::to_string(i) + "][" + std::to_string(j) +
                                            "] must be finite and non-negative");
            }
        }
        if (distances[i][i] != 0.0) {
            throw std::invalid_argument("distance C[" + std::to_string(i) + "][" + std::to_string(i) +
                                        "] must be zero");
        }
    }
}

std::vector<std::size_t> AnchoredTsp::tour_of(const BasisLabel& label) const {
    validate_label(layout_, label);
    std::vector<std::size_t> tour;
    tour.reserve(label.symbols.size() + 2);
    tour.push_back(start_);
    for (Symbol s : label.symbols) tour.push_back(city_of_symbol_[s]);
    tour.push_back(start_);
    return tour;
}

AnchoredTsp anchor(TspInstance instance, std::size_t start) {
    instance.validate();
    const std::size_t n = instance.n_cities();
    if (n < 3) {
        throw std::invalid_argument("anchor: need at least 3 cities for a nontrivial tour");
    }
    if (start >= n) {
        throw std::out_of_range("anchor: start city " + std::to_string(start) + " out of range");
    }
    std::vector<std::size_t> cities;
    cities.reserve(n - 1);
    for (std::size_t c = 0; c < n; ++c) {
        if (c != start) cities.push_back(c);
    }
    BlockLayout layout(n - 1, n - 1);
    return AnchoredTsp(std::move(instance), start, layout, std::move(cities));
}

bool is_feasible(const AnchoredTsp& enc, const BasisLabel& label) {
    validate_label(enc.layout(), label);
    std::vector<bool> seen(enc.layout().n(), false);
    for (Symbol s : label.symbols) {
        if (seen[s]) return false;
        seen[s] = true;
    }
    return true;
}

double objective_value(const AnchoredTsp& enc, const BasisLabel& label) {
    validate_label(enc.layout(), label);
    const auto& C = enc.instance().distances;
    std::size_t prev = enc.start_city();
    double cost = 0.0;
    for (Symbol s : label.symbols) {
        std::size_t city = enc.city_of_symbol(s);
        cost += C[prev][city];
        prev = city;
    }
    cost += C[prev][enc.start_city()];
    return cost;
}

double tour_cost(const AnchoredTsp& enc, const BasisLabel& label) {
    if (!is_feasible(enc, label)) {
        throw std::invalid_argument("tour_cost: label " + to_string(label) + " is not a permutation");
    }
    return objective_value(enc, label);
}

double default_lambda(const TspInstance& instance) {
    return static_cast<double>(instance.n_cities()) * instance.max_distance();
}

CostDiagonal build_cost_diagonal(const AnchoredTsp& enc, double lambda) {
    if (!(lambda > 0.0) || !std::isfinite(lambda)) {
        throw std::invalid_argument("build_cost_diagonal: lambda must be positive and finite");
    }
    const BlockLayout& layout = enc.layout();
    if (layout.dim() > max_dim()) {
        throw DimensionError("encoded dimension " + std::to_string(layout.dim()) + " exceeds cap " +
                             std::to_string(max_dim()));
    }
    const std::size_t n = layout.n();
    const std::size_t m = layout.m();
    const auto& C = enc.instance().distances;
    const std::size_t start = enc.start_city();

    CostDiagonal diag{layout, std::vector<double>(layout.dim()), std::vector<double>(layout.dim()), lambda};

    std::vector<Symbol> digits(m, 0);
    std::vector<int> counts(n, 0);
    counts[0] = static_cast<int>(m);
    for (Index i = 0; i < layout.dim(); ++i) {
        std::size_t prev = start;
        double cost = 0.0;
        for (std::size_t b = 0; b < m; ++b) {
            std::size_t city = enc.city_of_symbol(digits[b]);
            cost += C[prev][city];
            prev = city;
        }
        cost += C[prev][start];
        diag.objective[i] = cost;

        double pen = 0.0;
        for (int c : counts) pen += static_cast<double>((c - 1) * (c - 1));
        diag.penalty[i] = lambda * pen;

        for (std::size_t b = m; b-- > 0;) {
            --counts[digits[b]];
            if (++digits[b] < n) {
                ++counts[digits[b]];
                break;
            }
            digits[b] = 0;
            ++counts[0];
        }
    }
    return diag;
}

bool costs_equal(double a, double b) {
    return std::abs(a - b) <= 1e-9 * std::max({1.0, std::abs(a), std::abs(b)});
}

OptimumInfo brute_force_optimum(const AnchoredTsp& enc) {
    const BlockLayout& layout = enc.layout();
    if (layout.m() > kMaxBruteForceBlocks) {
        throw std::invalid_argument("brute_force_optimum: m = " + std::to_string(layout.m()) +
                                    " exceeds the enumeration limit of " + std::to_string(kMaxBruteForceBlocks));
    }
    // n == m for anchored TSP, so feasible labels are exactly the permutations.
    BasisLabel label{std::vector<Symbol>(layout.m())};
    std::iota(label.symbols.begin(), label.symbols.end(), Symbol{0});

    OptimumInfo best{label, objective_value(enc, label), 0, {}};
    do {
        double c = objective_value(enc, label);
        if (costs_equal(c, best.cost)) {
            best.optimal_labels.push_back(label);
        } else if (c < best.cost) {
            best.cost = c;
            best.optimal_labels.assign(1, label);
        }
    } while (std::next_permutation(label.symbols.begin(), label.symbols.end()));

    // Lexicographic enumeration visits labels in increasing flat index order.
    best.label = best.optimal_labels.front();
    best.degeneracy = best.optimal_labels.size();
    return best;
}

}  // namespace ceqaoa
