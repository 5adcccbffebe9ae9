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

// Test-only oracles and generators. Nothing here calls into the code paths it
// is used to check.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <random>
#include <vector>

#include "ceqaoa/encoded.hpp"
#include "ceqaoa/hamiltonian.hpp"

namespace ceqaoa::testing {

inline TspInstance example4() {
    return TspInstance{"example4", {{0, 10, 15, 20}, {10, 0, 35, 25}, {15, 35, 0, 30}, {20, 25, 30, 0}}, 80.0};
}

/// Integer distances in [1, 100]; symmetric unless `asymmetric`.
inline TspInstance random_instance(std::size_t n, std::uint64_t seed, bool asymmetric = false) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> d(1, 100);
    TspInstance inst{"random", std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0)), {}};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = asymmetric ? 0 : i + 1; j < n; ++j) {
            if (i == j) continue;
            const double v = d(rng);
            inst.distances[i][j] = v;
            if (!asymmetric) inst.distances[j][i] = v;
        }
    }
    return inst;
}

/// Held–Karp over subsets of non-start cities; cost of the best cycle through `start`.
inline double held_karp(const std::vector<std::vector<double>>& c, std::size_t start) {
    const std::size_t n = c.size();
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < n; ++i)
        if (i != start) others.push_back(i);
    const std::size_t k = others.size();
    const double inf = std::numeric_limits<double>::infinity();
    std::vector<std::vector<double>> dp(std::size_t{1} << k, std::vector<double>(k, inf));
    for (std::size_t j = 0; j < k; ++j) dp[std::size_t{1} << j][j] = c[start][others[j]];
    for (std::size_t mask = 1; mask < (std::size_t{1} << k); ++mask) {
        for (std::size_t j = 0; j < k; ++j) {
            if (!(mask >> j & 1) || dp[mask][j] == inf) continue;
            for (std::size_t t = 0; t < k; ++t) {
                if (mask >> t & 1) continue;
                const std::size_t next = mask | (std::size_t{1} << t);
                dp[next][t] = std::min(dp[next][t], dp[mask][j] + c[others[j]][others[t]]);
            }
        }
    }
    double best = inf;
    for (std::size_t j = 0; j < k; ++j) best = std::min(best, dp.back()[j] + c[others[j]][start]);
    return best;
}

inline EncodedState random_state(const BlockLayout& layout, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    std::vector<Complex> amps(layout.dim());
    double norm = 0.0;
    for (auto& a : amps) {
        a = {g(rng), g(rng)};
        norm += std::norm(a);
    }
    for (auto& a : amps) a /= std::sqrt(norm);
    return EncodedState(layout, std::move(amps));
}

using DenseMatrix = std::vector<std::vector<Complex>>;

inline DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b) {
    const std::size_t ra = a.size(), rb = b.size();
    DenseMatrix out(ra * rb, std::vector<Complex>(ra * rb));
    for (std::size_t i = 0; i < ra; ++i)
        for (std::size_t j = 0; j < ra; ++j)
            for (std::size_t k = 0; k < rb; ++k)
                for (std::size_t l = 0; l < rb; ++l) out[i * rb + k][j * rb + l] = a[i][j] * b[k][l];
    return out;
}

inline std::vector<Complex> matvec(const DenseMatrix& a, std::span<const Complex> v) {
    std::vector<Complex> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

}  // namespace ceqaoa::testing
