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

#include "ceqaoa/layers.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

namespace ceqaoa {

MixerNormalization parse_normalization(std::string_view name) {
    if (name == "raw") return MixerNormalization::kRaw;
    if (name == "over_n") return MixerNormalization::kOverN;
    if (name == "over_n_minus_1") return MixerNormalization::kOverNMinus1;
    throw std::invalid_argument("unknown mixer normalization '" + std::string(name) + "'");
}

std::string_view to_string(MixerNormalization norm) {
    switch (norm) {
        case MixerNormalization::kRaw:
            return "raw";
        case MixerNormalization::kOverN:
            return "over_n";
        case MixerNormalization::kOverNMinus1:
            return "over_n_minus_1";
    }
    return "?";
}

double normalization_scale(std::size_t n, MixerNormalization norm) {
    switch (norm) {
        case MixerNormalization::kRaw:
            return 1.0;
        case MixerNormalization::kOverN:
            return 1.0 / static_cast<double>(n);
        case MixerNormalization::kOverNMinus1:
            return 1.0 / static_cast<double>(n - 1);
    }
    return 1.0;
}

LayerSchedule::LayerSchedule(std::vector<LayerAngles> layers) : layers_(std::move(layers)) {
    if (layers_.empty()) {
        throw std::invalid_argument("LayerSchedule: depth must be >= 1");
    }
    for (const auto& l : layers_) {
        if (!std::isfinite(l.gamma) || !std::isfinite(l.beta)) {
            throw std::invalid_argument("LayerSchedule: angles must be finite");
        }
    }
}

LayerSchedule LayerSchedule::repeated(double gamma, double beta, std::size_t depth) {
    return LayerSchedule(std::vector<LayerAngles>(depth, LayerAngles{gamma, beta}));
}

namespace {

struct RankOneCoefficients {
    Complex a;  // eigenvalue phase on the uniform vector
    Complex b;  // eigenvalue phase on its complement
};

RankOneCoefficients mixer_coefficients(std::size_t n, double beta, MixerNormalization norm) {
    const double scaled = beta * normalization_scale(n, norm);
    return {std::polar(1.0, -scaled * static_cast<double>(n - 1)), std::polar(1.0, scaled)};
}

}  // namespace

BlockMatrix mixer_block_matrix(std::size_t n, double beta, MixerNormalization norm) {
    if (n < 2) {
        throw std::invalid_argument("mixer_block_matrix: n must be >= 2");
    }
    const auto [a, b] = mixer_coefficients(n, beta, norm);
    const Complex off = (a - b) / static_cast<double>(n);
    BlockMatrix u{n, std::vector<Complex>(n * n, off)};
    for (std::size_t i = 0; i < n; ++i) {
        u.data[i * n + i] = b + off;
    }
    return u;
}

void apply_phase(EncodedState& state, double gamma, const CostDiagonal& diag) {
    if (!(diag.layout == state.layout())) {
        throw std::invalid_argument("apply_phase: cost diagonal layout does not match state layout");
    }
    auto amps = state.amplitudes();
    for (Index i = 0; i < amps.size(); ++i) {
        amps[i] *= std::polar(1.0, -gamma * diag.energy(i));
    }
}

void apply_mixer(EncodedState& state, double beta, MixerNormalization norm) {
    const BlockLayout& layout = state.layout();
    const std::size_t n = layout.n();
    const auto [a, b] = mixer_coefficients(n, beta, norm);
    const Complex shift = a - b;
    const double inv_n = 1.0 / static_cast<double>(n);
    auto amps = state.amplitudes();

    for (std::size_t axis = 0; axis < layout.m(); ++axis) {
        const Index stride = layout.stride(axis);
        const Index span = stride * n;
        for (Index base = 0; base < layout.dim(); base += span) {
            for (Index inner = 0; inner < stride; ++inner) {
                const Index first = base + inner;
                Complex sum{0.0, 0.0};
                for (std::size_t k = 0; k < n; ++k) {
                    sum += amps[first + k * stride];
                }
                const Complex correction = shift * (sum * inv_n);
                for (std::size_t k = 0; k < n; ++k) {
                    Complex& v = amps[first + k * stride];
                    v = b * v + correction;
                }
            }
        }
    }
}

EncodedState run_circuit(const BlockLayout& layout, const CostDiagonal& diag, const LayerSchedule& schedule,
                         MixerNormalization norm) {
    if (!(diag.layout == layout)) {
        throw std::invalid_argument("run_circuit: cost diagonal layout does not match");
    }
    EncodedState state = uniform_initial_state(layout);
    for (const auto& layer : schedule.layers()) {
        apply_phase(state, layer.gamma, diag);
        apply_mixer(state, layer.beta, norm);
    }
    state.check_normalized();
    return state;
}

MixerSpectrum mixer_spectrum(std::size_t n, MixerNormalization norm) {
    if (n < 2) {
        throw std::invalid_argument("mixer_spectrum: n must be >= 2");
    }
    const double scale = normalization_scale(n, norm);
    Eigen::MatrixXd h = Eigen::MatrixXd::Constant(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n), scale);
    h.diagonal().setZero();
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h, Eigen::EigenvaluesOnly);
    std::vector<double> ev(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return {ev, ev[0] - ev[1]};
}

}  // namespace ceqaoa
