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

#include <string_view>
#include <utility>
#include <vector>

#include "ceqaoa/encoded.hpp"
#include "ceqaoa/hamiltonian.hpp"

namespace ceqaoa {

/// Scaling of the per-block generator A(K_n).
enum class MixerNormalization { kRaw, kOverN, kOverNMinus1 };

MixerNormalization parse_normalization(std::string_view name);
std::string_view to_string(MixerNormalization norm);

/// Factor multiplying A(K_n) for the given block size.
double normalization_scale(std::size_t n, MixerNormalization norm);

struct LayerAngles {
    double gamma;
    double beta;
};

/// p >= 1 alternating (γ, β) pairs.
class LayerSchedule {
   public:
    explicit LayerSchedule(std::vector<LayerAngles> layers);
    /// The same pair repeated p times.
    static LayerSchedule repeated(double gamma, double beta, std::size_t depth);

    std::size_t depth() const { return layers_.size(); }
    const std::vector<LayerAngles>& layers() const { return layers_; }

   private:
    std::vector<LayerAngles> layers_;
};

/// Column-major n×n complex matrix.
struct BlockMatrix {
    std::size_t n;
    std::vector<Complex> data;

    Complex operator()(std::size_t row, std::size_t col) const { return data[col * n + row]; }
};

/// exp(−iβ' A(K_n)) = e^{−iβ'(n−1)} J/n + e^{iβ'} (I − J/n), β' = β · scale.
BlockMatrix mixer_block_matrix(std::size_t n, double beta, MixerNormalization norm);

/// amplitude[x] *= exp(−iγ E(x)), E = objective + penalty.
void apply_phase(EncodedState& state, double gamma, const CostDiagonal& diag);

/// Applies the block mixer on every block axis using the rank-1 update
/// b·ψ + (a − b)·mean, O(D·m).
void apply_mixer(EncodedState& state, double beta, MixerNormalization norm);

/// Uniform start, then phase followed by mixer for each layer.
EncodedState run_circuit(const BlockLayout& layout, const CostDiagonal& diag, const LayerSchedule& schedule,
                         MixerNormalization norm);

struct MixerSpectrum {
    std::vector<double> eigenvalues;  // descending
    double gap;
};

/// Numerical spectrum of scale · A(K_n).
MixerSpectrum mixer_spectrum(std::size_t n, MixerNormalization norm);

}  // namespace ceqaoa
