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

#include <iosfwd>
#include <string>
#include <vector>

#include "ceqaoa/encoded.hpp"

// Dense 2^q gate-level simulator used to cross-check the encoded picture.
// Qubit k is bit k of the basis index; qubit b·n + i is symbol i of block b.

namespace ceqaoa::qubit {

inline constexpr std::size_t kMaxQubits = 20;

enum class GateKind {
    kX,
    kPhase,  // diag(1, e^{iθ}); single-qubit Z-type correction
    kCX,     // targets = {control, target}
    kCRY,    // targets = {control, target}; RY(θ) on target
    kRXX,    // exp(−i θ/2 X⊗X)
    kRYY,    // exp(−i θ/2 Y⊗Y)
    kXYRot,  // exp(−i θ/2 (XX + YY))
};

struct GateOp {
    GateKind kind;
    std::vector<std::size_t> targets;
    double angle = 0.0;

    bool two_qubit() const { return targets.size() == 2; }
};

std::string to_string(GateKind kind);
std::size_t count_two_qubit(const std::vector<GateOp>& gates);

/// One gate per line: `KIND q1 [q2] [angle]`.
void write_gate_list(std::ostream& out, const std::vector<GateOp>& gates);

class QubitState {
   public:
    /// |0...0⟩ on q qubits; q <= kMaxQubits.
    explicit QubitState(std::size_t q);

    std::size_t qubits() const { return q_; }
    std::span<const Complex> amplitudes() const { return amps_; }
    std::span<Complex> amplitudes() { return amps_; }
    double norm_squared() const;

    void apply(const GateOp& gate);
    void apply(const std::vector<GateOp>& gates);

   private:
    std::size_t q_;
    std::vector<Complex> amps_;
};

enum class EncoderVariant {
    kXYRotation,  // XYROT per edge plus single-qubit phase fix-ups
    kCxCry,       // CX_{k+1→k} · CRY_{k→k+1}(θ_k) per edge
};

/// Cascade angle 2·arccos(1/sqrt(n − k)) for edge (k, k+1).
double cascade_angle(std::size_t n, std::size_t k);

/// W_n preparation on qubits [offset, offset + n).
std::vector<GateOp> one_hot_block_prepare(std::size_t n, EncoderVariant variant = EncoderVariant::kXYRotation,
                                          std::size_t offset = 0);

std::vector<GateOp> multi_block_prepare(std::size_t n, std::size_t m,
                                        EncoderVariant variant = EncoderVariant::kXYRotation);

enum class PairRange {
    kAllPairs,          // 0 <= i < j <= n − 1
    kExcludeLastSymbol  // 0 <= i < j < n − 1; pairs touching the last symbol are dropped
};

/// RXX(2β) then RYY(2β) per block per unordered pair.
std::vector<GateOp> block_xy_mixer_gates(std::size_t n, std::size_t m, double beta,
                                         PairRange range = PairRange::kAllPairs);

struct Projection {
    EncodedState state;
    double leaked_mass;
};

/// Reads the one-hot-per-block amplitudes into an encoded state (normalized
/// when any mass remains) and reports 1 − (mass inside the one-hot subspace).
Projection project_to_encoded(const QubitState& state, const BlockLayout& layout);

/// Qubit-space index of an encoded label.
Index one_hot_index(const BlockLayout& layout, const BasisLabel& label);

}  // namespace ceqaoa::qubit
