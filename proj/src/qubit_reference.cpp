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

#include "ceqaoa/qubit_reference.hpp"

#include <cmath>
#include <iomanip>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace ceqaoa::qubit {

namespace {

constexpr Complex kI{0.0, 1.0};

void check_budget(std::size_t q) {
    if (q > kMaxQubits) {
        throw std::invalid_argument("qubit budget exceeded: " + std::to_string(q) + " > " +
                                    std::to_string(kMaxQubits));
    }
}

// Mixes each pair (a, a ^ mask) where a has the lower bit of the pair clear.
// `f` receives (a, partner) with a < partner.
template <typename F>
void for_each_pair(std::size_t dim, Index mask, Index low_bit, F&& f) {
    for (Index a = 0; a < dim; ++a) {
        if ((a & low_bit) == 0) {
            f(a, a ^ mask);
        }
    }
}

}  // namespace

std::string to_string(GateKind kind) {
    switch (kind) {
        case GateKind::kX:
            return "X";
        case GateKind::kPhase:
            return "P";
        case GateKind::kCX:
            return "CX";
        case GateKind::kCRY:
            return "CRY";
        case GateKind::kRXX:
            return "RXX";
        case GateKind::kRYY:
            return "RYY";
        case GateKind::kXYRot:
            return "XYROT";
    }
    return "?";
}

std::size_t count_two_qubit(const std::vector<GateOp>& gates) {
    std::size_t c = 0;
    for (const auto& g : gates) c += g.two_qubit() ? 1 : 0;
    return c;
}

void write_gate_list(std::ostream& out, const std::vector<GateOp>& gates) {
    out << std::setprecision(17);
    for (const auto& g : gates) {
        out << to_string(g.kind);
        for (std::size_t t : g.targets) out << ' ' << t;
        if (g.kind != GateKind::kX && g.kind != GateKind::kCX) out << ' ' << g.angle;
        out << '\n';
    }
}

QubitState::QubitState(std::size_t q) : q_(q) {
    check_budget(q);
    amps_.assign(Index{1} << q, Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

double QubitState::norm_squared() const {
    double acc = 0.0;
    for (const auto& a : amps_) acc += std::norm(a);
    return acc;
}

void QubitState::apply(const GateOp& gate) {
    const std::size_t expected = (gate.kind == GateKind::kX || gate.kind == GateKind::kPhase) ? 1 : 2;
    if (gate.targets.size() != expected) {
        throw std::invalid_argument(to_string(gate.kind) + " expects " + std::to_string(expected) + " target(s)");
    }
    for (std::size_t t : gate.targets) {
        if (t >= q_) throw std::out_of_range("gate target " + std::to_string(t) + " >= q");
    }
    if (expected == 2 && gate.targets[0] == gate.targets[1]) {
        throw std::invalid_argument("two-qubit gate targets must be distinct");
    }

    const std::size_t dim = amps_.size();
    const Index bit0 = Index{1} << gate.targets[0];
    const Index bit1 = expected == 2 ? Index{1} << gate.targets[1] : 0;
    const double c = std::cos(gate.angle / 2.0);
    const double s = std::sin(gate.angle / 2.0);

    switch (gate.kind) {
        case GateKind::kX:
            for_each_pair(dim, bit0, bit0, [&](Index a, Index p) { std::swap(amps_[a], amps_[p]); });
            break;
        case GateKind::kPhase: {
            const Complex phase = std::polar(1.0, gate.angle);
            for (Index a = 0; a < dim; ++a) {
                if (a & bit0) amps_[a] *= phase;
            }
            break;
        }
        case GateKind::kCX:
            for_each_pair(dim, bit1, bit1, [&](Index a, Index p) {
                if (a & bit0) std::swap(amps_[a], amps_[p]);
            });
            break;
        case GateKind::kCRY:
            for_each_pair(dim, bit1, bit1, [&](Index a, Index p) {
                if (a & bit0) {
                    const Complex v0 = amps_[a];
                    const Complex v1 = amps_[p];
                    amps_[a] = c * v0 - s * v1;
                    amps_[p] = s * v0 + c * v1;
                }
            });
            break;
        case GateKind::kRXX:
        case GateKind::kRYY:
        case GateKind::kXYRot: {
            const Index mask = bit0 | bit1;
            const Index low = std::min(bit0, bit1);
            for_each_pair(dim, mask, low, [&](Index a, Index p) {
                const bool differ = ((a & bit0) != 0) != ((a & bit1) != 0);
                Complex coeff;  // off-diagonal factor of exp(−iθ/2 G)
                double diag = c;
                if (gate.kind == GateKind::kRXX) {
                    coeff = -kI * s;
                } else if (gate.kind == GateKind::kRYY) {
                    coeff = -kI * s * (differ ? 1.0 : -1.0);
                } else {
                    if (!differ) return;
                    // XX + YY acts as 2σx on span{|01⟩, |10⟩}.
                    diag = std::cos(gate.angle);
                    coeff = -kI * std::sin(gate.angle);
                }
                const Complex va = amps_[a];
                const Complex vp = amps_[p];
                amps_[a] = diag * va + coeff * vp;
                amps_[p] = diag * vp + coeff * va;
            });
            break;
        }
    }
}

void QubitState::apply(const std::vector<GateOp>& gates) {
    for (const auto& g : gates) apply(g);
}

double cascade_angle(std::size_t n, std::size_t k) {
    return 2.0 * std::acos(1.0 / std::sqrt(static_cast<double>(n - k)));
}

std::vector<GateOp> one_hot_block_prepare(std::size_t n, EncoderVariant variant, std::size_t offset) {
    if (n < 2 || n > 12) {
        throw std::invalid_argument("one_hot_block_prepare: n must lie in [2, 12]");
    }
    std::vector<GateOp> gates;
    gates.push_back({GateKind::kX, {offset}, 0.0});
    for (std::size_t k = 0; k + 1 < n; ++k) {
        const double theta = cascade_angle(n, k);
        if (variant == EncoderVariant::kXYRotation) {
            // XYROT(φ) moves amplitude cos φ / −i sin φ, so φ = θ/2 reproduces
            // the CRY split cos(θ/2) / sin(θ/2).
            gates.push_back({GateKind::kXYRot, {offset + k, offset + k + 1}, theta / 2.0});
        } else {
            gates.push_back({GateKind::kCRY, {offset + k, offset + k + 1}, theta});
            gates.push_back({GateKind::kCX, {offset + k + 1, offset + k}, 0.0});
        }
    }
    if (variant == EncoderVariant::kXYRotation) {
        // Site k carries (−i)^k after the cascade.
        for (std::size_t k = 1; k < n; ++k) {
            gates.push_back({GateKind::kPhase, {offset + k}, static_cast<double>(k % 4) * std::numbers::pi / 2.0});
        }
    }
    return gates;
}

std::vector<GateOp> multi_block_prepare(std::size_t n, std::size_t m, EncoderVariant variant) {
    check_budget(n * m);
    std::vector<GateOp> gates;
    for (std::size_t b = 0; b < m; ++b) {
        auto block = one_hot_block_prepare(n, variant, b * n);
        gates.insert(gates.end(), block.begin(), block.end());
    }
    return gates;
}

std::vector<GateOp> block_xy_mixer_gates(std::size_t n, std::size_t m, double beta, PairRange range) {
    if (n < 2 || m < 1) {
        throw std::invalid_argument("block_xy_mixer_gates: need n >= 2, m >= 1");
    }
    check_budget(n * m);
    const std::size_t j_end = range == PairRange::kAllPairs ? n : n - 1;
    std::vector<GateOp> gates;
    for (std::size_t b = 0; b < m; ++b) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < j_end; ++j) {
                gates.push_back({GateKind::kRXX, {b * n + i, b * n + j}, 2.0 * beta});
                gates.push_back({GateKind::kRYY, {b * n + i, b * n + j}, 2.0 * beta});
            }
        }
    }
    return gates;
}

Index one_hot_index(const BlockLayout& layout, const BasisLabel& label) {
    validate_label(layout, label);
    Index idx = 0;
    for (std::size_t b = 0; b < layout.m(); ++b) {
        idx |= Index{1} << (b * layout.n() + label.symbols[b]);
    }
    return idx;
}

Projection project_to_encoded(const QubitState& state, const BlockLayout& layout) {
    if (state.qubits() != layout.n() * layout.m()) {
        throw std::invalid_argument("project_to_encoded: qubit count " + std::to_string(state.qubits()) +
                                    " != n*m = " + std::to_string(layout.n() * layout.m()));
    }
    std::vector<Complex> amps(layout.dim());
    const auto src = state.amplitudes();
    double inside = 0.0;
    for (Index i = 0; i < layout.dim(); ++i) {
        const Complex v = src[one_hot_index(layout, index_to_label(layout, i))];
        amps[i] = v;
        inside += std::norm(v);
    }
    const double total = state.norm_squared();
    if (inside > 0.0) {
        const double scale = 1.0 / std::sqrt(inside);
        for (auto& a : amps) a *= scale;
    }
    return {EncodedState(layout, std::move(amps)), std::max(0.0, total - inside)};
}

}  // namespace ceqaoa::qubit
