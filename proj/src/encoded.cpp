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

#include "ceqaoa/encoded.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>

namespace ceqaoa {

Index max_dim() {
    const char* env = std::getenv("CEQAOA_MAX_DIM");
    if (env == nullptr || *env == '\0') {
        return kDefaultMaxDim;
    }
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || v == 0) {
        return kDefaultMaxDim;
    }
    return static_cast<Index>(v);
}

BlockLayout::BlockLayout(std::size_t n, std::size_t m) : n_(n), m_(m), dim_(1), strides_(m) {
    if (n < 2) {
        throw std::invalid_argument("BlockLayout: block size n must be >= 2");
    }
    if (m < 1) {
        throw std::invalid_argument("BlockLayout: block count m must be >= 1");
    }
    for (std::size_t b = 0; b < m; ++b) {
        if (dim_ > std::numeric_limits<Index>::max() / n) {
            throw DimensionError("BlockLayout: n^m overflows the index width");
        }
        dim_ *= n;
    }
    Index s = 1;
    for (std::size_t b = m; b-- > 0;) {
        strides_[b] = s;
        s *= n;
    }
}

std::string to_string(const BasisLabel& label) {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < label.symbols.size(); ++i) {
        if (i) out << ',';
        out << label.symbols[i];
    }
    out << ')';
    return out.str();
}

void validate_label(const BlockLayout& layout, const BasisLabel& label) {
    if (label.symbols.size() != layout.m()) {
        throw std::invalid_argument("label length " + std::to_string(label.symbols.size()) +
                                    " does not match block count " + std::to_string(layout.m()));
    }
    for (Symbol s : label.symbols) {
        if (s >= layout.n()) {
            throw std::out_of_range("label symbol " + std::to_string(s) + " out of range [0, " +
                                    std::to_string(layout.n()) + ")");
        }
    }
}

Index label_to_index(const BlockLayout& layout, const BasisLabel& label) {
    validate_label(layout, label);
    Index index = 0;
    for (Symbol s : label.symbols) {
        index = index * layout.n() + s;
    }
    return index;
}

BasisLabel index_to_label(const BlockLayout& layout, Index index) {
    if (index >= layout.dim()) {
        throw std::out_of_range("index " + std::to_string(index) + " >= D = " + std::to_string(layout.dim()));
    }
    BasisLabel label{std::vector<Symbol>(layout.m())};
    for (std::size_t b = layout.m(); b-- > 0;) {
        label.symbols[b] = static_cast<Symbol>(index % layout.n());
        index /= layout.n();
    }
    return label;
}

BlockPermutation BlockPermutation::identity(const BlockLayout& layout) {
    std::vector<Symbol> id(layout.n());
    std::iota(id.begin(), id.end(), Symbol{0});
    return BlockPermutation{std::vector<std::vector<Symbol>>(layout.m(), id)};
}

BlockPermutation BlockPermutation::inverse() const {
    BlockPermutation inv{perms};
    for (std::size_t b = 0; b < perms.size(); ++b) {
        for (std::size_t j = 0; j < perms[b].size(); ++j) {
            inv.perms[b][perms[b][j]] = static_cast<Symbol>(j);
        }
    }
    return inv;
}

BlockPermutation BlockPermutation::compose(const BlockPermutation& other) const {
    if (other.perms.size() != perms.size()) {
        throw std::invalid_argument("BlockPermutation::compose: block count mismatch");
    }
    BlockPermutation out{perms};
    for (std::size_t b = 0; b < perms.size(); ++b) {
        if (other.perms[b].size() != perms[b].size()) {
            throw std::invalid_argument("BlockPermutation::compose: block size mismatch");
        }
        for (std::size_t j = 0; j < perms[b].size(); ++j) {
            out.perms[b][j] = perms[b][other.perms[b][j]];
        }
    }
    return out;
}

void BlockPermutation::validate(const BlockLayout& layout) const {
    if (perms.size() != layout.m()) {
        throw std::invalid_argument("BlockPermutation: expected " + std::to_string(layout.m()) + " blocks");
    }
    for (const auto& p : perms) {
        if (p.size() != layout.n()) {
            throw std::invalid_argument("BlockPermutation: block permutation has wrong size");
        }
        std::vector<Symbol> sorted = p;
        std::sort(sorted.begin(), sorted.end());
        for (std::size_t j = 0; j < sorted.size(); ++j) {
            if (sorted[j] != j) {
                throw std::invalid_argument("BlockPermutation: not a bijection on [0, n)");
            }
        }
    }
}

EncodedState::EncodedState(BlockLayout layout) : layout_(std::move(layout)) {
    if (layout_.dim() > max_dim()) {
        throw DimensionError("encoded dimension " + std::to_string(layout_.dim()) + " exceeds cap " +
                             std::to_string(max_dim()));
    }
    amplitudes_.assign(layout_.dim(), Complex{0.0, 0.0});
    amplitudes_[0] = 1.0;
}

EncodedState::EncodedState(BlockLayout layout, std::vector<Complex> amplitudes)
    : layout_(std::move(layout)), amplitudes_(std::move(amplitudes)) {
    if (layout_.dim() > max_dim()) {
        throw DimensionError("encoded dimension " + std::to_string(layout_.dim()) + " exceeds cap " +
                             std::to_string(max_dim()));
    }
    if (amplitudes_.size() != layout_.dim()) {
        throw std::invalid_argument("EncodedState: amplitude count does not match D");
    }
}

EncodedState EncodedState::basis(const BlockLayout& layout, Index index) {
    if (index >= layout.dim()) {
        throw std::out_of_range("EncodedState::basis: index out of range");
    }
    EncodedState s(layout);
    s.amplitudes_[0] = 0.0;
    s.amplitudes_[index] = 1.0;
    return s;
}

double EncodedState::norm_squared() const {
    double acc = 0.0;
    for (const Complex& a : amplitudes_) {
        acc += std::norm(a);
    }
    return acc;
}

std::vector<double> EncodedState::probabilities() const {
    std::vector<double> p(amplitudes_.size());
    std::transform(amplitudes_.begin(), amplitudes_.end(), p.begin(), [](const Complex& a) { return std::norm(a); });
    return p;
}

void EncodedState::check_normalized(double tol) const {
    double dev = std::abs(norm_squared() - 1.0);
    if (!(dev <= tol)) {
        std::ostringstream msg;
        msg << "EncodedState norm drifted: |norm^2 - 1| = " << dev;
        throw std::logic_error(msg.str());
    }
}

EncodedState uniform_initial_state(const BlockLayout& layout) {
    if (layout.dim() > max_dim()) {
        throw DimensionError("encoded dimension " + std::to_string(layout.dim()) + " exceeds cap " +
                             std::to_string(max_dim()));
    }
    const double amp = 1.0 / std::sqrt(static_cast<double>(layout.dim()));
    return EncodedState(layout, std::vector<Complex>(layout.dim(), Complex{amp, 0.0}));
}

EncodedState apply_block_permutation(const EncodedState& state, const BlockPermutation& perm) {
    const BlockLayout& layout = state.layout();
    perm.validate(layout);
    const std::size_t n = layout.n();
    const std::size_t m = layout.m();

    std::vector<Complex> out(layout.dim());
    // Odometer over input labels; the image index is updated digit by digit.
    std::vector<Symbol> digits(m, 0);
    Index image = 0;
    for (std::size_t b = 0; b < m; ++b) {
        image += perm.perms[b][0] * layout.stride(b);
    }
    const auto in = state.amplitudes();
    for (Index i = 0; i < layout.dim(); ++i) {
        out[image] = in[i];
        for (std::size_t b = m; b-- > 0;) {
            const Index stride = layout.stride(b);
            image -= perm.perms[b][digits[b]] * stride;
            if (++digits[b] < n) {
                image += perm.perms[b][digits[b]] * stride;
                break;
            }
            digits[b] = 0;
            image += perm.perms[b][0] * stride;
        }
    }
    return EncodedState(layout, std::move(out));
}

double overlap_probability(const EncodedState& state, const BasisLabel& label) {
    return std::norm(state[label_to_index(state.layout(), label)]);
}

}  // namespace ceqaoa
