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

#include <complex>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace ceqaoa {

using Complex = std::complex<double>;
using Index = std::uint64_t;
using Symbol = std::uint32_t;

/// Thrown when an encoded dimension exceeds the configured amplitude cap or
/// the index width.
class DimensionError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Default cap on the number of stored amplitudes (2^25).
inline constexpr Index kDefaultMaxDim = Index{1} << 25;

/// Amplitude cap in effect: `CEQAOA_MAX_DIM` if set and valid, otherwise
/// kDefaultMaxDim.
Index max_dim();

/// Geometry of the one-hot product space: m blocks of n symbols, D = n^m.
class BlockLayout {
   public:
    BlockLayout(std::size_t n, std::size_t m);

    std::size_t n() const { return n_; }
    std::size_t m() const { return m_; }
    Index dim() const { return dim_; }

    /// Stride of block b in the flat index. Block 0 is the most significant digit.
    Index stride(std::size_t block) const { return strides_[block]; }

    bool operator==(const BlockLayout& other) const { return n_ == other.n_ && m_ == other.m_; }

   private:
    std::size_t n_;
    std::size_t m_;
    Index dim_;
    std::vector<Index> strides_;
};

/// One symbol in [0, n) per block.
struct BasisLabel {
    std::vector<Symbol> symbols;

    bool operator==(const BasisLabel&) const = default;
    auto operator<=>(const BasisLabel&) const = default;
};

std::string to_string(const BasisLabel& label);

void validate_label(const BlockLayout& layout, const BasisLabel& label);
Index label_to_index(const BlockLayout& layout, const BasisLabel& label);
BasisLabel index_to_label(const BlockLayout& layout, Index index);

/// Per-block symbol permutations P = P_0 ⊗ ... ⊗ P_{m-1}; perms[b][j] is the
/// image of symbol j in block b.
struct BlockPermutation {
    std::vector<std::vector<Symbol>> perms;

    static BlockPermutation identity(const BlockLayout& layout);
    BlockPermutation inverse() const;
    /// (this ∘ other): apply `other` first.
    BlockPermutation compose(const BlockPermutation& other) const;
    void validate(const BlockLayout& layout) const;

    bool operator==(const BlockPermutation&) const = default;
};

/// Dense amplitude vector over the n^m encoded basis labels.
class EncodedState {
   public:
    /// All amplitude on label 0. Throws DimensionError if D exceeds max_dim().
    explicit EncodedState(BlockLayout layout);
    EncodedState(BlockLayout layout, std::vector<Complex> amplitudes);

    static EncodedState basis(const BlockLayout& layout, Index index);

    const BlockLayout& layout() const { return layout_; }
    Index dim() const { return layout_.dim(); }

    std::span<const Complex> amplitudes() const { return amplitudes_; }
    std::span<Complex> amplitudes() { return amplitudes_; }
    const Complex& operator[](Index i) const { return amplitudes_[i]; }
    Complex& operator[](Index i) { return amplitudes_[i]; }

    double norm_squared() const;
    std::vector<double> probabilities() const;

    /// Throws std::logic_error if |‖ψ‖² − 1| exceeds tol.
    void check_normalized(double tol = 1e-10) const;

   private:
    BlockLayout layout_;
    std::vector<Complex> amplitudes_;
};

/// Block-wise tensor product of uniform W states: every amplitude 1/sqrt(D).
EncodedState uniform_initial_state(const BlockLayout& layout);

/// Output amplitude at (j_0..j_{m-1}) is the input amplitude at
/// (perm_0^{-1}(j_0), ..., perm_{m-1}^{-1}(j_{m-1})).
EncodedState apply_block_permutation(const EncodedState& state, const BlockPermutation& perm);

double overlap_probability(const EncodedState& state, const BasisLabel& label);

}  // namespace ceqaoa
