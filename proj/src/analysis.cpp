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

#include "ceqaoa/analysis.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "ceqaoa/parallel.hpp"
#include "ceqaoa/phqc.hpp"

namespace ceqaoa {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

std::vector<std::vector<Symbol>> all_permutations(std::size_t n) {
    std::vector<Symbol> p(n);
    std::iota(p.begin(), p.end(), Symbol{0});
    std::vector<std::vector<Symbol>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

struct Accumulator {
    double sum = 0.0;
    double sum_sq = 0.0;
    std::uint64_t count = 0;

    void add(double x) {
        sum += x;
        sum_sq += x * x;
        ++count;
    }
    double mean() const { return sum / static_cast<double>(count); }
    double std_error() const {
        if (count < 2) return 0.0;
        const double c = static_cast<double>(count);
        const double var = std::max(0.0, (sum_sq - sum * sum / c) / (c - 1.0));
        return std::sqrt(var / c);
    }
};

Index image_index(const BlockLayout& layout, const BlockPermutation& perm, const BasisLabel& target) {
    Index idx = 0;
    for (std::size_t b = 0; b < layout.m(); ++b) {
        idx = idx * layout.n() + perm.perms[b][target.symbols[b]];
    }
    return idx;
}

}  // namespace

std::uint64_t block_permutation_count(const BlockLayout& layout) {
    std::uint64_t factorial = 1;
    for (std::uint64_t k = 2; k <= layout.n(); ++k) {
        if (factorial > std::numeric_limits<std::uint64_t>::max() / k) return std::numeric_limits<std::uint64_t>::max();
        factorial *= k;
    }
    std::uint64_t total = 1;
    for (std::size_t b = 0; b < layout.m(); ++b) {
        if (total > std::numeric_limits<std::uint64_t>::max() / factorial) {
            return std::numeric_limits<std::uint64_t>::max();
        }
        total *= factorial;
    }
    return total;
}

BlockPermutation random_block_permutation(const BlockLayout& layout, std::mt19937_64& rng) {
    BlockPermutation p = BlockPermutation::identity(layout);
    for (auto& block : p.perms) {
        for (std::size_t i = block.size() - 1; i > 0; --i) {
            std::swap(block[i], block[uniform_below(rng, i + 1)]);
        }
    }
    return p;
}

double twirled_overlap(const EncodedState& state, const BlockPermutation& perm, const BasisLabel& target) {
    validate_label(state.layout(), target);
    return std::norm(state[image_index(state.layout(), perm, target)]);
}

TwirlEstimate twirl_average(const EncodedState& state, const BasisLabel& target, const TwirlMode& mode) {
    const BlockLayout& layout = state.layout();
    validate_label(layout, target);

    if (const auto* mc = std::get_if<MonteCarlo>(&mode)) {
        if (mc->samples < 1) throw std::invalid_argument("twirl_average: need at least one sample");
        std::mt19937_64 rng(mc->seed);
        Accumulator acc;
        for (std::uint64_t s = 0; s < mc->samples; ++s) {
            acc.add(twirled_overlap(state, random_block_permutation(layout, rng), target));
        }
        return {acc.mean(), acc.std_error(), acc.count};
    }

    const std::uint64_t total = block_permutation_count(layout);
    if (total > kMaxExhaustivePermutations) {
        throw std::invalid_argument("twirl_average: (n!)^m = " + std::to_string(total) +
                                    " exceeds the exhaustive limit");
    }
    const auto perms = all_permutations(layout.n());
    std::vector<std::size_t> digit(layout.m(), 0);
    BlockPermutation p{std::vector<std::vector<Symbol>>(layout.m(), perms[0])};
    double sum = 0.0;
    for (std::uint64_t k = 0; k < total; ++k) {
        sum += twirled_overlap(state, p, target);
        for (std::size_t b = layout.m(); b-- > 0;) {
            if (++digit[b] < perms.size()) {
                p.perms[b] = perms[digit[b]];
                break;
            }
            digit[b] = 0;
            p.perms[b] = perms[0];
        }
    }
    return {sum / static_cast<double>(total), 0.0, total};
}

GoodPermutation find_good_permutation(const EncodedState& state, const BasisLabel& target) {
    const BlockLayout& layout = state.layout();
    validate_label(layout, target);
    const double baseline = 1.0 / static_cast<double>(layout.dim());
    const std::uint64_t total = block_permutation_count(layout);

    if (total <= kMaxExhaustivePermutations) {
        const auto perms = all_permutations(layout.n());
        std::vector<std::size_t> digit(layout.m(), 0);
        BlockPermutation p{std::vector<std::vector<Symbol>>(layout.m(), perms[0])};
        GoodPermutation best{p, twirled_overlap(state, p, target), true, false};
        for (std::uint64_t k = 0; k < total; ++k) {
            const double v = twirled_overlap(state, p, target);
            if (v > best.overlap) {
                best.perm = p;
                best.overlap = v;
            }
            for (std::size_t b = layout.m(); b-- > 0;) {
                if (++digit[b] < perms.size()) {
                    p.perms[b] = perms[digit[b]];
                    break;
                }
                digit[b] = 0;
                p.perms[b] = perms[0];
            }
        }
        best.certified = best.overlap >= baseline;
        return best;
    }

    BlockPermutation p = BlockPermutation::identity(layout);
    double current = twirled_overlap(state, p, target);
    bool improved = true;
    while (improved) {
        improved = false;
        for (std::size_t b = 0; b < layout.m(); ++b) {
            for (std::size_t i = 0; i < layout.n(); ++i) {
                for (std::size_t j = i + 1; j < layout.n(); ++j) {
                    std::swap(p.perms[b][i], p.perms[b][j]);
                    const double v = twirled_overlap(state, p, target);
                    if (v > current) {
                        current = v;
                        improved = true;
                    } else {
                        std::swap(p.perms[b][i], p.perms[b][j]);
                    }
                }
            }
        }
    }
    return {p, current, false, current >= baseline};
}

Matrix angle_averaged_transition(std::size_t n, std::size_t quadrature_points, MixerNormalization norm) {
    if (n < 2) throw std::invalid_argument("angle_averaged_transition: n must be >= 2");
    if (quadrature_points < 64) throw std::invalid_argument("angle_averaged_transition: need K >= 64");
    Matrix p(n, std::vector<double>(n, 0.0));
    for (std::size_t k = 0; k < quadrature_points; ++k) {
        const double beta = kTwoPi * static_cast<double>(k) / static_cast<double>(quadrature_points);
        const BlockMatrix u = mixer_block_matrix(n, beta, norm);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                p[i][j] += std::norm(u(j, i));
            }
        }
    }
    for (auto& row : p) {
        for (double& v : row) v /= static_cast<double>(quadrature_points);
    }
    return p;
}

Matrix transition_closed_form(std::size_t n) {
    const double nd = static_cast<double>(n);
    Matrix p(n, std::vector<double>(n, 2.0 / (nd * nd)));
    for (std::size_t i = 0; i < n; ++i) p[i][i] = 1.0 - 2.0 / nd + 2.0 / (nd * nd);
    return p;
}

namespace {

// exp(−iθ(|i⟩⟨j| + |j⟩⟨i|)) on a single block vector.
void xy_pulse(std::span<Complex> v, std::size_t i, std::size_t j, double theta) {
    const double c = std::cos(theta);
    const Complex s{0.0, -std::sin(theta)};
    const Complex vi = v[i];
    const Complex vj = v[j];
    v[i] = c * vi + s * vj;
    v[j] = c * vj + s * vi;
}

void random_block_layer(std::span<Complex> v, std::size_t n, std::mt19937_64& rng) {
    const std::uint64_t edges = n * (n - 1) / 2;
    std::uint64_t e = uniform_below(rng, edges);
    std::size_t i = 0;
    while (e >= n - 1 - i) {
        e -= n - 1 - i;
        ++i;
    }
    const std::size_t j = i + 1 + static_cast<std::size_t>(e);
    xy_pulse(v, i, j, kTwoPi * uniform01(rng));
    const std::size_t k = static_cast<std::size_t>(uniform_below(rng, n));
    v[k] *= std::polar(1.0, -kTwoPi * uniform01(rng));
}

MomentReport finish_moments(const std::vector<double>& samples, double dim) {
    Accumulator first;
    Accumulator second;
    for (double x : samples) {
        first.add(x);
        second.add(x * x);
    }
    return {first.mean(),      second.mean(),       1.0 / dim, 2.0 / (dim * (dim + 1.0)),
            first.count,       first.std_error(),   second.std_error()};
}

}  // namespace

MomentReport block_design_moments(std::size_t n, std::size_t layers, std::uint64_t trials, std::uint64_t seed,
                                  Symbol target) {
    if (n < 2 || n > 8) throw std::invalid_argument("block_design_moments: n must lie in [2, 8]");
    if (trials < 1) throw std::invalid_argument("block_design_moments: need at least one trial");
    if (target >= n) throw std::out_of_range("block_design_moments: target out of range");

    std::vector<double> samples(trials);
    parallel_for(trials, [&](std::size_t t) {
        std::mt19937_64 rng(derive_seed(seed, t));
        std::vector<Complex> v(n, Complex{1.0 / std::sqrt(static_cast<double>(n)), 0.0});
        for (std::size_t l = 0; l < layers; ++l) random_block_layer(v, n, rng);
        samples[t] = std::norm(v[target]);
    });
    return finish_moments(samples, static_cast<double>(n));
}

MomentReport global_design_moments(const BlockLayout& layout, std::size_t layers, std::uint64_t trials,
                                   std::uint64_t seed) {
    if (trials < 1) throw std::invalid_argument("global_design_moments: need at least one trial");
    const std::size_t n = layout.n();
    const std::size_t m = layout.m();
    // Σ_{b<b'} j_b · j_b' is not a sum of single-block terms.
    std::vector<double> coupling(layout.dim());
    for (Index x = 0; x < layout.dim(); ++x) {
        const BasisLabel l = index_to_label(layout, x);
        double c = 0.0;
        for (std::size_t b = 0; b < m; ++b)
            for (std::size_t b2 = b + 1; b2 < m; ++b2) c += static_cast<double>(l.symbols[b] * l.symbols[b2]);
        coupling[x] = c;
    }

    std::vector<double> samples(trials);
    parallel_for(trials, [&](std::size_t t) {
        std::mt19937_64 rng(derive_seed(seed, t));
        EncodedState state = uniform_initial_state(layout);
        auto amps = state.amplitudes();
        std::vector<Complex> fiber(n);
        for (std::size_t l = 0; l < layers; ++l) {
            for (std::size_t axis = 0; axis < m; ++axis) {
                // Same random pulse on every fiber of this axis.
                std::mt19937_64 pulse_rng(rng());
                const Index stride = layout.stride(axis);
                for (Index base = 0; base < layout.dim(); base += stride * n) {
                    for (Index inner = 0; inner < stride; ++inner) {
                        std::mt19937_64 local = pulse_rng;
                        for (std::size_t k = 0; k < n; ++k) fiber[k] = amps[base + inner + k * stride];
                        random_block_layer(fiber, n, local);
                        for (std::size_t k = 0; k < n; ++k) amps[base + inner + k * stride] = fiber[k];
                    }
                }
            }
            const double gamma = kTwoPi * uniform01(rng);
            for (Index x = 0; x < layout.dim(); ++x) amps[x] *= std::polar(1.0, -gamma * coupling[x]);
        }
        samples[t] = std::norm(amps[0]);
    });
    return finish_moments(samples, static_cast<double>(layout.dim()));
}

std::size_t lie_algebra_dimension(std::size_t n, const std::vector<double>& diagonal) {
    if (n < 2 || n > 6) throw std::invalid_argument("lie_algebra_dimension: n must lie in [2, 6]");
    if (diagonal.size() != n) throw std::invalid_argument("lie_algebra_dimension: diagonal has wrong length");
    const double mean = std::accumulate(diagonal.begin(), diagonal.end(), 0.0) / static_cast<double>(n);
    double spread = 0.0;
    double scale = 1.0;
    for (double d : diagonal) {
        spread = std::max(spread, std::abs(d - mean));
        scale = std::max(scale, std::abs(d));
    }
    if (spread <= 1e-12 * scale) {
        throw std::invalid_argument("lie_algebra_dimension: diagonal generator is proportional to the identity");
    }

    using CMat = Eigen::MatrixXcd;
    const auto dim = static_cast<Eigen::Index>(n);
    const Complex i_unit{0.0, 1.0};

    std::vector<CMat> basis;
    std::vector<Eigen::VectorXd> ortho;  // orthonormal real coordinates of basis

    auto to_real = [&](const CMat& a) {
        Eigen::VectorXd v(2 * dim * dim);
        for (Eigen::Index c = 0; c < dim; ++c)
            for (Eigen::Index r = 0; r < dim; ++r) {
                v[2 * (c * dim + r)] = a(r, c).real();
                v[2 * (c * dim + r) + 1] = a(r, c).imag();
            }
        return v;
    };
    auto try_add = [&](const CMat& a) {
        Eigen::VectorXd v = to_real(a);
        const double norm0 = v.norm();
        if (norm0 == 0.0) return false;
        v /= norm0;
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& q : ortho) v -= q.dot(v) * q;
        }
        const double residual = v.norm();
        if (residual <= 1e-8) return false;
        ortho.push_back(v / residual);
        basis.push_back(a / norm0);
        return true;
    };

    for (Eigen::Index r = 0; r < dim; ++r) {
        for (Eigen::Index c = r + 1; c < dim; ++c) {
            CMat g = CMat::Zero(dim, dim);
            g(r, c) = i_unit;
            g(c, r) = i_unit;
            try_add(g);
        }
    }
    CMat h = CMat::Zero(dim, dim);
    for (Eigen::Index k = 0; k < dim; ++k) h(k, k) = i_unit * (diagonal[k] - mean);
    try_add(h);

    for (std::size_t a = 0; a < basis.size(); ++a) {
        for (std::size_t b = 0; b < a; ++b) {
            CMat comm = basis[a] * basis[b] - basis[b] * basis[a];
            try_add(comm);
        }
    }
    return basis.size();
}

std::size_t entangler_schmidt_rank(const Matrix& cost_table, double gamma) {
    if (gamma == 0.0) throw std::invalid_argument("entangler_schmidt_rank: gamma must be nonzero");
    const auto rows = static_cast<Eigen::Index>(cost_table.size());
    if (rows == 0) throw std::invalid_argument("entangler_schmidt_rank: empty cost table");
    const auto cols = static_cast<Eigen::Index>(cost_table[0].size());
    Eigen::MatrixXcd m(rows, cols);
    for (Eigen::Index j = 0; j < rows; ++j) {
        if (static_cast<Eigen::Index>(cost_table[j].size()) != cols) {
            throw std::invalid_argument("entangler_schmidt_rank: ragged cost table");
        }
        for (Eigen::Index k = 0; k < cols; ++k) m(j, k) = std::polar(1.0, -gamma * cost_table[j][k]);
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto& sv = svd.singularValues();
    const double cutoff = 1e-9 * sv[0];
    std::size_t rank = 0;
    for (Eigen::Index k = 0; k < sv.size(); ++k) rank += sv[k] > cutoff ? 1 : 0;
    return rank;
}

BaselineReport classical_baselines(std::size_t n, std::size_t m, double feasible_count) {
    if (n < 1 || m < 1 || !(feasible_count > 0.0)) {
        throw std::invalid_argument("classical_baselines: inputs must be positive");
    }
    const double nd = static_cast<double>(n);
    const double md = static_cast<double>(m);
    const double bits = nd * md;

    BaselineReport r{};
    r.n = n;
    r.m = m;
    r.feasible_count = feasible_count;
    r.log10_model_a = md * std::log10(nd) - std::log10(feasible_count);
    // log10(2^N + 1) = N log10 2 + log10(1 + 2^−N).
    r.log10_model_b = bits * std::log10(2.0) + std::log10(1.0 + std::exp2(-bits)) - std::log10(feasible_count + 1.0);
    r.log10_separation = md * (nd * std::log10(2.0) - std::log10(nd));
    r.model_a_trials = std::pow(nd, md) / feasible_count;
    r.model_b_trials = (std::exp2(bits) + 1.0) / (feasible_count + 1.0);
    r.separation_ratio = std::pow(std::exp2(nd) / nd, md);
    return r;
}

HeavyOutputReport heavy_output_report(const AnchoredTsp& enc, const LayerSchedule& schedule,
                                      MixerNormalization norm, double log_inv_delta, std::optional<double> lambda) {
    const auto [p_opt, degeneracy] = exact_success_probability(enc, schedule, norm, lambda);
    const BlockLayout& layout = enc.layout();
    const double dim = static_cast<double>(layout.dim());
    const double nd = static_cast<double>(layout.n());

    HeavyOutputReport r{};
    r.p_opt = p_opt;
    r.baseline = 1.0 / dim;
    r.heavy_factor = p_opt * dim;
    r.degeneracy = degeneracy;
    for (std::size_t k = 1; k <= layout.m(); ++k) {
        // Relative slack so p = n^{-k} computed through amplitudes still counts.
        const bool hit = p_opt >= std::pow(nd, -static_cast<double>(k)) * (1.0 - 1e-12);
        r.exceeds_power.push_back(hit);
        if (hit && !r.smallest_k) r.smallest_k = k;
    }
    const double cities = static_cast<double>(enc.instance().n_cities());
    r.finite_shot_threshold = 1.0 / (10.0 * cities * cities * cities);
    r.in_finite_shot_region = p_opt >= r.finite_shot_threshold;
    r.required_shots = p_opt > 0.0 ? required_shots_log(std::min(1.0, p_opt), log_inv_delta) : 0;
    return r;
}

}  // namespace ceqaoa
