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

#include "ceqaoa/verify.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "ceqaoa/analysis.hpp"
#include "ceqaoa/encoded.hpp"
#include "ceqaoa/layers.hpp"
#include "ceqaoa/qubit_reference.hpp"

namespace ceqaoa::verify {

namespace {

Check within(std::string suite, std::string name, double measured, double target, double tol) {
    return {std::move(suite), std::move(name), measured, target, tol, std::abs(measured - target) <= tol};
}

Check at_least(std::string suite, std::string name, double measured, double bound) {
    return {std::move(suite), std::move(name), measured, bound, 0.0, measured >= bound};
}

void encoder_suite(std::vector<Check>& out) {
    for (std::size_t n = 2; n <= 10; ++n) {
        qubit::QubitState s(n);
        const auto gates = qubit::one_hot_block_prepare(n);
        s.apply(gates);
        Complex overlap{0.0, 0.0};
        for (std::size_t k = 0; k < n; ++k) overlap += s.amplitudes()[Index{1} << k] / std::sqrt(double(n));
        out.push_back(within("encoder", "W_" + std::to_string(n) + " fidelity", std::norm(overlap), 1.0, 1e-10));
        out.push_back(within("encoder", "W_" + std::to_string(n) + " two-qubit gates",
                             double(qubit::count_two_qubit(gates)), double(n - 1), 0.0));
    }
    const BlockLayout layout(3, 3);
    qubit::QubitState s(9);
    s.apply(qubit::multi_block_prepare(3, 3));
    const auto proj = qubit::project_to_encoded(s, layout);
    double err = 0.0;
    const EncodedState uniform = uniform_initial_state(layout);
    for (Index i = 0; i < layout.dim(); ++i) err = std::max(err, std::abs(proj.state[i] - uniform[i]));
    out.push_back(within("encoder", "n=3,m=3 encoded amplitude error", err, 0.0, 1e-10));
    out.push_back(within("encoder", "n=3,m=3 leaked mass", proj.leaked_mass, 0.0, 1e-12));

    s.apply(qubit::block_xy_mixer_gates(3, 3, 0.37));
    out.push_back(within("encoder", "leak after block XY mixer", qubit::project_to_encoded(s, layout).leaked_mass,
                         0.0, 1e-10));
}

double trotter_error(std::size_t n, double beta, std::size_t steps) {
    const BlockLayout layout(n, 1);
    qubit::QubitState s(n);
    s.apply({qubit::GateKind::kX, {0}, 0.0});
    const auto step = qubit::block_xy_mixer_gates(n, 1, beta / double(steps));
    for (std::size_t k = 0; k < steps; ++k) s.apply(step);
    const auto proj = qubit::project_to_encoded(s, layout);
    EncodedState exact = EncodedState::basis(layout, 0);
    // Pauli-level XX + YY restricts to 2·A(K_n).
    apply_mixer(exact, 2.0 * beta, MixerNormalization::kRaw);
    double err = 0.0;
    for (Index i = 0; i < layout.dim(); ++i) err += std::norm(proj.state[i] - exact[i]);
    return std::sqrt(err);
}

void mixer_suite(std::vector<Check>& out) {
    for (std::size_t n = 2; n <= 16; ++n) {
        const auto raw = mixer_spectrum(n, MixerNormalization::kRaw);
        double dev = std::abs(raw.eigenvalues[0] - double(n - 1));
        for (std::size_t k = 1; k < n; ++k) dev = std::max(dev, std::abs(raw.eigenvalues[k] + 1.0));
        out.push_back(within("mixer", "spectrum {n-1, -1 x (n-1)} n=" + std::to_string(n), dev, 0.0, 1e-9));
        out.push_back(within("mixer", "normalized gap n=" + std::to_string(n),
                             mixer_spectrum(n, MixerNormalization::kOverN).gap, 1.0, 1e-12));
    }
    for (std::size_t n = 2; n <= 8; ++n) {
        Eigen::MatrixXd a = Eigen::MatrixXd::Ones(n, n);
        a.diagonal().setZero();
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
        const double beta = 0.9;
        Eigen::VectorXcd phases = (es.eigenvalues().cast<Complex>() * Complex(0.0, -beta)).array().exp();
        Eigen::MatrixXcd u = es.eigenvectors().cast<Complex>() * phases.asDiagonal() *
                             es.eigenvectors().transpose().cast<Complex>();
        const BlockMatrix closed = mixer_block_matrix(n, beta, MixerNormalization::kRaw);
        double err = 0.0;
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) err = std::max(err, std::abs(u(r, c) - closed(r, c)));
        out.push_back(within("mixer", "closed form vs eigen exponential n=" + std::to_string(n), err, 0.0, 1e-10));
    }
    const double e8 = trotter_error(3, 0.7, 8);
    const double e16 = trotter_error(3, 0.7, 16);
    out.push_back(within("mixer", "Trotter error ratio k=8/k=16", e8 / e16, 2.0, 0.4));
}

void ergodicity_suite(std::vector<Check>& out) {
    for (std::size_t n = 2; n <= 8; ++n) {
        const Matrix quad = angle_averaged_transition(n, 4096);
        const Matrix closed = transition_closed_form(n);
        double err = 0.0;
        double row_dev = 0.0;
        double col_dev = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double rs = 0.0;
            double cs = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                err = std::max(err, std::abs(quad[i][j] - closed[i][j]));
                rs += quad[i][j];
                cs += quad[j][i];
            }
            row_dev = std::max(row_dev, std::abs(rs - 1.0));
            col_dev = std::max(col_dev, std::abs(cs - 1.0));
        }
        out.push_back(within("ergodicity", "quadrature vs closed form n=" + std::to_string(n), err, 0.0, 1e-8));
        out.push_back(within("ergodicity", "doubly stochastic n=" + std::to_string(n), std::max(row_dev, col_dev),
                             0.0, 1e-12));
    }
}

EncodedState random_state(const BlockLayout& layout, std::uint64_t seed) {
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

void one_design_suite(std::vector<Check>& out) {
    const BlockLayout small(3, 2);
    const BasisLabel target{{1, 2}};
    for (std::uint64_t s = 0; s < 3; ++s) {
        const EncodedState psi = random_state(small, 100 + s);
        const auto est = twirl_average(psi, target, Exhaustive{});
        out.push_back(within("one_design", "exhaustive |mean - 1/D| n=3,m=2 #" + std::to_string(s),
                             std::abs(est.mean - 1.0 / 9.0), 0.0, 1e-12));
        const auto good = find_good_permutation(psi, target);
        out.push_back(at_least("one_design", "best permutation overlap >= 1/D #" + std::to_string(s), good.overlap,
                               1.0 / 9.0));
    }
    const BlockLayout big(4, 3);
    const EncodedState psi = random_state(big, 7);
    const auto mc = twirl_average(psi, BasisLabel{{0, 1, 2}}, MonteCarlo{20000, 11});
    out.push_back(within("one_design", "Monte Carlo n=4,m=3 mean (3 s.e.)", mc.mean, 1.0 / 64.0, 3.0 * mc.std_error));
}

void two_design_suite(std::vector<Check>& out) {
    for (std::size_t n = 3; n <= 5; ++n) {
        const auto r = block_design_moments(n, 10 * n * n, 20000, 42 + n);
        out.push_back(within("two_design", "E[X] n=" + std::to_string(n), r.mean_overlap, r.haar_mean,
                             0.05 * r.haar_mean));
        out.push_back(within("two_design", "E[X^2] n=" + std::to_string(n), r.second_moment, r.haar_second,
                             0.10 * r.haar_second));
    }
    // No threshold is known for the global construction; report against a loose band.
    const auto g = global_design_moments(BlockLayout(3, 2), 30, 4000, 5);
    out.push_back(within("two_design", "global E[X^2] n=3,m=2 (informational)", g.second_moment, g.haar_second,
                         0.5 * g.haar_second));
}

void lie_suite(std::vector<Check>& out) {
    for (std::size_t n = 3; n <= 5; ++n) {
        std::vector<double> d(n);
        for (std::size_t k = 0; k < n; ++k) d[k] = std::sqrt(double(k) + 0.5);
        out.push_back(within("lie", "dim Lie closure n=" + std::to_string(n), double(lie_algebra_dimension(n, d)),
                             double(n * n - 1), 0.0));
    }
    out.push_back(within("lie", "additive entangler rank", double(entangler_schmidt_rank({{0, 1, 3}, {2, 3, 5}, {1, 2, 4}}, 0.8)), 1.0, 0.0));
    out.push_back(at_least("lie", "j*k entangler rank", double(entangler_schmidt_rank({{0, 0, 0}, {0, 1, 2}, {0, 2, 4}}, std::numbers::pi / 2)), 2.0));
}

void baselines_suite(std::vector<Check>& out) {
    const auto r = classical_baselines(3, 3, 6.0);
    out.push_back(within("baselines", "Model A n=3 |F|=6", r.model_a_trials, 4.5, 1e-12));
    out.push_back(within("baselines", "Model B n=3 |F|=6", r.model_b_trials, 513.0 / 7.0, 1e-9));
    for (std::size_t n = 2; n <= 12; ++n) {
        const auto b = classical_baselines(n, n, std::tgamma(double(n) + 1.0));
        const double expected = double(n) * (double(n) * std::log10(2.0) - std::log10(double(n)));
        out.push_back(within("baselines", "log10 separation n=" + std::to_string(n), b.log10_separation, expected,
                             1e-9));
    }
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"encoder",    "mixer", "ergodicity", "one_design",
                                                   "two_design", "lie",   "baselines"};
    return names;
}

std::vector<Check> run_suite(const std::string& name) {
    std::vector<Check> out;
    if (name == "all") {
        for (const auto& s : suite_names()) {
            auto part = run_suite(s);
            out.insert(out.end(), part.begin(), part.end());
        }
    } else if (name == "encoder") {
        encoder_suite(out);
    } else if (name == "mixer") {
        mixer_suite(out);
    } else if (name == "ergodicity") {
        ergodicity_suite(out);
    } else if (name == "one_design") {
        one_design_suite(out);
    } else if (name == "two_design") {
        two_design_suite(out);
    } else if (name == "lie") {
        lie_suite(out);
    } else if (name == "baselines") {
        baselines_suite(out);
    } else {
        throw std::invalid_argument("unknown verify suite '" + name + "'");
    }
    return out;
}

}  // namespace ceqaoa::verify
