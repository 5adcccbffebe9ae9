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

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ceqaoa/layers.hpp"
#include "ceqaoa/phqc.hpp"

namespace ceqaoa::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitNoFeasible = 2;
inline constexpr int kExitDimension = 3;

/// Output schema version written into every JSON result.
inline constexpr int kSchemaVersion = 1;

/// `n+1` (default grid), `NxN` (N points per axis over [0, π]) or
/// `list:g,b;g,b;...`.
struct GridSpec {
    enum class Kind { kDefault, kUniform, kList } kind = Kind::kDefault;
    std::size_t points = 0;
    std::vector<LayerAngles> list;

    static GridSpec parse(const std::string& text);
    std::vector<LayerAngles> expand(std::size_t n_cities) const;
};

struct RunConfig {
    std::filesystem::path instance_path;
    std::size_t start_city = 0;
    std::size_t depth = 1;
    GridSpec grid;
    std::optional<std::uint64_t> shots;  // default 10 n³
    MixerNormalization norm = MixerNormalization::kOverN;
    std::optional<double> lambda;  // default n · max distance
    std::uint64_t seed = 0;
    bool exact_euclidean = false;
    std::filesystem::path out = "ceqaoa_result.json";
    std::optional<std::filesystem::path> histogram_out;  // default: <out> with extension .hist.csv
};

/// Runs PHQC and writes the result JSON plus the per-grid-point cost
/// histogram CSV. Exit codes: 0 ok, 1 error, 2 no feasible sample, 3 over cap.
int cmd_solve(const RunConfig& config, std::ostream& log);

/// Suites: encoder, mixer, ergodicity, one_design, two_design, lie, baselines, all.
int cmd_verify(const std::string& suite, std::ostream& out);

/// Plot-ready CSV of every encoded label at one angle pair. shots == 0 emits
/// probabilities only.
int cmd_histogram(const RunConfig& config, LayerAngles angles, std::uint64_t shots, std::ostream& log);

int cmd_baselines(std::size_t n, std::size_t m, std::optional<double> feasible_count, std::ostream& out);

/// temp file + rename.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace ceqaoa::cli
