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

#include "ceqaoa/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "ceqaoa/analysis.hpp"
#include "ceqaoa/instance_io.hpp"
#include "ceqaoa/parallel.hpp"
#include "ceqaoa/verify.hpp"
#include "json.hpp"

namespace ceqaoa::cli {

using Json = nlohmann::ordered_json;

namespace {

double parse_double(const std::string& s, const std::string& what) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != s.size() || !std::isfinite(v)) {
        throw std::invalid_argument("invalid " + what + " '" + s + "'");
    }
    return v;
}

std::string join_cities(const std::vector<std::size_t>& cities, char sep) {
    std::string out;
    for (std::size_t i = 0; i < cities.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(cities[i]);
    }
    return out;
}

std::string join_symbols(const BasisLabel& label) {
    std::string out;
    for (std::size_t i = 0; i < label.symbols.size(); ++i) {
        if (i) out += '-';
        out += std::to_string(label.symbols[i]);
    }
    return out;
}

std::filesystem::path histogram_path(const RunConfig& config) {
    if (config.histogram_out) return *config.histogram_out;
    std::filesystem::path p = config.out;
    p.replace_extension(".hist.csv");
    return p;
}

Json angles_json(LayerAngles a) { return Json{{"gamma", a.gamma}, {"beta", a.beta}}; }

struct Prepared {
    AnchoredTsp enc;
    double lambda;
};

Prepared prepare(const RunConfig& config) {
    TspInstance inst = parse_instance(config.instance_path, ParseOptions{config.exact_euclidean});
    AnchoredTsp enc = anchor(std::move(inst), config.start_city);
    const double lambda = config.lambda.value_or(default_lambda(enc.instance()));
    return {std::move(enc), lambda};
}

void check_cap(const AnchoredTsp& enc) {
    if (enc.layout().dim() > max_dim()) {
        throw DimensionError("encoded dimension D = " + std::to_string(enc.layout().dim()) +
                             " exceeds the amplitude cap " + std::to_string(max_dim()) +
                             " (set CEQAOA_MAX_DIM to raise it)");
    }
}

}  // namespace

GridSpec GridSpec::parse(const std::string& text) {
    GridSpec spec;
    if (text.empty() || text == "n+1") return spec;
    if (text.rfind("list:", 0) == 0) {
        spec.kind = Kind::kList;
        std::stringstream pairs(text.substr(5));
        std::string pair;
        while (std::getline(pairs, pair, ';')) {
            if (pair.empty()) continue;
            const auto comma = pair.find(',');
            if (comma == std::string::npos) throw std::invalid_argument("grid list entry '" + pair + "' is not g,b");
            spec.list.push_back(
                {parse_double(pair.substr(0, comma), "gamma"), parse_double(pair.substr(comma + 1), "beta")});
        }
        if (spec.list.empty()) throw std::invalid_argument("grid list is empty");
        return spec;
    }
    const auto x = text.find('x');
    if (x != std::string::npos && text.substr(0, x) == text.substr(x + 1)) {
        const double pts = parse_double(text.substr(0, x), "grid size");
        if (pts < 2 || pts != std::floor(pts)) throw std::invalid_argument("grid size must be an integer >= 2");
        spec.kind = Kind::kUniform;
        spec.points = static_cast<std::size_t>(pts);
        return spec;
    }
    throw std::invalid_argument("unrecognized grid spec '" + text + "' (use n+1, NxN or list:g,b;...)");
}

std::vector<LayerAngles> GridSpec::expand(std::size_t n_cities) const {
    if (kind == Kind::kList) return list;
    const AngleGrid grid = kind == Kind::kUniform ? uniform_grid(points) : default_grid(n_cities);
    std::vector<LayerAngles> out;
    for (std::size_t i = 0; i < grid.size(); ++i) out.push_back(grid.point(i));
    return out;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write '" + tmp.string() + "'");
        out << contents;
        if (!out.flush()) throw std::runtime_error("write failed for '" + tmp.string() + "'");
    }
    std::filesystem::rename(tmp, path);
}

int cmd_solve(const RunConfig& config, std::ostream& log) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
        if (config.depth < 1) throw std::invalid_argument("depth must be >= 1");
        Prepared prep = prepare(config);
        const AnchoredTsp& enc = prep.enc;
        check_cap(enc);

        const std::vector<LayerAngles> points = config.grid.expand(enc.instance().n_cities());
        std::vector<LayerSchedule> schedules;
        for (const auto& p : points) schedules.push_back(LayerSchedule::repeated(p.gamma, p.beta, config.depth));

        PhqcOptions opts;
        opts.depth = config.depth;
        opts.shots_per_point = config.shots.value_or(default_shots(enc.instance().n_cities()));
        opts.norm = config.norm;
        opts.lambda = prep.lambda;
        opts.master_seed = config.seed;
        const PhqcResult result = phqc_solve(enc, schedules, opts);
        const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

        Json doc;
        doc["schema"] = kSchemaVersion;
        doc["instance"] = enc.instance().name;
        doc["n_cities"] = enc.instance().n_cities();
        doc["start_city"] = enc.start_city();
        doc["depth"] = config.depth;
        doc["norm"] = std::string(to_string(config.norm));
        doc["lambda"] = prep.lambda;
        doc["shots"] = opts.shots_per_point;
        doc["seed"] = config.seed;
        doc["grid_points"] = points.size();
        if (result.best_label) {
            doc["best_tour"] = enc.tour_of(*result.best_label);
            doc["best_label"] = result.best_label->symbols;
            doc["best_cost"] = *result.best_cost;
        } else {
            doc["best_tour"] = nullptr;
            doc["best_label"] = nullptr;
            doc["best_cost"] = nullptr;
        }
        doc["best_angles"] = angles_json(result.best_angles);
        doc["p_opt_exact"] = result.p_opt_exact ? Json(*result.p_opt_exact) : Json(nullptr);
        doc["optimum_degeneracy"] = result.optimum_degeneracy ? Json(*result.optimum_degeneracy) : Json(nullptr);
        doc["feasible_fraction"] = result.feasible_fraction;
        Json table = Json::array();
        for (const auto& s : result.per_grid_stats) {
            table.push_back({{"gamma", s.angles.gamma},
                             {"beta", s.angles.beta},
                             {"feasible_fraction", s.feasible_fraction},
                             {"min_sampled_cost", s.min_sampled_cost ? Json(*s.min_sampled_cost) : Json(nullptr)}});
        }
        doc["grid_table"] = std::move(table);
        doc["metadata"] = {{"wall_time_s", wall}};
        write_file_atomic(config.out, doc.dump(2) + "\n");

        std::ostringstream csv;
        csv << std::setprecision(17) << "grid_index,gamma,beta,cost,count\n";
        for (std::size_t i = 0; i < result.per_grid_stats.size(); ++i) {
            const auto& s = result.per_grid_stats[i];
            for (const auto& [cost, count] : s.cost_histogram) {
                csv << i << ',' << s.angles.gamma << ',' << s.angles.beta << ',' << cost << ',' << count << '\n';
            }
        }
        write_file_atomic(histogram_path(config), csv.str());

        if (!result.best_label) {
            log << "no feasible sample found over " << points.size() << " grid points\n";
            return kExitNoFeasible;
        }
        log << "best cost " << *result.best_cost << " tour " << join_cities(enc.tour_of(*result.best_label), ' ')
            << " at (gamma, beta) = (" << result.best_angles.gamma << ", " << result.best_angles.beta << ")\n";
        return kExitOk;
    } catch (const DimensionError& e) {
        log << "error: " << e.what() << "\n";
        return kExitDimension;
    } catch (const std::exception& e) {
        log << "error: " << e.what() << "\n";
        return kExitError;
    }
}

int cmd_verify(const std::string& suite, std::ostream& out) {
    std::vector<verify::Check> checks;
    try {
        checks = verify::run_suite(suite);
    } catch (const std::invalid_argument& e) {
        out << "error: " << e.what() << "\n";
        return kExitError;
    }
    bool all = true;
    out << std::left << std::setw(12) << "suite" << std::setw(48) << "check" << std::setw(16) << "measured"
        << std::setw(16) << "target" << std::setw(12) << "tolerance"
        << "result\n";
    for (const auto& c : checks) {
        all = all && c.pass;
        out << std::left << std::setw(12) << c.suite << std::setw(48) << c.name << std::setw(16)
            << std::setprecision(10) << c.measured << std::setw(16) << c.target << std::setw(12)
            << std::setprecision(3) << c.tolerance << (c.pass ? "PASS" : "FAIL") << "\n";
    }
    out << (all ? "all checks passed" : "some checks FAILED") << " (" << checks.size() << " checks)\n";
    return all ? kExitOk : kExitError;
}

int cmd_histogram(const RunConfig& config, LayerAngles angles, std::uint64_t shots, std::ostream& log) {
    try {
        Prepared prep = prepare(config);
        const AnchoredTsp& enc = prep.enc;
        check_cap(enc);
        const BlockLayout& layout = enc.layout();
        const CostDiagonal diag = build_cost_diagonal(enc, prep.lambda);
        const EncodedState state =
            run_circuit(layout, diag, LayerSchedule::repeated(angles.gamma, angles.beta, config.depth), config.norm);

        std::vector<std::uint64_t> counts(layout.dim(), 0);
        if (shots > 0) {
            for (const auto& [idx, c] : sample_shots(state, shots, derive_seed(config.seed, 0)).counts) counts[idx] = c;
        }
        std::vector<bool> optimal(layout.dim(), false);
        const bool have_optimum = layout.m() <= kMaxBruteForceBlocks;
        if (have_optimum) {
            for (const auto& l : brute_force_optimum(enc).optimal_labels) optimal[label_to_index(layout, l)] = true;
        }

        std::vector<Index> order(layout.dim());
        for (Index i = 0; i < layout.dim(); ++i) order[i] = i;
        std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) {
            if (counts[a] != counts[b]) return counts[a] > counts[b];
            return std::norm(state[a]) > std::norm(state[b]);
        });

        std::ostringstream csv;
        csv << std::setprecision(17);
        csv << "# reference_1_over_D," << 1.0 / static_cast<double>(layout.dim()) << "\n";
        csv << "label,city_sequence,count,exact_probability,is_optimal\n";
        for (Index i : order) {
            const BasisLabel label = index_to_label(layout, i);
            csv << join_symbols(label) << ',' << join_cities(enc.tour_of(label), '-') << ',' << counts[i] << ','
                << std::norm(state[i]) << ',' << (have_optimum ? (optimal[i] ? "1" : "0") : "") << '\n';
        }
        write_file_atomic(config.out, csv.str());
        log << "wrote " << layout.dim() << " rows to " << config.out.string() << "\n";
        return kExitOk;
    } catch (const DimensionError& e) {
        log << "error: " << e.what() << "\n";
        return kExitDimension;
    } catch (const std::exception& e) {
        log << "error: " << e.what() << "\n";
        return kExitError;
    }
}

int cmd_baselines(std::size_t n, std::size_t m, std::optional<double> feasible_count, std::ostream& out) {
    try {
        if (!feasible_count) {
            if (n != m) throw std::invalid_argument("--feasible is required when m != n");
            feasible_count = std::tgamma(static_cast<double>(n) + 1.0);
        }
        const BaselineReport r = classical_baselines(n, m, *feasible_count);
        Json doc{{"schema", kSchemaVersion},
                 {"n", r.n},
                 {"m", r.m},
                 {"feasible_count", r.feasible_count},
                 {"model_a_trials", r.model_a_trials},
                 {"model_b_trials", r.model_b_trials},
                 {"separation_ratio", r.separation_ratio},
                 {"log10_model_a", r.log10_model_a},
                 {"log10_model_b", r.log10_model_b},
                 {"log10_separation", r.log10_separation}};
        out << doc.dump(2) << "\n";
        return kExitOk;
    } catch (const std::exception& e) {
        out << "error: " << e.what() << "\n";
        return kExitError;
    }
}

}  // namespace ceqaoa::cli
