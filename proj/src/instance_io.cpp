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

#include "ceqaoa/instance_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace ceqaoa {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

std::string upper(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::toupper(c); });
    return out;
}

std::size_t line_of_offset(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(offset), '\n'));
}

// Line where row `row` of the "matrix" array starts; line of the key if not found.
std::size_t matrix_row_line(std::string_view text, std::size_t row) {
    std::size_t key = text.find("\"matrix\"");
    if (key == std::string_view::npos) return 1;
    std::size_t pos = text.find('[', key);
    if (pos == std::string_view::npos) return line_of_offset(text, key);
    int depth = 0;
    std::size_t seen = 0;
    for (std::size_t i = pos; i < text.size(); ++i) {
        if (text[i] == '[') {
            ++depth;
            if (depth == 2 && seen++ == row) return line_of_offset(text, i);
        } else if (text[i] == ']') {
            if (--depth == 0) break;
        }
    }
    return line_of_offset(text, key);
}

void check_entry(double d, std::size_t i, std::size_t j, const std::string& source, std::size_t line) {
    if (!std::isfinite(d)) {
        throw ParseError(source, line, "distance C[" + std::to_string(i) + "][" + std::to_string(j) + "] is not finite");
    }
    if (d < 0.0) {
        throw ParseError(source, line,
                         "negative distance C[" + std::to_string(i) + "][" + std::to_string(j) + "] = " +
                             std::to_string(d));
    }
}

TspInstance parse_json(std::string_view text, const std::string& source) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(source, line_of_offset(text, e.byte > 0 ? e.byte - 1 : 0), e.what());
    }
    if (!doc.is_object()) throw ParseError(source, 1, "top-level JSON value must be an object");
    if (!doc.contains("matrix") || !doc["matrix"].is_array()) {
        throw ParseError(source, 1, "missing \"matrix\" array");
    }
    TspInstance inst;
    inst.name = doc.value("name", std::string("unnamed"));
    const auto& rows = doc["matrix"];
    const std::size_t n = rows.size();
    if (doc.contains("n")) {
        if (!doc["n"].is_number_integer() || doc["n"].get<long long>() != static_cast<long long>(n)) {
            throw ParseError(source, matrix_row_line(text, 0),
                             "\"n\" does not match the number of matrix rows (" + std::to_string(n) + ")");
        }
    }
    inst.distances.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t line = matrix_row_line(text, i);
        if (!rows[i].is_array() || rows[i].size() != n) {
            throw ParseError(source, line, "matrix is not square: row " + std::to_string(i) + " has " +
                                               std::to_string(rows[i].is_array() ? rows[i].size() : 0) +
                                               " entries, expected " + std::to_string(n));
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (!rows[i][j].is_number()) throw ParseError(source, line, "matrix entries must be numbers");
            const double d = rows[i][j].get<double>();
            check_entry(d, i, j, source, line);
            inst.distances[i][j] = d;
        }
        if (inst.distances[i][i] != 0.0) {
            throw ParseError(source, line, "diagonal entry C[" + std::to_string(i) + "][" + std::to_string(i) +
                                               "] must be zero");
        }
    }
    if (doc.contains("known_optimum") && doc["known_optimum"].is_number()) {
        inst.known_optimum = doc["known_optimum"].get<double>();
    }
    return inst;
}

struct Token {
    std::string text;
    std::size_t line;
};

double parse_number(const Token& tok, const std::string& source) {
    double v = 0.0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last) {
        throw ParseError(source, tok.line, "expected a number, found '" + tok.text + "'");
    }
    return v;
}

TspInstance parse_tsplib(std::string_view text, const std::string& source, const ParseOptions& options) {
    TspInstance inst;
    inst.name = source;
    std::optional<std::size_t> dimension;
    std::string weight_type;
    std::string weight_format;
    std::vector<Token> weights;
    std::vector<std::pair<double, double>> coords;
    std::size_t coord_line = 0;
    std::size_t weight_line = 0;

    enum class Section { kHeader, kCoords, kWeights, kSkip } section = Section::kHeader;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string raw;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = trim(raw);
        if (line.empty()) continue;
        if (line == "EOF") break;

        const std::size_t colon = line.find(':');
        const std::string head = upper(trim(colon == std::string_view::npos ? line : line.substr(0, colon)));
        const bool is_keyword = !head.empty() && std::isalpha(static_cast<unsigned char>(head[0]));

        if (is_keyword) {
            const std::string value(trim(colon == std::string_view::npos ? std::string_view{} : line.substr(colon + 1)));
            if (head == "NODE_COORD_SECTION") {
                section = Section::kCoords;
                coord_line = line_no;
            } else if (head == "EDGE_WEIGHT_SECTION") {
                section = Section::kWeights;
                weight_line = line_no;
            } else if (head.ends_with("_SECTION")) {
                section = Section::kSkip;
            } else {
                section = Section::kHeader;
                if (head == "NAME") {
                    inst.name = value;
                } else if (head == "DIMENSION") {
                    Token t{value, line_no};
                    const double d = parse_number(t, source);
                    if (d < 1 || d != std::floor(d)) throw ParseError(source, line_no, "invalid DIMENSION");
                    dimension = static_cast<std::size_t>(d);
                } else if (head == "EDGE_WEIGHT_TYPE") {
                    weight_type = upper(value);
                } else if (head == "EDGE_WEIGHT_FORMAT") {
                    weight_format = upper(value);
                } else if (head == "TYPE") {
                    const std::string t = upper(value);
                    if (t != "TSP" && t != "ATSP") throw ParseError(source, line_no, "unsupported TYPE " + value);
                }
            }
            continue;
        }

        std::istringstream fields{std::string(line)};
        std::string word;
        std::vector<Token> toks;
        while (fields >> word) toks.push_back({word, line_no});
        if (section == Section::kCoords) {
            if (toks.size() != 3) throw ParseError(source, line_no, "expected 'id x y' in NODE_COORD_SECTION");
            coords.emplace_back(parse_number(toks[1], source), parse_number(toks[2], source));
        } else if (section == Section::kWeights) {
            weights.insert(weights.end(), toks.begin(), toks.end());
        } else if (section == Section::kHeader) {
            throw ParseError(source, line_no, "unexpected data outside a section");
        }
    }

    if (!dimension) throw ParseError(source, line_no, "missing DIMENSION");
    const std::size_t n = *dimension;
    inst.distances.assign(n, std::vector<double>(n, 0.0));

    if (weight_type == "EUC_2D") {
        if (coords.size() != n) {
            throw ParseError(source, coord_line ? coord_line : line_no,
                             "NODE_COORD_SECTION has " + std::to_string(coords.size()) + " nodes, DIMENSION is " +
                                 std::to_string(n));
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (i == j) continue;
                const double d = std::hypot(coords[i].first - coords[j].first, coords[i].second - coords[j].second);
                inst.distances[i][j] = options.exact_euclidean ? d : std::floor(d + 0.5);
            }
        }
    } else if (weight_type == "EXPLICIT") {
        if (weight_format != "FULL_MATRIX") {
            throw ParseError(source, weight_line ? weight_line : line_no,
                             "unsupported EDGE_WEIGHT_FORMAT '" + weight_format + "' (only FULL_MATRIX)");
        }
        if (weights.size() != n * n) {
            throw ParseError(source, weights.empty() ? (weight_line ? weight_line : line_no) : weights.back().line,
                             "EDGE_WEIGHT_SECTION has " + std::to_string(weights.size()) +
                                 " entries, expected " + std::to_string(n * n) + " for a square matrix");
        }
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const Token& tok = weights[i * n + j];
                const double d = parse_number(tok, source);
                check_entry(d, i, j, source, tok.line);
                if (i == j && d != 0.0) {
                    throw ParseError(source, tok.line, "diagonal entry must be zero");
                }
                inst.distances[i][j] = d;
            }
        }
    } else {
        throw ParseError(source, line_no,
                         "unsupported EDGE_WEIGHT_TYPE '" + weight_type + "' (expected EXPLICIT or EUC_2D)");
    }
    return inst;
}

}  // namespace

TspInstance parse_instance_text(std::string_view text, const std::string& source, const ParseOptions& options) {
    std::string_view body = trim(text);
    if (body.empty()) throw ParseError(source, 1, "empty instance file");
    TspInstance inst = body.front() == '{' ? parse_json(text, source) : parse_tsplib(text, source, options);
    if (inst.n_cities() == 0) throw ParseError(source, 1, "instance has no cities");
    return inst;
}

TspInstance parse_instance(const std::filesystem::path& path, const ParseOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open instance file '" + path.string() + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    TspInstance inst = parse_instance_text(buf.str(), path.string(), options);
    if (inst.name.empty() || inst.name == path.string()) inst.name = path.stem().string();
    return inst;
}

}  // namespace ceqaoa
