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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ceqaoa/hamiltonian.hpp"

namespace ceqaoa {

class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string& source, std::size_t line, const std::string& what)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

   private:
    std::size_t line_;
};

struct ParseOptions {
    /// EUC_2D distances as exact reals instead of TSPLIB nearest-integer rounding.
    bool exact_euclidean = false;
};

/// Accepts JSON {"name", "n", "matrix", ["known_optimum"]} or the TSPLIB
/// subset EXPLICIT/FULL_MATRIX and EUC_2D/NODE_COORD_SECTION.
TspInstance parse_instance(const std::filesystem::path& path, const ParseOptions& options = {});

/// `source` names the text in error messages.
TspInstance parse_instance_text(std::string_view text, const std::string& source,
                                const ParseOptions& options = {});

}  // namespace ceqaoa
