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

#include <string>
#include <vector>

namespace ceqaoa::verify {

/// One measured-vs-target row. `pass` is |measured − target| <= tolerance
/// unless the check states its own comparison.
struct Check {
    std::string suite;
    std::string name;
    double measured;
    double target;
    double tolerance;
    bool pass;
};

const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite. "all" runs every suite.
std::vector<Check> run_suite(const std::string& name);

}  // namespace ceqaoa::verify
