// Copyright 2026 The seqmeas Authors
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
#include <string>
#include <string_view>
#include <vector>

#include "seqmeas/group.hpp"

namespace seqmeas {

struct Check {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;

  bool passed() const { return residual <= tolerance; }
};

struct SuiteReport {
  std::string suite;
  std::vector<Check> checks;

  bool passed() const;
  double max_residual() const;
};

struct SuiteOptions {
  std::uint64_t seed = 42;
  std::size_t samples = 10;  // random draws per randomized check
};

/// weyl: Weyl relation, spectral reconstruction, coupling intertwiners.
/// theorem41: measure <-> covariant instrument correspondence.
/// prop42: marginals against the noise measures.
/// prop43: joint observable against the generating state.
/// corollary44: sequential implementation of a given CPSO.
/// spin: the qubit example.
const std::vector<std::string>& suite_names();

bool is_suite(std::string_view name);

/// Runs one suite on `g`, or every suite for "all". The spin suite ignores
/// `g`. Throws InvariantError for an unknown name.
std::vector<SuiteReport> run_suites(std::string_view name, const Group& g, const SuiteOptions& opts = {});

}  // namespace seqmeas
