// Copyright 2026 The holocomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Prints infidelity versus error strength for the plain, two-pulse and
// four-pulse gates, followed by the fitted power-law exponents.
//
//   scaling_demo [theta]

#include <cstdio>
#include <cstdlib>
#include <numbers>

#include "holocomp/analysis.hpp"

using namespace holocomp;
using analysis::ErrorMode;
using analysis::GateKind;

int main(int argc, char** argv) {
    const double theta = argc > 1 ? std::atof(argv[1]) : std::numbers::pi / 4;
    const auto grid = analysis::default_epsilon_grid();

    struct Row {
        const char* label;
        GateKind kind;
        ErrorMode mode;
    };
    const Row rows[] = {
        {"single/common", GateKind::single, ErrorMode::common},
        {"composite2/common", GateKind::composite2, ErrorMode::common},
        {"composite2/differential", GateKind::composite2, ErrorMode::differential},
        {"composite4/common", GateKind::composite4, ErrorMode::common},
        {"composite4/differential", GateKind::composite4, ErrorMode::differential},
        {"composite4/single_field", GateKind::composite4, ErrorMode::single_field},
        {"twoqubit/composite", GateKind::twoqubit_composite, ErrorMode::two_qubit},
    };

    std::printf("theta = %.6f\n\n%-10s", theta, "epsilon");
    for (const auto& r : rows) std::printf(" %24s", r.label);
    std::printf("\n");

    std::vector<analysis::ScalingFit> fits;
    for (const auto& r : rows) {
        analysis::SweepSpec spec;
        spec.gate_kind = r.kind;
        spec.error_mode = r.mode;
        spec.theta = theta;
        spec.epsilons = grid;
        fits.push_back(analysis::run_sweep(spec));
    }
    for (std::size_t i = 0; i < grid.size(); ++i) {
        std::printf("%-10.3e", grid[i]);
        for (const auto& f : fits) std::printf(" %24.6e", f.samples[i].infidelity);
        std::printf("\n");
    }
    std::printf("\n%-24s %8s %10s\n", "gate/mode", "slope", "r^2");
    for (std::size_t k = 0; k < fits.size(); ++k) {
        std::printf("%-24s %8.3f %10.6f\n", rows[k].label, fits[k].slope, fits[k].r_squared);
    }
    return 0;
}
