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

#pragma once

// Numerical certificate that a schedule implements a nonadiabatic holonomy on
// a computational subspace S(0) = span{|phi_k(0)>}:
//   (i)  the evolved subspace returns to S(0) at the end of the schedule;
//   (ii) <phi_k(t)| H(t) |phi_l(t)> = 0 at every sampled time.
//
// Generators are supplied in units of the peak Rabi frequency, so condition
// (ii) residuals are dimensionless. Time is measured in accumulated pulse area.

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

#include "holocomp/numeric.hpp"

namespace holocomp::holonomy {

inline constexpr int kDefaultSamplesPerSegment = 128;

struct TraceSample {
    double time = 0.0;
    std::vector<ComplexVector> states;  // one per computational basis vector
};

struct EvolutionTrace {
    std::vector<ComplexMatrix> generators;       // one per segment
    std::vector<TraceSample> samples;            // samples[0] is t = 0
    std::vector<std::size_t> segment_end_index;  // index of the last sample of each segment

    std::size_t segment_count() const { return generators.size(); }
    const std::vector<ComplexVector>& initial_states() const { return samples.front().states; }
    const std::vector<ComplexVector>& final_states() const { return samples.back().states; }
};

struct HolonomyReport {
    double cond1_residual = 0.0;  // ||P(tau) - P(0)||_F
    double cond2_max = 0.0;       // max_{t,k,l} |<phi_k(t)|H(t)|phi_l(t)>| / Omega_peak
    bool passed = false;
    double tolerance = 0.0;
};

inline EvolutionTrace trace_evolution(std::span<const GeneratorSegment> schedule,
                                      std::span<const ComplexVector> subspace_basis,
                                      int samples_per_segment = kDefaultSamplesPerSegment) {
    if (schedule.empty()) throw InvalidArgument("trace_evolution: empty schedule");
    if (subspace_basis.empty()) throw InvalidArgument("trace_evolution: empty subspace basis");
    if (samples_per_segment <= 0) throw InvalidArgument("trace_evolution: samples_per_segment must be positive");

    const Eigen::Index dim = schedule.front().generator.rows();
    for (std::size_t i = 0; i < subspace_basis.size(); ++i) {
        if (subspace_basis[i].size() != dim) throw InvalidArgument("trace_evolution: basis dimension mismatch");
        for (std::size_t j = 0; j <= i; ++j) {
            const Complex overlap = subspace_basis[j].dot(subspace_basis[i]);
            const double expected = i == j ? 1.0 : 0.0;
            if (std::abs(overlap - expected) > 1e-10) {
                throw InvalidArgument("trace_evolution: subspace basis is not orthonormal");
            }
        }
    }

    EvolutionTrace trace;
    trace.samples.push_back({0.0, std::vector<ComplexVector>(subspace_basis.begin(), subspace_basis.end())});
    double time = 0.0;
    for (const auto& seg : schedule) {
        if (seg.generator.rows() != dim || seg.generator.cols() != dim) {
            throw InvalidArgument("trace_evolution: generator dimension mismatch");
        }
        if (seg.area < 0.0) throw InvalidArgument("trace_evolution: negative segment area");
        const double slice = seg.area / samples_per_segment;
        const ComplexMatrix step = expm_hermitian_generator(seg.generator, slice);
        trace.generators.push_back(seg.generator);
        for (int k = 0; k < samples_per_segment; ++k) {
            TraceSample next{time + (k + 1) * slice, trace.samples.back().states};
            for (auto& psi : next.states) psi = step * psi;
            trace.samples.push_back(std::move(next));
        }
        time += seg.area;
        trace.segment_end_index.push_back(trace.samples.size() - 1);
    }
    return trace;
}

inline ComplexMatrix sample_projector(const TraceSample& sample) { return subspace_projector(sample.states); }

inline HolonomyReport check_holonomy(const EvolutionTrace& trace, double tolerance = 1e-8) {
    if (trace.samples.empty() || trace.generators.empty()) throw InvalidArgument("check_holonomy: empty trace");
    HolonomyReport report;
    report.tolerance = tolerance;
    report.cond1_residual =
        frobenius_distance(sample_projector(trace.samples.back()), sample_projector(trace.samples.front()));

    std::size_t begin = 0;
    for (std::size_t s = 0; s < trace.generators.size(); ++s) {
        const ComplexMatrix& g = trace.generators[s];
        const std::size_t end = trace.segment_end_index[s];
        // Boundary samples are checked against both adjacent generators.
        for (std::size_t i = begin; i <= end; ++i) {
            const auto& states = trace.samples[i].states;
            for (const auto& bra : states) {
                const ComplexVector g_bra = g * bra;
                for (const auto& ket : states) {
                    report.cond2_max = std::max(report.cond2_max, std::abs(g_bra.dot(ket)));
                }
            }
        }
        begin = end;
    }
    report.passed = report.cond1_residual <= tolerance && report.cond2_max <= tolerance;
    return report;
}

/// ||P(T_1) - P(0)||_F at the boundary of a two-segment loop. A complete
/// elementary loop rotates |b> fully into |e> here, giving sqrt(2).
inline double grassmannian_midpoint_check(const EvolutionTrace& trace) {
    if (trace.segment_count() != 2) throw InvalidArgument("grassmannian_midpoint_check: trace must have two segments");
    return frobenius_distance(sample_projector(trace.samples[trace.segment_end_index[0]]),
                              sample_projector(trace.samples.front()));
}

/// Projector distance to P(0) at the end of every block of `segments_per_loop`
/// segments; zero entries mean each elementary sub-loop closes on its own.
inline std::vector<double> subloop_closure_residuals(const EvolutionTrace& trace, std::size_t segments_per_loop = 2) {
    if (segments_per_loop == 0 || trace.segment_count() % segments_per_loop != 0) {
        throw InvalidArgument("subloop_closure_residuals: segment count is not a multiple of the loop length");
    }
    const ComplexMatrix p0 = sample_projector(trace.samples.front());
    std::vector<double> out;
    for (std::size_t s = segments_per_loop - 1; s < trace.segment_count(); s += segments_per_loop) {
        out.push_back(frobenius_distance(sample_projector(trace.samples[trace.segment_end_index[s]]), p0));
    }
    return out;
}

}  // namespace holocomp::holonomy
