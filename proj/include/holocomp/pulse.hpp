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

#include <cmath>
#include <numbers>
#include <string>
#include <string_view>

#include "holocomp/numeric.hpp"

namespace holocomp {

/// Shape of the Rabi envelope Omega(t) within one segment.
enum class Envelope { square, sine_squared };

inline std::string_view to_string(Envelope e) {
    return e == Envelope::square ? "square" : "sine_squared";
}

inline Envelope parse_envelope(std::string_view name) {
    if (name == "square") return Envelope::square;
    if (name == "sine_squared") return Envelope::sine_squared;
    throw InvalidArgument("unknown envelope '" + std::string(name) + "'");
}

/// Fraction of a segment's pulse area accumulated by normalized time s in [0, 1].
/// sine_squared: Omega(t) ~ sin^2(pi t / T), whose running integral is s - sin(2 pi s) / (2 pi).
inline double envelope_area_fraction(Envelope e, double s) {
    if (e == Envelope::square) return s;
    return s - std::sin(2.0 * std::numbers::pi * s) / (2.0 * std::numbers::pi);
}

/// One drive segment of constant generator direction.
struct PulseSegment {
    double area = std::numbers::pi / 2;  // target integral of Omega(t) dt
    double phi0 = 0.0;                   // laser phase of the |0> field
    Envelope envelope = Envelope::square;
    int steps = 16;                      // time slices used to integrate the envelope
};

inline void validate(const PulseSegment& seg) {
    if (!(seg.area > 0.0)) throw InvalidArgument("PulseSegment: area must be positive");
    if (seg.steps <= 0) throw InvalidArgument("PulseSegment: steps must be positive");
}

/// Split a segment into equal-time slices; slice k carries the envelope area
/// accumulated over [k/steps, (k+1)/steps]. `generator` is the unit-Rabi
/// Hamiltonian and `area_scale` multiplies the envelope (1 + eps for errors).
inline Schedule slice_segment(const ComplexMatrix& generator, const PulseSegment& seg, double area_scale = 1.0) {
    validate(seg);
    Schedule out;
    out.reserve(static_cast<std::size_t>(seg.steps));
    double previous = 0.0;
    for (int k = 1; k <= seg.steps; ++k) {
        const double s = static_cast<double>(k) / seg.steps;
        const double current = envelope_area_fraction(seg.envelope, s);
        out.push_back({generator, area_scale * seg.area * (current - previous)});
        previous = current;
    }
    return out;
}

/// Propagator of one segment, integrated slice by slice over its envelope.
inline ComplexMatrix evolve_segment(const ComplexMatrix& generator, const PulseSegment& seg,
                                    double area_scale = 1.0) {
    const Schedule slices = slice_segment(generator, seg, area_scale);
    return time_ordered_product(slices);
}

}  // namespace holocomp
