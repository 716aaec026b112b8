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

// Decoherence-free-subspace encodings for ions under collective dephasing.
//
// Basis states of an n-ion register are bitstrings with ion 1 as the most
// significant bit, so |100> is index 4 of the 8-dimensional three-ion space.
// Collective dephasing exp(-i phi sum_i sigma_z^(i) / 2) acts on a bitstring
// of Hamming weight w as the phase exp(-i phi (n - 2w) / 2); every encoding
// here uses a single weight, so the noise is a global phase on it.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "holocomp/numeric.hpp"
#include "holocomp/pulse.hpp"
#include "holocomp/qutrit.hpp"

namespace holocomp::dfs {

struct IonRegister {
    int n_ions = 3;

    Eigen::Index dim() const { return Eigen::Index{1} << n_ions; }

    Eigen::Index index_of(std::string_view bits) const {
        if (static_cast<int>(bits.size()) != n_ions) {
            throw InvalidArgument("bitstring '" + std::string(bits) + "' does not match register size");
        }
        Eigen::Index idx = 0;
        for (char b : bits) {
            if (b != '0' && b != '1') throw InvalidArgument("bitstring must contain only 0/1");
            idx = (idx << 1) | (b == '1' ? 1 : 0);
        }
        return idx;
    }

    ComplexVector basis_state(std::string_view bits) const { return basis_vector(dim(), index_of(bits)); }
};

inline int hamming_weight(Eigen::Index index) {
    int w = 0;
    for (auto v = static_cast<std::uint64_t>(index); v != 0; v >>= 1) w += static_cast<int>(v & 1U);
    return w;
}

enum class EncodingKind { single_logical, two_logical };

/// Logical labels mapped onto register bitstrings.
struct DfsEncoding {
    EncodingKind kind = EncodingKind::single_logical;
    IonRegister reg;
    std::vector<std::pair<std::string, std::string>> labels;  // logical name -> bitstring

    /// S1 = span{|100>, |001>, |010>} with 0_L, 1_L, a_L.
    static DfsEncoding single_logical() {
        return {EncodingKind::single_logical, IonRegister{3}, {{"0", "100"}, {"1", "001"}, {"a", "010"}}};
    }

    /// S2: each logical qubit uses the S1 dictionary on ions 1-3 and 4-6,
    /// plus the two ancillae a1 = |101000>, a2 = |000101>.
    static DfsEncoding two_logical() {
        return {EncodingKind::two_logical,
                IonRegister{6},
                {{"00", "100100"},
                 {"01", "100001"},
                 {"10", "001100"},
                 {"11", "001001"},
                 {"a1", "101000"},
                 {"a2", "000101"}}};
    }

    Eigen::Index index(std::string_view logical) const {
        for (const auto& [name, bits] : labels) {
            if (name == logical) return reg.index_of(bits);
        }
        throw InvalidArgument("unknown logical label '" + std::string(logical) + "'");
    }

    std::vector<Eigen::Index> indices() const {
        std::vector<Eigen::Index> out;
        for (const auto& [name, bits] : labels) out.push_back(reg.index_of(bits));
        return out;
    }

    std::vector<ComplexVector> basis() const {
        std::vector<ComplexVector> out;
        for (const auto& [name, bits] : labels) out.push_back(reg.basis_state(bits));
        return out;
    }
};

inline std::string_view to_string(EncodingKind k) { return k == EncodingKind::single_logical ? "s1" : "s2"; }

inline DfsEncoding encoding_by_name(std::string_view name) {
    if (name == "s1") return DfsEncoding::single_logical();
    if (name == "s2") return DfsEncoding::two_logical();
    throw InvalidArgument("unknown encoding '" + std::string(name) + "' (expected s1 or s2)");
}

/// Diagonal of sum_i sigma_z^(i) with sigma_z|0> = +|0>: entry n - 2 w.
inline Eigen::VectorXd collective_sz_diagonal(const IonRegister& reg) {
    Eigen::VectorXd d(reg.dim());
    for (Eigen::Index i = 0; i < reg.dim(); ++i) d(i) = reg.n_ions - 2.0 * hamming_weight(i);
    return d;
}

inline bool dfs_membership_check(const ComplexVector& v, const DfsEncoding& encoding, double tol = 1e-10) {
    if (v.size() != encoding.reg.dim()) throw InvalidArgument("dfs_membership_check: dimension mismatch");
    ComplexVector residual = v;
    for (Eigen::Index i : encoding.indices()) residual(i) = 0.0;
    return residual.norm() <= tol;
}

/// (eta^2/delta) (|Omega12|^2 e^{i phi12} |a><0| - |Omega23|^2 e^{i phi23} |a><1| + h.c.) on three ions.
inline ComplexMatrix h1_effective(double omega12_sq, double omega23_sq, double phi12, double phi23,
                                  double coupling_prefactor = 1.0) {
    if (!(coupling_prefactor > 0.0)) throw InvalidArgument("h1_effective: coupling prefactor must be positive");
    const auto enc = DfsEncoding::single_logical();
    const Eigen::Index zero = enc.index("0"), one = enc.index("1"), anc = enc.index("a");
    ComplexMatrix h = ComplexMatrix::Zero(enc.reg.dim(), enc.reg.dim());
    h(anc, zero) = coupling_prefactor * std::polar(omega12_sq, phi12);
    h(anc, one) = -coupling_prefactor * std::polar(omega23_sq, phi23);
    return h + h.adjoint().eval();
}

/// (eta^2/delta) [|Omega34|^2 e^{i phi34} (|a1><00| + |a2><11|)
///              - |Omega36|^2 e^{i phi36} (|a1><01| + |a2><10|) + h.c.] on six ions.
inline ComplexMatrix h2_effective(double omega34_sq, double omega36_sq, double phi34, double phi36,
                                  double coupling_prefactor = 1.0) {
    if (!(coupling_prefactor > 0.0)) throw InvalidArgument("h2_effective: coupling prefactor must be positive");
    const auto enc = DfsEncoding::two_logical();
    const Complex c34 = coupling_prefactor * std::polar(omega34_sq, phi34);
    const Complex c36 = -coupling_prefactor * std::polar(omega36_sq, phi36);
    ComplexMatrix h = ComplexMatrix::Zero(enc.reg.dim(), enc.reg.dim());
    h(enc.index("a1"), enc.index("00")) = c34;
    h(enc.index("a2"), enc.index("11")) = c34;
    h(enc.index("a1"), enc.index("01")) = c36;
    h(enc.index("a2"), enc.index("10")) = c36;
    return h + h.adjoint().eval();
}

/// Laser settings that make the effective three-level block equal the
/// one-qubit drive Omega (e^{i phi0}|b_{theta,phi}><e| + h.c.) under
/// (0, 1, e) -> (0_L, 1_L, a_L). Per-field errors scale the two squared
/// Rabi amplitudes independently.
struct EffectiveDrive {
    double omega_a_sq = 0.0;  // |Omega12|^2 (or |Omega34|^2)
    double omega_b_sq = 0.0;  // |Omega23|^2 (or |Omega36|^2)
    double phase_a = 0.0;     // phi12 (or phi34)
    double phase_b = 0.0;     // phi23 (or phi36)
};

inline EffectiveDrive drive_for(double theta, double phi, double phi0, double omega, double coupling_prefactor,
                                const qutrit::ErrorModel& model = {}) {
    EffectiveDrive d;
    d.omega_a_sq = (1.0 + model.eps0) * omega * std::cos(theta / 2) / coupling_prefactor;
    d.omega_b_sq = (1.0 + model.eps1) * omega * std::sin(theta / 2) / coupling_prefactor;
    d.phase_a = -phi0;
    d.phase_b = -(phi0 + phi + std::numbers::pi);
    return d;
}

/// A drive segment of the logical schedule: unit-Rabi generator plus its pulse.
struct LogicalSegment {
    ComplexMatrix generator;
    PulseSegment pulse;
};

namespace detail {

inline std::vector<LogicalSegment> composite_four_segments(EncodingKind kind, double theta, double phi,
                                                           const std::optional<qutrit::ErrorModel>& model,
                                                           const qutrit::SegmentPair& segments,
                                                           double coupling_prefactor) {
    const qutrit::ErrorModel m = model.value_or(qutrit::ErrorModel{});
    qutrit::validate(m);
    std::vector<LogicalSegment> out;
    const double mirrored = std::numbers::pi - theta;
    for (double angle : {mirrored, mirrored, theta, theta}) {
        for (const auto& seg : segments) {
            const auto d = drive_for(angle, phi, seg.phi0, 1.0, coupling_prefactor, m);
            ComplexMatrix g = kind == EncodingKind::single_logical
                                  ? h1_effective(d.omega_a_sq, d.omega_b_sq, d.phase_a, d.phase_b, coupling_prefactor)
                                  : h2_effective(d.omega_a_sq, d.omega_b_sq, d.phase_a, d.phase_b, coupling_prefactor);
            out.push_back({std::move(g), seg});
        }
    }
    return out;
}

inline ComplexMatrix run(const std::vector<LogicalSegment>& segs, Eigen::Index dim) {
    ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
    for (const auto& s : segs) u = evolve_segment(s.generator, s.pulse) * u;
    return u;
}

}  // namespace detail

/// Drive segments (time order) of the four-pulse composite gate on the encoding.
inline std::vector<LogicalSegment> logical_composite_segments(const DfsEncoding& encoding, double theta, double phi,
                                                              const std::optional<qutrit::ErrorModel>& model,
                                                              const qutrit::SegmentPair& segments =
                                                                  qutrit::default_segments(),
                                                              double coupling_prefactor = 1.0) {
    return detail::composite_four_segments(encoding.kind, theta, phi, model, segments, coupling_prefactor);
}

/// Four-pulse composite gate on S1, returned as the full 8x8 register unitary.
inline ComplexMatrix logical_composite_gate(const DfsEncoding& encoding, double theta, double phi,
                                            const std::optional<qutrit::ErrorModel>& model = std::nullopt,
                                            const qutrit::SegmentPair& segments = qutrit::default_segments(),
                                            double coupling_prefactor = 1.0) {
    if (encoding.kind != EncodingKind::single_logical || encoding.reg.n_ions != 3) {
        throw InvalidArgument("logical_composite_gate: requires the three-ion S1 encoding");
    }
    return detail::run(logical_composite_segments(encoding, theta, phi, model, segments, coupling_prefactor),
                       encoding.reg.dim());
}

/// Four-pulse composite schedule driven through H2 on S2 (64x64). Each
/// three-level block {00,01,a1} and {11,10,a2} undergoes the one-qubit
/// composite gate, giving the logical action
///   |0><0| (x) R + |1><1| (x) X R X,   R = exp[i (pi - 2 theta) sigma_{phi + pi/2}]
/// which entangles unless pi - 2 theta is a multiple of pi/2.
inline ComplexMatrix logical_two_qubit_composite(const DfsEncoding& encoding, double theta, double phi,
                                                 const std::optional<qutrit::ErrorModel>& model = std::nullopt,
                                                 const qutrit::SegmentPair& segments = qutrit::default_segments(),
                                                 double coupling_prefactor = 1.0) {
    if (encoding.kind != EncodingKind::two_logical || encoding.reg.n_ions != 6) {
        throw InvalidArgument("logical_two_qubit_composite: requires the six-ion S2 encoding");
    }
    return detail::run(logical_composite_segments(encoding, theta, phi, model, segments, coupling_prefactor),
                       encoding.reg.dim());
}

/// Restriction of a register operator to the encoded labels, in encoding order.
inline ComplexMatrix restrict_to_encoding(const ComplexMatrix& u, const DfsEncoding& encoding,
                                          std::initializer_list<std::string_view> order) {
    std::vector<Eigen::Index> idx;
    for (auto name : order) idx.push_back(encoding.index(name));
    return restrict_to(u, idx);
}

enum class KickDistribution { uniform, gaussian };

inline std::string_view to_string(KickDistribution d) { return d == KickDistribution::uniform ? "uniform" : "gaussian"; }

inline KickDistribution parse_kick_distribution(std::string_view s) {
    if (s == "uniform") return KickDistribution::uniform;
    if (s == "gaussian") return KickDistribution::gaussian;
    throw InvalidArgument("unknown kick distribution '" + std::string(s) + "'");
}

/// Random collective phase kicks: uniform on [-kappa, kappa] or Gaussian with std kappa.
struct DephasingChannel {
    KickDistribution distribution = KickDistribution::uniform;
    double kappa = 0.0;
    int n_samples = 1000;
    std::uint64_t seed = 1;
};

/// The gate whose output state is compared with and without kicks.
struct LogicalGateRequest {
    double theta = std::numbers::pi / 4;
    double phi = 0.0;
    std::optional<qutrit::ErrorModel> model;
    qutrit::SegmentPair segments = qutrit::default_segments();
};

struct DephasingResult {
    double mean_fidelity = 1.0;
    double std_error = 0.0;
    double min_fidelity = 1.0;
    int kicks_per_realization = 0;
    std::vector<double> fidelities;  // one per realization
};

/// Kicks are applied after every drive segment, the last one at the end of
/// the schedule. Fidelity is |<psi_free|psi_kicked>|^2 per realization,
/// with both states renormalized to strip accumulated roundoff.
inline DephasingResult apply_collective_dephasing_unchecked(const DephasingChannel& channel,
                                                            const DfsEncoding& encoding, const ComplexVector& psi0,
                                                            const LogicalGateRequest& gate) {
    if (channel.kappa < 0.0) throw InvalidArgument("DephasingChannel: kappa must be non-negative");
    if (channel.n_samples <= 0) throw InvalidArgument("DephasingChannel: n_samples must be positive");
    if (psi0.size() != encoding.reg.dim()) throw InvalidArgument("collective dephasing: state dimension mismatch");
    if (!is_normalized(psi0, 1e-9)) throw InvalidArgument("collective dephasing: state must be normalized");

    const auto segs = logical_composite_segments(encoding, gate.theta, gate.phi, gate.model, gate.segments);
    std::vector<ComplexMatrix> props;
    props.reserve(segs.size());
    for (const auto& s : segs) props.push_back(evolve_segment(s.generator, s.pulse));

    ComplexVector reference = psi0;
    for (const auto& p : props) reference = p * reference;

    const Eigen::VectorXd sz = collective_sz_diagonal(encoding.reg);
    std::mt19937_64 rng(channel.seed);
    std::uniform_real_distribution<double> uniform(-channel.kappa, channel.kappa);
    std::normal_distribution<double> gaussian(0.0, channel.kappa > 0.0 ? channel.kappa : 1.0);
    auto draw = [&]() -> double {
        if (channel.kappa == 0.0) return 0.0;
        return channel.distribution == KickDistribution::uniform ? uniform(rng) : gaussian(rng);
    };

    DephasingResult result;
    result.kicks_per_realization = static_cast<int>(props.size());
    result.fidelities.reserve(static_cast<std::size_t>(channel.n_samples));
    for (int r = 0; r < channel.n_samples; ++r) {
        ComplexVector psi = psi0;
        for (const auto& p : props) {
            psi = p * psi;
            const double kick = draw();
            for (Eigen::Index i = 0; i < psi.size(); ++i) psi(i) *= std::polar(1.0, -kick * sz(i) / 2.0);
        }
        result.fidelities.push_back(std::norm(reference.dot(psi)) / (reference.squaredNorm() * psi.squaredNorm()));
    }

    double sum = 0.0;
    for (double f : result.fidelities) sum += f;
    const double n = static_cast<double>(result.fidelities.size());
    result.mean_fidelity = sum / n;
    double var = 0.0;
    for (double f : result.fidelities) {
        var += (f - result.mean_fidelity) * (f - result.mean_fidelity);
        result.min_fidelity = std::min(result.min_fidelity, f);
    }
    result.std_error = result.fidelities.size() > 1 ? std::sqrt(var / (n - 1.0) / n) : 0.0;
    return result;
}

/// As above, but psi0 must lie in the encoded subspace.
inline DephasingResult apply_collective_dephasing(const DephasingChannel& channel, const DfsEncoding& encoding,
                                                  const ComplexVector& psi0, const LogicalGateRequest& gate) {
    if (psi0.size() != encoding.reg.dim() || !dfs_membership_check(psi0, encoding, 1e-10)) {
        throw InvalidArgument("apply_collective_dephasing: initial state is outside the decoherence-free subspace");
    }
    return apply_collective_dephasing_unchecked(channel, encoding, psi0, gate);
}

/// Equal superposition of the all-zero state and the first encoded label, e.g.
/// (|000> + |100>)/sqrt(2); its two components differ in Hamming weight.
inline ComplexVector contrast_state(const DfsEncoding& encoding) {
    ComplexVector v = ComplexVector::Zero(encoding.reg.dim());
    v(0) = 1.0 / std::sqrt(2.0);
    v(encoding.indices().front()) = 1.0 / std::sqrt(2.0);
    return v;
}

/// Hamming-weight gap between the two components of contrast_state.
inline int contrast_weight_gap(const DfsEncoding& encoding) { return hamming_weight(encoding.indices().front()); }

/// E[cos(g phi)] for a single kick phi.
inline double kick_characteristic(KickDistribution dist, double kappa, int weight_gap) {
    const double x = weight_gap * kappa;
    if (dist == KickDistribution::gaussian) return std::exp(-x * x / 2.0);
    return x == 0.0 ? 1.0 : std::sin(x) / x;
}

/// Expected fidelity of an equal two-component superposition whose components
/// differ in Hamming weight by `weight_gap`, after `n_kicks` independent kicks
/// that commute with the gate: (1 + E[cos(g phi)]^K) / 2.
inline double closed_form_kick_average(KickDistribution dist, double kappa, int n_kicks, int weight_gap = 1) {
    return 0.5 * (1.0 + std::pow(kick_characteristic(dist, kappa, weight_gap), n_kicks));
}

}  // namespace holocomp::dfs
