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

// Dense complex linear algebra and time-evolution primitives.
//
// Every operator in the library is an Eigen::MatrixXcd; every state an
// Eigen::VectorXcd. All generators are Hermitian, so propagators are built
// from the Hermitian eigendecomposition rather than a general Pade/scaling
// approximant.

#include <algorithm>
#include <complex>
#include <cmath>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "holocomp/errors.hpp"

namespace holocomp {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;

inline constexpr Complex kI{0.0, 1.0};

/// Absolute Frobenius tolerance used when a call does not supply one.
inline constexpr double kDefaultTolerance = 1e-10;

/// Hermiticity tolerance for generators (scaled by max(1, ||H||_F)).
inline constexpr double kHermitianTolerance = 1e-12;

/// Largest supported Hilbert-space dimension (six two-level ions).
inline constexpr Eigen::Index kMaxDimension = 64;

inline bool is_square(const ComplexMatrix& m) { return m.rows() == m.cols() && m.rows() > 0; }

/// ||M^dagger M - I||_F <= tol.
inline bool is_unitary(const ComplexMatrix& m, double tol = kDefaultTolerance) {
    if (!is_square(m)) return false;
    const ComplexMatrix id = ComplexMatrix::Identity(m.rows(), m.cols());
    return (m.adjoint() * m - id).norm() <= tol;
}

/// ||M - M^dagger||_F <= tol.
inline bool is_hermitian(const ComplexMatrix& m, double tol = kDefaultTolerance) {
    if (!is_square(m)) return false;
    return (m - m.adjoint()).norm() <= tol;
}

inline bool is_normalized(const ComplexVector& v, double tol = kDefaultTolerance) {
    return std::abs(v.norm() - 1.0) <= tol;
}

inline ComplexVector basis_vector(Eigen::Index dim, Eigen::Index index) {
    if (index < 0 || index >= dim) throw InvalidArgument("basis_vector: index out of range");
    ComplexVector v = ComplexVector::Zero(dim);
    v(index) = 1.0;
    return v;
}

/// |a><b|
inline ComplexMatrix outer(const ComplexVector& a, const ComplexVector& b) {
    return a * b.adjoint();
}

/// |v><v|
inline ComplexMatrix projector(const ComplexVector& v) { return outer(v, v); }

/// Orthogonal projector onto span of an orthonormal family.
inline ComplexMatrix subspace_projector(std::span<const ComplexVector> basis) {
    if (basis.empty()) throw InvalidArgument("subspace_projector: empty basis");
    ComplexMatrix p = ComplexMatrix::Zero(basis.front().size(), basis.front().size());
    for (const auto& v : basis) {
        if (v.size() != p.rows()) throw InvalidArgument("subspace_projector: dimension mismatch");
        p += projector(v);
    }
    return p;
}

inline double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InvalidArgument("frobenius_distance: shape mismatch (" + std::to_string(a.rows()) + "x" +
                              std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) + "x" +
                              std::to_string(b.cols()) + ")");
    }
    return (a - b).norm();
}

namespace detail {

inline void require_generator(const ComplexMatrix& h, const char* who) {
    if (!is_square(h)) throw InvalidArgument(std::string(who) + ": generator must be square");
    if (h.rows() > kMaxDimension) {
        throw InvalidArgument(std::string(who) + ": dimension " + std::to_string(h.rows()) +
                              " exceeds cap " + std::to_string(kMaxDimension));
    }
    const double scale = std::max(1.0, h.norm());
    if (!is_hermitian(h, kHermitianTolerance * scale)) {
        throw InvalidArgument(std::string(who) + ": generator is not Hermitian");
    }
}

}  // namespace detail

/// exp(-i H t) for Hermitian H, via H = V diag(lambda) V^dagger.
inline ComplexMatrix expm_hermitian_generator(const ComplexMatrix& h, double t) {
    detail::require_generator(h, "expm_hermitian_generator");
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> eig(h);
    if (eig.info() != Eigen::Success) {
        throw std::runtime_error("expm_hermitian_generator: eigendecomposition failed");
    }
    const Eigen::VectorXd& lambda = eig.eigenvalues();
    const ComplexMatrix& v = eig.eigenvectors();
    ComplexVector phases(lambda.size());
    for (Eigen::Index k = 0; k < lambda.size(); ++k) phases(k) = std::exp(-kI * (lambda(k) * t));
    return v * phases.asDiagonal() * v.adjoint();
}

/// One piece of a piecewise-constant-direction schedule: exp(-i * area * generator).
struct GeneratorSegment {
    ComplexMatrix generator;
    double area = 0.0;
};

using Schedule = std::vector<GeneratorSegment>;

/// exp(-i A_n G_n) ... exp(-i A_1 G_1); segments are listed in time order, so
/// later segments multiply from the left. `dimension` is required only when
/// the list is empty.
inline ComplexMatrix time_ordered_product(std::span<const GeneratorSegment> segments,
                                          std::optional<Eigen::Index> dimension = std::nullopt) {
    if (segments.empty()) {
        if (!dimension || *dimension <= 0) {
            throw InvalidArgument("time_ordered_product: empty schedule needs an explicit dimension");
        }
        return ComplexMatrix::Identity(*dimension, *dimension);
    }
    const Eigen::Index dim = segments.front().generator.rows();
    if (dimension && *dimension != dim) throw InvalidArgument("time_ordered_product: dimension mismatch");
    ComplexMatrix u = ComplexMatrix::Identity(dim, dim);
    for (const auto& seg : segments) {
        if (seg.generator.rows() != dim || seg.generator.cols() != dim) {
            throw InvalidArgument("time_ordered_product: generator dimension mismatch");
        }
        u = expm_hermitian_generator(seg.generator, seg.area) * u;
    }
    return u;
}

/// Block-embed `m` into an n x n identity at the given row/column indices.
inline ComplexMatrix embed(const ComplexMatrix& m, std::span<const Eigen::Index> indices, Eigen::Index n,
                           bool identity_elsewhere = true) {
    if (m.rows() != static_cast<Eigen::Index>(indices.size()) || !is_square(m)) {
        throw InvalidArgument("embed: block size does not match index list");
    }
    ComplexMatrix out = ComplexMatrix::Zero(n, n);
    if (identity_elsewhere) out.setIdentity();
    for (std::size_t r = 0; r < indices.size(); ++r) {
        for (std::size_t c = 0; c < indices.size(); ++c) {
            out(indices[r], indices[c]) = m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
        }
    }
    return out;
}

/// Inverse of embed: pull out the block indexed by `indices`.
inline ComplexMatrix restrict_to(const ComplexMatrix& m, std::span<const Eigen::Index> indices) {
    const auto k = static_cast<Eigen::Index>(indices.size());
    ComplexMatrix out(k, k);
    for (Eigen::Index r = 0; r < k; ++r) {
        for (Eigen::Index c = 0; c < k; ++c) out(r, c) = m(indices[r], indices[c]);
    }
    return out;
}

}  // namespace holocomp
