#pragma once

#include "krphase/linalg.hpp"

namespace krphase {

/// An antilinear operator v -> U * conj(v), stored through its unitary part.
///
/// Used in two roles: as the real structure r = Ad_Theta on a matrix algebra
/// (conjugation of matrices, see apply()) and as the physical symmetry
/// operators Theta of the Hilbert-space transfer. Squaring an antiunitary
/// gives the linear operator U * conj(U); when that is a scalar +-1 the
/// operator is an (anti-)involution and conjugation by it is involutive
/// either way.
struct AntiUnitary {
    Matrix unitary_part;

    explicit AntiUnitary(Matrix u) : unitary_part(std::move(u)) {
        require_square(unitary_part, "AntiUnitary");
    }

    static AntiUnitary identity(Eigen::Index dim) {
        return AntiUnitary(Matrix::Identity(dim, dim));
    }

    Eigen::Index dim() const { return unitary_part.rows(); }

    /// Action on vectors: v -> U conj(v).
    Vector operator()(const Vector& v) const {
        if (v.size() != dim())
            throw DimensionError("AntiUnitary: vector size mismatch");
        return unitary_part * v.conjugate();
    }

    /// Theta^2 as a linear operator, U * conj(U).
    Matrix squared() const { return unitary_part * unitary_part.conjugate(); }

    /// Sign s with U * conj(U) = s * Identity, or 0 if not proportional
    /// to the identity within tol.
    int involution_sign(double tol = 1e-12) const {
        const Matrix sq = squared();
        if ((sq - Matrix::Identity(dim(), dim())).norm() < tol) return +1;
        if ((sq + Matrix::Identity(dim(), dim())).norm() < tol) return -1;
        return 0;
    }

    double unitarity_residual() const {
        return residual_from_identity(unitary_part * unitary_part.adjoint());
    }
};

/// Conjugation of a matrix by an antiunitary: A M A^-1 = U conj(M) U^dagger.
inline Matrix apply_antiunitary(const AntiUnitary& a, const Matrix& m) {
    require_square(m, "apply_antiunitary");
    if (m.rows() != a.dim())
        throw DimensionError("apply_antiunitary: operator/matrix size mismatch");
    return a.unitary_part * m.conjugate() * a.unitary_part.adjoint();
}

} // namespace krphase
