#pragma once

#include <Eigen/Dense>
#include <complex>

#include "krphase/errors.hpp"

namespace krphase {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline const Complex kImag{0.0, 1.0};

// The three Pauli matrices and the 2x2 identity. sigma_x and sigma_z are
// real, sigma_y is imaginary; the generator construction only ever uses
// these four blocks.
inline Matrix pauli_id() { return Matrix::Identity(2, 2); }

inline Matrix pauli_x() {
    Matrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

inline Matrix pauli_y() {
    Matrix m(2, 2);
    m << 0, -kImag, kImag, 0;
    return m;
}

inline Matrix pauli_z() {
    Matrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

/// Kronecker product.
inline Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    return out;
}

/// Frobenius norm of M - N, the residual measure used throughout.
inline double residual(const Matrix& m, const Matrix& n) {
    return (m - n).norm();
}

inline double residual_from_identity(const Matrix& m) {
    return (m - Matrix::Identity(m.rows(), m.cols())).norm();
}

inline void require_square(const Matrix& m, const char* what) {
    if (m.rows() != m.cols())
        throw DimensionError(std::string(what) + ": matrix is not square");
}

inline void require_same_size(const Matrix& a, const Matrix& b, const char* what) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw DimensionError(std::string(what) + ": matrix sizes differ");
}

} // namespace krphase
