#pragma once

#include <optional>
#include <string>

#include "krphase/bloch.hpp"
#include "krphase/clifford.hpp"

namespace krphase {

enum class ThetaRole { TimeReversal, ParticleHole };

/// Symmetry type of Cliff_{a,b}, determined by j = b-a+1 mod 8 alone
/// (algebras with the same j are Morita equivalent as graded real algebras).
struct SymmetryClass {
    int j = 0;
    std::optional<int> theta_sq;     // Theta^2 = +-1
    bool chiral_present = false;     // true iff a+b even
    std::optional<int> xi_theta_sq;  // (Xi Theta)^2 = +-1, chiral classes only
    ThetaRole theta_role = ThetaRole::TimeReversal;
    std::string real_subalgebra;
    std::string cartan_label;  // annotation only, from the standard tenfold table
};

inline int j_index(int a, int b) { return ((b - a + 1) % 8 + 8) % 8; }

inline SymmetryClass classify(int a, int b) {
    if (a + b < 1) throw Error("classify: a+b >= 1 required");
    SymmetryClass c;
    c.j = j_index(a, b);
    c.chiral_present = (a + b) % 2 == 0;
    switch (c.j) {
        case 0:
            c.theta_sq = +1;
            c.theta_role = ThetaRole::TimeReversal;
            c.real_subalgebra = "M_{2^k}R + M_{2^k}R";
            c.cartan_label = "AI";
            break;
        case 4:
            c.theta_sq = -1;
            c.theta_role = ThetaRole::TimeReversal;
            c.real_subalgebra = "M_{2^(k-1)}H + M_{2^(k-1)}H";
            c.cartan_label = "AII";
            break;
        case 2:
            c.theta_sq = +1;
            c.theta_role = ThetaRole::ParticleHole;
            c.real_subalgebra = "M_{2^k}C";
            c.cartan_label = "D";
            break;
        case 6:
            c.theta_sq = -1;
            c.theta_role = ThetaRole::ParticleHole;
            c.real_subalgebra = "M_{2^k}C";
            c.cartan_label = "C";
            break;
        case 1:
            c.theta_sq = +1;
            c.xi_theta_sq = +1;
            c.real_subalgebra = "M_{2^k}R";
            c.cartan_label = "BDI";
            break;
        case 7:
            c.theta_sq = +1;
            c.xi_theta_sq = -1;
            c.real_subalgebra = "M_{2^k}R";
            c.cartan_label = "CI";
            break;
        case 3:
            c.theta_sq = -1;
            c.xi_theta_sq = +1;
            c.real_subalgebra = "M_{2^(k-1)}H";
            c.cartan_label = "DIII";
            break;
        case 5:
            c.theta_sq = -1;
            c.xi_theta_sq = -1;
            c.real_subalgebra = "M_{2^(k-1)}H";
            c.cartan_label = "CII";
            break;
        default:
            break;
    }
    if (c.chiral_present) c.theta_role = ThetaRole::TimeReversal;
    return c;
}

namespace detail {

/// The normalized volume element omega = c gamma_1...gamma_n with omega^2 = 1
/// (n odd). Central; its +-1 eigenspaces are the two simple summands, and the
/// grading operator swaps them.
inline Matrix central_involution(const CliffordRep& rep) {
    Matrix w = Matrix::Identity(rep.dim, rep.dim);
    for (int i = 0; i < rep.num_generators(); ++i) w = w * rep.gamma(i);
    const Matrix sq = w * w;
    const Complex lead = sq(0, 0);
    if (std::abs(lead - 1.0) < 1e-9) return w;
    if (std::abs(lead + 1.0) < 1e-9) return Matrix(kImag * w);
    throw BlockExtractionError("central element does not square to +-1");
}

/// Orthonormal basis of the +1 eigenspace of a Hermitian involution that is a
/// signed permutation with phases (true of the tensor-product volume element
/// by construction). Exact arithmetic on the pattern, no eigensolver.
inline Matrix plus_eigenbasis(const Matrix& w) {
    const Eigen::Index n = w.rows();
    std::vector<Vector> cols;
    std::vector<bool> seen(static_cast<size_t>(n), false);
    for (Eigen::Index j = 0; j < n; ++j) {
        if (seen[static_cast<size_t>(j)]) continue;
        Eigen::Index row = -1;
        Complex lam = 0.0;
        for (Eigen::Index i = 0; i < n; ++i) {
            if (std::abs(w(i, j)) > 1e-9) {
                if (row >= 0)
                    throw BlockExtractionError("central element is not a signed permutation");
                row = i;
                lam = w(i, j);
            }
        }
        if (row < 0) throw BlockExtractionError("central element has a zero column");
        if (row < j) throw BlockExtractionError("central element is not an involution");
        if (std::abs(std::abs(lam) - 1.0) > 1e-9)
            throw BlockExtractionError("central element entry is not a phase");
        if (row == j) {
            if (lam.real() > 0) {
                Vector e = Vector::Zero(n);
                e[j] = 1.0;
                cols.push_back(std::move(e));
            }
        } else {
            seen[static_cast<size_t>(row)] = true;
            Vector e = Vector::Zero(n);
            e[j] = 1.0 / std::numbers::sqrt2;
            e[row] = lam / std::numbers::sqrt2;
            cols.push_back(std::move(e));
        }
    }
    if (cols.empty() || 2 * static_cast<Eigen::Index>(cols.size()) != n)
        throw BlockExtractionError("grading does not split the space in half");
    Matrix q(n, static_cast<Eigen::Index>(cols.size()));
    for (size_t t = 0; t < cols.size(); ++t) q.col(static_cast<Eigen::Index>(t)) = cols[t];
    return q;
}

} // namespace detail

/// The concrete symmetry operators of Cliff_{a,b} in the transferred picture.
///
/// Even a+b: the algebra is a full matrix algebra; Theta is the antiunitary
/// implementing the real involution on the whole representation space and
/// Xi = Gamma implements the grading.
///
/// Odd a+b: odd selfadjoint elements take the two-summand form (x, -x); the
/// operators live on the +1 eigenspace of the central involution. Theta
/// implements r (time-reversal case, r preserves the summands) or r o alpha
/// (particle-hole case, r swaps them); there is no Xi.
struct SymmetryOps {
    AntiUnitary theta;
    std::optional<Matrix> xi;
    ThetaRole theta_role = ThetaRole::TimeReversal;
    Matrix block_basis;  // isometry onto the block space (identity if even a+b)
};

inline SymmetryOps build_symmetry_ops(const CliffordRep& rep) {
    const int n = rep.num_generators();
    if (n % 2 == 0) {
        const ThetaRole role = ThetaRole::TimeReversal;
        return SymmetryOps{rep.real_structure, rep.grading, role,
                           Matrix::Identity(rep.dim, rep.dim)};
    }
    const Matrix w = detail::central_involution(rep);
    const Matrix rw = rep.real(w);
    ThetaRole role;
    Matrix theta_full;
    if ((rw - w).norm() < 1e-9) {
        role = ThetaRole::TimeReversal;
        theta_full = rep.real_structure.unitary_part;
    } else if ((rw + w).norm() < 1e-9) {
        role = ThetaRole::ParticleHole;
        theta_full = rep.grading * rep.real_structure.unitary_part;
    } else {
        throw BlockExtractionError("real structure does not permute the two summands");
    }
    const Matrix q = detail::plus_eigenbasis(w);
    // Antiunitary restricted to the block: v -> Q^dagger U conj(Q v).
    const Matrix u_block = q.adjoint() * theta_full * q.conjugate();
    return SymmetryOps{AntiUnitary(u_block), std::nullopt, role, q};
}

inline SymmetryOps build_symmetry_ops(int a, int b) {
    return build_symmetry_ops(build_rep(a, b));
}

/// The k-dependent transferred Hamiltonian with its symmetries: x(k) is the
/// half-size block for odd generator count and the full matrix otherwise,
/// and Theta x(k) Theta^-1 = +-x(-k) with + for time-reversal, - for
/// particle-hole; when present, Xi x(k) Xi = -x(k).
struct HilbertTransfer {
    ModelSpec spec;
    SymmetryOps ops;

    Matrix block(const TorusPoint& pt) const {
        const Matrix h = hamiltonian(spec, pt);
        return ops.block_basis.adjoint() * h * ops.block_basis;
    }
};

inline HilbertTransfer to_hilbert(const ModelSpec& spec) {
    require_gap_open(spec);
    SymmetryOps ops = build_symmetry_ops(spec.rep);
    return HilbertTransfer{spec, std::move(ops)};
}

} // namespace krphase
