#pragma once

#include <algorithm>
#include <cmath>
#include <deque>
#include <vector>

#include "krphase/antiunitary.hpp"
#include "krphase/linalg.hpp"

namespace krphase {

/// Matrix representation of the graded "real" Clifford algebra Cliff_{a,b}:
/// a+b anticommuting, odd, selfadjoint, unitary generators, the first a of
/// which are real and the last b imaginary under the real structure
/// R(M) = U conj(M) U^dagger.
///
/// The representation size is always 2^ceil((a+b)/2). For odd a+b this is
/// the direct sum of the two simple quotients and carries an honest grading
/// operator; the Hilbert-space transfer needs that two-block structure.
///
/// Two signs are recorded rather than fixed:
///  - grading_reality: R(Gamma) = grading_reality * Gamma. For even a+b the
///    grading is forced to be (a phase times) the volume element
///    gamma_1...gamma_n, whose reality is determined by the algebra:
///    -1 exactly when a-b = 2 mod 4, +1 otherwise. No choice of basis or of
///    real structure can change this, and the transfer-to-Hilbert-space sign
///    table depends on it.
///  - real_structure_sign: U conj(U) = sign * Identity. The -1 value occurs
///    exactly for the quaternionic real forms; conjugation by R is an
///    involution on matrices in both cases.
struct CliffordRep {
    int a = 0;
    int b = 0;
    Eigen::Index dim = 0;
    std::vector<Matrix> gammas;       // gamma_1..gamma_{a+b} (from 0 when a=1 role)
    Matrix grading;                    // diagonal, tensor power of pauli_z
    AntiUnitary real_structure;        // R = Ad_{real_structure} o conj
    int grading_reality = +1;          // R(Gamma) = grading_reality * Gamma
    int real_structure_sign = +1;      // U conj(U) = real_structure_sign * I

    int num_generators() const { return a + b; }

    const Matrix& gamma(int i) const { return gammas.at(static_cast<size_t>(i)); }

    /// The real structure applied to a matrix of the representation.
    Matrix real(const Matrix& m) const { return apply_antiunitary(real_structure, m); }
};

/// Residual report of check_relations: the max Frobenius deviation per
/// invariant family.
struct RelationReport {
    double anticommutation = 0.0;  // gamma_i gamma_j + gamma_j gamma_i = 2 delta_ij
    double selfadjointness = 0.0;  // gamma_i = gamma_i^dagger
    double grading = 0.0;          // Gamma^2 = 1, Gamma = Gamma^dagger, odd generators
    double reality = 0.0;          // R signs on generators and grading, U unitary, R involutive

    double max() const {
        return std::max({anticommutation, selfadjointness, grading, reality});
    }

    bool pass(double tol = 1e-12) const { return max() < tol; }
};

namespace detail {

/// The 2p pairwise anticommuting tensor-product matrices on p qubits,
/// sigma_z^(j-1) (x) {sigma_x, sigma_y} (x) 1^(p-j). Odd positions (0-based
/// even indices) are real under plain conjugation, even positions imaginary.
inline std::vector<Matrix> jordan_wigner_chain(int p) {
    std::vector<Matrix> out;
    out.reserve(static_cast<size_t>(2 * p));
    for (int j = 0; j < p; ++j) {
        Matrix pre = Matrix::Identity(1, 1);
        for (int t = 0; t < j; ++t) pre = kron(pre, pauli_z());
        Matrix post = Matrix::Identity(1, 1);
        for (int t = j + 1; t < p; ++t) post = kron(post, pauli_id());
        out.push_back(kron(kron(pre, pauli_x()), post));
        out.push_back(kron(kron(pre, pauli_y()), post));
    }
    return out;
}

inline Matrix diagonal_parity(int p) {
    Matrix g = Matrix::Identity(1, 1);
    for (int t = 0; t < p; ++t) g = kron(g, pauli_z());
    return g;
}

} // namespace detail

/// Construct a representation of Cliff_{a,b}.
///
/// Generators are Jordan-Wigner tensor patterns assigned so that the
/// conjugation parity (+ for the first a, - for the last b) comes out right,
/// with a unitary correction folded into the real structure when the raw
/// assignment cannot realize the pattern. Entries are 0, +-1, +-i up to
/// products, so all identities hold to machine precision.
inline CliffordRep build_rep(int a, int b) {
    if (a < 0 || b < 0) throw Error("build_rep: a, b must be nonnegative");
    const int n = a + b;
    if (n == 0) throw Error("build_rep: a+b = 0 rejected (scalar algebra)");
    const int p = (n + 1) / 2;

    const std::vector<Matrix> chain = detail::jordan_wigner_chain(p);
    const Matrix gamma_op = detail::diagonal_parity(p);
    const Eigen::Index dim = Eigen::Index{1} << p;

    // Natural conjugation parity of chain[i]: + iff i even (no sigma_y factor).
    auto natural = [](int i) { return (i % 2 == 0) ? +1 : -1; };

    // For odd n there is one unused chain matrix; drop it from the last qubit
    // slot, choosing the parity that is oversupplied.
    int dropped = -1;
    if (n < 2 * p) dropped = (b > p - 1) ? 2 * p - 2 : 2 * p - 1;

    std::deque<int> reals, imags;
    for (int i = 0; i < 2 * p; ++i) {
        if (i == dropped) continue;
        (natural(i) > 0 ? reals : imags).push_back(i);
    }

    // Assign chain matrices to generator positions; record where the natural
    // parity disagrees with the required one.
    std::vector<int> assignment;
    std::vector<int> flips;
    for (int pos = 0; pos < n; ++pos) {
        const bool want_real = pos < a;
        std::deque<int>& pool = want_real ? reals : imags;
        std::deque<int>& other = want_real ? imags : reals;
        if (!pool.empty()) {
            assignment.push_back(pool.front());
            pool.pop_front();
        } else {
            assignment.push_back(other.front());
            flips.push_back(other.front());
            other.pop_front();
        }
    }

    // Conjugating the real structure by a product of two chain matrices flips
    // the parity of exactly those two and fixes the grading. A single leftover
    // flip needs an odd correction: for odd n, (unused) * (target) again fixes
    // the grading; for even n only Gamma * (target) is available and the
    // grading reality flips, which is the algebraically forced sign there.
    Matrix correction = Matrix::Identity(dim, dim);
    int grading_reality = +1;
    if (flips.size() % 2 == 1) {
        const int f0 = flips.back();
        flips.pop_back();
        if (dropped >= 0) {
            correction = correction * (chain[static_cast<size_t>(dropped)] *
                                       chain[static_cast<size_t>(f0)]);
        } else {
            correction = correction * (gamma_op * chain[static_cast<size_t>(f0)]);
            grading_reality = -1;
        }
    }
    for (size_t t = 0; t + 1 < flips.size(); t += 2) {
        correction = correction * (chain[static_cast<size_t>(flips[t])] *
                                   chain[static_cast<size_t>(flips[t + 1])]);
    }

    CliffordRep rep{a,
                    b,
                    dim,
                    {},
                    gamma_op,
                    AntiUnitary(correction),
                    grading_reality,
                    +1};
    rep.gammas.reserve(static_cast<size_t>(n));
    for (int pos = 0; pos < n; ++pos)
        rep.gammas.push_back(chain[static_cast<size_t>(assignment[pos])]);

    rep.real_structure_sign = rep.real_structure.involution_sign();
    if (rep.real_structure_sign == 0)
        throw Error("build_rep: correction is not an antiunitary (anti-)involution");
    return rep;
}

/// View the generators inside Cliff_{a, b+extra_b} (extra_b in {0,1,2}).
/// Returns a fresh representation of the larger algebra; its first a+b
/// generators satisfy the same relations (anticommutation, squares, reality
/// signs) as the input's, which is all the embedding is used for.
struct ExtendedRep {
    CliffordRep rep;
    std::vector<int> index_map;  // position of input generator i in rep.gammas
};

inline ExtendedRep extend_generators(const CliffordRep& base, int extra_b) {
    if (extra_b < 0 || extra_b > 2)
        throw Error("extend_generators: extra_b must be 0, 1, or 2");
    ExtendedRep out{extra_b == 0 ? base : build_rep(base.a, base.b + extra_b), {}};
    out.index_map.resize(static_cast<size_t>(base.num_generators()));
    for (int i = 0; i < base.num_generators(); ++i) out.index_map[static_cast<size_t>(i)] = i;
    return out;
}

/// Validate every defining relation of the representation and report the
/// worst residual per family.
inline RelationReport check_relations(const CliffordRep& rep) {
    RelationReport rpt;
    const int n = rep.num_generators();
    const Matrix id = Matrix::Identity(rep.dim, rep.dim);

    for (int i = 0; i < n; ++i) {
        const Matrix& gi = rep.gamma(i);
        for (int j = i; j < n; ++j) {
            const Matrix& gj = rep.gamma(j);
            const Matrix anti = gi * gj + gj * gi - (i == j ? 2.0 : 0.0) * id;
            rpt.anticommutation = std::max(rpt.anticommutation, anti.norm());
        }
        rpt.selfadjointness = std::max(rpt.selfadjointness, (gi - gi.adjoint()).norm());
        rpt.grading = std::max(rpt.grading, (rep.grading * gi * rep.grading + gi).norm());

        const int want = (i < rep.a) ? +1 : -1;
        rpt.reality = std::max(rpt.reality, (rep.real(gi) - double(want) * gi).norm());
    }

    rpt.grading = std::max(rpt.grading, (rep.grading * rep.grading - id).norm());
    rpt.grading = std::max(rpt.grading, (rep.grading - rep.grading.adjoint()).norm());

    rpt.reality = std::max(
        rpt.reality,
        (rep.real(rep.grading) - double(rep.grading_reality) * rep.grading).norm());
    rpt.reality = std::max(rpt.reality, rep.real_structure.unitarity_residual());
    rpt.reality = std::max(
        rpt.reality, (rep.real_structure.squared() -
                      double(rep.real_structure_sign) * id).norm());
    // R o R = id on matrices (holds for either involution sign).
    const Matrix probe = rep.num_generators() > 0 ? Matrix(rep.gamma(0) + kImag * rep.grading)
                                                  : Matrix(id);
    rpt.reality = std::max(rpt.reality, (rep.real(rep.real(probe)) - probe).norm());

    return rpt;
}

} // namespace krphase
