#pragma once

#include <cmath>
#include <numbers>

#include "krphase/bloch.hpp"
#include "krphase/parallel.hpp"

namespace krphase {

constexpr double kDegreeResidualTol = 0.15;

/// Outcome of the numerical mapping-degree integration.
struct DegreeResult {
    double raw = 0.0;    // integral value before rounding
    int rounded = 0;
    double residual = 0.0;  // |raw - rounded|
    int grid_n = 0;
    bool conclusive = false;  // residual < 0.15
};

/// Surface volume of the unit d-sphere, 2 pi^((d+1)/2) / Gamma((d+1)/2).
inline double sphere_volume(int d) {
    return 2.0 * std::pow(std::numbers::pi, (d + 1) / 2.0) / std::tgamma((d + 1) / 2.0);
}

/// Mapping degree of phi_m: T^d -> S^d by Riemann integration of the pulled
/// back volume form, deg = (1/Vol S^d) int det[d_1 phi, ..., d_d phi, phi] dk.
/// Derivatives are analytic (quotient rule on the trigonometric phi~), so
/// the only error is the Riemann sum itself. The column order puts the
/// position vector last; this makes the d=1 value coincide with the winding
/// of q(k) = (m + cos k) - i sin k.
///
/// Requires the full-axes model with extra_b = 0, gap open, d <= 4.
inline DegreeResult degree_numeric(const ModelSpec& spec, int grid_n) {
    if (spec.num_axes() != spec.d || spec.extra_b != 0)
        throw Error("degree_numeric: requires axes = {1..d} and extra_b = 0");
    if (spec.d > 4) throw Error("degree_numeric: d <= 4 only");
    if (grid_n < 32) throw Error("degree_numeric: grid_n >= 32 required");
    require_gap_open(spec);

    const int d = spec.d;
    const double step = 2.0 * std::numbers::pi / grid_n;
    const double m = spec.m;

    long cells_per_row = 1;
    for (int t = 0; t < d - 1; ++t) cells_per_row *= grid_n;

    auto row_sum = [&](long row) -> double {
        Eigen::MatrixXd cols(d + 1, d + 1);
        double acc = 0.0;
        std::vector<double> k(static_cast<size_t>(d));
        for (long cell = 0; cell < cells_per_row; ++cell) {
            long rem = cell;
            k[0] = row * step;
            for (int t = 1; t < d; ++t) {
                k[static_cast<size_t>(t)] = (rem % grid_n) * step;
                rem /= grid_n;
            }
            Eigen::VectorXd pt(d + 1);
            double x0 = m;
            for (int j = 0; j < d; ++j) {
                x0 += std::cos(k[static_cast<size_t>(j)]);
                pt[j + 1] = std::sin(k[static_cast<size_t>(j)]);
            }
            pt[0] = x0;
            const double nrm = pt.norm();
            const Eigen::VectorXd ph = pt / nrm;
            for (int j = 0; j < d; ++j) {
                Eigen::VectorXd dpt = Eigen::VectorXd::Zero(d + 1);
                dpt[0] = -std::sin(k[static_cast<size_t>(j)]);
                dpt[j + 1] = std::cos(k[static_cast<size_t>(j)]);
                cols.col(j) = dpt / nrm - pt * (pt.dot(dpt)) / (nrm * nrm * nrm);
            }
            cols.col(d) = ph;
            acc += cols.determinant();
        }
        return acc;
    };

    const double total = blocked_sum(grid_n, row_sum);
    const double cell = std::pow(step, d);
    DegreeResult out;
    out.raw = total * cell / sphere_volume(d);
    out.rounded = static_cast<int>(std::lround(out.raw));
    out.residual = std::abs(out.raw - out.rounded);
    out.grid_n = grid_n;
    out.conclusive = out.residual < kDegreeResidualTol;
    return out;
}

/// degree_numeric with mandatory grid refinement: doubles grid_n until the
/// rounding residual is conclusive (or the refinement budget runs out).
inline DegreeResult degree_with_refinement(const ModelSpec& spec, int grid_n,
                                           int max_doublings = 3) {
    DegreeResult res = degree_numeric(spec, grid_n);
    for (int t = 0; t < max_doublings && !res.conclusive; ++t)
        res = degree_numeric(spec, res.grid_n * 2);
    return res;
}

/// d=1 winding of q(k) = (m + cos k) - i sin k: accumulated phase change
/// over [0, 2pi] divided by 2pi.
inline int winding_d1(double m, int grid_n) {
    if (std::abs(std::abs(m) - 1.0) < kClosingMassTol)
        throw GapClosedError("winding_d1: |m| = 1 closes the gap");
    if (grid_n < 8) throw Error("winding_d1: grid_n >= 8 required");
    const double step = 2.0 * std::numbers::pi / grid_n;
    double total = 0.0;
    double prev = std::arg(Complex(m + 1.0, 0.0));
    for (int t = 1; t <= grid_n; ++t) {
        const double k = t * step;
        const double cur = std::arg(Complex(m + std::cos(k), -std::sin(k)));
        double delta = cur - prev;
        while (delta > std::numbers::pi) delta -= 2.0 * std::numbers::pi;
        while (delta < -std::numbers::pi) delta += 2.0 * std::numbers::pi;
        total += delta;
        prev = cur;
    }
    return static_cast<int>(std::lround(total / (2.0 * std::numbers::pi)));
}

/// Minimum spectral gap along the straight mass path from m_from to m_to
/// (full-axes model). A strictly positive result certifies that the
/// flattened family is a norm-continuous homotopy; zero is a valid output
/// meaning a closing was crossed.
inline double homotopy_gap_scan(int d, double m_from, double m_to, int steps,
                                int grid_n = 32) {
    if (steps < 2) throw Error("homotopy_gap_scan: steps >= 2 required");
    double min_gap = std::numeric_limits<double>::infinity();
    for (int s = 0; s < steps; ++s) {
        const double m = m_from + (m_to - m_from) * s / (steps - 1);
        ModelSpec spec = make_model_spec(d, m);
        min_gap = std::min(min_gap, gap(spec, grid_n));
    }
    return min_gap;
}

/// Z/2 detector for odd, selfadjoint, real unitaries in M_n(Cliff_{1,1}):
/// in the basis sorting the grading to diag(+1...,-1...), such a matrix is
/// antidiagonal with an orthogonal off-diagonal block U, and the class is
/// (1 - sign det U)/2. Requires the plain-conjugation real structure that
/// build_rep(1,1) guarantees.
inline int determinant_detector(const Matrix& m, const CliffordRep& rep) {
    require_square(m, "determinant_detector");
    if (rep.a != 1 || rep.b != 1)
        throw Error("determinant_detector: rep must be Cliff_{1,1}");
    if (m.rows() % rep.dim != 0)
        throw DimensionError("determinant_detector: size not a multiple of the block size");
    const Eigen::Index blocks = m.rows() / rep.dim;
    const Matrix grading = kron(Matrix::Identity(blocks, blocks), rep.grading);

    const double tol = 1e-10;
    if ((m - m.conjugate()).norm() > tol)
        throw DetectorPreconditionError("determinant_detector: NotReal");
    if ((m - m.adjoint()).norm() > tol)
        throw DetectorPreconditionError("determinant_detector: NotSelfadjoint");
    if (residual_from_identity(m * m.adjoint()) > tol)
        throw DetectorPreconditionError("determinant_detector: NotUnitary");
    if ((grading * m * grading + m).norm() > tol)
        throw DetectorPreconditionError("determinant_detector: NotOdd");

    std::vector<Eigen::Index> plus, minus;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        (grading(i, i).real() > 0 ? plus : minus).push_back(i);
    if (plus.size() != minus.size())
        throw DimensionError("determinant_detector: grading blocks are unbalanced");

    Eigen::MatrixXd u(plus.size(), minus.size());
    for (size_t r = 0; r < plus.size(); ++r)
        for (size_t c = 0; c < minus.size(); ++c)
            u(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                m(plus[r], minus[c]).real();

    const Eigen::MatrixXd gram = u * u.transpose();
    if ((gram - Eigen::MatrixXd::Identity(gram.rows(), gram.cols())).norm() > tol)
        throw DetectorPreconditionError("determinant_detector: off-diagonal block not orthogonal");

    return u.determinant() > 0.0 ? 0 : 1;
}

} // namespace krphase
