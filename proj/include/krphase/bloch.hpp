#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "krphase/clifford.hpp"
#include "krphase/errors.hpp"

namespace krphase {

constexpr double kGapClosedTol = 1e-14;   // threshold on |phi_tilde|
constexpr double kClosingMassTol = 1e-9;  // refusal margin around closing masses

/// A point of the d-torus, parametrized by angles k in [0, 2pi)^d with
/// z_j = exp(i k_j). The real involution (x, y) -> (x, -y) becomes k -> -k.
struct TorusPoint {
    RealVector k;

    explicit TorusPoint(RealVector angles) : k(std::move(angles)) {
        for (Eigen::Index j = 0; j < k.size(); ++j) {
            k[j] = std::fmod(k[j], 2.0 * std::numbers::pi);
            if (k[j] < 0.0) k[j] += 2.0 * std::numbers::pi;
        }
    }

    int dim() const { return static_cast<int>(k.size()); }

    /// The involution-image -k (componentwise, wrapped back to [0, 2pi)).
    TorusPoint reflected() const { return TorusPoint(RealVector(-k)); }
};

/// Parameters of an H_m-type Bloch Hamiltonian on the d-torus.
///
/// axes selects the active coordinate directions (stacking an insulator of
/// dimension |axes| along the remaining ones); extra_b re-tags the values as
/// living in Cliff_{1, |axes|+extra_b}, which lands the class in the
/// Z/2-coefficient theory. Generator numbering starts at 0: gamma(0) is the
/// mass direction.
struct ModelSpec {
    int d;
    std::vector<int> axes;  // increasing subset of {1..d}
    double m;
    int extra_b;
    CliffordRep rep;  // Cliff_{1, |axes| + extra_b}

    int num_axes() const { return static_cast<int>(axes.size()); }
};

inline ModelSpec make_model_spec(int d, double m, std::vector<int> axes = {},
                                 int extra_b = 0) {
    if (d < 1) throw Error("ModelSpec: d must be >= 1");
    if (axes.empty())
        for (int i = 1; i <= d; ++i) axes.push_back(i);
    int prev = 0;
    for (int ax : axes) {
        if (ax <= prev || ax > d)
            throw Error("ModelSpec: axes must be an increasing subset of {1..d}");
        prev = ax;
    }
    if (extra_b < 0 || extra_b > 2) throw Error("ModelSpec: extra_b must be 0, 1, or 2");
    const int k = static_cast<int>(axes.size());
    return ModelSpec{d, std::move(axes), m, extra_b, build_rep(1, k + extra_b)};
}

/// The closing set of the |axes|-dimensional model: {-k, -k+2, ..., k}.
inline std::vector<int> closing_masses(int num_axes) {
    std::vector<int> out;
    for (int c = -num_axes; c <= num_axes; c += 2) out.push_back(c);
    return out;
}

inline bool mass_in_closing_set(double m, int num_axes, double tol = kClosingMassTol) {
    for (int c : closing_masses(num_axes))
        if (std::abs(m - c) < tol) return true;
    return false;
}

inline void require_gap_open(const ModelSpec& spec) {
    if (mass_in_closing_set(spec.m, spec.num_axes()))
        throw GapClosedError("mass m = " + std::to_string(spec.m) +
                             " lies in the closing set of the " +
                             std::to_string(spec.num_axes()) + "-axis model");
}

/// The unnormalized sphere map phi~: k -> (m + sum_j cos k_j, sin k_{i_1},
/// ..., sin k_{i_k}) over the active axes. Length |axes|+1.
inline RealVector phi_tilde(const ModelSpec& spec, const TorusPoint& pt) {
    if (pt.dim() != spec.d) throw DimensionError("phi_tilde: point dimension mismatch");
    const int k = spec.num_axes();
    RealVector out(k + 1);
    double x0 = spec.m;
    for (int j = 0; j < k; ++j) {
        const double kj = pt.k[spec.axes[static_cast<size_t>(j)] - 1];
        x0 += std::cos(kj);
        out[j + 1] = std::sin(kj);
    }
    out[0] = x0;
    return out;
}

/// The normalized map phi_m into the sphere. Equivariant: phi(-k) fixes the
/// first coordinate and negates the rest.
inline RealVector phi(const ModelSpec& spec, const TorusPoint& pt) {
    RealVector v = phi_tilde(spec, pt);
    const double norm = v.norm();
    if (norm < kGapClosedTol)
        throw ZeroVectorError("phi: phi_tilde vanished (mass on the closing set)");
    return v / norm;
}

/// beta(x) = sum_i x_i gamma_i. Odd, selfadjoint, real for real x, and
/// beta(x)^2 = |x|^2.
inline Matrix beta(const CliffordRep& rep, const RealVector& x) {
    if (x.size() != rep.num_generators())
        throw DimensionError("beta: coefficient count != generator count");
    Matrix out = Matrix::Zero(rep.dim, rep.dim);
    for (Eigen::Index i = 0; i < x.size(); ++i)
        out += x[i] * rep.gamma(static_cast<int>(i));
    return out;
}

namespace detail {

// beta on the leading generators, zero-padding the rest; this is how beta_{1,k}
// is viewed inside Cliff_{1,k+extra_b}.
inline Matrix beta_prefix(const CliffordRep& rep, const RealVector& x) {
    if (x.size() > rep.num_generators())
        throw DimensionError("beta_prefix: too many coefficients");
    Matrix out = Matrix::Zero(rep.dim, rep.dim);
    for (Eigen::Index i = 0; i < x.size(); ++i)
        out += x[i] * rep.gamma(static_cast<int>(i));
    return out;
}

} // namespace detail

/// Bounded transform beta(x) (1 + |x|^2)^(-1/2); its square is
/// |x|^2/(1+|x|^2), so 1 - result^2 = (1+|x|^2)^(-1).
inline Matrix bounded_transform(const CliffordRep& rep, const RealVector& x) {
    return beta(rep, x) / std::sqrt(1.0 + x.squaredNorm());
}

/// H(k) = sum_j sin(k_{i_j}) gamma_j + (m + sum_j cos(k_{i_j})) gamma_0.
/// Selfadjoint, odd, and real: R(H(k)) = H(-k).
inline Matrix hamiltonian(const ModelSpec& spec, const TorusPoint& pt) {
    return detail::beta_prefix(spec.rep, phi_tilde(spec, pt));
}

/// Spectral flattening H(k)/|phi~(k)|; equals beta(phi(k)) and squares to
/// the identity.
inline Matrix flatten(const ModelSpec& spec, const TorusPoint& pt) {
    const RealVector v = phi_tilde(spec, pt);
    const double norm = v.norm();
    if (norm < kGapClosedTol)
        throw GapClosedError("flatten: spectral gap closed at this point");
    return detail::beta_prefix(spec.rep, v) / norm;
}

/// Spectral gap 2 * min_k |phi~(k)| over a uniform grid of the active-axes
/// torus, with the fixed points {0, pi}^k appended exactly. The global
/// minimum at a closing mass sits at a fixed point, where the appended
/// candidates evaluate via integer cosines, so a closing gap is exactly 0.
inline double gap(const ModelSpec& spec, int grid_n) {
    if (grid_n < 2 || grid_n % 2 != 0)
        throw Error("gap: grid_n must be even and >= 2");
    const int k = spec.num_axes();
    const double step = 2.0 * std::numbers::pi / grid_n;

    double min_sq = std::numeric_limits<double>::infinity();

    // Uniform grid scan of |phi~|^2 = (m + sum cos)^2 + sum sin^2.
    std::vector<double> cs(static_cast<size_t>(grid_n)), sn(static_cast<size_t>(grid_n));
    for (int t = 0; t < grid_n; ++t) {
        cs[static_cast<size_t>(t)] = std::cos(t * step);
        sn[static_cast<size_t>(t)] = std::sin(t * step);
    }
    std::vector<int> idx(static_cast<size_t>(k), 0);
    while (true) {
        double x0 = spec.m, ss = 0.0;
        for (int j = 0; j < k; ++j) {
            x0 += cs[static_cast<size_t>(idx[static_cast<size_t>(j)])];
            const double s = sn[static_cast<size_t>(idx[static_cast<size_t>(j)])];
            ss += s * s;
        }
        min_sq = std::min(min_sq, x0 * x0 + ss);
        int j = 0;
        for (; j < k; ++j) {
            if (++idx[static_cast<size_t>(j)] < grid_n) break;
            idx[static_cast<size_t>(j)] = 0;
        }
        if (j == k) break;
    }

    // Exact candidates: sin = 0, cos = +-1.
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        double x0 = spec.m;
        for (int j = 0; j < k; ++j) x0 += (mask >> j & 1u) ? -1.0 : 1.0;
        min_sq = std::min(min_sq, x0 * x0);
    }

    return 2.0 * std::sqrt(min_sq);
}

} // namespace krphase
