#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "krphase/bloch.hpp"

namespace krphase {

/// An involution-fixed point (x, 0) of the active-axes torus, x in {+1,-1}^k.
struct FixedPoint {
    std::vector<int> x;  // entries +-1, one per active axis
    int sign_count = 0;  // number of -1 coordinates

    static FixedPoint from_signs(std::vector<int> signs) {
        FixedPoint fp{std::move(signs), 0};
        for (int v : fp.x)
            if (v < 0) ++fp.sign_count;
        return fp;
    }
};

/// The interval index p in {0,..,d-1}: the maximum number of +1 coordinates a
/// preimage point may carry, defined by m in (d-2p-2, d-2p). The relation to
/// the other common labeling of the same intervals is p = d-1-n for
/// m in (-d+2n, -d+2n+2).
struct IntervalIndex {
    int d;
    int p;
};

inline IntervalIndex interval_index(int d, double m) {
    if (d < 1) throw Error("interval_index: d must be >= 1");
    if (mass_in_closing_set(m, d))
        throw GapClosedError("interval_index: m in the closing set");
    if (m > d || m < -d)
        throw OutOfRangeError("interval_index: |m| > d (trivial / mu regime)");
    const int p = static_cast<int>(std::floor((d - m) / 2.0));
    return IntervalIndex{d, p};
}

enum class Coefficient { Z, Z2 };

/// The KR-class vector of [H_m] - [gamma_0] on the d-torus: one signed
/// integer (the I = empty-set component, i.e. the strong invariant) and a
/// Z/2 entry per coordinate subset I with |I| in {1, 2}. Components with
/// |I| >= 3 vanish identically and are never stored. The overall sign of the
/// strong component is defined only up to one global constant per dimension
/// (chi_undetermined records that).
struct KRClassVector {
    int d = 0;
    double m = 0.0;
    std::optional<int> p;  // interval index when -k < m < k on the active axes
    long long strong = 0;
    std::map<int, int> weak1;                  // {i} -> 0/1
    std::map<std::pair<int, int>, int> weak2;  // {i<j} -> 0/1
    Coefficient coefficient = Coefficient::Z;
    bool chi_undetermined = true;

    int weak1_at(int i) const {
        auto it = weak1.find(i);
        return it == weak1.end() ? 0 : it->second;
    }
    int weak2_at(int i, int j) const {
        if (i > j) std::swap(i, j);
        auto it = weak2.find({i, j});
        return it == weak2.end() ? 0 : it->second;
    }

    bool same_components(const KRClassVector& o) const {
        return d == o.d && strong == o.strong && weak1 == o.weak1 && weak2 == o.weak2 &&
               coefficient == o.coefficient;
    }
};

/// All fixed points of the active-axes torus that phi_m sends to the south
/// pole: exactly the sign vectors with sum x_j + m < 0.
inline std::vector<FixedPoint> preimage_of_south(const ModelSpec& spec) {
    require_gap_open(spec);
    const int k = spec.num_axes();
    std::vector<FixedPoint> out;
    for (unsigned mask = 0; mask < (1u << k); ++mask) {
        std::vector<int> signs(static_cast<size_t>(k));
        int sum = 0;
        for (int j = 0; j < k; ++j) {
            signs[static_cast<size_t>(j)] = (mask >> j & 1u) ? -1 : +1;
            sum += signs[static_cast<size_t>(j)];
        }
        if (sum + spec.m < 0.0) out.push_back(FixedPoint::from_signs(std::move(signs)));
    }
    return out;
}

namespace detail {

inline std::optional<int> maybe_interval_index(int k, double m) {
    if (m > k || m < -k) return std::nullopt;
    return interval_index(k, m).p;
}

} // namespace detail

/// The geometric fixed-point formula: strong = signed preimage count,
/// weak_I = parity of preimage points with +1 in every I-coordinate, for
/// I inside the active axes (components for I not contained in the axes are
/// zero: the stacked class is a pullback). With extra_b in {1,2} the class
/// lands in the Z/2-coefficient theory and the strong entry is reduced mod 2.
inline KRClassVector kr_class(const ModelSpec& spec) {
    const std::vector<FixedPoint> pre = preimage_of_south(spec);
    const int k = spec.num_axes();

    KRClassVector out;
    out.d = spec.d;
    out.m = spec.m;
    out.p = detail::maybe_interval_index(k, spec.m);
    out.coefficient = spec.extra_b == 0 ? Coefficient::Z : Coefficient::Z2;

    long long strong = 0;
    for (const FixedPoint& z : pre) strong += (z.sign_count % 2 == 0) ? +1 : -1;
    out.strong = out.coefficient == Coefficient::Z
                     ? strong
                     : ((strong % 2) + 2) % 2;

    for (int i = 1; i <= spec.d; ++i) out.weak1[i] = 0;
    for (int i = 1; i <= spec.d; ++i)
        for (int j = i + 1; j <= spec.d; ++j) out.weak2[{i, j}] = 0;

    auto axis_pos = [&](int axis) -> int {
        for (int t = 0; t < k; ++t)
            if (spec.axes[static_cast<size_t>(t)] == axis) return t;
        return -1;
    };
    for (int i = 1; i <= spec.d; ++i) {
        const int ti = axis_pos(i);
        if (ti < 0) continue;
        int count1 = 0;
        for (const FixedPoint& z : pre)
            if (z.x[static_cast<size_t>(ti)] > 0) ++count1;
        out.weak1[i] = count1 % 2;
        for (int j = i + 1; j <= spec.d; ++j) {
            const int tj = axis_pos(j);
            if (tj < 0) continue;
            int count2 = 0;
            for (const FixedPoint& z : pre)
                if (z.x[static_cast<size_t>(ti)] > 0 && z.x[static_cast<size_t>(tj)] > 0)
                    ++count2;
            out.weak2[{i, j}] = count2 % 2;
        }
    }
    return out;
}

inline long long binomial(int n, int r) {
    if (r < 0 || n < 0 || r > n) return 0;
    long long out = 1;
    r = std::min(r, n - r);
    for (int t = 1; t <= r; ++t) out = out * (n - r + t) / t;
    return out;
}

/// Closed-form class vector for the full-axes model: with interval index p,
/// strong = (-1)^(d+p) C(d-1, p), every singleton weak value is
/// C(d-2, p-1) mod 2 and every pair value C(d-3, p-2) mod 2. Outside the
/// mass range: all zero for m > d; for m < -d the strong invariant vanishes
/// and the weak values follow the same preimage counting over all 2^d fixed
/// points (nonzero only in the lowest dimensions).
inline KRClassVector closed_form(int d, double m) {
    if (d < 1) throw Error("closed_form: d must be >= 1");
    if (mass_in_closing_set(m, d)) throw GapClosedError("closed_form: m in the closing set");

    KRClassVector out;
    out.d = d;
    out.m = m;
    out.coefficient = Coefficient::Z;

    auto fill = [&](long long strong, int w1, int w2) {
        out.strong = strong;
        for (int i = 1; i <= d; ++i) out.weak1[i] = w1;
        for (int i = 1; i <= d; ++i)
            for (int j = i + 1; j <= d; ++j) out.weak2[{i, j}] = w2;
    };

    if (m > d) {
        fill(0, 0, 0);
        return out;
    }
    if (m < -d) {
        // Preimage = all fixed points: 2^(d-1) resp. 2^(d-2) of them carry a
        // +1 at one resp. two chosen coordinates.
        fill(0, d == 1 ? 1 : 0, d == 2 ? 1 : 0);
        return out;
    }

    const int p = interval_index(d, m).p;
    out.p = p;
    const long long mag = binomial(d - 1, p);
    const long long sgn = ((d + p) % 2 == 0) ? +1 : -1;
    const int w1 = p >= 1 ? static_cast<int>(binomial(d - 2, p - 1) % 2) : 0;
    const int w2 = p >= 2 ? static_cast<int>(binomial(d - 3, p - 2) % 2) : 0;
    fill(sgn * mag, w1, w2);
    return out;
}

/// Pull a class on the |axes|-torus back along the coordinate projection of
/// the d-torus: the component for I is the base component of the matching
/// subset of axes when I is contained in the axes, and zero otherwise.
inline KRClassVector pullback_stacked(const KRClassVector& base,
                                      const std::vector<int>& axes, int d) {
    const int k = static_cast<int>(axes.size());
    if (base.d != k)
        throw Error("pullback_stacked: base dimension != number of axes");
    int prev = 0;
    for (int ax : axes) {
        if (ax <= prev || ax > d)
            throw Error("pullback_stacked: axes must be an increasing subset of {1..d}");
        prev = ax;
    }

    KRClassVector out;
    out.d = d;
    out.m = base.m;
    out.p = base.p;
    out.strong = base.strong;
    out.coefficient = base.coefficient;
    for (int i = 1; i <= d; ++i) out.weak1[i] = 0;
    for (int i = 1; i <= d; ++i)
        for (int j = i + 1; j <= d; ++j) out.weak2[{i, j}] = 0;

    for (int s = 0; s < k; ++s) {
        out.weak1[axes[static_cast<size_t>(s)]] = base.weak1_at(s + 1);
        for (int t = s + 1; t < k; ++t) {
            const int i = axes[static_cast<size_t>(s)], j = axes[static_cast<size_t>(t)];
            out.weak2[{i, j}] = base.weak2_at(s + 1, t + 1);
        }
    }
    return out;
}

} // namespace krphase
