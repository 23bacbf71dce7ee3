#pragma once

// Exact solver for the infinite-dimensional vorticity equation via its
// Burgers reduction.  The potential phi solves Burgers in z with r as a
// parameter; the flow map z -> z + t phi0(r,z) is inverted by bracketed
// Newton, and omega follows from the closed-form quotient.

#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "axi/errors.hpp"
#include "axi/grid.hpp"

namespace axi {

template <typename Scalar = double>
struct PotentialSpec {
    std::function<Scalar(Scalar, Scalar)> phi0;     // initial potential
    std::function<Scalar(Scalar, Scalar)> dz_phi0;  // analytic z-derivative
    std::function<Scalar(Scalar, Scalar)> omega0;   // analytic d_r phi0
    std::string label;
};

// Spot checks of the C^2_0 class conditions: dz_phi0 consistent with central
// differences, omega0 vanishing on the axis, phi0 decaying in r.
template <typename Scalar>
void validate_potential_spec(const PotentialSpec<Scalar>& spec, Scalar r_probe = Scalar(30)) {
    const Scalar h = Scalar(1e-5);
    const Scalar pts[][2] = {{0.3, 0.7}, {1.1, -0.4}, {2.0, 1.5}, {0.05, 0.0}};
    for (const auto& p : pts) {
        const Scalar fd =
            (spec.phi0(p[0], p[1] + h) - spec.phi0(p[0], p[1] - h)) / (Scalar(2) * h);
        if (std::abs(fd - spec.dz_phi0(p[0], p[1])) > Scalar(1e-6))
            throw contract_error("potential spec '" + spec.label +
                                 "': dz_phi0 disagrees with central differences");
    }
    for (Scalar z : {Scalar(-2), Scalar(0), Scalar(1.3)}) {
        if (std::abs(spec.omega0(Scalar(0), z)) > Scalar(1e-12))
            throw contract_error("potential spec '" + spec.label +
                                 "': omega0 must vanish on the axis");
        if (std::abs(spec.phi0(r_probe, z)) > Scalar(1e-8))
            throw contract_error("potential spec '" + spec.label +
                                 "': phi0 must decay as r -> infinity");
    }
}

template <typename Scalar = double>
struct ExactSolution {
    PotentialSpec<Scalar> spec;
    Scalar t_max = std::numeric_limits<Scalar>::infinity();
    Scalar argmin_r{};
    Scalar argmin_z{};
    Scalar inf_dz_phi0{};
    Scalar sup_abs_phi0{};  // bracket half-width for the flow-map inversion
    Scalar omega0_at_argmin{};
};

namespace detail {

// Golden-section minimization of a 1-D slice on [lo,hi].
template <typename Scalar, typename F>
void golden_min(F&& f, Scalar& x, Scalar lo, Scalar hi, int iters) {
    const Scalar gr = (std::sqrt(Scalar(5)) - Scalar(1)) / Scalar(2);
    Scalar a = lo, b = hi;
    Scalar c = b - gr * (b - a);
    Scalar d = a + gr * (b - a);
    Scalar fc = f(c), fd = f(d);
    for (int it = 0; it < iters; ++it) {
        if (fc < fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - gr * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + gr * (b - a);
            fd = f(d);
        }
    }
    x = (fc < fd) ? c : d;
}

}  // namespace detail

// Locate inf d_z phi0 by a coarse scan over [0,r_max] x [-z_max,z_max]
// followed by per-axis golden-section refinement, then apply the blowup-time
// formula T_max = 1/(-inf) (infinity if the infimum is in the zero band).
template <typename Scalar>
ExactSolution<Scalar> blowup_time(const PotentialSpec<Scalar>& spec, Scalar r_box, Scalar z_box,
                                  Scalar refine_tol = Scalar(1e-12), int scan_n = 512) {
    ExactSolution<Scalar> sol;
    sol.spec = spec;

    Scalar best = std::numeric_limits<Scalar>::infinity();
    Scalar br = Scalar(0), bz = Scalar(0);
    Scalar sup_phi = Scalar(0);
    const Scalar dr = r_box / Scalar(scan_n - 1);
    const Scalar dz = Scalar(2) * z_box / Scalar(scan_n - 1);
    for (int i = 0; i < scan_n; ++i) {
        const Scalar r = Scalar(i) * dr;
        for (int j = 0; j < scan_n; ++j) {
            const Scalar z = -z_box + Scalar(j) * dz;
            const Scalar v = spec.dz_phi0(r, z);
            if (!std::isfinite(v)) throw contract_error("blowup_time: non-finite dz_phi0 sample");
            if (v < best) {
                best = v;
                br = r;
                bz = z;
            }
            sup_phi = std::max(sup_phi, std::abs(spec.phi0(r, z)));
        }
    }

    // Coordinate refinement: golden section per axis in a shrinking window.
    Scalar wr = Scalar(2) * dr, wz = Scalar(2) * dz;
    for (int sweep = 0; sweep < 8; ++sweep) {
        detail::golden_min([&](Scalar r) { return spec.dz_phi0(r, bz); }, br,
                           std::max(Scalar(0), br - wr), std::min(r_box, br + wr), 40);
        detail::golden_min([&](Scalar z) { return spec.dz_phi0(br, z); }, bz,
                           std::max(-z_box, bz - wz), std::min(z_box, bz + wz), 40);
        wr = std::max(wr / Scalar(8), refine_tol);
        wz = std::max(wz / Scalar(8), refine_tol);
    }
    best = spec.dz_phi0(br, bz);

    sol.argmin_r = br;
    sol.argmin_z = bz;
    sol.inf_dz_phi0 = best;
    sol.sup_abs_phi0 = sup_phi;
    sol.omega0_at_argmin = spec.omega0(br, bz);
    sol.t_max = (best < Scalar(-1e-14)) ? Scalar(1) / (-best)
                                        : std::numeric_limits<Scalar>::infinity();
    return sol;
}

// Back-to-labels map: the y with y + t phi0(r,y) = z, found by safeguarded
// Newton inside the guaranteed bracket [z - tM, z + tM].
template <typename Scalar>
Scalar invert_back_to_labels(const ExactSolution<Scalar>& sol, Scalar r, Scalar z, Scalar t) {
    if (t < Scalar(0) || t >= sol.t_max)
        throw blowup_exceeded_error("invert_back_to_labels: t outside [0, t_max)");
    if (t == Scalar(0)) return z;
    const auto& spec = sol.spec;
    const Scalar M = sol.sup_abs_phi0 * Scalar(1.0000001) + Scalar(1e-300);
    Scalar lo = z - t * M, hi = z + t * M;
    auto g = [&](Scalar y) { return y + t * spec.phi0(r, y) - z; };
    const Scalar tol = Scalar(1e-13) * (Scalar(1) + std::abs(z));

    Scalar y = z;
    Scalar gy = g(y);
    for (int it = 0; it < 200; ++it) {
        if (std::abs(gy) <= tol) return y;
        if (gy > Scalar(0)) hi = y; else lo = y;
        const Scalar slope = Scalar(1) + t * spec.dz_phi0(r, y);
        Scalar y_next = (slope > Scalar(0)) ? y - gy / slope : lo;
        if (!(y_next > lo && y_next < hi)) y_next = (lo + hi) / Scalar(2);
        y = y_next;
        gy = g(y);
    }
    if (std::abs(gy) <= Scalar(1e-12) * (Scalar(1) + std::abs(z))) return y;
    throw numerical_error("invert_back_to_labels: Newton/bisection did not converge");
}

template <typename Scalar>
Scalar eval_phi(const ExactSolution<Scalar>& sol, Scalar r, Scalar z, Scalar t) {
    const Scalar y = invert_back_to_labels(sol, r, z, t);
    return sol.spec.phi0(r, y);
}

template <typename Scalar>
Scalar eval_omega(const ExactSolution<Scalar>& sol, Scalar r, Scalar z, Scalar t) {
    const Scalar y = invert_back_to_labels(sol, r, z, t);
    const Scalar denom = Scalar(1) + t * sol.spec.dz_phi0(r, y);
    if (denom <= Scalar(0))
        throw blowup_exceeded_error("eval_omega: non-positive Jacobian, t >= t_max");
    return sol.spec.omega0(r, y) / denom;
}

// d_z phi along the exact solution (chain rule through the back-to-labels map).
template <typename Scalar>
Scalar eval_dz_phi(const ExactSolution<Scalar>& sol, Scalar r, Scalar z, Scalar t) {
    const Scalar y = invert_back_to_labels(sol, r, z, t);
    const Scalar q = sol.spec.dz_phi0(r, y);
    const Scalar denom = Scalar(1) + t * q;
    if (denom <= Scalar(0))
        throw blowup_exceeded_error("eval_dz_phi: non-positive Jacobian, t >= t_max");
    return q / denom;
}

// sup over a label grid of |d_z phi(.,.,t)|; the flow map is a bijection in z,
// so scanning labels is equivalent to scanning image points.
template <typename Scalar>
Scalar sup_abs_dz_phi(const ExactSolution<Scalar>& sol, Scalar t, Scalar r_box, Scalar z_box,
                      int n = 513) {
    Scalar best = Scalar(0);
    for (int i = 0; i < n; ++i) {
        const Scalar r = r_box * Scalar(i) / Scalar(n - 1);
        for (int j = 0; j < n; ++j) {
            const Scalar y = -z_box + Scalar(2) * z_box * Scalar(j) / Scalar(n - 1);
            const Scalar q = sol.spec.dz_phi0(r, y);
            const Scalar denom = Scalar(1) + t * q;
            if (denom <= Scalar(0))
                throw blowup_exceeded_error("sup_abs_dz_phi: t >= t_max");
            best = std::max(best, std::abs(q / denom));
        }
    }
    return best;
}

// phi = d_r^{-1} omega by trapezoid accumulation inward from r_max with
// phi(r_max, z) = 0.
template <typename Scalar = double>
struct PotentialFromVorticity {
    ScalarField2D<Scalar> phi;
    bool decay_warning = false;
};

template <typename Scalar>
PotentialFromVorticity<Scalar> potential_from_vorticity(const ScalarField2D<Scalar>& omega) {
    const Grid2D<Scalar>& g = omega.grid;
    PotentialFromVorticity<Scalar> out;
    out.phi = ScalarField2D<Scalar>(g);
    const Scalar max_abs = sup_norm(omega);
    Scalar edge = Scalar(0);
    for (int j = 0; j < g.nz; ++j) edge = std::max(edge, std::abs(omega.values(g.nr - 1, j)));
    out.decay_warning = (max_abs > Scalar(0)) && (edge > Scalar(1e-8) * max_abs);
    for (int j = 0; j < g.nz; ++j) {
        // Half cell from the last node to r_max, where omega is taken as its
        // boundary-node value (the decay precondition makes this negligible).
        Scalar acc = -omega.values(g.nr - 1, j) * (g.dr / Scalar(2));
        out.phi.values(g.nr - 1, j) = acc;
        for (int i = g.nr - 2; i >= 0; --i) {
            acc -= (omega.values(i, j) + omega.values(i + 1, j)) * (g.dr / Scalar(2));
            out.phi.values(i, j) = acc;
        }
    }
    return out;
}

// Lower bound |omega0(r0,z0)| / (1 - t/T_max) on sup|omega| for solutions with
// nonzero vorticity at the minimizing point.
template <typename Scalar>
Scalar bkm_lower_bound(Scalar omega0_at_argmin, Scalar t_max, Scalar t) {
    if (!(t_max > Scalar(0)) || !std::isfinite(t_max))
        throw domain_error("bkm_lower_bound: need finite positive t_max");
    if (t < Scalar(0) || t >= t_max) throw domain_error("bkm_lower_bound: t outside [0, t_max)");
    return std::abs(omega0_at_argmin) / (Scalar(1) - t / t_max);
}

}  // namespace axi
