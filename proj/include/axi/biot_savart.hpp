#pragma once

// Quadrature evaluation of the axisymmetric Biot-Savart kernels.
//
// Both coordinate kernels reduce to the two tau moments
//   J_j(delta2, b) = int_{-1}^{1} tau^j (1-tau^2)^{(d-4)/2}
//                      / (delta2 + b (1-tau))^{d/2} dtau,   j = 0, 1,
// where delta2 = (r-rho)^2 + (z-s)^2 and b = 2 r rho, so the denominator is
// formed without cancellation however close the points are.  Away from the
// diagonal a Gauss-Jacobi rule matched to the (1-tau^2)^{(d-4)/2} weight is
// used; when delta2 << b the integrand develops a boundary layer of width
// delta2/b at tau = 1 and the evaluation switches to a fixed tanh-sinh rule.
//
// The velocity integrals are cell-wise Gauss-Legendre sums over the vorticity
// grid.  Around each evaluation point the kernel is split by a smooth radial
// mask: the far part stays on the cell rule (with the cell order raised to 3
// inside the transition annulus), the near part is integrated in local polar
// coordinates where kernel * radius is bounded, desingularizing the
// |x-y|^{1-d} singularity.

#include <cmath>
#include <utility>
#include <vector>

#include "axi/dimension.hpp"
#include "axi/errors.hpp"
#include "axi/grid.hpp"
#include "axi/interpolate.hpp"
#include "axi/quadrature.hpp"

namespace axi {

template <typename Scalar = double>
struct KernelQuadrature {
    int n_tau = 16;                          // Gauss-Jacobi nodes for the tau integral
    int n_cell = 2;                          // per-cell Gauss-Legendre order
    Scalar self_exclusion_radius = Scalar(4);  // near-field split radius, in grid cells
};

template <typename Scalar>
void validate_kernel_quadrature(const KernelQuadrature<Scalar>& q) {
    if (q.n_tau < 8) throw contract_error("KernelQuadrature: n_tau must be >= 8");
    if (q.n_cell < 1 || q.n_cell > 3)
        throw contract_error("KernelQuadrature: n_cell must be in {1,2,3}");
    if (q.self_exclusion_radius < Scalar(0))
        throw contract_error("KernelQuadrature: self_exclusion_radius must be >= 0");
}

template <typename Scalar = double>
struct KernelTables {
    DimensionParams<Scalar> dims;
    KernelQuadrature<Scalar> quad;
    GaussRule<Scalar> gj;      // weight (1-t^2)^{(d-4)/2}
    TanhSinhRule<Scalar> ts;   // near-diagonal fallback
    Scalar c;                  // (d-4)/2
    Scalar near_ratio = Scalar(0.05);
};

template <typename Scalar>
KernelTables<Scalar> make_kernel_tables(const DimensionParams<Scalar>& dims,
                                        const KernelQuadrature<Scalar>& quad) {
    validate_kernel_quadrature(quad);
    KernelTables<Scalar> t{dims, quad, gegenbauer_rule<Scalar>(quad.n_tau, Scalar(dims.d - 4) / Scalar(2)),
                           tanh_sinh_rule<Scalar>(), Scalar(dims.d - 4) / Scalar(2)};
    return t;
}

namespace detail {

// x^{d/2} for x > 0 without calling pow for even d.
template <typename Scalar>
inline Scalar pow_half_d(Scalar x, int d) {
    Scalar acc = Scalar(1), base = x;
    int p = d / 2;
    while (p) {
        if (p & 1) acc *= base;
        base *= base;
        p >>= 1;
    }
    return (d & 1) ? acc * std::sqrt(x) : acc;
}

}  // namespace detail

// The pair (J_0, J_1); delta2 must be strictly positive.
template <typename Scalar>
std::pair<Scalar, Scalar> tau_moments(const KernelTables<Scalar>& kt, Scalar delta2, Scalar b) {
    if (!(delta2 > Scalar(0)))
        throw singular_kernel_error("tau_moments: coincident source and evaluation points");
    Scalar j0 = Scalar(0), j1 = Scalar(0);
    const int d = kt.dims.d;
    if (delta2 < kt.near_ratio * b) {
        for (int i = 0; i < kt.ts.size(); ++i) {
            const Scalar om = kt.ts.one_minus[i];
            const Scalar wf = (kt.c == Scalar(0))
                                  ? Scalar(1)
                                  : std::pow(om * kt.ts.one_plus[i], kt.c);
            const Scalar t = kt.ts.weights[i] * wf / detail::pow_half_d(delta2 + b * om, d);
            j0 += t;
            j1 += t * kt.ts.nodes[i];
        }
    } else {
        for (int i = 0; i < kt.gj.size(); ++i) {
            const Scalar t = kt.gj.weights[i] / detail::pow_half_d(delta2 + b * kt.gj.one_minus[i], d);
            j0 += t;
            j1 += t * kt.gj.nodes[i];
        }
    }
    return {j0, j1};
}

// General-plane kernels: u_r = -a_d m_{d-2} m_{d-3} iint rho^{d-2} w K_r,
//                        u_z = +a_d m_{d-2} m_{d-3} iint rho^{d-2} w K_z.
// K_r carries the (z-s) factor of the display, so it vanishes identically at
// z = s.
template <typename Scalar>
std::pair<Scalar, Scalar> kernel_general(const KernelTables<Scalar>& kt, Scalar r, Scalar z,
                                         Scalar rho, Scalar s) {
    const Scalar dr = r - rho, dz = z - s;
    const auto [j0, j1] = tau_moments(kt, dr * dr + dz * dz, Scalar(2) * r * rho);
    return {dz * j1, r * j1 - rho * j0};
}

template <typename Scalar>
std::pair<Scalar, Scalar> kernel_general(const DimensionParams<Scalar>& dims, Scalar r, Scalar z,
                                         Scalar rho, Scalar s, const KernelQuadrature<Scalar>& quad) {
    return kernel_general(make_kernel_tables(dims, quad), r, z, rho, s);
}

// Odd-in-z kernels over the upper half plane:
//   u_r = +a_d m_{d-2} m_{d-3} iint_{s>0} rho^{d-2} w H,
//   u_z = -a_d m_{d-2} m_{d-3} iint_{s>0} rho^{d-2} w G.
template <typename Scalar>
std::pair<Scalar, Scalar> kernel_odd(const KernelTables<Scalar>& kt, Scalar r, Scalar z,
                                     Scalar rho, Scalar s) {
    const Scalar dr = r - rho;
    const Scalar dm = z - s, dp = z + s;
    const Scalar b = Scalar(2) * r * rho;
    const auto [j0m, j1m] = tau_moments(kt, dr * dr + dm * dm, b);
    const auto [j0p, j1p] = tau_moments(kt, dr * dr + dp * dp, b);
    const Scalar H = dp * j1p - dm * j1m;
    const Scalar G = rho * (j0m - j0p) - r * (j1m - j1p);
    return {H, G};
}

template <typename Scalar>
std::pair<Scalar, Scalar> kernel_odd(const DimensionParams<Scalar>& dims, Scalar r, Scalar z,
                                     Scalar rho, Scalar s, const KernelQuadrature<Scalar>& quad) {
    return kernel_odd(make_kernel_tables(dims, quad), r, z, rho, s);
}

// Weak-type velocity constant C_d (see dimension.hpp for the derivation).
template <typename Scalar>
Scalar cd_constant(const DimensionParams<Scalar>& dims) {
    return weak_velocity_constant<Scalar>(dims.d);
}

namespace detail {

// Quintic smoothstep mask: 0 inside R/2, 1 outside R.
template <typename Scalar>
inline Scalar far_mask(Scalar eps, Scalar R) {
    if (eps >= R) return Scalar(1);
    if (eps <= R / Scalar(2)) return Scalar(0);
    const Scalar t = (eps - R / Scalar(2)) / (R / Scalar(2));
    return t * t * t * (Scalar(10) + t * (Scalar(6) * t - Scalar(15)));
}

// Precomputed cell samples: position, and weight * rho^{d-2} * omega.
template <typename Scalar>
struct CellSamples {
    std::vector<Scalar> rho, s, w;
    int per_cell = 0;
};

template <typename Scalar>
CellSamples<Scalar> make_cell_samples(const ScalarField2D<Scalar>& omega,
                                      const DimensionParams<Scalar>& dims, int n_cell,
                                      const BicubicSampler<Scalar>& interp, bool upper_only) {
    const Grid2D<Scalar>& g = omega.grid;
    const GaussRule<Scalar> gl = legendre_rule<Scalar>(n_cell);
    CellSamples<Scalar> cs;
    cs.per_cell = n_cell * n_cell;
    const std::size_t ncells = static_cast<std::size_t>(g.nr) * g.nz;
    cs.rho.reserve(ncells * cs.per_cell);
    cs.s.reserve(ncells * cs.per_cell);
    cs.w.reserve(ncells * cs.per_cell);
    for (int i = 0; i < g.nr; ++i) {
        for (int j = 0; j < g.nz; ++j) {
            const bool skip = upper_only && !(g.z(j) > Scalar(0));
            for (int a = 0; a < n_cell; ++a) {
                const Scalar rho = g.r(i) + (g.dr / Scalar(2)) * gl.nodes[a];
                const Scalar wa = (g.dr / Scalar(2)) * gl.weights[a];
                for (int bq = 0; bq < n_cell; ++bq) {
                    const Scalar s = g.z(j) + (g.dz / Scalar(2)) * gl.nodes[bq];
                    const Scalar wb = (g.dz / Scalar(2)) * gl.weights[bq];
                    cs.rho.push_back(rho);
                    cs.s.push_back(s);
                    cs.w.push_back(skip ? Scalar(0)
                                        : wa * wb * std::pow(rho, Scalar(dims.d - 2)) *
                                              interp(rho, s));
                }
            }
        }
    }
    return cs;
}

}  // namespace detail

// Shared machinery for the general and odd velocity integrals.
template <typename Scalar, typename KernelFn>
std::vector<std::pair<Scalar, Scalar>> velocity_by_quadrature(
    const ScalarField2D<Scalar>& omega, const DimensionParams<Scalar>& dims,
    const std::vector<std::pair<Scalar, Scalar>>& points, const KernelQuadrature<Scalar>& quad,
    bool upper_only, KernelFn&& kernel) {
    validate_kernel_quadrature(quad);
    const Grid2D<Scalar>& g = omega.grid;
    for (const auto& p : points)
        if (p.first < Scalar(0) || p.first > g.r_max || std::abs(p.second) > g.z_max)
            throw domain_error("velocity quadrature: evaluation point outside grid hull");

    const BicubicSampler<Scalar> interp(omega, AxisParity::Odd);
    const auto base = detail::make_cell_samples(omega, dims, quad.n_cell, interp, upper_only);
    const GaussRule<Scalar> gl3 = legendre_rule<Scalar>(3);
    const GaussRule<Scalar> gl_eps = legendre_rule<Scalar>(16);
    const Scalar R = quad.self_exclusion_radius * std::max(g.dr, g.dz);
    const int n_theta = 64;

    std::vector<std::pair<Scalar, Scalar>> out;
    out.reserve(points.size());
    for (const auto& p : points) {
        const Scalar r = p.first, z = p.second;
        Scalar acc_r = Scalar(0), acc_z = Scalar(0);

        for (int i = 0; i < g.nr; ++i) {
            const Scalar cr = g.r(i);
            for (int j = 0; j < g.nz; ++j) {
                const Scalar cz = g.z(j);
                const std::size_t cell = static_cast<std::size_t>(i) * g.nz + j;
                const Scalar dist2 =
                    (cr - r) * (cr - r) + (cz - z) * (cz - z);
                const bool near_cell =
                    R > Scalar(0) &&
                    dist2 < (Scalar(1.5) * R + g.dr + g.dz) * (Scalar(1.5) * R + g.dr + g.dz);
                if (!near_cell) {
                    const std::size_t o = cell * base.per_cell;
                    for (int q = 0; q < base.per_cell; ++q) {
                        const Scalar w = base.w[o + q];
                        if (w == Scalar(0)) continue;
                        const auto [kr, kz] = kernel(r, z, base.rho[o + q], base.s[o + q]);
                        acc_r += w * kr;
                        acc_z += w * kz;
                    }
                } else {
                    if (upper_only && !(cz > Scalar(0))) continue;
                    // re-quadrature this cell at order 3 with the far mask
                    for (int a = 0; a < 3; ++a) {
                        const Scalar rho = cr + (g.dr / Scalar(2)) * gl3.nodes[a];
                        const Scalar wa = (g.dr / Scalar(2)) * gl3.weights[a];
                        for (int bq = 0; bq < 3; ++bq) {
                            const Scalar s = cz + (g.dz / Scalar(2)) * gl3.nodes[bq];
                            const Scalar eps =
                                std::sqrt((rho - r) * (rho - r) + (s - z) * (s - z));
                            const Scalar mask = detail::far_mask(eps, R);
                            if (mask == Scalar(0)) continue;
                            const Scalar w = mask * wa * (g.dz / Scalar(2)) * gl3.weights[bq] *
                                             std::pow(rho, Scalar(dims.d - 2)) * interp(rho, s);
                            const auto [kr, kz] = kernel(r, z, rho, s);
                            acc_r += w * kr;
                            acc_z += w * kz;
                        }
                    }
                }
            }
        }

        if (R > Scalar(0)) {
            // near part in polar coordinates about the evaluation point; the
            // two eps panels keep the mask kinks at panel ends
            for (int panel = 0; panel < 2; ++panel) {
                const Scalar a = panel == 0 ? Scalar(0) : R / Scalar(2);
                const Scalar b = panel == 0 ? R / Scalar(2) : R;
                for (int q = 0; q < gl_eps.size(); ++q) {
                    const Scalar eps =
                        (a + b) / Scalar(2) + (b - a) / Scalar(2) * gl_eps.nodes[q];
                    const Scalar we = (b - a) / Scalar(2) * gl_eps.weights[q];
                    const Scalar mask = Scalar(1) - detail::far_mask(eps, R);
                    if (mask == Scalar(0)) continue;
                    for (int k = 0; k < n_theta; ++k) {
                        const Scalar theta = (Scalar(k) + Scalar(0.5)) *
                                             (Scalar(2) * std::numbers::pi_v<Scalar> / n_theta);
                        const Scalar rho = r + eps * std::cos(theta);
                        const Scalar s = z + eps * std::sin(theta);
                        if (!(rho > Scalar(0))) continue;
                        if (upper_only && !(s > Scalar(0))) continue;
                        const Scalar w = mask * we *
                                         (Scalar(2) * std::numbers::pi_v<Scalar> / n_theta) * eps *
                                         std::pow(rho, Scalar(dims.d - 2)) * interp(rho, s);
                        const auto [kr, kz] = kernel(r, z, rho, s);
                        acc_r += w * kr;
                        acc_z += w * kz;
                    }
                }
            }
        }
        out.emplace_back(acc_r, acc_z);
    }
    return out;
}

// Velocity from the general coordinate kernels over the full half-plane grid.
template <typename Scalar>
std::vector<std::pair<Scalar, Scalar>> velocity_general(
    const ScalarField2D<Scalar>& omega, const DimensionParams<Scalar>& dims,
    const std::vector<std::pair<Scalar, Scalar>>& points, const KernelQuadrature<Scalar>& quad) {
    const auto kt = make_kernel_tables(dims, quad);
    const Scalar coef = dims.alpha_d * dims.m_dm2 * dims.m_dm3;
    auto raw = velocity_by_quadrature(
        omega, dims, points, quad, /*upper_only=*/false,
        [&](Scalar r, Scalar z, Scalar rho, Scalar s) { return kernel_general(kt, r, z, rho, s); });
    for (auto& v : raw) {
        v.first *= -coef;
        v.second *= coef;
    }
    return raw;
}

// Velocity from the odd-in-z H/G kernels.  The field is given on a standard
// symmetric grid; only the upper half plane (z > 0) is consulted, and values
// below the plane are reconstructed by odd reflection where interpolation
// stencils need them.
template <typename Scalar>
std::vector<std::pair<Scalar, Scalar>> velocity_odd(
    const ScalarField2D<Scalar>& omega_upper, const DimensionParams<Scalar>& dims,
    const std::vector<std::pair<Scalar, Scalar>>& points, const KernelQuadrature<Scalar>& quad) {
    // materialize the odd extension so interpolation near z = 0 is consistent
    ScalarField2D<Scalar> ext = omega_upper;
    const Grid2D<Scalar>& g = ext.grid;
    for (int i = 0; i < g.nr; ++i)
        for (int j = 0; j < g.nz; ++j)
            if (!(g.z(j) > Scalar(0))) ext.values(i, j) = -omega_upper.values(i, g.nz - 1 - j);

    const auto kt = make_kernel_tables(dims, quad);
    const Scalar coef = dims.alpha_d * dims.m_dm2 * dims.m_dm3;
    auto raw = velocity_by_quadrature(
        ext, dims, points, quad, /*upper_only=*/true,
        [&](Scalar r, Scalar z, Scalar rho, Scalar s) { return kernel_odd(kt, r, z, rho, s); });
    for (auto& v : raw) {
        v.first *= coef;
        v.second *= -coef;
    }
    return raw;
}

}  // namespace axi
