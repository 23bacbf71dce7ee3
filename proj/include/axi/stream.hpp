#pragma once

// Stream-function solve and velocity recovery:
//   (-d_z^2 - d_r^2 - (k/r) d_r + k/r^2) psi = omega,   psi -> 0 at the outer
// faces, antisymmetric ghost at the axis (psi vanishes linearly there), then
//   u_r = d_z psi,  u_z = -d_r psi - k psi / r.

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "axi/dimension.hpp"
#include "axi/elliptic.hpp"
#include "axi/grid.hpp"

namespace axi {

template <typename Scalar>
ScalarField2D<Scalar> solve_stream(const ScalarField2D<Scalar>& omega,
                                   const DimensionParams<Scalar>& dims, Scalar tol = Scalar(1e-8)) {
    if (!omega.all_finite()) throw contract_error("solve_stream: omega has non-finite values");
    const Grid2D<Scalar>& g = omega.grid;
    const Scalar k = Scalar(dims.k);
    const RadialOperator<Scalar> rad(g, Scalar(1), k, k, std::max(8, 2 * dims.k));

    ScalarField2D<Scalar> psi(g);
    psi.values = solve_separable(rad, Scalar(1), g, omega.values);

    const Scalar res_norm = (apply_separable(rad, Scalar(1), g, psi.values) - omega.values).norm();
    const Scalar rhs_norm = omega.values.norm();
    if (rhs_norm > Scalar(0) && res_norm > tol * rhs_norm) {
        char msg[128];
        std::snprintf(msg, sizeof(msg), "solve_stream: residual %.3e exceeds tolerance %.3e",
                      double(res_norm), double(tol * rhs_norm));
        throw numerical_error(msg);
    }
    return psi;
}

// Apply the stream operator to a field (testing hook for the closure of the
// elliptic identities).
template <typename Scalar>
ScalarField2D<Scalar> apply_stream_operator(const ScalarField2D<Scalar>& psi,
                                            const DimensionParams<Scalar>& dims) {
    const Grid2D<Scalar>& g = psi.grid;
    const Scalar k = Scalar(dims.k);
    const RadialOperator<Scalar> rad(g, Scalar(1), k, k, std::max(8, 2 * dims.k));
    ScalarField2D<Scalar> out(g);
    out.values = apply_separable(rad, Scalar(1), g, psi.values);
    return out;
}

// Velocity recovery with BC-consistent stencils: centered differences with
// antisymmetric ghosts at all four faces (matching the solve), plus the
// algebraic -k psi / r term.
template <typename Scalar>
VelocityField2D<Scalar> velocity_from_stream(const ScalarField2D<Scalar>& psi,
                                             const DimensionParams<Scalar>& dims) {
    const Grid2D<Scalar>& g = psi.grid;
    VelocityField2D<Scalar> u(g);
    const Scalar k = Scalar(dims.k);
    for (int i = 0; i < g.nr; ++i) {
        for (int j = 0; j < g.nz; ++j) {
            const Scalar up = (j < g.nz - 1) ? psi.values(i, j + 1) : -psi.values(i, g.nz - 1);
            const Scalar dn = (j > 0) ? psi.values(i, j - 1) : -psi.values(i, 0);
            u.u_r.values(i, j) = (up - dn) / (Scalar(2) * g.dz);

            const Scalar right = (i < g.nr - 1) ? psi.values(i + 1, j) : -psi.values(g.nr - 1, j);
            const Scalar left = (i > 0) ? psi.values(i - 1, j) : -psi.values(0, j);
            const Scalar dpsi_dr = (right - left) / (Scalar(2) * g.dr);
            u.u_z.values(i, j) = -dpsi_dr - k * psi.values(i, j) / g.r(i);
        }
    }
    return u;
}

}  // namespace axi
