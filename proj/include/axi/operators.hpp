#pragma once

// Finite-difference first derivatives and the coordinate differential
// operators of the reduced equations.  Centered second-order stencils in the
// interior, one-sided second-order at the four boundaries.

#include <cmath>

#include "axi/dimension.hpp"
#include "axi/grid.hpp"

namespace axi {

namespace detail {

template <typename Scalar>
Scalar diff1(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& v, int i, int n,
             Scalar h, bool along_rows, int other) {
    auto at = [&](int idx) { return along_rows ? v(idx, other) : v(other, idx); };
    if (i == 0) return (Scalar(-3) * at(0) + Scalar(4) * at(1) - at(2)) / (Scalar(2) * h);
    if (i == n - 1)
        return (Scalar(3) * at(n - 1) - Scalar(4) * at(n - 2) + at(n - 3)) / (Scalar(2) * h);
    return (at(i + 1) - at(i - 1)) / (Scalar(2) * h);
}

}  // namespace detail

template <typename Scalar>
ScalarField2D<Scalar> d_r(const ScalarField2D<Scalar>& f) {
    if (f.grid.nr < 3) throw contract_error("d_r: need at least 3 radial nodes");
    ScalarField2D<Scalar> out(f.grid);
    for (int j = 0; j < f.grid.nz; ++j)
        for (int i = 0; i < f.grid.nr; ++i)
            out.values(i, j) = detail::diff1(f.values, i, f.grid.nr, f.grid.dr, true, j);
    return out;
}

template <typename Scalar>
ScalarField2D<Scalar> d_z(const ScalarField2D<Scalar>& f) {
    if (f.grid.nz < 3) throw contract_error("d_z: need at least 3 axial nodes");
    ScalarField2D<Scalar> out(f.grid);
    for (int i = 0; i < f.grid.nr; ++i)
        for (int j = 0; j < f.grid.nz; ++j)
            out.values(i, j) = detail::diff1(f.values, j, f.grid.nz, f.grid.dz, false, i);
    return out;
}

namespace detail {

// Radial derivative of a velocity component.  At the axis row the stencil is
// closed by parity reflection across r = 0 (u_r is odd, u_z is even for
// axisymmetric fields on the staggered grid); elsewhere centered, one-sided
// second order at the outer radial boundary.
template <typename Scalar>
ScalarField2D<Scalar> d_r_component(const ScalarField2D<Scalar>& f, bool odd_across_axis) {
    ScalarField2D<Scalar> out(f.grid);
    const int nr = f.grid.nr;
    const Scalar dr = f.grid.dr;
    for (int j = 0; j < f.grid.nz; ++j) {
        for (int i = 0; i < nr; ++i) {
            Scalar v;
            if (i == 0) {
                const Scalar ghost = odd_across_axis ? -f.values(0, j) : f.values(0, j);
                v = (f.values(1, j) - ghost) / (Scalar(2) * dr);
            } else if (i == nr - 1) {
                v = (Scalar(3) * f.values(nr - 1, j) - Scalar(4) * f.values(nr - 2, j) +
                     f.values(nr - 3, j)) /
                    (Scalar(2) * dr);
            } else {
                v = (f.values(i + 1, j) - f.values(i - 1, j)) / (Scalar(2) * dr);
            }
            out.values(i, j) = v;
        }
    }
    return out;
}

}  // namespace detail

// Coordinate divergence d_r u_r + k u_r / r + d_z u_z.
template <typename Scalar>
ScalarField2D<Scalar> coordinate_divergence(const VelocityField2D<Scalar>& u,
                                            const DimensionParams<Scalar>& dims) {
    const Grid2D<Scalar>& g = u.grid();
    if (g.nr < 3 || g.nz < 3) throw contract_error("coordinate_divergence: grid too small");
    ScalarField2D<Scalar> out = detail::d_r_component(u.u_r, /*odd_across_axis=*/true);
    const ScalarField2D<Scalar> dz_uz = d_z(u.u_z);
    for (int i = 0; i < g.nr; ++i) {
        const Scalar k_over_r = Scalar(dims.k) / g.r(i);
        for (int j = 0; j < g.nz; ++j)
            out.values(i, j) += k_over_r * u.u_r.values(i, j) + dz_uz.values(i, j);
    }
    return out;
}

// Scalar vorticity omega = d_r u_z - d_z u_r.
template <typename Scalar>
ScalarField2D<Scalar> scalar_vorticity(const VelocityField2D<Scalar>& u) {
    const Grid2D<Scalar>& g = u.grid();
    if (g.nr < 3 || g.nz < 3) throw contract_error("scalar_vorticity: grid too small");
    ScalarField2D<Scalar> out = detail::d_r_component(u.u_z, /*odd_across_axis=*/false);
    const ScalarField2D<Scalar> dz_ur = d_z(u.u_r);
    out.values -= dz_ur.values;
    return out;
}

}  // namespace axi
