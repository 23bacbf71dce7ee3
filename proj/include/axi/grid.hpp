#pragma once

// Half-plane (r,z) grids and the field types living on them.  The radial grid
// is staggered off the axis (first node at dr/2) so the k/r and k/r^2 terms of
// the reduced operators are never evaluated at r = 0; the z grid is symmetric
// about 0.  Fields are plain value types holding an Eigen matrix indexed
// (i_r, i_z).

#include <Eigen/Dense>
#include <cmath>

#include "axi/errors.hpp"

namespace axi {

template <typename Scalar = double>
struct Grid2D {
    int nr = 0;
    int nz = 0;
    Scalar dr{};
    Scalar dz{};
    Scalar r_max{};
    Scalar z_max{};

    Scalar r(int i) const { return (Scalar(i) + Scalar(0.5)) * dr; }
    // Written as dz * (j - (nz-1)/2) so that z(nz-1-j) == -z(j) exactly.
    Scalar z(int j) const { return dz * (Scalar(j) - Scalar(nz - 1) / Scalar(2)); }

    Eigen::Vector<Scalar, Eigen::Dynamic> r_nodes() const {
        Eigen::Vector<Scalar, Eigen::Dynamic> v(nr);
        for (int i = 0; i < nr; ++i) v[i] = r(i);
        return v;
    }
    Eigen::Vector<Scalar, Eigen::Dynamic> z_nodes() const {
        Eigen::Vector<Scalar, Eigen::Dynamic> v(nz);
        for (int j = 0; j < nz; ++j) v[j] = z(j);
        return v;
    }

    friend bool operator==(const Grid2D& a, const Grid2D& b) {
        return a.nr == b.nr && a.nz == b.nz && a.dr == b.dr && a.dz == b.dz;
    }
    friend bool operator!=(const Grid2D& a, const Grid2D& b) { return !(a == b); }
};

template <typename Scalar = double>
Grid2D<Scalar> make_grid(int nr, int nz, Scalar r_max, Scalar z_max) {
    if (nr < 3 || nz < 3) throw contract_error("make_grid: need at least 3 nodes per axis");
    if (!(r_max > Scalar(0)) || !(z_max > Scalar(0)))
        throw contract_error("make_grid: extents must be positive");
    Grid2D<Scalar> g;
    g.nr = nr;
    g.nz = nz;
    g.r_max = r_max;
    g.z_max = z_max;
    g.dr = r_max / Scalar(nr);
    g.dz = Scalar(2) * z_max / Scalar(nz);
    return g;
}

template <typename Scalar = double>
struct ScalarField2D {
    Grid2D<Scalar> grid;
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> values;  // (i_r, i_z)

    ScalarField2D() = default;
    explicit ScalarField2D(const Grid2D<Scalar>& g)
        : grid(g), values(Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(g.nr, g.nz)) {}

    Scalar& operator()(int i, int j) { return values(i, j); }
    Scalar operator()(int i, int j) const { return values(i, j); }

    bool all_finite() const { return values.allFinite(); }
};

// Sample a callable f(r,z) onto a field.
template <typename Scalar, typename F>
ScalarField2D<Scalar> sample_field(const Grid2D<Scalar>& grid, F&& f) {
    ScalarField2D<Scalar> out(grid);
    for (int i = 0; i < grid.nr; ++i)
        for (int j = 0; j < grid.nz; ++j) out.values(i, j) = f(grid.r(i), grid.z(j));
    return out;
}

template <typename Scalar = double>
struct VelocityField2D {
    ScalarField2D<Scalar> u_r;
    ScalarField2D<Scalar> u_z;

    VelocityField2D() = default;
    explicit VelocityField2D(const Grid2D<Scalar>& g) : u_r(g), u_z(g) {}

    const Grid2D<Scalar>& grid() const {
        if (u_r.grid != u_z.grid)
            throw contract_error("VelocityField2D: components live on different grids");
        return u_r.grid;
    }
};

template <typename Scalar>
void require_same_grid(const ScalarField2D<Scalar>& a, const ScalarField2D<Scalar>& b,
                       const char* what) {
    if (a.grid != b.grid) throw contract_error(std::string(what) + ": grid mismatch");
}

}  // namespace axi
