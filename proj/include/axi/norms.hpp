#pragma once

// Measure-weighted norms on half-plane fields.  The ambient measure for
// axisymmetric functions is m_{d-2} r^{d-2} dr dz; cell measures use the exact
// radial integral over each cell so the layer-cake L^{d,1} norm is exact on
// the piecewise-constant discretization (sort + prefix sum, no alpha
// quadrature).

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "axi/dimension.hpp"
#include "axi/grid.hpp"

namespace axi {

// Exact measure of cell i_r (any z row): m_{d-2} dz (r_{i+1/2}^{d-1} - r_{i-1/2}^{d-1})/(d-1).
template <typename Scalar>
Scalar cell_measure(const Grid2D<Scalar>& grid, const DimensionParams<Scalar>& dims, int i_r) {
    const Scalar lo = Scalar(i_r) * grid.dr;
    const Scalar hi = Scalar(i_r + 1) * grid.dr;
    const Scalar p = Scalar(dims.d - 1);
    return dims.m_dm2 * grid.dz * (std::pow(hi, p) - std::pow(lo, p)) / p;
}

template <typename Scalar>
Scalar sup_norm(const ScalarField2D<Scalar>& f) {
    if (f.values.size() == 0) return Scalar(0);
    return f.values.cwiseAbs().maxCoeff();
}

namespace detail {

// Layer-cake evaluation of d * int_0^inf lambda(alpha)^{1/d} d(alpha) from a
// list of (|value|, measure) cells.
template <typename Scalar>
Scalar lorentz_d1_from_cells(std::vector<std::pair<Scalar, Scalar>>& cells, int d) {
    std::sort(cells.begin(), cells.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    Scalar total = Scalar(0);
    Scalar cum = Scalar(0);
    const Scalar inv_d = Scalar(1) / Scalar(d);
    for (std::size_t i = 0; i < cells.size(); ++i) {
        cum += cells[i].second;
        const Scalar next = (i + 1 < cells.size()) ? cells[i + 1].first : Scalar(0);
        const Scalar drop = cells[i].first - next;
        if (drop > Scalar(0)) total += std::pow(cum, inv_d) * drop;
    }
    return Scalar(d) * total;
}

}  // namespace detail

// ||f||_{L^{d,1}} over the cells selected by pred(i_r); pass a predicate that
// always returns true for the global norm.
template <typename Scalar, typename Pred>
Scalar lorentz_norm_d1_where(const ScalarField2D<Scalar>& f, const DimensionParams<Scalar>& dims,
                             Pred&& pred) {
    if (!f.all_finite()) throw contract_error("lorentz_norm_d1: field has non-finite values");
    std::vector<std::pair<Scalar, Scalar>> cells;
    cells.reserve(static_cast<std::size_t>(f.grid.nr) * f.grid.nz);
    for (int i = 0; i < f.grid.nr; ++i) {
        if (!pred(i)) continue;
        const Scalar mu = cell_measure(f.grid, dims, i);
        for (int j = 0; j < f.grid.nz; ++j) {
            const Scalar v = std::abs(f.values(i, j));
            if (v > Scalar(0)) cells.emplace_back(v, mu);
        }
    }
    return detail::lorentz_d1_from_cells(cells, dims.d);
}

template <typename Scalar>
Scalar lorentz_norm_d1(const ScalarField2D<Scalar>& f, const DimensionParams<Scalar>& dims) {
    return lorentz_norm_d1_where(f, dims, [](int) { return true; });
}

// Norm restricted to the cylinder C_R = {r < R} or its complement.
template <typename Scalar>
Scalar lorentz_norm_d1_inside(const ScalarField2D<Scalar>& f, const DimensionParams<Scalar>& dims,
                              Scalar R) {
    return lorentz_norm_d1_where(f, dims, [&](int i) { return f.grid.r(i) < R; });
}

template <typename Scalar>
Scalar lorentz_norm_d1_outside(const ScalarField2D<Scalar>& f, const DimensionParams<Scalar>& dims,
                               Scalar R) {
    return lorentz_norm_d1_where(f, dims, [&](int i) { return f.grid.r(i) >= R; });
}

template <typename Scalar>
Scalar sup_norm_inside(const ScalarField2D<Scalar>& f, Scalar R) {
    Scalar m = Scalar(0);
    for (int i = 0; i < f.grid.nr; ++i) {
        if (!(f.grid.r(i) < R)) continue;
        for (int j = 0; j < f.grid.nz; ++j) m = std::max(m, std::abs(f.values(i, j)));
    }
    return m;
}

template <typename Scalar>
Scalar sup_norm_outside(const ScalarField2D<Scalar>& f, Scalar R) {
    Scalar m = Scalar(0);
    for (int i = 0; i < f.grid.nr; ++i) {
        if (f.grid.r(i) < R) continue;
        for (int j = 0; j < f.grid.nz; ++j) m = std::max(m, std::abs(f.values(i, j)));
    }
    return m;
}

// Measure of {|f| > threshold}.
template <typename Scalar>
Scalar superlevel_measure(const ScalarField2D<Scalar>& f, const DimensionParams<Scalar>& dims,
                          Scalar threshold) {
    Scalar total = Scalar(0);
    for (int i = 0; i < f.grid.nr; ++i) {
        const Scalar mu = cell_measure(f.grid, dims, i);
        for (int j = 0; j < f.grid.nz; ++j)
            if (std::abs(f.values(i, j)) > threshold) total += mu;
    }
    return total;
}

// Largest radial node where |f| exceeds the threshold somewhere in z; 0 if none.
template <typename Scalar>
Scalar support_radius(const ScalarField2D<Scalar>& f, Scalar threshold) {
    if (threshold < Scalar(0)) throw domain_error("support_radius: threshold must be >= 0");
    for (int i = f.grid.nr - 1; i >= 0; --i)
        for (int j = 0; j < f.grid.nz; ++j)
            if (std::abs(f.values(i, j)) > threshold) return f.grid.r(i);
    return Scalar(0);
}

}  // namespace axi
