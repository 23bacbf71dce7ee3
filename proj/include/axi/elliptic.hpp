#pragma once

// Direct solver for separable elliptic operators on the staggered half-plane
// grid.  The z part of both reduced operators is a constant-coefficient
// -c d_z^2 with homogeneous Dirichlet data at the faces z = +/- z_max
// (antisymmetric ghost nodes), which the DST-II sine basis diagonalizes
// exactly.  Each z mode then leaves a radial tridiagonal system solved by
// partially pivoted elimination, so the discrete system is solved to rounding
// and the advertised residual tolerance is checked, never iterated toward.

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "axi/errors.hpp"
#include "axi/grid.hpp"

namespace axi {

namespace detail {

// Orthonormal eigenbasis of the 1-D operator (-d_z^2) dz^2 with antisymmetric
// ghosts: tridiag(-1, 2, -1) with 3 in the corners.  Column m holds
// sin((m+1) pi (j+1/2) / n); eigenvalue(m) = 2 - 2 cos((m+1) pi / n).
template <typename Scalar>
struct SineBasis {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> S;
    Eigen::Vector<Scalar, Eigen::Dynamic> lambda;  // divided by dz^2 already

    SineBasis(int n, Scalar dz) : S(n, n), lambda(n) {
        const Scalar pi = std::numbers::pi_v<Scalar>;
        for (int m = 0; m < n; ++m) {
            const Scalar theta = Scalar(m + 1) * pi / Scalar(n);
            const Scalar norm = (m + 1 == n) ? std::sqrt(Scalar(1) / Scalar(n))
                                             : std::sqrt(Scalar(2) / Scalar(n));
            for (int j = 0; j < n; ++j)
                S(j, m) = norm * std::sin(theta * (Scalar(j) + Scalar(0.5)));
            lambda[m] = (Scalar(2) - Scalar(2) * std::cos(theta)) / (dz * dz);
        }
    }
};

// Tridiagonal solve with partial pivoting (one superdiagonal of fill-in).
// Overwrites rhs with the solution.
template <typename Scalar>
void solve_tridiag_pivot(std::vector<Scalar> sub, std::vector<Scalar> diag,
                         std::vector<Scalar> sup, Scalar* rhs, int n) {
    std::vector<Scalar> sup2(n, Scalar(0));  // second superdiagonal fill-in
    for (int i = 0; i < n - 1; ++i) {
        if (std::abs(sub[i + 1]) > std::abs(diag[i])) {
            std::swap(diag[i], sub[i + 1]);
            std::swap(sup[i], diag[i + 1]);
            if (i + 2 < n) std::swap(sup2[i], sup[i + 1]);
            std::swap(rhs[i], rhs[i + 1]);
        }
        if (diag[i] == Scalar(0)) throw numerical_error("tridiagonal solve: singular pivot");
        const Scalar m = sub[i + 1] / diag[i];
        diag[i + 1] -= m * sup[i];
        if (i + 2 < n) sup[i + 1] -= m * sup2[i];
        rhs[i + 1] -= m * rhs[i];
    }
    if (diag[n - 1] == Scalar(0)) throw numerical_error("tridiagonal solve: singular pivot");
    rhs[n - 1] /= diag[n - 1];
    if (n >= 2) rhs[n - 2] = (rhs[n - 2] - sup[n - 2] * rhs[n - 1]) / diag[n - 2];
    for (int i = n - 3; i >= 0; --i)
        rhs[i] = (rhs[i] - sup[i] * rhs[i + 1] - sup2[i] * rhs[i + 2]) / diag[i];
}

}  // namespace detail

// Radial part a (-d_r^2) + b (-(1/r) d_r) + c (1/r^2) with antisymmetric
// ghost rows at the axis and at r_max (second-order Dirichlet at both faces).
//
// Near the axis the plain centered stencil is only O(dr) consistent because
// the b/r coefficient is O(1/dr) there, and the resulting solution error at
// the first nodes gets amplified by the k/r term of the velocity recovery.
// Regular solutions of these operators have an odd local expansion
// c1 r + c3 r^3 + c5 r^5, so the first odd_exact_rows rows use the stencil
// that reproduces the operator exactly on that span (on {r, r^3} at the axis
// row itself, where the antisymmetric ghost leaves two degrees of freedom).
template <typename Scalar = double>
struct RadialOperator {
    std::vector<Scalar> sub, diag, sup;

    RadialOperator(const Grid2D<Scalar>& g, Scalar a, Scalar b, Scalar c,
                   int odd_exact_rows = 8)
        : sub(g.nr), diag(g.nr), sup(g.nr) {
        const Scalar dr = g.dr;
        for (int i = 0; i < g.nr; ++i) {
            const Scalar r = g.r(i);
            sub[i] = -a / (dr * dr) + b / (Scalar(2) * r * dr);
            diag[i] = Scalar(2) * a / (dr * dr) + c / (r * r);
            sup[i] = -a / (dr * dr) - b / (Scalar(2) * r * dr);
        }
        diag[0] = (Scalar(3) * a - Scalar(3) * b + Scalar(4) * c) / (dr * dr);
        sup[0] = -(Scalar(3) * a + b) / (Scalar(3) * dr * dr);
        sub[0] = Scalar(0);
        for (int i = 1; i <= std::min(odd_exact_rows, g.nr - 2); ++i) {
            // Solve the 3x3 system in the scaled basis (r/r_i)^p, p in {1,3,5}.
            const Scalar ri = g.r(i);
            Eigen::Matrix<Scalar, 3, 3> V;
            Eigen::Vector<Scalar, 3> rhs;
            const int ps[3] = {1, 3, 5};
            for (int q = 0; q < 3; ++q) {
                const Scalar p = Scalar(ps[q]);
                V(q, 0) = std::pow(g.r(i - 1) / ri, p);
                V(q, 1) = Scalar(1);
                V(q, 2) = std::pow(g.r(i + 1) / ri, p);
                rhs(q) = (c - b * p - a * p * (p - Scalar(1))) / (ri * ri);
            }
            const Eigen::Vector<Scalar, 3> x = V.fullPivLu().solve(rhs);
            sub[i] = x(0);
            diag[i] = x(1);
            sup[i] = x(2);
        }
        diag[g.nr - 1] -= sup[g.nr - 1];  // ghost(nr) = -value(nr-1)
        sup[g.nr - 1] = Scalar(0);
    }

    // y = R x applied to each z column of a field matrix.
    void apply(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& x,
               Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& y) const {
        const int nr = static_cast<int>(diag.size());
        y.resize(nr, x.cols());
        for (int j = 0; j < x.cols(); ++j) {
            for (int i = 0; i < nr; ++i) {
                Scalar v = diag[i] * x(i, j);
                if (i > 0) v += sub[i] * x(i - 1, j);
                if (i < nr - 1) v += sup[i] * x(i + 1, j);
                y(i, j) = v;
            }
        }
    }
};

// Solve (R + c_z (-d_z^2)) X = W for the separable operator; exact direct
// method (sine transform in z, pivoted tridiagonal in r).
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> solve_separable(
    const RadialOperator<Scalar>& rad, Scalar c_z, const Grid2D<Scalar>& g,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& w) {
    const detail::SineBasis<Scalar> basis(g.nz, g.dz);
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> hat = w * basis.S;
    std::vector<Scalar> rhs(g.nr);
    for (int m = 0; m < g.nz; ++m) {
        const Scalar lam = c_z * basis.lambda[m];
        std::vector<Scalar> diag = rad.diag;
        for (int i = 0; i < g.nr; ++i) diag[i] += lam;
        for (int i = 0; i < g.nr; ++i) rhs[i] = hat(i, m);
        detail::solve_tridiag_pivot(rad.sub, diag, rad.sup, rhs.data(), g.nr);
        for (int i = 0; i < g.nr; ++i) hat(i, m) = rhs[i];
    }
    return hat * basis.S.transpose();
}

// Apply the full separable operator (for residual checks and consistency tests).
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> apply_separable(
    const RadialOperator<Scalar>& rad, Scalar c_z, const Grid2D<Scalar>& g,
    const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& x) {
    Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> y;
    rad.apply(x, y);
    const Scalar idz2 = Scalar(1) / (g.dz * g.dz);
    for (int i = 0; i < g.nr; ++i) {
        for (int j = 0; j < g.nz; ++j) {
            const Scalar left = (j > 0) ? x(i, j - 1) : -x(i, 0);
            const Scalar right = (j < g.nz - 1) ? x(i, j + 1) : -x(i, g.nz - 1);
            y(i, j) += c_z * (Scalar(2) * x(i, j) - left - right) * idz2;
        }
    }
    return y;
}

}  // namespace axi
