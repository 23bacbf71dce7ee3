#pragma once

// Test-only reference implementations, kept independent of the library's
// quadrature path: composite Simpson integration, brute-force tau integrals
// via the theta substitution (which removes the endpoint weight singularity),
// and the weak-norm oracle for the C_d constant.

#include <cmath>
#include <functional>
#include <vector>

#include "axi/dimension.hpp"

namespace oracles {

inline double composite_simpson(const std::function<double(double)>& f, double a, double b,
                                int n) {
    if (n % 2) ++n;
    const double h = (b - a) / n;
    double acc = f(a) + f(b);
    for (int i = 1; i < n; ++i) acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

// J_j = int_{-1}^{1} tau^j (1-tau^2)^{(d-4)/2} / (A - B tau)^{d/2} dtau via
// tau = cos(theta):  int_0^pi cos^j(theta) sin^{d-3}(theta) / (...)^{d/2}.
inline double tau_moment_reference(int d, int j, double A, double B, int n = 400000) {
    return composite_simpson(
        [&](double th) {
            const double c = std::cos(th), s = std::sin(th);
            return std::pow(c, j) * std::pow(s, d - 3) / std::pow(A - B * c, 0.5 * d);
        },
        0.0, std::acos(-1.0), n);
}

// Reference for the general-plane kernel pair (K_r, K_z).
inline std::pair<double, double> kernel_general_reference(int d, double r, double z, double rho,
                                                          double s) {
    const double A = r * r + rho * rho + (z - s) * (z - s);
    const double B = 2.0 * r * rho;
    const double j0 = tau_moment_reference(d, 0, A, B);
    const double j1 = tau_moment_reference(d, 1, A, B);
    return {(z - s) * j1, r * j1 - rho * j0};
}

// Reference for the odd-kernel pair (H, G), integrating the displayed
// tau in [0,1] integrands directly (theta substitution, tau = cos(theta)).
inline std::pair<double, double> kernel_odd_reference(int d, double r, double z, double rho,
                                                      double s, int n = 400000) {
    const double Pm0 = r * r + rho * rho;
    const double wm = (z - s) * (z - s), wp = (z + s) * (z + s);
    auto H_int = [&](double th) {
        const double tau = std::cos(th), si = std::sin(th);
        const double Pm = Pm0 - 2.0 * r * rho * tau, Pp = Pm0 + 2.0 * r * rho * tau;
        return tau * std::pow(si, d - 3) *
               ((z + s) / std::pow(Pm + wp, 0.5 * d) + (z - s) / std::pow(Pp + wm, 0.5 * d) -
                (z + s) / std::pow(Pp + wp, 0.5 * d) - (z - s) / std::pow(Pm + wm, 0.5 * d));
    };
    auto G_int = [&](double th) {
        const double tau = std::cos(th), si = std::sin(th);
        const double Pm = Pm0 - 2.0 * r * rho * tau, Pp = Pm0 + 2.0 * r * rho * tau;
        return std::pow(si, d - 3) *
               ((rho - r * tau) / std::pow(Pm + wm, 0.5 * d) +
                (rho + r * tau) / std::pow(Pp + wm, 0.5 * d) -
                (rho - r * tau) / std::pow(Pm + wp, 0.5 * d) -
                (rho + r * tau) / std::pow(Pp + wp, 0.5 * d));
    };
    // tau in [0,1] maps to theta in [0, pi/2]
    const double H = composite_simpson(H_int, 0.0, std::acos(-1.0) / 2, n);
    const double G = composite_simpson(G_int, 0.0, std::acos(-1.0) / 2, n);
    return {H, G};
}

// Weak quasinorm of H_0(y) = |y|^{1-d} from its distribution function sampled
// on a fine radial grid: lambda(alpha) at alpha = rr^{1-d} is the ball volume
// int_0^rr m_{d-1} t^{d-1} dt evaluated by Simpson.
inline double cd_weak_norm_oracle(int d) {
    const double p = double(d) / (d - 1);
    double sup = 0.0;
    const int n_r = 400;
    for (int i = 1; i <= n_r; ++i) {
        const double rr = 0.05 + (10.0 - 0.05) * i / n_r;
        const double alpha = std::pow(rr, 1.0 - d);
        const double lambda = composite_simpson(
            [&](double t) { return axi::sphere_area<double>(d - 1) * std::pow(t, d - 1); }, 0.0,
            rr, 2000);
        sup = std::max(sup, std::pow(alpha, p) * lambda);
    }
    return std::sqrt(2.0) * axi::biot_savart_prefactor<double>(d) * std::pow(sup, 1.0 / p);
}

}  // namespace oracles
