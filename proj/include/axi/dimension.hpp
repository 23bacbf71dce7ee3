#pragma once

// Dimension-dependent constants for the axisymmetric, swirl-free Euler
// equations reduced to the (r,z) half-plane.  Everything downstream is
// parameterized by the spatial dimension d >= 3 through k = d-2.

#include <cmath>
#include <numbers>

#include "axi/errors.hpp"

namespace axi {

// Lanczos approximation (g = 7, 9 terms).  Relative error is below 1e-14 on
// the half-integer and integer arguments used for sphere areas and ball
// volumes, which is what the acceptance tolerances require.
template <typename Scalar = double>
Scalar gamma_fn(Scalar x) {
    constexpr double g = 7.0;
    constexpr double coef[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    };
    const Scalar pi = std::numbers::pi_v<Scalar>;
    if (x < Scalar(0.5)) {
        // Reflection formula keeps the series argument in its sweet spot.
        return pi / (std::sin(pi * x) * gamma_fn(Scalar(1) - x));
    }
    x -= Scalar(1);
    Scalar a = Scalar(coef[0]);
    const Scalar t = x + Scalar(g) + Scalar(0.5);
    for (int i = 1; i < 9; ++i) a += Scalar(coef[i]) / (x + Scalar(i));
    return std::sqrt(Scalar(2) * pi) * std::pow(t, x + Scalar(0.5)) * std::exp(-t) * a;
}

// Surface area of the n-sphere embedded in R^{n+1}: m_n = 2 pi^{(n+1)/2} / Gamma((n+1)/2).
template <typename Scalar = double>
Scalar sphere_area(int n) {
    if (n < 0) throw domain_error("sphere_area: n must be >= 0");
    const Scalar pi = std::numbers::pi_v<Scalar>;
    const Scalar half = Scalar(n + 1) / Scalar(2);
    return Scalar(2) * std::pow(pi, half) / gamma_fn<Scalar>(half);
}

// Volume of the unit ball in R^d.
template <typename Scalar = double>
Scalar unit_ball_volume(int d) {
    if (d < 1) throw domain_error("unit_ball_volume: d must be >= 1");
    const Scalar pi = std::numbers::pi_v<Scalar>;
    return std::pow(pi, Scalar(d) / Scalar(2)) / gamma_fn<Scalar>(Scalar(d) / Scalar(2) + Scalar(1));
}

// Biot-Savart prefactor alpha_d = (d-2) Gamma(d/2 - 1) / (4 pi^{d/2}).
template <typename Scalar = double>
Scalar biot_savart_prefactor(int d) {
    if (d < 3) throw domain_error("biot_savart_prefactor: d must be >= 3");
    const Scalar pi = std::numbers::pi_v<Scalar>;
    return Scalar(d - 2) * gamma_fn<Scalar>(Scalar(d) / Scalar(2) - Scalar(1)) /
           (Scalar(4) * std::pow(pi, Scalar(d) / Scalar(2)));
}

// Constant in the weak-type velocity bound ||u||_inf <= C_d ||omega||_{L^{d,1}}.
// Follows the proof chain: sqrt(2) from the tensor norm times the
// L^{d/(d-1),inf} quasinorm of |y|^{1-d}, which equals v_d^{(d-1)/d} since the
// distribution function of |y|^{1-d} is v_d alpha^{-d/(d-1)}.
template <typename Scalar = double>
Scalar weak_velocity_constant(int d) {
    if (d < 3) throw domain_error("weak_velocity_constant: d must be >= 3");
    const Scalar vd = unit_ball_volume<Scalar>(d);
    return std::sqrt(Scalar(2)) * biot_savart_prefactor<Scalar>(d) *
           std::pow(vd, Scalar(d - 1) / Scalar(d));
}

template <typename Scalar = double>
struct DimensionParams {
    int d = 3;          // spatial dimension
    int k = 1;          // k = d - 2
    Scalar epsilon{};   // 1/k
    Scalar alpha_d{};   // Biot-Savart prefactor
    Scalar m_dm2{};     // surface area m_{d-2}
    Scalar m_dm3{};     // surface area m_{d-3}
    Scalar c_d{};       // weak-type velocity constant
};

template <typename Scalar = double>
DimensionParams<Scalar> make_dimension_params(int d) {
    if (d < 3) throw domain_error("make_dimension_params: d must be >= 3");
    DimensionParams<Scalar> p;
    p.d = d;
    p.k = d - 2;
    p.epsilon = Scalar(1) / Scalar(p.k);
    p.alpha_d = biot_savart_prefactor<Scalar>(d);
    p.m_dm2 = sphere_area<Scalar>(d - 2);
    p.m_dm3 = sphere_area<Scalar>(d - 3);
    p.c_d = weak_velocity_constant<Scalar>(d);
    return p;
}

}  // namespace axi
