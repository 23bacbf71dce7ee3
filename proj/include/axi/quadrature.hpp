#pragma once

// Quadrature rules used by the Biot-Savart kernels.
//
//  * Gegenbauer (symmetric Gauss-Jacobi) rules for int_{-1}^{1} (1-t^2)^c f(t) dt,
//    built by Golub-Welsch on the known recurrence; c = (d-4)/2 handles the
//    tau-weight for every d, including the d = 3 Chebyshev endpoint singularity.
//  * Gauss-Legendre (c = 0) for per-cell and polar integrals.
//  * A fixed tanh-sinh table for near-diagonal tau integrals whose integrand
//    develops a boundary layer at t = 1; the table stores 1 -/+ t to full
//    precision so denominators can be formed without cancellation.

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <vector>

#include "axi/dimension.hpp"
#include "axi/errors.hpp"

namespace axi {

template <typename Scalar = double>
struct GaussRule {
    std::vector<Scalar> nodes;       // t_i in (-1,1), ascending
    std::vector<Scalar> weights;     // include the (1-t^2)^c weight function
    std::vector<Scalar> one_minus;   // 1 - t_i
    std::vector<Scalar> one_plus;    // 1 + t_i
    int size() const { return static_cast<int>(nodes.size()); }
};

// n-point rule for weight (1-t^2)^c on (-1,1), exact for polynomial f of
// degree <= 2n-1.  Requires c > -1.
template <typename Scalar = double>
GaussRule<Scalar> gegenbauer_rule(int n, Scalar c) {
    if (n < 1) throw domain_error("gegenbauer_rule: n must be >= 1");
    if (!(c > Scalar(-1))) throw domain_error("gegenbauer_rule: weight exponent must be > -1");
    using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
    Mat J = Mat::Zero(n, n);
    for (int m = 1; m < n; ++m) {
        Scalar b2;
        if (m == 1) {
            b2 = Scalar(1) / (Scalar(3) + Scalar(2) * c);
        } else {
            const Scalar q = Scalar(2) * m + Scalar(2) * c;
            b2 = Scalar(m) * (Scalar(m) + Scalar(2) * c) / ((q - Scalar(1)) * (q + Scalar(1)));
        }
        const Scalar b = std::sqrt(b2);
        J(m - 1, m) = b;
        J(m, m - 1) = b;
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(J);
    const auto& evals = es.eigenvalues();
    const auto& evecs = es.eigenvectors();
    // Zeroth moment: int (1-t^2)^c dt = 2^{2c+1} Gamma(c+1)^2 / Gamma(2c+2).
    const Scalar mu0 = std::pow(Scalar(2), Scalar(2) * c + Scalar(1)) *
                       gamma_fn<Scalar>(c + Scalar(1)) * gamma_fn<Scalar>(c + Scalar(1)) /
                       gamma_fn<Scalar>(Scalar(2) * c + Scalar(2));
    GaussRule<Scalar> rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    rule.one_minus.resize(n);
    rule.one_plus.resize(n);
    for (int i = 0; i < n; ++i) {
        rule.nodes[i] = evals[i];
        rule.weights[i] = mu0 * evecs(0, i) * evecs(0, i);
        rule.one_minus[i] = Scalar(1) - evals[i];
        rule.one_plus[i] = Scalar(1) + evals[i];
    }
    return rule;
}

template <typename Scalar = double>
GaussRule<Scalar> legendre_rule(int n) {
    return gegenbauer_rule<Scalar>(n, Scalar(0));
}

// Nodes/weights of the n-point Legendre rule mapped to (a,b).
template <typename Scalar>
void legendre_on_interval(const GaussRule<Scalar>& rule, Scalar a, Scalar b,
                          std::vector<Scalar>& x, std::vector<Scalar>& w) {
    const Scalar mid = (a + b) / Scalar(2);
    const Scalar half = (b - a) / Scalar(2);
    x.resize(rule.nodes.size());
    w.resize(rule.nodes.size());
    for (int i = 0; i < rule.size(); ++i) {
        x[i] = mid + half * rule.nodes[i];
        w[i] = half * rule.weights[i];
    }
}

// Fixed tanh-sinh table on (-1,1).  Stores the transformed abscissas together
// with exact 1-t and 1+t values computed from exp, so (1-t^2)^c and shifted
// denominators stay accurate when t is within 1e-300 of an endpoint.
template <typename Scalar = double>
struct TanhSinhRule {
    std::vector<Scalar> nodes;
    std::vector<Scalar> weights;     // plain dt weights, no weight function
    std::vector<Scalar> one_minus;
    std::vector<Scalar> one_plus;
    int size() const { return static_cast<int>(nodes.size()); }
};

template <typename Scalar = double>
TanhSinhRule<Scalar> tanh_sinh_rule(Scalar h = Scalar(0.035), int levels = 115) {
    const Scalar half_pi = std::numbers::pi_v<Scalar> / Scalar(2);
    TanhSinhRule<Scalar> rule;
    for (int k = -levels; k <= levels; ++k) {
        const Scalar t = Scalar(k) * h;
        const Scalar s = std::sinh(t);
        const Scalar w_arg = half_pi * s;
        // 1 -/+ tanh(w) without cancellation.
        const Scalar e2 = std::exp(Scalar(-2) * std::abs(w_arg));
        Scalar om = Scalar(2) * e2 / (Scalar(1) + e2);
        Scalar op = Scalar(2) / (Scalar(1) + e2);
        if (w_arg < Scalar(0)) std::swap(om, op);
        const Scalar x = std::tanh(w_arg);
        const Scalar ch = std::cosh(w_arg);
        const Scalar weight = h * half_pi * std::cosh(t) / (ch * ch);
        if (weight < Scalar(1e-290) || om == Scalar(0) || op == Scalar(0)) continue;
        rule.nodes.push_back(x);
        rule.weights.push_back(weight);
        rule.one_minus.push_back(om);
        rule.one_plus.push_back(op);
    }
    return rule;
}

}  // namespace axi
