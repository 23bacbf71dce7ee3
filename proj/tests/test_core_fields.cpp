#include <cmath>
#include <numbers>
#include <random>

#include "axi/dimension.hpp"
#include "axi/grid.hpp"
#include "axi/norms.hpp"
#include "axi/operators.hpp"
#include "doctest.h"

using namespace axi;
namespace {
constexpr double kPi = std::numbers::pi;

// Schwartz-class divergence-free example field, valid for any d >= 3.
VelocityField2D<double> schwartz_velocity(const Grid2D<double>& g, int d) {
    const double k = d - 2;
    VelocityField2D<double> u(g);
    for (int i = 0; i < g.nr; ++i) {
        for (int j = 0; j < g.nz; ++j) {
            const double r = g.r(i), z = g.z(j);
            const double e = std::exp(-r * r - z * z);
            u.u_r.values(i, j) = r * (1.0 - 2.0 * z * z) * e;
            u.u_z.values(i, j) = -z * (k + 1.0 - 2.0 * r * r) * e;
        }
    }
    return u;
}

double schwartz_vorticity(double r, double z, int d) {
    const double k = d - 2;
    return r * z * (2.0 * k + 12.0 - 4.0 * r * r - 4.0 * z * z) * std::exp(-r * r - z * z);
}

}  // namespace

TEST_CASE("gamma function at half-integers and integers") {
    const double sqrt_pi = std::sqrt(kPi);
    CHECK(gamma_fn(0.5) == doctest::Approx(sqrt_pi).epsilon(1e-13));
    CHECK(gamma_fn(1.5) == doctest::Approx(0.5 * sqrt_pi).epsilon(1e-13));
    CHECK(gamma_fn(2.5) == doctest::Approx(0.75 * sqrt_pi).epsilon(1e-13));
    CHECK(gamma_fn(3.5) == doctest::Approx(15.0 / 8.0 * sqrt_pi).epsilon(1e-13));
    CHECK(gamma_fn(4.5) == doctest::Approx(105.0 / 16.0 * sqrt_pi).epsilon(1e-13));
    CHECK(gamma_fn(1.0) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(gamma_fn(5.0) == doctest::Approx(24.0).epsilon(1e-13));
    CHECK(gamma_fn(8.0) == doctest::Approx(5040.0).epsilon(1e-13));
}

TEST_CASE("dimension parameters") {
    const auto p3 = make_dimension_params(3);
    CHECK(p3.k == 1);
    CHECK(p3.epsilon == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(std::abs(p3.alpha_d - 1.0 / (4.0 * kPi)) < 1e-14);
    CHECK(p3.m_dm2 == doctest::Approx(2.0 * kPi).epsilon(1e-14));  // m_1, unit circle
    CHECK(p3.m_dm3 == doctest::Approx(2.0).epsilon(1e-14));        // m_0, two points

    const auto p4 = make_dimension_params(4);
    CHECK(p4.alpha_d == doctest::Approx(1.0 / (2.0 * kPi * kPi)).epsilon(1e-14));
    CHECK(p4.k == 2);
    CHECK(p4.epsilon == doctest::Approx(0.5).epsilon(1e-15));

    for (int d = 3; d <= 12; ++d) {
        const auto p = make_dimension_params(d);
        CHECK(p.epsilon * p.k == doctest::Approx(1.0).epsilon(1e-15));
    }
    CHECK_THROWS_AS(make_dimension_params(2), domain_error);
}

TEST_CASE("sphere areas") {
    CHECK(sphere_area(2) == doctest::Approx(4.0 * kPi).epsilon(1e-14));
    CHECK(sphere_area(0) == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(sphere_area(3) == doctest::Approx(2.0 * kPi * kPi).epsilon(1e-14));
    CHECK(sphere_area(1) == doctest::Approx(2.0 * kPi).epsilon(1e-14));
    CHECK_THROWS_AS(sphere_area(-1), domain_error);
}

TEST_CASE("grid staggering and symmetry") {
    const auto g = make_grid(64, 128, 4.0, 4.0);
    CHECK(g.r(0) == doctest::Approx(g.dr / 2).epsilon(1e-15));
    CHECK(g.r(0) > 0.0);
    for (int j = 0; j < g.nz; ++j) CHECK(g.z(g.nz - 1 - j) == -g.z(j));
    // uniform spacing to 1e-12 relative
    for (int i = 1; i < g.nr; ++i)
        CHECK(std::abs((g.r(i) - g.r(i - 1)) - g.dr) < 1e-12 * g.dr);
}

TEST_CASE("lorentz norm: layer cake oracles") {
    const auto dims = make_dimension_params(4);
    const auto g = make_grid(32, 32, 4.0, 4.0);

    SUBCASE("zero field") {
        ScalarField2D<double> f(g);
        CHECK(lorentz_norm_d1(f, dims) == 0.0);
    }

    SUBCASE("indicator: norm = d V^{1/d}") {
        ScalarField2D<double> f(g);
        double V = 0.0;  // accumulate the region measure independently
        for (int i = 0; i < 10; ++i) {
            for (int j = 0; j < g.nz; ++j) f.values(i, j) = 1.0;
            V += g.nz * cell_measure(g, dims, i);
        }
        CHECK(lorentz_norm_d1(f, dims) ==
              doctest::Approx(4.0 * std::pow(V, 0.25)).epsilon(1e-12));
    }

    SUBCASE("positive homogeneity and rearrangement invariance") {
        std::mt19937_64 rng(7);
        std::uniform_real_distribution<double> U(-2.0, 2.0);
        ScalarField2D<double> f(g);
        for (int i = 0; i < g.nr; ++i)
            for (int j = 0; j < g.nz; ++j) f.values(i, j) = U(rng);
        const double n1 = lorentz_norm_d1(f, dims);
        ScalarField2D<double> f2 = f;
        f2.values *= -2.0;
        CHECK(lorentz_norm_d1(f2, dims) == doctest::Approx(2.0 * n1).epsilon(1e-13));

        // permuting values within a radial row (cells of equal measure)
        ScalarField2D<double> f3 = f;
        for (int i = 0; i < g.nr; ++i) {
            std::vector<double> row(g.nz);
            for (int j = 0; j < g.nz; ++j) row[j] = f3.values(i, j);
            std::shuffle(row.begin(), row.end(), rng);
            for (int j = 0; j < g.nz; ++j) f3.values(i, j) = row[j];
        }
        CHECK(lorentz_norm_d1(f3, dims) == doctest::Approx(n1).epsilon(1e-13));
    }

    SUBCASE("inside + outside split covers the global norm for an indicator") {
        ScalarField2D<double> f(g);
        f.values.setConstant(1.0);
        const double R = 2.0;
        const double in = lorentz_norm_d1_inside(f, dims, R);
        const double out = lorentz_norm_d1_outside(f, dims, R);
        CHECK(in > 0.0);
        CHECK(out > 0.0);
        // layer cake of an indicator is d V^{1/d}: subadditive across the split
        CHECK(lorentz_norm_d1(f, dims) <= in + out + 1e-12);
    }
}

TEST_CASE("coordinate divergence") {
    const auto dims = make_dimension_params(4);

    SUBCASE("zero velocity") {
        const auto g = make_grid(16, 16, 2.0, 2.0);
        VelocityField2D<double> u(g);
        CHECK(sup_norm(coordinate_divergence(u, dims)) == 0.0);
    }

    SUBCASE("linear field u_r = r, u_z = -(d-1) z is exactly divergence free inside") {
        for (int d : {3, 4, 7}) {
            const auto dd = make_dimension_params(d);
            const auto g = make_grid(24, 24, 3.0, 3.0);
            VelocityField2D<double> u(g);
            for (int i = 0; i < g.nr; ++i)
                for (int j = 0; j < g.nz; ++j) {
                    u.u_r.values(i, j) = g.r(i);
                    u.u_z.values(i, j) = -(d - 1.0) * g.z(j);
                }
            const auto div = coordinate_divergence(u, dd);
            for (int i = 1; i < g.nr - 1; ++i)
                for (int j = 1; j < g.nz - 1; ++j) CHECK(std::abs(div.values(i, j)) < 1e-12);
        }
    }

    SUBCASE("Schwartz example: divergence vanishes at second order") {
        const auto g1 = make_grid(64, 128, 6.0, 6.0);
        const auto g2 = make_grid(128, 256, 6.0, 6.0);
        const double e1 = sup_norm(coordinate_divergence(schwartz_velocity(g1, 4), dims));
        const double e2 = sup_norm(coordinate_divergence(schwartz_velocity(g2, 4), dims));
        const double order = std::log2(e1 / e2);
        CHECK(order >= 1.9);
        CHECK(e2 < 5e-3);
    }

    SUBCASE("mismatched grids rejected") {
        VelocityField2D<double> u;
        u.u_r = ScalarField2D<double>(make_grid(8, 8, 1.0, 1.0));
        u.u_z = ScalarField2D<double>(make_grid(8, 16, 1.0, 1.0));
        CHECK_THROWS_AS(coordinate_divergence(u, dims), contract_error);
    }
}

TEST_CASE("scalar vorticity") {
    SUBCASE("gradient fields are curl free to discretization order") {
        auto f = [](double r, double z) { return std::exp(-r * r - 0.5 * z * z) * (1 + r * r); };
        auto fr = [&](double r, double z) { return -2.0 * r * r * r * std::exp(-r * r - 0.5 * z * z); };
        auto fz = [&](double r, double z) { return -z * f(r, z); };
        const auto g1 = make_grid(48, 96, 5.0, 5.0);
        const auto g2 = make_grid(96, 192, 5.0, 5.0);
        double errs[2];
        int idx = 0;
        for (const auto& g : {g1, g2}) {
            VelocityField2D<double> u(g);
            for (int i = 0; i < g.nr; ++i)
                for (int j = 0; j < g.nz; ++j) {
                    u.u_r.values(i, j) = fr(g.r(i), g.z(j));
                    u.u_z.values(i, j) = fz(g.r(i), g.z(j));
                }
            errs[idx++] = sup_norm(scalar_vorticity(u));
        }
        CHECK(std::log2(errs[0] / errs[1]) >= 1.9);
    }

    SUBCASE("Schwartz example matches the closed form") {
        CHECK(schwartz_vorticity(1.0, 1.0, 4) == doctest::Approx(8.0 * std::exp(-2.0)).epsilon(1e-15));
        const auto g = make_grid(256, 512, 6.0, 6.0);
        const auto u = schwartz_velocity(g, 4);
        const auto w = scalar_vorticity(u);
        double max_err = 0.0, max_ref = 0.0;
        for (int i = 0; i < g.nr; ++i)
            for (int j = 0; j < g.nz; ++j) {
                const double ref = schwartz_vorticity(g.r(i), g.z(j), 4);
                max_err = std::max(max_err, std::abs(w.values(i, j) - ref));
                max_ref = std::max(max_ref, std::abs(ref));
            }
        CHECK(max_err / max_ref < 1e-3);
    }

    SUBCASE("zero velocity") {
        VelocityField2D<double> u(make_grid(8, 8, 1.0, 1.0));
        CHECK(sup_norm(scalar_vorticity(u)) == 0.0);
    }
}

TEST_CASE("support radius") {
    const auto g = make_grid(64, 32, 4.0, 2.0);

    SUBCASE("zero field") {
        ScalarField2D<double> f(g);
        CHECK(support_radius(f, 0.0) == 0.0);
    }

    SUBCASE("indicator of r < 2") {
        ScalarField2D<double> f(g);
        for (int i = 0; i < g.nr; ++i)
            if (g.r(i) < 2.0)
                for (int j = 0; j < g.nz; ++j) f.values(i, j) = 1.0;
        double expected = 0.0;
        for (int i = 0; i < g.nr; ++i)
            if (g.r(i) < 2.0) expected = g.r(i);
        CHECK(support_radius(f, 0.5) == expected);
    }

    SUBCASE("gaussian against threshold e^{-4}") {
        const auto f = sample_field(g, [](double r, double) { return std::exp(-r * r); });
        double expected = 0.0;
        for (int i = 0; i < g.nr; ++i)
            if (std::exp(-g.r(i) * g.r(i)) > std::exp(-4.0)) expected = g.r(i);
        CHECK(support_radius(f, std::exp(-4.0)) == expected);
        CHECK(std::abs(support_radius(f, std::exp(-4.0)) - 2.0) <= g.dr);
    }

    SUBCASE("negative threshold rejected") {
        ScalarField2D<double> f(g);
        CHECK_THROWS_AS(support_radius(f, -1.0), domain_error);
    }
}
