#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <cmath>

#include "pfrac/material.hpp"

using namespace pfrac;

namespace {

// Simpson quadrature, independent oracle for c_w = int_0^1 sqrt(w).
double simpson(double (*f)(double), double a, double b, int n) {
    double s = f(a) + f(b);
    const double h = (b - a) / n;
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

MaterialParams params(double E, double nu, double Gc, double ell) {
    MaterialParams p;
    p.E = E;
    p.nu = nu;
    p.Gc = Gc;
    p.ell = ell;
    return p;
}

} // namespace

TEST_SUITE_BEGIN("material");

TEST_CASE("degradation endpoints and derivatives") {
    CHECK(degradation(0.0).g == doctest::Approx(1.0));
    CHECK(degradation(1.0).g == doctest::Approx(0.0));
    CHECK(degradation(0.5).g == doctest::Approx(0.25));
    CHECK(degradation(0.5).dg == doctest::Approx(-1.0));
    CHECK(degradation(0.5).ddg == doctest::Approx(2.0));
    CHECK_THROWS_AS(degradation(-0.01), std::domain_error);
    CHECK_THROWS_AS(degradation(1.01), std::domain_error);

    // monotone decreasing and consistent with central differences
    const double d = 1e-6;
    double prev = 2.0;
    for (double phi = 0.05; phi < 0.96; phi += 0.05) {
        const auto c = degradation(phi);
        CHECK(c.g < prev);
        prev = c.g;
        const double fd1 = (degradation(phi + d).g - degradation(phi - d).g) / (2 * d);
        const double fd2 = (degradation(phi + d).dg - degradation(phi - d).dg) / (2 * d);
        CHECK(c.dg == doctest::Approx(fd1).epsilon(1e-6));
        CHECK(c.ddg == doctest::Approx(fd2).epsilon(1e-6));
    }
}

TEST_CASE("local dissipation values and normalisation constants") {
    const auto at1 = local_dissipation(1.0, ModelVariant::AT1);
    CHECK(at1.w == doctest::Approx(1.0));
    CHECK(at1.cw == doctest::Approx(2.0 / 3.0));
    const auto at2 = local_dissipation(1.0, ModelVariant::AT2);
    CHECK(at2.w == doctest::Approx(1.0));
    CHECK(at2.dw == doctest::Approx(2.0));
    CHECK(at2.cw == doctest::Approx(0.5));
    for (auto m : {ModelVariant::AT1, ModelVariant::AT2})
        CHECK(local_dissipation(0.0, m).w == doctest::Approx(0.0));

    // c_w = int_0^1 sqrt(w) by quadrature
    const double cw1 = simpson([](double x) { return std::sqrt(x); }, 0.0, 1.0, 20000);
    const double cw2 = simpson([](double x) { return x; }, 0.0, 1.0, 20000);
    CHECK(dissipation_constant(ModelVariant::AT1) == doctest::Approx(cw1).epsilon(1e-5));
    CHECK(dissipation_constant(ModelVariant::AT2) == doctest::Approx(cw2).epsilon(1e-10));

    const double d = 1e-6;
    for (double phi = 0.05; phi < 0.96; phi += 0.1)
        for (auto m : {ModelVariant::AT1, ModelVariant::AT2}) {
            const auto c = local_dissipation(phi, m);
            const double fd1 =
                (local_dissipation(phi + d, m).w - local_dissipation(phi - d, m).w) / (2 * d);
            const double fd2 =
                (local_dissipation(phi + d, m).dw - local_dissipation(phi - d, m).dw) / (2 * d);
            CHECK(c.dw == doctest::Approx(fd1).epsilon(1e-6));
            CHECK(c.ddw == doctest::Approx(fd2).epsilon(1e-6).scale(1.0));
        }
}

TEST_CASE("plane strain elasticity tensor") {
    const auto C = elasticity_tensor(1.0, 0.0);
    CHECK(C(0, 0) == doctest::Approx(1.0));
    CHECK(C(0, 1) == doctest::Approx(0.0));
    CHECK(C(2, 2) == doctest::Approx(0.5));

    CHECK(elasticity_tensor(1.0, 0.3)(0, 0) == doctest::Approx(1.34615384615385).epsilon(1e-12));

    for (double nu = 0.0; nu <= 0.49 + 1e-12; nu += 0.07) {
        const auto Cn = elasticity_tensor(210e3, std::min(nu, 0.49));
        CHECK(Cn(0, 1) == doctest::Approx(Cn(1, 0)));
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(Cn);
        CHECK(es.eigenvalues().minCoeff() > 0.0);
    }
    CHECK_THROWS_AS(elasticity_tensor(1.0, 0.5), std::invalid_argument);
}

TEST_CASE("critical stress") {
    CHECK(critical_stress(params(1, 0, 1, 3.0 / 8.0), ModelVariant::AT1) == doctest::Approx(1.0));
    CHECK(critical_stress(params(1, 0, 1, 3.0), ModelVariant::AT2) == doctest::Approx(0.1875));

    for (auto m : {ModelVariant::AT1, ModelVariant::AT2}) {
        const double s1 = critical_stress(params(7.0, 0.2, 0.4, 0.02), m);
        const double s2 = critical_stress(params(7.0, 0.2, 0.4, 0.01), m);
        CHECK(s2 / s1 == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    }
}

TEST_CASE("fracture length") {
    CHECK(fracture_length(params(1, 0, 1, 0.1)) == doctest::Approx(1.0));
    CHECK(fracture_length(params(1, 0.3, 1, 0.1)) == doctest::Approx(0.91));
}

TEST_CASE("homogeneous response closed form") {
    const auto p = params(1, 0, 1, 1);
    const auto at2 = homogeneous_response(p, ModelVariant::AT2, 1.0);
    CHECK(at2.phase == doctest::Approx(0.5));
    CHECK(at2.stress == doctest::Approx(0.25));

    // AT1 stays exactly elastic below the onset strain
    const double eps_onset = std::sqrt(3.0 * p.Gc / (8.0 * p.ell * p.E));
    for (double f : {0.2, 0.5, 0.9, 0.999}) {
        const auto pt = homogeneous_response(p, ModelVariant::AT1, f * eps_onset);
        CHECK(pt.phase == 0.0);
        CHECK(pt.stress == doctest::Approx(p.E * f * eps_onset).epsilon(1e-14));
    }
    const auto zero = homogeneous_response(p, ModelVariant::AT1, 0.0);
    CHECK(zero.phase == 0.0);
    CHECK(zero.stress == 0.0);

    // AT2 softens from the outset: slope below E everywhere
    for (double e = 0.02; e < 1.5; e += 0.02) {
        const double d = 1e-7;
        const double slope = (homogeneous_response(p, ModelVariant::AT2, e + d).stress -
                              homogeneous_response(p, ModelVariant::AT2, e - d).stress) /
                             (2 * d);
        CHECK(slope < p.E);
    }
}

TEST_CASE("peak of the homogeneous response equals the critical stress") {
    for (auto m : {ModelVariant::AT1, ModelVariant::AT2}) {
        const auto p = params(210e3, 0.0, 2.7, 0.015);
        // golden-section refinement of the stress maximum
        double lo = 1e-8, hi = 0.5;
        const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
        for (int it = 0; it < 200; ++it) {
            const double x1 = hi - gr * (hi - lo);
            const double x2 = lo + gr * (hi - lo);
            if (homogeneous_response(p, m, x1).stress < homogeneous_response(p, m, x2).stress)
                lo = x1;
            else
                hi = x2;
        }
        const double peak = homogeneous_response(p, m, 0.5 * (lo + hi)).stress;
        CHECK(peak == doctest::Approx(critical_stress(p, m)).epsilon(1e-6));
    }
}

TEST_CASE("AT1 driving force floor solves the homogeneous equation at phi = 0") {
    const auto p = params(3.0, 0.25, 0.7, 0.05);
    CHECK(driving_force_floor(p, ModelVariant::AT1) ==
          doctest::Approx(3.0 * p.Gc / (16.0 * p.ell)));
    CHECK(driving_force_floor(p, ModelVariant::AT2) == 0.0);
}

TEST_CASE("parameter validation") {
    MaterialParams p;
    p.E = -1.0;
    CHECK_THROWS_WITH_AS(p.validate(), "material.E must be positive", std::invalid_argument);
    p = MaterialParams{};
    p.nu = 0.5;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p = MaterialParams{};
    p.Gc = 0.0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_SUITE_END();
