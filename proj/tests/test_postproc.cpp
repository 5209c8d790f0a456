#include <doctest.h>

#include <cmath>

#include "pfrac/benchmarks.hpp"
#include "pfrac/postproc.hpp"

using namespace pfrac;

namespace {

Mesh strip(double length, double height, double h) {
    MeshSpec s;
    s.geometry = MeshGeometry::Rectangle;
    s.length = length;
    s.height = height;
    s.h = h;
    s.ell = 1.0;
    return build_plain_rectangle_mesh(s);
}

// nodal interpolation of the 1D optimal crack profile centred at y = yc
void impose_profile(const Mesh& mesh, Eigen::VectorXd& phi, ModelVariant m, double ell,
                    double yc) {
    for (std::size_t n = 0; n < mesh.node_count(); ++n) {
        const double d = std::abs(mesh.nodes[n].y - yc);
        if (m == ModelVariant::AT2)
            phi[n] = std::exp(-d / ell);
        else
            phi[n] = d < 2.0 * ell ? (1.0 - d / (2.0 * ell)) * (1.0 - d / (2.0 * ell)) : 0.0;
    }
}

MaterialParams params_with_ell(double ell) {
    MaterialParams p;
    p.E = 1.0;
    p.nu = 0.3;
    p.Gc = 1.0;
    p.ell = ell;
    return p;
}

} // namespace

TEST_SUITE_BEGIN("postproc");

TEST_CASE("crack surface of trivial fields") {
    const Mesh mesh = strip(2.0, 1.0, 0.25);
    const Workspace ws(mesh);
    const auto p = params_with_ell(0.2);

    SolutionState st = SolutionState::create(ws, p, ModelVariant::AT2);
    CHECK(crack_surface(ws, st, p, ModelVariant::AT2) == doctest::Approx(0.0));

    st.phi.setConstant(1.0);
    const double V = 2.0;
    CHECK(crack_surface(ws, st, p, ModelVariant::AT2) ==
          doctest::Approx(V / (2.0 * p.ell)).epsilon(1e-12));
    CHECK(crack_surface(ws, st, p, ModelVariant::AT1) ==
          doctest::Approx(V / (4.0 * (2.0 / 3.0) * p.ell)).epsilon(1e-12));
}

TEST_CASE("optimal profiles integrate to one crack length") {
    const double L0 = 2.0;
    // strip tall enough that the exponential tail is negligible
    for (double ell_over_h : {4.0, 8.0}) {
        const double ell = 0.125;
        const double h = ell / ell_over_h;
        const double Y = 8.0 * ell; // profile centre, on a grid line
        const Mesh mesh = strip(L0, 2.0 * Y, h);
        const Workspace ws(mesh);
        const auto p = params_with_ell(ell);

        for (auto m : {ModelVariant::AT1, ModelVariant::AT2}) {
            SolutionState st = SolutionState::create(ws, p, m);
            impose_profile(mesh, st.phi, m, ell, Y);
            const double A = crack_surface(ws, st, p, m);
            const double tol = ell_over_h >= 8.0 ? 0.005 : 0.02;
            CHECK(A == doctest::Approx(L0).epsilon(tol));
        }
    }
}

TEST_CASE("density measure is invariant under rigid rotation") {
    const double ell = 0.125;
    const Mesh mesh = strip(2.0, 2.0, ell / 4.0);
    const Workspace ws(mesh);
    const auto p = params_with_ell(ell);
    SolutionState st = SolutionState::create(ws, p, ModelVariant::AT2);
    impose_profile(mesh, st.phi, ModelVariant::AT2, ell, 1.0);
    const double A = crack_surface(ws, st, p, ModelVariant::AT2);

    const double ang = 0.83;
    Mesh rotated = mesh;
    for (auto& nd : rotated.nodes) {
        const double x = nd.x, y = nd.y;
        nd.x = std::cos(ang) * x - std::sin(ang) * y;
        nd.y = std::sin(ang) * x + std::cos(ang) * y;
    }
    const Workspace ws_rot(rotated);
    const double A_rot = crack_surface(ws_rot, st, p, ModelVariant::AT2);
    CHECK(A_rot == doctest::Approx(A).epsilon(1e-6));
}

TEST_CASE("crack tip position along the ligament") {
    const Mesh mesh = strip(10.0, 1.0, 0.5);
    const auto& lig = mesh.node_set("ligament");
    Eigen::VectorXd phi = Eigen::VectorXd::Zero(mesh.node_count());

    SUBCASE("no crack gives the absent marker") {
        CHECK(!crack_tip_position(mesh, phi, lig).has_value());
    }
    SUBCASE("sharp transition is bracketed within one cell") {
        for (int n : lig)
            phi[n] = mesh.nodes[n].x <= 5.0 ? 1.0 : 0.0;
        const auto tip = crack_tip_position(mesh, phi, lig, 0.95);
        REQUIRE(tip.has_value());
        CHECK(*tip >= 5.0);
        CHECK(*tip <= 5.5);
    }
    SUBCASE("everything cracked returns the far end") {
        phi.setConstant(1.0);
        const auto tip = crack_tip_position(mesh, phi, lig, 0.95);
        REQUIRE(tip.has_value());
        CHECK(*tip == doctest::Approx(10.0));
    }
}

TEST_CASE("phase-field induced crack puts the tip at the nominal length") {
    MeshSpec s;
    s.geometry = MeshGeometry::SentHalf;
    s.ell = 0.05;
    s.h = 0.01;
    s.length = 1.0;
    s.height = 1.0;
    s.crack = 0.4;
    s.band_y_ell = 2.0;
    s.band_behind_ell = 4.0;
    s.band_ahead_ell = 4.0;
    const Mesh mesh = build_rectangle_mesh(s);
    const Workspace ws(mesh);
    auto p = params_with_ell(s.ell);

    SolutionState st = SolutionState::create(ws, p, ModelVariant::AT2);
    induce_phase_field_crack(ws, st, p, s.crack);
    auto sys = assemble_global(ws, st, p, ModelVariant::AT2);
    st.phi = sparse_solve(sys.Kpp, -sys.Rp);
    for (Eigen::Index i = 0; i < st.phi.size(); ++i)
        st.phi[i] = std::min(1.0, std::max(0.0, st.phi[i]));

    const auto tip = crack_tip_position(mesh, st.phi, mesh.node_set("ligament"), 0.95);
    REQUIRE(tip.has_value());
    CHECK(*tip >= s.crack - 2.0 * s.h);
    CHECK(*tip <= s.crack + 2.0 * s.h);
}

TEST_CASE("reaction force equilibrates the applied displacement") {
    const Mesh mesh = strip(2.0, 0.5, 0.25);
    const Workspace ws(mesh);
    auto p = params_with_ell(0.2);
    p.nu = 0.3;

    SolutionState st = SolutionState::create(ws, p, ModelVariant::AT2);
    CHECK(reaction_force(ws, st, p, ModelVariant::AT2, mesh.node_set("left"), 0) ==
          doctest::Approx(0.0));

    std::vector<Constraint> bc;
    for (int n : mesh.node_set("left")) {
        bc.push_back({2 * n, 0.0});
        bc.push_back({2 * n + 1, 0.0});
    }
    for (int n : mesh.node_set("right")) bc.push_back({2 * n, 1e-3});
    auto sys = assemble_global(ws, st, p, ModelVariant::AT2);
    Eigen::VectorXd rhs = -sys.Ru;
    apply_dirichlet(sys.Kuu, rhs, bc);
    st.u = sparse_solve(sys.Kuu, rhs);

    const double right = reaction_force(ws, st, p, ModelVariant::AT2, mesh.node_set("right"), 0);
    const double left = reaction_force(ws, st, p, ModelVariant::AT2, mesh.node_set("left"), 0);
    CHECK(right > 0.0);
    CHECK(left == doctest::Approx(-right).epsilon(1e-9));

    CHECK_THROWS_AS(reaction_force(ws, st, p, ModelVariant::AT2, {}, 0), std::invalid_argument);
}

TEST_CASE("initiation detection") {
    MaterialParams p = params_with_ell(1.0);
    p.nu = 0.3;
    p.E = 2.0;

    SUBCASE("all-elastic run yields the no-initiation marker") {
        std::vector<LoadStepRecord> records(5);
        for (int k = 0; k < 5; ++k) {
            records[k].load_factor = k;
            records[k].crack_surface = 0.0;
        }
        CHECK(!detect_initiation(records, p, {p.ell}).has_value());
    }
    SUBCASE("a jump is bracketed and interpolated") {
        std::vector<LoadStepRecord> records(4);
        const double A[4] = {0.0, 0.05, 0.1, 5.0};
        for (int k = 0; k < 4; ++k) {
            records[k].load_factor = k;
            records[k].crack_surface = A[k];
        }
        const auto init = detect_initiation(records, p, {p.ell});
        REQUIRE(init.has_value());
        const double expect = 2.0 + (1.0 - 0.1) / (5.0 - 0.1);
        CHECK(init->load_factor == doctest::Approx(expect).epsilon(1e-12));
        CHECK(init->G == doctest::Approx(irwin_G(expect, p.E, p.nu)).epsilon(1e-12));
    }
}

TEST_SUITE_END();
