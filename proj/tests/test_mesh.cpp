#include <doctest.h>

#include <cmath>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "pfrac/assembly.hpp"
#include "pfrac/mesh.hpp"
#include "pfrac/solver.hpp"

using namespace pfrac;

namespace {

MeshSpec dcb_spec() {
    MeshSpec s;
    s.geometry = MeshGeometry::DcbQuarter;
    s.ell = 0.03;
    s.h = 0.03 / 5.0;
    s.length = 20.0;
    s.height = 0.9;
    s.crack = 10.0;
    s.band_y_ell = 1.6;
    s.band_behind_ell = 34.0;
    s.band_ahead_ell = 140.0;
    return s;
}

MeshSpec sent_spec(double a_over_W) {
    MeshSpec s;
    s.geometry = MeshGeometry::SentHalf;
    s.ell = 0.03;
    s.h = 0.1 * 0.03;
    s.length = 1.0;
    s.height = 3.0;
    s.crack = a_over_W;
    s.band_y_ell = 1.2;
    s.band_behind_ell = 4.0;
    s.band_ahead_ell = 8.0;
    return s;
}

MeshSpec disc_spec(double ell_over_h = 8.0) {
    MeshSpec s;
    s.geometry = MeshGeometry::HalfDisc;
    s.ell = 1e-3;
    s.h = s.ell / ell_over_h;
    s.outer_radius = 1.0;
    s.band_y_ell = 2.0;
    s.band_behind_ell = 4.0;
    s.band_ahead_ell = 6.0;
    s.core_half_ell = 16.0;
    s.max_cell_ell = 2.0;
    return s;
}

std::set<int> boundary_nodes(const Mesh& mesh) {
    std::map<std::pair<int, int>, int> count;
    for (const auto& elem : mesh.elements)
        for (int f = 0; f < 4; ++f) {
            const auto ln = face_local_nodes(f);
            int a = elem[ln[0]], b = elem[ln[2]];
            count[{std::min(a, b), std::max(a, b)}]++;
        }
    std::set<int> out;
    for (const auto& elem : mesh.elements)
        for (int f = 0; f < 4; ++f) {
            const auto ln = face_local_nodes(f);
            int a = elem[ln[0]], b = elem[ln[2]];
            if (count[{std::min(a, b), std::max(a, b)}] == 1) {
                out.insert(a);
                out.insert(elem[ln[1]]);
                out.insert(b);
            }
        }
    return out;
}

// Every boundary node prescribed with a linear field must reproduce it at
// interior nodes (full integration, undamaged, kappa = 0).
void check_patch_test(const Mesh& mesh, double tol) {
    Workspace ws(mesh, quadrature(QuadratureKind::Full));
    MaterialParams p;
    p.E = 7.0;
    p.nu = 0.3;
    p.kappa = 0.0;
    SolutionState st = SolutionState::create(ws, p, ModelVariant::AT2);

    const double A[2][2] = {{3e-3, 1.2e-3}, {-0.7e-3, 2.1e-3}};
    auto linear = [&](const Vec2& pt, int c) {
        return A[c][0] * pt.x + A[c][1] * pt.y;
    };

    auto sys = assemble_global(ws, st, p, ModelVariant::AT2);
    std::vector<Constraint> bc;
    for (int n : boundary_nodes(mesh)) {
        bc.push_back({2 * n, linear(mesh.nodes[n], 0)});
        bc.push_back({2 * n + 1, linear(mesh.nodes[n], 1)});
    }
    Eigen::VectorXd rhs = -sys.Ru;
    apply_dirichlet(sys.Kuu, rhs, bc);
    const Eigen::VectorXd u = sparse_solve(sys.Kuu, rhs);

    double scale = 0.0, err = 0.0;
    for (std::size_t n = 0; n < mesh.node_count(); ++n)
        for (int c = 0; c < 2; ++c) {
            const double exact = linear(mesh.nodes[n], c);
            scale = std::max(scale, std::abs(exact));
            err = std::max(err, std::abs(u[2 * n + c] - exact));
        }
    CHECK(err <= tol * scale);
}

} // namespace

TEST_SUITE_BEGIN("mesh");

TEST_CASE("serendipity shape functions interpolate and partition unity") {
    const double xi_n[8] = {-1, 1, 1, -1, 0, 1, 0, -1};
    const double eta_n[8] = {-1, -1, 1, 1, -1, 0, 1, 0};
    for (int i = 0; i < 8; ++i) {
        const auto s = shape_functions(xi_n[i], eta_n[i]);
        for (int j = 0; j < 8; ++j)
            CHECK(s.N[j] == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-14));
    }

    // centre: corners are -1/4, midsides 1/2
    const auto c = shape_functions(0.0, 0.0);
    for (int i = 0; i < 4; ++i) CHECK(c.N[i] == doctest::Approx(-0.25));
    for (int i = 4; i < 8; ++i) CHECK(c.N[i] == doctest::Approx(0.5));

    std::mt19937 rng(7);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    for (int k = 0; k < 20; ++k) {
        const double xi = dist(rng), eta = dist(rng);
        const auto s = shape_functions(xi, eta);
        double sum = 0.0, dsum0 = 0.0, dsum1 = 0.0;
        for (int i = 0; i < 8; ++i) {
            sum += s.N[i];
            dsum0 += s.dN[i][0];
            dsum1 += s.dN[i][1];
        }
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-13));
        CHECK(dsum0 == doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
        CHECK(dsum1 == doctest::Approx(0.0).scale(1.0).epsilon(1e-13));
        // finite-difference check of the parent-space gradients
        const double d = 1e-6;
        const auto sp = shape_functions(xi + d, eta);
        const auto sm = shape_functions(xi - d, eta);
        for (int i = 0; i < 8; ++i)
            CHECK(s.dN[i][0] == doctest::Approx((sp.N[i] - sm.N[i]) / (2 * d)).epsilon(1e-6));
    }
}

TEST_CASE("gauss quadrature rules") {
    const auto red = quadrature(QuadratureKind::Reduced);
    REQUIRE(red.size() == 4);
    const double g = 1.0 / std::sqrt(3.0);
    for (std::size_t q = 0; q < 4; ++q) {
        CHECK(std::abs(red.points[q].x) == doctest::Approx(g));
        CHECK(std::abs(red.points[q].y) == doctest::Approx(g));
        CHECK(red.weights[q] == doctest::Approx(1.0));
    }
    double wsum = 0.0;
    for (double w : red.weights) wsum += w;
    CHECK(wsum == doctest::Approx(4.0));

    const auto full = quadrature(QuadratureKind::Full);
    REQUIRE(full.size() == 9);
    wsum = 0.0;
    for (double w : full.weights) wsum += w;
    CHECK(wsum == doctest::Approx(4.0));

    // int over [-1,1]^2 of xi^4 eta^2 = (2/5)(2/3); full is exact, reduced is not
    auto integrate = [](const QuadratureRule& r) {
        double s = 0.0;
        for (std::size_t q = 0; q < r.size(); ++q)
            s += std::pow(r.points[q].x, 4) * std::pow(r.points[q].y, 2) * r.weights[q];
        return s;
    };
    const double exact = (2.0 / 5.0) * (2.0 / 3.0);
    CHECK(integrate(full) == doctest::Approx(exact).epsilon(1e-13));
    CHECK(std::abs(integrate(red) - exact) > 1e-3);
}

TEST_CASE("dcb quarter mesh") {
    const auto spec = dcb_spec();
    const Mesh mesh = build_rectangle_mesh(spec);
    CHECK(mesh.warnings.empty());

    // area matches the rectangle
    CHECK(mesh.area() == doctest::Approx(spec.length * spec.height).epsilon(1e-9));

    for (const char* name : {"symmetry", "crack_face", "ligament", "load", "top"})
        CHECK(mesh.has_node_set(name));

    // square cells along the crack path
    const auto& face_edges = mesh.edge_set("crack_face");
    CHECK(!face_edges.empty());
    int band_checked = 0;
    for (const auto& [e, f] : mesh.edge_set("symmetry")) {
        const auto& conn = mesh.elements[e];
        const double dx = std::abs(mesh.nodes[conn[1]].x - mesh.nodes[conn[0]].x);
        const double dy = std::abs(mesh.nodes[conn[3]].y - mesh.nodes[conn[0]].y);
        if (mesh.nodes[conn[0]].x > spec.crack - spec.band_behind_ell * spec.ell &&
            mesh.nodes[conn[1]].x < spec.crack + spec.band_ahead_ell * spec.ell) {
            CHECK(dx / dy == doctest::Approx(1.0).epsilon(1e-6));
            ++band_checked;
        }
    }
    CHECK(band_checked > 100);

    // every boundary node carries at least one label
    std::set<int> labelled;
    for (const auto& [name, set] : mesh.node_sets) labelled.insert(set.begin(), set.end());
    for (int n : boundary_nodes(mesh)) {
        CHECK(labelled.count(n) == 1);
        if (!labelled.count(n)) break;
    }

    // crack tip lands on a grid line
    bool tip_found = false;
    for (int n : mesh.node_set("ligament"))
        if (std::abs(mesh.nodes[n].x - spec.crack) < 1e-12) tip_found = true;
    CHECK(tip_found);
}

TEST_CASE("sent half mesh accepts the paper defaults") {
    for (double ratio : {0.005, 0.1, 0.4}) {
        const auto spec = sent_spec(ratio);
        const Mesh mesh = build_rectangle_mesh(spec);
        CHECK(mesh.area() == doctest::Approx(3.0).epsilon(1e-9));
        CHECK(mesh.has_node_set("top"));
        CHECK(!mesh.node_set("crack_face").empty());
        CHECK(mesh.element_count() < 12000);
    }
}

TEST_CASE("rectangle mesh rejects crack through the full width") {
    auto spec = sent_spec(0.4);
    spec.crack = 1.0;
    CHECK_THROWS_AS(build_rectangle_mesh(spec), std::invalid_argument);
    spec.crack = 1.5;
    CHECK_THROWS_AS(build_rectangle_mesh(spec), std::invalid_argument);
}

TEST_CASE("under-resolved length scale warns") {
    auto spec = dcb_spec();
    spec.h = 2.0 * spec.ell;
    spec.band_behind_ell = 8;
    spec.band_ahead_ell = 8;
    const Mesh mesh = build_rectangle_mesh(spec);
    REQUIRE(!mesh.warnings.empty());
    CHECK(mesh.warnings.front().find("under-resolved") != std::string::npos);
}

TEST_CASE("half disc mesh geometry") {
    const auto spec = disc_spec();
    const Mesh mesh = build_half_disc_mesh(spec);
    const double R = spec.outer_radius;

    // desk-scale element budget
    CHECK(mesh.element_count() >= 3000);
    CHECK(mesh.element_count() <= 8000);

    // every arc node sits on the radius
    const auto& outer = mesh.node_set("outer");
    CHECK(outer.size() > 100);
    for (int n : outer)
        CHECK(std::hypot(mesh.nodes[n].x, mesh.nodes[n].y) == doctest::Approx(R).epsilon(1e-10));

    // half-disc area
    CHECK(mesh.area() == doctest::Approx(0.5 * M_PI * R * R).epsilon(1e-6));

    // ligament band of unit-aspect squares
    int band_checked = 0;
    for (const auto& [e, f] : mesh.edge_set("symmetry")) {
        const auto& conn = mesh.elements[e];
        const double x0 = mesh.nodes[conn[0]].x, x1 = mesh.nodes[conn[1]].x;
        if (x0 >= 0.0 && x1 <= spec.band_ahead_ell * spec.ell + 1e-12) {
            const double dx = std::abs(x1 - x0);
            const double dy = std::abs(mesh.nodes[conn[3]].y - mesh.nodes[conn[0]].y);
            CHECK(dx / dy == doctest::Approx(1.0).epsilon(1e-6));
            ++band_checked;
        }
    }
    CHECK(band_checked >= 40);

    // every boundary node is either on the arc or on the crack plane
    std::set<int> labelled;
    for (const auto& [name, set] : mesh.node_sets) labelled.insert(set.begin(), set.end());
    for (int n : boundary_nodes(mesh)) CHECK(labelled.count(n) == 1);

    CHECK_THROWS_AS(
        [] {
            auto bad = disc_spec();
            bad.outer_radius = 0.5; // < 1000 ell
            build_half_disc_mesh(bad);
        }(),
        std::invalid_argument);
}

TEST_CASE("patch test with full integration") {
    MeshSpec plain;
    plain.geometry = MeshGeometry::Rectangle;
    plain.length = 2.0;
    plain.height = 1.0;
    plain.h = 0.25;
    plain.ell = 1.0;
    check_patch_test(build_plain_rectangle_mesh(plain), 1e-9);

    auto graded = sent_spec(0.1);
    graded.h = 0.02; // keep it small
    check_patch_test(build_rectangle_mesh(graded), 1e-9);

    auto disc = disc_spec(2.0); // coarse half disc, curved outer elements
    check_patch_test(build_half_disc_mesh(disc), 1e-9);
}

TEST_CASE("mesh dump round trip") {
    MeshSpec plain;
    plain.geometry = MeshGeometry::Rectangle;
    plain.length = 1.0;
    plain.height = 1.0;
    plain.h = 0.5;
    plain.ell = 1.0;
    const Mesh mesh = build_plain_rectangle_mesh(plain);

    std::ostringstream txt;
    write_mesh_text(mesh, txt);
    std::istringstream in(txt.str());
    std::string header;
    std::getline(in, header);
    std::size_t n_nodes = 0;
    in >> n_nodes;
    CHECK(n_nodes == mesh.node_count());
    double x, y;
    for (std::size_t i = 0; i < n_nodes; ++i) {
        in >> x >> y;
        CHECK(x == mesh.nodes[i].x);
        CHECK(y == mesh.nodes[i].y);
    }
    std::size_t n_elem = 0;
    in >> n_elem;
    CHECK(n_elem == mesh.element_count());

    std::ostringstream vtk;
    write_mesh_vtk(mesh, vtk);
    CHECK(vtk.str().find("UNSTRUCTURED_GRID") != std::string::npos);
    CHECK(vtk.str().find("\n23\n") != std::string::npos);
}

TEST_SUITE_END();
