#include "pfrac/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace pfrac {

QuadratureRule quadrature(QuadratureKind kind) {
    QuadratureRule rule;
    rule.kind = kind;
    if (kind == QuadratureKind::Reduced) {
        const double a = 1.0 / std::sqrt(3.0);
        for (double eta : {-a, a})
            for (double xi : {-a, a}) {
                rule.points.push_back({xi, eta});
                rule.weights.push_back(1.0);
            }
    } else {
        const double b = std::sqrt(3.0 / 5.0);
        const double pts[3] = {-b, 0.0, b};
        const double wts[3] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};
        for (int j = 0; j < 3; ++j)
            for (int i = 0; i < 3; ++i) {
                rule.points.push_back({pts[i], pts[j]});
                rule.weights.push_back(wts[i] * wts[j]);
            }
    }
    return rule;
}

namespace {
// Parent coordinates of the 8 serendipity nodes.
constexpr double kXi[8]  = {-1.0, 1.0, 1.0, -1.0, 0.0, 1.0, 0.0, -1.0};
constexpr double kEta[8] = {-1.0, -1.0, 1.0, 1.0, -1.0, 0.0, 1.0, 0.0};
} // namespace

ShapeEval shape_functions(double xi, double eta) {
    ShapeEval s{};
    for (int i = 0; i < 4; ++i) {
        const double xi_i = kXi[i], eta_i = kEta[i];
        s.N[i] = 0.25 * (1.0 + xi * xi_i) * (1.0 + eta * eta_i) * (xi * xi_i + eta * eta_i - 1.0);
        s.dN[i][0] = 0.25 * xi_i * (1.0 + eta * eta_i) * (2.0 * xi * xi_i + eta * eta_i);
        s.dN[i][1] = 0.25 * eta_i * (1.0 + xi * xi_i) * (xi * xi_i + 2.0 * eta * eta_i);
    }
    for (int i = 4; i < 8; ++i) {
        const double xi_i = kXi[i], eta_i = kEta[i];
        if (xi_i == 0.0) { // midside on an eta = +-1 edge
            s.N[i] = 0.5 * (1.0 - xi * xi) * (1.0 + eta * eta_i);
            s.dN[i][0] = -xi * (1.0 + eta * eta_i);
            s.dN[i][1] = 0.5 * (1.0 - xi * xi) * eta_i;
        } else { // midside on a xi = +-1 edge
            s.N[i] = 0.5 * (1.0 + xi * xi_i) * (1.0 - eta * eta);
            s.dN[i][0] = 0.5 * xi_i * (1.0 - eta * eta);
            s.dN[i][1] = -(1.0 + xi * xi_i) * eta;
        }
    }
    return s;
}

std::string to_string(MeshGeometry g) {
    switch (g) {
        case MeshGeometry::Rectangle: return "rectangle";
        case MeshGeometry::HalfDisc: return "half_disc";
        case MeshGeometry::DcbQuarter: return "dcb_quarter";
        case MeshGeometry::SentHalf: return "sent_half";
    }
    return "rectangle";
}

MeshGeometry geometry_from_string(const std::string& s) {
    if (s == "rectangle") return MeshGeometry::Rectangle;
    if (s == "half_disc") return MeshGeometry::HalfDisc;
    if (s == "dcb_quarter") return MeshGeometry::DcbQuarter;
    if (s == "sent_half") return MeshGeometry::SentHalf;
    throw std::invalid_argument("unknown mesh geometry '" + s + "'");
}

const std::vector<int>& Mesh::node_set(const std::string& name) const {
    auto it = node_sets.find(name);
    if (it == node_sets.end())
        throw std::invalid_argument("mesh has no node set '" + name + "'");
    return it->second;
}

const std::vector<std::pair<int, int>>& Mesh::edge_set(const std::string& name) const {
    auto it = edge_sets.find(name);
    if (it == edge_sets.end())
        throw std::invalid_argument("mesh has no edge set '" + name + "'");
    return it->second;
}

std::array<int, 3> face_local_nodes(int face) {
    switch (face) {
        case 0: return {0, 4, 1};
        case 1: return {1, 5, 2};
        case 2: return {2, 6, 3};
        case 3: return {3, 7, 0};
    }
    throw std::invalid_argument("face index out of range");
}

namespace {

struct Jacobian {
    double det;
    double J[2][2];
};

Jacobian element_jacobian(const Mesh& mesh, int e, double xi, double eta) {
    const auto s = shape_functions(xi, eta);
    Jacobian jac{};
    for (int i = 0; i < 8; ++i) {
        const Vec2& p = mesh.nodes[mesh.elements[e][i]];
        jac.J[0][0] += s.dN[i][0] * p.x;
        jac.J[0][1] += s.dN[i][0] * p.y;
        jac.J[1][0] += s.dN[i][1] * p.x;
        jac.J[1][1] += s.dN[i][1] * p.y;
    }
    jac.det = jac.J[0][0] * jac.J[1][1] - jac.J[0][1] * jac.J[1][0];
    return jac;
}

void validate_jacobians(const Mesh& mesh) {
    const auto rule = quadrature(QuadratureKind::Full);
    for (std::size_t e = 0; e < mesh.elements.size(); ++e)
        for (std::size_t q = 0; q < rule.size(); ++q) {
            const auto jac = element_jacobian(mesh, static_cast<int>(e),
                                              rule.points[q].x, rule.points[q].y);
            if (!(jac.det > 0.0)) {
                std::ostringstream msg;
                msg << "mesh generation produced a non-positive Jacobian in element "
                    << e << " (det=" << jac.det << ")";
                throw std::runtime_error(msg.str());
            }
        }
}

// Geometric cell sizes from h0 growing by `ratio` (capped) until `span` is
// covered, then scaled so they fit the span exactly. Empty when span ~ 0.
std::vector<double> graded_sizes(double span, double h0, double ratio, double cap) {
    std::vector<double> sizes;
    cap = std::max(cap, h0);
    if (span <= 1e-14 * std::max(h0, cap)) return sizes;
    if (span <= h0) {
        sizes.push_back(span);
        return sizes;
    }
    double acc = 0.0;
    double s = h0 * ratio;
    while (acc < span) {
        const double c = std::min(s, cap);
        sizes.push_back(c);
        acc += c;
        s = std::min(s * ratio, cap);
    }
    const double scale = span / acc;
    for (double& c : sizes) c *= scale;
    return sizes;
}

struct TensorGrid {
    std::vector<double> xs; // grid lines, ascending
    std::vector<double> ys;
};

// Q8 nodes and connectivity of a tensor-product grid.
void build_grid(const TensorGrid& grid, Mesh& mesh) {
    const int nx = static_cast<int>(grid.xs.size()) - 1;
    const int ny = static_cast<int>(grid.ys.size()) - 1;
    if (nx < 1 || ny < 1) throw std::invalid_argument("grid must have at least one cell per direction");

    const int n_corner = (nx + 1) * (ny + 1);
    const int n_hmid = nx * (ny + 1);
    auto corner = [&](int i, int j) { return j * (nx + 1) + i; };
    auto hmid = [&](int i, int j) { return n_corner + j * nx + i; };
    auto vmid = [&](int i, int j) { return n_corner + n_hmid + j * (nx + 1) + i; };

    mesh.nodes.resize(n_corner + n_hmid + (nx + 1) * ny);
    for (int j = 0; j <= ny; ++j)
        for (int i = 0; i <= nx; ++i)
            mesh.nodes[corner(i, j)] = {grid.xs[i], grid.ys[j]};
    for (int j = 0; j <= ny; ++j)
        for (int i = 0; i < nx; ++i)
            mesh.nodes[hmid(i, j)] = {0.5 * (grid.xs[i] + grid.xs[i + 1]), grid.ys[j]};
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i <= nx; ++i)
            mesh.nodes[vmid(i, j)] = {grid.xs[i], 0.5 * (grid.ys[j] + grid.ys[j + 1])};

    mesh.elements.reserve(static_cast<std::size_t>(nx) * ny);
    for (int j = 0; j < ny; ++j)
        for (int i = 0; i < nx; ++i)
            mesh.elements.push_back({corner(i, j), corner(i + 1, j), corner(i + 1, j + 1),
                                     corner(i, j + 1), hmid(i, j), vmid(i + 1, j),
                                     hmid(i, j + 1), vmid(i, j)});
}

void sort_set(std::vector<int>& set, const Mesh& mesh) {
    std::sort(set.begin(), set.end(), [&](int a, int b) {
        const Vec2& pa = mesh.nodes[a];
        const Vec2& pb = mesh.nodes[b];
        if (pa.x != pb.x) return pa.x < pb.x;
        return pa.y < pb.y;
    });
    set.erase(std::unique(set.begin(), set.end()), set.end());
}

template <typename Pred>
std::vector<int> select_nodes(const Mesh& mesh, Pred pred) {
    std::vector<int> out;
    for (std::size_t n = 0; n < mesh.nodes.size(); ++n)
        if (pred(mesh.nodes[n])) out.push_back(static_cast<int>(n));
    return out;
}

// Boundary faces whose three nodes all belong to the named node sets.
void build_edge_sets(Mesh& mesh, const std::vector<std::string>& names) {
    std::map<std::pair<int, int>, int> face_count;
    for (std::size_t e = 0; e < mesh.elements.size(); ++e)
        for (int f = 0; f < 4; ++f) {
            const auto ln = face_local_nodes(f);
            int a = mesh.elements[e][ln[0]], b = mesh.elements[e][ln[2]];
            face_count[{std::min(a, b), std::max(a, b)}]++;
        }
    for (const auto& name : names) {
        if (!mesh.has_node_set(name)) continue;
        const auto& ns = mesh.node_set(name);
        std::unordered_set<int> members(ns.begin(), ns.end());
        auto& edges = mesh.edge_sets[name];
        for (std::size_t e = 0; e < mesh.elements.size(); ++e)
            for (int f = 0; f < 4; ++f) {
                const auto ln = face_local_nodes(f);
                const int a = mesh.elements[e][ln[0]];
                const int m = mesh.elements[e][ln[1]];
                const int b = mesh.elements[e][ln[2]];
                if (face_count[{std::min(a, b), std::max(a, b)}] != 1) continue;
                if (members.count(a) && members.count(m) && members.count(b))
                    edges.emplace_back(static_cast<int>(e), f);
            }
    }
}

void check_resolution(const MeshSpec& spec, Mesh& mesh) {
    if (spec.h > spec.ell) {
        std::ostringstream w;
        w << "refined element size h=" << spec.h << " exceeds the phase field length scale ell="
          << spec.ell << "; the regularisation is under-resolved";
        mesh.warnings.push_back(w.str());
    }
}

// Fine lattice of spacing h around x=center, clipped to [lo, hi]; graded
// continuation outside. The crack tip (center) lands on a grid line whenever
// it is at least h/4 away from the clip bounds.
std::vector<double> crack_axis(double lo, double hi, double center, double behind,
                               double ahead, double h, double ratio, double cap) {
    std::vector<double> xs;
    const int n_b = static_cast<int>(std::floor(std::min(behind, center - lo) / h + 0.25));
    const int n_a = static_cast<int>(std::floor(std::min(ahead, hi - center) / h + 0.25));
    for (int k = -n_b; k <= n_a; ++k) xs.push_back(center + k * h);

    const double fine_lo = xs.front();
    const double fine_hi = xs.back();
    // snap to the domain edge when the gap is a sliver, otherwise grade
    if (fine_lo - lo < 0.25 * h) {
        if (fine_lo != lo) xs.front() = lo;
    } else {
        auto sizes = graded_sizes(fine_lo - lo, h, ratio, cap);
        double x = fine_lo;
        for (double s : sizes) {
            x -= s;
            xs.insert(xs.begin(), x);
        }
        xs.front() = lo;
    }
    if (hi - fine_hi < 0.25 * h) {
        if (fine_hi != hi) xs.back() = hi;
    } else {
        auto sizes = graded_sizes(hi - fine_hi, h, ratio, cap);
        double x = fine_hi;
        for (double s : sizes) {
            x += s;
            xs.push_back(x);
        }
        xs.back() = hi;
    }
    return xs;
}

// Band of n rows of height h at the bottom, graded above.
std::vector<double> band_axis(double height, double band, double h, double ratio, double cap) {
    std::vector<double> ys;
    int n_band = std::max(1, static_cast<int>(std::lround(band / h)));
    while (n_band * h > height - 1e-12 && n_band > 1) --n_band;
    for (int j = 0; j <= n_band; ++j) ys.push_back(j * h);
    if (n_band * h >= height - 1e-12) {
        ys.back() = height;
        return ys;
    }
    auto sizes = graded_sizes(height - n_band * h, h, ratio, cap);
    double y = ys.back();
    for (double s : sizes) {
        y += s;
        ys.push_back(y);
    }
    ys.back() = height;
    return ys;
}

} // namespace

double Mesh::area() const {
    double total = 0.0;
    for (std::size_t e = 0; e < elements.size(); ++e)
        for (std::size_t q = 0; q < quad.size(); ++q) {
            const auto jac = element_jacobian(*this, static_cast<int>(e),
                                              quad.points[q].x, quad.points[q].y);
            total += jac.det * quad.weights[q];
        }
    return total;
}

Mesh build_plain_rectangle_mesh(const MeshSpec& spec) {
    if (!(spec.length > 0.0 && spec.height > 0.0 && spec.h > 0.0))
        throw std::invalid_argument("plain rectangle requires positive length, height and h");
    TensorGrid grid;
    const int nx = std::max(1, static_cast<int>(std::lround(spec.length / spec.h)));
    const int ny = std::max(1, static_cast<int>(std::lround(spec.height / spec.h)));
    for (int i = 0; i <= nx; ++i) grid.xs.push_back(spec.length * i / nx);
    for (int j = 0; j <= ny; ++j) grid.ys.push_back(spec.height * j / ny);

    Mesh mesh;
    build_grid(grid, mesh);

    const double tol = 1e-9 * std::max(spec.length, spec.height);
    mesh.node_sets["left"] = select_nodes(mesh, [&](const Vec2& p) { return std::abs(p.x) < tol; });
    mesh.node_sets["right"] = select_nodes(mesh, [&](const Vec2& p) { return std::abs(p.x - spec.length) < tol; });
    mesh.node_sets["bottom"] = select_nodes(mesh, [&](const Vec2& p) { return std::abs(p.y) < tol; });
    mesh.node_sets["top"] = select_nodes(mesh, [&](const Vec2& p) { return std::abs(p.y - spec.height) < tol; });
    mesh.node_sets["ligament"] = mesh.node_sets["bottom"];
    for (auto& [name, set] : mesh.node_sets) sort_set(set, mesh);
    build_edge_sets(mesh, {"left", "right", "bottom", "top"});
    check_resolution(spec, mesh);
    validate_jacobians(mesh);
    return mesh;
}

Mesh build_rectangle_mesh(const MeshSpec& spec) {
    if (!(spec.length > 0.0 && spec.height > 0.0 && spec.h > 0.0))
        throw std::invalid_argument("mesh: dimensions and h must be positive");
    if (spec.crack >= spec.length)
        throw std::invalid_argument("mesh: crack length must be smaller than the in-plane dimension");
    if (spec.crack < 0.0)
        throw std::invalid_argument("mesh: crack length must be non-negative");

    const double cap = spec.max_cell_ell * spec.ell;
    TensorGrid grid;
    grid.xs = crack_axis(0.0, spec.length, spec.crack, spec.band_behind_ell * spec.ell,
                         spec.band_ahead_ell * spec.ell, spec.h, spec.grading, cap);
    grid.ys = band_axis(spec.height, spec.band_y_ell * spec.ell, spec.h, spec.grading, cap);

    Mesh mesh;
    build_grid(grid, mesh);

    const double tol = 1e-9 * std::max(spec.length, spec.height);
    const double a = spec.crack;
    mesh.node_sets["ligament"] = select_nodes(mesh, [&](const Vec2& p) { return std::abs(p.y) < tol; });
    mesh.node_sets["symmetry"] = select_nodes(mesh, [&](const Vec2& p) {
        return std::abs(p.y) < tol && p.x >= a - tol;
    });
    mesh.node_sets["crack_face"] = select_nodes(mesh, [&](const Vec2& p) {
        return std::abs(p.y) < tol && p.x <= a + tol;
    });
    mesh.node_sets["top"] = select_nodes(mesh, [&](const Vec2& p) {
        return std::abs(p.y - spec.height) < tol;
    });
    mesh.node_sets["left"] = select_nodes(mesh, [&](const Vec2& p) { return std::abs(p.x) < tol; });
    mesh.node_sets["right"] = select_nodes(mesh, [&](const Vec2& p) {
        return std::abs(p.x - spec.length) < tol;
    });
    if (spec.geometry == MeshGeometry::DcbQuarter)
        mesh.node_sets["load"] = mesh.node_sets["left"];
    else
        mesh.node_sets["load"] = mesh.node_sets["top"];
    for (auto& [name, set] : mesh.node_sets) sort_set(set, mesh);
    build_edge_sets(mesh, {"symmetry", "crack_face", "top", "load"});
    check_resolution(spec, mesh);
    validate_jacobians(mesh);
    return mesh;
}

Mesh build_half_disc_mesh(const MeshSpec& spec) {
    const double R = spec.outer_radius;
    if (!(R > 0.0 && spec.h > 0.0 && spec.ell > 0.0))
        throw std::invalid_argument("half disc: radius, h and ell must be positive");
    if (R < 1000.0 * spec.ell)
        throw std::invalid_argument("half disc: outer radius must satisfy R >= 1000*ell so the "
                                    "boundary layer dominates the process zone");

    const double s = spec.core_half_ell * spec.ell;
    const double cap = spec.max_cell_ell * spec.ell;

    TensorGrid grid;
    grid.xs = crack_axis(-s, s, 0.0, spec.band_behind_ell * spec.ell,
                         spec.band_ahead_ell * spec.ell, spec.h, spec.grading, cap);
    grid.ys = band_axis(s, spec.band_y_ell * spec.ell, spec.h, spec.grading, cap);

    Mesh mesh;
    build_grid(grid, mesh);

    // Perimeter chain of the core box, counter-clockwise from (s, 0) to (-s, 0):
    // alternating corner and midside node ids.
    const int nx = static_cast<int>(grid.xs.size()) - 1;
    const int ny = static_cast<int>(grid.ys.size()) - 1;
    const int n_corner = (nx + 1) * (ny + 1);
    const int n_hmid = nx * (ny + 1);
    auto corner = [&](int i, int j) { return j * (nx + 1) + i; };
    auto hmid = [&](int i, int j) { return n_corner + j * nx + i; };
    auto vmid = [&](int i, int j) { return n_corner + n_hmid + j * (nx + 1) + i; };

    std::vector<int> chain;
    for (int j = 0; j < ny; ++j) {
        chain.push_back(corner(nx, j));
        chain.push_back(vmid(nx, j));
    }
    for (int i = nx; i > 0; --i) {
        chain.push_back(corner(i, ny));
        chain.push_back(hmid(i - 1, ny));
    }
    for (int j = ny; j > 0; --j) {
        chain.push_back(corner(0, j));
        chain.push_back(vmid(0, j - 1));
    }
    chain.push_back(corner(0, 0));

    // Radial layer fractions, geometric from the cap size outward.
    std::vector<double> fractions{0.0};
    {
        auto sizes = graded_sizes(R - s, cap, spec.ring_grading, R); // uncapped growth
        double acc = 0.0;
        for (double d : sizes) {
            acc += d;
            fractions.push_back(acc / (R - s));
        }
        fractions.back() = 1.0;
    }
    const int n_layers = static_cast<int>(fractions.size()) - 1;

    // Ray data per chain entry.
    const std::size_t n_chain = chain.size();
    std::vector<Vec2> base(n_chain), target(n_chain);
    for (std::size_t k = 0; k < n_chain; ++k) {
        const Vec2 p = mesh.nodes[chain[k]];
        const double theta = std::atan2(p.y, p.x);
        base[k] = p;
        target[k] = {R * std::cos(theta), R * std::sin(theta)};
    }
    auto blend = [&](std::size_t k, double t) -> Vec2 {
        Vec2 v{(1.0 - t) * base[k].x + t * target[k].x,
               (1.0 - t) * base[k].y + t * target[k].y};
        if (std::abs(v.y) < 1e-13 * R) v.y = 0.0; // snap the crack-plane rays
        return v;
    };

    // layer nodes: ring_node[i][k] for layers i = 1..n, all chain rays
    std::vector<std::vector<int>> ring_node(n_layers + 1);
    for (std::size_t k = 0; k < n_chain; ++k) ring_node[0].push_back(chain[k]);
    for (int i = 1; i <= n_layers; ++i)
        for (std::size_t k = 0; k < n_chain; ++k) {
            mesh.nodes.push_back(blend(k, fractions[i]));
            ring_node[i].push_back(static_cast<int>(mesh.nodes.size()) - 1);
        }
    // radial midside nodes on corner rays (even chain indices)
    std::vector<std::vector<int>> radial_mid(n_layers + 1);
    for (int i = 1; i <= n_layers; ++i) {
        radial_mid[i].assign(n_chain, -1);
        const double tm = 0.5 * (fractions[i - 1] + fractions[i]);
        for (std::size_t k = 0; k < n_chain; k += 2) {
            mesh.nodes.push_back(blend(k, tm));
            radial_mid[i][k] = static_cast<int>(mesh.nodes.size()) - 1;
        }
    }
    for (int i = 1; i <= n_layers; ++i)
        for (std::size_t k = 0; k + 2 < n_chain; k += 2) {
            mesh.elements.push_back({ring_node[i - 1][k], ring_node[i][k],
                                     ring_node[i][k + 2], ring_node[i - 1][k + 2],
                                     radial_mid[i][k], ring_node[i][k + 1],
                                     radial_mid[i][k + 2], ring_node[i - 1][k + 1]});
        }

    const double tol = 1e-9 * R;
    mesh.node_sets["symmetry"] = select_nodes(mesh, [&](const Vec2& p) {
        return p.y == 0.0 && p.x > -tol;
    });
    mesh.node_sets["crack_face"] = select_nodes(mesh, [&](const Vec2& p) {
        return p.y == 0.0 && p.x < tol;
    });
    mesh.node_sets["ligament"] = select_nodes(mesh, [&](const Vec2& p) { return p.y == 0.0; });
    std::vector<int> outer;
    for (std::size_t k = 0; k < n_chain; ++k) outer.push_back(ring_node[n_layers][k]);
    mesh.node_sets["outer"] = outer;
    for (auto& [name, set] : mesh.node_sets) sort_set(set, mesh);
    build_edge_sets(mesh, {"symmetry", "crack_face", "outer"});
    check_resolution(spec, mesh);
    validate_jacobians(mesh);
    return mesh;
}

Mesh build_mesh(const MeshSpec& spec) {
    switch (spec.geometry) {
        case MeshGeometry::Rectangle: return build_plain_rectangle_mesh(spec);
        case MeshGeometry::HalfDisc: return build_half_disc_mesh(spec);
        case MeshGeometry::DcbQuarter:
        case MeshGeometry::SentHalf: return build_rectangle_mesh(spec);
    }
    throw std::invalid_argument("unknown mesh geometry");
}

void write_mesh_text(const Mesh& mesh, std::ostream& os) {
    os << "pfrac mesh: quadratic quadrilaterals\n";
    os << mesh.nodes.size() << "\n";
    char line[80];
    for (const auto& p : mesh.nodes) {
        std::snprintf(line, sizeof line, "%.17g %.17g\n", p.x, p.y);
        os << line;
    }
    os << mesh.elements.size() << "\n";
    for (const auto& e : mesh.elements) {
        for (int i = 0; i < 8; ++i) os << e[i] << (i == 7 ? '\n' : ' ');
    }
}

void write_mesh_vtk(const Mesh& mesh, std::ostream& os) {
    os << "# vtk DataFile Version 3.0\n";
    os << "pfrac mesh\n";
    os << "ASCII\nDATASET UNSTRUCTURED_GRID\n";
    os << "POINTS " << mesh.nodes.size() << " double\n";
    char line[96];
    for (const auto& p : mesh.nodes) {
        std::snprintf(line, sizeof line, "%.17g %.17g 0\n", p.x, p.y);
        os << line;
    }
    os << "CELLS " << mesh.elements.size() << " " << mesh.elements.size() * 9 << "\n";
    for (const auto& e : mesh.elements) {
        os << 8;
        for (int i = 0; i < 8; ++i) os << ' ' << e[i];
        os << '\n';
    }
    os << "CELL_TYPES " << mesh.elements.size() << "\n";
    for (std::size_t e = 0; e < mesh.elements.size(); ++e) os << 23 << '\n'; // quadratic quad
}

} // namespace pfrac
