#include "pfrac/postproc.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace pfrac {

double crack_surface(const Workspace& ws, const SolutionState& st,
                     const MaterialParams& p, ModelVariant m) {
    const double cw = dissipation_constant(m);
    const double c = 1.0 / (4.0 * cw * p.ell);
    double A = 0.0;
    for (std::size_t e = 0; e < ws.mesh().element_count(); ++e) {
        const auto& conn = ws.mesh().elements[e];
        for (int q = 0; q < ws.gauss_per_element(); ++q) {
            const auto& gp = ws.gp(static_cast<int>(e), q);
            double phi = 0.0, gx = 0.0, gy = 0.0;
            for (int i = 0; i < 8; ++i) {
                phi += gp.N[i] * st.phi[conn[i]];
                gx += gp.dNdx[i][0] * st.phi[conn[i]];
                gy += gp.dNdx[i][1] * st.phi[conn[i]];
            }
            phi = std::min(1.0, std::max(0.0, phi));
            const double w = local_dissipation(phi, m).w;
            A += gp.weight_detJ * c * (w + p.ell * p.ell * (gx * gx + gy * gy));
        }
    }
    return A;
}

std::optional<double> crack_tip_position(const Mesh& mesh, const Eigen::VectorXd& phi,
                                         const std::vector<int>& ligament_nodes,
                                         double threshold) {
    // nodes are ordered by x; scan from the far end for the last crossing
    for (std::size_t k = ligament_nodes.size(); k-- > 0;) {
        const int n = ligament_nodes[k];
        if (phi[n] >= threshold) {
            if (k + 1 >= ligament_nodes.size()) return mesh.nodes[n].x;
            const int n1 = ligament_nodes[k + 1];
            const double x0 = mesh.nodes[n].x, x1 = mesh.nodes[n1].x;
            const double f0 = phi[n], f1 = phi[n1];
            if (f0 == f1) return x0;
            return x0 + (x1 - x0) * (f0 - threshold) / (f0 - f1);
        }
    }
    return std::nullopt;
}

double reaction_force(const Workspace& ws, const SolutionState& st, const MaterialParams& p,
                      ModelVariant m, const std::vector<int>& nodes, int component) {
    if (nodes.empty())
        throw std::invalid_argument("reaction_force: node set is empty");
    if (component != 0 && component != 1)
        throw std::invalid_argument("reaction_force: component must be 0 or 1");
    AssembleOptions opts;
    opts.with_matrices = false;
    const auto sys = assemble_global(ws, st, p, m, opts);
    double total = 0.0;
    for (int n : nodes) total += sys.Ru[2 * n + component];
    return total;
}

std::optional<Initiation> detect_initiation(const std::vector<LoadStepRecord>& records,
                                            const MaterialParams& p, const InitiationRule& rule) {
    if (records.empty()) return std::nullopt;
    const double threshold = rule.extension_threshold > 0.0 ? rule.extension_threshold : p.ell;
    const double A0 = records.front().crack_surface;
    for (std::size_t k = 1; k < records.size(); ++k) {
        const double da = records[k].crack_surface - A0;
        if (da >= threshold) {
            const double da_prev = records[k - 1].crack_surface - A0;
            const double t = (da > da_prev) ? (threshold - da_prev) / (da - da_prev) : 1.0;
            const double load = records[k - 1].load_factor +
                                t * (records[k].load_factor - records[k - 1].load_factor);
            // load factor read as a stress intensity; Irwin in plane strain
            const double G = (1.0 - p.nu * p.nu) * load * load / p.E;
            return Initiation{load, G};
        }
    }
    return std::nullopt;
}

double boundary_normal_gradient_norm(const Workspace& ws, const Eigen::VectorXd& phi,
                                     const std::vector<std::pair<int, int>>& edges) {
    const Mesh& mesh = ws.mesh();
    const double g = 1.0 / std::sqrt(3.0);
    double total = 0.0;
    for (const auto& [e, face] : edges) {
        const auto& conn = mesh.elements[e];
        for (double t : {-g, g}) {
            // parent coordinates along the face, corner k -> corner k+1
            double xi = 0.0, eta = 0.0, dxi = 0.0, deta = 0.0;
            switch (face) {
                case 0: xi = t; eta = -1.0; dxi = 1.0; break;
                case 1: xi = 1.0; eta = t; deta = 1.0; break;
                case 2: xi = -t; eta = 1.0; dxi = -1.0; break;
                case 3: xi = -1.0; eta = -t; deta = -1.0; break;
            }
            const auto s = shape_functions(xi, eta);
            double J[2][2] = {{0, 0}, {0, 0}};
            for (int i = 0; i < 8; ++i) {
                const Vec2& pnode = mesh.nodes[conn[i]];
                J[0][0] += s.dN[i][0] * pnode.x;
                J[0][1] += s.dN[i][0] * pnode.y;
                J[1][0] += s.dN[i][1] * pnode.x;
                J[1][1] += s.dN[i][1] * pnode.y;
            }
            const double det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
            const double inv = 1.0 / det;
            double gx = 0.0, gy = 0.0;
            for (int i = 0; i < 8; ++i) {
                const double dNdx = inv * (J[1][1] * s.dN[i][0] - J[0][1] * s.dN[i][1]);
                const double dNdy = inv * (-J[1][0] * s.dN[i][0] + J[0][0] * s.dN[i][1]);
                gx += dNdx * phi[conn[i]];
                gy += dNdy * phi[conn[i]];
            }
            // tangent along the face, outward normal to its right (CCW element)
            const double tx = J[0][0] * dxi + J[1][0] * deta;
            const double ty = J[0][1] * dxi + J[1][1] * deta;
            const double len = std::hypot(tx, ty);
            const double nx = ty / len, ny = -tx / len;
            total += std::abs(gx * nx + gy * ny) * len; // weight 1 per point
        }
    }
    return total;
}

} // namespace pfrac
