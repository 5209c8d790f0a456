#include "pfrac/assembly.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pfrac {

namespace {

GaussPointData evaluate_gauss_point(const Mesh& mesh, int e, const Vec2& pt, double weight) {
    const auto s = shape_functions(pt.x, pt.y);
    double J[2][2] = {{0, 0}, {0, 0}};
    GaussPointData gp{};
    for (int i = 0; i < 8; ++i) {
        const Vec2& p = mesh.nodes[mesh.elements[e][i]];
        J[0][0] += s.dN[i][0] * p.x;
        J[0][1] += s.dN[i][0] * p.y;
        J[1][0] += s.dN[i][1] * p.x;
        J[1][1] += s.dN[i][1] * p.y;
        gp.position.x += s.N[i] * p.x;
        gp.position.y += s.N[i] * p.y;
    }
    const double det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
    if (!(det > 0.0)) {
        std::ostringstream msg;
        msg << "non-positive Jacobian in element " << e;
        throw std::runtime_error(msg.str());
    }
    const double inv = 1.0 / det;
    // with J = [[x_xi, y_xi], [x_eta, y_eta]]:
    // dN/dx = (y_eta N_xi - y_xi N_eta)/det, dN/dy = (x_xi N_eta - x_eta N_xi)/det
    for (int i = 0; i < 8; ++i) {
        gp.dNdx[i][0] = inv * (J[1][1] * s.dN[i][0] - J[0][1] * s.dN[i][1]);
        gp.dNdx[i][1] = inv * (-J[1][0] * s.dN[i][0] + J[0][0] * s.dN[i][1]);
    }
    gp.N = s.N;
    gp.weight_detJ = det * weight;
    return gp;
}

// Strain (Voigt xx, yy, engineering xy) and phase-field quantities at one
// Gauss point.
struct PointFields {
    double eps[3];
    double phi;
    double grad_phi[2];
};

PointFields interpolate(const GaussPointData& gp, const std::array<int, 8>& conn,
                        const Eigen::VectorXd& u, const Eigen::VectorXd& phi) {
    PointFields f{};
    for (int i = 0; i < 8; ++i) {
        const int n = conn[i];
        const double ux = u[2 * n], uy = u[2 * n + 1];
        f.eps[0] += gp.dNdx[i][0] * ux;
        f.eps[1] += gp.dNdx[i][1] * uy;
        f.eps[2] += gp.dNdx[i][1] * ux + gp.dNdx[i][0] * uy;
        f.phi += gp.N[i] * phi[n];
        f.grad_phi[0] += gp.dNdx[i][0] * phi[n];
        f.grad_phi[1] += gp.dNdx[i][1] * phi[n];
    }
    // the interpolant may overshoot the nodal bounds; the constitutive forms
    // are polynomials, so they are evaluated as-is. Clamping here would make
    // the residual inconsistent with the tangent and the energy.
    return f;
}

// polynomial forms without the public-interface domain check; quadrature
// points may fall slightly outside [0,1] even with clamped nodal values
Degradation raw_degradation(double phi) {
    const double r = 1.0 - phi;
    return {r * r, -2.0 * r, 2.0};
}

LocalDissipation raw_dissipation(double phi, ModelVariant m) {
    if (m == ModelVariant::AT1) return {phi, 1.0, 0.0, 2.0 / 3.0};
    return {phi * phi, 2.0 * phi, 2.0, 0.5};
}

} // namespace

Workspace::Workspace(const Mesh& mesh) : Workspace(mesh, mesh.quad) {}

Workspace::Workspace(const Mesh& mesh, const QuadratureRule& rule)
    : mesh_(&mesh), rule_(rule) {
    cache_.reserve(mesh.element_count() * rule_.size());
    for (std::size_t e = 0; e < mesh.element_count(); ++e)
        for (std::size_t q = 0; q < rule_.size(); ++q)
            cache_.push_back(evaluate_gauss_point(mesh, static_cast<int>(e),
                                                  rule_.points[q], rule_.weights[q]));
}

SolutionState SolutionState::create(const Workspace& ws, const MaterialParams& p, ModelVariant m) {
    SolutionState st;
    st.u = Eigen::VectorXd::Zero(ws.u_dof_count());
    st.phi = Eigen::VectorXd::Zero(ws.phi_dof_count());
    // held strictly inside the exact onset value: phi = 0 then satisfies the
    // bound conditions with a strict sign, which keeps the undamaged region
    // stably at the bound instead of flickering around it
    st.h_floor = (1.0 - 1e-9) * driving_force_floor(p, m);
    st.history = Eigen::VectorXd::Constant(ws.total_gauss_points(), st.h_floor);
    st.psi0 = Eigen::VectorXd::Zero(ws.total_gauss_points());
    return st;
}

IrreversibilityMode IrreversibilityMode::thresholded(double t) {
    if (!(t > 0.0 && t <= 1.0))
        throw std::invalid_argument("irreversibility threshold must lie in (0, 1]");
    return {Kind::Thresholded, t};
}

ElementVectors element_residuals(const Workspace& ws, int e, const SolutionState& st,
                                 const MaterialParams& p, ModelVariant m) {
    ElementVectors out;
    out.Ru.setZero();
    out.Rp.setZero();
    const auto& conn = ws.mesh().elements[e];
    const Eigen::Matrix3d C0 = elasticity_tensor(p.E, p.nu);
    const double cw = dissipation_constant(m);
    const double cg = p.Gc / (2.0 * cw * p.ell);

    for (int q = 0; q < ws.gauss_per_element(); ++q) {
        const auto& gp = ws.gp(e, q);
        const auto f = interpolate(gp, conn, st.u, st.phi);
        const double H = st.history[ws.gp_index(e, q)];

        const auto deg = raw_degradation(f.phi);
        const auto dis = raw_dissipation(f.phi, m);
        const double gk = deg.g + p.kappa;

        double s0[3];
        for (int r = 0; r < 3; ++r)
            s0[r] = C0(r, 0) * f.eps[0] + C0(r, 1) * f.eps[1] + C0(r, 2) * f.eps[2];

        const double wj = gp.weight_detJ;
        for (int i = 0; i < 8; ++i) {
            const double bx = gp.dNdx[i][0], by = gp.dNdx[i][1];
            out.Ru[2 * i]     += wj * gk * (bx * s0[0] + by * s0[2]);
            out.Ru[2 * i + 1] += wj * gk * (by * s0[1] + bx * s0[2]);
            out.Rp[i] += wj * (deg.dg * gp.N[i] * H +
                               cg * (0.5 * dis.dw * gp.N[i] +
                                     p.ell * p.ell *
                                         (bx * f.grad_phi[0] + by * f.grad_phi[1])));
        }
    }
    if (!out.Ru.allFinite() || !out.Rp.allFinite()) {
        std::ostringstream msg;
        msg << "non-finite residual in element " << e;
        throw std::runtime_error(msg.str());
    }
    return out;
}

ElementMatrices element_stiffness(const Workspace& ws, int e, const SolutionState& st,
                                  const MaterialParams& p, ModelVariant m) {
    ElementMatrices out;
    out.Kuu.setZero();
    out.Kpp.setZero();
    const auto& conn = ws.mesh().elements[e];
    const Eigen::Matrix3d C0 = elasticity_tensor(p.E, p.nu);
    const double cw = dissipation_constant(m);

    for (int q = 0; q < ws.gauss_per_element(); ++q) {
        const auto& gp = ws.gp(e, q);
        const auto f = interpolate(gp, conn, st.u, st.phi);
        const double H = st.history[ws.gp_index(e, q)];

        const auto deg = raw_degradation(f.phi);
        const auto dis = raw_dissipation(f.phi, m);
        const double gk = deg.g + p.kappa;
        const double wj = gp.weight_detJ;

        const double mass_coeff = deg.ddg * H + p.Gc / (4.0 * cw * p.ell) * dis.ddw;
        const double grad_coeff = p.Gc * p.ell / (2.0 * cw);

        // C0 * B_j columns, then contract with B_i
        for (int j = 0; j < 8; ++j) {
            const double bxj = gp.dNdx[j][0], byj = gp.dNdx[j][1];
            // column for ux_j: strain (bxj, 0, byj); column for uy_j: (0, byj, bxj)
            double cx[3], cy[3];
            for (int r = 0; r < 3; ++r) {
                cx[r] = C0(r, 0) * bxj + C0(r, 2) * byj;
                cy[r] = C0(r, 1) * byj + C0(r, 2) * bxj;
            }
            for (int i = 0; i < 8; ++i) {
                const double bxi = gp.dNdx[i][0], byi = gp.dNdx[i][1];
                out.Kuu(2 * i, 2 * j)         += wj * gk * (bxi * cx[0] + byi * cx[2]);
                out.Kuu(2 * i, 2 * j + 1)     += wj * gk * (bxi * cy[0] + byi * cy[2]);
                out.Kuu(2 * i + 1, 2 * j)     += wj * gk * (byi * cx[1] + bxi * cx[2]);
                out.Kuu(2 * i + 1, 2 * j + 1) += wj * gk * (byi * cy[1] + bxi * cy[2]);
                out.Kpp(i, j) += wj * (mass_coeff * gp.N[i] * gp.N[j] +
                                       grad_coeff * (bxi * bxj + byi * byj));
            }
        }
    }
    if (!out.Kuu.allFinite() || !out.Kpp.allFinite()) {
        std::ostringstream msg;
        msg << "non-finite stiffness in element " << e;
        throw std::runtime_error(msg.str());
    }
    return out;
}

GlobalSystem assemble_global(const Workspace& ws, const SolutionState& st,
                             const MaterialParams& p, ModelVariant m,
                             const AssembleOptions& opts) {
    const auto& mesh = ws.mesh();
    if (st.u.size() != static_cast<Eigen::Index>(ws.u_dof_count()) ||
        st.phi.size() != static_cast<Eigen::Index>(ws.phi_dof_count()) ||
        st.history.size() != static_cast<Eigen::Index>(ws.total_gauss_points()))
        throw std::invalid_argument("assemble_global: state dimensions do not match the mesh");

    GlobalSystem sys;
    sys.Ru = Eigen::VectorXd::Zero(ws.u_dof_count());
    sys.Rp = Eigen::VectorXd::Zero(ws.phi_dof_count());

    std::vector<Eigen::Triplet<double>> tu, tp;
    if (opts.with_matrices) {
        tu.reserve(mesh.element_count() * 16 * 16);
        tp.reserve(mesh.element_count() * 8 * 8);
    }

    for (std::size_t e = 0; e < mesh.element_count(); ++e) {
        const auto& conn = mesh.elements[e];
        const auto rv = element_residuals(ws, static_cast<int>(e), st, p, m);
        for (int i = 0; i < 8; ++i) {
            sys.Ru[2 * conn[i]] += rv.Ru[2 * i];
            sys.Ru[2 * conn[i] + 1] += rv.Ru[2 * i + 1];
            sys.Rp[conn[i]] += rv.Rp[i];
        }
        if (opts.with_matrices) {
            const auto km = element_stiffness(ws, static_cast<int>(e), st, p, m);
            for (int i = 0; i < 8; ++i)
                for (int j = 0; j < 8; ++j) {
                    tp.emplace_back(conn[i], conn[j], km.Kpp(i, j));
                    for (int ci = 0; ci < 2; ++ci)
                        for (int cj = 0; cj < 2; ++cj)
                            tu.emplace_back(2 * conn[i] + ci, 2 * conn[j] + cj,
                                            km.Kuu(2 * i + ci, 2 * j + cj));
                }
        }
    }
    if (opts.with_matrices) {
        sys.Kuu.resize(ws.u_dof_count(), ws.u_dof_count());
        sys.Kuu.setFromTriplets(tu.begin(), tu.end());
        sys.Kpp.resize(ws.phi_dof_count(), ws.phi_dof_count());
        sys.Kpp.setFromTriplets(tp.begin(), tp.end());
    }
    return sys;
}

void apply_dirichlet(SparseMat& K, Eigen::VectorXd& rhs, std::vector<Constraint> constraints) {
    std::map<int, double> fixed;
    for (const auto& c : constraints) {
        auto [it, inserted] = fixed.emplace(c.dof, c.value);
        if (!inserted && it->second != c.value)
            throw std::invalid_argument("apply_dirichlet: conflicting duplicate constraints on dof " +
                                        std::to_string(c.dof));
    }
    if (fixed.empty()) return;
    if (fixed.rbegin()->first >= K.rows() || fixed.begin()->first < 0)
        throw std::invalid_argument("apply_dirichlet: constraint dof out of range");

    Eigen::VectorXd prescribed = Eigen::VectorXd::Zero(K.rows());
    for (const auto& [dof, value] : fixed) prescribed[dof] = value;
    rhs.noalias() -= K * prescribed;

    std::vector<char> mask(K.rows(), 0);
    for (const auto& [dof, value] : fixed) mask[dof] = 1;
    for (int k = 0; k < K.outerSize(); ++k)
        for (SparseMat::InnerIterator it(K, k); it; ++it) {
            if (!mask[it.row()] && !mask[it.col()]) continue;
            it.valueRef() = (it.row() == it.col()) ? 1.0 : 0.0;
        }
    for (const auto& [dof, value] : fixed) rhs[dof] = value;
}

Eigen::VectorXd compute_driving_energy(const Workspace& ws, const SolutionState& st,
                                       const MaterialParams& p) {
    const Eigen::Matrix3d C0 = elasticity_tensor(p.E, p.nu);
    Eigen::VectorXd psi(ws.total_gauss_points());
    for (std::size_t e = 0; e < ws.mesh().element_count(); ++e) {
        const auto& conn = ws.mesh().elements[e];
        for (int q = 0; q < ws.gauss_per_element(); ++q) {
            const auto& gp = ws.gp(static_cast<int>(e), q);
            const auto f = interpolate(gp, conn, st.u, st.phi);
            double s0[3];
            for (int r = 0; r < 3; ++r)
                s0[r] = C0(r, 0) * f.eps[0] + C0(r, 1) * f.eps[1] + C0(r, 2) * f.eps[2];
            psi[ws.gp_index(static_cast<int>(e), q)] =
                0.5 * (f.eps[0] * s0[0] + f.eps[1] * s0[1] + f.eps[2] * s0[2]);
        }
    }
    return psi;
}

Eigen::VectorXd phi_at_gauss_points(const Workspace& ws, const Eigen::VectorXd& phi) {
    Eigen::VectorXd out(ws.total_gauss_points());
    for (std::size_t e = 0; e < ws.mesh().element_count(); ++e) {
        const auto& conn = ws.mesh().elements[e];
        for (int q = 0; q < ws.gauss_per_element(); ++q) {
            const auto& gp = ws.gp(static_cast<int>(e), q);
            double v = 0.0;
            for (int i = 0; i < 8; ++i) v += gp.N[i] * phi[conn[i]];
            out[ws.gp_index(static_cast<int>(e), q)] = v;
        }
    }
    return out;
}

void update_history(const Eigen::VectorXd& psi0_new, SolutionState& st,
                    const IrreversibilityMode& mode, const Workspace& ws) {
    if (psi0_new.size() != st.history.size())
        throw std::invalid_argument("update_history: psi0 size mismatch");
    if ((psi0_new.array() < 0.0).any())
        throw std::invalid_argument("update_history: negative driving energy density");

    if (mode.kind == IrreversibilityMode::Kind::Always) {
        for (Eigen::Index g = 0; g < st.history.size(); ++g)
            st.history[g] = std::max(st.history[g], std::max(psi0_new[g], st.h_floor));
    } else {
        const Eigen::VectorXd phi_gp = phi_at_gauss_points(ws, st.phi);
        for (Eigen::Index g = 0; g < st.history.size(); ++g) {
            const double cand = std::max(psi0_new[g], st.h_floor);
            st.history[g] = (phi_gp[g] >= mode.phi_threshold)
                                ? std::max(st.history[g], cand)
                                : cand;
        }
    }
    st.psi0 = psi0_new;
}

double total_energy(const Workspace& ws, const SolutionState& st,
                    const MaterialParams& p, ModelVariant m) {
    const Eigen::Matrix3d C0 = elasticity_tensor(p.E, p.nu);
    const double cw = dissipation_constant(m);
    double total = 0.0;
    for (std::size_t e = 0; e < ws.mesh().element_count(); ++e) {
        const auto& conn = ws.mesh().elements[e];
        for (int q = 0; q < ws.gauss_per_element(); ++q) {
            const auto& gp = ws.gp(static_cast<int>(e), q);
            const auto f = interpolate(gp, conn, st.u, st.phi);
            double s0[3];
            for (int r = 0; r < 3; ++r)
                s0[r] = C0(r, 0) * f.eps[0] + C0(r, 1) * f.eps[1] + C0(r, 2) * f.eps[2];
            const double psi0 = 0.5 * (f.eps[0] * s0[0] + f.eps[1] * s0[1] + f.eps[2] * s0[2]);
            const auto deg = raw_degradation(f.phi);
            const auto dis = raw_dissipation(f.phi, m);
            const double grad2 = f.grad_phi[0] * f.grad_phi[0] + f.grad_phi[1] * f.grad_phi[1];
            total += gp.weight_detJ * ((deg.g + p.kappa) * psi0 +
                                       p.Gc / (4.0 * cw * p.ell) *
                                           (dis.w + p.ell * p.ell * grad2));
        }
    }
    return total;
}

double characteristic_phase_force(const Workspace& ws, const MaterialParams& p, ModelVariant m) {
    const double cw = dissipation_constant(m);
    const double c = p.Gc / (4.0 * cw * p.ell);
    Eigen::VectorXd v = Eigen::VectorXd::Zero(ws.phi_dof_count());
    for (std::size_t e = 0; e < ws.mesh().element_count(); ++e) {
        const auto& conn = ws.mesh().elements[e];
        for (int q = 0; q < ws.gauss_per_element(); ++q) {
            const auto& gp = ws.gp(static_cast<int>(e), q);
            for (int i = 0; i < 8; ++i)
                v[conn[i]] += c * std::abs(gp.N[i]) * gp.weight_detJ;
        }
    }
    return v.norm();
}

double phase_subproblem_energy(const Workspace& ws, const SolutionState& st,
                               const MaterialParams& p, ModelVariant m) {
    const double cw = dissipation_constant(m);
    double total = 0.0;
    for (std::size_t e = 0; e < ws.mesh().element_count(); ++e) {
        const auto& conn = ws.mesh().elements[e];
        for (int q = 0; q < ws.gauss_per_element(); ++q) {
            const auto& gp = ws.gp(static_cast<int>(e), q);
            const auto f = interpolate(gp, conn, st.u, st.phi);
            const auto deg = raw_degradation(f.phi);
            const auto dis = raw_dissipation(f.phi, m);
            const double grad2 = f.grad_phi[0] * f.grad_phi[0] + f.grad_phi[1] * f.grad_phi[1];
            total += gp.weight_detJ *
                     (deg.g * st.history[ws.gp_index(static_cast<int>(e), q)] +
                      p.Gc / (4.0 * cw * p.ell) * (dis.w + p.ell * p.ell * grad2));
        }
    }
    return total;
}

} // namespace pfrac
