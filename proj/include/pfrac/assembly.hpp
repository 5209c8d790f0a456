#ifndef PFRAC_ASSEMBLY_HPP
#define PFRAC_ASSEMBLY_HPP

#include <Eigen/Dense>
#include <Eigen/Sparse>
#include <vector>

#include "pfrac/material.hpp"
#include "pfrac/mesh.hpp"

namespace pfrac {

using SparseMat = Eigen::SparseMatrix<double>;

// Per-Gauss-point geometry cache. Element loops evaluate constitutive terms
// against this; the mesh itself is never touched after construction.
struct GaussPointData {
    std::array<double, 8> N;
    std::array<std::array<double, 2>, 8> dNdx;
    double weight_detJ = 0.0;
    Vec2 position;
};

class Workspace {
  public:
    explicit Workspace(const Mesh& mesh);
    Workspace(const Mesh& mesh, const QuadratureRule& rule);

    const Mesh& mesh() const { return *mesh_; }
    const QuadratureRule& rule() const { return rule_; }
    int gauss_per_element() const { return static_cast<int>(rule_.size()); }
    std::size_t total_gauss_points() const { return cache_.size(); }
    int gp_index(int e, int q) const { return e * gauss_per_element() + q; }
    const GaussPointData& gp(int e, int q) const { return cache_[gp_index(e, q)]; }

    std::size_t u_dof_count() const { return 2 * mesh_->node_count(); }
    std::size_t phi_dof_count() const { return mesh_->node_count(); }

  private:
    const Mesh* mesh_;
    QuadratureRule rule_;
    std::vector<GaussPointData> cache_;
};

// Nodal fields plus the per-Gauss-point history of the crack driving force.
// h_floor is the AT1 driving-force floor (zero for AT2); history never drops
// below it so the phase-field operator stays positive definite.
struct SolutionState {
    Eigen::VectorXd u;
    Eigen::VectorXd phi;
    Eigen::VectorXd history;
    Eigen::VectorXd psi0;
    double h_floor = 0.0;

    static SolutionState create(const Workspace& ws, const MaterialParams& p, ModelVariant m);
};

struct IrreversibilityMode {
    enum class Kind { Always, Thresholded };
    Kind kind = Kind::Always;
    double phi_threshold = 0.95;

    static IrreversibilityMode always() { return {Kind::Always, 0.95}; }
    static IrreversibilityMode thresholded(double t = 0.95);
};

struct Constraint {
    int dof = 0;
    double value = 0.0;
};

struct GlobalSystem {
    SparseMat Kuu;
    SparseMat Kpp;
    Eigen::VectorXd Ru;
    Eigen::VectorXd Rp;
};

struct ElementVectors {
    Eigen::Matrix<double, 16, 1> Ru;
    Eigen::Matrix<double, 8, 1> Rp;
};

struct ElementMatrices {
    Eigen::Matrix<double, 16, 16> Kuu;
    Eigen::Matrix<double, 8, 8> Kpp;
};

// Residuals of the coupled weak form for one element, Gauss-point evaluated
// with the history field frozen.
ElementVectors element_residuals(const Workspace& ws, int e, const SolutionState& st,
                                 const MaterialParams& p, ModelVariant m);

// Consistent tangent blocks; both symmetric, no coupling block.
ElementMatrices element_stiffness(const Workspace& ws, int e, const SolutionState& st,
                                  const MaterialParams& p, ModelVariant m);

struct AssembleOptions {
    bool with_matrices = true;
};

GlobalSystem assemble_global(const Workspace& ws, const SolutionState& st,
                             const MaterialParams& p, ModelVariant m,
                             const AssembleOptions& opts = {});

// Symmetric elimination: rows/columns of constrained dofs are zeroed, the
// diagonal is set to 1, and the right-hand side absorbs K*prescribed. rhs on
// entry is the residual; on exit rhs[c] holds the prescribed value.
void apply_dirichlet(SparseMat& K, Eigen::VectorXd& rhs, std::vector<Constraint> constraints);

// Undamaged elastic energy density at every Gauss point, 0.5 * eps : C0 : eps.
Eigen::VectorXd compute_driving_energy(const Workspace& ws, const SolutionState& st,
                                       const MaterialParams& p);

// History update once per accepted increment. Always-mode takes the running
// maximum; thresholded mode keeps the maximum only where the interpolated
// phase field exceeds the threshold, letting profiles relax elsewhere.
void update_history(const Eigen::VectorXd& psi0_new, SolutionState& st,
                    const IrreversibilityMode& mode, const Workspace& ws);

// Interpolated phase field at every Gauss point.
Eigen::VectorXd phi_at_gauss_points(const Workspace& ws, const Eigen::VectorXd& phi);

// Discrete total energy with the live elastic energy density:
// sum of (g+kappa) psi0(u) + Gc * gamma(phi). Matches the assembled residuals
// as a gradient whenever history == psi0.
double total_energy(const Workspace& ws, const SolutionState& st,
                    const MaterialParams& p, ModelVariant m);

// Objective of the phase-field subproblem at frozen u: g(phi) H + Gc gamma.
double phase_subproblem_energy(const Workspace& ws, const SolutionState& st,
                               const MaterialParams& p, ModelVariant m);

// Characteristic magnitude of nodal phase-field forces (the local
// dissipation source integrated with |N|), used as an absolute residual
// scale by the solvers.
double characteristic_phase_force(const Workspace& ws, const MaterialParams& p, ModelVariant m);

} // namespace pfrac

#endif
