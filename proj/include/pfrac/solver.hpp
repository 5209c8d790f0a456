#ifndef PFRAC_SOLVER_HPP
#define PFRAC_SOLVER_HPP

#include <Eigen/Sparse>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pfrac/assembly.hpp"

namespace pfrac {

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SolveScheme { BfgsMonolithic, Staggered };

std::string to_string(SolveScheme s);
SolveScheme scheme_from_string(const std::string& s);

struct SolverConfig {
    SolveScheme scheme = SolveScheme::BfgsMonolithic;
    double tolerance = 1e-6;        // relative residual tolerance
    int max_iterations = 200;       // BFGS iterations per step
    int max_staggered_passes = 500;
    std::vector<double> load_increments;
    double cutback = 0.5;
    double min_increment = 1e-9;
    int lbfgs_memory = 25;
    int refresh_every = 25;         // re-factorise the block stiffness after this many iterations
    int max_line_search = 10;
    bool verbose = false;
    bool trace_energy = false;
};

struct StepStats {
    int iterations = 0;
    double res_u = 0.0;
    double res_phi = 0.0;
    bool converged = false;
    Eigen::VectorXd raw_Ru;  // unconstrained residual at the accepted state
    // staggered diagnostics: energies sampled before/after each half pass
    std::vector<double> energy_trace_u;
    std::vector<double> energy_trace_phi;
};

struct LoadStepRecord {
    int step = 0;
    double load_factor = 0.0;
    int iterations = 0;
    double res_u = 0.0;
    double res_phi = 0.0;
    double reaction = 0.0;
    double crack_surface = 0.0;
    double max_phi_ligament = 0.0;
};

// Dirichlet data as a function of the load factor, plus bookkeeping for the
// per-step outputs.
struct BoundaryProgram {
    std::function<std::vector<Constraint>(double)> constraints_at;
    std::vector<int> reaction_nodes;
    int reaction_component = 1;
    std::vector<int> ligament_nodes;
    // half/quarter models integrate only part of the smeared crack; records
    // carry the physical crack surface
    double crack_area_multiplier = 1.0;
    // called after each accepted step, before the stop rule
    std::function<void(const LoadStepRecord&, const SolutionState&)> on_step;
    // returning true ends the program early (still counts as completed)
    std::function<bool(const LoadStepRecord&, const SolutionState&)> stop_when;
};

struct RunResult {
    std::vector<LoadStepRecord> records;
    SolutionState state;
    bool completed = false;
    std::string message;
};

// Direct solve of a symmetric positive definite sparse system.
Eigen::VectorXd sparse_solve(const SparseMat& K, const Eigen::VectorXd& rhs);

// One load increment with the monolithic quasi-Newton scheme: limited-memory
// BFGS on the coupled dof vector, preconditioned by the factorised
// block-diagonal stiffness assembled at step start.
StepStats solve_step_bfgs(const Workspace& ws, SolutionState& st, const MaterialParams& p,
                          ModelVariant m, const std::vector<Constraint>& constraints,
                          const SolverConfig& cfg);

// One load increment by alternate minimisation: exact u solve at frozen phi,
// exact phi solve at frozen u, repeated until both residuals and the
// staggered increments meet the tolerance.
StepStats solve_step_staggered(const Workspace& ws, SolutionState& st, const MaterialParams& p,
                               ModelVariant m, const std::vector<Constraint>& constraints,
                               const SolverConfig& cfg);

// Sequential load stepping with adaptive cutback; the history field advances
// once per accepted increment.
RunResult run_load_program(const Workspace& ws, const MaterialParams& p, ModelVariant m,
                           const IrreversibilityMode& mode, const BoundaryProgram& program,
                           const SolverConfig& cfg, SolutionState initial);

} // namespace pfrac

#endif
