#include "pfrac/solver.hpp"
#include <cstdlib>

#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <deque>

#include "pfrac/postproc.hpp"

namespace pfrac {

std::string to_string(SolveScheme s) {
    return s == SolveScheme::BfgsMonolithic ? "bfgs" : "staggered";
}

SolveScheme scheme_from_string(const std::string& s) {
    if (s == "bfgs" || s == "bfgs_monolithic" || s == "monolithic") return SolveScheme::BfgsMonolithic;
    if (s == "staggered") return SolveScheme::Staggered;
    throw std::invalid_argument("unknown solver scheme '" + s + "'");
}

namespace {

using Cholesky = Eigen::SimplicialLDLT<SparseMat>;

void clamp_phase(Eigen::VectorXd& phi) {
    for (Eigen::Index i = 0; i < phi.size(); ++i)
        phi[i] = std::min(1.0, std::max(0.0, phi[i]));
}

// KKT-projected phase residual: entries pushing against an active bound do
// not count as out-of-balance.
Eigen::VectorXd project_phase_residual(const Eigen::VectorXd& Rp, const Eigen::VectorXd& phi) {
    Eigen::VectorXd out = Rp;
    constexpr double eps = 1e-12;
    for (Eigen::Index i = 0; i < out.size(); ++i) {
        if (phi[i] <= eps && out[i] > 0.0) out[i] = 0.0;
        if (phi[i] >= 1.0 - eps && out[i] < 0.0) out[i] = 0.0;
    }
    return out;
}

void zero_constrained(Eigen::VectorXd& v, const std::vector<Constraint>& constraints) {
    for (const auto& c : constraints) v[c.dof] = 0.0;
}

void impose(SolutionState& st, const std::vector<Constraint>& constraints) {
    for (const auto& c : constraints) st.u[c.dof] = c.value;
}

std::vector<Constraint> homogeneous(const std::vector<Constraint>& constraints) {
    std::vector<Constraint> out = constraints;
    for (auto& c : out) c.value = 0.0;
    return out;
}

struct ResidualPair {
    Eigen::VectorXd Ru;      // constrained entries zeroed
    Eigen::VectorXd Rp;      // KKT projected
    Eigen::VectorXd raw_Ru;  // as assembled
    Eigen::VectorXd raw_Rp;
    double norm_u = 0.0;
    double norm_p = 0.0;
};

ResidualPair evaluate_residuals(const Workspace& ws, const SolutionState& st,
                                const MaterialParams& p, ModelVariant m,
                                const std::vector<Constraint>& constraints) {
    AssembleOptions opts;
    opts.with_matrices = false;
    auto sys = assemble_global(ws, st, p, m, opts);
    ResidualPair r;
    r.raw_Ru = sys.Ru;
    r.raw_Rp = sys.Rp;
    r.Ru = std::move(sys.Ru);
    zero_constrained(r.Ru, constraints);
    r.Rp = project_phase_residual(sys.Rp, st.phi);
    r.norm_u = r.Ru.norm();
    r.norm_p = r.Rp.norm();
    return r;
}

// Nodes pressed against a phase-field bound whose residual pushes further
// out. These join the Dirichlet set of the step until the next refresh, which
// keeps the clamped iteration from cycling (AT1 develops a wide phi = 0
// active region around a crack).
std::vector<Constraint> bound_active_set(const Eigen::VectorXd& phi,
                                         const Eigen::VectorXd& rp_raw) {
    std::vector<Constraint> active;
    constexpr double eps = 1e-12;
    for (Eigen::Index i = 0; i < phi.size(); ++i) {
        if (phi[i] <= eps && rp_raw[i] > 0.0) active.push_back({static_cast<int>(i), 0.0});
        if (phi[i] >= 1.0 - eps && rp_raw[i] < 0.0) active.push_back({static_cast<int>(i), 1.0});
    }
    return active;
}

// Block-diagonal stiffness of the coupled system, factorised with the
// Dirichlet rows (and the phase-field bound active set) eliminated. K_phiphi
// does not change while the history is frozen, so active-set updates re-use
// the assembled matrix and only re-factor the phase block.
struct BlockFactor {
    Cholesky uu;
    Cholesky pp;
    SparseMat Kpp_clean;
    std::vector<Constraint> active; // phi nodes frozen at a bound

    void factor_full(const Workspace& ws, const SolutionState& st, const MaterialParams& p,
                     ModelVariant m, const std::vector<Constraint>& constraints,
                     const Eigen::VectorXd& rp_raw) {
        auto sys = assemble_global(ws, st, p, m);
        Eigen::VectorXd dummy = Eigen::VectorXd::Zero(sys.Kuu.rows());
        apply_dirichlet(sys.Kuu, dummy, homogeneous(constraints));
        uu.compute(sys.Kuu);
        if (uu.info() != Eigen::Success)
            throw SolverError("factorisation of the displacement stiffness failed");
        Kpp_clean = std::move(sys.Kpp);
        refactor_phase(bound_active_set(st.phi, rp_raw));
    }

    void refactor_phase(std::vector<Constraint> new_active) {
        active = std::move(new_active);
        SparseMat K = Kpp_clean;
        Eigen::VectorXd dummy = Eigen::VectorXd::Zero(K.rows());
        apply_dirichlet(K, dummy, homogeneous(active));
        pp.compute(K);
        if (pp.info() != Eigen::Success)
            throw SolverError("factorisation of the phase-field stiffness failed");
    }

    bool same_active(const std::vector<Constraint>& other) const {
        return other.size() == active.size() &&
               std::equal(other.begin(), other.end(), active.begin(),
                          [](const Constraint& a, const Constraint& b) {
                              return a.dof == b.dof && a.value == b.value;
                          });
    }

    // KKT-projected residual additionally zeroed on the frozen set; the
    // search direction leaves frozen nodes on their bound
    Eigen::VectorXd direction_gradient(const ResidualPair& r) const {
        Eigen::VectorXd g = r.Rp;
        for (const auto& c : active) g[c.dof] = 0.0;
        return g;
    }
};

struct LbfgsMemory {
    std::deque<Eigen::VectorXd> s, y;
    std::deque<double> rho;
    int cap = 25;

    void clear() {
        s.clear();
        y.clear();
        rho.clear();
    }
    void push(Eigen::VectorXd s_new, Eigen::VectorXd y_new) {
        const double sy = s_new.dot(y_new);
        if (!(sy > 1e-12 * s_new.norm() * y_new.norm())) return; // curvature guard
        s.push_back(std::move(s_new));
        y.push_back(std::move(y_new));
        rho.push_back(1.0 / sy);
        while (static_cast<int>(s.size()) > cap) {
            s.pop_front();
            y.pop_front();
            rho.pop_front();
        }
    }
};

Eigen::VectorXd stack(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    Eigen::VectorXd z(a.size() + b.size());
    z << a, b;
    return z;
}

Eigen::VectorXd two_loop(const LbfgsMemory& mem, const BlockFactor& base,
                         Eigen::Index nu, const Eigen::VectorXd& grad) {
    Eigen::VectorXd q = grad;
    const int k = static_cast<int>(mem.s.size());
    std::vector<double> alpha(k);
    for (int i = k - 1; i >= 0; --i) {
        alpha[i] = mem.rho[i] * mem.s[i].dot(q);
        q -= alpha[i] * mem.y[i];
    }
    Eigen::VectorXd r(q.size());
    r.head(nu) = base.uu.solve(q.head(nu));
    r.tail(q.size() - nu) = base.pp.solve(q.tail(q.size() - nu));
    for (int i = 0; i < k; ++i) {
        const double beta = mem.rho[i] * mem.y[i].dot(r);
        r += (alpha[i] - beta) * mem.s[i];
    }
    return r;
}

// residual quality relative to the convergence targets; contributions below
// target are clipped so noise in an already-converged block cannot mask or
// dominate progress in the other
double merit(const ResidualPair& r, double target_u, double target_p) {
    return std::max(0.0, r.norm_u / target_u - 1.0) + std::max(0.0, r.norm_p / target_p - 1.0);
}

// Exact active-set Newton sweep on the phase subproblem at frozen u. The
// subproblem is affine, so each working-set solve is exact; iteration is only
// needed while the bound set is being discovered. Returns the final
// residuals.
ResidualPair phase_inner_solve(const Workspace& ws, SolutionState& st, const MaterialParams& p,
                               ModelVariant m, const std::vector<Constraint>& constraints,
                               BlockFactor& base, double target_p) {
    ResidualPair res;
    for (int inner = 0; inner < 80; ++inner) {
        res = evaluate_residuals(ws, st, p, m, constraints);
        auto active = bound_active_set(st.phi, res.raw_Rp);
        if (!base.same_active(active)) base.refactor_phase(std::move(active));
        if (res.norm_p <= target_p) return res;
        Eigen::VectorXd rhs = -res.raw_Rp;
        for (const auto& c : base.active) rhs[c.dof] = 0.0;
        const Eigen::VectorXd dp = base.pp.solve(rhs);
        st.phi += dp;
        clamp_phase(st.phi);
        if (dp.lpNorm<Eigen::Infinity>() < 1e-16) break;
    }
    return evaluate_residuals(ws, st, p, m, constraints);
}

} // namespace

Eigen::VectorXd sparse_solve(const SparseMat& K, const Eigen::VectorXd& rhs) {
    if (K.rows() != K.cols() || K.rows() != rhs.size())
        throw std::invalid_argument("sparse_solve: dimension mismatch");
    Cholesky chol(K);
    if (chol.info() != Eigen::Success)
        throw SolverError("sparse_solve: factorisation failed (matrix not SPD?)");
    Eigen::VectorXd x = chol.solve(rhs);
    if (chol.info() != Eigen::Success) throw SolverError("sparse_solve: solve failed");
    return x;
}

StepStats solve_step_bfgs(const Workspace& ws, SolutionState& st, const MaterialParams& p,
                          ModelVariant m, const std::vector<Constraint>& constraints,
                          const SolverConfig& cfg) {
    const Eigen::Index nu = st.u.size();
    const double floor = 1e-14 * p.E * p.ell * p.ell;

    impose(st, constraints);
    ResidualPair res = evaluate_residuals(ws, st, p, m, constraints);
    // references: the force balance is measured against the residual that
    // the new boundary values inject; the phase balance against a
    // state-independent force scale. Taking the initial phase residual as
    // its own reference would be too loose on crack-seeding steps and would
    // ratchet down geometrically on quiet ones.
    const double scale_p = characteristic_phase_force(ws, p, m);
    const double target_u = cfg.tolerance * std::max(res.norm_u, floor);
    const double target_p = cfg.tolerance * std::max(scale_p, floor);

    StepStats stats;
    auto converged = [&](const ResidualPair& r) {
        return r.norm_u <= target_u && r.norm_p <= target_p;
    };
    if (converged(res)) {
        stats.converged = true;
        stats.res_u = res.norm_u;
        stats.res_phi = res.norm_p;
        stats.raw_Ru = std::move(res.raw_Ru);
        return stats;
    }

    BlockFactor base;
    base.factor_full(ws, st, p, m, constraints, res.raw_Rp);
    LbfgsMemory mem;
    mem.cap = cfg.lbfgs_memory;

    int since_refresh = 0;
    bool just_refreshed = true;
    for (int it = 1; it <= cfg.max_iterations; ++it) {
        if (res.norm_u <= target_u) {
            // u is balanced: the coupled problem degenerates to the phase
            // subproblem; sweep it directly
            res = phase_inner_solve(ws, st, p, m, constraints, base, target_p);
            stats.iterations = it;
            if (std::getenv("PFRAC_TRACE"))
                std::printf("    it %3d: phase sweep res_u=%.3e res_p=%.3e active=%zu\n", it,
                            res.norm_u, res.norm_p, base.active.size());
            if (converged(res)) {
                stats.converged = true;
                break;
            }
            if (res.norm_u <= target_u) break; // phase sweep exhausted
            continue;
        }
        // blocks already below target are left untouched by the direction
        const Eigen::VectorXd grad =
            stack(res.norm_u <= target_u ? Eigen::VectorXd::Zero(nu).eval() : res.Ru,
                  res.norm_p <= target_p ? Eigen::VectorXd::Zero(res.Rp.size()).eval()
                                         : base.direction_gradient(res));
        const Eigen::VectorXd dir = -two_loop(mem, base, nu, grad);

        const Eigen::VectorXd u_old = st.u;
        const Eigen::VectorXd phi_old = st.phi;
        const double m_old = merit(res, target_u, target_p);

        double alpha = 1.0;
        ResidualPair best;
        double best_merit = std::numeric_limits<double>::infinity();
        double best_alpha = 0.0;
        for (int ls = 0; ls <= cfg.max_line_search; ++ls) {
            st.u = u_old + alpha * dir.head(nu);
            st.phi = phi_old + alpha * dir.tail(dir.size() - nu);
            clamp_phase(st.phi);
            double m_new = std::numeric_limits<double>::infinity();
            ResidualPair trial;
            try {
                trial = evaluate_residuals(ws, st, p, m, constraints);
                m_new = merit(trial, target_u, target_p);
            } catch (const std::runtime_error&) {
                // overflowing trial state; treat as a rejected step
            }
            if (m_new < best_merit) {
                best_merit = m_new;
                best_alpha = alpha;
                best = std::move(trial);
            }
            if (m_new < m_old) break;
            alpha *= 0.5;
        }
        const bool made_progress = best_merit < m_old;
        if (!made_progress) best_alpha = 0.0; // reject the direction outright
        st.u = u_old + best_alpha * dir.head(nu);
        st.phi = phi_old + best_alpha * dir.tail(dir.size() - nu);
        clamp_phase(st.phi);
        ResidualPair next = made_progress ? std::move(best) : std::move(res);
        if (std::getenv("PFRAC_TRACE"))
            std::printf("    it %3d: alpha=%.3e res_u=%.3e res_p=%.3e targets=(%.2e, %.2e) "
                        "active=%zu\n",
                        it, best_alpha, next.norm_u, next.norm_p, target_u, target_p,
                        base.active.size());

        if (made_progress)
            mem.push(stack(st.u - u_old, st.phi - phi_old),
                     stack(next.Ru - res.Ru, base.direction_gradient(next) -
                                                 base.direction_gradient(res)));
        res = std::move(next);
        stats.iterations = it;
        ++since_refresh;

        if (converged(res)) {
            stats.converged = true;
            break;
        }
        // track the bound active set every iteration; the phase block is
        // constant during the step, so this only re-factors K_phiphi. The
        // secant pairs stay: the base factor is a preconditioner, not an
        // exact model.
        auto new_active = bound_active_set(st.phi, res.raw_Rp);
        const bool set_changed = !base.same_active(new_active);
        if (set_changed) base.refactor_phase(std::move(new_active));
        if (!made_progress && !set_changed) {
            // a stalled line search on a stale basis: rebuild the full
            // preconditioner; give up only when a fresh one cannot move
            if (just_refreshed) break;
            base.factor_full(ws, st, p, m, constraints, res.raw_Rp);
            mem.clear();
            since_refresh = 0;
            just_refreshed = true;
        } else if (since_refresh >= cfg.refresh_every) {
            base.factor_full(ws, st, p, m, constraints, res.raw_Rp);
            mem.clear();
            since_refresh = 0;
            just_refreshed = true;
        } else {
            just_refreshed = false;
        }
    }
    stats.res_u = res.norm_u;
    stats.res_phi = res.norm_p;
    stats.raw_Ru = std::move(res.raw_Ru);
    return stats;
}

StepStats solve_step_staggered(const Workspace& ws, SolutionState& st, const MaterialParams& p,
                               ModelVariant m, const std::vector<Constraint>& constraints,
                               const SolverConfig& cfg) {
    impose(st, constraints);
    const double floor = 1e-14 * p.E * p.ell * p.ell;
    const auto hom = homogeneous(constraints);

    // K_phiphi is independent of phi and u for frozen history; keep the
    // pristine matrix and eliminate the evolving bound active set per solve
    SparseMat Kpp_clean;
    {
        auto sys = assemble_global(ws, st, p, m);
        Kpp_clean = std::move(sys.Kpp);
    }

    StepStats stats;
    double ref_u = 0.0;
    const double target_p = cfg.tolerance * std::max(characteristic_phase_force(ws, p, m), floor);
    for (int pass = 1; pass <= cfg.max_staggered_passes; ++pass) {
        // u subproblem at frozen phi (linear)
        auto sys = assemble_global(ws, st, p, m);
        {
            Eigen::VectorXd r0 = sys.Ru;
            zero_constrained(r0, constraints);
            ref_u = std::max({ref_u, r0.norm(), floor});
        }
        Eigen::VectorXd rhs_u = -sys.Ru;
        apply_dirichlet(sys.Kuu, rhs_u, hom);
        Cholesky uu(sys.Kuu);
        if (uu.info() != Eigen::Success)
            throw SolverError("factorisation of the displacement stiffness failed");
        const Eigen::VectorXd du = uu.solve(rhs_u);
        if (cfg.trace_energy) stats.energy_trace_u.push_back(total_energy(ws, st, p, m));
        st.u += du;
        if (cfg.trace_energy) stats.energy_trace_u.push_back(total_energy(ws, st, p, m));

        // phi subproblem at frozen u: the problem is affine, so a primal
        // active-set loop over the clamped bounds solves it exactly
        if (cfg.trace_energy)
            stats.energy_trace_phi.push_back(phase_subproblem_energy(ws, st, p, m));
        const Eigen::VectorXd phi_before = st.phi;
        AssembleOptions ro;
        ro.with_matrices = false;
        for (int inner = 0; inner < 50; ++inner) {
            auto rsys = assemble_global(ws, st, p, m, ro);
            const auto active = bound_active_set(st.phi, rsys.Rp);
            Eigen::VectorXd rhs = -rsys.Rp;
            SparseMat K = Kpp_clean;
            apply_dirichlet(K, rhs, homogeneous(active));
            Cholesky ppf(K);
            if (ppf.info() != Eigen::Success)
                throw SolverError("factorisation of the phase-field stiffness failed");
            const Eigen::VectorXd dphi = ppf.solve(rhs);
            st.phi += dphi;
            clamp_phase(st.phi);
            if (dphi.lpNorm<Eigen::Infinity>() < 1e-16) break;
            auto check = assemble_global(ws, st, p, m, ro);
            if (project_phase_residual(check.Rp, st.phi).norm() <= 0.5 * target_p) break;
        }
        const Eigen::VectorXd dp = st.phi - phi_before;
        if (cfg.trace_energy)
            stats.energy_trace_phi.push_back(phase_subproblem_energy(ws, st, p, m));

        ResidualPair res = evaluate_residuals(ws, st, p, m, constraints);
        stats.iterations = pass;
        stats.res_u = res.norm_u;
        stats.res_phi = res.norm_p;
        const double u_scale = std::max(st.u.norm(), 1e-30);
        const double p_scale = std::max(st.phi.norm(), 1.0);
        // the first u move is the elastic predictor for the new boundary
        // values, not a staggered correction
        const bool increments_small = dp.norm() <= cfg.tolerance * p_scale &&
                                      (pass == 1 || du.norm() <= cfg.tolerance * u_scale);
        if (res.norm_u <= cfg.tolerance * ref_u && res.norm_p <= target_p &&
            increments_small) {
            stats.converged = true;
            stats.raw_Ru = std::move(res.raw_Ru);
            break;
        }
        if (pass == cfg.max_staggered_passes) stats.raw_Ru = std::move(res.raw_Ru);
    }
    return stats;
}

RunResult run_load_program(const Workspace& ws, const MaterialParams& p, ModelVariant m,
                           const IrreversibilityMode& mode, const BoundaryProgram& program,
                           const SolverConfig& cfg, SolutionState initial) {
    RunResult result;
    result.state = std::move(initial);

    auto solve_step = [&](SolutionState& st, const std::vector<Constraint>& bc) {
        return cfg.scheme == SolveScheme::BfgsMonolithic
                   ? solve_step_bfgs(ws, st, p, m, bc, cfg)
                   : solve_step_staggered(ws, st, p, m, bc, cfg);
    };

    double lambda = 0.0;
    int step_idx = 0;
    result.completed = true;
    for (double increment : cfg.load_increments) {
        const double target = lambda + increment;
        double dl = increment;
        while (lambda < target - 1e-14 * std::max(1.0, std::abs(target)) || increment == 0.0) {
            const double dl_try = (increment == 0.0) ? 0.0 : std::min(dl, target - lambda);
            SolutionState attempt = result.state;
            const auto bc = program.constraints_at(lambda + dl_try);
            StepStats stats = solve_step(attempt, bc);
            if (!stats.converged) {
                dl *= cfg.cutback;
                if (cfg.verbose)
                    std::printf("  step %d: no convergence, cutting increment to %.3e\n",
                                step_idx, dl);
                if (dl < cfg.min_increment || increment == 0.0) {
                    result.completed = false;
                    result.message = "load increment fell below the minimum at load factor " +
                                     std::to_string(lambda);
                    return result;
                }
                continue;
            }
            lambda += dl_try;
            result.state = std::move(attempt);

            const Eigen::VectorXd psi = compute_driving_energy(ws, result.state, p);
            update_history(psi, result.state, mode, ws);

            LoadStepRecord rec;
            rec.step = step_idx++;
            rec.load_factor = lambda;
            rec.iterations = stats.iterations;
            rec.res_u = stats.res_u;
            rec.res_phi = stats.res_phi;
            for (int n : program.reaction_nodes)
                rec.reaction += stats.raw_Ru[2 * n + program.reaction_component];
            rec.crack_surface =
                program.crack_area_multiplier * crack_surface(ws, result.state, p, m);
            for (int n : program.ligament_nodes)
                rec.max_phi_ligament = std::max(rec.max_phi_ligament, result.state.phi[n]);
            result.records.push_back(rec);
            if (cfg.verbose)
                std::printf("step %d: load %.6g  iters %d  res_u %.3e  res_phi %.3e\n",
                            rec.step, rec.load_factor, rec.iterations, rec.res_u, rec.res_phi);
            if (program.on_step) program.on_step(rec, result.state);
            if (program.stop_when && program.stop_when(rec, result.state)) {
                result.message = "stopped by rule at load factor " + std::to_string(lambda);
                return result;
            }
            if (increment == 0.0) break;
            dl = std::min(dl * 2.0, increment);
        }
    }
    return result;
}

} // namespace pfrac
