#ifndef PFRAC_POSTPROC_HPP
#define PFRAC_POSTPROC_HPP

#include <optional>
#include <vector>

#include "pfrac/assembly.hpp"
#include "pfrac/solver.hpp"

namespace pfrac {

enum class CrackMeasureMethod { DensityIntegral, Contour };

struct CrackMeasure {
    CrackMeasureMethod method = CrackMeasureMethod::DensityIntegral;
    double value = 0.0;
    double baseline = 0.0;
    double extension() const { return value - baseline; }
};

// Crack surface per unit thickness from the crack density function,
// integrated over the modelled domain.
double crack_surface(const Workspace& ws, const SolutionState& st,
                     const MaterialParams& p, ModelVariant m);

// Furthest point along the ligament (nodes ordered by x) where the phase
// field reaches the threshold; linear interpolation between the bracketing
// nodes. Empty when no node reaches the threshold.
std::optional<double> crack_tip_position(const Mesh& mesh, const Eigen::VectorXd& phi,
                                         const std::vector<int>& ligament_nodes,
                                         double threshold = 0.95);

// Force per unit thickness carried by the constrained dofs of a node set:
// the unconstrained residual summed over the set.
double reaction_force(const Workspace& ws, const SolutionState& st, const MaterialParams& p,
                      ModelVariant m, const std::vector<int>& nodes, int component);

struct InitiationRule {
    double extension_threshold = 0.0; // callers pass ell
};

struct Initiation {
    double load_factor = 0.0;
    double G = 0.0; // Irwin's relation applied to the load factor as a stress intensity
};

// First step whose crack extension (density measure, relative to the first
// record) exceeds the threshold; the load factor is interpolated between the
// bracketing steps. For K-controlled runs the returned G is the energy
// release rate at that load.
std::optional<Initiation> detect_initiation(const std::vector<LoadStepRecord>& records,
                                            const MaterialParams& p, const InitiationRule& rule);

// Integral of |grad(phi) . n| over an edge set; diagnostic for the natural
// boundary condition.
double boundary_normal_gradient_norm(const Workspace& ws, const Eigen::VectorXd& phi,
                                     const std::vector<std::pair<int, int>>& edges);

} // namespace pfrac

#endif
