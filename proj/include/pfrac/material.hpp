#ifndef PFRAC_MATERIAL_HPP
#define PFRAC_MATERIAL_HPP

#include <Eigen/Dense>
#include <string>

namespace pfrac {

// Constitutive model variant: AT1 has an elastic phase before damage onset,
// AT2 damages from the outset.
enum class ModelVariant { AT1, AT2 };

std::string to_string(ModelVariant m);
ModelVariant model_from_string(const std::string& s);

// Isotropic linear-elastic solid with a phase-field fracture regularisation.
// Units are up to the caller; E and Gc set the stress and energy scales,
// ell sets the regularisation width.
struct MaterialParams {
    double E  = 210e3;   // Young's modulus
    double nu = 0.3;     // Poisson's ratio
    double Gc = 2.7;     // critical energy release rate
    double ell = 0.01;   // phase field length scale
    double kappa = 1e-7; // residual stiffness factor, prevents ill-conditioning at phi=1

    void validate() const; // throws std::invalid_argument naming the offending field
};

// Degradation function g(phi) = (1-phi)^2 and its first two derivatives.
struct Degradation {
    double g;
    double dg;
    double ddg;
};

// Local part of the crack density function, w(phi), with derivatives and the
// normalisation constant c_w = int_0^1 sqrt(w) dphi.
struct LocalDissipation {
    double w;
    double dw;
    double ddw;
    double cw;
};

struct HomogeneousPoint {
    double strain = 0.0;
    double phase  = 0.0;
    double stress = 0.0;
};

// phi must lie in [0,1]; the solver clamps nodal values before calling.
Degradation degradation(double phi);

LocalDissipation local_dissipation(double phi, ModelVariant m);

// c_w for a variant without evaluating w.
double dissipation_constant(ModelVariant m);

// Plane-strain stiffness matrix in Voigt notation (xx, yy, xy with
// engineering shear). Throws for nu -> 0.5.
Eigen::Matrix3d elasticity_tensor(double E, double nu);

// Peak stress of the homogeneous 1D response.
double critical_stress(const MaterialParams& p, ModelVariant m);

// Characteristic material length Lf = Gc (1-nu^2) / E.
double fracture_length(const MaterialParams& p);

// Closed-form solution of the homogeneous (gradient-free) 1D problem at a
// given strain: phase field and degraded stress.
HomogeneousPoint homogeneous_response(const MaterialParams& p, ModelVariant m,
                                      double strain);

// Elastic energy density below which phi = 0 solves the homogeneous AT1
// equation exactly. Used as a floor on the crack driving force so that the
// AT1 phase-field operator stays positive definite in undamaged regions.
// Zero for AT2.
double driving_force_floor(const MaterialParams& p, ModelVariant m);

} // namespace pfrac

#endif
