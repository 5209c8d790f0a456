#include "pfrac/material.hpp"

#include <cmath>
#include <stdexcept>

namespace pfrac {

std::string to_string(ModelVariant m) {
    return m == ModelVariant::AT1 ? "AT1" : "AT2";
}

ModelVariant model_from_string(const std::string& s) {
    if (s == "AT1" || s == "at1") return ModelVariant::AT1;
    if (s == "AT2" || s == "at2") return ModelVariant::AT2;
    throw std::invalid_argument("unknown model variant '" + s + "' (expected AT1 or AT2)");
}

void MaterialParams::validate() const {
    if (!(E > 0.0)) throw std::invalid_argument("material.E must be positive");
    if (!(nu >= 0.0 && nu < 0.5)) throw std::invalid_argument("material.nu must lie in [0, 0.5)");
    if (!(Gc > 0.0)) throw std::invalid_argument("material.Gc must be positive");
    if (!(ell > 0.0)) throw std::invalid_argument("material.ell must be positive");
    if (!(kappa >= 0.0 && kappa < 1.0)) throw std::invalid_argument("material.kappa must lie in [0, 1)");
}

Degradation degradation(double phi) {
    if (!(phi >= 0.0 && phi <= 1.0))
        throw std::domain_error("degradation: phi outside [0,1]");
    const double r = 1.0 - phi;
    return {r * r, -2.0 * r, 2.0};
}

double dissipation_constant(ModelVariant m) {
    return m == ModelVariant::AT1 ? 2.0 / 3.0 : 0.5;
}

LocalDissipation local_dissipation(double phi, ModelVariant m) {
    if (!(phi >= 0.0 && phi <= 1.0))
        throw std::domain_error("local_dissipation: phi outside [0,1]");
    if (m == ModelVariant::AT1)
        return {phi, 1.0, 0.0, 2.0 / 3.0};
    return {phi * phi, 2.0 * phi, 2.0, 0.5};
}

Eigen::Matrix3d elasticity_tensor(double E, double nu) {
    if (!(E > 0.0)) throw std::invalid_argument("elasticity_tensor: E must be positive");
    if (!(nu >= 0.0 && nu < 0.5))
        throw std::invalid_argument("elasticity_tensor: nu must lie in [0, 0.5) (plane strain singular at 0.5)");
    const double f = E / ((1.0 + nu) * (1.0 - 2.0 * nu));
    Eigen::Matrix3d C = Eigen::Matrix3d::Zero();
    C(0, 0) = C(1, 1) = f * (1.0 - nu);
    C(0, 1) = C(1, 0) = f * nu;
    C(2, 2) = f * (1.0 - 2.0 * nu) / 2.0; // = mu, engineering shear
    return C;
}

double critical_stress(const MaterialParams& p, ModelVariant m) {
    p.validate();
    if (m == ModelVariant::AT1)
        return std::sqrt(3.0 * p.E * p.Gc / (8.0 * p.ell));
    return (3.0 / 16.0) * std::sqrt(3.0 * p.E * p.Gc / p.ell);
}

double fracture_length(const MaterialParams& p) {
    p.validate();
    return p.Gc * (1.0 - p.nu * p.nu) / p.E;
}

HomogeneousPoint homogeneous_response(const MaterialParams& p, ModelVariant m,
                                      double strain) {
    if (strain < 0.0) throw std::domain_error("homogeneous_response: strain must be >= 0");
    const double psi = p.E * strain * strain; // 2*psi0, shorthand below
    double phi = 0.0;
    if (m == ModelVariant::AT2) {
        // (Gc/ell) phi = (1-phi) E eps^2
        phi = psi * p.ell / (p.Gc + psi * p.ell);
    } else {
        // 3Gc/(8 ell) = (1-phi) E eps^2, active once eps exceeds the onset strain
        if (psi > 0.0)
            phi = std::max(0.0, 1.0 - 3.0 * p.Gc / (8.0 * p.ell * psi));
    }
    const double r = 1.0 - phi;
    return {strain, phi, r * r * p.E * strain};
}

double driving_force_floor(const MaterialParams& p, ModelVariant m) {
    if (m == ModelVariant::AT1)
        return 3.0 * p.Gc / (16.0 * p.ell);
    return 0.0;
}

} // namespace pfrac
