#ifndef PFRAC_BENCHMARKS_HPP
#define PFRAC_BENCHMARKS_HPP

#include <map>
#include <string>
#include <vector>

#include "pfrac/postproc.hpp"
#include "pfrac/solver.hpp"

namespace pfrac {

enum class CrackMode { Geometric, PhaseField };

std::string to_string(CrackMode c);
CrackMode crack_mode_from_string(const std::string& s);

// ---- closed-form fracture mechanics oracles ----

// Leading term of the mode I crack tip displacement field; crack plane along
// the negative x axis, plane strain.
Vec2 williams_displacement(double K, double E, double nu, double r, double theta);

// G = (1 - nu^2) K^2 / E.
double irwin_G(double K, double E, double nu);
double irwin_K(double G, double E, double nu);

struct DcbGeometry {
    double length = 20.0;
    double height = 0.9;
    double thickness = 1.0;
    double crack0 = 10.0;
};

// Timoshenko compliance delta/P of the guided cantilever arm.
double dcb_compliance(double a, const DcbGeometry& geom, const MaterialParams& p);

// Energy release rate of the arm at opening delta and crack length a.
double dcb_analytic_G(double delta, double a, const DcbGeometry& geom, const MaterialParams& p);

// Crack length a(delta) maintaining G = Gc; returns crack0 before initiation.
double dcb_analytic_crack_length(double delta, const DcbGeometry& geom, const MaterialParams& p);

// Finite-width edge-crack geometry factor.
double sent_geometry_factor(double a_over_W);

// Griffith failure stress of the edge-cracked plate, plane strain.
double griffith_strength(double a, double W, const MaterialParams& p);

// ---- benchmark drivers ----

struct Curve {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

struct BenchmarkRecord {
    std::map<std::string, double> inputs;
    Curve curve;
    std::vector<LoadStepRecord> steps;
    // sweeps keep one step stream per case (SENT: one per crack size)
    std::map<std::string, std::vector<LoadStepRecord>> named_steps;
    std::map<std::string, double> summary;
    bool completed = false;
    std::string message;
};

struct BoundaryLayerConfig {
    MaterialParams params;
    ModelVariant model = ModelVariant::AT1;
    CrackMode crack_mode = CrackMode::PhaseField;
    IrreversibilityMode irreversibility = IrreversibilityMode::always();
    double ell_over_h = 8.0;
    double radius_over_ell = 1000.0;
    double k_step = 0.02;  // in units of K_ref = K at G = Gc
    double k_max = 1.45;
    MeshSpec mesh;  // geometry-independent knobs (grading, band sizes)
    SolverConfig solver;

    static BoundaryLayerConfig defaults();
    // Lf/ell is set through Gc at fixed E, nu, ell.
    void set_fracture_length_ratio(double lf_over_ell);
    double fracture_length_ratio() const;
};

struct DcbConfig {
    MaterialParams params;
    ModelVariant model = ModelVariant::AT1;
    CrackMode crack_mode = CrackMode::PhaseField;
    IrreversibilityMode irreversibility = IrreversibilityMode::always();
    DcbGeometry geometry;
    double ell_over_h = 5.0;
    double delta_coarse = 0.5;   // ramp in few steps up to here
    int coarse_steps = 10;
    double delta_step = 0.0075;  // fine increment beyond
    double delta_max = 1.25;
    double stop_extension = 3.9; // stop once the crack grew this far (mm)
    MeshSpec mesh;
    SolverConfig solver;

    static DcbConfig defaults();
};

struct SentConfig {
    MaterialParams params;
    ModelVariant model = ModelVariant::AT2;
    IrreversibilityMode irreversibility = IrreversibilityMode::always();
    double width = 1.0;
    std::vector<double> crack_ratios; // a/W sweep
    double ell_over_W = 0.03;
    double h_over_ell = 0.1;
    double delta_max = 0.022;
    int steps = 100;
    double peak_drop = 0.55; // stop once reaction falls below this fraction of the peak
    MeshSpec mesh;
    SolverConfig solver;

    static SentConfig defaults();
};

struct HomogeneousConfig {
    MaterialParams params;
    ModelVariant model = ModelVariant::AT2;
    double strain_max_over_peak = 2.0;
    int steps = 320;
    SolverConfig solver;

    // nu = 0 so the plane-strain element reproduces the 1D bar exactly
    static HomogeneousConfig defaults();
};

// Builds the half-disc mesh, ramps the remote K through the Williams field on
// the outer arc, and reports G at crack growth initiation.
BenchmarkRecord run_boundary_layer(const BoundaryLayerConfig& cfg);

// Quarter DCB under prescribed crack mouth opening; crack extension measured
// by the density integral and by the phi = 0.95 contour, paired with the
// beam-theory crack length.
BenchmarkRecord run_dcb(const DcbConfig& cfg);

// Failure stress sweep over crack sizes, paired with the strength and
// Griffith limits.
BenchmarkRecord run_sent(const SentConfig& cfg);

// Single element under uniform stretch against the closed-form response.
BenchmarkRecord run_homogeneous(const HomogeneousConfig& cfg);

// Initial crack through the history field: every Gauss point of elements
// adjacent to the crack face with x below the tip is driven to phi ~ 1.
void induce_phase_field_crack(const Workspace& ws, SolutionState& st,
                              const MaterialParams& p, double tip_x);

} // namespace pfrac

#endif
