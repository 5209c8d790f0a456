#include "pfrac/config.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

namespace pfrac {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

struct RawConfig {
    // section -> key -> value, plus orders for error reporting
    std::map<std::string, std::map<std::string, std::string>> sections;

    bool has(const std::string& sec, const std::string& key) const {
        auto s = sections.find(sec);
        return s != sections.end() && s->second.count(key) > 0;
    }
    std::string get(const std::string& sec, const std::string& key) const {
        return sections.at(sec).at(key);
    }
};

RawConfig tokenize(const std::string& text) {
    RawConfig raw;
    std::istringstream in(text);
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find_first_of("#;");
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ConfigError("line " + std::to_string(lineno) + ": malformed section header");
            section = trim(line.substr(1, line.size() - 2));
            raw.sections[section];
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(lineno) + ": expected key = value");
        if (section.empty())
            throw ConfigError("line " + std::to_string(lineno) + ": key outside of any section");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!raw.sections[section].emplace(key, value).second)
            throw ConfigError(section + "." + key + ": duplicate key");
    }
    return raw;
}

double to_double(const std::string& sec, const std::string& key, const std::string& v) {
    try {
        std::size_t pos = 0;
        const double d = std::stod(v, &pos);
        if (pos != v.size()) throw std::invalid_argument("");
        return d;
    } catch (...) {
        throw ConfigError(sec + "." + key + ": not a number: '" + v + "'");
    }
}

int to_int(const std::string& sec, const std::string& key, const std::string& v) {
    const double d = to_double(sec, key, v);
    if (d != std::floor(d)) throw ConfigError(sec + "." + key + ": not an integer: '" + v + "'");
    return static_cast<int>(d);
}

bool to_bool(const std::string& sec, const std::string& key, const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError(sec + "." + key + ": not a boolean: '" + v + "'");
}

std::vector<double> to_list(const std::string& sec, const std::string& key, const std::string& v) {
    std::vector<double> out;
    std::istringstream in(v);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(to_double(sec, key, trim(item)));
    if (out.empty()) throw ConfigError(sec + "." + key + ": empty list");
    return out;
}

// Allowed keys per section for each benchmark.
using KeySet = std::set<std::string>;
std::map<std::string, KeySet> allowed_keys(const std::string& benchmark) {
    std::map<std::string, KeySet> keys;
    keys["run"] = {"benchmark"};
    keys["material"] = {"E", "nu", "Gc", "ell", "kappa"};
    keys["model"] = {"variant", "irreversibility", "threshold"};
    keys["mesh"] = {"ell_over_h", "grading", "max_cell_ell", "band_y_ell",
                    "band_behind_ell", "band_ahead_ell"};
    keys["solver"] = {"scheme", "tolerance", "max_iterations", "max_staggered_passes",
                      "cutback", "lbfgs_memory", "refresh_every"};
    keys["output"] = {"directory", "verbose"};
    if (benchmark == "boundary_layer") {
        keys["run"].insert({"crack", "Lf_over_ell"});
        keys["mesh"].insert({"radius_over_ell", "core_half_ell", "ring_grading"});
        keys["solver"].insert({"k_step", "k_max"});
    } else if (benchmark == "dcb") {
        keys["run"].insert({"crack"});
        keys["mesh"].insert({"L", "H", "a0"});
        keys["solver"].insert({"delta_coarse", "coarse_steps", "delta_step", "delta_max",
                               "stop_extension"});
    } else if (benchmark == "sent") {
        keys["run"].insert({"a_over_W"});
        keys["mesh"].insert({"W"});
        keys["solver"].insert({"delta_max", "steps", "peak_drop"});
    } else if (benchmark == "homogeneous") {
        keys["solver"].insert({"steps", "strain_max_over_peak"});
    }
    return keys;
}

void apply_material(const RawConfig& raw, MaterialParams& p, bool gc_required) {
    if (!raw.has("material", "E")) throw ConfigError("material.E: missing required key");
    if (!raw.has("material", "ell")) throw ConfigError("material.ell: missing required key");
    p.E = to_double("material", "E", raw.get("material", "E"));
    p.ell = to_double("material", "ell", raw.get("material", "ell"));
    if (raw.has("material", "nu")) p.nu = to_double("material", "nu", raw.get("material", "nu"));
    if (raw.has("material", "kappa"))
        p.kappa = to_double("material", "kappa", raw.get("material", "kappa"));
    if (raw.has("material", "Gc"))
        p.Gc = to_double("material", "Gc", raw.get("material", "Gc"));
    else if (gc_required)
        throw ConfigError("material.Gc: missing required key");
}

void apply_model(const RawConfig& raw, ModelVariant& model, IrreversibilityMode& mode) {
    if (raw.has("model", "variant")) {
        try {
            model = model_from_string(raw.get("model", "variant"));
        } catch (const std::exception& e) {
            throw ConfigError(std::string("model.variant: ") + e.what());
        }
    }
    double threshold = 0.95;
    if (raw.has("model", "threshold"))
        threshold = to_double("model", "threshold", raw.get("model", "threshold"));
    if (raw.has("model", "irreversibility")) {
        const std::string v = raw.get("model", "irreversibility");
        if (v == "always")
            mode = IrreversibilityMode::always();
        else if (v == "threshold" || v == "thresholded")
            mode = IrreversibilityMode::thresholded(threshold);
        else
            throw ConfigError("model.irreversibility: expected 'always' or 'threshold', got '" + v + "'");
    } else if (raw.has("model", "threshold")) {
        mode = IrreversibilityMode::thresholded(threshold);
    }
}

void apply_mesh_common(const RawConfig& raw, MeshSpec& mesh) {
    auto opt = [&](const char* key, double& field) {
        if (raw.has("mesh", key)) field = to_double("mesh", key, raw.get("mesh", key));
    };
    opt("grading", mesh.grading);
    opt("max_cell_ell", mesh.max_cell_ell);
    opt("band_y_ell", mesh.band_y_ell);
    opt("band_behind_ell", mesh.band_behind_ell);
    opt("band_ahead_ell", mesh.band_ahead_ell);
}

void apply_solver_common(const RawConfig& raw, SolverConfig& s) {
    if (raw.has("solver", "scheme")) {
        try {
            s.scheme = scheme_from_string(raw.get("solver", "scheme"));
        } catch (const std::exception& e) {
            throw ConfigError(std::string("solver.scheme: ") + e.what());
        }
    }
    auto optd = [&](const char* key, double& field) {
        if (raw.has("solver", key)) field = to_double("solver", key, raw.get("solver", key));
    };
    auto opti = [&](const char* key, int& field) {
        if (raw.has("solver", key)) field = to_int("solver", key, raw.get("solver", key));
    };
    optd("tolerance", s.tolerance);
    optd("cutback", s.cutback);
    opti("max_iterations", s.max_iterations);
    opti("max_staggered_passes", s.max_staggered_passes);
    opti("lbfgs_memory", s.lbfgs_memory);
    opti("refresh_every", s.refresh_every);
}

} // namespace

RunConfig parse_config(const std::string& text) {
    const RawConfig raw = tokenize(text);

    RunConfig cfg;
    if (raw.has("run", "benchmark")) cfg.benchmark = raw.get("run", "benchmark");
    const std::set<std::string> known = {"boundary_layer", "dcb", "sent", "homogeneous"};
    if (!known.count(cfg.benchmark))
        throw ConfigError("run.benchmark: unknown benchmark '" + cfg.benchmark + "'");

    const auto allowed = allowed_keys(cfg.benchmark);
    for (const auto& [sec, kv] : raw.sections) {
        auto it = allowed.find(sec);
        if (it == allowed.end()) throw ConfigError(sec + ": unknown section");
        for (const auto& [key, value] : kv)
            if (!it->second.count(key)) throw ConfigError(sec + "." + key + ": unknown key");
    }

    if (raw.has("output", "directory")) cfg.output_dir = raw.get("output", "directory");
    if (raw.has("output", "verbose"))
        cfg.verbose = to_bool("output", "verbose", raw.get("output", "verbose"));

    if (cfg.benchmark == "boundary_layer") {
        auto& bl = cfg.boundary_layer;
        apply_material(raw, bl.params, /*gc_required=*/false);
        // Gc defaults through Lf/ell = 10 unless given explicitly
        double lf = 10.0;
        if (raw.has("run", "Lf_over_ell"))
            lf = to_double("run", "Lf_over_ell", raw.get("run", "Lf_over_ell"));
        if (!raw.has("material", "Gc")) bl.set_fracture_length_ratio(lf);
        if (raw.has("run", "crack")) bl.crack_mode = crack_mode_from_string(raw.get("run", "crack"));
        apply_model(raw, bl.model, bl.irreversibility);
        apply_mesh_common(raw, bl.mesh);
        if (raw.has("mesh", "ell_over_h"))
            bl.ell_over_h = to_double("mesh", "ell_over_h", raw.get("mesh", "ell_over_h"));
        if (raw.has("mesh", "radius_over_ell"))
            bl.radius_over_ell = to_double("mesh", "radius_over_ell", raw.get("mesh", "radius_over_ell"));
        if (raw.has("mesh", "core_half_ell"))
            bl.mesh.core_half_ell = to_double("mesh", "core_half_ell", raw.get("mesh", "core_half_ell"));
        if (raw.has("mesh", "ring_grading"))
            bl.mesh.ring_grading = to_double("mesh", "ring_grading", raw.get("mesh", "ring_grading"));
        apply_solver_common(raw, bl.solver);
        if (raw.has("solver", "k_step")) bl.k_step = to_double("solver", "k_step", raw.get("solver", "k_step"));
        if (raw.has("solver", "k_max")) bl.k_max = to_double("solver", "k_max", raw.get("solver", "k_max"));
        bl.solver.verbose = cfg.verbose;
        try {
            bl.params.validate();
        } catch (const std::exception& e) {
            throw ConfigError(e.what());
        }
    } else if (cfg.benchmark == "dcb") {
        auto& d = cfg.dcb;
        apply_material(raw, d.params, /*gc_required=*/true);
        if (raw.has("run", "crack")) d.crack_mode = crack_mode_from_string(raw.get("run", "crack"));
        apply_model(raw, d.model, d.irreversibility);
        apply_mesh_common(raw, d.mesh);
        if (raw.has("mesh", "ell_over_h"))
            d.ell_over_h = to_double("mesh", "ell_over_h", raw.get("mesh", "ell_over_h"));
        if (raw.has("mesh", "L")) d.geometry.length = to_double("mesh", "L", raw.get("mesh", "L"));
        if (raw.has("mesh", "H")) d.geometry.height = to_double("mesh", "H", raw.get("mesh", "H"));
        if (raw.has("mesh", "a0")) d.geometry.crack0 = to_double("mesh", "a0", raw.get("mesh", "a0"));
        apply_solver_common(raw, d.solver);
        auto optd = [&](const char* key, double& field) {
            if (raw.has("solver", key)) field = to_double("solver", key, raw.get("solver", key));
        };
        optd("delta_coarse", d.delta_coarse);
        optd("delta_step", d.delta_step);
        optd("delta_max", d.delta_max);
        optd("stop_extension", d.stop_extension);
        if (raw.has("solver", "coarse_steps"))
            d.coarse_steps = to_int("solver", "coarse_steps", raw.get("solver", "coarse_steps"));
        d.solver.verbose = cfg.verbose;
        try {
            d.params.validate();
        } catch (const std::exception& e) {
            throw ConfigError(e.what());
        }
        if (d.geometry.crack0 >= d.geometry.length)
            throw ConfigError("mesh.a0: initial crack must be shorter than the beam");
    } else if (cfg.benchmark == "sent") {
        auto& s = cfg.sent;
        apply_material(raw, s.params, /*gc_required=*/true);
        apply_model(raw, s.model, s.irreversibility);
        apply_mesh_common(raw, s.mesh);
        if (raw.has("mesh", "W")) s.width = to_double("mesh", "W", raw.get("mesh", "W"));
        if (raw.has("mesh", "ell_over_h")) {
            const double r = to_double("mesh", "ell_over_h", raw.get("mesh", "ell_over_h"));
            if (!(r > 0.0)) throw ConfigError("mesh.ell_over_h: must be positive");
            s.h_over_ell = 1.0 / r;
        }
        if (raw.has("run", "a_over_W"))
            s.crack_ratios = to_list("run", "a_over_W", raw.get("run", "a_over_W"));
        for (double r : s.crack_ratios)
            if (!(r > 0.0 && r < 1.0))
                throw ConfigError("run.a_over_W: ratios must lie in (0,1)");
        apply_solver_common(raw, s.solver);
        if (raw.has("solver", "delta_max"))
            s.delta_max = to_double("solver", "delta_max", raw.get("solver", "delta_max"));
        if (raw.has("solver", "steps")) s.steps = to_int("solver", "steps", raw.get("solver", "steps"));
        if (raw.has("solver", "peak_drop"))
            s.peak_drop = to_double("solver", "peak_drop", raw.get("solver", "peak_drop"));
        s.solver.verbose = cfg.verbose;
        try {
            s.params.validate();
        } catch (const std::exception& e) {
            throw ConfigError(e.what());
        }
    } else { // homogeneous
        auto& h = cfg.homogeneous;
        apply_material(raw, h.params, /*gc_required=*/true);
        IrreversibilityMode unused = IrreversibilityMode::always();
        apply_model(raw, h.model, unused);
        apply_solver_common(raw, h.solver);
        if (raw.has("solver", "steps")) h.steps = to_int("solver", "steps", raw.get("solver", "steps"));
        if (raw.has("solver", "strain_max_over_peak"))
            h.strain_max_over_peak =
                to_double("solver", "strain_max_over_peak", raw.get("solver", "strain_max_over_peak"));
        h.solver.verbose = cfg.verbose;
        try {
            h.params.validate();
        } catch (const std::exception& e) {
            throw ConfigError(e.what());
        }
    }
    return cfg;
}

namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void emit_material(std::ostringstream& os, const MaterialParams& p) {
    os << "[material]\n";
    os << "E = " << fmt(p.E) << "\n";
    os << "nu = " << fmt(p.nu) << "\n";
    os << "Gc = " << fmt(p.Gc) << "\n";
    os << "ell = " << fmt(p.ell) << "\n";
    os << "kappa = " << fmt(p.kappa) << "\n";
}

void emit_model(std::ostringstream& os, ModelVariant m, const IrreversibilityMode& mode) {
    os << "[model]\n";
    os << "variant = " << to_string(m) << "\n";
    os << "irreversibility = "
       << (mode.kind == IrreversibilityMode::Kind::Always ? "always" : "threshold") << "\n";
    if (mode.kind == IrreversibilityMode::Kind::Thresholded)
        os << "threshold = " << fmt(mode.phi_threshold) << "\n";
}

void emit_mesh_common(std::ostringstream& os, const MeshSpec& m) {
    os << "grading = " << fmt(m.grading) << "\n";
    os << "max_cell_ell = " << fmt(m.max_cell_ell) << "\n";
    os << "band_y_ell = " << fmt(m.band_y_ell) << "\n";
    os << "band_behind_ell = " << fmt(m.band_behind_ell) << "\n";
    os << "band_ahead_ell = " << fmt(m.band_ahead_ell) << "\n";
}

void emit_solver_common(std::ostringstream& os, const SolverConfig& s) {
    os << "scheme = " << to_string(s.scheme) << "\n";
    os << "tolerance = " << fmt(s.tolerance) << "\n";
    os << "max_iterations = " << s.max_iterations << "\n";
    os << "max_staggered_passes = " << s.max_staggered_passes << "\n";
    os << "cutback = " << fmt(s.cutback) << "\n";
    os << "lbfgs_memory = " << s.lbfgs_memory << "\n";
    os << "refresh_every = " << s.refresh_every << "\n";
}

} // namespace

std::string serialize_config(const RunConfig& cfg) {
    std::ostringstream os;
    os << "[run]\n";
    os << "benchmark = " << cfg.benchmark << "\n";
    if (cfg.benchmark == "boundary_layer") {
        const auto& bl = cfg.boundary_layer;
        os << "crack = " << to_string(bl.crack_mode) << "\n";
        emit_material(os, bl.params);
        emit_model(os, bl.model, bl.irreversibility);
        os << "[mesh]\n";
        os << "ell_over_h = " << fmt(bl.ell_over_h) << "\n";
        os << "radius_over_ell = " << fmt(bl.radius_over_ell) << "\n";
        os << "core_half_ell = " << fmt(bl.mesh.core_half_ell) << "\n";
        os << "ring_grading = " << fmt(bl.mesh.ring_grading) << "\n";
        emit_mesh_common(os, bl.mesh);
        os << "[solver]\n";
        emit_solver_common(os, bl.solver);
        os << "k_step = " << fmt(bl.k_step) << "\n";
        os << "k_max = " << fmt(bl.k_max) << "\n";
    } else if (cfg.benchmark == "dcb") {
        const auto& d = cfg.dcb;
        os << "crack = " << to_string(d.crack_mode) << "\n";
        emit_material(os, d.params);
        emit_model(os, d.model, d.irreversibility);
        os << "[mesh]\n";
        os << "ell_over_h = " << fmt(d.ell_over_h) << "\n";
        os << "L = " << fmt(d.geometry.length) << "\n";
        os << "H = " << fmt(d.geometry.height) << "\n";
        os << "a0 = " << fmt(d.geometry.crack0) << "\n";
        emit_mesh_common(os, d.mesh);
        os << "[solver]\n";
        emit_solver_common(os, d.solver);
        os << "delta_coarse = " << fmt(d.delta_coarse) << "\n";
        os << "coarse_steps = " << d.coarse_steps << "\n";
        os << "delta_step = " << fmt(d.delta_step) << "\n";
        os << "delta_max = " << fmt(d.delta_max) << "\n";
        os << "stop_extension = " << fmt(d.stop_extension) << "\n";
    } else if (cfg.benchmark == "sent") {
        const auto& s = cfg.sent;
        os << "a_over_W = ";
        for (std::size_t i = 0; i < s.crack_ratios.size(); ++i)
            os << (i ? "," : "") << fmt(s.crack_ratios[i]);
        os << "\n";
        emit_material(os, s.params);
        emit_model(os, s.model, s.irreversibility);
        os << "[mesh]\n";
        os << "ell_over_h = " << fmt(1.0 / s.h_over_ell) << "\n";
        os << "W = " << fmt(s.width) << "\n";
        emit_mesh_common(os, s.mesh);
        os << "[solver]\n";
        emit_solver_common(os, s.solver);
        os << "delta_max = " << fmt(s.delta_max) << "\n";
        os << "steps = " << s.steps << "\n";
        os << "peak_drop = " << fmt(s.peak_drop) << "\n";
    } else {
        const auto& h = cfg.homogeneous;
        emit_material(os, h.params);
        IrreversibilityMode always = IrreversibilityMode::always();
        emit_model(os, h.model, always);
        os << "[solver]\n";
        emit_solver_common(os, h.solver);
        os << "steps = " << h.steps << "\n";
        os << "strain_max_over_peak = " << fmt(h.strain_max_over_peak) << "\n";
    }
    os << "[output]\n";
    os << "directory = " << cfg.output_dir << "\n";
    os << "verbose = " << (cfg.verbose ? "true" : "false") << "\n";
    return os.str();
}

namespace {

void write_steps_csv(const std::filesystem::path& path, const std::vector<LoadStepRecord>& steps) {
    std::ofstream os(path);
    os << "step,load_factor,iterations,res_u,res_phi,reaction,crack_surface\n";
    char buf[256];
    for (const auto& r : steps) {
        std::snprintf(buf, sizeof buf, "%d,%.17g,%d,%.17g,%.17g,%.17g,%.17g\n", r.step,
                      r.load_factor, r.iterations, r.res_u, r.res_phi, r.reaction,
                      r.crack_surface);
        os << buf;
    }
}

void write_curve_csv(const std::filesystem::path& path, const Curve& curve) {
    std::ofstream os(path);
    for (std::size_t i = 0; i < curve.columns.size(); ++i)
        os << (i ? "," : "") << curve.columns[i];
    os << "\n";
    char buf[40];
    for (const auto& row : curve.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.17g", row[i]);
            os << (i ? "," : "") << buf;
        }
        os << "\n";
    }
}

void write_summary(const std::filesystem::path& path, const BenchmarkRecord& rec) {
    nlohmann::json j;
    for (const auto& [k, v] : rec.inputs) j[k] = v;
    for (const auto& [k, v] : rec.summary) j[k] = v;
    j["completed"] = rec.completed;
    if (!rec.message.empty()) j["message"] = rec.message;
    std::ofstream os(path);
    os << j.dump(2) << "\n";
}

Mesh mesh_for_config(const RunConfig& cfg) {
    if (cfg.benchmark == "boundary_layer") {
        MeshSpec spec = cfg.boundary_layer.mesh;
        spec.geometry = MeshGeometry::HalfDisc;
        spec.ell = cfg.boundary_layer.params.ell;
        spec.h = spec.ell / cfg.boundary_layer.ell_over_h;
        spec.outer_radius = cfg.boundary_layer.radius_over_ell * spec.ell;
        return build_half_disc_mesh(spec);
    }
    if (cfg.benchmark == "dcb") {
        MeshSpec spec = cfg.dcb.mesh;
        spec.geometry = MeshGeometry::DcbQuarter;
        spec.ell = cfg.dcb.params.ell;
        spec.h = spec.ell / cfg.dcb.ell_over_h;
        spec.length = cfg.dcb.geometry.length;
        spec.height = cfg.dcb.geometry.height;
        spec.crack = cfg.dcb.geometry.crack0;
        return build_rectangle_mesh(spec);
    }
    if (cfg.benchmark == "sent") {
        MeshSpec spec = cfg.sent.mesh;
        spec.geometry = MeshGeometry::SentHalf;
        spec.ell = cfg.sent.params.ell;
        spec.h = cfg.sent.h_over_ell * spec.ell;
        spec.length = cfg.sent.width;
        spec.height = 3.0 * cfg.sent.width;
        spec.crack = cfg.sent.crack_ratios.front() * cfg.sent.width;
        return build_rectangle_mesh(spec);
    }
    MeshSpec spec;
    spec.geometry = MeshGeometry::Rectangle;
    spec.length = spec.height = spec.h = 1.0;
    spec.ell = cfg.homogeneous.params.ell;
    return build_plain_rectangle_mesh(spec);
}

} // namespace

int run_config(const RunConfig& cfg) {
    std::filesystem::create_directories(cfg.output_dir);
    const std::filesystem::path out(cfg.output_dir);

    BenchmarkRecord rec;
    if (cfg.benchmark == "boundary_layer")
        rec = run_boundary_layer(cfg.boundary_layer);
    else if (cfg.benchmark == "dcb")
        rec = run_dcb(cfg.dcb);
    else if (cfg.benchmark == "sent")
        rec = run_sent(cfg.sent);
    else
        rec = run_homogeneous(cfg.homogeneous);

    write_steps_csv(out / "steps.csv", rec.steps);
    for (const auto& [name, steps] : rec.named_steps)
        write_steps_csv(out / ("steps_" + name + ".csv"), steps);
    write_curve_csv(out / "curve.csv", rec.curve);
    write_summary(out / "summary.json", rec);
    if (!rec.completed) {
        std::fprintf(stderr, "run incomplete: %s\n", rec.message.c_str());
        return 2;
    }
    return 0;
}

int dump_mesh(const RunConfig& cfg) {
    std::filesystem::create_directories(cfg.output_dir);
    const std::filesystem::path out(cfg.output_dir);
    const Mesh mesh = mesh_for_config(cfg);
    for (const auto& w : mesh.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
    {
        std::ofstream os(out / "mesh.txt");
        write_mesh_text(mesh, os);
    }
    {
        std::ofstream os(out / "mesh.vtk");
        write_mesh_vtk(mesh, os);
    }
    std::printf("mesh: %zu nodes, %zu elements\n", mesh.node_count(), mesh.element_count());
    return 0;
}

} // namespace pfrac
