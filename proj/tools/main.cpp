#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "pfrac/config.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw pfrac::ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"phase-field brittle fracture benchmarks"};
    app.require_subcommand(1);

    std::string config_path, out_dir;
    bool verbose = false;

    auto* run = app.add_subcommand("run", "execute a benchmark described by a config file");
    run->add_option("config", config_path, "config file")->required();
    run->add_option("--out", out_dir, "output directory (overrides [output] directory)");
    run->add_flag("--verbose", verbose, "per-step progress on stdout");

    auto* validate = app.add_subcommand("validate", "parse and validate a config file");
    validate->add_option("config", config_path, "config file")->required();

    auto* dump = app.add_subcommand("mesh-dump", "write the run's mesh as text and legacy VTK");
    dump->add_option("config", config_path, "config file")->required();
    dump->add_option("--out", out_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        pfrac::RunConfig cfg = pfrac::parse_config(read_file(config_path));
        if (!out_dir.empty()) cfg.output_dir = out_dir;
        if (verbose) {
            cfg.verbose = true;
            cfg.boundary_layer.solver.verbose = true;
            cfg.dcb.solver.verbose = true;
            cfg.sent.solver.verbose = true;
            cfg.homogeneous.solver.verbose = true;
        }
        if (validate->parsed()) {
            std::cout << "OK: " << cfg.benchmark << "\n";
            return 0;
        }
        if (dump->parsed()) return pfrac::dump_mesh(cfg);
        return pfrac::run_config(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
