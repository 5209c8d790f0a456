#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pfrac/config.hpp"

using namespace pfrac;

namespace {

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_SUITE_BEGIN("config");

TEST_CASE("minimal boundary layer config gets defaults") {
    const auto cfg = parse_config(
        "[run]\nbenchmark = boundary_layer\n"
        "[material]\nE = 1.0\nell = 1e-3\n");
    CHECK(cfg.benchmark == "boundary_layer");
    CHECK(cfg.boundary_layer.params.nu == 0.3);
    CHECK(cfg.boundary_layer.params.kappa == 1e-7);
    CHECK(cfg.boundary_layer.fracture_length_ratio() == doctest::Approx(10.0));
    CHECK(cfg.boundary_layer.ell_over_h == 8.0);
}

TEST_CASE("validation errors carry the key path") {
    CHECK_THROWS_WITH_AS(parse_config("[run]\nbenchmark = dcb\n[material]\nE = 1\nell = 0.1\n"),
                         "material.Gc: missing required key", ConfigError);
    CHECK_THROWS_WITH_AS(
        parse_config("[run]\nbenchmark = dcb\n[material]\nE = 1\nell = 0.1\nGc = -2\n"),
        "material.Gc must be positive", ConfigError);
    CHECK_THROWS_AS(parse_config("[run]\nbenchmark = dcb\n[material]\nE = 1\nell = 0.1\nGc = 1\n"
                                 "[solver]\nbogus_key = 3\n"),
                    ConfigError);
    CHECK_THROWS_AS(parse_config("[unknown_section]\nx = 1\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("[run]\nbenchmark = nope\n"), ConfigError);
    CHECK_THROWS_AS(parse_config("x = 1\n"), ConfigError); // key outside a section
    CHECK_THROWS_AS(parse_config("[material]\nE = fast\n"), ConfigError);
}

TEST_CASE("serialisation round trip is the identity") {
    const char* examples[] = {
        "[run]\nbenchmark = boundary_layer\ncrack = geometric\nLf_over_ell = 100\n"
        "[material]\nE = 2.5\nell = 2e-3\nnu = 0.25\n"
        "[model]\nvariant = AT2\nirreversibility = threshold\nthreshold = 0.9\n"
        "[mesh]\nell_over_h = 4\n"
        "[solver]\nscheme = staggered\ntolerance = 1e-7\n",
        "[run]\nbenchmark = dcb\n[material]\nE = 210e3\nell = 0.03\nGc = 20.7\n"
        "[mesh]\nL = 18\na0 = 9\n[solver]\ndelta_max = 1.1\n",
        "[run]\nbenchmark = sent\na_over_W = 0.01,0.1,0.4\n"
        "[material]\nE = 210e3\nell = 0.03\nGc = 0.5\n[model]\nvariant = AT1\n",
        "[run]\nbenchmark = homogeneous\n[material]\nE = 1\nell = 0.375\nGc = 1\nnu = 0\n",
    };
    for (const char* text : examples) {
        const auto cfg = parse_config(text);
        const std::string ser = serialize_config(cfg);
        const auto cfg2 = parse_config(ser);
        CHECK(serialize_config(cfg2) == ser);
    }
}

TEST_CASE("seventeen significant digits survive the round trip") {
    auto cfg = parse_config("[run]\nbenchmark = homogeneous\n"
                            "[material]\nE = 1\nell = 0.1\nGc = 0.333333333333333314829616256247\n");
    const auto cfg2 = parse_config(serialize_config(cfg));
    CHECK(cfg2.homogeneous.params.Gc == cfg.homogeneous.params.Gc);
}

#ifdef PFRAC_CLI_PATH
TEST_CASE("cli runs the homogeneous benchmark and writes artifacts") {
    namespace fs = std::filesystem;
    const fs::path tmp = fs::temp_directory_path() / "pfrac_cli_test";
    fs::remove_all(tmp);
    fs::create_directories(tmp);
    const fs::path cfg_path = tmp / "homog.cfg";
    {
        std::ofstream cfg(cfg_path);
        cfg << "[run]\nbenchmark = homogeneous\n"
            << "[material]\nE = 1\nnu = 0\nGc = 1\nell = 0.375\n"
            << "[model]\nvariant = AT1\n"
            << "[solver]\nsteps = 60\nstrain_max_over_peak = 1.2\n"
            << "[output]\ndirectory = " << (tmp / "out1").string() << "\n";
    }
    const std::string cli = PFRAC_CLI_PATH;

    REQUIRE(std::system((cli + " validate " + cfg_path.string() + " > /dev/null").c_str()) == 0);
    REQUIRE(std::system((cli + " run " + cfg_path.string() + " > /dev/null").c_str()) == 0);
    REQUIRE(std::system((cli + " mesh-dump " + cfg_path.string() + " --out " +
                         (tmp / "mesh").string() + " > /dev/null")
                            .c_str()) == 0);

    CHECK(fs::exists(tmp / "out1" / "steps.csv"));
    CHECK(fs::exists(tmp / "out1" / "curve.csv"));
    CHECK(fs::exists(tmp / "out1" / "summary.json"));
    CHECK(fs::exists(tmp / "mesh" / "mesh.txt"));
    CHECK(fs::exists(tmp / "mesh" / "mesh.vtk"));

    const std::string curve = slurp(tmp / "out1" / "curve.csv");
    CHECK(curve.rfind("epsilon,phi,sigma,sigma_analytic\n", 0) == 0);
    const std::string steps = slurp(tmp / "out1" / "steps.csv");
    CHECK(steps.rfind("step,load_factor,iterations,res_u,res_phi,reaction,crack_surface\n", 0) ==
          0);

    // byte-identical rerun
    REQUIRE(std::system((cli + " run " + cfg_path.string() + " --out " + (tmp / "out2").string() +
                         " > /dev/null")
                            .c_str()) == 0);
    CHECK(slurp(tmp / "out2" / "curve.csv") == curve);
    CHECK(slurp(tmp / "out2" / "steps.csv") == steps);

    // invalid config exits nonzero
    const fs::path bad = tmp / "bad.cfg";
    {
        std::ofstream cfg(bad);
        cfg << "[material]\nE = -1\n";
    }
    CHECK(std::system((cli + " validate " + bad.string() + " 2> /dev/null").c_str()) != 0);
    fs::remove_all(tmp);
}
#endif

TEST_SUITE_END();
