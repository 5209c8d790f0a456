#ifndef PFRAC_CONFIG_HPP
#define PFRAC_CONFIG_HPP

#include <stdexcept>
#include <string>

#include "pfrac/benchmarks.hpp"

namespace pfrac {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A parsed and validated run description. The benchmark tag selects which of
// the embedded configurations drives the run; the others stay at defaults.
struct RunConfig {
    std::string benchmark = "boundary_layer";
    BoundaryLayerConfig boundary_layer = BoundaryLayerConfig::defaults();
    DcbConfig dcb = DcbConfig::defaults();
    SentConfig sent = SentConfig::defaults();
    HomogeneousConfig homogeneous = HomogeneousConfig::defaults();
    std::string output_dir = "out";
    bool verbose = false;
};

// Sectioned key-value text ([run], [material], [model], [mesh], [solver],
// [output]); unknown keys and invariant violations raise ConfigError with the
// key path in the message.
RunConfig parse_config(const std::string& text);

std::string serialize_config(const RunConfig& cfg);

// Executes the selected benchmark and writes steps.csv, curve.csv and
// summary.json under the output directory. Returns the process exit status;
// partial artifacts are preserved on solver failure.
int run_config(const RunConfig& cfg);

// Writes mesh.txt and mesh.vtk for the mesh the run would use.
int dump_mesh(const RunConfig& cfg);

} // namespace pfrac

#endif
