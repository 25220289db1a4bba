#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include <json.hpp>

#include "sscat/cavity.hpp"
#include "sscat/solver.hpp"

// JSON scene configuration and the CSV/JSON artifacts of a run. Strict
// parsing: unknown keys are rejected so parameter typos cannot pass
// silently.

namespace sscat {

struct sim_params {
    double gamma = 0.0;
    double a = 0.0;
    // defaulted from a when absent in the scene
    double length = 0.0;  // 8a
    double dx = 0.0;      // a/2048
    double dt = 0.0;      // 0.25 dx^2
    double epsilon = 1e-3;
    double window = 5.0;
    double k_min = 0.0;   // spectrum grid, defaults to k_c +- 25%
    double k_max = 0.0;
    int k_points = 401;
    int record_points = 400; // trace samples over the run
};

struct scene_config {
    enum class model_type { continuous, lattice };
    model_type model = model_type::continuous;
    double kappa = 1.0;

    std::vector<scattering_center> centers;

    bool has_solver = false;
    double k_min = 0.0, k_max = 0.0;
    int grid_points = 2001;
    double tolerance = 1e-10;

    bool has_sim = false;
    sim_params sim;

    ss_query solver_query() const;
};

scene_config parse_scene(const nlohmann::json& j);
scene_config load_scene(const std::filesystem::path& path);

// full resolved config (defaults expanded) for run manifests
nlohmann::json scene_to_json(const scene_config& cfg);

// checkpoint: '# sscat-checkpoint n_sites=<n> dx=<dx> t=<t>' then re,im rows
void write_checkpoint(std::ostream& os, const lattice_model& model,
                      const simulation_state& state);
simulation_state read_checkpoint(std::istream& is, const lattice_model& model);

std::string format_double(double v); // 17 significant digits

} // namespace sscat
