#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "sscat/scene.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;
using namespace sscat;

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitNotConverged = 4;

struct not_converged_exit {};

std::ofstream open_out(const fs::path& dir, const std::string& name) {
    fs::create_directories(dir);
    std::ofstream os(dir / name);
    if (!os) throw validation_error("cannot write " + (dir / name).string());
    return os;
}

json ss_scan_json(const ss_scan& scan) {
    json j;
    j["singularities"] = json::array();
    for (const auto& r : scan.singularities)
        j["singularities"].push_back({{"k_c", r.k_c},
                                      {"residual", r.residual},
                                      {"multiplicity_hint", r.multiplicity_hint}});
    j["warnings"] = scan.warnings;
    return j;
}

void run_amplitudes(const scene_config& cfg, const fs::path& out) {
    if (!cfg.has_solver)
        throw validation_error("amplitudes: scene needs a solver section for the k grid");
    auto os = open_out(out, "amplitudes.csv");
    os << "k,re_r_left,im_r_left,re_r_right,im_r_right,re_t_left,im_t_left,"
          "re_t_right,im_t_right,abs_m22\n";
    std::span<const scattering_center> centers{cfg.centers};
    for (int i = 0; i < cfg.grid_points; ++i) {
        double k = cfg.k_min + (cfg.k_max - cfg.k_min) * i / (cfg.grid_points - 1);
        transfer_matrix m = composite_matrix(centers, k, cfg.kappa);
        double nan = std::numeric_limits<double>::quiet_NaN();
        cplx rl{nan, nan}, rr{nan, nan}, tl{nan, nan}, tr{nan, nan};
        try {
            auto amp = amplitudes_from_matrix(m);
            rl = amp.r_left; rr = amp.r_right;
            tl = amp.t_left; tr = amp.t_right;
        } catch (const singular_amplitude_error&) {
            // transmission pole: amplitudes blow up but |m22| is still reported
        }
        os << format_double(k);
        for (cplx v : {rl, rr, tl, tr})
            os << "," << format_double(v.real()) << "," << format_double(v.imag());
        os << "," << format_double(std::abs(m.m22)) << "\n";
    }
}

void run_find_ss(const scene_config& cfg, const fs::path& out) {
    if (!cfg.has_solver)
        throw validation_error("find-ss: scene needs a solver section");
    ss_scan scan = find_ss(cfg.solver_query());
    json j = ss_scan_json(scan);
    open_out(out, "ss.json") << j.dump(2) << "\n";
    std::cout << j.dump(2) << "\n";
}

struct sim_outputs {
    lattice_model model;
    simulation_state state;
    fidelity_trace trace;
    std::vector<double> norms;
    std::optional<double> t_f;
    double k_c = 0.0;
};

sim_outputs run_evolution(const sim_params& p) {
    sim_outputs r;
    r.k_c = 2.0 * p.gamma;
    r.model = build_lattice(p.gamma, p.a, p.length, p.dx);
    r.state = sample_initial_state(r.model);
    auto target = sample_wave(r.model, cavity_wave(r.k_c, p.gamma, p.a));

    double t_end = r.model.guard_time();
    long total_steps = static_cast<long>(t_end / p.dt);
    long chunks = std::min<long>(p.record_points, total_steps);

    r.trace.k = r.k_c;
    r.trace.times.push_back(0.0);
    r.trace.values.push_back(fidelity_against(r.model, r.state, target));
    r.norms.push_back(r.state.norm);
    long done = 0;
    for (long c = 1; c <= chunks; ++c) {
        long upto = total_steps * c / chunks;
        evolve(r.model, r.state, p.dt, upto - done);
        done = upto;
        r.trace.times.push_back(r.state.t);
        r.trace.values.push_back(fidelity_against(r.model, r.state, target));
        r.norms.push_back(r.state.norm);
    }
    r.t_f = relaxation_time(r.trace, p.window, p.epsilon);
    return r;
}

json sim_manifest(const scene_config& cfg, const sim_outputs& r) {
    json j;
    j["config"] = scene_to_json(cfg);
    j["derived"]["k_c"] = r.k_c;
    j["derived"]["n_sites"] = r.model.n_sites;
    j["derived"]["kappa"] = r.model.kappa;
    j["derived"]["gain_site"] = r.model.gain_site;
    j["derived"]["guard_time"] = r.model.guard_time();
    j["derived"]["final_norm"] = r.state.norm;
    // F depends on the (finite) overlap window; record it with every run
    j["derived"]["fidelity_window_length"] = r.model.length;
    if (r.t_f)
        j["derived"]["t_f"] = *r.t_f;
    else
        j["derived"]["t_f"] = nullptr;
    return j;
}

void write_trace(const fs::path& out, const sim_outputs& r) {
    auto os = open_out(out, "trace.csv");
    os << "t,re_f,im_f,abs_f,norm\n";
    for (std::size_t i = 0; i < r.trace.times.size(); ++i) {
        os << format_double(r.trace.times[i]) << ","
           << format_double(r.trace.values[i].real()) << ","
           << format_double(r.trace.values[i].imag()) << ","
           << format_double(std::abs(r.trace.values[i])) << ","
           << format_double(r.norms[i]) << "\n";
    }
}

void run_simulate(const scene_config& cfg, const fs::path& out) {
    if (!cfg.has_sim) throw validation_error("simulate: scene needs a sim section");
    sim_outputs r = run_evolution(cfg.sim);
    write_trace(out, r);
    {
        auto os = open_out(out, "checkpoint.csv");
        write_checkpoint(os, r.model, r.state);
    }
    open_out(out, "manifest.json") << sim_manifest(cfg, r).dump(2) << "\n";
    if (!r.t_f) {
        std::cerr << "simulate: no fidelity plateau within the guarded run\n";
        throw not_converged_exit{};
    }
    std::cout << "t_f = " << format_double(*r.t_f) << "\n";
}

void run_spectrum(const scene_config& cfg, const fs::path& out,
                  const std::string& checkpoint) {
    if (!cfg.has_sim) throw validation_error("spectrum: scene needs a sim section");
    const auto& p = cfg.sim;
    sim_outputs r;
    if (!checkpoint.empty()) {
        r.k_c = 2.0 * p.gamma;
        r.model = build_lattice(p.gamma, p.a, p.length, p.dx);
        std::ifstream is(checkpoint);
        if (!is) throw validation_error("spectrum: cannot open " + checkpoint);
        r.state = read_checkpoint(is, r.model);
    } else {
        r = run_evolution(p);
        if (!r.t_f) {
            std::cerr << "spectrum: no fidelity plateau within the guarded run\n";
            throw not_converged_exit{};
        }
    }

    std::vector<double> ks(p.k_points);
    for (int i = 0; i < p.k_points; ++i)
        ks[i] = p.k_min + (p.k_max - p.k_min) * i / (p.k_points - 1);
    auto spec = k_spectrum(r.model, r.state, ks);

    auto os = open_out(out, "spectrum.csv");
    os << "k,abs_f\n";
    for (const auto& pt : spec)
        os << format_double(pt.k) << "," << format_double(pt.abs_f) << "\n";

    json j = sim_manifest(cfg, r);
    j["derived"]["peak_k"] = spectrum_peak(spec);
    try {
        j["derived"]["fwhm"] = spectrum_fwhm(spec);
    } catch (const domain_error&) {
        j["derived"]["fwhm"] = nullptr; // half maximum outside the k grid
    }
    open_out(out, "spectrum_manifest.json") << j.dump(2) << "\n";
    std::cout << "peak_k = " << format_double(spectrum_peak(spec)) << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral singularities in 1D non-Hermitian composite scatterers"};
    app.require_subcommand(1);

    std::string config_path, out_dir = ".", checkpoint;
    double opt_tolerance = -1.0, opt_dx = -1.0, opt_dt = -1.0, opt_length = -1.0;
    double opt_k_min = 0.0, opt_k_max = 0.0;
    int opt_k_points = 0;
    bool k_range_set = false, seedless = false;

    auto add_common = [&](CLI::App* cmd, bool needs_config) {
        auto* c = cmd->add_option("--config", config_path, "scene JSON file");
        if (needs_config) c->required();
        cmd->add_option("--out", out_dir, "output directory");
        cmd->add_option("--tolerance", opt_tolerance, "override solver tolerance");
        cmd->add_option("--dx", opt_dx, "override sim dx");
        cmd->add_option("--dt", opt_dt, "override sim dt");
        cmd->add_option("--length", opt_length, "override sim truncation length");
        cmd->add_option("--k-min", opt_k_min, "override k grid lower edge")
            ->each([&](const std::string&) { k_range_set = true; });
        cmd->add_option("--k-max", opt_k_max, "override k grid upper edge")
            ->each([&](const std::string&) { k_range_set = true; });
        cmd->add_option("--k-points", opt_k_points, "override k grid size");
        cmd->add_flag("--seedless", seedless,
                      "accepted for compatibility; every run is deterministic");
    };

    auto* cmd_amp = app.add_subcommand("amplitudes", "composite r/t and |m22| over a k grid");
    add_common(cmd_amp, true);
    auto* cmd_find = app.add_subcommand("find-ss", "scan |m22| for spectral singularities");
    add_common(cmd_find, true);
    auto* cmd_sim = app.add_subcommand("simulate", "cavity time evolution and fidelity trace");
    add_common(cmd_sim, true);
    auto* cmd_spec = app.add_subcommand("spectrum", "k-space fidelity spectrum");
    add_common(cmd_spec, true);
    cmd_spec->add_option("--checkpoint", checkpoint, "reuse a saved field instead of evolving");

    auto* cmd_design = app.add_subcommand("design", "invert the closed-form SS conditions");
    cmd_design->require_subcommand(1);
    double d_kc = 0.0, d_split = 0.5, d_kappa = 1.0, d_gamma = 0.0;
    int d_m = 1, d_n = 0;
    long d_a = 1;
    auto* des_two = cmd_design->add_subcommand("two-delta", "V1 + V2 = k_c, spacing m*pi/k_c");
    des_two->add_option("--k-c", d_kc)->required();
    des_two->add_option("--split", d_split);
    des_two->add_option("--m", d_m);
    auto* des_lat = cmd_design->add_subcommand("lattice-pair", "gain site + Hermitian site");
    des_lat->add_option("--k-c", d_kc)->required();
    des_lat->add_option("--a", d_a)->required();
    des_lat->add_option("--kappa", d_kappa);
    auto* des_cav = cmd_design->add_subcommand("cavity", "wall + gain delta at half-integer k_c*a");
    des_cav->add_option("--gamma", d_gamma)->required();
    des_cav->add_option("--n", d_n);

    auto* cmd_wave = app.add_subcommand("wave", "export a piecewise eigenfunction to CSV");
    std::string wave_type;
    double w_v1 = 0.0, w_v2 = 0.0, w_x1 = 0.0, w_x2 = 0.0, w_k = 0.0;
    double w_gamma = 0.0, w_a = 0.0, w_xmin = 0.0, w_xmax = 0.0;
    int w_points = 1001;
    cmd_wave->add_option("--type", wave_type, "two-delta-ss | cavity | initial")->required();
    cmd_wave->add_option("--v1", w_v1);
    cmd_wave->add_option("--v2", w_v2);
    cmd_wave->add_option("--x1", w_x1);
    cmd_wave->add_option("--x2", w_x2);
    cmd_wave->add_option("--k", w_k);
    cmd_wave->add_option("--gamma", w_gamma);
    cmd_wave->add_option("--a", w_a);
    cmd_wave->add_option("--x-min", w_xmin)->required();
    cmd_wave->add_option("--x-max", w_xmax)->required();
    cmd_wave->add_option("--points", w_points);
    cmd_wave->add_option("--out", out_dir, "output directory");

    CLI11_PARSE(app, argc, argv);
    (void)seedless;

    try {
        if (cmd_design->parsed()) {
            json j;
            if (des_two->parsed()) {
                auto d = design_two_delta(d_kc, d_split, d_m);
                j = {{"k_c", d_kc}, {"v1", d.v1}, {"v2", d.v2}, {"spacing", d.spacing}};
            } else if (des_lat->parsed()) {
                auto d = design_lattice_pair(d_kc, d_a, d_kappa);
                j = {{"k_c", d_kc}, {"a", d_a}, {"kappa", d_kappa},
                     {"gamma", d.gamma}, {"v", d.v}};
            } else {
                auto d = design_cavity(d_gamma, d_n);
                j = {{"gamma", d_gamma}, {"n", d_n}, {"k_c", d.k_c}, {"a", d.a}};
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }
        if (cmd_wave->parsed()) {
            piecewise_wave w;
            if (wave_type == "two-delta-ss")
                w = two_delta_ss_wave(w_v1, w_v2, w_x1, w_x2);
            else if (wave_type == "cavity")
                w = cavity_wave(w_k, w_gamma, w_a);
            else if (wave_type == "initial")
                w = initial_cavity_state(w_k, w_a);
            else
                throw validation_error("wave: unknown --type " + wave_type);
            auto os = open_out(out_dir, "wave.csv");
            write_csv(os, w, w_xmin, w_xmax, w_points);
            return 0;
        }

        scene_config cfg = load_scene(config_path);
        if (opt_tolerance > 0.0) cfg.tolerance = opt_tolerance;
        if (opt_dx > 0.0) {
            cfg.sim.dx = opt_dx;
            cfg.sim.dt = 0.25 * opt_dx * opt_dx;
        }
        if (opt_dt > 0.0) cfg.sim.dt = opt_dt;
        if (opt_length > 0.0) cfg.sim.length = opt_length;
        if (k_range_set) {
            cfg.k_min = cfg.sim.k_min = opt_k_min;
            cfg.k_max = cfg.sim.k_max = opt_k_max;
        }
        if (opt_k_points > 0) {
            cfg.grid_points = opt_k_points;
            cfg.sim.k_points = opt_k_points;
        }

        if (cmd_amp->parsed()) run_amplitudes(cfg, out_dir);
        else if (cmd_find->parsed()) run_find_ss(cfg, out_dir);
        else if (cmd_sim->parsed()) run_simulate(cfg, out_dir);
        else if (cmd_spec->parsed()) run_spectrum(cfg, out_dir, checkpoint);
        return 0;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const not_converged_exit&) {
        return kExitNotConverged;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
}
