#include "sscat/scene.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace sscat {

namespace {

using nlohmann::json;

void reject_unknown(const json& j, std::initializer_list<const char*> keys,
                    const std::string& where) {
    for (const auto& [key, value] : j.items()) {
        bool known = false;
        for (const char* k : keys)
            if (key == k) known = true;
        if (!known)
            throw validation_error("scene: unknown key '" + key + "' in " + where);
    }
}

double require_number(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key) || !j[key].is_number())
        throw validation_error("scene: missing numeric '" + std::string(key) +
                               "' in " + where);
    return j[key].get<double>();
}

cplx parse_complex(const json& j, const std::string& where) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
        return {j[0].get<double>(), j[1].get<double>()};
    throw validation_error("scene: strength must be a number or [re, im] in " + where);
}

scattering_center parse_center(const json& j, const std::string& where) {
    reject_unknown(j, {"kind", "position", "strength"}, where);
    if (!j.contains("kind") || !j["kind"].is_string())
        throw validation_error("scene: center needs a 'kind' string in " + where);
    std::string kind = j["kind"].get<std::string>();
    double pos = require_number(j, "position", where);
    if (kind == "hard-wall") {
        if (j.contains("strength"))
            throw validation_error("scene: hard wall takes no strength in " + where);
        return scattering_center::hard_wall(pos);
    }
    if (!j.contains("strength"))
        throw validation_error("scene: center needs a 'strength' in " + where);
    cplx s = parse_complex(j["strength"], where);
    if (kind == "continuous-delta")
        return scattering_center::continuous_delta(pos, s);
    if (kind == "lattice-site") {
        if (pos != std::floor(pos))
            throw validation_error("scene: lattice-site position must be an integer in " + where);
        return scattering_center::lattice_site(static_cast<long>(pos), s);
    }
    throw validation_error("scene: unknown center kind '" + kind + "' in " + where);
}

} // namespace

ss_query scene_config::solver_query() const {
    ss_query q;
    q.centers = centers;
    q.k_min = k_min;
    q.k_max = k_max;
    q.grid_points = grid_points;
    q.tolerance = tolerance;
    q.kappa = kappa;
    return q;
}

scene_config parse_scene(const nlohmann::json& j) {
    reject_unknown(j, {"model", "centers", "solver", "sim"}, "scene");
    scene_config cfg;

    if (j.contains("model")) {
        const auto& m = j["model"];
        reject_unknown(m, {"type", "kappa"}, "model");
        std::string type = m.value("type", "continuous");
        if (type == "continuous") {
            cfg.model = scene_config::model_type::continuous;
            if (m.contains("kappa"))
                throw validation_error("scene: kappa applies to lattice models only");
        } else if (type == "lattice") {
            cfg.model = scene_config::model_type::lattice;
            cfg.kappa = m.contains("kappa") ? require_number(m, "kappa", "model") : 1.0;
            if (!(cfg.kappa > 0.0))
                throw validation_error("scene: kappa must be positive");
        } else {
            throw validation_error("scene: model type must be continuous or lattice");
        }
    }

    if (j.contains("centers")) {
        if (!j["centers"].is_array())
            throw validation_error("scene: centers must be an array");
        int idx = 0;
        for (const auto& c : j["centers"]) {
            auto center = parse_center(c, "centers[" + std::to_string(idx) + "]");
            bool lattice = cfg.model == scene_config::model_type::lattice;
            if (center.kind == center_kind::lattice_site && !lattice)
                throw validation_error("scene: lattice-site center in a continuous model");
            if (center.kind == center_kind::continuous_delta && lattice)
                throw validation_error("scene: continuous-delta center in a lattice model");
            cfg.centers.push_back(center);
            ++idx;
        }
    }

    if (j.contains("solver")) {
        const auto& s = j["solver"];
        reject_unknown(s, {"k_min", "k_max", "grid_points", "tolerance"}, "solver");
        cfg.has_solver = true;
        cfg.k_min = require_number(s, "k_min", "solver");
        cfg.k_max = require_number(s, "k_max", "solver");
        if (s.contains("grid_points")) cfg.grid_points = s["grid_points"].get<int>();
        if (s.contains("tolerance")) cfg.tolerance = require_number(s, "tolerance", "solver");
        if (!(cfg.k_min < cfg.k_max))
            throw validation_error("scene: solver needs k_min < k_max");
        if (cfg.grid_points < 2)
            throw validation_error("scene: solver needs grid_points >= 2");
        if (!(cfg.tolerance > 0.0))
            throw validation_error("scene: solver tolerance must be positive");
    }

    if (j.contains("sim")) {
        const auto& s = j["sim"];
        reject_unknown(s,
                       {"gamma", "a", "length", "dx", "dt", "epsilon", "window",
                        "k_min", "k_max", "k_points", "record_points"},
                       "sim");
        cfg.has_sim = true;
        auto& p = cfg.sim;
        p.gamma = require_number(s, "gamma", "sim");
        p.a = require_number(s, "a", "sim");
        if (!(p.a > 0.0)) throw validation_error("scene: sim.a must be positive");
        p.length = s.contains("length") ? require_number(s, "length", "sim") : 8.0 * p.a;
        p.dx = s.contains("dx") ? require_number(s, "dx", "sim") : p.a / 2048.0;
        p.dt = s.contains("dt") ? require_number(s, "dt", "sim") : 0.25 * p.dx * p.dx;
        if (s.contains("epsilon")) p.epsilon = require_number(s, "epsilon", "sim");
        if (s.contains("window")) p.window = require_number(s, "window", "sim");
        double k_c = 2.0 * p.gamma;
        p.k_min = s.contains("k_min") ? require_number(s, "k_min", "sim") : 0.75 * k_c;
        p.k_max = s.contains("k_max") ? require_number(s, "k_max", "sim") : 1.25 * k_c;
        if (s.contains("k_points")) p.k_points = s["k_points"].get<int>();
        if (s.contains("record_points")) p.record_points = s["record_points"].get<int>();
        if (p.k_points < 3 || p.record_points < 2)
            throw validation_error("scene: sim grids are too small");
    }

    return cfg;
}

scene_config load_scene(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("scene: cannot open " + path.string());
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw validation_error("scene: " + path.string() + ": " + e.what());
    }
    return parse_scene(j);
}

nlohmann::json scene_to_json(const scene_config& cfg) {
    json j;
    j["model"]["type"] =
        cfg.model == scene_config::model_type::continuous ? "continuous" : "lattice";
    if (cfg.model == scene_config::model_type::lattice)
        j["model"]["kappa"] = cfg.kappa;
    j["centers"] = json::array();
    for (const auto& c : cfg.centers) {
        json jc;
        switch (c.kind) {
        case center_kind::continuous_delta: jc["kind"] = "continuous-delta"; break;
        case center_kind::hard_wall: jc["kind"] = "hard-wall"; break;
        case center_kind::lattice_site: jc["kind"] = "lattice-site"; break;
        }
        jc["position"] = c.position;
        if (c.kind != center_kind::hard_wall)
            jc["strength"] = {c.strength.real(), c.strength.imag()};
        j["centers"].push_back(jc);
    }
    if (cfg.has_solver) {
        j["solver"] = {{"k_min", cfg.k_min},
                       {"k_max", cfg.k_max},
                       {"grid_points", cfg.grid_points},
                       {"tolerance", cfg.tolerance}};
    }
    if (cfg.has_sim) {
        const auto& p = cfg.sim;
        j["sim"] = {{"gamma", p.gamma},     {"a", p.a},
                    {"length", p.length},   {"dx", p.dx},
                    {"dt", p.dt},           {"epsilon", p.epsilon},
                    {"window", p.window},   {"k_min", p.k_min},
                    {"k_max", p.k_max},     {"k_points", p.k_points},
                    {"record_points", p.record_points}};
    }
    return j;
}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_checkpoint(std::ostream& os, const lattice_model& model,
                      const simulation_state& state) {
    os << "# sscat-checkpoint n_sites=" << model.n_sites
       << " dx=" << format_double(model.dx) << " t=" << format_double(state.t)
       << "\n";
    for (const auto& v : state.amplitudes)
        os << format_double(v.real()) << "," << format_double(v.imag()) << "\n";
}

simulation_state read_checkpoint(std::istream& is, const lattice_model& model) {
    std::string header;
    if (!std::getline(is, header) ||
        header.rfind("# sscat-checkpoint", 0) != 0)
        throw validation_error("checkpoint: bad header");
    int n_sites = 0;
    double dx = 0.0, t = 0.0;
    if (std::sscanf(header.c_str(), "# sscat-checkpoint n_sites=%d dx=%lf t=%lf",
                    &n_sites, &dx, &t) != 3)
        throw validation_error("checkpoint: unparsable header");
    if (n_sites != model.n_sites || std::abs(dx - model.dx) > 1e-15 * model.dx)
        throw validation_error("checkpoint: grid does not match the model");
    simulation_state s;
    s.t = t;
    s.amplitudes.reserve(n_sites);
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        double re = 0.0, im = 0.0;
        if (std::sscanf(line.c_str(), "%lf,%lf", &re, &im) != 2)
            throw validation_error("checkpoint: bad row '" + line + "'");
        s.amplitudes.emplace_back(re, im);
    }
    if (static_cast<int>(s.amplitudes.size()) != n_sites)
        throw validation_error("checkpoint: row count does not match n_sites");
    s.refresh_norm(model.dx);
    return s;
}

} // namespace sscat
