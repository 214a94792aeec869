#include "elastoscat/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace elast {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, const std::string& where,
                    const std::set<std::string>& allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (!allowed.count(it.key()))
            throw invalid_input("config." + where + ": unknown key '" + it.key() + "'");
}

double num(const json& obj, const std::string& where, const char* key, double dflt) {
    if (!obj.contains(key)) return dflt;
    if (!obj[key].is_number())
        throw invalid_input("config." + where + "." + key + ": expected a number");
    return obj[key].get<double>();
}

int integer(const json& obj, const std::string& where, const char* key, int dflt) {
    if (!obj.contains(key)) return dflt;
    if (!obj[key].is_number_integer())
        throw invalid_input("config." + where + "." + key + ": expected an integer");
    return obj[key].get<int>();
}

Vec2 vec2(const json& obj, const std::string& where, const char* key, Vec2 dflt) {
    if (!obj.contains(key)) return dflt;
    const json& v = obj[key];
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        throw invalid_input("config." + where + "." + key + ": expected [x, y]");
    return {v[0].get<double>(), v[1].get<double>()};
}

BoundaryCurve parse_geometry(const json& g, const std::string& where) {
    if (!g.contains("family") || !g["family"].is_string())
        throw invalid_input("config." + where + ".family: required string");
    const std::string fam = g["family"].get<std::string>();
    const Vec2 c = vec2(g, where, "center", {});
    if (fam == "disc") {
        reject_unknown(g, where, {"family", "center", "r0"});
        return BoundaryCurve::disc(num(g, where, "r0", 1.0), c);
    }
    if (fam == "ellipse") {
        reject_unknown(g, where, {"family", "center", "a", "b"});
        return BoundaryCurve::ellipse(num(g, where, "a", 1.0), num(g, where, "b", 0.5), c);
    }
    if (fam == "kite") {
        reject_unknown(g, where, {"family", "center"});
        return BoundaryCurve::kite(c);
    }
    if (fam == "radial_perturbation") {
        reject_unknown(g, where, {"family", "center", "r0", "delta", "m"});
        return BoundaryCurve::radial_perturbation(num(g, where, "r0", 1.0),
                                                  num(g, where, "delta", 0.05),
                                                  integer(g, where, "m", 2), c);
    }
    throw invalid_input("config." + where + ".family: unknown family '" + fam + "'");
}

json geometry_to_json(const BoundaryCurve& c) {
    json g;
    g["family"] = family_name(c.family());
    if (c.center().x != 0.0 || c.center().y != 0.0)
        g["center"] = {c.center().x, c.center().y};
    switch (c.family()) {
        case CurveFamily::disc: g["r0"] = c.param(0); break;
        case CurveFamily::ellipse:
            g["a"] = c.param(0);
            g["b"] = c.param(1);
            break;
        case CurveFamily::kite: break;
        case CurveFamily::radial_perturbation:
            g["r0"] = c.param(0);
            g["delta"] = c.param(1);
            g["m"] = static_cast<int>(c.param(2));
            break;
    }
    return g;
}

}  // namespace

IncidentPlaneWave RunConfig::incident_wave() const {
    Vec2 d{std::cos(incident_angle), std::sin(incident_angle)};
    return incident_kind == WaveKind::longitudinal
               ? IncidentPlaneWave::longitudinal(d, incident_phase)
               : IncidentPlaneWave::transversal(d, incident_phase);
}

RunConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw invalid_input(std::string("config: json parse error: ") + e.what());
    }
    if (!j.is_object()) throw invalid_input("config: top level must be an object");
    reject_unknown(j, "", {"medium", "incident", "geometry", "geometry2", "regularity",
                           "discretization", "sweep", "seed", "output", "threads"});

    RunConfig cfg;
    if (j.contains("medium")) {
        const json& m = j["medium"];
        reject_unknown(m, "medium", {"lambda", "mu", "rho", "omega"});
        cfg.medium = ElasticMedium(num(m, "medium", "lambda", 2.0), num(m, "medium", "mu", 1.0),
                                   num(m, "medium", "rho", 1.0), num(m, "medium", "omega", 2.0));
    }
    if (j.contains("incident")) {
        const json& w = j["incident"];
        reject_unknown(w, "incident", {"kind", "direction_angle", "phase"});
        if (w.contains("kind")) {
            const std::string k = w["kind"].get<std::string>();
            if (k == "longitudinal")
                cfg.incident_kind = WaveKind::longitudinal;
            else if (k == "transversal")
                cfg.incident_kind = WaveKind::transversal;
            else
                throw invalid_input("config.incident.kind: must be longitudinal or transversal");
        }
        cfg.incident_angle = num(w, "incident", "direction_angle", 0.0);
        cfg.incident_phase = num(w, "incident", "phase", 0.0);
    }
    if (j.contains("geometry")) cfg.geometry = parse_geometry(j["geometry"], "geometry");
    if (j.contains("geometry2"))
        cfg.geometry2 = parse_geometry(j["geometry2"], "geometry2");
    if (j.contains("regularity")) {
        const json& r = j["regularity"];
        reject_unknown(r, "regularity", {"r", "L", "R", "alpha", "H0"});
        cfg.reg.r = num(r, "regularity", "r", cfg.reg.r);
        cfg.reg.L = num(r, "regularity", "L", cfg.reg.L);
        cfg.reg.R = num(r, "regularity", "R", cfg.reg.R);
        cfg.reg.alpha = num(r, "regularity", "alpha", cfg.reg.alpha);
        cfg.reg.H0 = num(r, "regularity", "H0", cfg.reg.H0);
    }
    if (j.contains("discretization")) {
        const json& d = j["discretization"];
        reject_unknown(d, "discretization",
                       {"n", "directions", "probe_count", "distance_samples",
                        "fd_step_factor"});
        cfg.n = integer(d, "discretization", "n", cfg.n);
        cfg.distance_samples =
            integer(d, "discretization", "distance_samples", cfg.distance_samples);
        cfg.directions = integer(d, "discretization", "directions", cfg.directions);
        cfg.probe_count = integer(d, "discretization", "probe_count", cfg.probe_count);
        cfg.fd_step_factor = num(d, "discretization", "fd_step_factor", cfg.fd_step_factor);
    }
    if (j.contains("sweep")) {
        const json& s = j["sweep"];
        reject_unknown(s, "sweep", {"amplitudes", "mode", "s_tilde", "x0_angle"});
        if (s.contains("amplitudes")) {
            if (!s["amplitudes"].is_array())
                throw invalid_input("config.sweep.amplitudes: expected an array");
            cfg.amplitudes.clear();
            for (const auto& a : s["amplitudes"]) {
                if (!a.is_number())
                    throw invalid_input("config.sweep.amplitudes: expected numbers");
                cfg.amplitudes.push_back(a.get<double>());
            }
        }
        cfg.perturbation_mode = integer(s, "sweep", "mode", cfg.perturbation_mode);
        cfg.s_tilde = num(s, "sweep", "s_tilde", cfg.s_tilde);
        cfg.x0_angle = num(s, "sweep", "x0_angle", cfg.x0_angle);
    }
    if (j.contains("seed")) {
        if (!j["seed"].is_number_integer())
            throw invalid_input("config.seed: expected an integer");
        cfg.seed = j["seed"].get<std::uint64_t>();
    }
    if (j.contains("output")) {
        if (!j["output"].is_string())
            throw invalid_input("config.output: expected a string");
        cfg.output = j["output"].get<std::string>();
    }
    if (j.contains("threads")) {
        int t = integer(j, "", "threads", 1);
        if (t < 1) throw invalid_input("config.threads: must be >= 1");
        cfg.threads = t;
    }

    // module precondition checks that do not need a solve
    if (cfg.n < 32 || cfg.n % 2)
        throw invalid_input("config.discretization.n: must be even and >= 32");
    if (cfg.directions < 64)
        throw invalid_input("config.discretization.directions: must be >= 64");
    if (cfg.probe_count < 1)
        throw invalid_input("config.discretization.probe_count: must be >= 1");
    if (cfg.distance_samples < 256)
        throw invalid_input("config.discretization.distance_samples: must be >= 256");
    if (!(cfg.fd_step_factor > 0.0))
        throw invalid_input("config.discretization.fd_step_factor: must be positive");
    if (!(cfg.s_tilde > 0.0)) throw invalid_input("config.sweep.s_tilde: must be positive");
    cfg.reg.validate(cfg.medium, 2);
    if (cfg.geometry.bounding_radius() > cfg.reg.R)
        throw invalid_input("config.geometry: scatterer leaves the a-priori disc B_R");
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("config: cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string RunConfig::echo() const {
    json j;
    j["medium"] = {{"lambda", medium.lambda()}, {"mu", medium.mu()},
                   {"rho", medium.rho()}, {"omega", medium.omega()}};
    j["incident"] = {{"kind", incident_kind == WaveKind::longitudinal ? "longitudinal"
                                                                      : "transversal"},
                     {"direction_angle", incident_angle},
                     {"phase", incident_phase}};
    j["geometry"] = geometry_to_json(geometry);
    if (geometry2) j["geometry2"] = geometry_to_json(*geometry2);
    j["regularity"] = {{"r", reg.r}, {"L", reg.L}, {"R", reg.R}, {"alpha", reg.alpha},
                       {"H0", reg.H0}};
    j["discretization"] = {{"n", n}, {"directions", directions},
                           {"probe_count", probe_count},
                           {"distance_samples", distance_samples},
                           {"fd_step_factor", fd_step_factor}};
    j["sweep"] = {{"amplitudes", amplitudes}, {"mode", perturbation_mode},
                  {"s_tilde", s_tilde}, {"x0_angle", x0_angle}};
    j["seed"] = seed;
    j["output"] = output;
    if (threads) j["threads"] = *threads;
    return j.dump();
}

std::string extract_config_echo(const std::string& text) {
    std::istringstream is(text);
    std::string line;
    const std::string tag = "# config: ";
    while (std::getline(is, line))
        if (line.rfind(tag, 0) == 0) return line.substr(tag.size());
    throw invalid_input("no config echo found in output header");
}

}  // namespace elast
