#include "mcam/config.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "mcam/errors.hpp"

namespace mcam {

using nlohmann::json;

namespace {

// Reads fields of one JSON object and rejects keys nobody asked for.
class ObjectReader {
public:
    ObjectReader(const json& j, std::string context) : j_(j), context_(std::move(context)) {
        if (!j_.is_object()) {
            throw ConfigError(context_ + " must be a JSON object");
        }
    }

    const json* find(const std::string& key) {
        seen_.insert(key);
        const auto it = j_.find(key);
        if (it == j_.end() || it->is_null()) {
            return nullptr;
        }
        return &*it;
    }

    const json& require(const std::string& key) {
        const json* v = find(key);
        if (v == nullptr) {
            throw ConfigError("missing required key '" + path(key) + "'");
        }
        return *v;
    }

    double number(const std::string& key, double fallback) {
        const json* v = find(key);
        return v == nullptr ? fallback : as_number(*v, key);
    }

    double number(const std::string& key) { return as_number(require(key), key); }

    std::optional<double> optional_number(const std::string& key) {
        const json* v = find(key);
        if (v == nullptr) {
            return std::nullopt;
        }
        return as_number(*v, key);
    }

    std::string string(const std::string& key, const std::string& fallback) {
        const json* v = find(key);
        if (v == nullptr) {
            return fallback;
        }
        if (!v->is_string()) {
            throw ConfigError("'" + path(key) + "' must be a string");
        }
        return v->get<std::string>();
    }

    Vec3 vec3(const std::string& key) {
        const json& v = require(key);
        if (!v.is_array() || v.size() != 3) {
            throw ConfigError("'" + path(key) + "' must be an array of 3 numbers");
        }
        return {as_number(v[0], key), as_number(v[1], key), as_number(v[2], key)};
    }

    void finish() const {
        for (const auto& item : j_.items()) {
            if (seen_.count(item.key()) == 0) {
                throw ConfigError("unknown key '" + path(item.key()) + "'");
            }
        }
    }

    [[nodiscard]] std::string path(const std::string& key) const { return context_ + "." + key; }

private:
    double as_number(const json& v, const std::string& key) const {
        if (!v.is_number()) {
            throw ConfigError("'" + path(key) + "' must be a number");
        }
        const double d = v.get<double>();
        if (!std::isfinite(d)) {
            throw ConfigError("'" + path(key) + "' must be finite");
        }
        return d;
    }

    const json& j_;
    std::string context_;
    std::set<std::string> seen_;
};

SpeedProfile parse_speed(const json& j, const std::string& context) {
    if (j.is_number()) {
        return SpeedProfile::constant(j.get<double>());
    }
    ObjectReader r(j, context);
    const std::string kind = r.string("kind", "constant");
    SpeedProfile out = SpeedProfile::constant(1.0);
    if (kind == "constant") {
        out = SpeedProfile::constant(r.number("value"));
    } else if (kind == "scripted") {
        out = SpeedProfile::scripted(r.number("base"), r.number("amplitude"), r.number("angular_frequency"),
                                     r.number("phase", 0.0));
    } else {
        throw ConfigError("'" + r.path("kind") + "' must be \"constant\" or \"scripted\"");
    }
    r.finish();
    return out;
}

EvaderProfileConfig parse_profile(const json& j, const std::string& context) {
    ObjectReader r(j, context);
    EvaderProfileConfig p;
    const std::string kind = r.string("kind", "straight");
    if (kind == "straight") {
        p.kind = EvaderProfileConfig::Kind::straight;
    } else if (kind == "sinusoid") {
        p.kind = EvaderProfileConfig::Kind::sinusoid;
        p.amplitude = r.number("amplitude", p.amplitude);
        p.angular_frequency = r.number("angular_frequency", p.angular_frequency);
        p.phase = r.number("phase", p.phase);
    } else if (kind == "random") {
        p.kind = EvaderProfileConfig::Kind::random;
        const json* seed = r.find("seed");
        if (seed != nullptr) {
            if (!seed->is_number_unsigned()) {
                throw ConfigError("'" + r.path("seed") + "' must be a nonnegative integer");
            }
            p.seed = seed->get<std::uint64_t>();
        }
        p.hold_time = r.number("hold_time", p.hold_time);
        p.curvature_bound = r.number("curvature_bound", p.curvature_bound);
    } else if (kind == "circular") {
        p.kind = EvaderProfileConfig::Kind::circular;
        p.u = r.number("u");
        p.v = r.number("v");
    } else {
        throw ConfigError("'" + r.path("kind") + "' must be one of straight, sinusoid, random, circular");
    }
    r.finish();
    return p;
}

AgentConfig parse_agent(const json& j, const std::string& context, EvaderProfileConfig* profile) {
    ObjectReader r(j, context);
    AgentConfig a;
    a.position = r.vec3("position");
    a.heading = r.vec3("heading");
    a.speed = parse_speed(r.require("speed"), r.path("speed"));
    if (profile != nullptr) {
        const json* p = r.find("profile");
        *profile = p == nullptr ? EvaderProfileConfig{} : parse_profile(*p, r.path("profile"));
    }
    r.finish();
    return a;
}

json speed_json(const SpeedProfile& s) {
    if (s.kind() == SpeedProfile::Kind::constant) {
        return {{"kind", "constant"}, {"value", s.base()}};
    }
    return {{"kind", "scripted"},
            {"base", s.base()},
            {"amplitude", s.amplitude()},
            {"angular_frequency", s.angular_frequency()},
            {"phase", s.phase()}};
}

json vec_json(const Vec3& v) { return json::array({v.x, v.y, v.z}); }

json optional_json(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

void validate(const ScenarioConfig& cfg) {
    if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) {
        throw ConfigError("dt must be positive");
    }
    if (!(cfg.stop.capture_radius >= 0.0)) {
        throw ConfigError("capture radius must be nonnegative");
    }
    if (!(cfg.stop.max_time > 0.0) || !std::isfinite(cfg.stop.max_time)) {
        throw ConfigError("max_time must be positive and finite");
    }
    if (cfg.stop.gamma_threshold && !(*cfg.stop.gamma_threshold >= -1.0 && *cfg.stop.gamma_threshold <= 1.0)) {
        throw ConfigError("gamma_threshold must lie in [-1, 1]");
    }
    if (cfg.curvature_cap && !(*cfg.curvature_cap > 0.0)) {
        throw ConfigError("curvature_cap must be positive");
    }
    if (cfg.log_every < 1) {
        throw ConfigError("log_every must be at least 1");
    }
    if (!(cfg.transient_fraction >= 0.0 && cfg.transient_fraction < 1.0)) {
        throw ConfigError("transient_fraction must lie in [0, 1)");
    }
    if (cfg.navigation_constant && !(*cfg.navigation_constant > 0.0)) {
        throw ConfigError("navigation_constant must be positive");
    }
    if (cfg.gain.mode == GainConfig::Mode::explicit_mu && !(cfg.gain.mu >= 0.0)) {
        throw ConfigError("explicit gain mu must be nonnegative");
    }
    if (!(cfg.gain.epsilon_o > 0.0 && cfg.gain.epsilon_o < 1.0)) {
        throw ConfigError("epsilon_o must lie in (0, 1)");
    }
    if (cfg.gain.r_o && !(*cfg.gain.r_o > 0.0)) {
        throw ConfigError("r_o must be positive");
    }
    const auto& p = cfg.profile;
    switch (p.kind) {
        case EvaderProfileConfig::Kind::straight:
            break;
        case EvaderProfileConfig::Kind::sinusoid:
            if (!(p.amplitude >= 0.0)) {
                throw ConfigError("sinusoid amplitude must be nonnegative");
            }
            break;
        case EvaderProfileConfig::Kind::random:
            if (!(p.hold_time > 0.0)) {
                throw ConfigError("random profile hold_time must be positive");
            }
            if (!(p.curvature_bound >= 0.0)) {
                throw ConfigError("random profile curvature_bound must be nonnegative");
            }
            break;
        case EvaderProfileConfig::Kind::circular:
            if (p.u == 0.0 && p.v == 0.0) {
                throw ConfigError("circular profile needs a nonzero curvature");
            }
            break;
    }
    if (!is_finite(cfg.pursuer.position) || !is_finite(cfg.evader.position) || !is_finite(cfg.pursuer.heading) ||
        !is_finite(cfg.evader.heading)) {
        throw ConfigError("positions and headings must be finite");
    }
    if (!(norm(cfg.pursuer.heading) > 1e-9) || !(norm(cfg.evader.heading) > 1e-9)) {
        throw ConfigError("headings must be nonzero");
    }
}

ScenarioConfig parse_config(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("invalid JSON: ") + e.what());
    }
    ObjectReader r(doc, "config");
    ScenarioConfig cfg;
    cfg.name = r.string("name", cfg.name);
    cfg.pursuer = parse_agent(r.require("pursuer"), r.path("pursuer"), nullptr);
    cfg.evader = parse_agent(r.require("evader"), r.path("evader"), &cfg.profile);

    if (const json* g = r.find("gain")) {
        ObjectReader gr(*g, r.path("gain"));
        const std::string mode = gr.string("mode", "certificate");
        if (mode == "certificate") {
            cfg.gain.mode = GainConfig::Mode::certificate;
        } else if (mode == "explicit") {
            cfg.gain.mode = GainConfig::Mode::explicit_mu;
            cfg.gain.mu = gr.number("mu");
        } else {
            throw ConfigError("'" + gr.path("mode") + "' must be \"certificate\" or \"explicit\"");
        }
        cfg.gain.epsilon_o = gr.number("epsilon_o", cfg.gain.epsilon_o);
        cfg.gain.r_o = gr.optional_number("r_o");
        gr.finish();
    }
    cfg.dt = r.number("dt", cfg.dt);
    if (const json* s = r.find("stop")) {
        ObjectReader sr(*s, r.path("stop"));
        cfg.stop.capture_radius = sr.number("capture_radius", cfg.stop.capture_radius);
        cfg.stop.max_time = sr.number("max_time", cfg.stop.max_time);
        cfg.stop.gamma_threshold = sr.optional_number("gamma_threshold");
        sr.finish();
    }
    cfg.curvature_cap = r.optional_number("curvature_cap");
    cfg.nu_max = r.optional_number("nu_max");
    if (const json* le = r.find("log_every")) {
        if (!le->is_number_integer()) {
            throw ConfigError("'config.log_every' must be an integer");
        }
        cfg.log_every = le->get<int>();
    }
    if (const json* pp = r.find("ppng")) {
        ObjectReader pr(*pp, r.path("ppng"));
        cfg.navigation_constant = pr.optional_number("navigation_constant");
        pr.finish();
    }
    cfg.transient_fraction = r.number("transient_fraction", cfg.transient_fraction);
    r.finish();
    validate(cfg);
    return cfg;
}

ScenarioConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open config file '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

std::string to_json(const ScenarioConfig& cfg) {
    json profile;
    switch (cfg.profile.kind) {
        case EvaderProfileConfig::Kind::straight:
            profile = {{"kind", "straight"}};
            break;
        case EvaderProfileConfig::Kind::sinusoid:
            profile = {{"kind", "sinusoid"},
                       {"amplitude", cfg.profile.amplitude},
                       {"angular_frequency", cfg.profile.angular_frequency},
                       {"phase", cfg.profile.phase}};
            break;
        case EvaderProfileConfig::Kind::random:
            profile = {{"kind", "random"},
                       {"seed", cfg.profile.seed},
                       {"hold_time", cfg.profile.hold_time},
                       {"curvature_bound", cfg.profile.curvature_bound}};
            break;
        case EvaderProfileConfig::Kind::circular:
            profile = {{"kind", "circular"}, {"u", cfg.profile.u}, {"v", cfg.profile.v}};
            break;
    }
    json gain = {{"mode", cfg.gain.mode == GainConfig::Mode::certificate ? "certificate" : "explicit"},
                 {"epsilon_o", cfg.gain.epsilon_o},
                 {"r_o", optional_json(cfg.gain.r_o)}};
    if (cfg.gain.mode == GainConfig::Mode::explicit_mu) {
        gain["mu"] = cfg.gain.mu;
    }
    const json doc = {
        {"name", cfg.name},
        {"pursuer",
         {{"position", vec_json(cfg.pursuer.position)},
          {"heading", vec_json(cfg.pursuer.heading)},
          {"speed", speed_json(cfg.pursuer.speed)}}},
        {"evader",
         {{"position", vec_json(cfg.evader.position)},
          {"heading", vec_json(cfg.evader.heading)},
          {"speed", speed_json(cfg.evader.speed)},
          {"profile", profile}}},
        {"gain", gain},
        {"dt", cfg.dt},
        {"stop",
         {{"capture_radius", cfg.stop.capture_radius},
          {"max_time", cfg.stop.max_time},
          {"gamma_threshold", optional_json(cfg.stop.gamma_threshold)}}},
        {"curvature_cap", optional_json(cfg.curvature_cap)},
        {"nu_max", optional_json(cfg.nu_max)},
        {"log_every", cfg.log_every},
        {"ppng", {{"navigation_constant", optional_json(cfg.navigation_constant)}}},
        {"transient_fraction", cfg.transient_fraction},
    };
    return doc.dump(2);
}

}  // namespace mcam
