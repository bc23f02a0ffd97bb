#include "mcam/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <random>

#include "mcam/errors.hpp"
#include "mcam/guidance.hpp"

namespace mcam {

EvaderProfile::EvaderProfile(const EvaderProfileConfig& cfg) : cfg_(cfg) {}

CurvatureControl EvaderProfile::segment(std::int64_t index) const {
    const auto idx = static_cast<std::uint64_t>(index);
    std::seed_seq seq{static_cast<std::uint32_t>(cfg_.seed), static_cast<std::uint32_t>(cfg_.seed >> 32U),
                      static_cast<std::uint32_t>(idx), static_cast<std::uint32_t>(idx >> 32U)};
    std::mt19937_64 gen(seq);
    // 53-bit mantissa draw mapped to [-1, 1); independent of the library's distribution classes.
    auto unit = [&gen] { return 2.0 * static_cast<double>(gen() >> 11U) * 0x1.0p-53 - 1.0; };
    const double k = cfg_.curvature_bound;
    const double u = k * unit();
    const double v = k * unit();
    return CurvatureControl{u, v}.saturated(k);
}

CurvatureControl EvaderProfile::at(double t) const {
    switch (cfg_.kind) {
        case EvaderProfileConfig::Kind::straight:
            return {};
        case EvaderProfileConfig::Kind::sinusoid: {
            const double arg = cfg_.angular_frequency * t + cfg_.phase;
            return {cfg_.amplitude * std::sin(arg), cfg_.amplitude * std::cos(arg)};
        }
        case EvaderProfileConfig::Kind::random:
            return segment(static_cast<std::int64_t>(std::floor(t / cfg_.hold_time)));
        case EvaderProfileConfig::Kind::circular:
            return {cfg_.u, cfg_.v};
    }
    return {};
}

double EvaderProfile::curvature_bound() const noexcept {
    switch (cfg_.kind) {
        case EvaderProfileConfig::Kind::straight:
            return 0.0;
        case EvaderProfileConfig::Kind::sinusoid:
            return std::abs(cfg_.amplitude);
        case EvaderProfileConfig::Kind::random:
            return cfg_.curvature_bound;
        case EvaderProfileConfig::Kind::circular:
            return std::hypot(cfg_.u, cfg_.v);
    }
    return 0.0;
}

bool EvaderProfile::piecewise_constant() const noexcept { return cfg_.kind == EvaderProfileConfig::Kind::random; }

CurvatureControl evader_profile(const ScenarioConfig& cfg, double t) { return EvaderProfile(cfg.profile).at(t); }

namespace {

struct InitialState {
    ParticleState pursuer;
    ParticleState evader;
};

InitialState initial_state(const ScenarioConfig& cfg) {
    return {make_particle(cfg.pursuer.position, cfg.pursuer.heading, cfg.pursuer.speed),
            make_particle(cfg.evader.position, cfg.evader.heading, cfg.evader.speed)};
}

}  // namespace

HypothesisSet hypotheses_for(const ScenarioConfig& cfg) {
    validate(cfg);
    const auto init = initial_state(cfg);
    HypothesisSet h;
    h.nu_p_low = cfg.pursuer.speed.lower();
    h.nu_p_high = cfg.pursuer.speed.upper();
    h.nu_e_low = cfg.evader.speed.lower();
    h.nu_e_high = cfg.evader.speed.upper();
    const double worst_ratio = h.nu_e_high / h.nu_p_low;
    if (cfg.nu_max) {
        if (*cfg.nu_max < worst_ratio) {
            throw HypothesisError("A3", "nu_max is below the realised speed ratio " + std::to_string(worst_ratio));
        }
        h.nu_max = *cfg.nu_max;
    } else {
        h.nu_max = worst_ratio;
    }
    h.alpha_p = cfg.pursuer.speed.rate_bound();
    h.alpha_e = cfg.evader.speed.rate_bound();
    h.kappa_e_max = EvaderProfile(cfg.profile).curvature_bound();
    const Vec3 r = baseline(init.pursuer.position, init.evader.position);
    h.r0_initial = norm(r);
    if (!(h.r0_initial > 0.0)) {
        throw HypothesisError("A7", "pursuer and evader start at the same point");
    }
    h.gamma0 = gamma(r, relative_velocity(init.pursuer, init.evader));
    validate(h);
    return h;
}

double resolved_r_o(const ScenarioConfig& cfg) {
    if (cfg.gain.r_o) {
        return *cfg.gain.r_o;
    }
    return norm(baseline(cfg.pursuer.position, cfg.evader.position)) / 10.0;
}

GainCertificate certificate_for(const ScenarioConfig& cfg) {
    return certify(hypotheses_for(cfg), cfg.gain.epsilon_o, resolved_r_o(cfg));
}

void require_speed_ratio(const ScenarioConfig& cfg, double ratio) {
    if (cfg.pursuer.speed.kind() != SpeedProfile::Kind::constant ||
        cfg.evader.speed.kind() != SpeedProfile::Kind::constant) {
        throw ConfigError("speed ratio check needs constant speeds");
    }
    const double actual = cfg.evader.speed.base() / cfg.pursuer.speed.base();
    if (actual != ratio) {
        throw ConfigError("speed ratio nu_e/nu_p is " + std::to_string(actual) + ", expected " +
                          std::to_string(ratio));
    }
}

std::string to_string(GuidanceLaw law) { return law == GuidanceLaw::mcpg ? "mcpg" : "ppng"; }

std::string to_string(StopReason reason) {
    switch (reason) {
        case StopReason::capture:
            return "capture";
        case StopReason::max_time:
            return "max_time";
        case StopReason::gamma_threshold:
            return "gamma_threshold";
    }
    return "unknown";
}

RunResult run(const ScenarioConfig& cfg, GuidanceLaw law) {
    validate(cfg);
    auto state = initial_state(cfg);
    validate(state.pursuer);
    validate(state.evader);

    RunResult result;
    result.name = cfg.name;
    result.law = law;
    result.r_o = resolved_r_o(cfg);
    result.epsilon = cfg.gain.epsilon_o;
    if (cfg.gain.mode == GainConfig::Mode::certificate) {
        result.certificate = certificate_for(cfg);
        result.mu = result.certificate->mu;
        result.epsilon = result.certificate->epsilon;
    } else {
        result.mu = cfg.gain.mu;
    }
    const double mu = result.mu;

    if (law == GuidanceLaw::ppng) {
        result.navigation_constant = cfg.navigation_constant.value_or(mu * state.pursuer.speed * result.r_o);
        if (!(result.navigation_constant > 0.0)) {
            throw ConfigError("PPNG needs a positive navigation constant");
        }
    }
    const double nav = result.navigation_constant;
    const std::optional<double> cap = cfg.curvature_cap;

    const PursuerLaw pursuer_law = [law, mu, nav, cap](const ParticleState& p, const ParticleState& e) {
        const EngagementView view = make_view(p, e);
        CurvatureControl c;
        if (law == GuidanceLaw::mcpg) {
            c = mcpg_controls(view, mu);
        } else {
            const Vec3 accel = ppng_lateral(los_rate(view.r, view.r_dot), p.velocity(), nav);
            c = controls_from_lateral(accel, p.frame, p.speed);
        }
        return cap ? c.saturated(*cap) : c;
    };
    const EvaderProfile profile(cfg.profile);
    const EvaderInput evader_input = [&profile](double t) { return profile.at(t); };

    auto make_record = [&](double t) {
        SimRecord rec;
        rec.t = t;
        rec.pursuer = state.pursuer;
        rec.evader = state.evader;
        try {
            const Vec3 r = baseline(state.pursuer.position, state.evader.position);
            const Vec3 r_dot = relative_velocity(state.pursuer, state.evader);
            rec.gamma = gamma(r, r_dot);
            rec.range = norm(r);
            rec.rdot_norm = norm(r_dot);
            rec.w_norm = norm(transverse_w(r, r_dot));
            rec.pursuer_control = pursuer_law(state.pursuer, state.evader);
        } catch (const DegeneracyError& err) {
            throw DegeneracyError(err.what(), t);
        }
        rec.evader_control = profile.at(t);
        return rec;
    };

    const double dt = cfg.dt;
    const auto n_steps = static_cast<std::int64_t>(std::ceil(cfg.stop.max_time / dt - 1e-9));
    result.log.sample_interval = dt * cfg.log_every;

    for (std::int64_t i = 0;; ++i) {
        const double t = static_cast<double>(i) * dt;
        SimRecord rec = make_record(t);

        std::optional<StopReason> stop;
        if (rec.range <= cfg.stop.capture_radius) {
            stop = StopReason::capture;
        } else if (cfg.stop.gamma_threshold && rec.gamma <= *cfg.stop.gamma_threshold) {
            stop = StopReason::gamma_threshold;
        } else if (i >= n_steps) {
            stop = StopReason::max_time;
        }
        if (i % cfg.log_every == 0 || stop) {
            result.log.records.push_back(std::move(rec));
        }
        if (stop) {
            result.stop = *stop;
            break;
        }
        try {
            EngagementState next = step_engagement({state.pursuer, state.evader}, pursuer_law, evader_input,
                                                   cfg.pursuer.speed, cfg.evader.speed, t, dt);
            state.pursuer = next.pursuer;
            state.evader = next.evader;
        } catch (const DegeneracyError& err) {
            throw DegeneracyError(err.what(), t);
        } catch (const GeometryError& err) {
            throw DegeneracyError(std::string("frame repair failed: ") + err.what(), t);
        }
    }
    return result;
}

double GuidanceComparison::max_relative_residual() const noexcept {
    double worst = 0.0;
    for (double r : relative_residual) {
        worst = std::max(worst, r);
    }
    return worst;
}

GuidanceComparison compare_guidance(const ScenarioConfig& cfg) {
    GuidanceComparison out;
    out.mcpg = run(cfg, GuidanceLaw::mcpg);
    out.ppng = run(cfg, GuidanceLaw::ppng);
    const double mu = out.mcpg.mu;
    const double n = out.ppng.navigation_constant;
    const double r_o = out.mcpg.r_o;
    out.relative_residual.reserve(out.mcpg.log.size());
    out.absolute_residual.reserve(out.mcpg.log.size());
    for (const auto& rec : out.mcpg.log.records) {
        const EngagementView view = make_view(rec.pursuer, rec.evader);
        const double nu_p = rec.pursuer.speed;
        const Vec3 a_mcpg = mcpg_acceleration(view, mu, nu_p);
        const Vec3 a_ppng = ppng_lateral(los_rate(view.r, view.r_dot), rec.pursuer.velocity(), n);
        double ratio = 0.0;
        if (mu > 0.0) {
            ratio = mcpg_ppng_gain_map(mu, nu_p, r_o, rec.range) / n;
        }
        const double abs_res = norm(a_mcpg - ratio * a_ppng);
        const double scale = norm(a_mcpg);
        double rel = 0.0;
        if (scale > 0.0) {
            rel = abs_res / scale;
        } else if (abs_res > 0.0) {
            rel = std::numeric_limits<double>::infinity();
        }
        out.absolute_residual.push_back(abs_res);
        out.relative_residual.push_back(rel);
    }
    return out;
}

std::vector<SweepRow> sweep(const ScenarioConfig& cfg, const std::vector<double>& gains) {
    validate(cfg);
    double epsilon = cfg.gain.epsilon_o;
    if (cfg.gain.mode == GainConfig::Mode::certificate) {
        epsilon = certificate_for(cfg).epsilon;
    }
    std::vector<std::future<SweepRow>> jobs;
    jobs.reserve(gains.size());
    for (double mu : gains) {
        ScenarioConfig c = cfg;
        c.gain.mode = GainConfig::Mode::explicit_mu;
        c.gain.mu = mu;
        validate(c);
        jobs.push_back(std::async(std::launch::async, [c, epsilon] {
            const RunResult r = run(c);
            return SweepRow{c.gain.mu, time_to_threshold(r.log, epsilon), r.log.records.back().gamma,
                            r.log.records.back().t};
        }));
    }
    std::vector<SweepRow> rows;
    rows.reserve(jobs.size());
    for (auto& j : jobs) {
        rows.push_back(j.get());
    }
    return rows;
}

}  // namespace mcam
