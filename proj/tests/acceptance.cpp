// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "mcam/analysis.hpp"
#include "mcam/errors.hpp"
#include "mcam/export.hpp"
#include "mcam/guidance.hpp"
#include "mcam/scenario.hpp"

using namespace mcam;

namespace {

const std::vector<std::string> kScenarios{"straight", "sinusoid", "random", "circular"};

struct Shipped {
    std::string name;
    ScenarioConfig cfg;
    RunResult result;
    GainCertificate cert;
    double seconds = 0.0;
};

ScenarioConfig load(const std::string& name) {
    return load_config(std::string(MCAM_SCENARIO_DIR) + "/" + name + ".json");
}

int failures = 0;

void report(int id, bool ok, const std::string& title, const std::string& detail) {
    std::printf("%s  [%2d] %s: %s\n", ok ? "PASS" : "FAIL", id, title.c_str(), detail.c_str());
    if (!ok) {
        ++failures;
    }
}

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

// 1 - Gamma^2 = |r x r_dot|^2 / (|r|^2 |r_dot|^2) in quad precision. Products of two
// doubles are exact in binary128 and the cross components round once, so this is
// accurate to ~1e-32 relative whatever the alignment of r and r_dot.
double departure_reference(const Vec3& r, const Vec3& v) {
    using q = __float128;
    const q cx = static_cast<q>(r.y) * v.z - static_cast<q>(r.z) * v.y;
    const q cy = static_cast<q>(r.z) * v.x - static_cast<q>(r.x) * v.z;
    const q cz = static_cast<q>(r.x) * v.y - static_cast<q>(r.y) * v.x;
    const q rr = static_cast<q>(r.x) * r.x + static_cast<q>(r.y) * r.y + static_cast<q>(r.z) * r.z;
    const q vv = static_cast<q>(v.x) * v.x + static_cast<q>(v.y) * v.y + static_cast<q>(v.z) * v.z;
    return static_cast<double>((cx * cx + cy * cy + cz * cz) / (rr * vv));
}

double arc_error(double dt, double horizon, double u) {
    ParticleState s{};
    const int n = static_cast<int>(std::lround(horizon / dt));
    for (int i = 0; i < n; ++i) {
        s = step(s, {u, 0.0}, dt);
    }
    const Vec3 exact{std::sin(u * horizon) / u, (1.0 - std::cos(u * horizon)) / u, 0.0};
    return norm(s.position - exact);
}

void speed_ratio(const std::vector<Shipped>& runs) {
    bool ok = true;
    std::string detail;
    for (const auto& s : runs) {
        try {
            require_speed_ratio(s.cfg, 0.9);
            detail += s.name + "=0.9 ";
        } catch (const Error& e) {
            ok = false;
            detail += s.name + " rejected (" + e.what() + ") ";
        }
    }
    report(1, ok, "speed ratio nu_e/nu_p = 0.9", detail);
}

void accessibility(const std::vector<Shipped>& runs) {
    bool ok = true;
    std::string detail;
    for (const auto& s : runs) {
        const auto t1 = time_to_threshold(s.result.log, s.cert.epsilon);
        const bool hit = t1 && *t1 <= s.cert.T && s.seconds < 5.0 && s.cert.epsilon == 0.02;
        ok = ok && hit;
        detail += s.name + " t1=" + (t1 ? num(*t1) : std::string("none")) + "/T=" + num(s.cert.T) + " (" +
                  num(s.seconds) + "s) ";
    }
    report(2, ok, "Gamma reaches -1+eps within T", detail);
}

void envelope(const std::vector<Shipped>& runs) {
    bool ok = true;
    std::string detail;
    for (const auto& s : runs) {
        double worst = -1e300;
        int checked = 0;
        for (const auto& rec : s.result.log.records) {
            if (rec.range < s.cert.r_o || 1.0 - rec.gamma * rec.gamma <= s.cert.epsilon) {
                continue;
            }
            ++checked;
            worst = std::max(worst, rec.gamma - gamma_envelope(s.cert.gamma0, s.cert.c2, rec.t));
        }
        ok = ok && worst <= 1e-3;
        detail += s.name + " max(Gamma-env)=" + num(worst) + " over " + std::to_string(checked) + " ";
    }
    report(3, ok, "Gamma under the tanh envelope", detail);
}

void lemma(const Shipped& straight) {
    const auto& recs = straight.result.log.records;
    const double t_start = 0.05 * recs.back().t;
    double worst_w = 0.0;
    for (const auto& rec : recs) {
        if (rec.t >= t_start) {
            worst_w = std::max(worst_w, rec.w_norm / rec.rdot_norm);
        }
    }
    const double disp_deg = baseline_dispersion(straight.result.log, 0.05) * 180.0 / M_PI;

    SimLog synthetic;
    const Vec3 dir = normalized(Vec3{0.3, -0.4, 0.87});
    for (int i = 0; i < 1000; ++i) {
        SimRecord rec;
        rec.t = 0.01 * i;
        rec.evader.position = {0.9 * rec.t, 1.0, -2.0};
        rec.pursuer.position = rec.evader.position + (10.0 - 0.1 * rec.t) * dir;
        synthetic.records.push_back(rec);
    }
    const double synth = baseline_dispersion(synthetic, 0.05);

    const bool premise = worst_w <= 1e-2;
    const bool ok = premise && disp_deg <= 1.0 && synth <= 1e-9;
    report(4, ok, "small w implies parallel baselines",
           "straight max|w|/|rdot|=" + num(worst_w) + " dispersion=" + num(disp_deg) +
               " deg; synthetic dispersion=" + num(synth));
}

void transverse_identity(const std::vector<Shipped>& runs) {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> unif(-10.0, 10.0);
    double worst_random = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Vec3 r{unif(rng), unif(rng), unif(rng)};
        const Vec3 v{0.2 * unif(rng), 0.2 * unif(rng), 0.2 * unif(rng)};
        const double g = gamma(r, v);
        const double lhs = norm_squared(transverse_w(r, v));
        const double rhs = norm_squared(v) * (1.0 - g * g);
        worst_random = std::max(worst_random, std::abs(lhs - rhs) / rhs);
    }

    // At logged ticks Gamma sits within ulps of -1, so 1 - Gamma^2 is taken from
    // departure() and that value is itself checked against the quad-precision reference.
    double worst_tick = 0.0;
    double worst_departure = 0.0;
    std::size_t ticks = 0;
    for (const auto& s : runs) {
        for (const auto& rec : s.result.log.records) {
            const Vec3 r = baseline(rec.pursuer.position, rec.evader.position);
            const Vec3 v = relative_velocity(rec.pursuer, rec.evader);
            const double dep = departure(r, v);
            const double ref = departure_reference(r, v);
            const double lhs = norm_squared(transverse_w(r, v));
            const double rhs = norm_squared(v) * dep;
            ++ticks;
            if (ref == 0.0) {
                worst_tick = std::max(worst_tick, lhs == 0.0 && dep == 0.0 ? 0.0 : 1.0);
                continue;
            }
            worst_tick = std::max(worst_tick, std::abs(lhs - rhs) / rhs);
            worst_departure = std::max(worst_departure, std::abs(dep - ref) / ref);
        }
    }
    const bool ok = worst_random <= 1e-10 && worst_tick <= 1e-10 && worst_departure <= 1e-10;
    report(5, ok, "|w|^2 = |rdot|^2 (1 - Gamma^2)",
           "random max rel=" + num(worst_random) + "; " + std::to_string(ticks) + " ticks max rel=" +
               num(worst_tick) + ", 1-Gamma^2 vs quad reference " + num(worst_departure));
}

void gamma_dot_oracle(const std::vector<Shipped>& runs) {
    bool ok = true;
    std::string detail;
    for (const auto& s : runs) {
        const auto& recs = s.result.log.records;
        const double dt = s.cfg.dt;
        const double tol = std::max(1e-5, 10.0 * dt * dt);
        const EvaderProfile profile(s.cfg.profile);
        const double frac = s.cfg.transient_fraction;
        const double t_settled = frac * recs.back().t;
        // Eligible ticks: past the initial transient and, for inputs that jump, past the
        // same fraction of each held segment with the whole stencil inside one segment.
        std::vector<std::size_t> eligible;
        for (std::size_t i = 1; i + 1 < recs.size(); ++i) {
            if (recs[i].t < t_settled) {
                continue;
            }
            if (profile.piecewise_constant()) {
                const double hold = profile.hold_time();
                const double into = recs[i].t - std::floor(recs[i].t / hold + 1e-9) * hold;
                if (into < frac * hold || hold - into <= 1.5 * dt) {
                    continue;
                }
            }
            eligible.push_back(i);
        }
        double worst = 0.0;
        int sampled = 0;
        for (std::size_t k = 0; k < 100 && eligible.size() >= 100; ++k) {
            const std::size_t i = eligible[k * (eligible.size() - 1) / 99];
            const double fd = (recs[i + 1].gamma - recs[i - 1].gamma) / (recs[i + 1].t - recs[i - 1].t);
            const double gd = gamma_dot(recs[i].pursuer, recs[i].evader, recs[i].pursuer_control,
                                        recs[i].evader_control);
            worst = std::max(worst, std::abs(gd - fd));
            ++sampled;
        }
        ok = ok && sampled == 100 && worst <= tol;
        detail += s.name + " max=" + num(worst) + " ";
    }
    report(6, ok, "gamma_dot vs centered differences (100 ticks, tol 1e-5)", detail);
}

void equivalence() {
    bool ok = true;
    std::string detail;
    for (const auto& name : kScenarios) {
        const GuidanceComparison cmp = compare_guidance(load(name));
        const double worst = cmp.max_relative_residual();
        ok = ok && worst <= 1e-8 && !cmp.relative_residual.empty();
        detail += name + "=" + num(worst) + " ";
    }
    report(7, ok, "MCPG = (N_eff/N) PPNG per tick, rel <= 1e-8", detail);
}

void bands(const std::vector<Shipped>& runs) {
    bool ok = true;
    std::string detail;
    for (const auto& s : runs) {
        const HypothesisSet h = hypotheses_for(s.cfg);
        const double lo = h.nu_p_low * (1.0 - h.nu_max);
        const double hi = h.nu_p_high * (1.0 + h.nu_max);
        double min_v = 1e300;
        double max_v = 0.0;
        double shrink_margin = 1e300;
        for (const auto& rec : s.result.log.records) {
            min_v = std::min(min_v, rec.rdot_norm);
            max_v = std::max(max_v, rec.rdot_norm);
            shrink_margin = std::min(shrink_margin, rec.range - (h.r0_initial - hi * rec.t));
        }
        ok = ok && min_v >= lo - 1e-12 && max_v <= hi + 1e-12 && shrink_margin >= -1e-12;
        detail += s.name + " |rdot| in [" + num(min_v) + "," + num(max_v) + "] shrink margin " + num(shrink_margin) +
                  " ";
    }
    report(8, ok, "|rdot| band and range shrink bound", detail);
}

void numerics(const std::vector<Shipped>& runs) {
    const double e1 = arc_error(0.1, 2.0, 2.0);
    const double e2 = arc_error(0.0125, 2.0, 2.0);
    const double slope = std::log(e1 / e2) / std::log(8.0);
    double frame_err = 0.0;
    double speed_drift = 0.0;
    for (const auto& s : runs) {
        const double nu_p = s.cfg.pursuer.speed.base();
        const double nu_e = s.cfg.evader.speed.base();
        for (const auto& rec : s.result.log.records) {
            frame_err = std::max({frame_err, orthonormality_error(rec.pursuer.frame),
                                  orthonormality_error(rec.evader.frame)});
            speed_drift = std::max({speed_drift, std::abs(norm(rec.pursuer.velocity()) - nu_p),
                                    std::abs(norm(rec.evader.velocity()) - nu_e)});
        }
    }
    const bool ok = std::abs(slope - 4.0) <= 0.2 && frame_err <= 1e-12 && speed_drift <= 1e-12;
    report(9, ok, "RK4 order, frame repair, speed constancy",
           "slope=" + num(slope) + " frame err=" + num(frame_err) + " speed drift=" + num(speed_drift));
}

void certificate_arithmetic() {
    HypothesisSet h;
    h.nu_p_low = h.nu_p_high = 1.0;
    h.nu_e_low = h.nu_e_high = 0.9;
    h.nu_max = 0.9;
    h.gamma0 = 0.0;
    h.r0_initial = 10.0;
    const GainCertificate c = certify(h, 0.02, 1.0);
    auto close = [](double a, double b) { return std::abs(a - b) <= 1e-4 * std::abs(b); };
    const bool ok = c.c1 == 0.0 && close(c.c2, 0.48504) && c.c0 == c.c2 && close(c.mu, 45.316) &&
                    close(c.T, 4.73684);
    report(10, ok, "worked certificate chain",
           "c2=" + num(c.c2) + " c0=" + num(c.c0) + " mu=" + num(c.mu) + " T=" + num(c.T));
}

void determinism(const std::vector<Shipped>& runs) {
    bool ok = true;
    std::string detail;
    for (const auto& s : runs) {
        const bool same = to_csv(s.result.log) == to_csv(run(s.cfg).log);
        ok = ok && same;
        detail += s.name + (same ? " identical " : " DIFFERS ");
    }
    report(11, ok, "byte-identical CSV on rerun", detail);
}

}  // namespace

int main() {
    try {
        std::vector<Shipped> runs;
        for (const auto& name : kScenarios) {
            Shipped s;
            s.name = name;
            s.cfg = load(name);
            const auto t0 = std::chrono::steady_clock::now();
            s.result = run(s.cfg);
            s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            s.cert = *s.result.certificate;
            runs.push_back(std::move(s));
        }
        speed_ratio(runs);
        accessibility(runs);
        envelope(runs);
        lemma(runs.front());
        transverse_identity(runs);
        gamma_dot_oracle(runs);
        equivalence();
        bands(runs);
        numerics(runs);
        certificate_arithmetic();
        determinism(runs);
    } catch (const std::exception& e) {
        std::printf("FAIL  acceptance aborted: %s\n", e.what());
        return 1;
    }
    std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "NOT PASSING", failures);
    return failures == 0 ? 0 : 1;
}
