#include "mcam/export.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>

#include "json.hpp"

#include "mcam/analysis.hpp"
#include "mcam/errors.hpp"

namespace mcam {

std::string format_double(double v) {
    std::array<char, 64> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
    return {buf.data(), res.ptr};
}

std::string to_csv(const SimLog& log) {
    if (log.empty()) {
        throw ConfigError("cannot export an empty log");
    }
    std::string out = kCsvHeader;
    out += '\n';
    for (const auto& rec : log.records) {
        const std::array<double, 14> row{
            rec.t,
            rec.pursuer.position.x,
            rec.pursuer.position.y,
            rec.pursuer.position.z,
            rec.evader.position.x,
            rec.evader.position.y,
            rec.evader.position.z,
            rec.pursuer_control.u,
            rec.pursuer_control.v,
            rec.evader_control.u,
            rec.evader_control.v,
            rec.gamma,
            rec.range,
            rec.w_norm,
        };
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i != 0) {
                out += ',';
            }
            out += format_double(row[i]);
        }
        out += '\n';
    }
    return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) {
        throw IoError("failed writing '" + path.string() + "'");
    }
}

void write_csv(const SimLog& log, const std::filesystem::path& path) { write_text(path, to_csv(log)); }

namespace {

void add_certificate(nlohmann::ordered_json& j, const GainCertificate& cert, const std::string& prefix) {
    j[prefix + "epsilon"] = cert.epsilon;
    j[prefix + "r_o"] = cert.r_o;
    j[prefix + "c0"] = cert.c0;
    j[prefix + "c1"] = cert.c1;
    j[prefix + "c2"] = cert.c2;
    j[prefix + "c2_required"] = cert.c2_required;
    j[prefix + "T"] = cert.T;
    j[prefix + "mu"] = cert.mu;
    j[prefix + "gamma0"] = cert.gamma0;
}

}  // namespace

std::string metrics_json(const RunResult& result, std::optional<double> equivalence_residual,
                         double transient_fraction) {
    if (result.log.empty()) {
        throw ConfigError("cannot summarise an empty log");
    }
    const SimRecord& last = result.log.records.back();
    nlohmann::ordered_json j;
    j["name"] = result.name;
    j["guidance"] = to_string(result.law);
    j["mu"] = result.mu;
    if (result.law == GuidanceLaw::ppng) {
        j["navigation_constant"] = result.navigation_constant;
    }
    j["ticks"] = result.log.size();
    j["stop_reason"] = to_string(result.stop);
    j["final_time"] = last.t;
    j["final_gamma"] = last.gamma;
    j["final_range"] = last.range;
    j["epsilon"] = result.epsilon;
    if (const auto t1 = time_to_threshold(result.log, result.epsilon)) {
        j["time_to_threshold"] = *t1;
    } else {
        j["time_to_threshold"] = nullptr;
    }
    const double dispersion = baseline_dispersion(result.log, transient_fraction);
    j["baseline_dispersion_rad"] = dispersion;
    j["baseline_dispersion_deg"] = dispersion * 180.0 / std::numbers::pi;
    if (result.certificate) {
        add_certificate(j, *result.certificate, "cert_");
    }
    if (equivalence_residual) {
        j["equivalence_residual"] = *equivalence_residual;
    }
    return j.dump(2) + "\n";
}

std::string certificate_json(const GainCertificate& cert) {
    nlohmann::ordered_json j;
    add_certificate(j, cert, "");
    return j.dump(2) + "\n";
}

}  // namespace mcam
