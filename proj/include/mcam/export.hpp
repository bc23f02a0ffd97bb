#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "mcam/scenario.hpp"
#include "mcam/sim_log.hpp"

namespace mcam {

/// Column order of every trajectory CSV.
inline constexpr const char* kCsvHeader = "t,rpx,rpy,rpz,rex,rey,rez,up,vp,ue,ve,gamma,rnorm,wnorm";

/// 17 significant digits, locale independent.
[[nodiscard]] std::string format_double(double v);

/// CSV text (LF line endings). Throws ConfigError on an empty log.
[[nodiscard]] std::string to_csv(const SimLog& log);

void write_csv(const SimLog& log, const std::filesystem::path& path);

/// Flat JSON object of summary statistics plus the certificate echo.
/// `equivalence_residual` is included when given.
[[nodiscard]] std::string metrics_json(const RunResult& result,
                                       std::optional<double> equivalence_residual = std::nullopt,
                                       double transient_fraction = 0.05);

/// Flat JSON object of a certificate.
[[nodiscard]] std::string certificate_json(const GainCertificate& cert);

/// Writes text to a file, throwing IoError with the path on failure.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace mcam
