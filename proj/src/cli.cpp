#include "mcam/cli.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "mcam/errors.hpp"
#include "mcam/export.hpp"
#include "mcam/scenario.hpp"

namespace mcam {

namespace {

// "45.3" is an explicit mu; "2x" is twice the certificate mu.
std::vector<double> parse_gains(const std::string& list, const ScenarioConfig& cfg) {
    std::vector<double> gains;
    std::optional<double> cert_mu;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) {
            throw ConfigError("empty entry in gain list '" + list + "'");
        }
        const bool relative = item.back() == 'x';
        const std::string number = relative ? item.substr(0, item.size() - 1) : item;
        double value = 0.0;
        std::size_t used = 0;
        try {
            value = std::stod(number, &used);
        } catch (const std::exception&) {
            throw ConfigError("bad gain '" + item + "'");
        }
        if (used != number.size() || !(value >= 0.0)) {
            throw ConfigError("bad gain '" + item + "'");
        }
        if (relative) {
            if (!cert_mu) {
                cert_mu = certificate_for(cfg).mu;
            }
            value *= *cert_mu;
        }
        gains.push_back(value);
    }
    if (gains.empty()) {
        throw ConfigError("gain list is empty");
    }
    return gains;
}

void print_summary(std::ostream& out, const RunResult& r) {
    const SimRecord& last = r.log.records.back();
    out << r.name << " [" << to_string(r.law) << "] mu=" << format_double(r.mu) << " ticks=" << r.log.size()
        << " stop=" << to_string(r.stop) << " t=" << format_double(last.t)
        << " gamma=" << format_double(last.gamma) << " range=" << format_double(last.range) << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Three-dimensional motion camouflage pursuit simulator", "mcam"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_csv;
    std::string metrics_path;
    auto* run_cmd = app.add_subcommand("run", "Simulate a scenario with MCPG guidance");
    run_cmd->add_option("config", config_path, "Scenario JSON")->required();
    run_cmd->add_option("--out", out_csv, "Trajectory CSV output");
    run_cmd->add_option("--metrics", metrics_path, "Metrics JSON output");

    auto* cert_cmd = app.add_subcommand("certify", "Print the high-gain certificate of a scenario");
    cert_cmd->add_option("config", config_path, "Scenario JSON")->required();

    std::string out_mcpg;
    std::string out_ppng;
    std::string residual_csv;
    auto* cmp_cmd = app.add_subcommand("compare-guidance", "Run MCPG and PPNG and check the gain map");
    cmp_cmd->add_option("config", config_path, "Scenario JSON")->required();
    cmp_cmd->add_option("--out-mcpg", out_mcpg, "MCPG trajectory CSV");
    cmp_cmd->add_option("--out-ppng", out_ppng, "PPNG trajectory CSV");
    cmp_cmd->add_option("--residual", residual_csv, "Per-tick equivalence residual CSV");
    cmp_cmd->add_option("--metrics", metrics_path, "Metrics JSON output");

    std::string gain_list;
    auto* sweep_cmd = app.add_subcommand("sweep", "Gain-sensitivity table of time to -1+epsilon");
    sweep_cmd->add_option("--gain", gain_list, "Comma-separated mu values; suffix x for multiples of the certificate mu")
        ->required();
    sweep_cmd->add_option("config", config_path, "Scenario JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << app.help();
        return kExitConfig;
    }

    try {
        const ScenarioConfig cfg = load_config(config_path);
        if (run_cmd->parsed()) {
            const RunResult r = run(cfg);
            print_summary(out, r);
            if (!out_csv.empty()) {
                write_csv(r.log, out_csv);
            }
            if (!metrics_path.empty()) {
                write_text(metrics_path, metrics_json(r, std::nullopt, cfg.transient_fraction));
            }
        } else if (cert_cmd->parsed()) {
            out << certificate_json(certificate_for(cfg));
        } else if (cmp_cmd->parsed()) {
            const GuidanceComparison cmp = compare_guidance(cfg);
            print_summary(out, cmp.mcpg);
            print_summary(out, cmp.ppng);
            const double worst = cmp.max_relative_residual();
            out << "max relative equivalence residual " << format_double(worst) << '\n';
            if (!out_mcpg.empty()) {
                write_csv(cmp.mcpg.log, out_mcpg);
            }
            if (!out_ppng.empty()) {
                write_csv(cmp.ppng.log, out_ppng);
            }
            if (!residual_csv.empty()) {
                std::string text = "t,residual,relative_residual\n";
                for (std::size_t i = 0; i < cmp.relative_residual.size(); ++i) {
                    text += format_double(cmp.mcpg.log.records[i].t) + ',' + format_double(cmp.absolute_residual[i]) +
                            ',' + format_double(cmp.relative_residual[i]) + '\n';
                }
                write_text(residual_csv, text);
            }
            if (!metrics_path.empty()) {
                write_text(metrics_path, metrics_json(cmp.mcpg, worst, cfg.transient_fraction));
            }
        } else if (sweep_cmd->parsed()) {
            const auto rows = sweep(cfg, parse_gains(gain_list, cfg));
            out << "mu,time_to_threshold,final_gamma,final_time\n";
            for (const auto& row : rows) {
                out << format_double(row.mu) << ','
                    << (row.time_to_threshold ? format_double(*row.time_to_threshold) : std::string("none")) << ','
                    << format_double(row.final_gamma) << ',' << format_double(row.final_time) << '\n';
            }
        }
    } catch (const DegeneracyError& e) {
        err << "runtime degeneracy: " << e.what() << '\n';
        return kExitDegenerate;
    } catch (const GeometryError& e) {
        err << "runtime degeneracy: " << e.what() << '\n';
        return kExitDegenerate;
    } catch (const HypothesisError& e) {
        err << "hypothesis violated: " << e.what() << '\n';
        return kExitConfig;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitOk;
}

}  // namespace mcam
