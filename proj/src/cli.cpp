#include "stampgate/cli.hpp"

#include <iostream>

#include "CLI11.hpp"

#include "stampgate/error.hpp"
#include "stampgate/metrics.hpp"
#include "stampgate/netsim.hpp"
#include "stampgate/report_io.hpp"
#include "stampgate/scenario.hpp"

namespace stampgate::cli {

namespace {

// Parse and invariant check; prints every diagnostic.
std::optional<Scenario> load_checked(const std::string& path, std::ostream& err) {
    Scenario sc;
    try {
        sc = load_scenario_file(path);
    } catch (const Error& e) {
        err << path << ": " << e.what() << '\n';
        return std::nullopt;
    }
    const auto problems = validate_scenario(sc);
    for (const auto& p : problems) err << path << ": " << p << '\n';
    if (!problems.empty()) return std::nullopt;
    return sc;
}

}  // namespace

int cmd_validate(const std::string& scenario_path, std::ostream& out, std::ostream& err) {
    const auto sc = load_checked(scenario_path, err);
    if (!sc) return kExitConfig;
    out << scenario_path << ": ok\n";
    return kExitOk;
}

int cmd_run(const std::string& scenario_path, const std::filesystem::path& out_dir,
            std::optional<std::uint64_t> seed, std::ostream& out, std::ostream& err) {
    auto sc = load_checked(scenario_path, err);
    if (!sc) return kExitConfig;
    if (seed) sc->seed = *seed;

    try {
        const auto report = simulate(*sc);

        // Savings from cheap drops are measured against the same run with
        // every drop priced as a full check.
        std::optional<SimReport> full_check;
        if (report.acc_attack.processed > 0 && !sc->engine.force_full_check) {
            auto paired = *sc;
            paired.engine.force_full_check = true;
            paired.trace = false;
            full_check = simulate(paired);
        }
        const auto table = compare(report, efficiency_params(report), full_check ? &*full_check : nullptr);

        std::filesystem::create_directories(out_dir);
        write_file_atomic(out_dir / "report.json", report_to_json(report, &table));
        write_file_atomic(out_dir / "report.csv", series_to_csv(report));
        write_file_atomic(out_dir / "comparison.csv", table.to_csv());

        out << "ticks " << sc->duration << ", processed " << report.honest.processed + report.attacker.processed
            << ", honest transfers delivered " << report.transfers.delivered << "/" << report.transfers.requested
            << ", comparison rows within tolerance " << (table.all_within() ? "all" : "not all") << '\n';
        out << "wrote " << (out_dir / "report.json").string() << ", report.csv, comparison.csv\n";

        if (!report.violations.empty()) {
            for (const auto& v : report.violations) err << "invariant violated: " << v << '\n';
            return kExitInvariant;
        }
        return kExitOk;
    } catch (const Error& e) {
        err << e.what() << '\n';
        return e.code() == Errc::ConfigInvalid ? kExitConfig : kExitFailure;
    } catch (const std::exception& e) {
        err << e.what() << '\n';
        return kExitFailure;
    }
}

int main(int argc, char** argv) {
    CLI::App app{"Two-channel gateway simulator"};
    app.require_subcommand(1);

    std::string run_path;
    std::string out_dir = ".";
    std::optional<std::uint64_t> seed;
    auto* run = app.add_subcommand("run", "Run a scenario and write reports");
    run->add_option("file", run_path, "Scenario JSON")->required();
    run->add_option("--out", out_dir, "Output directory");
    run->add_option("--seed", seed, "Override the scenario seed");

    std::string validate_path;
    auto* validate = app.add_subcommand("validate", "Check a scenario without running it");
    validate->add_option("file", validate_path, "Scenario JSON")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }
    if (*run) return cmd_run(run_path, out_dir, seed, std::cout, std::cerr);
    return cmd_validate(validate_path, std::cout, std::cerr);
}

}  // namespace stampgate::cli
