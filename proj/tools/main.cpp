// Command-line front end: scenario runs, figure presets, CSV emission,
// revival-peak detection and the analytic-vs-brute-force check.
//
// Exit codes: 0 success, 2 invalid scenario or usage, 3 verification failure,
// 4 truncated space too small.

#include <cstdio>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ramansim/csv_io.hpp"
#include "ramansim/errors.hpp"
#include "ramansim/revivals.hpp"
#include "ramansim/scenario.hpp"
#include "ramansim/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitVerifyFailed = 3;
constexpr int kExitTruncation = 4;

struct ScenarioFlags {
    std::string model = "quantum";
    std::string mode1 = "fock:1";
    std::string mode2 = "coherent:0";
    double ratio = 1.0;
    double delta_over_g1 = 10.0;
    std::vector<std::string> observables{"inversion"};
    double tau_max = 0.0;
    int steps = 4000;
    double epsilon = ramansim::kDefaultTailEpsilon;
    std::string config_path;

    std::map<std::string, CLI::Option*> options;

    void attach(CLI::App& cmd) {
        options["model"] = cmd.add_option("--model", model, "quantum or semiclassical")
                               ->capture_default_str();
        options["mode1"] = cmd.add_option("--mode1", mode1, "mode-1 preparation, e.g. fock:5")
                               ->capture_default_str();
        options["mode2"] = cmd.add_option("--mode2", mode2,
                                          "mode-2 preparation, e.g. coherent:10.5 or thermal:10.1")
                               ->capture_default_str();
        options["r"] = cmd.add_option("--r", ratio, "coupling ratio g2/g1 (or |Omega_L|/g)")
                           ->capture_default_str();
        options["delta-over-g1"] =
            cmd.add_option("--delta-over-g1", delta_over_g1, "detuning in units of g1")
                ->capture_default_str();
        options["observables"] =
            cmd.add_option("--observables", observables,
                           "comma separated subset of inversion,negativity,linear-entropy")
                ->delimiter(',')
                ->capture_default_str();
        options["tau-max"] = cmd.add_option("--tau-max", tau_max,
                                            "end of the scaled-time grid (0 = 2.5 rephasing "
                                            "periods, 3 for semiclassical)")
                                 ->capture_default_str();
        options["steps"] =
            cmd.add_option("--steps", steps, "number of grid points")->capture_default_str();
        options["epsilon"] = cmd.add_option("--epsilon", epsilon, "field truncation tolerance")
                                 ->capture_default_str();
        cmd.add_option("--config", config_path,
                       "key=value file with the options above; flags take precedence");
    }

    // Line-oriented key=value file; '#' starts a comment, flags given on the
    // command line win over file entries.
    void apply_config_file() {
        if (config_path.empty()) return;
        std::ifstream is(config_path);
        if (!is) throw std::invalid_argument("cannot open config file '" + config_path + "'");
        std::string line;
        int lineno = 0;
        while (std::getline(is, line)) {
            ++lineno;
            if (!line.empty() && line.back() == '\r') line.pop_back();
            const auto first = line.find_first_not_of(" \t");
            if (first == std::string::npos || line[first] == '#') continue;
            const auto eq = line.find('=');
            if (eq == std::string::npos)
                throw std::invalid_argument("config line " + std::to_string(lineno) +
                                            " is not key=value");
            std::string key = line.substr(first, eq - first);
            while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
            for (char& ch : key)
                if (ch == '_') ch = '-';
            std::string value = line.substr(eq + 1);
            const auto vfirst = value.find_first_not_of(" \t");
            value = vfirst == std::string::npos ? std::string{} : value.substr(vfirst);
            while (!value.empty() && (value.back() == ' ' || value.back() == '\t'))
                value.pop_back();

            const auto it = options.find(key);
            if (it == options.end())
                throw std::invalid_argument("unknown config key '" + key + "' on line " +
                                            std::to_string(lineno));
            if (it->second->count() > 0) continue;  // explicit flag wins
            set_value(key, value);
        }
    }

    void set_value(const std::string& key, const std::string& value) {
        const auto as_double = [&](const char* what) {
            try {
                std::size_t used = 0;
                const double v = std::stod(value, &used);
                if (used != value.size()) throw std::invalid_argument(what);
                return v;
            } catch (const std::exception&) {
                throw std::invalid_argument("config value for " + key + " is not a number: '" +
                                            value + "'");
            }
        };
        if (key == "model") {
            model = value;
        } else if (key == "mode1") {
            mode1 = value;
        } else if (key == "mode2") {
            mode2 = value;
        } else if (key == "r") {
            ratio = as_double("r");
        } else if (key == "delta-over-g1") {
            delta_over_g1 = as_double("delta-over-g1");
        } else if (key == "tau-max") {
            tau_max = as_double("tau-max");
        } else if (key == "epsilon") {
            epsilon = as_double("epsilon");
        } else if (key == "steps") {
            steps = static_cast<int>(as_double("steps"));
        } else if (key == "observables") {
            observables.clear();
            std::size_t start = 0;
            while (start <= value.size()) {
                const std::size_t pos = value.find(',', start);
                const std::string item =
                    value.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
                if (!item.empty()) observables.push_back(item);
                if (pos == std::string::npos) break;
                start = pos + 1;
            }
        }
    }

    ramansim::Scenario build() {
        apply_config_file();
        ramansim::Scenario s;
        s.model = ramansim::parse_model(model);
        s.mode1 = ramansim::parse_prep(mode1);
        s.mode2 = ramansim::parse_prep(mode2);
        s.ratio = ratio;
        s.delta_over_g1 = delta_over_g1;
        s.observables.clear();
        for (const std::string& name : observables)
            s.observables.push_back(ramansim::parse_observable(name));
        s.tau_max = tau_max;
        s.steps = steps;
        s.epsilon = epsilon;
        s.validate();
        return s;
    }
};

void warn_if_outside_dispersive_regime(const ramansim::Scenario& s) {
    if (s.model != ramansim::ModelKind::quantum) return;
    if (!s.params().dispersive_ok())
        std::cerr << "warning: g/delta exceeds 0.2; the effective two-level model assumes "
                     "g1, g2 << delta\n";
}

void emit(const ramansim::TimeSeries& series, const ramansim::Metadata& metadata,
          const std::string& out) {
    if (out == "-")
        ramansim::write_csv(std::cout, series, metadata);
    else
        ramansim::write_csv(std::filesystem::path(out), series, metadata);
}

int run_simulate(ScenarioFlags& flags, const std::string& out) {
    const ramansim::Scenario scenario = flags.build();
    warn_if_outside_dispersive_regime(scenario);
    const ramansim::TimeSeries series = ramansim::run_scenario(scenario);
    emit(series, scenario.metadata(), out);
    return kExitOk;
}

int run_figure(const std::string& name, std::string out) {
    const ramansim::Scenario scenario = ramansim::preset_scenario(name);
    ramansim::Metadata metadata = scenario.metadata();
    metadata.emplace_back("preset", name);
    if (name == "fig1a" || name == "fig1b")
        metadata.emplace_back("note", "r=1.012 taken exact; g1 sets the time unit");
    if (out.empty()) out = name + ".csv";
    emit(ramansim::run_scenario(scenario), metadata, out);
    if (out != "-") std::cout << out << "\n";
    return kExitOk;
}

int run_verify(ScenarioFlags& flags, int n1_max, int n2_max) {
    const ramansim::Scenario scenario = flags.build();
    warn_if_outside_dispersive_regime(scenario);
    const ramansim::VerifyReport report = ramansim::verify_scenario(scenario, n1_max, n2_max);
    std::printf("# cutoffs: n1_max=%d n2_max=%d tolerance=%.3g\n", report.n1_max, report.n2_max,
                report.tolerance);
    for (const ramansim::VerifyReport::Entry& e : report.entries)
        std::printf("%-14s max_abs_deviation=%.3e %s\n", e.observable.c_str(),
                    e.max_abs_deviation, e.max_abs_deviation <= report.tolerance ? "ok" : "FAIL");
    if (!report.ok()) {
        std::fprintf(stderr, "verification failed: worst deviation %.3e > %.3g\n", report.worst(),
                     report.tolerance);
        return kExitVerifyFailed;
    }
    return kExitOk;
}

int run_revivals(const std::string& csv_path, const std::string& column, int window,
                 double prominence) {
    const ramansim::CsvFile file = ramansim::read_csv(std::filesystem::path(csv_path));
    const std::vector<double>* values = file.series.column(column);
    if (!values)
        throw std::invalid_argument("CSV has no column '" + column + "'");
    const std::vector<double> times =
        ramansim::detect_revivals(file.series.tau, *values, window, prominence);
    for (double t : times) std::printf("%.17g\n", t);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Raman coupled-model simulator: an effective two-level atom exchanging "
                 "photons between two cavity modes in the dispersive regime"};
    app.require_subcommand(1);

    ScenarioFlags sim_flags;
    std::string sim_out = "-";
    CLI::App* simulate = app.add_subcommand("simulate", "evaluate observables, write CSV");
    sim_flags.attach(*simulate);
    simulate->add_option("--out", sim_out, "output file ('-' = stdout)")->capture_default_str();

    std::string figure_name;
    std::string figure_out;
    CLI::App* figure = app.add_subcommand("figure", "run a named preset");
    figure->add_option("name", figure_name, "one of fig1a fig1b fig2 fig3a fig3b fig4")
        ->required()
        ->check(CLI::IsMember(ramansim::preset_names()));
    figure->add_option("--out", figure_out, "output file (default <name>.csv)");

    ScenarioFlags verify_flags;
    int n1_max = 0;
    int n2_max = 0;
    CLI::App* verify = app.add_subcommand("verify",
                                          "compare the closed forms against the truncated-space "
                                          "evolution");
    verify_flags.attach(*verify);
    verify->add_option("--n1-max", n1_max, "override the mode-1 Fock cutoff");
    verify->add_option("--n2-max", n2_max, "override the mode-2 Fock cutoff");

    std::string revivals_csv;
    std::string revivals_column = "inversion";
    int revivals_window = 100;
    double revivals_prominence = 0.5;
    CLI::App* revivals = app.add_subcommand("revivals", "print revival peak times of a CSV column");
    revivals->add_option("csv", revivals_csv, "CSV file produced by simulate/figure")->required();
    revivals->add_option("--column", revivals_column, "column to scan")->capture_default_str();
    revivals->add_option("--window", revivals_window, "peak half-width in samples")
        ->capture_default_str();
    revivals->add_option("--prominence", revivals_prominence,
                         "fraction of the global deviation maximum a peak must reach")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInvalid;
    }

    try {
        if (simulate->parsed()) return run_simulate(sim_flags, sim_out);
        if (figure->parsed()) return run_figure(figure_name, figure_out);
        if (verify->parsed()) return run_verify(verify_flags, n1_max, n2_max);
        if (revivals->parsed())
            return run_revivals(revivals_csv, revivals_column, revivals_window,
                                revivals_prominence);
    } catch (const ramansim::TruncationError& e) {
        std::cerr << "error: " << e.what() << " (raise --n1-max/--n2-max or --epsilon)\n";
        return kExitTruncation;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalid;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitInvalid;
}
