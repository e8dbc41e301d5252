#include "ramansim/scenario.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ramansim/analytic.hpp"
#include "ramansim/semiclassical.hpp"

namespace ramansim {

namespace {

double parse_number(std::string_view text, std::string_view what) {
    double value = 0.0;
    const char* end = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc{} || ptr != end)
        throw std::invalid_argument("cannot parse " + std::string(what) + " from '" +
                                    std::string(text) + "'");
    return value;
}

std::string format_value(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

bool wants(const Scenario& s, ObservableKind kind) {
    return std::find(s.observables.begin(), s.observables.end(), kind) != s.observables.end();
}

}  // namespace

const char* to_string(ModelKind kind) {
    return kind == ModelKind::quantum ? "quantum" : "semiclassical";
}

const char* to_string(ObservableKind kind) {
    switch (kind) {
        case ObservableKind::inversion: return "inversion";
        case ObservableKind::negativity: return "negativity";
        case ObservableKind::linear_entropy: return "linear-entropy";
    }
    return "?";
}

ModelKind parse_model(std::string_view text) {
    if (text == "quantum") return ModelKind::quantum;
    if (text == "semiclassical") return ModelKind::semiclassical;
    throw std::invalid_argument("unknown model '" + std::string(text) +
                                "' (expected quantum or semiclassical)");
}

ObservableKind parse_observable(std::string_view text) {
    if (text == "inversion") return ObservableKind::inversion;
    if (text == "negativity") return ObservableKind::negativity;
    if (text == "linear-entropy" || text == "linear_entropy") return ObservableKind::linear_entropy;
    throw std::invalid_argument("unknown observable '" + std::string(text) +
                                "' (expected inversion, negativity or linear-entropy)");
}

PhotonDistribution PrepSpec::distribution(double epsilon) const {
    switch (kind) {
        case FieldKind::fock: return fock_dist(static_cast<int>(value));
        case FieldKind::coherent: return coherent_dist(value, epsilon);
        case FieldKind::thermal: return thermal_dist(value, epsilon);
    }
    throw std::logic_error("unreachable");
}

PrepSpec parse_prep(std::string_view text) {
    const std::size_t colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("mode preparation must look like fock:5, coherent:10.5 or "
                                    "thermal:10.1");
    const std::string_view name = text.substr(0, colon);
    const double value = parse_number(text.substr(colon + 1), "mode parameter");
    PrepSpec out;
    if (name == "fock") {
        if (value < 0.0 || value != std::floor(value))
            throw std::invalid_argument("fock preparation needs a non-negative integer");
        out.kind = FieldKind::fock;
    } else if (name == "coherent") {
        if (value < 0.0) throw std::invalid_argument("coherent n-bar must be >= 0");
        out.kind = FieldKind::coherent;
    } else if (name == "thermal") {
        if (value < 0.0) throw std::invalid_argument("thermal n-bar must be >= 0");
        out.kind = FieldKind::thermal;
    } else {
        throw std::invalid_argument("unknown preparation '" + std::string(name) +
                                    "' (expected fock, coherent or thermal)");
    }
    out.value = value;
    return out;
}

std::string to_string(const PrepSpec& prep) {
    const char* name = prep.kind == FieldKind::fock ? "fock"
                       : prep.kind == FieldKind::coherent ? "coherent"
                                                          : "thermal";
    return std::string(name) + ":" + format_value(prep.value);
}

void Scenario::validate() const {
    if (steps < 2) throw std::invalid_argument("steps must be at least 2");
    if (!(resolved_tau_max() > 0.0)) throw std::invalid_argument("tau-max must be > 0");
    if (!(ratio > 0.0)) throw std::invalid_argument("coupling ratio must be > 0");
    if (!(delta_over_g1 > 0.0)) throw std::invalid_argument("delta/g1 must be > 0");
    if (!(epsilon > 0.0) || !(epsilon < 1.0))
        throw std::invalid_argument("epsilon must lie in (0, 1)");
    if (observables.empty()) throw std::invalid_argument("at least one observable is required");

    const bool entanglement =
        wants(*this, ObservableKind::negativity) || wants(*this, ObservableKind::linear_entropy);
    if (model == ModelKind::quantum) {
        if (entanglement) {
            if (mode1.kind != FieldKind::fock || mode2.kind != FieldKind::coherent)
                throw std::invalid_argument(
                    "negativity and linear-entropy need mode1=fock:<N> and mode2=coherent:<nbar>: "
                    "the closed-form reduced atom-mode1 state only exists for that preparation");
            if (mode1.value < 1.0)
                throw std::invalid_argument(
                    "negativity and linear-entropy need mode1=fock:<N> with N >= 1: the "
                    "|2;N-1> branch does not exist for N = 0");
        }
    } else {
        if (mode1.kind != FieldKind::fock)
            throw std::invalid_argument("the semiclassical model is evaluated for mode1=fock:<N>");
        if (wants(*this, ObservableKind::linear_entropy))
            throw std::invalid_argument("linear-entropy is not available in the semiclassical model");
        if (wants(*this, ObservableKind::negativity) && mode1.value < 1.0)
            throw std::invalid_argument("semiclassical negativity needs mode1=fock:<N> with N >= 1");
    }
}

double Scenario::rephasing_time() const {
    if (model == ModelKind::semiclassical)
        return semiclassical::period(static_cast<int>(mode1.value), ratio);
    // Inversion frequencies step by 1/delta along n1 and by r^2/delta along
    // n2 (scaled units). For a Fock mode 1 only the n2 ladder is populated.
    const double base = 2.0 * std::numbers::pi * delta_over_g1;
    return mode1.kind == FieldKind::fock ? base / (ratio * ratio) : base;
}

double Scenario::resolved_tau_max() const {
    if (tau_max > 0.0) return tau_max;
    return (model == ModelKind::quantum ? 2.5 : 3.0) * rephasing_time();
}

ModelParams Scenario::params() const { return ModelParams::from_ratio(ratio, delta_over_g1); }

std::vector<std::pair<std::string, std::string>> Scenario::metadata() const {
    std::string obs;
    for (const ObservableKind kind : observables) {
        if (!obs.empty()) obs += ',';
        obs += to_string(kind);
    }
    return {
        {"model", to_string(model)},
        {"mode1", to_string(mode1)},
        {"mode2", model == ModelKind::semiclassical ? "classical" : to_string(mode2)},
        {"r", format_value(ratio)},
        {"delta_over_g1", format_value(delta_over_g1)},
        {"observables", obs},
        {"tau_max", format_value(resolved_tau_max())},
        {"steps", std::to_string(steps)},
        {"epsilon", format_value(epsilon)},
    };
}

const std::vector<double>* TimeSeries::column(std::string_view label) const {
    for (const auto& [name, values] : columns)
        if (name == label) return &values;
    return nullptr;
}

TimeSeries run_scenario(const Scenario& scenario) {
    scenario.validate();

    TimeSeries out;
    const int steps = scenario.steps;
    const double tau_max = scenario.resolved_tau_max();
    out.tau.resize(static_cast<std::size_t>(steps));
    for (int i = 0; i < steps; ++i) out.tau[i] = tau_max * i / (steps - 1);

    // Requested order, first occurrence wins.
    std::vector<ObservableKind> wanted;
    for (const ObservableKind kind : scenario.observables)
        if (std::find(wanted.begin(), wanted.end(), kind) == wanted.end()) wanted.push_back(kind);

    if (scenario.model == ModelKind::quantum) {
        const ModelParams params = scenario.params();
        const int fock_n = static_cast<int>(scenario.mode1.value);
        const double nbar2 = scenario.mode2.value;
        for (const ObservableKind kind : wanted) {
            switch (kind) {
                case ObservableKind::inversion: {
                    const PhotonDistribution d1 = scenario.mode1.distribution(scenario.epsilon);
                    const PhotonDistribution d2 = scenario.mode2.distribution(scenario.epsilon);
                    out.columns.emplace_back(to_string(kind),
                                             inversion_series(d1, d2, params, out.tau));
                    break;
                }
                case ObservableKind::negativity:
                    out.columns.emplace_back(
                        to_string(kind),
                        negativity_series(fock_n, nbar2, params, out.tau, scenario.epsilon));
                    break;
                case ObservableKind::linear_entropy:
                    out.columns.emplace_back(
                        to_string(kind),
                        linear_entropy_series(fock_n, nbar2, params, out.tau, scenario.epsilon));
                    break;
            }
        }
    } else {
        const int fock_n = static_cast<int>(scenario.mode1.value);
        std::vector<double> inv(out.tau.size()), neg(out.tau.size());
        for (std::size_t i = 0; i < out.tau.size(); ++i) {
            const semiclassical::Point p =
                semiclassical::evaluate(fock_n, scenario.ratio, out.tau[i]);
            inv[i] = p.inversion;
            neg[i] = p.negativity;
        }
        for (const ObservableKind kind : wanted) {
            if (kind == ObservableKind::inversion)
                out.columns.emplace_back(to_string(kind), inv);
            else if (kind == ObservableKind::negativity)
                out.columns.emplace_back(to_string(kind), neg);
        }
    }
    return out;
}

Scenario preset_scenario(std::string_view name) {
    Scenario s;
    if (name == "fig1a") {
        s.mode1 = {FieldKind::coherent, 10.5};
        s.mode2 = {FieldKind::coherent, 10.1};
        s.ratio = 1.012;
    } else if (name == "fig1b") {
        s.mode1 = {FieldKind::coherent, 10.5};
        s.mode2 = {FieldKind::thermal, 10.1};
        s.ratio = 1.012;
    } else if (name == "fig2") {
        s.mode1 = {FieldKind::fock, 5.0};
        s.mode2 = {FieldKind::coherent, 5.0};
        s.ratio = 1.023;
    } else if (name == "fig3a") {
        s.mode1 = {FieldKind::fock, 5.0};
        s.mode2 = {FieldKind::coherent, 5.0};
        s.ratio = 1.023;
        s.observables = {ObservableKind::negativity};
    } else if (name == "fig3b") {
        s.mode1 = {FieldKind::fock, 5.0};
        s.mode2 = {FieldKind::coherent, 5.0};
        s.ratio = 1.023;
        s.observables = {ObservableKind::linear_entropy};
    } else if (name == "fig4") {
        s.model = ModelKind::semiclassical;
        s.mode1 = {FieldKind::fock, 2.0};
        s.ratio = 1.41;
        s.observables = {ObservableKind::inversion, ObservableKind::negativity};
    } else {
        throw std::invalid_argument("unknown preset '" + std::string(name) + "'");
    }
    return s;
}

std::vector<std::string> preset_names() {
    return {"fig1a", "fig1b", "fig2", "fig3a", "fig3b", "fig4"};
}

}  // namespace ramansim
