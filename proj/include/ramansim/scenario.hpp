#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ramansim/model.hpp"
#include "ramansim/photon_statistics.hpp"

namespace ramansim {

enum class ModelKind { quantum, semiclassical };

enum class ObservableKind { inversion, negativity, linear_entropy };

const char* to_string(ModelKind kind);
const char* to_string(ObservableKind kind);
ModelKind parse_model(std::string_view text);
ObservableKind parse_observable(std::string_view text);

// One mode preparation, e.g. "fock:5", "coherent:10.5", "thermal:10.1".
struct PrepSpec {
    FieldKind kind = FieldKind::fock;
    double value = 0.0;  // photon number for Fock, n-bar otherwise

    PhotonDistribution distribution(double epsilon) const;
};
PrepSpec parse_prep(std::string_view text);
std::string to_string(const PrepSpec& prep);

// Full description of one run: model, preparations, couplings, grid.
struct Scenario {
    ModelKind model = ModelKind::quantum;
    PrepSpec mode1{FieldKind::fock, 1.0};
    PrepSpec mode2{FieldKind::coherent, 0.0};
    double ratio = 1.0;  // r = g2/g1, or r' = |Omega_L|/g for the classical drive
    double delta_over_g1 = 10.0;
    std::vector<ObservableKind> observables{ObservableKind::inversion};
    double tau_max = 0.0;  // <= 0 picks the default span below
    int steps = 4000;
    double epsilon = kDefaultTailEpsilon;

    void validate() const;  // throws std::invalid_argument naming the violated constraint

    // Envelope rephasing period of the inversion (exact period of the
    // classical-drive observables). Default span: 2.5 periods for the quantum
    // model, 3 for the classical drive.
    double rephasing_time() const;
    double resolved_tau_max() const;

    ModelParams params() const;  // g1 = 1, g2 = ratio, delta = delta_over_g1

    std::vector<std::pair<std::string, std::string>> metadata() const;
};

// Uniform grid of observable samples; tau[0] = 0 always.
struct TimeSeries {
    std::vector<double> tau;
    std::vector<std::pair<std::string, std::vector<double>>> columns;

    const std::vector<double>* column(std::string_view label) const;
};

TimeSeries run_scenario(const Scenario& scenario);

// Named parameter sets used throughout: fig1a, fig1b, fig2, fig3a, fig3b, fig4.
Scenario preset_scenario(std::string_view name);
std::vector<std::string> preset_names();

}  // namespace ramansim
