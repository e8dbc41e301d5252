#include "ramansim/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "ramansim/analytic.hpp"
#include "ramansim/oracle.hpp"

namespace ramansim {

namespace {

std::vector<oracle::complexd> pure_amplitudes(const PhotonDistribution& dist) {
    // Fock and coherent preparations are pure with real non-negative
    // amplitudes sqrt(p_n); thermal preparations are mixed and handled as
    // weighted Fock components instead.
    std::vector<oracle::complexd> amps(dist.weights.size());
    for (std::size_t n = 0; n < dist.weights.size(); ++n)
        amps[n] = std::sqrt(dist.weights[n]);
    return amps;
}

}  // namespace

bool VerifyReport::ok() const { return worst() <= tolerance; }

double VerifyReport::worst() const {
    double w = 0.0;
    for (const Entry& e : entries) w = std::max(w, e.max_abs_deviation);
    return w;
}

VerifyReport verify_scenario(const Scenario& scenario, int n1_max_override,
                             int n2_max_override) {
    scenario.validate();
    if (scenario.model != ModelKind::quantum)
        throw std::invalid_argument("verification covers the quantum model only");

    const PhotonDistribution dist1 = scenario.mode1.distribution(scenario.epsilon);
    const PhotonDistribution dist2 = scenario.mode2.distribution(scenario.epsilon);

    VerifyReport report;
    // The doublet structure moves at most one quantum: n1 never grows and n2
    // grows by exactly one, so a small margin keeps the boundary layers empty.
    report.n1_max = n1_max_override > 0 ? n1_max_override : dist1.n_max() + 2;
    report.n2_max = n2_max_override > 0 ? n2_max_override : dist2.n_max() + 3;

    const ModelParams params = scenario.params();
    const oracle::BlockDecomposition blocks =
        oracle::build_blocks(params, report.n1_max, report.n2_max);

    const TimeSeries analytic = run_scenario(scenario);
    const bool pure = dist1.kind != FieldKind::thermal && dist2.kind != FieldKind::thermal;
    const bool want_entanglement =
        analytic.column("negativity") != nullptr || analytic.column("linear-entropy") != nullptr;

    std::vector<double> brute_inversion(analytic.tau.size(), 0.0);
    std::vector<double> brute_negativity, brute_linear_entropy;
    if (analytic.column("negativity")) brute_negativity.resize(analytic.tau.size());
    if (analytic.column("linear-entropy")) brute_linear_entropy.resize(analytic.tau.size());

    if (pure) {
        const std::vector<oracle::complexd> a1 = pure_amplitudes(dist1);
        const std::vector<oracle::complexd> a2 = pure_amplitudes(dist2);
        const oracle::TruncatedState initial =
            oracle::TruncatedState::product(a1, a2, report.n1_max, report.n2_max);
        const int keep_atom_mode1[2] = {0, 1};
        const int keep_atom[1] = {0};
        for (std::size_t i = 0; i < analytic.tau.size(); ++i) {
            const oracle::TruncatedState evolved =
                oracle::evolve_state(initial, blocks, analytic.tau[i]);
            brute_inversion[i] = 2.0 * evolved.level2_population() - 1.0;
            if (want_entanglement) {
                if (!brute_negativity.empty()) {
                    const oracle::DensityMatrix reduced =
                        oracle::partial_trace(evolved, keep_atom_mode1);
                    brute_negativity[i] = oracle::pt_negativity(reduced, 0);
                }
                if (!brute_linear_entropy.empty()) {
                    const oracle::DensityMatrix atom = oracle::partial_trace(evolved, keep_atom);
                    brute_linear_entropy[i] = oracle::matrix_linear_entropy(atom);
                }
            }
        }
    } else {
        // Mixed product preparation: the inversion only sees the diagonal
        // weights, so sum doublet flip probabilities instead of evolving each
        // Fock component. Scenario validation already restricts the
        // entanglement observables to the pure Fock x coherent case.
        for (std::size_t i = 0; i < analytic.tau.size(); ++i) {
            const double tau = analytic.tau[i];
            double level2 = 0.0;
            for (int n1 = 1; n1 <= dist1.n_max(); ++n1) {
                const double p1 = dist1.weights[n1];
                if (p1 == 0.0) continue;
                for (int n2 = 0; n2 <= dist2.n_max(); ++n2) {
                    const double p2 = dist2.weights[n2];
                    if (p2 == 0.0) continue;
                    level2 += p1 * p2 * oracle::flip_probability(blocks, n1, n2, tau);
                }
            }
            brute_inversion[i] = 2.0 * level2 - 1.0;
        }
    }

    const auto compare = [&](const char* label, const std::vector<double>& brute) {
        const std::vector<double>* column = analytic.column(label);
        if (!column || brute.empty()) return;
        double dev = 0.0;
        for (std::size_t i = 0; i < brute.size(); ++i)
            dev = std::max(dev, std::abs(brute[i] - (*column)[i]));
        report.entries.push_back({label, dev});
    };
    compare("inversion", brute_inversion);
    compare("negativity", brute_negativity);
    compare("linear-entropy", brute_linear_entropy);
    return report;
}

}  // namespace ramansim
