#pragma once

#include <vector>

namespace ramansim {

enum class FieldKind { fock, coherent, thermal };

// Default truncation tolerance for the field distributions. Observables are
// second order in the weights, so a 1e-12 tail keeps them accurate to ~1e-9.
inline constexpr double kDefaultTailEpsilon = 1e-12;

// Photon-number distribution p_0..p_{n_max} of one field mode, truncated so
// that the omitted mass is below a requested tolerance (exactly zero for Fock).
struct PhotonDistribution {
    FieldKind kind = FieldKind::fock;
    double mean = 0.0;             // N for Fock, n-bar otherwise
    std::vector<double> weights;   // p_0 .. p_{n_max}
    double tail_bound = 0.0;       // guaranteed bound on the omitted mass

    int n_max() const { return static_cast<int>(weights.size()) - 1; }
    double weight(int n) const {
        return (n >= 0 && n < static_cast<int>(weights.size())) ? weights[n] : 0.0;
    }
    double weight_sum() const;
    double mean_occupation() const;  // sum n * p_n over the kept range
};

// Point mass at |N>.
PhotonDistribution fock_dist(int photons);

// Poisson weights p_n = e^{-nbar} nbar^n / n!, cut at the smallest n_max whose
// omitted tail is below epsilon.
PhotonDistribution coherent_dist(double nbar, double epsilon = kDefaultTailEpsilon);

// Geometric weights p_n = nbar^n / (nbar+1)^{n+1}; the omitted tail has the
// closed form (nbar/(nbar+1))^{n_max+1}.
PhotonDistribution thermal_dist(double nbar, double epsilon = kDefaultTailEpsilon);

}  // namespace ramansim
