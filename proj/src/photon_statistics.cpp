#include "ramansim/photon_statistics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ramansim {

namespace {

void check_tolerance(double epsilon) {
    if (!(epsilon > 0.0) || !(epsilon < 1.0))
        throw std::invalid_argument("truncation tolerance must lie in (0, 1)");
}

void check_mean(double nbar) {
    if (!(nbar >= 0.0)) throw std::invalid_argument("mean photon number must be >= 0");
}

}  // namespace

double PhotonDistribution::weight_sum() const {
    double s = 0.0;
    for (double p : weights) s += p;
    return s;
}

double PhotonDistribution::mean_occupation() const {
    double s = 0.0;
    for (int n = 0; n < static_cast<int>(weights.size()); ++n) s += n * weights[n];
    return s;
}

PhotonDistribution fock_dist(int photons) {
    if (photons < 0) throw std::invalid_argument("Fock photon number must be >= 0");
    std::vector<double> w(static_cast<std::size_t>(photons) + 1, 0.0);
    w.back() = 1.0;
    return {FieldKind::fock, static_cast<double>(photons), std::move(w), 0.0};
}

PhotonDistribution coherent_dist(double nbar, double epsilon) {
    check_mean(nbar);
    check_tolerance(epsilon);
    // Forward recurrence p_{n+1} = p_n * nbar / (n+1); no factorials, stable
    // for nbar up to at least 1e4. The Poisson tail decays super-exponentially
    // past the mean, so the cap is unreachable for any sane tolerance.
    const int cap = static_cast<int>(nbar + 20.0 * std::sqrt(nbar + 1.0) + 30.0);
    std::vector<double> w;
    w.reserve(static_cast<std::size_t>(cap) + 1);
    double p = std::exp(-nbar);
    double sum = p;
    w.push_back(p);
    int n = 0;
    while (1.0 - sum >= epsilon && n < cap) {
        ++n;
        p *= nbar / n;
        sum += p;
        w.push_back(p);
    }
    return {FieldKind::coherent, nbar, std::move(w), std::max(0.0, 1.0 - sum)};
}

PhotonDistribution thermal_dist(double nbar, double epsilon) {
    check_mean(nbar);
    check_tolerance(epsilon);
    if (nbar == 0.0) return {FieldKind::thermal, 0.0, {1.0}, 0.0};
    // Omitted mass after n_max is exactly q^{n_max+1} with q = nbar/(nbar+1).
    const double q = nbar / (nbar + 1.0);
    int m = std::max(1, static_cast<int>(std::ceil(std::log(epsilon) / std::log(q))));
    while (std::pow(q, m) >= epsilon) ++m;
    while (m > 1 && std::pow(q, m - 1) < epsilon) --m;
    std::vector<double> w(static_cast<std::size_t>(m));
    double p = 1.0 / (nbar + 1.0);
    for (int n = 0; n < m; ++n) {
        w[static_cast<std::size_t>(n)] = p;
        p *= q;
    }
    return {FieldKind::thermal, nbar, std::move(w), std::pow(q, m)};
}

}  // namespace ramansim
