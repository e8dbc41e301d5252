#include "ramansim/semiclassical.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ramansim::semiclassical {

namespace {

void check_ratio(double ratio) {
    if (!(ratio > 0.0)) throw std::invalid_argument("drive ratio r' must be > 0");
}

}  // namespace

void Params::validate() const {
    if (!(g > 0.0)) throw std::invalid_argument("coupling g must be > 0");
    if (!(delta > 0.0)) throw std::invalid_argument("detuning delta must be > 0");
    if (!(drive >= 0.0)) throw std::invalid_argument("drive amplitude must be >= 0");
}

double period(int fock_n, double ratio) {
    check_ratio(ratio);
    if (fock_n < 0) throw std::invalid_argument("photon number must be >= 0");
    return 2.0 * std::numbers::pi * ratio / (fock_n + ratio * ratio);
}

Point evaluate(int fock_n, double ratio, double tau) {
    check_ratio(ratio);
    if (fock_n < 0) throw std::invalid_argument("photon number must be >= 0");
    const double nn = static_cast<double>(fock_n);
    const double denom = nn + ratio * ratio;
    const double theta = denom / (2.0 * ratio) * tau;
    const double q = 4.0 * ratio * ratio * nn / (denom * denom);
    const double s2 = std::sin(theta) * std::sin(theta);

    Point out;
    out.inversion = std::clamp(2.0 * q * s2 - 1.0, -1.0, 1.0);

    // radicand = sin^2 - q sin^4 >= 0 since q <= 1; anything below the
    // rounding floor means the formula itself went wrong.
    double radicand = s2 - q * s2 * s2;
    if (radicand < 0.0) {
        if (radicand < -1e-15)
            throw std::logic_error("semiclassical negativity radicand fell below -1e-15");
        radicand = 0.0;
    }
    const double prefactor = 2.0 * ratio * std::sqrt(nn) / denom;
    out.negativity = std::min(prefactor * std::sqrt(radicand), 0.5);
    return out;
}

double inversion(int fock_n, double ratio, double tau) {
    return evaluate(fock_n, ratio, tau).inversion;
}

double negativity(int fock_n, double ratio, double tau) {
    if (fock_n < 1)
        throw std::invalid_argument(
            "mode 1 must hold at least one photon for the two-branch negativity");
    return evaluate(fock_n, ratio, tau).negativity;
}

}  // namespace ramansim::semiclassical
