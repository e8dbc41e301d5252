#pragma once

namespace ramansim {

// Couplings and frequencies of the two-mode Raman model. Everything is quoted
// in units of g1 and time is the scaled tau = g1 * t, so the usual setup is
// g1 = 1 with g2 = r. The mode frequencies default to the interaction-picture
// choice omega1 = omega2 = 0; they only enter free-evolution phases.
struct ModelParams {
    double g1 = 1.0;
    double g2 = 1.0;
    double delta = 10.0;   // detuning of the eliminated upper level
    double omega1 = 0.0;
    double omega2 = 0.0;

    double ratio() const { return g2 / g1; }             // r = g2/g1
    double delta_over_g1() const { return delta / g1; }

    // The effective two-level model assumes g/delta << 1; callers should warn
    // (not fail) outside this regime.
    bool dispersive_ok() const { return g1 <= 0.2 * delta && g2 <= 0.2 * delta; }

    void validate() const;  // throws std::invalid_argument on g1,g2,delta <= 0

    static ModelParams from_ratio(double r, double delta_over_g1 = 10.0);
};

}  // namespace ramansim
