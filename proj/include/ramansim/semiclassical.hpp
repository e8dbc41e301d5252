#pragma once

namespace ramansim::semiclassical {

// Classical-drive replacement for mode 2: quantum coupling g, drive amplitude
// |Omega_L| and detuning delta. The observables below only depend on the
// ratio r' = |Omega_L|/g once time is scaled to tau' = g|Omega_L| t / delta.
struct Params {
    double g = 1.0;
    double drive = 1.0;   // |Omega_L|
    double delta = 10.0;

    double ratio() const { return drive / g; }                        // r'
    double effective_coupling() const { return g * drive / delta; }   // lambda
    void validate() const;
};

// Exact period of both observables in scaled time: 2*pi*r'/(N + r'^2).
double period(int fock_n, double ratio);

// Inversion and negativity share the same Rabi angle and excitation
// probability, which keeps their pure-state relation exact in floating point.
struct Point {
    double inversion;
    double negativity;
};
Point evaluate(int fock_n, double ratio, double tau);

// W'(tau') = 8 r'^2 N / (N + r'^2)^2 * sin^2[(N + r'^2) tau' / (2 r')] - 1.
// The squared denominator is required for |W'| <= 1 (it is the single-term
// limit of the fully quantized inversion) and gives complete inversion at
// r'^2 = N.
double inversion(int fock_n, double ratio, double tau);

// Negativity of the pure two-branch state; equals sqrt(p(1-p)) with
// p = (W'+1)/2, so it vanishes exactly when the inversion is complete.
double negativity(int fock_n, double ratio, double tau);

}  // namespace ramansim::semiclassical
